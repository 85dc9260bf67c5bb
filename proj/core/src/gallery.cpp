#include "toricfan/gallery.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "toricfan/charts.hpp"
#include "toricfan/error.hpp"
#include "toricfan/sampling.hpp"
#include "toricfan/validity.hpp"

namespace toricfan {

namespace {

constexpr int kMaxCpn = 16;
constexpr int kPerturbAttempts = 256;

Cocharacter standard_ray(const IntVector& v) {
  return Cocharacter{to_rational(v), RatVector(v.size(), Rational(0)), v};
}

void combinations(int m, int k, int start, Simplex& current, std::vector<Simplex>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (int i = start; i < m; ++i) {
    current.push_back(i);
    combinations(m, k, i + 1, current, out);
    current.pop_back();
  }
}

bool has_conjugate_factor(const TopologicalFan& fan) {
  for (const Simplex& i : fan.maximal_simplices) {
    for (const Simplex& j : fan.maximal_simplices) {
      const TransitionMap t = transition(fan, i, j);
      if (!t.laurent) return false;
      for (const auto& row : *t.laurent) {
        for (const LaurentExponent& e : row) {
          if (e.q != 0) return true;
        }
      }
    }
  }
  return false;
}

bool is_nice_nontoric_candidate(const TopologicalFan& fan) {
  if (!validate(fan).valid()) return false;
  const Classification cls = classify(fan);
  if (!cls.nice || cls.toric) return false;
  const std::vector<ChartRecord> charts = atlas(fan);
  const bool all_real = std::all_of(charts.begin(), charts.end(), [](const ChartRecord& c) { return c.real_algebraic; });
  const bool some_not_algebraic =
      std::any_of(charts.begin(), charts.end(), [](const ChartRecord& c) { return !c.algebraic; });
  return all_real && some_not_algebraic && has_conjugate_factor(fan);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

long parse_small_int(std::string_view text, std::string_view name) {
  text = trim(text);
  long value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidParam, std::string(name) + ": expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_seed(std::string_view text) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidParam, "perturbed: seed must be a non-negative integer");
  }
  return value;
}

}  // namespace

TopologicalFan cpn(int n) {
  if (n < 1 || n > kMaxCpn) {
    throw Error(ErrorCode::InvalidParam, "cpn: n must be in [1, " + std::to_string(kMaxCpn) + "]");
  }
  TopologicalFan fan;
  fan.dimension = n;
  for (int i = 0; i < n; ++i) {
    IntVector e(static_cast<std::size_t>(n), Integer(0));
    e[static_cast<std::size_t>(i)] = 1;
    fan.beta.push_back(standard_ray(e));
  }
  fan.beta.push_back(standard_ray(IntVector(static_cast<std::size_t>(n), Integer(-1))));
  Simplex current;
  combinations(n + 1, n, 0, current, fan.maximal_simplices);
  return fan;
}

TopologicalFan hirzebruch(const Integer& a) {
  TopologicalFan fan;
  fan.dimension = 2;
  for (const IntVector& v : {IntVector{1, 0}, IntVector{0, 1}, IntVector{-1, a}, IntVector{0, -1}}) {
    fan.beta.push_back(standard_ray(v));
  }
  fan.maximal_simplices = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  return fan;
}

TopologicalFan nice_nontoric() {
  const TopologicalFan base = cpn(2);
  std::vector<IntVector> offsets;
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      if (a != 0 || b != 0) offsets.push_back(IntVector{a, b});
    }
  }
  std::stable_sort(offsets.begin(), offsets.end(), [](const IntVector& x, const IntVector& y) {
    return abs(x[0]) + abs(x[1]) < abs(y[0]) + abs(y[1]);
  });
  for (const IntVector& k : offsets) {
    for (std::size_t r = 0; r < base.beta.size(); ++r) {
      TopologicalFan fan = base;
      for (std::size_t d = 0; d < 2; ++d) fan.beta[r].v[d] += 2 * k[d];
      if (is_nice_nontoric_candidate(fan)) return fan;
    }
  }
  throw Error(ErrorCode::PerturbationFailed, "no nice non-toric candidate found");
}

TopologicalFan perturbed(const TopologicalFan& base, std::uint64_t seed) {
  check_shape(base);
  SeededRng rng(mix_seed(seed, 0x7065727475726264ULL));
  const auto n = static_cast<std::size_t>(base.dimension);
  for (int attempt = 0; attempt < kPerturbAttempts; ++attempt) {
    TopologicalFan fan = base;
    bool any_c = false;
    for (Cocharacter& beta : fan.beta) {
      const Rational scale(Rational(2 + rng.uniform_int(0, 4), 2));
      for (std::size_t d = 0; d < n; ++d) {
        const Rational noise(rng.uniform_int(-2, 2), static_cast<unsigned long>(rng.uniform_int(6, 9)));
        beta.b[d] = Rational((beta.b[d] + noise) * scale);
        beta.b[d].canonicalize();
        Rational c(rng.uniform_int(-3, 3), static_cast<unsigned long>(rng.uniform_int(1, 4)));
        c.canonicalize();
        beta.c[d] = c;
        any_c = any_c || c != 0;
      }
    }
    if (!any_c) fan.beta[0].c[0] = Rational(1, 2);
    if (is_zero(fan.beta[0].b)) continue;
    bool zero_b = false;
    for (const Cocharacter& beta : fan.beta) zero_b = zero_b || is_zero(beta.b);
    if (zero_b) continue;
    if (validate(fan).valid()) return fan;
  }
  throw Error(ErrorCode::PerturbationFailed, "no valid perturbation found for seed " + std::to_string(seed));
}

TopologicalFan gallery(std::string_view name) {
  name = trim(name);
  const auto open = name.find('(');
  const std::string_view head = trim(name.substr(0, open));
  std::string_view args;
  if (open != std::string_view::npos) {
    if (name.back() != ')') throw Error(ErrorCode::UnknownGallery, "malformed gallery name '" + std::string(name) + "'");
    args = name.substr(open + 1, name.size() - open - 2);
  }
  const bool has_args = open != std::string_view::npos;

  if (!has_args && head == "cp1") return cpn(1);
  if (!has_args && head == "cp2") return cpn(2);
  if (!has_args && head == "nice_nontoric") return nice_nontoric();
  if (has_args && head == "cpn") {
    const long n = parse_small_int(args, "cpn");
    if (n < 1 || n > kMaxCpn) throw Error(ErrorCode::InvalidParam, "cpn: n must be in [1, " + std::to_string(kMaxCpn) + "]");
    return cpn(static_cast<int>(n));
  }
  if (has_args && head == "hirzebruch") {
    try {
      return hirzebruch(parse_integer(trim(args)));
    } catch (const Error&) {
      throw Error(ErrorCode::InvalidParam, "hirzebruch: expected an integer, got '" + std::string(args) + "'");
    }
  }
  if (has_args && head == "perturbed") {
    int depth = 0;
    std::size_t split = std::string_view::npos;
    for (std::size_t k = 0; k < args.size(); ++k) {
      if (args[k] == '(') ++depth;
      if (args[k] == ')') --depth;
      if (args[k] == ',' && depth == 0) split = k;
    }
    if (split == std::string_view::npos) throw Error(ErrorCode::InvalidParam, "perturbed: expected (base, seed)");
    return perturbed(gallery(args.substr(0, split)), parse_seed(args.substr(split + 1)));
  }
  throw Error(ErrorCode::UnknownGallery, "unknown gallery fan '" + std::string(name) + "'");
}

std::vector<std::string> gallery_catalog() {
  return {"cp1", "cp2", "cpn(3)", "hirzebruch(0)", "hirzebruch(1)", "hirzebruch(2)", "nice_nontoric",
          "perturbed(cp2,1)", "perturbed(hirzebruch(1),7)"};
}

}  // namespace toricfan
