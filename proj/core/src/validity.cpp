#include "toricfan/validity.hpp"

#include <algorithm>
#include <map>

#include "toricfan/feasibility.hpp"
#include "toricfan/sampling.hpp"

namespace toricfan {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "skipped";
}

std::string_view to_string(CertificateKind kind) {
  return kind == CertificateKind::Exact ? "exact" : "sampled";
}

bool ValidityReport::valid() const {
  return combinatorics.purity == CheckStatus::Pass && nonsingular.status == CheckStatus::Pass &&
         proper.status == CheckStatus::Pass && complete.status == CheckStatus::Pass;
}

namespace {

std::string format_vector(const RatVector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += to_string(v[k]);
  }
  return out + ")";
}

// Inverse of B_I for every maximal simplex, or nullopt where singular.
std::vector<std::optional<RatMatrix>> cone_inverses(const TopologicalFan& fan) {
  std::vector<std::optional<RatMatrix>> out;
  out.reserve(fan.maximal_simplices.size());
  for (const Simplex& s : fan.maximal_simplices) {
    const RatMatrix b = b_matrix(fan, s);
    out.push_back(b.rows() == b.cols() ? inverse(b) : std::nullopt);
  }
  return out;
}

bool nonnegative(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q >= 0; });
}

bool positive(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q > 0; });
}

bool contains(const RatMatrix& cone_inverse, const RatVector& direction) {
  return nonnegative(multiply(cone_inverse, direction));
}

// Looks for a point of cone I that lies in cone J but off their common face.
std::optional<RatVector> overlap_witness(const TopologicalFan& fan, const Simplex& first,
                                         const Simplex& second, const RatMatrix& second_inverse) {
  const std::size_t n = first.size();
  const RatMatrix gens = b_matrix(fan, first);
  const RatMatrix coords = multiply(second_inverse, gens);  // coordinates of b_i (i in I) in cone J

  auto assemble = [&](const Rational& floor_value, bool interior) {
    std::vector<LinearInequality> system;
    for (std::size_t i = 0; i < n; ++i) {
      RatVector e(n);
      e[i] = 1;
      system.push_back({e, interior ? floor_value : Rational(0)});
    }
    for (std::size_t j = 0; j < n; ++j) system.push_back({coords.row(j), interior ? floor_value : Rational(0)});
    return system;
  };

  // Interiors meeting gives the most legible witness.
  if (auto lambda = find_feasible_point(assemble(1, true), n)) return multiply(gens, *lambda);

  std::vector<LinearInequality> system = assemble(0, false);
  RatVector off_face(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::binary_search(second.begin(), second.end(), first[i])) off_face[i] = 1;
  }
  system.push_back({off_face, Rational(1)});
  if (auto lambda = find_feasible_point(system, n)) return multiply(gens, *lambda);
  return std::nullopt;
}

ProperCheck proper_sampled(const TopologicalFan& fan, const ProperOptions& options) {
  ProperCheck check;
  check.kind = CertificateKind::Sampled;
  check.seed = options.seed;
  check.samples = options.samples;
  const auto inverses = cone_inverses(fan);
  SeededRng rng(options.seed);
  const auto& simplices = fan.maximal_simplices;
  for (std::size_t p = 0; p < simplices.size(); ++p) {
    const RatMatrix gens = b_matrix(fan, simplices[p]);
    for (std::size_t q = 0; q < simplices.size(); ++q) {
      if (p == q) continue;
      for (std::size_t s = 0; s < options.samples; ++s) {
        RatVector lambda(gens.cols());
        for (Rational& l : lambda) l = Rational(rng.uniform_int(1, 1000));
        const RatVector point = multiply(gens, lambda);
        if (positive(multiply(*inverses[q], point))) {
          check.status = CheckStatus::Fail;
          check.witness = ConeOverlapWitness{simplices[p], simplices[q], point};
          return check;
        }
      }
    }
  }
  check.status = CheckStatus::Pass;
  return check;
}

// Sign-then-cross ordering of plane directions by angle in [0, 2pi).
bool angle_less(const RatVector& a, const RatVector& b) {
  auto half = [](const RatVector& d) { return (d[1] > 0 || (d[1] == 0 && d[0] > 0)) ? 0 : 1; };
  const int ha = half(a);
  const int hb = half(b);
  if (ha != hb) return ha < hb;
  return a[0] * b[1] - a[1] * b[0] > 0;
}

bool same_direction(const RatVector& a, const RatVector& b) {
  return a[0] * b[1] - a[1] * b[0] == 0 && a[0] * b[0] + a[1] * b[1] > 0;
}

CompleteCheck complete_line(const TopologicalFan& fan) {
  CompleteCheck check;
  bool has_positive = false;
  bool has_negative = false;
  for (const Simplex& s : fan.maximal_simplices) {
    if (s.size() != 1) continue;
    const Rational& b = fan.beta[static_cast<std::size_t>(s.front())].b[0];
    has_positive = has_positive || b > 0;
    has_negative = has_negative || b < 0;
  }
  if (has_positive && has_negative) {
    check.status = CheckStatus::Pass;
  } else {
    check.status = CheckStatus::Fail;
    check.uncovered = RatVector{Rational(has_positive ? -1 : 1)};
  }
  return check;
}

// Splits the circle at the ray directions and asks each open arc for a cone
// containing an interior point of it.
CompleteCheck complete_plane(const TopologicalFan& fan) {
  CompleteCheck check;
  const auto inverses = cone_inverses(fan);
  std::vector<RatVector> directions;
  for (const Cocharacter& beta : fan.beta) directions.push_back(beta.b);
  std::sort(directions.begin(), directions.end(), angle_less);
  directions.erase(std::unique(directions.begin(), directions.end(), same_direction), directions.end());

  auto covered = [&](const RatVector& d) {
    for (const auto& inv : inverses) {
      if (inv && contains(*inv, d)) return true;
    }
    return false;
  };

  for (std::size_t k = 0; k < directions.size(); ++k) {
    const RatVector& from = directions[k];
    const RatVector& to = directions[(k + 1) % directions.size()];
    const Rational cross = from[0] * to[1] - from[1] * to[0];
    RatVector probe;
    if (directions.size() > 1 && cross > 0) {
      probe = {Rational(from[0] + to[0]), Rational(from[1] + to[1])};
    } else {
      probe = {Rational(-from[1]), Rational(from[0])};
    }
    if (!covered(probe)) {
      check.status = CheckStatus::Fail;
      check.uncovered = probe;
      return check;
    }
  }
  check.status = CheckStatus::Pass;
  return check;
}

CompleteCheck complete_sampled(const TopologicalFan& fan, std::size_t samples, std::uint64_t seed) {
  CompleteCheck check;
  check.kind = CertificateKind::Sampled;
  check.seed = seed;
  check.samples = samples;
  const auto inverses = cone_inverses(fan);
  SeededRng rng(seed);
  const auto n = static_cast<std::size_t>(fan.dimension);
  constexpr std::int64_t kRange = 1000000;
  for (std::size_t s = 0; s < samples; ++s) {
    RatVector d(n);
    do {
      for (Rational& x : d) x = Rational(rng.uniform_int(-kRange, kRange));
    } while (is_zero(d));
    const bool covered = std::any_of(inverses.begin(), inverses.end(),
                                     [&](const auto& inv) { return inv && contains(*inv, d); });
    if (!covered) {
      check.status = CheckStatus::Fail;
      check.uncovered = d;
      return check;
    }
  }
  check.status = CheckStatus::Pass;
  return check;
}

}  // namespace

CombinatoricsCheck validate_combinatorics(const TopologicalFan& fan) {
  CombinatoricsCheck check;
  const auto n = static_cast<std::size_t>(fan.dimension);
  std::vector<bool> used(fan.ray_count(), false);
  for (std::size_t k = 0; k < fan.maximal_simplices.size(); ++k) {
    const Simplex& s = fan.maximal_simplices[k];
    if (s.size() != n) check.wrong_size.push_back(static_cast<int>(k));
    for (int i : s) used[static_cast<std::size_t>(i)] = true;
    for (std::size_t prev = 0; prev < k; ++prev) {
      if (fan.maximal_simplices[prev] == s) {
        check.duplicates.push_back(static_cast<int>(k));
        break;
      }
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) check.unused_rays.push_back(static_cast<int>(i));
  }
  const bool pure = check.wrong_size.empty() && check.unused_rays.empty() && check.duplicates.empty();
  check.purity = pure ? CheckStatus::Pass : CheckStatus::Fail;

  std::map<Simplex, std::size_t> ridges;
  for (const Simplex& s : fan.maximal_simplices) {
    if (s.size() != n) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex ridge;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k != drop) ridge.push_back(s[k]);
      }
      ++ridges[ridge];
    }
  }
  check.ridge_condition = !ridges.empty();
  for (const auto& [ridge, count] : ridges) {
    if (count != 2) {
      check.ridge_condition = false;
      check.ridge_witness = ridge;
      check.ridge_witness_count = count;
      break;
    }
  }
  return check;
}

NonsingularCheck check_nonsingular(const TopologicalFan& fan) {
  NonsingularCheck check;
  check.status = CheckStatus::Pass;
  for (const Simplex& s : fan.maximal_simplices) {
    SimplexDeterminants dets;
    dets.simplex = s;
    dets.det_v = determinant(v_matrix(fan, s));
    dets.det_b = determinant(b_matrix(fan, s));
    dets.pass = abs(dets.det_v) == 1 && dets.det_b != 0;
    if (!dets.pass) check.status = CheckStatus::Fail;
    check.simplices.push_back(std::move(dets));
  }
  return check;
}

ProperCheck check_fan_proper(const TopologicalFan& fan, const ProperOptions& options) {
  if (!options.exact || fan.dimension > 4) {
    ProperCheck check = proper_sampled(fan, options);
    check.dimension_fallback = options.exact;
    return check;
  }
  ProperCheck check;
  check.kind = CertificateKind::Exact;
  const auto inverses = cone_inverses(fan);
  const auto& simplices = fan.maximal_simplices;
  for (std::size_t p = 0; p < simplices.size(); ++p) {
    for (std::size_t q = p + 1; q < simplices.size(); ++q) {
      if (!inverses[q]) continue;
      if (auto witness = overlap_witness(fan, simplices[p], simplices[q], *inverses[q])) {
        check.status = CheckStatus::Fail;
        check.witness = ConeOverlapWitness{simplices[p], simplices[q], std::move(*witness)};
        return check;
      }
    }
  }
  check.status = CheckStatus::Pass;
  return check;
}

CompleteCheck check_complete(const TopologicalFan& fan, std::size_t samples, std::uint64_t seed,
                             CompletenessMode mode) {
  if (mode == CompletenessMode::Auto && fan.dimension == 1) return complete_line(fan);
  if (mode == CompletenessMode::Auto && fan.dimension == 2) return complete_plane(fan);
  return complete_sampled(fan, samples, seed);
}

ValidityReport validate(const TopologicalFan& fan, const ValidationOptions& options) {
  check_shape(fan);
  ValidityReport report;
  report.combinatorics = validate_combinatorics(fan);
  if (report.combinatorics.purity != CheckStatus::Pass) return report;
  report.nonsingular = check_nonsingular(fan);
  if (report.nonsingular.status != CheckStatus::Pass) return report;
  report.proper = check_fan_proper(fan, options.proper);
  if (report.proper.status != CheckStatus::Pass) return report;
  report.complete = check_complete(fan, options.completeness_samples, options.seed);
  return report;
}

std::string describe_failure(const ValidityReport& report) {
  const CombinatoricsCheck& comb = report.combinatorics;
  if (comb.purity != CheckStatus::Pass) {
    if (!comb.wrong_size.empty()) {
      return "purity: maximal simplex #" + std::to_string(comb.wrong_size.front() + 1) +
             " has the wrong size";
    }
    if (!comb.unused_rays.empty()) {
      return "purity: ray " + std::to_string(comb.unused_rays.front() + 1) + " lies in no maximal simplex";
    }
    if (!comb.duplicates.empty()) {
      return "purity: maximal simplex #" + std::to_string(comb.duplicates.front() + 1) + " is repeated";
    }
    return "purity: not checked";
  }
  if (report.nonsingular.status != CheckStatus::Pass) {
    for (const SimplexDeterminants& d : report.nonsingular.simplices) {
      if (!d.pass) {
        return "nonsingular: simplex " + format_simplex(d.simplex) + " has det V = " + to_string(d.det_v) +
               ", det B = " + to_string(d.det_b);
      }
    }
    return "nonsingular: not checked";
  }
  if (report.proper.status != CheckStatus::Pass) {
    if (report.proper.witness) {
      const ConeOverlapWitness& w = *report.proper.witness;
      return "fan_proper: cones " + format_simplex(w.first) + " and " + format_simplex(w.second) +
             " overlap outside their common face, witness direction " + format_vector(w.direction);
    }
    return "fan_proper: not checked";
  }
  if (report.complete.status != CheckStatus::Pass) {
    if (report.complete.uncovered) {
      return "complete: direction " + format_vector(*report.complete.uncovered) + " lies in no cone";
    }
    return "complete: not checked";
  }
  return "valid";
}

InvalidFanError::InvalidFanError(ValidityReport report)
    : Error(ErrorCode::InvalidFan, describe_failure(report)), report_(std::move(report)) {}

Classification classify(const TopologicalFan& fan) {
  Classification out;
  out.toric = true;
  out.nice = true;
  for (std::size_t i = 0; i < fan.ray_count(); ++i) {
    const Cocharacter& beta = fan.beta[i];
    RayFlags flags;
    flags.ray = static_cast<int>(i);
    flags.c_zero = is_zero(beta.c);
    flags.b_integral = std::all_of(beta.b.begin(), beta.b.end(), [](const Rational& q) { return is_integral(q); });
    flags.parity = flags.b_integral;
    flags.b_equals_v = beta.b == to_rational(beta.v);
    if (flags.b_integral) {
      for (std::size_t k = 0; k < beta.b.size(); ++k) {
        if (!is_even(Integer(beta.b[k].get_num() - beta.v[k]))) flags.parity = false;
      }
    }
    out.toric = out.toric && flags.b_equals_v && flags.c_zero;
    out.nice = out.nice && flags.c_zero && flags.b_integral && flags.parity;
    out.rays.push_back(flags);
  }
  return out;
}

bool cone_contains(const TopologicalFan& fan, const Simplex& simplex, const RatVector& direction) {
  const auto inv = inverse(b_matrix(fan, simplex));
  return inv && contains(*inv, direction);
}

}  // namespace toricfan
