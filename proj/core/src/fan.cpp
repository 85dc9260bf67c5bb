#include "toricfan/fan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "toricfan/error.hpp"
#include "toricfan/sampling.hpp"

namespace toricfan {

std::string format_simplex(const Simplex& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(s[k] + 1);
  }
  return out + "}";
}

int TopologicalFan::find_simplex(const Simplex& s) const {
  for (std::size_t k = 0; k < maximal_simplices.size(); ++k) {
    if (maximal_simplices[k] == s) return static_cast<int>(k);
  }
  return -1;
}

void check_shape(const TopologicalFan& fan) {
  if (fan.dimension <= 0) throw Error(ErrorCode::InvalidParam, "dimension must be positive");
  if (fan.beta.empty()) throw Error(ErrorCode::InvalidParam, "fan has no rays");
  if (fan.maximal_simplices.empty()) throw Error(ErrorCode::InvalidParam, "fan has no maximal simplices");
  const auto n = static_cast<std::size_t>(fan.dimension);
  for (std::size_t i = 0; i < fan.beta.size(); ++i) {
    const Cocharacter& beta = fan.beta[i];
    if (beta.b.size() != n || beta.c.size() != n || beta.v.size() != n) {
      throw Error(ErrorCode::InvalidParam,
                  "ray " + std::to_string(i + 1) + ": b, c, v must have length " + std::to_string(n));
    }
    if (is_zero(beta.b)) throw Error(ErrorCode::InvalidParam, "ray " + std::to_string(i + 1) + ": b is zero");
  }
  for (const Simplex& s : fan.maximal_simplices) {
    if (s.empty()) throw Error(ErrorCode::InvalidParam, "empty maximal simplex");
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error(ErrorCode::InvalidParam, "simplex " + format_simplex(s) + " must be strictly increasing");
    }
    if (s.front() < 0 || static_cast<std::size_t>(s.back()) >= fan.beta.size()) {
      throw Error(ErrorCode::InvalidParam, "simplex " + format_simplex(s) + " references a missing ray");
    }
  }
}

RatMatrix b_matrix(const TopologicalFan& fan, const Simplex& simplex) {
  std::vector<RatVector> cols;
  for (int i : simplex) cols.push_back(fan.beta.at(static_cast<std::size_t>(i)).b);
  return from_columns(cols);
}

RatMatrix c_matrix(const TopologicalFan& fan, const Simplex& simplex) {
  std::vector<RatVector> cols;
  for (int i : simplex) cols.push_back(fan.beta.at(static_cast<std::size_t>(i)).c);
  return from_columns(cols);
}

IntMatrix v_matrix(const TopologicalFan& fan, const Simplex& simplex) {
  std::vector<IntVector> cols;
  for (int i : simplex) cols.push_back(fan.beta.at(static_cast<std::size_t>(i)).v);
  return from_columns(cols);
}

TopologicalFan with_beta(const TopologicalFan& fan, std::vector<Cocharacter> beta) {
  TopologicalFan out = fan;
  out.beta = std::move(beta);
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finaliser over (seed, stream)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t SeededRng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % span);
}

double SeededRng::uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Complex SeededRng::unit_scale_complex() {
  const double modulus = 0.5 + 1.5 * uniform_real();
  const double phase = std::numbers::pi * (2.0 * uniform_real() - 1.0);
  return std::polar(modulus, phase);
}

std::vector<Complex> SeededRng::unit_scale_point(std::size_t length) {
  std::vector<Complex> z;
  z.reserve(length);
  for (std::size_t k = 0; k < length; ++k) z.push_back(unit_scale_complex());
  return z;
}

}  // namespace toricfan
