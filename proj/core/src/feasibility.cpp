#include "toricfan/feasibility.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "toricfan/error.hpp"

namespace toricfan {

namespace {

using System = std::vector<LinearInequality>;

// Scales so the first nonzero coefficient has absolute value 1; keeps the
// direction of the inequality.
LinearInequality normalized(LinearInequality ineq) {
  for (const Rational& a : ineq.coeffs) {
    if (a == 0) continue;
    const Rational scale = abs(a);
    for (Rational& c : ineq.coeffs) c /= scale;
    ineq.bound /= scale;
    break;
  }
  return ineq;
}

// Drops tautologies and duplicates. Returns false if a contradiction 0 >= b > 0 appears.
bool simplify(System& system) {
  std::set<std::pair<RatVector, Rational>> seen;
  System kept;
  for (LinearInequality& ineq : system) {
    if (is_zero(ineq.coeffs)) {
      if (ineq.bound > 0) return false;
      continue;
    }
    LinearInequality norm = normalized(std::move(ineq));
    if (seen.emplace(norm.coeffs, norm.bound).second) kept.push_back(std::move(norm));
  }
  system = std::move(kept);
  return true;
}

System eliminate(const System& system, std::size_t var) {
  System lower, upper, rest;
  for (const LinearInequality& ineq : system) {
    const Rational& a = ineq.coeffs[var];
    if (a > 0) {
      lower.push_back(ineq);
    } else if (a < 0) {
      upper.push_back(ineq);
    } else {
      rest.push_back(ineq);
    }
  }
  for (const LinearInequality& lo : lower) {
    for (const LinearInequality& up : upper) {
      // lo: a x + p.r >= s (a > 0); up: -c x + q.r >= t (c > 0)  =>  c*lo + a*up
      const Rational a = lo.coeffs[var];
      const Rational c = -up.coeffs[var];
      LinearInequality combined{RatVector(lo.coeffs.size()), Rational(c * lo.bound + a * up.bound)};
      for (std::size_t k = 0; k < lo.coeffs.size(); ++k) {
        combined.coeffs[k] = c * lo.coeffs[k] + a * up.coeffs[k];
      }
      combined.coeffs[var] = 0;
      rest.push_back(std::move(combined));
    }
  }
  return rest;
}

}  // namespace

std::optional<RatVector> find_feasible_point(const std::vector<LinearInequality>& system,
                                             std::size_t num_vars) {
  for (const LinearInequality& ineq : system) {
    if (ineq.coeffs.size() != num_vars) {
      throw Error(ErrorCode::DimensionMismatch, "inequality has wrong number of coefficients");
    }
  }
  std::vector<System> stages;
  stages.reserve(num_vars + 1);
  System current = system;
  if (!simplify(current)) return std::nullopt;
  stages.push_back(current);
  for (std::size_t var = 0; var < num_vars; ++var) {
    current = eliminate(current, var);
    if (!simplify(current)) return std::nullopt;
    stages.push_back(current);
  }

  RatVector x(num_vars);
  for (std::size_t k = num_vars; k-- > 0;) {
    // stages[k] involves only x_k .. x_{n-1}; x_{k+1..} are fixed.
    std::optional<Rational> lo, hi;
    for (const LinearInequality& ineq : stages[k]) {
      const Rational& a = ineq.coeffs[k];
      if (a == 0) continue;
      Rational residual = ineq.bound;
      for (std::size_t j = k + 1; j < num_vars; ++j) residual -= ineq.coeffs[j] * x[j];
      const Rational limit = residual / a;
      if (a > 0) {
        if (!lo || limit > *lo) lo = limit;
      } else {
        if (!hi || limit < *hi) hi = limit;
      }
    }
    if (lo) {
      x[k] = *lo;
    } else if (hi && *hi < 0) {
      x[k] = *hi;
    } else {
      x[k] = 0;
    }
  }
  return x;
}

}  // namespace toricfan
