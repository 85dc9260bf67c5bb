#pragma once

// Exact rational feasibility of systems of non-strict linear inequalities by
// Fourier-Motzkin elimination.

#include <optional>
#include <vector>

#include "toricfan/exact.hpp"

namespace toricfan {

/// coeffs . x >= bound
struct LinearInequality {
  RatVector coeffs;
  Rational bound;
};

/// Returns a point satisfying every inequality, or nothing if the system is
/// infeasible. Variables are eliminated in index order and the witness is
/// rebuilt by back-substitution, taking the tightest lower bound for each
/// variable when one exists (otherwise 0 clamped to the upper bounds).
std::optional<RatVector> find_feasible_point(const std::vector<LinearInequality>& system,
                                             std::size_t num_vars);

}  // namespace toricfan
