#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toricfan/endo.hpp"

namespace toricfan {

/// Sorted, 0-based ray indices.
using Simplex = std::vector<int>;

/// 1-based "{1,2}" rendering used in messages and text reports.
std::string format_simplex(const Simplex& s);

/// A simplicial complex on the rays [m] together with the per-ray data
/// beta_i = (b_i + i c_i, v_i). Combinatorial well-formedness (purity, ray
/// coverage, no duplicates) is reported by validate_combinatorics rather than
/// enforced here, so malformed inputs can still be analysed.
struct TopologicalFan {
  int dimension = 0;
  std::vector<Simplex> maximal_simplices;
  std::vector<Cocharacter> beta;

  std::size_t ray_count() const noexcept { return beta.size(); }

  /// Index of s among maximal_simplices, or -1.
  int find_simplex(const Simplex& s) const;

  friend bool operator==(const TopologicalFan&, const TopologicalFan&) = default;
};

/// Rejects structurally unusable data with InvalidParam: non-positive
/// dimension, vectors of the wrong length, out-of-range or repeated indices
/// inside one simplex, zero b-vectors, an empty simplex list.
void check_shape(const TopologicalFan& fan);

/// Columns b_i, c_i, v_i for i in I, in the order of I.
RatMatrix b_matrix(const TopologicalFan& fan, const Simplex& simplex);
RatMatrix c_matrix(const TopologicalFan& fan, const Simplex& simplex);
IntMatrix v_matrix(const TopologicalFan& fan, const Simplex& simplex);

/// Same fan with every b_i, c_i replaced.
TopologicalFan with_beta(const TopologicalFan& fan, std::vector<Cocharacter> beta);

}  // namespace toricfan
