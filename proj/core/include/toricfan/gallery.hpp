#pragma once

// Built-in fans. Names:
//   cp1, cp2, cpn(n), hirzebruch(a), nice_nontoric, perturbed(<name>, seed)

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "toricfan/fan.hpp"

namespace toricfan {

/// Standard CP^n fan: rays e_1, ..., e_n, -(1, ..., 1); b = v, c = 0.
TopologicalFan cpn(int n);

/// Rays (1,0), (0,1), (-1,a), (0,-1) with the four adjacent cones; b = v, c = 0.
TopologicalFan hirzebruch(const Integer& a);

/// CP^2 combinatorics and b-data with one v_i shifted by an even vector,
/// chosen as the first candidate (by offset size) that validates, is nice
/// but not toric, has only real-algebraic charts, at least one of them not
/// algebraic, and some transition with a conj(z) factor.
TopologicalFan nice_nontoric();

/// `base` with seeded rational noise on b (entries of size <= 1/3, then a
/// positive rescaling per ray) and seeded nonzero c, redrawn until valid.
/// Throws PerturbationFailed if no draw validates.
TopologicalFan perturbed(const TopologicalFan& base, std::uint64_t seed);

/// Parses a gallery name; throws UnknownGallery or InvalidParam.
TopologicalFan gallery(std::string_view name);

/// A representative listing of gallery names.
std::vector<std::string> gallery_catalog();

}  // namespace toricfan
