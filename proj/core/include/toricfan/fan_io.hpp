#pragma once

// Fan document, version 1:
//
//   {
//     "version": 1,
//     "dimension": n,
//     "rays": m,
//     "maximal_simplices": [[1, 2], ...],        1-based ray indices
//     "beta": [{"b": ["p/q", ...], "c": [...], "v": [int, ...]}, ...]
//   }
//
// b and c entries are strings "p", "-p" or "p/q". Unknown fields are rejected.

#include <string>
#include <string_view>

#include "toricfan/fan.hpp"

namespace toricfan {

inline constexpr int kFanDocumentVersion = 1;

/// Throws Error(Parse) on malformed documents and Error(InvalidParam) on
/// structurally unusable data (see check_shape).
TopologicalFan parse_fan(std::string_view text);

/// Canonical, deterministic rendering (2-space indent, trailing newline).
std::string emit_fan(const TopologicalFan& fan);

}  // namespace toricfan
