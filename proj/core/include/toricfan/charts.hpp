#pragma once

// Normal charts of X(fan): dual sets, transition maps, chart images, and
// consistency checks of the resulting atlas.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "toricfan/endo.hpp"
#include "toricfan/fan.hpp"
#include "toricfan/validity.hpp"

namespace toricfan {

/// Rows alpha_i (i in I) with pair(alpha_i, beta_j) = delta_ij * identity.
struct DualSet {
  Simplex simplex;
  std::vector<Character> rows;

  friend bool operator==(const DualSet&, const DualSet&) = default;
};

/// X = B_I^-1, U = V_I^-1, Y = -U C_I B_I^-1. Throws SingularB / NonUnimodularV.
DualSet dual_set(const TopologicalFan& fan, const Simplex& simplex);

/// phi_J o phi_I^-1 as a monomial matrix with rows J and columns I.
struct TransitionMap {
  Simplex source;
  Simplex target;
  MonomialMatrix matrix;
  /// Present iff every entry is nice; laurent[r][c] matches matrix.at(r, c).
  std::optional<std::vector<std::vector<LaurentExponent>>> laurent;
};

TransitionMap transition(const TopologicalFan& fan, const Simplex& source, const Simplex& target);

/// Text rendering: "w = ..." for a single output, "w_j = ..." per line otherwise.
std::string render_transition(const TransitionMap& map);

/// Normal chart of I applied to z in C^m; coordinates outside I must be
/// nonzero (ZeroForbidden otherwise). Output is indexed by I.
std::vector<Complex> chart_image(const TopologicalFan& fan, const Simplex& simplex,
                                 std::span<const Complex> z);
std::vector<Complex> chart_image(const DualSet& dual, const TopologicalFan& fan,
                                 std::span<const Complex> z);

struct ChartRecord {
  Simplex simplex;
  std::vector<Character> representation;
  std::vector<int> removed;  // [m] \ I, 0-based
  bool smooth = true;
  bool real_algebraic = false;  // y = 0, x integral, x == u (mod 2) on every row
  bool algebraic = false;       // y = 0 and x = u on every row

  friend bool operator==(const ChartRecord&, const ChartRecord&) = default;
};

/// One record per maximal simplex, in the fan's simplex order.
std::vector<ChartRecord> atlas(const TopologicalFan& fan);

/// Criteria read off an atlas: all transitions Laurent in z only plus one
/// algebraic chart characterises toric manifolds; all transitions Laurent in
/// z and conj(z) plus one real-algebraic chart characterises nice ones.
struct AtlasClassification {
  bool transitions_holomorphic = false;  // every entry nice with q = 0
  bool transitions_laurent = false;      // every entry nice
  bool some_chart_algebraic = false;
  bool some_chart_real_algebraic = false;
  bool toric_criterion = false;
  bool nice_criterion = false;

  friend bool operator==(const AtlasClassification&, const AtlasClassification&) = default;
};

AtlasClassification classify_atlas(const TopologicalFan& fan);

enum class CocycleMode { Exact, Numeric };

struct CocycleOptions {
  CocycleMode mode = CocycleMode::Exact;
  std::size_t points = 100;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  ValidationOptions validation{};
};

struct CocycleFailure {
  std::size_t first = 0, second = 0, third = 0;  // positions in maximal_simplices
  std::size_t row = 0, col = 0;                  // offending entry (exact mode)
  double error = 0.0;                            // worst relative error (numeric mode)
  std::string detail;

  friend bool operator==(const CocycleFailure&, const CocycleFailure&) = default;
};

struct CocycleReport {
  CocycleMode mode = CocycleMode::Exact;
  std::size_t triples = 0;
  std::size_t points = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::vector<CocycleFailure> failures;

  bool pass() const noexcept { return failures.empty(); }

  friend bool operator==(const CocycleReport&, const CocycleReport&) = default;
};

/// T(J,K) o T(I,J) against T(I,K) over all ordered triples of maximal
/// simplices, in lexicographic order. Throws InvalidFanError on an invalid fan.
CocycleReport cocycle_check(const TopologicalFan& fan, const CocycleOptions& options = {});

struct OraclePairResult {
  std::size_t first = 0, second = 0;
  double max_relative_error = 0.0;
};

struct OracleReport {
  std::size_t points = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::vector<OraclePairResult> pairs;
  double max_relative_error = 0.0;

  bool pass() const noexcept { return max_relative_error <= tol; }
};

/// chart_image(J, z) against T(I, J) applied to chart_image(I, z) for
/// seeded z in (C*)^m, over all ordered pairs of maximal simplices.
OracleReport chart_oracle(const TopologicalFan& fan, std::size_t points, double tol, std::uint64_t seed);

/// max_k |a_k - b_k| / |b_k|.
double max_relative_error(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace toricfan
