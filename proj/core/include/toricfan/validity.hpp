#pragma once

// Named validity checks for complete non-singular topological fans. Cone
// conditions are imposed on the b-components only.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricfan/error.hpp"
#include "toricfan/fan.hpp"

namespace toricfan {

enum class CheckStatus { Pass, Fail, Skipped };
enum class CertificateKind { Exact, Sampled };

std::string_view to_string(CheckStatus status);
std::string_view to_string(CertificateKind kind);

struct CombinatoricsCheck {
  CheckStatus purity = CheckStatus::Skipped;
  std::vector<int> wrong_size;   // positions in maximal_simplices
  std::vector<int> unused_rays;  // 0-based ray indices
  std::vector<int> duplicates;   // positions of repeated simplices (second and later copies)
  // Every (n-2)-face of a maximal simplex lies in exactly two maximal
  // simplices. Necessary for completeness; reported, never gating.
  bool ridge_condition = false;
  std::optional<Simplex> ridge_witness;
  std::size_t ridge_witness_count = 0;  // maximal simplices containing the witness

  friend bool operator==(const CombinatoricsCheck&, const CombinatoricsCheck&) = default;
};

struct SimplexDeterminants {
  Simplex simplex;
  Integer det_v;
  Rational det_b;
  bool pass = false;

  friend bool operator==(const SimplexDeterminants& a, const SimplexDeterminants& b) {
    return a.simplex == b.simplex && a.det_v == b.det_v && a.det_b == b.det_b && a.pass == b.pass;
  }
};

struct NonsingularCheck {
  CheckStatus status = CheckStatus::Skipped;
  std::vector<SimplexDeterminants> simplices;

  friend bool operator==(const NonsingularCheck&, const NonsingularCheck&) = default;
};

struct ConeOverlapWitness {
  Simplex first;
  Simplex second;
  RatVector direction;  // lies in both cones but outside their common face

  friend bool operator==(const ConeOverlapWitness&, const ConeOverlapWitness&) = default;
};

struct ProperCheck {
  CheckStatus status = CheckStatus::Skipped;
  CertificateKind kind = CertificateKind::Exact;
  std::uint64_t seed = 0;       // meaningful for sampled certificates
  std::size_t samples = 0;      // meaningful for sampled certificates
  bool dimension_fallback = false;  // exact requested but n > 4
  std::optional<ConeOverlapWitness> witness;

  friend bool operator==(const ProperCheck&, const ProperCheck&) = default;
};

struct CompleteCheck {
  CheckStatus status = CheckStatus::Skipped;
  CertificateKind kind = CertificateKind::Exact;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::optional<RatVector> uncovered;  // a direction in no closed cone

  friend bool operator==(const CompleteCheck&, const CompleteCheck&) = default;
};

struct ValidityReport {
  CombinatoricsCheck combinatorics;
  NonsingularCheck nonsingular;
  ProperCheck proper;
  CompleteCheck complete;

  /// True only if every gating check ran and passed.
  bool valid() const;

  friend bool operator==(const ValidityReport&, const ValidityReport&) = default;
};

/// Purity, ray coverage, duplicate detection and the ridge condition.
CombinatoricsCheck validate_combinatorics(const TopologicalFan& fan);

/// |det V_I| = 1 over Z and det B_I != 0 over Q for every maximal I.
NonsingularCheck check_nonsingular(const TopologicalFan& fan);

struct ProperOptions {
  bool exact = true;
  std::uint64_t seed = 0;
  std::size_t samples = 4096;
};

/// Cones pos{b_i : i in I} meet pairwise exactly in the cone over I cap J.
/// Exact (Fourier-Motzkin) for n <= 4; above that an exact request falls
/// back to interior sampling and sets dimension_fallback.
ProperCheck check_fan_proper(const TopologicalFan& fan, const ProperOptions& options = {});

enum class CompletenessMode { Auto, Sampled };

/// n <= 2: exact angular sweep. n >= 3 (or Sampled requested): `samples`
/// seeded integer directions, each tested for closed-cone membership.
CompleteCheck check_complete(const TopologicalFan& fan, std::size_t samples, std::uint64_t seed,
                             CompletenessMode mode = CompletenessMode::Auto);

struct ValidationOptions {
  std::size_t completeness_samples = 2000;
  std::uint64_t seed = 0;
  ProperOptions proper{};
};

/// Runs the checks in gate order; later checks are Skipped once one fails.
ValidityReport validate(const TopologicalFan& fan, const ValidationOptions& options = {});

/// Raised by operations that require a valid fan.
class InvalidFanError : public Error {
 public:
  explicit InvalidFanError(ValidityReport report);
  const ValidityReport& report() const noexcept { return report_; }

 private:
  ValidityReport report_;
};

/// Human-readable description of the first failing check with its witness.
std::string describe_failure(const ValidityReport& report);

struct RayFlags {
  int ray = 0;  // 0-based
  bool c_zero = false;
  bool b_integral = false;
  bool parity = false;       // b integral and b == v (mod 2)
  bool b_equals_v = false;

  friend bool operator==(const RayFlags&, const RayFlags&) = default;
};

struct Classification {
  bool toric = false;
  bool nice = false;
  std::vector<RayFlags> rays;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// toric: b_i = v_i and c_i = 0 for all i. nice: c_i = 0, b_i integral and b_i == v_i (mod 2).
Classification classify(const TopologicalFan& fan);

/// Whether a direction lies in the closed cone pos{b_i : i in I}.
bool cone_contains(const TopologicalFan& fan, const Simplex& simplex, const RatVector& direction);

}  // namespace toricfan
