#pragma once

// Regular deformation of a valid fan into a nice one: c -> 0, rationalise b,
// scale b into 2Z^n by an even N, then slide b to u = b - v. Each linear
// segment is certified by exact validation at both endpoints and at seeded
// interior rational parameters.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "toricfan/fan.hpp"
#include "toricfan/validity.hpp"

namespace toricfan {

enum class SegmentLabel { KillC, Rationalize, ScaleEven, SwapToU };

std::string_view to_string(SegmentLabel label);
SegmentLabel parse_segment_label(std::string_view text);

/// beta(t) = (1 - t) * start + t * end on b and c; v is shared by both ends.
struct Segment {
  SegmentLabel label = SegmentLabel::KillC;
  std::vector<Cocharacter> start;
  std::vector<Cocharacter> end;

  std::vector<Cocharacter> at(const Rational& t) const;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct DeformationPath {
  std::vector<Segment> segments;

  friend bool operator==(const DeformationPath&, const DeformationPath&) = default;
};

struct SampleVerdict {
  Rational t;
  bool valid = false;

  friend bool operator==(const SampleVerdict& a, const SampleVerdict& b) {
    return a.t == b.t && a.valid == b.valid;
  }
};

struct SegmentCertificate {
  SegmentLabel label = SegmentLabel::KillC;
  std::size_t samples = 0;  // interior samples; verdicts also hold t = 0 and t = 1
  std::uint64_t seed = 0;
  std::vector<SampleVerdict> verdicts;  // ascending in t
  bool pass = false;

  friend bool operator==(const SegmentCertificate&, const SegmentCertificate&) = default;
};

struct RegularityCertificate {
  std::vector<SegmentCertificate> segments;

  bool pass() const;

  friend bool operator==(const RegularityCertificate&, const RegularityCertificate&) = default;
};

struct NiceifyOptions {
  std::size_t samples = 32;
  std::uint64_t seed = 0;
  std::optional<Integer> n_min;  // default 2 * lcm(denominators of b)
  int max_doublings = 20;
  Rational epsilon = 0;          // rationalisation tolerance; 0 keeps b as is
  int max_rationalize_retries = 16;
  ValidationOptions validation{};
};

/// Validates `segment` (over the combinatorics of `fan`) at t = 0, t = 1
/// and `samples` interior points t = (k + r_k) / samples with seeded r_k.
SegmentCertificate certify_segment(const TopologicalFan& fan, const Segment& segment, std::size_t samples,
                                   std::uint64_t seed, const ValidationOptions& validation = {});

struct StepResult {
  TopologicalFan fan;
  Segment segment;
};

StepResult step1_kill_c(const TopologicalFan& fan);

/// Simplest rational (least denominator) in [value - epsilon, value + epsilon].
Rational simplest_rational_within(const Rational& value, const Rational& epsilon);

/// Snaps every b coordinate to the simplest rational within epsilon, halving
/// epsilon until the resulting segment certifies. epsilon = 0 is the identity.
StepResult step2_rationalize(const TopologicalFan& fan, const Rational& epsilon,
                             const NiceifyOptions& options = {});

struct ScaleResult {
  TopologicalFan fan;
  Segment segment;
  Integer n;
  std::vector<Integer> tried;  // every N attempted, in order
};

/// b -> N*b with N the smallest multiple of 2*lcm(denominators) that is
/// >= n_min and whose follow-up swap segment certifies, doubling N on
/// failure. Throws RegularityFailedAtMaxN after options.max_doublings.
ScaleResult step3_scale_even(const TopologicalFan& fan, const std::optional<Integer>& n_min,
                             const NiceifyOptions& options = {});

/// b -> u = b - v. Requires c = 0 and b in 2Z^n (InvalidParam otherwise).
StepResult step4_swap_to_u(const TopologicalFan& fan);

struct NiceifyResult {
  TopologicalFan fan;
  DeformationPath path;
  RegularityCertificate certificate;
  std::optional<Integer> n;
};

/// Input must be valid (InvalidFanError otherwise). Already-nice input is
/// returned unchanged with an empty path.
NiceifyResult niceify(const TopologicalFan& fan, const NiceifyOptions& options = {});

}  // namespace toricfan
