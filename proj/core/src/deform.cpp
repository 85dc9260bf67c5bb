#include "toricfan/deform.hpp"

#include <algorithm>

#include "toricfan/error.hpp"
#include "toricfan/sampling.hpp"

namespace toricfan {

namespace {

constexpr std::uint64_t kSampleResolution = 1u << 16;

std::uint64_t segment_seed(std::uint64_t seed, SegmentLabel label) {
  return mix_seed(seed, static_cast<std::uint64_t>(label));
}

Rational floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

// Least-denominator rational in [lo, hi], 0 < lo <= hi.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
  const Rational fl = floor_of(lo);
  if (fl == lo) return fl;
  if (fl + 1 <= hi) return Rational(fl + 1);
  const Rational inner = simplest_positive(Rational(1 / (hi - fl)), Rational(1 / (lo - fl)));
  return Rational(fl + 1 / inner);
}

}  // namespace

std::string_view to_string(SegmentLabel label) {
  switch (label) {
    case SegmentLabel::KillC: return "kill_c";
    case SegmentLabel::Rationalize: return "rationalize";
    case SegmentLabel::ScaleEven: return "scale_even";
    case SegmentLabel::SwapToU: return "swap_to_u";
  }
  return "kill_c";
}

SegmentLabel parse_segment_label(std::string_view text) {
  for (SegmentLabel label : {SegmentLabel::KillC, SegmentLabel::Rationalize, SegmentLabel::ScaleEven,
                             SegmentLabel::SwapToU}) {
    if (to_string(label) == text) return label;
  }
  throw Error(ErrorCode::Parse, "unknown segment label '" + std::string(text) + "'");
}

std::vector<Cocharacter> Segment::at(const Rational& t) const {
  const Rational s = 1 - t;
  std::vector<Cocharacter> out = start;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t k = 0; k < out[i].b.size(); ++k) {
      out[i].b[k] = s * start[i].b[k] + t * end[i].b[k];
      out[i].c[k] = s * start[i].c[k] + t * end[i].c[k];
    }
  }
  return out;
}

bool RegularityCertificate::pass() const {
  return std::all_of(segments.begin(), segments.end(), [](const SegmentCertificate& s) { return s.pass; });
}

SegmentCertificate certify_segment(const TopologicalFan& fan, const Segment& segment, std::size_t samples,
                                   std::uint64_t seed, const ValidationOptions& validation) {
  SegmentCertificate cert;
  cert.label = segment.label;
  cert.samples = samples;
  cert.seed = seed;
  std::vector<Rational> ts{Rational(0)};
  SeededRng rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const auto offset = rng.uniform_int(1, static_cast<std::int64_t>(kSampleResolution) - 1);
    Rational t(Integer(static_cast<long>(k)) * kSampleResolution + offset,
               Integer(static_cast<long>(samples)) * kSampleResolution);
    t.canonicalize();
    ts.push_back(t);
  }
  ts.emplace_back(1);
  cert.pass = true;
  for (const Rational& t : ts) {
    for (std::size_t i = 0; i < segment.start.size(); ++i) {
      if (segment.start[i].v != segment.end[i].v) {
        throw Error(ErrorCode::InvalidParam, "segment changes v on ray " + std::to_string(i + 1));
      }
    }
    const TopologicalFan sample = with_beta(fan, segment.at(t));
    bool ok = false;
    try {
      ok = validate(sample, validation).valid();
    } catch (const Error&) {
      ok = false;  // e.g. b_i(t) = 0 is structurally invalid
    }
    cert.verdicts.push_back({t, ok});
    cert.pass = cert.pass && ok;
  }
  return cert;
}

StepResult step1_kill_c(const TopologicalFan& fan) {
  std::vector<Cocharacter> end = fan.beta;
  for (Cocharacter& beta : end) {
    for (Rational& c : beta.c) c = 0;
  }
  return {with_beta(fan, end), Segment{SegmentLabel::KillC, fan.beta, end}};
}

Rational simplest_rational_within(const Rational& value, const Rational& epsilon) {
  if (epsilon < 0) throw Error(ErrorCode::InvalidParam, "epsilon must be non-negative");
  const Rational lo = value - epsilon;
  const Rational hi = value + epsilon;
  if (lo <= 0 && hi >= 0) return 0;
  if (lo > 0) return simplest_positive(lo, hi);
  return Rational(-simplest_positive(Rational(-hi), Rational(-lo)));
}

StepResult step2_rationalize(const TopologicalFan& fan, const Rational& epsilon, const NiceifyOptions& options) {
  if (epsilon == 0) return {fan, Segment{SegmentLabel::Rationalize, fan.beta, fan.beta}};
  if (epsilon < 0) throw Error(ErrorCode::InvalidParam, "epsilon must be non-negative");
  Rational eps = epsilon;
  const std::uint64_t seed = segment_seed(options.seed, SegmentLabel::Rationalize);
  for (int attempt = 0; attempt <= options.max_rationalize_retries; ++attempt, eps /= 2) {
    std::vector<Cocharacter> end = fan.beta;
    for (Cocharacter& beta : end) {
      for (Rational& b : beta.b) b = simplest_rational_within(b, eps);
    }
    Segment segment{SegmentLabel::Rationalize, fan.beta, end};
    if (certify_segment(fan, segment, options.samples, seed, options.validation).pass) {
      return {with_beta(fan, end), std::move(segment)};
    }
  }
  throw Error(ErrorCode::PerturbationFailed,
              "no valid rationalisation after " + std::to_string(options.max_rationalize_retries) + " retries");
}

StepResult step4_swap_to_u(const TopologicalFan& fan) {
  std::vector<Cocharacter> end = fan.beta;
  for (std::size_t i = 0; i < end.size(); ++i) {
    Cocharacter& beta = end[i];
    if (!is_zero(beta.c)) throw Error(ErrorCode::InvalidParam, "swap_to_u requires c = 0");
    for (std::size_t k = 0; k < beta.b.size(); ++k) {
      if (!is_integral(beta.b[k]) || !is_even(beta.b[k].get_num())) {
        throw Error(ErrorCode::InvalidParam, "swap_to_u requires b in 2Z^n (ray " + std::to_string(i + 1) + ")");
      }
      beta.b[k] -= Rational(beta.v[k]);
    }
  }
  return {with_beta(fan, end), Segment{SegmentLabel::SwapToU, fan.beta, end}};
}

ScaleResult step3_scale_even(const TopologicalFan& fan, const std::optional<Integer>& n_min,
                             const NiceifyOptions& options) {
  RatVector all_b;
  for (const Cocharacter& beta : fan.beta) {
    if (!is_zero(beta.c)) throw Error(ErrorCode::InvalidParam, "scale_even requires c = 0");
    all_b.insert(all_b.end(), beta.b.begin(), beta.b.end());
  }
  const Integer base = 2 * lcm_of_denominators(all_b);
  Integer n = base;
  if (n_min) {
    if (*n_min <= 0) throw Error(ErrorCode::InvalidParam, "N_min must be positive");
    Integer multiples = (*n_min + base - 1) / base;
    n = std::max(Integer(1), multiples) * base;
  }
  ScaleResult result;
  const std::uint64_t swap_seed = segment_seed(options.seed, SegmentLabel::SwapToU);
  std::string last_failure;
  for (int attempt = 0; attempt <= options.max_doublings; ++attempt, n *= 2) {
    result.tried.push_back(n);
    std::vector<Cocharacter> scaled = fan.beta;
    for (Cocharacter& beta : scaled) {
      for (Rational& b : beta.b) b *= Rational(n);
    }
    const TopologicalFan candidate = with_beta(fan, scaled);
    const StepResult swap = step4_swap_to_u(candidate);
    const SegmentCertificate cert =
        certify_segment(candidate, swap.segment, options.samples, swap_seed, options.validation);
    if (cert.pass) {
      result.fan = candidate;
      result.segment = Segment{SegmentLabel::ScaleEven, fan.beta, scaled};
      result.n = n;
      return result;
    }
    for (const SampleVerdict& v : cert.verdicts) {
      if (!v.valid) {
        last_failure = "N = " + to_string(n) + " fails at t = " + to_string(v.t);
        break;
      }
    }
  }
  throw Error(ErrorCode::RegularityFailedAtMaxN, last_failure);
}

NiceifyResult niceify(const TopologicalFan& fan, const NiceifyOptions& options) {
  ValidityReport report = validate(fan, options.validation);
  if (!report.valid()) throw InvalidFanError(std::move(report));
  if (classify(fan).nice) return {fan, {}, {}, std::nullopt};

  const StepResult killed = step1_kill_c(fan);
  const StepResult rational = step2_rationalize(killed.fan, options.epsilon, options);
  const ScaleResult scaled = step3_scale_even(rational.fan, options.n_min, options);
  const StepResult swapped = step4_swap_to_u(scaled.fan);

  NiceifyResult result;
  result.fan = swapped.fan;
  result.n = scaled.n;
  result.path.segments = {killed.segment, rational.segment, scaled.segment, swapped.segment};
  for (const Segment& segment : result.path.segments) {
    result.certificate.segments.push_back(certify_segment(fan, segment, options.samples,
                                                          segment_seed(options.seed, segment.label),
                                                          options.validation));
  }
  if (!result.certificate.pass()) {
    throw Error(ErrorCode::RegularityFailedAtMaxN, "deformation path failed certification");
  }
  return result;
}

}  // namespace toricfan
