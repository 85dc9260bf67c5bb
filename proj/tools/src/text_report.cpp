#include "text_report.hpp"

#include <cstdio>
#include <sstream>

namespace toricfan::cli {

namespace {

template <typename V>
std::string vec(const V& values) {
  std::string out = "(";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ", ";
    out += to_string(values[k]);
  }
  return out + ")";
}

std::string indices(const std::vector<int>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(values[k] + 1);
  }
  return out;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string certificate(CertificateKind kind, std::uint64_t seed, std::size_t samples) {
  if (kind == CertificateKind::Exact) return "exact";
  return "sampled, seed " + std::to_string(seed) + ", " + std::to_string(samples) + " samples";
}

}  // namespace

std::string text_validity(const ValidityReport& r) {
  std::ostringstream out;
  const CombinatoricsCheck& c = r.combinatorics;
  out << "purity: " << to_string(c.purity) << "\n";
  if (!c.wrong_size.empty()) out << "  wrong size: simplex #" << indices(c.wrong_size) << "\n";
  if (!c.unused_rays.empty()) out << "  unused rays: " << indices(c.unused_rays) << "\n";
  if (!c.duplicates.empty()) out << "  repeated: simplex #" << indices(c.duplicates) << "\n";
  out << "ridge condition: " << (c.ridge_condition ? "holds" : "fails");
  if (c.ridge_witness) {
    out << " (face " << format_simplex(*c.ridge_witness) << " lies in " << c.ridge_witness_count
        << " maximal simplices)";
  }
  out << "\n";

  out << "nonsingular: " << to_string(r.nonsingular.status) << "\n";
  for (const SimplexDeterminants& d : r.nonsingular.simplices) {
    out << "  " << format_simplex(d.simplex) << ": det V = " << to_string(d.det_v) << ", det B = " << to_string(d.det_b)
        << (d.pass ? "" : "  FAIL") << "\n";
  }

  out << "fan proper: " << to_string(r.proper.status);
  if (r.proper.status != CheckStatus::Skipped) {
    out << " (" << certificate(r.proper.kind, r.proper.seed, r.proper.samples)
        << (r.proper.dimension_fallback ? ", exact unavailable above dimension 4" : "") << ")";
  }
  out << "\n";
  if (r.proper.witness) {
    out << "  cones " << format_simplex(r.proper.witness->first) << " and " << format_simplex(r.proper.witness->second)
        << " share direction " << vec(r.proper.witness->direction) << "\n";
  }

  out << "complete: " << to_string(r.complete.status);
  if (r.complete.status != CheckStatus::Skipped) {
    out << " (" << certificate(r.complete.kind, r.complete.seed, r.complete.samples) << ")";
  }
  out << "\n";
  if (r.complete.uncovered) out << "  uncovered direction " << vec(*r.complete.uncovered) << "\n";

  out << (r.valid() ? "valid" : "invalid: " + describe_failure(r)) << "\n";
  return out.str();
}

std::string text_classification(const Classification& cls, const ValidityReport& validity) {
  std::ostringstream out;
  out << "valid: " << yes_no(validity.valid()) << "\n";
  out << "toric: " << yes_no(cls.toric) << "\n";
  out << "nice: " << yes_no(cls.nice) << "\n";
  for (const RayFlags& f : cls.rays) {
    std::string problems;
    auto add = [&](const char* what) { problems += problems.empty() ? what : std::string(", ") + what; };
    if (!f.c_zero) add("c != 0");
    if (!f.b_integral) add("b not integral");
    else if (!f.parity) add("b != v mod 2");
    if (f.c_zero && f.parity && !f.b_equals_v) add("b != v");
    out << "  ray " << f.ray + 1 << ": " << (problems.empty() ? "ok" : problems) << "\n";
  }
  if (!validity.valid()) out << "invalid: " << describe_failure(validity) << "\n";
  return out.str();
}

std::string text_atlas(const std::vector<ChartRecord>& charts, const AtlasClassification& s) {
  std::ostringstream out;
  out << charts.size() << " charts\n";
  for (const ChartRecord& rec : charts) {
    out << "chart " << format_simplex(rec.simplex) << "  removed {" << indices(rec.removed) << "}"
        << "  real-algebraic: " << yes_no(rec.real_algebraic) << "  algebraic: " << yes_no(rec.algebraic) << "\n";
    for (std::size_t r = 0; r < rec.representation.size(); ++r) {
      const Character& a = rec.representation[r];
      out << "  alpha_" << rec.simplex[r] + 1 << ": x = " << vec(a.x) << ", y = " << vec(a.y) << ", u = " << vec(a.u)
          << "\n";
    }
  }
  out << "transitions Laurent in z, conj(z): " << yes_no(s.transitions_laurent) << "\n";
  out << "transitions Laurent in z only: " << yes_no(s.transitions_holomorphic) << "\n";
  out << "some chart real-algebraic: " << yes_no(s.some_chart_real_algebraic) << "\n";
  out << "some chart algebraic: " << yes_no(s.some_chart_algebraic) << "\n";
  out << "toric atlas: " << yes_no(s.toric_criterion) << "\n";
  out << "nice atlas: " << yes_no(s.nice_criterion) << "\n";
  return out.str();
}

std::string text_cocycle(const CocycleReport& r, const TopologicalFan& fan) {
  std::ostringstream out;
  out << "cocycle (" << (r.mode == CocycleMode::Exact ? "exact" : "numeric") << "): "
      << (r.pass() ? "pass" : "fail") << ", " << r.triples << " triples";
  if (r.mode == CocycleMode::Numeric) out << ", " << r.points << " points, tol " << sci(r.tol) << ", seed " << r.seed;
  out << "\n";
  for (const CocycleFailure& f : r.failures) {
    out << "  " << format_simplex(fan.maximal_simplices[f.first]) << " -> "
        << format_simplex(fan.maximal_simplices[f.second]) << " -> " << format_simplex(fan.maximal_simplices[f.third])
        << ": " << f.detail << "\n";
  }
  return out.str();
}

std::string text_oracle(const OracleReport& r, const TopologicalFan& fan) {
  std::ostringstream out;
  out << "chart oracle: " << (r.pass() ? "pass" : "fail") << ", " << r.pairs.size() << " pairs, " << r.points
      << " points, seed " << r.seed << ", max relative error " << sci(r.max_relative_error) << " (tol " << sci(r.tol)
      << ")\n";
  for (const OraclePairResult& p : r.pairs) {
    if (p.max_relative_error > r.tol) {
      out << "  " << format_simplex(fan.maximal_simplices[p.first]) << " -> "
          << format_simplex(fan.maximal_simplices[p.second]) << ": " << sci(p.max_relative_error) << "\n";
    }
  }
  return out.str();
}

std::string text_niceify(const NiceifyResult& result) {
  std::ostringstream out;
  if (result.path.segments.empty()) {
    out << "niceify: input already nice, unchanged\n";
    return out.str();
  }
  out << "niceify: " << result.path.segments.size() << " segments";
  if (result.n) out << ", N = " << to_string(*result.n);
  out << ", certificate " << (result.certificate.pass() ? "pass" : "fail") << "\n";
  for (const SegmentCertificate& s : result.certificate.segments) {
    std::size_t valid = 0;
    for (const SampleVerdict& v : s.verdicts) valid += v.valid ? 1 : 0;
    out << "  " << to_string(s.label) << ": " << valid << "/" << s.verdicts.size() << " samples valid, seed " << s.seed
        << "\n";
  }
  return out.str();
}

}  // namespace toricfan::cli
