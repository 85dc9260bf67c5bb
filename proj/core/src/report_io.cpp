#include "toricfan/report_io.hpp"

#include <cmath>
#include <cstdio>

#include "json_support.hpp"

namespace toricfan {

using detail::Json;

namespace {

Json envelope(const char* kind) {
  Json doc;
  doc["format"] = "toricfan-report";
  doc["version"] = kReportVersion;
  doc["kind"] = kind;
  return doc;
}

Json open_envelope(std::string_view text, const char* kind) {
  Json doc = detail::parse_json(text);
  if (detail::get_as<std::string>(detail::require(doc, "format"), "format") != "toricfan-report") {
    throw Error(ErrorCode::Parse, "not a toricfan report");
  }
  if (detail::get_as<int>(detail::require(doc, "version"), "version") != kReportVersion) {
    throw Error(ErrorCode::Parse, "unsupported report version");
  }
  if (detail::get_as<std::string>(detail::require(doc, "kind"), "kind") != kind) {
    throw Error(ErrorCode::Parse, std::string("expected a '") + kind + "' report");
  }
  return doc;
}

std::string dump(const Json& doc) { return detail::dump_document(doc); }

CheckStatus parse_status(const Json& value) {
  const auto text = detail::get_as<std::string>(value, "status");
  for (CheckStatus s : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Skipped}) {
    if (to_string(s) == text) return s;
  }
  throw Error(ErrorCode::Parse, "unknown status '" + text + "'");
}

CertificateKind parse_kind(const Json& value) {
  const auto text = detail::get_as<std::string>(value, "certificate");
  if (text == "exact") return CertificateKind::Exact;
  if (text == "sampled") return CertificateKind::Sampled;
  throw Error(ErrorCode::Parse, "unknown certificate kind '" + text + "'");
}

Json index_list(const std::vector<int>& values) {
  Json out = Json::array();
  for (int v : values) out.push_back(v + 1);
  return out;
}

std::vector<int> parse_index_list(const Json& value) {
  std::vector<int> out;
  for (const Json& item : value) out.push_back(detail::get_as<int>(item, "index") - 1);
  return out;
}

// Seeds are full 64-bit values; JSON readers commonly stop at 2^53.
Json seed_json(std::uint64_t seed) { return std::to_string(seed); }

std::uint64_t parse_seed(const Json& value) {
  return std::stoull(detail::get_as<std::string>(value, "seed"));
}

// Round-trippable decimal for doubles.
Json double_json(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(buf);
}

double parse_double(const Json& value) { return std::stod(detail::get_as<std::string>(value, "number")); }

Json validity_json(const ValidityReport& r) {
  Json out;
  out["valid"] = r.valid();

  const CombinatoricsCheck& c = r.combinatorics;
  Json purity;
  purity["status"] = to_string(c.purity);
  purity["wrong_size"] = index_list(c.wrong_size);
  purity["unused_rays"] = index_list(c.unused_rays);
  purity["duplicates"] = index_list(c.duplicates);
  out["purity"] = std::move(purity);
  Json ridge;
  ridge["holds"] = c.ridge_condition;
  ridge["witness"] = c.ridge_witness ? detail::simplex_json(*c.ridge_witness) : Json(nullptr);
  ridge["witness_count"] = c.ridge_witness_count;
  out["ridge_condition"] = std::move(ridge);

  Json nonsingular;
  nonsingular["status"] = to_string(r.nonsingular.status);
  Json simplices = Json::array();
  for (const SimplexDeterminants& d : r.nonsingular.simplices) {
    simplices.push_back(Json{{"simplex", detail::simplex_json(d.simplex)},
                             {"det_v", to_string(d.det_v)},
                             {"det_b", to_string(d.det_b)},
                             {"pass", d.pass}});
  }
  nonsingular["simplices"] = std::move(simplices);
  out["nonsingular"] = std::move(nonsingular);

  Json proper;
  proper["status"] = to_string(r.proper.status);
  proper["certificate"] = to_string(r.proper.kind);
  proper["seed"] = seed_json(r.proper.seed);
  proper["samples"] = r.proper.samples;
  proper["dimension_fallback"] = r.proper.dimension_fallback;
  if (r.proper.witness) {
    proper["witness"] = Json{{"first", detail::simplex_json(r.proper.witness->first)},
                             {"second", detail::simplex_json(r.proper.witness->second)},
                             {"direction", detail::rat_vector_json(r.proper.witness->direction)}};
  } else {
    proper["witness"] = nullptr;
  }
  out["fan_proper"] = std::move(proper);

  Json complete;
  complete["status"] = to_string(r.complete.status);
  complete["certificate"] = to_string(r.complete.kind);
  complete["seed"] = seed_json(r.complete.seed);
  complete["samples"] = r.complete.samples;
  complete["uncovered"] = r.complete.uncovered ? detail::rat_vector_json(*r.complete.uncovered) : Json(nullptr);
  out["complete"] = std::move(complete);
  return out;
}

ValidityReport validity_from_json(const Json& doc) {
  ValidityReport r;
  const Json& purity = detail::require(doc, "purity");
  r.combinatorics.purity = parse_status(detail::require(purity, "status"));
  r.combinatorics.wrong_size = parse_index_list(detail::require(purity, "wrong_size"));
  r.combinatorics.unused_rays = parse_index_list(detail::require(purity, "unused_rays"));
  r.combinatorics.duplicates = parse_index_list(detail::require(purity, "duplicates"));
  const Json& ridge = detail::require(doc, "ridge_condition");
  r.combinatorics.ridge_condition = detail::get_as<bool>(detail::require(ridge, "holds"), "holds");
  if (!detail::require(ridge, "witness").is_null()) r.combinatorics.ridge_witness = detail::parse_simplex(ridge.at("witness"));
  r.combinatorics.ridge_witness_count = detail::get_as<std::size_t>(detail::require(ridge, "witness_count"), "witness_count");

  const Json& nonsingular = detail::require(doc, "nonsingular");
  r.nonsingular.status = parse_status(detail::require(nonsingular, "status"));
  for (const Json& d : detail::require(nonsingular, "simplices")) {
    r.nonsingular.simplices.push_back(
        SimplexDeterminants{detail::parse_simplex(detail::require(d, "simplex")),
                            parse_integer(detail::get_as<std::string>(detail::require(d, "det_v"), "det_v")),
                            parse_rational(detail::get_as<std::string>(detail::require(d, "det_b"), "det_b")),
                            detail::get_as<bool>(detail::require(d, "pass"), "pass")});
  }

  const Json& proper = detail::require(doc, "fan_proper");
  r.proper.status = parse_status(detail::require(proper, "status"));
  r.proper.kind = parse_kind(detail::require(proper, "certificate"));
  r.proper.seed = parse_seed(detail::require(proper, "seed"));
  r.proper.samples = detail::get_as<std::size_t>(detail::require(proper, "samples"), "samples");
  r.proper.dimension_fallback = detail::get_as<bool>(detail::require(proper, "dimension_fallback"), "dimension_fallback");
  if (const Json& w = detail::require(proper, "witness"); !w.is_null()) {
    r.proper.witness = ConeOverlapWitness{detail::parse_simplex(detail::require(w, "first")),
                                          detail::parse_simplex(detail::require(w, "second")),
                                          detail::parse_rat_vector(detail::require(w, "direction"), "direction")};
  }

  const Json& complete = detail::require(doc, "complete");
  r.complete.status = parse_status(detail::require(complete, "status"));
  r.complete.kind = parse_kind(detail::require(complete, "certificate"));
  r.complete.seed = parse_seed(detail::require(complete, "seed"));
  r.complete.samples = detail::get_as<std::size_t>(detail::require(complete, "samples"), "samples");
  if (const Json& u = detail::require(complete, "uncovered"); !u.is_null()) {
    r.complete.uncovered = detail::parse_rat_vector(u, "uncovered");
  }
  return r;
}

Json character_json(const Character& row) {
  return Json{{"x", detail::rat_vector_json(row.x)},
              {"y", detail::rat_vector_json(row.y)},
              {"u", detail::int_vector_json(row.u)}};
}

Json beta_json(const std::vector<Cocharacter>& beta) {
  Json out = Json::array();
  for (const Cocharacter& b : beta) {
    out.push_back(Json{{"b", detail::rat_vector_json(b.b)},
                       {"c", detail::rat_vector_json(b.c)},
                       {"v", detail::int_vector_json(b.v)}});
  }
  return out;
}

std::vector<Cocharacter> parse_beta(const Json& value) {
  std::vector<Cocharacter> out;
  for (const Json& record : value) {
    out.push_back(Cocharacter{detail::parse_rat_vector(detail::require(record, "b"), "b"),
                              detail::parse_rat_vector(detail::require(record, "c"), "c"),
                              detail::parse_int_vector(detail::require(record, "v"), "v")});
  }
  return out;
}

}  // namespace

std::string emit_validity_report(const ValidityReport& report) {
  Json doc = envelope("validity");
  doc.update(validity_json(report));
  return dump(doc);
}

ValidityReport parse_validity_report(std::string_view text) {
  return validity_from_json(open_envelope(text, "validity"));
}

std::string emit_classification(const Classification& classification, const ValidityReport& validity) {
  Json doc = envelope("classification");
  doc["valid"] = validity.valid();
  doc["toric"] = classification.toric;
  doc["nice"] = classification.nice;
  Json rays = Json::array();
  for (const RayFlags& f : classification.rays) {
    rays.push_back(Json{{"ray", f.ray + 1},
                        {"c_zero", f.c_zero},
                        {"b_integral", f.b_integral},
                        {"parity", f.parity},
                        {"b_equals_v", f.b_equals_v}});
  }
  doc["rays"] = std::move(rays);
  return dump(doc);
}

Classification parse_classification(std::string_view text) {
  const Json doc = open_envelope(text, "classification");
  Classification out;
  out.toric = detail::get_as<bool>(detail::require(doc, "toric"), "toric");
  out.nice = detail::get_as<bool>(detail::require(doc, "nice"), "nice");
  for (const Json& f : detail::require(doc, "rays")) {
    out.rays.push_back(RayFlags{detail::get_as<int>(detail::require(f, "ray"), "ray") - 1,
                                detail::get_as<bool>(detail::require(f, "c_zero"), "c_zero"),
                                detail::get_as<bool>(detail::require(f, "b_integral"), "b_integral"),
                                detail::get_as<bool>(detail::require(f, "parity"), "parity"),
                                detail::get_as<bool>(detail::require(f, "b_equals_v"), "b_equals_v")});
  }
  return out;
}

std::string emit_cocycle_report(const CocycleReport& report) {
  Json doc = envelope("cocycle");
  doc["mode"] = report.mode == CocycleMode::Exact ? "exact" : "numeric";
  doc["pass"] = report.pass();
  doc["triples"] = report.triples;
  doc["points"] = report.points;
  doc["tol"] = double_json(report.tol);
  doc["seed"] = seed_json(report.seed);
  Json failures = Json::array();
  for (const CocycleFailure& f : report.failures) {
    failures.push_back(Json{{"triple", Json::array({f.first + 1, f.second + 1, f.third + 1})},
                            {"row", f.row},
                            {"col", f.col},
                            {"error", double_json(f.error)},
                            {"detail", f.detail}});
  }
  doc["failures"] = std::move(failures);
  return dump(doc);
}

CocycleReport parse_cocycle_report(std::string_view text) {
  const Json doc = open_envelope(text, "cocycle");
  CocycleReport r;
  const auto mode = detail::get_as<std::string>(detail::require(doc, "mode"), "mode");
  if (mode != "exact" && mode != "numeric") throw Error(ErrorCode::Parse, "unknown cocycle mode");
  r.mode = mode == "exact" ? CocycleMode::Exact : CocycleMode::Numeric;
  r.triples = detail::get_as<std::size_t>(detail::require(doc, "triples"), "triples");
  r.points = detail::get_as<std::size_t>(detail::require(doc, "points"), "points");
  r.tol = parse_double(detail::require(doc, "tol"));
  r.seed = parse_seed(detail::require(doc, "seed"));
  for (const Json& f : detail::require(doc, "failures")) {
    const Json& triple = detail::require(f, "triple");
    if (!triple.is_array() || triple.size() != 3) throw Error(ErrorCode::Parse, "triple must have 3 entries");
    r.failures.push_back(CocycleFailure{triple[0].get<std::size_t>() - 1, triple[1].get<std::size_t>() - 1,
                                        triple[2].get<std::size_t>() - 1,
                                        detail::get_as<std::size_t>(detail::require(f, "row"), "row"),
                                        detail::get_as<std::size_t>(detail::require(f, "col"), "col"),
                                        parse_double(detail::require(f, "error")),
                                        detail::get_as<std::string>(detail::require(f, "detail"), "detail")});
  }
  return r;
}

std::string emit_path(const DeformationPath& path) {
  Json doc = envelope("deformation_path");
  Json segments = Json::array();
  for (const Segment& s : path.segments) {
    segments.push_back(Json{{"label", to_string(s.label)},
                            {"interpolation", "linear"},
                            {"start", beta_json(s.start)},
                            {"end", beta_json(s.end)}});
  }
  doc["segments"] = std::move(segments);
  return dump(doc);
}

DeformationPath parse_path(std::string_view text) {
  const Json doc = open_envelope(text, "deformation_path");
  DeformationPath path;
  for (const Json& s : detail::require(doc, "segments")) {
    path.segments.push_back(Segment{parse_segment_label(detail::get_as<std::string>(detail::require(s, "label"), "label")),
                                    parse_beta(detail::require(s, "start")), parse_beta(detail::require(s, "end"))});
  }
  return path;
}

std::string emit_certificate(const RegularityCertificate& certificate) {
  Json doc = envelope("regularity_certificate");
  doc["pass"] = certificate.pass();
  Json segments = Json::array();
  for (const SegmentCertificate& s : certificate.segments) {
    Json verdicts = Json::array();
    for (const SampleVerdict& v : s.verdicts) verdicts.push_back(Json{{"t", to_string(v.t)}, {"valid", v.valid}});
    segments.push_back(Json{{"label", to_string(s.label)},
                            {"samples", s.samples},
                            {"seed", seed_json(s.seed)},
                            {"pass", s.pass},
                            {"verdicts", std::move(verdicts)}});
  }
  doc["segments"] = std::move(segments);
  return dump(doc);
}

RegularityCertificate parse_certificate(std::string_view text) {
  const Json doc = open_envelope(text, "regularity_certificate");
  RegularityCertificate cert;
  for (const Json& s : detail::require(doc, "segments")) {
    SegmentCertificate seg;
    seg.label = parse_segment_label(detail::get_as<std::string>(detail::require(s, "label"), "label"));
    seg.samples = detail::get_as<std::size_t>(detail::require(s, "samples"), "samples");
    seg.seed = parse_seed(detail::require(s, "seed"));
    seg.pass = detail::get_as<bool>(detail::require(s, "pass"), "pass");
    for (const Json& v : detail::require(s, "verdicts")) {
      seg.verdicts.push_back(SampleVerdict{parse_rational(detail::get_as<std::string>(detail::require(v, "t"), "t")),
                                           detail::get_as<bool>(detail::require(v, "valid"), "valid")});
    }
    cert.segments.push_back(std::move(seg));
  }
  return cert;
}

std::string emit_atlas(const std::vector<ChartRecord>& charts, const AtlasClassification& summary) {
  Json doc = envelope("atlas");
  doc["chart_count"] = charts.size();
  Json list = Json::array();
  for (const ChartRecord& rec : charts) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < rec.representation.size(); ++r) {
      Json row = character_json(rec.representation[r]);
      row["index"] = rec.simplex[r] + 1;
      rows.push_back(std::move(row));
    }
    list.push_back(Json{{"simplex", detail::simplex_json(rec.simplex)},
                        {"removed", index_list(rec.removed)},
                        {"smooth", rec.smooth},
                        {"real_algebraic", rec.real_algebraic},
                        {"algebraic", rec.algebraic},
                        {"representation", std::move(rows)}});
  }
  doc["charts"] = std::move(list);
  doc["summary"] = Json{{"transitions_laurent", summary.transitions_laurent},
                        {"transitions_holomorphic", summary.transitions_holomorphic},
                        {"some_chart_algebraic", summary.some_chart_algebraic},
                        {"some_chart_real_algebraic", summary.some_chart_real_algebraic},
                        {"toric_criterion", summary.toric_criterion},
                        {"nice_criterion", summary.nice_criterion}};
  return dump(doc);
}

std::string emit_transition(const TransitionMap& map) {
  Json doc = envelope("transition");
  doc["from"] = detail::simplex_json(map.source);
  doc["to"] = detail::simplex_json(map.target);
  Json rows = Json::array();
  for (std::size_t r = 0; r < map.matrix.rows(); ++r) {
    Json entries = Json::array();
    for (std::size_t c = 0; c < map.matrix.cols(); ++c) {
      Json e = detail::endo_json(map.matrix.at(r, c));
      e["variable"] = map.matrix.col_labels()[c] + 1;
      if (map.laurent) {
        e["p"] = to_string((*map.laurent)[r][c].p);
        e["q"] = to_string((*map.laurent)[r][c].q);
      }
      entries.push_back(std::move(e));
    }
    rows.push_back(Json{{"output", map.matrix.row_labels()[r] + 1},
                        {"text", render_row(map.matrix, r)},
                        {"entries", std::move(entries)}});
  }
  doc["laurent"] = map.laurent.has_value();
  doc["rows"] = std::move(rows);
  return dump(doc);
}

std::string emit_oracle_report(const OracleReport& report, const TopologicalFan& fan) {
  Json doc = envelope("chart_oracle");
  doc["pass"] = report.pass();
  doc["points"] = report.points;
  doc["tol"] = double_json(report.tol);
  doc["seed"] = seed_json(report.seed);
  doc["max_relative_error"] = double_json(report.max_relative_error);
  Json pairs = Json::array();
  for (const OraclePairResult& p : report.pairs) {
    pairs.push_back(Json{{"from", detail::simplex_json(fan.maximal_simplices[p.first])},
                         {"to", detail::simplex_json(fan.maximal_simplices[p.second])},
                         {"max_relative_error", double_json(p.max_relative_error)}});
  }
  doc["pairs"] = std::move(pairs);
  return dump(doc);
}

}  // namespace toricfan
