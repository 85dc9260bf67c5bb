#include "toricfan_cli/app.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <toricfan/charts.hpp>
#include <toricfan/deform.hpp>
#include <toricfan/error.hpp>
#include <toricfan/fan_io.hpp>
#include <toricfan/gallery.hpp>
#include <toricfan/report_io.hpp>
#include <toricfan/validity.hpp>

#include "text_report.hpp"

namespace toricfan::cli {

namespace {

struct Options {
  std::string input;
  std::uint64_t seed = 0;
  std::optional<std::size_t> samples;
  double tol = 1e-9;
  std::string format = "text";
  std::string output;
  std::string from, to;
  std::string mode = "exact";
  std::string n_min;
  int max_doublings = 20;
  std::string epsilon = "0";
  std::string path_output, certificate_output;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool machine(const Options& o) { return o.format == "machine"; }

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

TopologicalFan load_fan(const std::string& input, std::istream& in) {
  if (input.rfind("gallery:", 0) == 0) return gallery(std::string_view(input).substr(8));
  if (input == "-") return parse_fan(read_all(in));
  std::ifstream file(input, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + input + "'");
  return parse_fan(read_all(file));
}

// Writes to a sibling temporary file and renames it over the target.
void write_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp" + std::to_string(std::hash<std::string>{}(path) & 0xffff);
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write '" + path + "'");
    file << content;
    file.flush();
    if (!file) throw UsageError("cannot write '" + path + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw UsageError("cannot write '" + path + "'");
  }
}

void emit(const Options& o, std::ostream& out, const std::string& content) {
  if (o.output.empty()) {
    out << content;
  } else {
    write_atomic(o.output, content);
  }
}

Simplex parse_selector(const std::string& text, const TopologicalFan& fan, const char* flag) {
  if (text.empty()) throw UsageError(std::string("--") + flag + " is required");
  Simplex s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      s.push_back(static_cast<int>(v - 1));
    } catch (const std::logic_error&) {
      throw UsageError(std::string("--") + flag + ": expected 1-based ray indices, got '" + text + "'");
    }
  }
  std::sort(s.begin(), s.end());
  if (fan.find_simplex(s) < 0) {
    throw UsageError(std::string("--") + flag + ": " + format_simplex(s) + " is not a maximal simplex");
  }
  return s;
}

ValidationOptions validation_options(const Options& o, std::size_t default_samples = 2000) {
  ValidationOptions v;
  v.seed = o.seed;
  v.completeness_samples = o.samples.value_or(default_samples);
  v.proper.seed = o.seed;
  return v;
}

// Validates; on failure reports the witness and returns false.
bool require_valid(const TopologicalFan& fan, const Options& o, std::ostream& out, std::ostream& err,
                   ValidityReport* report_out = nullptr) {
  const ValidityReport report = validate(fan, validation_options(o));
  if (report_out) *report_out = report;
  if (report.valid()) return true;
  if (machine(o)) {
    emit(o, out, emit_validity_report(report));
  } else {
    err << "invalid fan: " << describe_failure(report) << "\n";
  }
  return false;
}

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  const TopologicalFan fan = load_fan(o.input, in);
  const ValidityReport report = validate(fan, validation_options(o));
  emit(o, out, machine(o) ? emit_validity_report(report) : text_validity(report));
  return report.valid() ? kExitOk : kExitFailure;
}

int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  const TopologicalFan fan = load_fan(o.input, in);
  const ValidityReport report = validate(fan, validation_options(o));
  const Classification cls = classify(fan);
  emit(o, out, machine(o) ? emit_classification(cls, report) : text_classification(cls, report));
  return report.valid() ? kExitOk : kExitFailure;
}

int cmd_charts(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const TopologicalFan fan = load_fan(o.input, in);
  if (!require_valid(fan, o, out, err)) return kExitFailure;
  const auto charts = atlas(fan);
  const auto summary = classify_atlas(fan);
  emit(o, out, machine(o) ? emit_atlas(charts, summary) : text_atlas(charts, summary));
  return kExitOk;
}

int cmd_transition(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const TopologicalFan fan = load_fan(o.input, in);
  const Simplex source = parse_selector(o.from, fan, "from");
  const Simplex target = parse_selector(o.to, fan, "to");
  if (!require_valid(fan, o, out, err)) return kExitFailure;
  const TransitionMap map = transition(fan, source, target);
  emit(o, out, machine(o) ? emit_transition(map) : render_transition(map));
  return kExitOk;
}

int cmd_cocycle(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const TopologicalFan fan = load_fan(o.input, in);
  if (!require_valid(fan, o, out, err)) return kExitFailure;
  CocycleOptions options;
  options.mode = o.mode == "numeric" ? CocycleMode::Numeric : CocycleMode::Exact;
  options.points = o.samples.value_or(100);
  options.tol = o.tol;
  options.seed = o.seed;
  options.validation = validation_options(o);
  const CocycleReport report = cocycle_check(fan, options);
  emit(o, out, machine(o) ? emit_cocycle_report(report) : text_cocycle(report, fan));
  return report.pass() ? kExitOk : kExitFailure;
}

int cmd_oracle(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const TopologicalFan fan = load_fan(o.input, in);
  if (!require_valid(fan, o, out, err)) return kExitFailure;
  const OracleReport report = chart_oracle(fan, o.samples.value_or(100), o.tol, o.seed);
  emit(o, out, machine(o) ? emit_oracle_report(report, fan) : text_oracle(report, fan));
  return report.pass() ? kExitOk : kExitFailure;
}

int cmd_niceify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const TopologicalFan fan = load_fan(o.input, in);
  if (!require_valid(fan, o, out, err)) return kExitFailure;
  NiceifyOptions options;
  options.samples = o.samples.value_or(32);
  options.seed = o.seed;
  options.max_doublings = o.max_doublings;
  options.validation = validation_options(o);
  try {
    if (!o.n_min.empty()) options.n_min = parse_integer(o.n_min);
    options.epsilon = parse_rational(o.epsilon);
  } catch (const Error& e) {
    throw UsageError(std::string("niceify: ") + e.what());
  }
  if (options.epsilon < 0) throw UsageError("--epsilon must be non-negative");
  if (options.n_min && *options.n_min <= 0) throw UsageError("--n-min must be positive");
  const NiceifyResult result = niceify(fan, options);
  if (!o.path_output.empty()) write_atomic(o.path_output, emit_path(result.path));
  if (!o.certificate_output.empty()) write_atomic(o.certificate_output, emit_certificate(result.certificate));
  emit(o, out, emit_fan(result.fan));
  if (!machine(o)) err << text_niceify(result);
  return result.certificate.pass() ? kExitOk : kExitFailure;
}

int cmd_gallery(const Options& o, std::ostream& out) {
  if (!o.input.empty()) {
    emit(o, out, emit_fan(gallery(o.input)));
    return kExitOk;
  }
  std::string listing;
  if (machine(o)) {
    listing = "{\n  \"format\": \"toricfan-report\",\n  \"version\": 1,\n  \"kind\": \"gallery\",\n  \"names\": [";
    const auto names = gallery_catalog();
    for (std::size_t k = 0; k < names.size(); ++k) listing += (k ? ", \"" : "\"") + names[k] + "\"";
    listing += "]\n}\n";
  } else {
    for (const std::string& name : gallery_catalog()) listing += name + "\n";
  }
  emit(o, out, listing);
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::InvalidParam:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::UnknownGallery:
    case ErrorCode::DimensionTooLarge:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on topological fans and their normal-chart atlases", "toricfan"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub, bool input_required = true) {
    auto* input = sub->add_option("input", o.input, "fan document path, gallery:<name>, or - for stdin");
    if (input_required) input->required();
    sub->add_option("--seed", o.seed, "seed for sampled checks");
    sub->add_option("--samples", o.samples, "sample / point count");
    sub->add_option("--tol", o.tol, "relative tolerance for numeric checks")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--output", o.output, "write the report to this path");
  };

  auto* validate_cmd = app.add_subcommand("validate", "run all validity checks");
  common(validate_cmd);
  auto* classify_cmd = app.add_subcommand("classify", "toric / nice classification");
  common(classify_cmd);
  auto* charts_cmd = app.add_subcommand("charts", "normal-chart atlas");
  common(charts_cmd);
  auto* transition_cmd = app.add_subcommand("transition", "transition function between two charts");
  common(transition_cmd);
  transition_cmd->add_option("--from", o.from, "source simplex, e.g. 1,2")->required();
  transition_cmd->add_option("--to", o.to, "target simplex, e.g. 2,3")->required();
  auto* cocycle_cmd = app.add_subcommand("cocycle", "cocycle identity over all chart triples");
  common(cocycle_cmd);
  cocycle_cmd->add_option("--mode", o.mode, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}));
  auto* niceify_cmd = app.add_subcommand("niceify", "regular deformation to a nice fan");
  common(niceify_cmd);
  niceify_cmd->add_option("--n-min", o.n_min, "lower bound for the even scaling factor");
  niceify_cmd->add_option("--max-doublings", o.max_doublings, "retries of the scaling factor")
      ->check(CLI::NonNegativeNumber);
  niceify_cmd->add_option("--epsilon", o.epsilon, "rationalisation tolerance (rational)");
  niceify_cmd->add_option("--path-output", o.path_output, "write the deformation path here");
  niceify_cmd->add_option("--certificate-output", o.certificate_output, "write the regularity certificate here");
  auto* gallery_cmd = app.add_subcommand("gallery", "list built-in fans, or print one as a fan document");
  common(gallery_cmd, false);
  auto* oracle_cmd = app.add_subcommand("oracle", "check transitions against chart images numerically");
  common(oracle_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(o, in, out);
    if (*classify_cmd) return cmd_classify(o, in, out);
    if (*charts_cmd) return cmd_charts(o, in, out, err);
    if (*transition_cmd) return cmd_transition(o, in, out, err);
    if (*cocycle_cmd) return cmd_cocycle(o, in, out, err);
    if (*niceify_cmd) return cmd_niceify(o, in, out, err);
    if (*gallery_cmd) return cmd_gallery(o, out);
    if (*oracle_cmd) return cmd_oracle(o, in, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidFanError& e) {
    err << "invalid fan: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace toricfan::cli
