#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <toricfan/fan_io.hpp>
#include <toricfan/gallery.hpp>
#include <toricfan/report_io.hpp>

#include "toricfan_cli/app.hpp"

using namespace toricfan;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

// Runs a shell command line, returning exit status and stdout.
std::pair<int, std::string> shell(const std::string& command) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("toricfan_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

std::string invalid_fan_document() {
  TopologicalFan fan = cpn(2);
  fan.maximal_simplices.erase(fan.maximal_simplices.begin() + 1);
  return emit_fan(fan);
}

}  // namespace

TEST(Cli, TransitionGolden) {
  const Result r = run_cli({"transition", "gallery:cp1", "--from", "1", "--to", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "w = z_1^-1\n");
}

TEST(Cli, TransitionCp2) {
  const Result r = run_cli({"transition", "gallery:cp2", "--from", "2,1", "--to", "2,3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "w_2 = z_1^-1 z_2^1\nw_3 = z_1^-1\n");
  EXPECT_EQ(run_cli({"transition", "gallery:cp2", "--from", "1", "--to", "2,3"}).code, 2);
  EXPECT_EQ(run_cli({"transition", "gallery:cp2", "--from", "1,x", "--to", "2,3"}).code, 2);
}

TEST(Cli, ValidateGallery) {
  const Result r = run_cli({"validate", "gallery:cp2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("purity: pass"), std::string::npos);
  EXPECT_NE(r.out.find("nonsingular: pass"), std::string::npos);
  EXPECT_NE(r.out.find("fan proper: pass"), std::string::npos);
  EXPECT_NE(r.out.find("complete: pass"), std::string::npos);
  EXPECT_NE(r.out.find("\nvalid\n"), std::string::npos);

  const Result m = run_cli({"validate", "gallery:cp2", "--format", "machine"});
  EXPECT_EQ(m.code, 0);
  EXPECT_TRUE(parse_validity_report(m.out).valid());
}

TEST(Cli, InvalidFanExitsOneWithWitness) {
  const std::string doc = invalid_fan_document();
  const Result v = run_cli({"validate", "-"}, doc);
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("uncovered direction"), std::string::npos);

  const Result c = run_cli({"cocycle", "-"}, doc);
  EXPECT_EQ(c.code, 1);
  EXPECT_NE(c.err.find("complete: direction"), std::string::npos);

  const Result m = run_cli({"cocycle", "-", "--format", "machine"}, doc);
  EXPECT_EQ(m.code, 1);
  const ValidityReport report = parse_validity_report(m.out);
  EXPECT_TRUE(report.complete.uncovered.has_value());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"validate", "gallery:cp2", "--bogus"}).code, 2);
  EXPECT_EQ(run_cli({"validate", "gallery:cp2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"validate", "/nonexistent/fan.json"}).code, 2);
  EXPECT_EQ(run_cli({"validate", "gallery:nothing"}).code, 2);
  EXPECT_EQ(run_cli({"validate", "-"}, "{\"version\": 1}").code, 2);
  const Result r = run_cli({"validate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  const Result r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("niceify"), std::string::npos);
}

TEST(Cli, ClassifyAndCharts) {
  const Result c = run_cli({"classify", "gallery:nice_nontoric", "--format", "machine"});
  EXPECT_EQ(c.code, 0);
  const Classification cls = parse_classification(c.out);
  EXPECT_TRUE(cls.nice);
  EXPECT_FALSE(cls.toric);

  const Result a = run_cli({"charts", "gallery:nice_nontoric"});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("3 charts"), std::string::npos);
  EXPECT_NE(a.out.find("nice atlas: yes"), std::string::npos);
}

TEST(Cli, CocycleAndOracle) {
  EXPECT_EQ(run_cli({"cocycle", "gallery:cpn(3)"}).code, 0);
  const Result n = run_cli({"cocycle", "gallery:hirzebruch(2)", "--mode", "numeric", "--samples", "10",
                            "--format", "machine"});
  EXPECT_EQ(n.code, 0);
  const CocycleReport r = parse_cocycle_report(n.out);
  EXPECT_EQ(r.mode, CocycleMode::Numeric);
  EXPECT_EQ(r.points, 10u);
  EXPECT_EQ(run_cli({"oracle", "gallery:perturbed(cp2,2)"}).code, 0);
  EXPECT_EQ(run_cli({"cocycle", "gallery:cp2", "--mode", "fuzzy"}).code, 2);
}

TEST(Cli, MachineOutputIsReproducible) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"validate", "gallery:cpn(3)", "--format", "machine", "--seed", "5"},
        std::vector<std::string>{"oracle", "gallery:nice_nontoric", "--format", "machine", "--seed", "5"},
        std::vector<std::string>{"niceify", "gallery:perturbed(hirzebruch(2),8)", "--format", "machine"}}) {
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
  }
}

TEST(Cli, NiceifyWritesAllDocuments) {
  TempDir dir;
  const std::string fan = dir.file("fan.json"), path = dir.file("path.json"), cert = dir.file("cert.json");
  const Result r = run_cli({"niceify", "gallery:perturbed(hirzebruch(1),7)", "--output", fan, "--path-output", path,
                            "--certificate-output", cert, "--seed", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("certificate pass"), std::string::npos);
  const TopologicalFan out = parse_fan(read_file(fan));
  EXPECT_TRUE(classify(out).nice);
  EXPECT_EQ(parse_path(read_file(path)).segments.size(), 4u);
  EXPECT_TRUE(parse_certificate(read_file(cert)).pass());
  for (const auto& entry : std::filesystem::directory_iterator(std::filesystem::path(fan).parent_path())) {
    EXPECT_EQ(entry.path().string().find(".tmp"), std::string::npos);
  }
}

TEST(Cli, GalleryListingAndDocuments) {
  const Result list = run_cli({"gallery"});
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("nice_nontoric"), std::string::npos);
  const Result doc = run_cli({"gallery", "hirzebruch(2)"});
  EXPECT_EQ(doc.code, 0);
  EXPECT_EQ(parse_fan(doc.out), hirzebruch(2));
  EXPECT_EQ(run_cli({"gallery", "unknown"}).code, 2);
}

TEST(CliProcess, GoldenTransition) {
  const auto [code, out] = shell(std::string(TORICFAN_EXE) + " transition gallery:cp1 --from 1 --to 2");
  EXPECT_EQ(code, 0);
  EXPECT_EQ(out, "w = z_1^-1\n");
}

TEST(CliProcess, NiceifyPipelineValidatesAndClassifiesNice) {
  const std::string exe = TORICFAN_EXE;
  for (const char* base : {"cp2", "hirzebruch(0)", "hirzebruch(1)", "hirzebruch(2)", "nice_nontoric"}) {
    for (int seed : {1, 2, 3}) {
      const std::string name = std::string("'gallery:perturbed(") + base + "," + std::to_string(seed) + ")'";
      const auto [vcode, vout] = shell(exe + " niceify " + name + " 2>/dev/null | " + exe + " validate -");
      EXPECT_EQ(vcode, 0) << name << "\n" << vout;
      const auto [ccode, cout] =
          shell(exe + " niceify " + name + " 2>/dev/null | " + exe + " classify - --format machine");
      EXPECT_EQ(ccode, 0) << name;
      EXPECT_TRUE(parse_classification(cout).nice) << name;
    }
  }
}

TEST(CliProcess, ExitStatuses) {
  const std::string exe = TORICFAN_EXE;
  EXPECT_EQ(shell(exe + " validate gallery:cp2 >/dev/null").first, 0);
  EXPECT_EQ(shell(exe + " nonsense 2>/dev/null").first, 2);
  EXPECT_EQ(shell("echo '" + invalid_fan_document() + "' | " + exe + " cocycle - 2>/dev/null").first, 1);
}
