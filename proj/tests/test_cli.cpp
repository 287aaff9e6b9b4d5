// End-to-end tests for the command-line tool: golden-file byte comparisons,
// exit-code contract, determinism, and flag plumbing. The binary path and the
// golden directory arrive through the FERMATCI_BIN / FERMATCI_GOLDEN_DIR
// environment variables set by the build.
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

namespace {

std::string bin_path() {
  const char* bin = std::getenv("FERMATCI_BIN");
  REQUIRE(bin != nullptr);
  return bin;
}

std::string golden_dir() {
  const char* dir = std::getenv("FERMATCI_GOLDEN_DIR");
  REQUIRE(dir != nullptr);
  return dir;
}

struct RunResult {
  std::string out;
  int code = -1;
};

/// Runs a full shell command, capturing stdout; stderr is left alone unless
/// the command redirects it.
RunResult run_shell(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  RunResult r;
  r.out = out;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

/// Runs the tool with the given argument string, stderr discarded.
RunResult run_tool(const std::string& args) {
  std::string cmd = bin_path();
  if (!args.empty()) cmd += " " + args;
  cmd += " 2>/dev/null";
  return run_shell(cmd);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  const char* args;
  const char* golden;
  int exit_code;
};

constexpr GoldenCase kGoldenCases[] = {
    {"faithful --n 3 --r 2 --d 3 --format json", "faithful_3_2_3.json", 0},
    {"faithful --n 5 --r 2 --d 2 --format json", "faithful_5_2_2.json", 1},
    {"faithful --n 4 --r 2 --d 3", "faithful_4_2_3.txt", 0},
    {"separate --n 3 --d 3", "separate_3_3.txt", 0},
    {"cover --d 6 --chi 1,2,3 --format json", "cover_6_1_2_3.json", 0},
    {"decomp --n 3 --r 2 --d 3 --format csv", "decomp_3_2_3.csv", 0},
    {"decomp --n 5 --r 2 --d 2 --format json", "decomp_5_2_2.json", 0},
    {"aut-oracle --n 3 --r 2 --d 3 --format json", "aut_oracle_3_2_3_canonical.json", 1},
    {"aut-oracle --n 4 --r 2 --d 3 --seed 1 --format json", "aut_oracle_4_2_3_seed1.json", 0},
    {"interp --n 4 --r 3 --tau 4,3,2,1,0 --format json", "interp_4_3_reversal.json", 1},
    {"involution --n-max 5 --d-max 4 --format csv", "involution_5_4_scan.csv", 0},
    {"involution --n 3 --r 2 --d 3", "involution_3_2_3_point.txt", 0},
    {"betti --degrees 2,2 --n 5", "betti_2_2_5.txt", 0},
    {"hodge --degrees 4 --n 3 --t 4", "hodge_4_3_t4.txt", 0},
    {"scan-hodge --format csv", "scan_hodge_default.csv", 0},
    {"classify --degrees 2,3,4 --n 6 --format json", "classify_2_3_4_6.json", 0},
};

}  // namespace

TEST_CASE("golden reports: every documented example reproduces its committed bytes") {
  for (const GoldenCase& c : kGoldenCases) {
    CAPTURE(c.args);
    RunResult r = run_tool(c.args);
    CHECK(r.code == c.exit_code);
    CHECK(r.out == read_file(golden_dir() + "/" + c.golden));
  }
}

TEST_CASE("same command twice produces byte-identical output") {
  for (const char* args : {"decomp --n 3 --r 2 --d 3 --format json",
                           "aut-oracle --n 4 --r 2 --d 3 --seed 7 --format json",
                           "faithful --n 4 --r 3 --d 4 --format json"}) {
    CAPTURE(args);
    RunResult a = run_tool(args);
    RunResult b = run_tool(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("usage errors exit 2 with nothing on stdout") {
  for (const char* args : {
           "",                                                     // no subcommand
           "frobnicate --n 3",                                     // unknown subcommand
           "faithful --n 3 --r 2",                                 // missing required flag
           "betti --degrees 2,2 --n 5 --bogus",                    // unknown flag
           "separate --n 3 --d 3 --format yaml",                   // bad format value
           "faithful --n 3 --r 2 --d 3 --format csv",              // csv for non-tabular report
           "betti --degrees 2,2 --n 5 --format csv",               // csv for non-tabular report
           "faithful --n 2 --r 1 --d 3",                           // parameters out of domain
           "cover --d 5 --chi 1,2,3",                              // character sum not 0 mod d
           "cover --d 5 --chi 0,0,0,0",                            // trivial character
           "involution --d-max 4",                                 // incomplete mode selection
           "involution --n 3 --r 2 --d 3 --n-max 5 --d-max 4",     // both modes at once
           "aut-oracle --n 3 --r 2 --d 3 --lambdas 0,1,2,3 --seed 5",  // exclusive sources
           "aut-oracle --n 3 --r 2 --d 3 --lambdas 0,1,2",         // wrong tuple length
           "interp --r 3 --tau 1,0,2",                             // neither --lambdas nor --n
           "interp --n 4 --r 3 --tau 1,0,2",                       // tau length mismatch
           "interp --n 4 --r 4 --tau 4,3,2,1,0",                   // r out of range (needs r < n)
       }) {
    CAPTURE(args);
    RunResult r = run_tool(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
  }
}

TEST_CASE("help and version succeed") {
  RunResult help = run_tool("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("faithful") != std::string::npos);
  CHECK(help.out.find("scan-hodge") != std::string::npos);

  RunResult sub_help = run_tool("faithful --help");
  CHECK(sub_help.code == 0);
  CHECK(sub_help.out.find("--n") != std::string::npos);

  RunResult version = run_tool("--version");
  CHECK(version.code == 0);
  CHECK(version.out == "0.1.0\n");
}

TEST_CASE("--output writes the exact report bytes to a file and keeps stdout empty") {
  const std::filesystem::path tmp =
      std::filesystem::temp_directory_path() / "fermatci_cli_output_test.txt";
  std::filesystem::remove(tmp);
  RunResult r = run_tool("betti --degrees 2,2 --n 5 --output " + tmp.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read_file(tmp.string()) == read_file(golden_dir() + "/betti_2_2_5.txt"));
  std::filesystem::remove(tmp);
}

TEST_CASE("--timing adds a timing field to text and json but never to csv") {
  RunResult text = run_tool("betti --degrees 2,2 --n 5 --timing");
  CHECK(text.code == 0);
  CHECK(text.out.find("\ntiming_ms: ") != std::string::npos);

  RunResult js = run_tool("betti --degrees 2,2 --n 5 --format json --timing");
  CHECK(js.code == 0);
  CHECK(js.out.find("\"timing_ms\":") != std::string::npos);

  RunResult csv = run_tool("scan-hodge --format csv --timing");
  CHECK(csv.code == 0);
  CHECK(csv.out == read_file(golden_dir() + "/scan_hodge_default.csv"));
}

TEST_CASE("worker count comes from the flag with environment fallback") {
  RunResult flag = run_tool("decomp --n 3 --r 2 --d 3 --workers 2");
  CHECK(flag.out.find("workers: 2\n") != std::string::npos);

  RunResult env = run_shell("FERMATCI_WORKERS=3 " + bin_path() +
                            " decomp --n 3 --r 2 --d 3 2>/dev/null");
  CHECK(env.out.find("workers: 3\n") != std::string::npos);

  RunResult both = run_shell("FERMATCI_WORKERS=3 " + bin_path() +
                             " decomp --n 3 --r 2 --d 3 --workers 2 2>/dev/null");
  CHECK(both.out.find("workers: 2\n") != std::string::npos);

  // The worker count never changes the mathematical payload.
  RunResult one = run_tool("decomp --n 4 --r 2 --d 3 --workers 1 --format csv");
  RunResult four = run_tool("decomp --n 4 --r 2 --d 3 --workers 4 --format csv");
  CHECK(one.out == four.out);
}

TEST_CASE("failing verdicts put the witness in the report body") {
  RunResult quadric = run_tool("faithful --n 5 --r 2 --d 2");
  CHECK(quadric.code == 1);
  CHECK(quadric.out.find("witness: 0 1 1 0 0 0\n") != std::string::npos);
  CHECK(quadric.out.find("verdict: not_faithful\n") != std::string::npos);

  RunResult aut = run_tool("aut-oracle --n 3 --r 2 --d 3");
  CHECK(aut.code == 1);
  CHECK(aut.out.find("admissible: (0 1)(2 3)") != std::string::npos);
  CHECK(aut.out.find("verdict: non_generic\n") != std::string::npos);
}
