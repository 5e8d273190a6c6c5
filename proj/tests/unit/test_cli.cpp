#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "grm/cli.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using grm::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("grmtool_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("family writes edge lists and a census sidecar") {
    const fs::path dir = scratch_dir("family");
    const Result r = invoke({"family", "--kind", "TT1", "--k", "2", "--emit", "edgelist", "--out", dir.string()});
    CHECK(r.code == 0);
    const fs::path file = dir / "TT1_k2_0.edges";
    REQUIRE(fs::exists(file));
    CHECK(fs::exists(dir / "TT1_k2.census.json"));
    std::ifstream in(file);
    const grm::Tree t = grm::build_tree(grm::parse_edge_list(in));
    CHECK(t.order() == 9);
    std::size_t edge_files = 0;
    for (const auto& entry : fs::directory_iterator(dir)) edge_files += entry.path().extension() == ".edges";
    CHECK(edge_files == 1);

    const Result idx = invoke({"index", "--tree", file.string(), "--lambda", "-2"});
    CHECK(idx.code == 0);
    CHECK(idx.out == "-12\n");
  }

  TEST_CASE("family honours the output-directory variable") {
    const fs::path dir = scratch_dir("env");
    ::setenv(grm::cli::kOutDirVariable, dir.string().c_str(), 1);
    const Result r = invoke({"family", "--kind", "spider", "--n", "7", "--delta", "3"});
    ::unsetenv(grm::cli::kOutDirVariable);
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "Spider_n7_d3_0.edges"));
  }

  TEST_CASE("index formats and rational lambda") {
    const fs::path dir = scratch_dir("index");
    const fs::path file = dir / "p5.edges";
    grm::cli::write_file_atomic(file.string(), "# path\n0 1\n1 2\n2 3\n3 4\n");
    CHECK(invoke({"index", "--tree", file.string(), "--lambda", "-1"}).out == "2\n");
    CHECK(invoke({"index", "--tree", file.string(), "--lambda", "1/2"}).out == "20\n");
    const Result j = invoke({"index", "--tree", file.string(), "--format", "json"});
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["grm"] == "0");
    CHECK(parsed["first_zagreb"] == "14");
  }

  TEST_CASE("usage errors exit with 2 and name the flag") {
    const Result missing = invoke({"index"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("--tree") != std::string::npos);
    const Result bad_lambda = invoke({"index", "--tree", "x", "--lambda", "0.5"});
    CHECK(bad_lambda.code == 2);
    CHECK(bad_lambda.err.find("--lambda") != std::string::npos);
    const Result bad_theorem = invoke({"verify", "--theorem", "9.9"});
    CHECK(bad_theorem.code == 2);
    CHECK(bad_theorem.err.find("--theorem") != std::string::npos);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"enumerate", "--n", "5", "--exact-deg"}).code == 2);
  }

  TEST_CASE("I/O errors name the path") {
    const Result r = invoke({"index", "--tree", "/nonexistent/tree.edges"});
    CHECK(r.code == 2);
    CHECK(r.err.find("/nonexistent/tree.edges") != std::string::npos);
  }

  TEST_CASE("enumerate") {
    const Result codes = invoke({"enumerate", "--n", "7"});
    CHECK(codes.code == 0);
    CHECK(std::count(codes.out.begin(), codes.out.end(), '\n') == 11);
    CHECK(invoke({"enumerate", "--n", "10", "--count"}).out == "106\n");
    CHECK(invoke({"enumerate", "--n", "5", "--max-deg", "4", "--exact-deg", "--emit", "census"}).out ==
          "n1=4 n4=1 | m14=4\n");
    const fs::path dir = scratch_dir("enumerate");
    const Result to_file = invoke({"enumerate", "--n", "6", "--emit", "edgelist", "--out", (dir / "six.txt").string()});
    CHECK(to_file.code == 0);
    CHECK(slurp(dir / "six.txt").find("# tree 5") != std::string::npos);
  }

  TEST_CASE("census") {
    const Result r = invoke({"census", "--n", "7", "--n3", "2", "--m22", "0", "--m23", "2", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["realizable"] == true);
    CHECK(j["grm_minus_2"] == "-4");
    CHECK(j["elimination_check"] == true);
    const Result d4 = invoke({"census", "--delta", "4", "--n", "9", "--m12", "2"});
    CHECK(d4.code == 0);
    CHECK(d4.out.find("realizable: no") != std::string::npos);
    CHECK(invoke({"census", "--n", "7", "--m12", "1"}).code == 2);
  }

  TEST_CASE("normalize emits one JSON object per line") {
    const fs::path dir = scratch_dir("normalize");
    const fs::path file = dir / "p8.edges";
    grm::cli::write_file_atomic(file.string(), "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n");
    const Result r = invoke({"normalize", "--tree", file.string()});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
      const auto j = nlohmann::json::parse(line);
      if (j.contains("rewrite")) CHECK(j["rewrite"] == "T1");
      ++count;
    }
    CHECK(count == 3);  // two contractions and the final summary
  }

  TEST_CASE("verify exit codes and report shape") {
    const Result ok = invoke({"verify", "--theorem", "3.2", "--n-min", "7", "--n-max", "11", "--format", "json",
                              "--jobs", "1"});
    CHECK(ok.code == 0);
    const auto j = nlohmann::json::parse(ok.out);
    CHECK(j["cells"].size() == 5);
    CHECK(j["version"] == "0.1.0");
    CHECK(j["config"]["n_min"] == 7);

    const Result fail = invoke({"verify", "--theorem", "3.2", "--n-min", "7", "--n-max", "12", "--format", "json",
                                "--jobs", "1"});
    CHECK(fail.code == 1);
    CHECK(nlohmann::json::parse(fail.out)["cells"].size() == 6);

    const fs::path dir = scratch_dir("verify");
    const fs::path report = dir / "r.csv";
    const std::vector<std::string> args{"verify", "--theorem", "2.1", "--n-max", "8", "--lambda", "-1",
                                        "--lambda", "1/2", "--format", "csv", "--jobs", "1", "--out",
                                        report.string()};
    CHECK(invoke(args).code == 0);
    const std::string first = slurp(report);
    CHECK(invoke(args).code == 0);
    CHECK(slurp(report) == first);
    CHECK_FALSE(fs::exists(report.string() + ".tmp"));
  }
}
