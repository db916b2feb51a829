#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

fs::path work_dir() {
  static fs::path d = [] {
    fs::path p = fs::temp_directory_path() / "burnside_cli_test";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return d;
}

RunResult run(const std::string& args) {
  fs::path out = work_dir() / "out.txt";
  std::string cmd = std::string(BURNSIDE_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(out);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path p = work_dir() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("check-triality: pass, mathematical failure, format error") {
  fs::path good = write_file("ad_c5.json", R"({"construct": "abelian_doubling", "base": {"construct": "cyclic", "n": 5}})");
  RunResult ok = run("check-triality " + good.string());
  CHECK(ok.code == 0);
  CHECK(ok.out.find("pass  triality_identity") != std::string::npos);
  CHECK(ok.out.find("seed=") != std::string::npos);

  // sigma swaps two elements of C_4: a permutation but not an automorphism
  fs::path bad = write_file("bad_sigma.json",
                            R"({"order": 4, "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],)"
                            R"( "rho": [0,1,2,3], "sigma": [0,2,1,3]})");
  RunResult fail = run("check-triality " + bad.string());
  CHECK(fail.code == 1);
  CHECK(fail.out.find("fail  sigma_automorphism") != std::string::npos);

  fs::path trunc = write_file("trunc.json", R"({"order": 3, "table": [[0,1)");
  CHECK(run("check-triality " + trunc.string()).code == 2);
  CHECK(run("check-triality " + (work_dir() / "missing.json").string()).code == 2);
}

TEST_CASE("extract-loop emits the loop table with a Moufang verdict") {
  fs::path good = work_dir() / "ad_c5.json";
  RunResult r = run("--json extract-loop " + good.string());
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["loop"]["order"] == 5);
  CHECK(j["verdict"] == "pass");
  CHECK(j["associative"] == true);
  CHECK(j["moufang"].size() == 2);

  fs::path triv = write_file("trivial.json",
                             R"({"construct": "abelian_doubling", "base": {"construct": "cyclic", "n": 1}})");
  json t = json::parse(run("--json extract-loop " + triv.string()).out);
  CHECK(t["loop"]["order"] == 1);
}

TEST_CASE("burnside-pipeline on abelian_doubling(C_5xC_5)") {
  fs::path f = write_file("ad_c5sq.json",
                          R"({"construct": "abelian_doubling",)"
                          R"( "base": {"construct": "elementary_abelian", "p": 5, "k": 2}})");
  RunResult r = run("--json burnside-pipeline " + f.string() + " --p 5 --n 1");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["verdict"] == "pass");
  CHECK(j["p_pow_dim_h"] == 25);
  CHECK(j["u_order"] == 25);
  CHECK(j["h_nilpotency_class"] == 1);
  // non-p-group for the requested prime: mathematical failure
  CHECK(run("burnside-pipeline " + f.string() + " --p 7 --n 1").code == 1);
}

TEST_CASE("burnside-pipeline on the 3-dimensional example reports expected failures") {
  fs::path f = write_file("ex4.json", R"({"construct": "example_4", "p": 5, "sigma_sign": -1})");
  RunResult r = run("burnside-pipeline " + f.string() + " --p 5 --n 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("[fail (expected)] Lemma 4.4") != std::string::npos);
  CHECK(r.out.find("VERDICT: pass") != std::string::npos);
}

TEST_CASE("free-malcev tables and cap handling") {
  RunResult r = run("--json free-malcev --m 2 --max-degree 3");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["free"]["totals_by_degree"] == json({2, 1, 2}));

  RunResult e = run("--json free-malcev --m 2 --max-degree 5 --engel-p 5 --engel-n 1");
  REQUIRE(e.code == 0);
  json je = json::parse(e.out);
  CHECK(je["engel_quotient"]["totals_by_degree"] == je["free"]["totals_by_degree"]);  // no bite below degree 6

  RunResult cap = run("free-malcev --m 2 --max-degree 9");
  CHECK(cap.code == 1);
  CHECK(cap.out.find("cap") != std::string::npos);
}

TEST_CASE("verify-lemmas over a directory fleet") {
  fs::path dir = work_dir() / "fleet";
  fs::create_directories(dir);
  std::ofstream(dir / "a_c5.json") << R"({"construct": "abelian_doubling", "base": {"construct": "cyclic", "n": 5}})";
  std::ofstream(dir / "ex4.json") << R"({"construct": "example_4", "p": 5, "sigma_sign": -1})";
  RunResult r = run("verify-lemmas --all --fleet " + dir.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("fail (expected)") != std::string::npos);
  CHECK(r.out.find("VERDICT: pass") != std::string::npos);

  fs::path empty = work_dir() / "empty_fleet";
  fs::create_directories(empty);
  RunResult e = run("verify-lemmas --all --fleet " + empty.string());
  CHECK(e.code == 1);
  CHECK(e.out.find("no inputs") != std::string::npos);

  CHECK(run("verify-lemmas").code == 2);  // --all is required
}

TEST_CASE("flag misuse is an input error") {
  CHECK(run("burnside-pipeline").code == 2);
  CHECK(run("no-such-command").code == 2);
}
