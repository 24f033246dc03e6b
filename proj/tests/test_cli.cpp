#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

fs::path sandbox() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "tropcount-cli-test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  fs::path out = sandbox() / "stdout.txt";
  std::string cmd = "cd " + sandbox().string() + " && TROPICAL_CACHE_DIR=" +
                    (sandbox() / "cache").string() + " " + TROPCOUNT_CLI_PATH + " " + args + " > " +
                    out.string() + " 2> " + (sandbox() / "stderr.txt").string();
  int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(status), ss.str()};
}

}  // namespace

TEST_CASE("count reports the cubic numbers") {
  RunResult r = run("count --spec p2:3 --no-cache");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["counts"]["complex_total"] == 12);
  CHECK(j["counts"]["complex_irreducible"] == 12);
  CHECK(j["counts"]["welschinger"] == 8);
  CHECK(j["diagnostics"]["rank_violations"] == 0);
}

TEST_CASE("count of a line is trivial") {
  RunResult r = run("count --spec p2:1 --no-cache");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["counts"]["complex_total"] == 1);
  CHECK(j["counts"]["welschinger"] == 1);
}

TEST_CASE("exit codes distinguish failure modes") {
  CHECK(run("count --spec p2:3 --genus 1 --kinds welschinger --no-cache").exit_code == 3);
  CHECK(run("count --spec p2:0 --no-cache").exit_code == 2);
  CHECK(run("count --spec nonsense --no-cache").exit_code == 2);
  CHECK(run("count --spec p2:3 --genus 7 --no-cache").exit_code == 2);
  CHECK(run("count --spec p2:3 --lambda '1,1;0,0' --no-cache").exit_code == 2);
}

TEST_CASE("genus one total works without the flag when welschinger is not requested") {
  RunResult r = run("count --spec p2:3 --genus 1 --kinds complex_total --no-cache");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["counts"]["complex_total"] == 1);
  CHECK(j["counts"]["welschinger"].is_null());
}

TEST_CASE("cache round trip is byte identical") {
  RunResult a = run("count --spec quadric:2,2");
  RunResult b = run("count --spec quadric:2,2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  // corrupt every cache entry; the hash check forces a recompute
  for (auto& e : fs::directory_iterator(sandbox() / "cache")) {
    std::ifstream in(e.path());
    std::string text((std::istreambuf_iterator<char>(in)), {});
    in.close();
    size_t pos = text.find("\"complex_total\": 12");
    if (pos == std::string::npos) continue;
    text.replace(pos, 19, "\"complex_total\": 99");
    std::ofstream out(e.path());
    out << text;
  }
  RunResult c = run("count --spec quadric:2,2");
  CHECK(c.out == a.out);
}

TEST_CASE("paths listing matches the stream") {
  RunResult r = run("paths --spec p2:1 --list");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "[[0,1],[0,0],[1,0]]\n");
}

TEST_CASE("subdivisions of the short conic path") {
  RunResult r = run("subdivisions --spec p2:1 --path [[0,1],[0,0],[1,0]]");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["plus"].size() == 1);
  CHECK(j["minus"].size() == 1);
  REQUIRE(j["assembled"].size() == 1);
  CHECK(j["assembled"][0]["rank"] == 2);
  CHECK(j["assembled"][0]["multiplicity"] == 1);
}

TEST_CASE("tropical command renders and reports") {
  RunResult r = run("tropical --support [[0,0],[1,0],[0,1]] --lift [0,0,0] --svg line.svg --json");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["rays"].size() == 3);
  CHECK(j["balanced"] == true);
  REQUIRE(fs::exists(sandbox() / "line.svg"));
  // byte determinism of the rendering
  RunResult again =
      run("tropical --support [[0,0],[1,0],[0,1]] --lift [0,0,0] --svg line2.svg --json");
  REQUIRE(again.exit_code == 0);
  std::ifstream f1(sandbox() / "line.svg"), f2(sandbox() / "line2.svg");
  std::string s1((std::istreambuf_iterator<char>(f1)), {});
  std::string s2((std::istreambuf_iterator<char>(f2)), {});
  CHECK(s1 == s2);
  CHECK(s1.find("<svg") != std::string::npos);
}

TEST_CASE("bound command checks the inequalities") {
  RunResult r = run("bound --spec p2:2 --check");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["bound_holds"] == true);
}

TEST_CASE("verify oracle prints the recursion value") {
  RunResult r = run("verify --oracle kontsevich --degree 4");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "620\n");
}

TEST_CASE("contribution files are identical across worker counts") {
  RunResult a = run("count --spec p2:3 --no-cache --workers 1 --contributions w1.jsonl");
  RunResult b = run("count --spec p2:3 --no-cache --workers 4 --contributions w4.jsonl");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(a.out == b.out);
  std::ifstream f1(sandbox() / "w1.jsonl"), f2(sandbox() / "w4.jsonl");
  std::string s1((std::istreambuf_iterator<char>(f1)), {});
  std::string s2((std::istreambuf_iterator<char>(f2)), {});
  CHECK(s1 == s2);
  CHECK_FALSE(s1.empty());
}

TEST_CASE("contributions file and svg emission") {
  RunResult r = run("count --spec p2:2 --no-cache --contributions conic.jsonl");
  REQUIRE(r.exit_code == 0);
  std::ifstream in(sandbox() / "conic.jsonl");
  std::string line;
  int lines = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++lines;
  CHECK(lines == 1);
  RunResult s = run("emit-svg --contributions conic.jsonl --outdir pics");
  REQUIRE(s.exit_code == 0);
  CHECK(fs::exists(sandbox() / "pics" / "subdivision_00000.svg"));
}
