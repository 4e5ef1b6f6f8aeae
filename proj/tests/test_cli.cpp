#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "picardium/cli.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

// A scratch directory per test run, with the instance catalog redirected into
// it so tests never touch (or depend on) the user's cache.
struct CliSandbox {
  fs::path dir;

  CliSandbox() {
    dir = fs::temp_directory_path() / ("picardium-cli-test-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir / "cache");
    ::setenv("PICARDIUM_CACHE", (dir / "cache").c_str(), 1);
  }
  ~CliSandbox() {
    fs::remove_all(dir);
    ::unsetenv("PICARDIUM_CACHE");
  }

  std::string write(const std::string& name, const std::string& text) {
    fs::path p = dir / name;
    std::ofstream out(p, std::ios::binary);
    out << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  static Json load(const std::string& p) { return Json::parse(slurp(p)); }
};

int run(std::initializer_list<std::string> args) {
  return picardium::run_command(std::vector<std::string>(args));
}

const char* kCtxScc42 = "cyclic = 4\ncocycle_k = 2\n";
const char* kSub02 = "elements = [0, 2]\n";

}  // namespace

TEST_CASE("check-cocycle accepts a genuine 3-cocycle and rejects a non-cocycle") {
  CliSandbox sb;
  // one-dimensional standard cocycle on Z/2: value 1,1,1 -> zeta_2
  std::string good = sb.write("good.toml",
                              "size = 2\nmul = [[0, 1], [1, 0]]\n"
                              "degree = 3\norder = 2\n[values]\n\"1,1,1\" = 1\n");
  CHECK(run({"check-cocycle", good, "--out", sb.path("good.json")}) == 0);
  Json g = CliSandbox::load(sb.path("good.json"));
  CHECK(g["passed"].get<bool>());
  CHECK(g["records"].size() == 2);
  CHECK(g["records"][0]["anchor"] == "cocycle-check:0");

  // a normalized cochain on Z/3 that fails the cocycle condition
  std::string bad = sb.write("bad.toml",
                             "size = 3\nmul = [[0,1,2],[1,2,0],[2,0,1]]\n"
                             "degree = 3\norder = 3\n[values]\n\"1,1,1\" = 1\n");
  CHECK(run({"check-cocycle", bad, "--out", sb.path("bad.json")}) == 1);
  Json b = CliSandbox::load(sb.path("bad.json"));
  CHECK_FALSE(b["passed"].get<bool>());
  CHECK(b["records"][1]["status"] == "fail");
  // the witness names the first offending tuple
  std::string w = b["records"][1]["witness"].get<std::string>();
  CHECK(w.find("d at (") != std::string::npos);
}

TEST_CASE("trivialise solves the restricted associator and hits the catalog on rerun") {
  CliSandbox sb;
  std::string ctx = sb.write("ctx.toml", kCtxScc42);
  std::string sub = sb.write("sub.toml", kSub02);

  CHECK(run({"trivialise", "--psi", ctx, "--subgroup", sub, "--out", sb.path("r1.json")}) == 0);
  Json r1 = CliSandbox::load(sb.path("r1.json"));
  CHECK(r1["passed"].get<bool>());
  CHECK_FALSE(r1["cached"].get<bool>());
  CHECK(r1["result"]["solvable"].get<bool>());
  CHECK(r1["result"]["solution_count"].get<long>() == 16);
  CHECK(r1["result"]["class_count"].get<long>() == 1);
  CHECK(r1["manifest"]["tool"] == "picardium 0.1.0");

  // second run is served from the catalog
  CHECK(run({"trivialise", "--psi", ctx, "--subgroup", sub, "--out", sb.path("r2.json")}) == 0);
  Json r2 = CliSandbox::load(sb.path("r2.json"));
  CHECK(r2["cached"].get<bool>());

  // determinism: two warm runs produce byte-identical reports
  CHECK(run({"trivialise", "--psi", ctx, "--subgroup", sub, "--out", sb.path("r3.json")}) == 0);
  CHECK(CliSandbox::slurp(sb.path("r2.json")) == CliSandbox::slurp(sb.path("r3.json")));

  // the catalog lists the stored instance and gc clears it
  CHECK(run({"catalog", "list", "--out", sb.path("cat.json")}) == 0);
  Json cat = CliSandbox::load(sb.path("cat.json"));
  REQUIRE(cat["entries"].size() == 1);
  std::string summary = cat["entries"][0]["summary"].get<std::string>();
  CHECK(summary.find("solvable") != std::string::npos);
  CHECK(run({"catalog", "gc", "--out", sb.path("gc.json")}) == 0);
  CHECK(CliSandbox::load(sb.path("gc.json"))["dropped"].get<long>() == 1);
  CHECK(run({"catalog", "list", "--out", sb.path("cat2.json")}) == 0);
  CHECK(CliSandbox::load(sb.path("cat2.json"))["entries"].empty());
}

TEST_CASE("build-q output round-trips through check-algebra") {
  CliSandbox sb;
  std::string ctx = sb.write("ctx.toml", kCtxScc42);
  std::string sub = sb.write("sub.toml", kSub02);

  CHECK(run({"build-q", "--ctx", ctx, "--subgroup", sub, "--out", sb.path("q.json")}) == 0);
  Json q = CliSandbox::load(sb.path("q.json"));
  CHECK(q["passed"].get<bool>());
  CHECK(q["algebra_report"]["frobenius"].get<bool>());

  // check-algebra accepts the build-q report directly
  CHECK(run({"check-algebra", sb.path("q.json"), "--ctx", ctx, "--out", sb.path("a.json")}) == 0);
  Json a = CliSandbox::load(sb.path("a.json"));
  CHECK(a["passed"].get<bool>());

  // and also a bare algebra file
  std::string bare = sb.write("bare.json", q["algebra"].dump());
  CHECK(run({"check-algebra", bare, "--ctx", ctx, "--out", sb.path("a2.json")}) == 0);
  CHECK(CliSandbox::load(sb.path("a2.json"))["passed"].get<bool>());
}

TEST_CASE("dims reports exact cyclotomic dimensions") {
  CliSandbox sb;
  std::string ctx = sb.write("ctx.toml", kCtxScc42);
  std::string obj = sb.write("x.json", "{\"mult\": {\"1\": 1}}");
  CHECK(run({"dims", "--ctx", ctx, "--object", obj, "--out", sb.path("d.json")}) == 0);
  Json d = CliSandbox::load(sb.path("d.json"));
  // dim_l of the degree-1 simple under this associator is -1
  CHECK(d["dim_l"]["coeffs"][0] == "-1");
  CHECK(d["dim_r"]["coeffs"][0] == "-1");
}

TEST_CASE("fixed-algebra and the named verification pipelines succeed") {
  CliSandbox sb;
  std::string ctx = sb.write("ctx.toml", kCtxScc42);
  std::string sub = sb.write("sub.toml", kSub02);

  CHECK(run({"fixed-algebra", "--ctx", ctx, "--subgroup", sub, "--out", sb.path("f.json")}) == 0);
  Json f = CliSandbox::load(sb.path("f.json"));
  CHECK(f["passed"].get<bool>());
  CHECK(f["absolutely_simple"].get<bool>());

  CHECK(run({"verify", "--theorem", "prop45", "--ctx", ctx, "--subgroup", sub, "--out",
             sb.path("v.json")}) == 0);
  Json v = CliSandbox::load(sb.path("v.json"));
  CHECK(v["passed"].get<bool>());
  for (const auto& rec : v["records"]) CHECK(rec["status"] == "pass");

  CHECK(run({"verify", "--theorem", "appendix", "--ctx", ctx, "--subgroup", sub, "--out",
             sb.path("ap.json")}) == 0);
  CHECK(CliSandbox::load(sb.path("ap.json"))["passed"].get<bool>());
}

TEST_CASE("schema errors exit with status 2 and a useful message") {
  CliSandbox sb;
  // non-associative multiplication table; the message names the failing triple
  std::string badg = sb.write("badg.toml",
                              "size = 5\nmul = [[0,1,2,3,4],[1,0,3,4,2],[2,3,4,0,1],"
                              "[3,4,1,2,0],[4,2,0,1,3]]\n"
                              "degree = 3\norder = 1\n");
  CHECK(run({"check-cocycle", badg, "--out", sb.path("e1.json")}) == 2);
  Json e1 = CliSandbox::load(sb.path("e1.json"));
  std::string msg = e1["error"].get<std::string>();
  CHECK(msg.find("not associative") != std::string::npos);
  CHECK(msg.find("(") != std::string::npos);  // the triple is spelled out

  // cochain that is not normalized
  std::string badc = sb.write("badc.toml",
                              "size = 2\nmul = [[0,1],[1,0]]\n"
                              "degree = 3\norder = 2\n[values]\n\"0,1,1\" = 1\n");
  CHECK(run({"check-cocycle", badc, "--out", sb.path("e2.json")}) == 2);
  CHECK(CliSandbox::load(sb.path("e2.json"))["error"].get<std::string>().find("normalized") !=
        std::string::npos);

  // subgroup that is not closed
  std::string ctx = sb.write("ctx.toml", kCtxScc42);
  std::string badsub = sb.write("badsub.toml", "elements = [0, 1]\n");
  CHECK(run({"trivialise", "--psi", ctx, "--subgroup", badsub, "--out", sb.path("e3.json")}) == 2);

  // unknown theorem token
  std::string sub = sb.write("sub.toml", kSub02);
  CHECK(run({"verify", "--theorem", "nonsense", "--ctx", ctx, "--subgroup", sub, "--out",
             sb.path("e4.json")}) == 2);
}
