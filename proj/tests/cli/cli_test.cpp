#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "cli.hpp"

using namespace jl::cli;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result jl_run(std::vector<std::string> args, std::map<std::string, std::string> env = {}) {
  std::ostringstream out, err;
  EnvLookup lookup = [env](const std::string& k) -> std::optional<std::string> {
    auto it = env.find(k);
    if (it == env.end()) return std::nullopt;
    return it->second;
  };
  int code = run(args, out, err, lookup);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute in json") {
  Result r = jl_run({"--json", "compute", "S5"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["J"] == 120);
  CHECK(j["Jbar"] == 20);
  CHECK(j["method"] == "full-enumeration");
  CHECK(j["status"] == "exact");

  Json w = Json::parse(jl_run({"--json", "compute", "swap-A5"}).out);
  CHECK(w["J"] == 7200);
  CHECK(w["Jbar"] == 288);
  CHECK(w["method"] == "socle-shortcut");
}

TEST_CASE("exit codes") {
  CHECK(jl_run({"compute", "C7"}).code == 0);
  CHECK(jl_run({"compute", "S"}).code == 1);
  CHECK(jl_run({"frobnicate"}).code == 1);
  CHECK(jl_run({"--order-cap", "ten", "compute", "S5"}).code == 1);
  Result cap = jl_run({"--json", "--degree-cap", "8", "compute", "A5 * A5"});
  CHECK(cap.code == 2);
  Json partial = Json::parse(cap.out);
  CHECK(partial["status"] == "cap-exceeded");
  CHECK(jl_run({"--json", "compute", "A5 * A5 * A5 * A5 * A5 * A5 * A5"}).code == 3);
}

TEST_CASE("parse errors report the byte offset") {
  Result r = jl_run({"compute", "S5 * "});
  CHECK(r.code == 1);
  CHECK(r.err.find("5") != std::string::npos);
}

TEST_CASE("environment overrides and flag precedence") {
  Result env_json = jl_run({"compute", "S3"}, {{"JL_FORMAT", "json"}});
  Json parsed;
  CHECK_NOTHROW(parsed = Json::parse(env_json.out));
  Result flag_md = jl_run({"--md", "compute", "S3"}, {{"JL_FORMAT", "json"}});
  CHECK_THROWS(parsed = Json::parse(flag_md.out));
  CHECK(jl_run({"compute", "S5"}, {{"JL_ORDER_CAP", "10"}, {"JL_ELEMENT_CAP", "10"}}).code == 3);
  CHECK(jl_run({"--order-cap", "1000", "--element-cap", "20000", "compute", "S5"},
               {{"JL_ORDER_CAP", "10"}, {"JL_ELEMENT_CAP", "10"}})
            .code == 0);
  CHECK(jl_run({"compute", "S3"}, {{"JL_JOBS", "zero"}}).code == 1);

  RunConfig c = apply_env(default_config(), [](const std::string& k) -> std::optional<std::string> {
    if (k == "JL_TIME_BUDGET") return "7.5";
    return std::nullopt;
  });
  CHECK(c.time_budget == doctest::Approx(7.5));
}

TEST_CASE("csv and markdown") {
  Result csv = jl_run({"--csv", "--no-timing", "compute", "S5"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind(kReportCsvHeader, 0) == 0);
  CHECK(csv.out.find("S5,120,5,full-enumeration,exact,120,120,20,20") != std::string::npos);

  Result sub = jl_run({"subgroups", "S5"});
  CHECK(sub.out.find("156 subgroups in 19 classes") != std::string::npos);
  Result subcsv = jl_run({"--csv", "subgroups", "C6"});
  CHECK(subcsv.out == std::string(kSubgroupsCsvHeader) + "\nC6,1,1,1\nC6,2,1,1\nC6,3,1,1\nC6,6,1,1\n");  // one row per order

  Result cd = jl_run({"cd-lattice", "S3"});
  CHECK(cd.out.find("max measure 9") != std::string::npos);
}

TEST_CASE("ledger verification command") {
  Result r = jl_run({"--no-timing", "verify-paper", "--field", "R"});
  CHECK(r.code == 0);
  CHECK(r.out.find("J(Cr2(R)) = 120, Jbar(Cr2(R)) = 20") != std::string::npos);
  CHECK(r.out.find("FAILED") == std::string::npos);
  CHECK(r.out.find("axiom (geometry)") != std::string::npos);
  CHECK(r.out.find("axiom (checked: pgl2-real-list)") != std::string::npos);

  Json j = Json::parse(jl_run({"--json", "verify-paper", "--field", "C"}).out);
  CHECK(j["ok"] == true);

  Result all = jl_run({"--no-timing", "--jobs", "4", "verify-paper"});
  CHECK(all.code == 0);
  for (const char* line : {"J(Cr2(C)) = 7200", "J(Cr2(Q)) = 120", "J(Aut(P2(R))) = 60", "J(Aut(Quad31(R))) = 60"})
    CHECK(all.out.find(line) != std::string::npos);
  CHECK(jl_run({"verify-paper", "--field", "F7"}).code == 1);
}

TEST_CASE("report over a file of expressions") {
  auto path = std::filesystem::temp_directory_path() / "jl_cli_test_exprs.txt";
  {
    std::ofstream f(path);
    f << "# small groups\nS4\n\nA5 * C2\n(A5 * A5) : C2 [swap]\n";
  }
  Result r = jl_run({"--json", "--jobs", "2", "report", path.string()});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0]["J"] == 6);
  CHECK(j[1]["J"] == 60);  // C2 is normal and abelian
  CHECK(j[2]["J"] == 7200);

  {
    std::ofstream f(path);
    f << "S4\nS4 *\n";
  }
  CHECK(jl_run({"report", path.string()}).code == 1);
  std::filesystem::remove(path);
  CHECK(jl_run({"report", "/nonexistent/exprs.txt"}).code == 1);
}
