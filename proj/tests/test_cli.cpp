#include "catch_amalgamated.hpp"

#include <filesystem>
#include <fstream>

#include "belyi/cli.hpp"

using belyi::json;
using belyi::cli::run;

namespace {

json run_json(std::vector<std::string> args, int expected_code) {
  args.insert(args.begin(), "--json");
  const auto r = run(args);
  INFO(r.out);
  CHECK(r.exit_code == expected_code);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("report envelope") {
  const auto j = run_json({"cheb", "--n", "4"}, 0);
  CHECK(j["status"] == "ok");
  CHECK(j["command"][1] == "cheb");
  CHECK(j["payload"]["pell"] == true);
}

TEST_CASE("table6 reproduces the degree-6 counts") {
  const auto j = run_json({"table6"}, 0);
  CHECK(j["payload"]["all_match"] == true);
  CHECK(j["payload"]["cases"]["II"]["count"] == 18);
  CHECK(j["payload"]["cases"]["IV"]["count"] == 2);
}

TEST_CASE("enumerate with and without types") {
  auto j = run_json({"enumerate", "--degree", "6", "--type0", "2,2,1,1", "--type1", "2,2,2"}, 0);
  CHECK(j["payload"]["total_pairs"] == 3);
  j = run_json({"enumerate", "--degree", "5"}, 0);
  CHECK(j["payload"]["total_pairs"].get<int>() + 2 == 42);
  run_json({"enumerate", "--degree", "6", "--type0", "2,2,1", "--type1", "2,2,2"}, 3);
  run_json({"enumerate", "--degree", "10", "--type0", "2,2,2,2,1,1", "--type1", "2,2,2,2,2"}, 3);
}

TEST_CASE("classify") {
  auto j = run_json({"classify", "--degree", "6", "--tau0", "(1,3,6)(4,5)", "--tau1", "(1,2)(3,5)"}, 0);
  CHECK(j["payload"]["real_extended"] == false);
  CHECK(j["payload"]["kind"] == "other");
  j = run_json({"classify", "--pair", R"j({"degree":4,"tau0":"(1,2)","tau1":"(2,3,4)"})j"}, 0);
  CHECK(j["payload"]["kind"] == "belyi");
  run_json({"classify", "--degree", "6", "--tau0", "(1,2)(3,4)", "--tau1", "(2,6,5,4,3)"}, 2);
  run_json({"classify", "--degree", "6", "--tau0", "(1,2", "--tau1", "()"}, 3);
  run_json({"classify", "--pair", "{not json"}, 3);
}

TEST_CASE("belyi and special") {
  auto j = run_json({"belyi", "--m", "3", "--r", "4"}, 0);
  CHECK(j["payload"]["value_at_critical_point"] == "1");
  j = run_json({"belyi", "--special"}, 0);
  CHECK(j["payload"]["derivative_matches"] == true);
  run_json({"belyi", "--m", "0", "--r", "2"}, 3);
}

TEST_CASE("dessin output and DOT file") {
  const auto path = std::filesystem::temp_directory_path() / "belyi_test_dessin.dot";
  auto j = run_json({"dessin", "--degree", "9", "--tau0", "(2,8,9)(4,6,5)", "--tau1", "(1,6,7,4,3,9,2)",
                     "--dot", path.string()},
                    0);
  CHECK(j["payload"]["genus"] == 0);
  CHECK(j["payload"]["faces"] == 3);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("graph", 0) == 0);
  std::filesystem::remove(path);
  run_json({"dessin", "--degree", "4", "--tau0", "(1,2)", "--tau1", "(3,4)"}, 3);
}

TEST_CASE("random dessins are seeded") {
  const auto a = run({"--json", "--seed", "5", "dessin", "--random", "--degree", "8"});
  const auto b = run({"--json", "--seed", "5", "dessin", "--random", "--degree", "8"});
  CHECK(a.out == b.out);
  CHECK(a.exit_code == 0);
  const auto c = run({"--json", "--seed", "6", "dessin", "--random", "--degree", "8"});
  CHECK(json::parse(c.out)["payload"]["pair"] != json::parse(a.out)["payload"]["pair"]);
}

TEST_CASE("difffactors families") {
  CHECK(run_json({"difffactors", "--family", "cheb-sum", "--n", "5"}, 0)["payload"]["factors"] == 5);
  CHECK(run_json({"difffactors", "--family", "schur", "--n", "9"}, 0)["payload"]["factors"] == 4);
  CHECK(run_json({"difffactors", "--family", "fano"}, 0)["payload"]["factors"] == 2);
  CHECK(run_json({"difffactors", "--family", "gcd", "--n", "6", "--m", "9"}, 0)["payload"]["branches_at_infinity"] == 3);
  const std::string input = R"({"n":2,"m":2,"labels":[{"name":"0","tau":[[1,2]],"rho":[[1,2]]}]})";
  CHECK(run_json({"difffactors", "--input", input}, 0)["payload"]["factors"] == 2);
  run_json({"difffactors", "--family", "nope"}, 3);
}

TEST_CASE("beauville search, verify and reality round trip") {
  auto j = run_json({"beauville-search", "--group", "psl2:7"}, 0);
  REQUIRE(j["payload"]["outcome"] == "found");
  const auto structure = j["payload"]["structure"].dump();
  auto v = run_json({"beauville-verify", "--structure", structure}, 0);
  CHECK(v["payload"]["valid"] == "yes");
  auto r = run_json({"beauville-reality", "--structure", structure}, 0);
  CHECK(r["payload"]["verdict"] == "hypotheses-not-met");

  auto none = run_json({"beauville-search", "--group", "alt:5"}, 0);
  CHECK(none["payload"]["outcome"] == "exhausted");
  CHECK(none["payload"]["message"] == "none exists");

  auto bad = j["payload"]["structure"];
  bad["a2"] = bad["a1"];
  bad["c2"] = bad["c1"];
  auto b = run_json({"beauville-verify", "--structure", bad.dump()}, 2);
  CHECK(b["payload"]["valid"] == "no");
  CHECK(b["payload"].contains("common_element"));

  run_json({"beauville-search", "--group", "psl2:6"}, 3);
  run_json({"beauville-verify", "--structure", R"j({"group":"sym:5","a1":"(1,2)"})j"}, 3);
  run_json({"beauville-verify", "--structure", R"j({"group":"sl2:5","a1":[[1,1],[1,1]],"c1":[[1,0],[0,1]],"a2":[[1,0],[0,1]],"c2":[[1,0],[0,1]]})j"}, 3);
}

TEST_CASE("structure files are read with @") {
  const auto path = std::filesystem::temp_directory_path() / "belyi_test_structure.json";
  {
    std::ofstream out(path);
    out << R"({"group":"znxzn:5","a1":[1,0],"c1":[0,1],"a2":[1,2],"c2":[1,4]})";
  }
  auto r = run_json({"beauville-reality", "--structure", "@" + path.string()}, 0);
  CHECK(r["payload"]["verdict"] == "real-isomorphic");
  std::filesystem::remove(path);
  run_json({"beauville-verify", "--structure", "@/nonexistent/file.json"}, 3);
}

TEST_CASE("snexample and findprime") {
  auto j = run_json({"snexample", "--n", "8", "--p", "5"}, 0);
  CHECK(j["payload"]["reality"] == "not-isomorphic-to-conjugate");
  auto bad = run_json({"snexample", "--n", "7", "--p", "3"}, 3);
  CHECK(bad["payload"]["violations"].size() == 1);
  run_json({"snexample", "--n", "9", "--p", "5"}, 2);
  auto p = run_json({"findprime", "--n", "9"}, 0);
  CHECK(p["payload"]["prime"] == 5);
  CHECK(p["payload"]["lemma_prime"] == 7);
  auto none = run_json({"findprime", "--n", "7", "--bound", "4"}, 0);
  CHECK(none["payload"]["prime"].is_null());
  run_json({"findprime", "--n", "4"}, 3);
}

TEST_CASE("h4 and mixed-verify") {
  auto j = run_json({"h4"}, 0);
  CHECK(j["payload"]["order"] == 6969600);
  CHECK(j["payload"]["direct_check"]["valid"] == "yes");
  const auto quad = j["payload"]["mixed"];
  auto m = run_json({"mixed-verify", "--structure", quad.dump()}, 0);
  CHECK(m["payload"]["valid"] == "yes");
  auto bad = quad;
  bad["g"] = {{"h1", {{1, 0}, {0, 1}}}, {"h2", {{1, 0}, {0, 1}}}, {"k", 2}};
  auto b = run_json({"mixed-verify", "--structure", bad.dump()}, 2);
  CHECK(b["payload"]["g_outside_g0"] == false);
  auto q = j["payload"]["quadruple"];
  q["c2"] = q["a2"];
  auto h = run_json({"h4", "--no-verify", "--quadruple", q.dump()}, 2);
  CHECK(h["payload"]["hypotheses"][2]["holds"] == "no");
  run_json({"mixed-verify", "--structure", R"j({"group":"psl2:7","g0":"alt","a":[[1,1],[0,1]],"c":[[1,1],[0,1]],"g":[[1,1],[0,1]]})j"}, 3);
  run_json({"mixed-verify", "--structure", R"j({"group":"sym:5","g0":"alt","a":"(1,2,3)","c":"(1,4,5)","g":"(1,2)"})j"}, 2);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).exit_code == 3);
  CHECK(run({"frobnicate"}).exit_code == 3);
  CHECK(run({"cheb"}).exit_code == 3);
  CHECK(run({"cheb", "--n", "x"}).exit_code == 3);
  const auto help = run({"cheb", "--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("--n") != std::string::npos);
  const auto top = run({"--help"});
  CHECK(top.exit_code == 0);
  CHECK(top.out.find("beauville-search") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> cmds{
      {"--json", "enumerate", "--degree", "7"},
      {"--json", "--jobs", "3", "enumerate", "--degree", "7"},
      {"--json", "beauville-search", "--group", "alt:6"},
      {"--json", "--jobs", "2", "beauville-search", "--group", "alt:6"},
      {"--json", "difffactors", "--family", "schur", "--n", "12"}};
  for (const auto& c : cmds) CHECK(run(c).out == run(c).out);
  // sharding does not change the result
  auto strip = [](std::string s) { auto j = json::parse(s); j.erase("command"); return j.dump(); };
  CHECK(strip(run(cmds[0]).out) == strip(run(cmds[1]).out));
  CHECK(strip(run(cmds[2]).out) == strip(run(cmds[3]).out));
}
