#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tck/finite_group.hpp"
#include "tck/serialize.hpp"

using namespace tck;

namespace {

struct Run {
  int code = 0;
  std::string text;
  Json json;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  Run r;
  r.code = run_cli(args, out);
  r.text = out.str();
  r.json = Json::parse(r.text, nullptr, false);
  return r;
}

const char* kS3 = R"({"encoding":"perm","generators":[[1,0,2],[1,2,0]]})";

}  // namespace

TEST_CASE("report envelope") {
  auto r = run({"spectrum", "zn", "--matrix", "[[-1]]"});
  CHECK(r.code == 0);
  REQUIRE_FALSE(r.json.is_discarded());
  CHECK(r.json["status"] == "ok");
  CHECK(r.json["version"] == kToolkitVersion);
  CHECK(r.json["payload"]["reidemeister"] == 2);
  CHECK_FALSE(r.json.contains("timing_ms"));
  auto t = run({"--timing", "spectrum", "zn", "--matrix", "[[-1]]"});
  CHECK(t.json.contains("timing_ms"));
}

TEST_CASE("root and chevalley commands") {
  auto r = run({"root", "info", "A2"});
  CHECK(r.code == 0);
  CHECK(r.json["payload"]["roots"].size() == 6);
  CHECK(r.json["payload"]["dimension"] == 8);
  CHECK(r.json["payload"]["diagram_symmetries"].size() == 2);
  CHECK(r.json["payload"]["structure_constants"].size() == 12);
  CHECK(run({"root", "info", "--type", "G2"}).json["payload"]["root_count"] == 12);
  CHECK(run({"root", "info", "A1"}).json["payload"]["structure_constants"].empty());

  auto bad = run({"root", "info", "D3"});
  CHECK(bad.code == 1);
  CHECK(bad.json["status"] == "error");
  CHECK(bad.json["error"]["code"] == "domain_error");

  auto h = run({"chevalley", "gen", "--type", "A1", "--kind", "h", "--root", "1", "--t", "2/1"});
  CHECK(h.code == 0);
  Json m = h.json["payload"]["matrix"];
  CHECK(m[0][0] == 4);
  CHECK(m[1][1] == "1/4");
  CHECK(m[2][2] == 1);
  CHECK(run({"chevalley", "gen", "--type", "A1", "--kind", "n", "--root", "1", "--t", "0"}).code == 1);
  CHECK(run({"chevalley", "gen", "--type", "A1", "--kind", "q", "--root", "1", "--t", "1"}).code == 2);
}

TEST_CASE("twisted commands") {
  auto r = run({"twisted", "reidemeister", "--group", kS3});
  CHECK(r.code == 0);
  CHECK(r.json["payload"]["reidemeister"] == 3);
  CHECK(r.json["payload"]["order"] == 6);

  auto c = run({"twisted", "classes", "--group", kS3});
  CHECK(c.code == 0);

  FiniteGroup q8 = quaternion_group();
  Json gens = Json::array();
  for (auto g : q8.generators()) gens.push_back(q8.element(g));
  Json desc = {{"encoding", "perm"}, {"generators", gens}};
  auto iso = run({"twisted", "isogredience", "--group", desc.dump()});
  CHECK(iso.code == 0);
  CHECK(iso.json["payload"]["count"] == 4);

  // group from a file
  std::string path = "test_cli_group.json";
  {
    std::ofstream f(path);
    f << kS3;
  }
  CHECK(run({"twisted", "reidemeister", "--group", path}).json["payload"]["reidemeister"] == 3);
  std::remove(path.c_str());

  // an image assignment that is not an automorphism
  auto bad = run({"twisted", "reidemeister", "--group", kS3, "--aut", R"({"images":[[0,1,2],[0,1,2]]})"});
  CHECK(bad.code == 1);
  CHECK(bad.json["error"]["code"] == "domain_error");
  auto junk = run({"twisted", "reidemeister", "--group", "{not json"});
  CHECK(junk.code == 1);
  CHECK(junk.json["status"] == "error");
}

TEST_CASE("spectrum commands") {
  CHECK(run({"spectrum", "zn", "--matrix", "[[2,1],[1,1]]"}).json["payload"]["reidemeister"] == 1);
  CHECK(run({"spectrum", "zn", "--matrix", "[[1,0],[0,1]]"}).json["payload"]["reidemeister"] == "infinity");
  CHECK(run({"spectrum", "zn", "--matrix", "[[2,0],[0,1]]"}).code == 1);

  auto l5 = run({"spectrum", "lamplighter", "--n", "5"});
  CHECK(l5.code == 0);
  CHECK(l5.json["payload"]["r_infinity"] == false);
  CHECK(run({"spectrum", "lamplighter", "--n", "6"}).json["payload"]["r_infinity"] == true);

  auto h = run({"spectrum", "heisenberg", "--matrix", "[[0,1],[1,1]]"});
  CHECK(h.json["payload"]["reidemeister"] == 2);
  auto hm = run({"spectrum", "heisenberg", "--matrix", "[[0,1],[1,1]]", "--modulus", "5"});
  CHECK(hm.json["payload"]["direct_count"] == 1);
  CHECK(run({"spectrum", "heisenberg", "--matrix", "[[0,1],[1,1]]", "--modulus", "2"}).code == 1);

  auto c = run({"spectrum", "metabelian", "--r", "2", "--s", "1/2", "--p", "2", "--member", "6"});
  CHECK(c.json["payload"]["case"] == "c");
  CHECK(c.json["payload"]["contains"] == true);
  auto a = run({"spectrum", "metabelian", "--r", "1", "--s", "1", "--p", "3", "--member", "6"});
  CHECK(a.json["payload"]["contains"] == false);
  CHECK(run({"spectrum", "metabelian", "--r", "3", "--s", "1", "--p", "2"}).code == 1);
}

TEST_CASE("witness command") {
  auto r = run({"witness", "run", "--type", "A2", "--count", "6", "--trdeg", "1", "--scale", "2", "--index", "3"});
  CHECK(r.code == 0);
  CHECK(r.json["payload"]["verdict"] == "obstructed");
  auto i1 = run({"witness", "run", "--type", "A2", "--count", "6", "--index", "1"});
  CHECK(i1.json["payload"]["verdict"] == "inconclusive");
  CHECK(run({"witness", "run", "--type", "A2", "--count", "0"}).code == 1);
  auto sw = run({"witness", "run", "--type", "A2", "--count", "4", "--index", "3", "--sigma", "1,0"});
  CHECK(sw.code == 0);
  CHECK(sw.json["payload"]["verdict"] == "obstructed");
}

TEST_CASE("suite command") {
  auto none = run({"verify", "suite", "--filter", "nonexistent"});
  CHECK(none.code == 0);
  CHECK(none.json["status"] == "ok");
  CHECK(none.json["payload"]["checks"].empty());
  CHECK(none.json["payload"].contains("warning"));

  auto l1 = run({"verify", "suite", "--filter", "lemma1"});
  CHECK(l1.code == 0);
  REQUIRE(l1.json["payload"]["checks"].size() == 1);
  CHECK(l1.json["payload"]["checks"][0]["passed"] == true);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  auto u = run({"frobnicate"});
  CHECK(u.code == 2);
  CHECK(u.json["error"]["code"] == "usage_error");
  CHECK(run({"spectrum", "nope"}).code == 2);
  CHECK(run({"spectrum", "lamplighter", "--n", "five"}).code == 2);
  CHECK(run({"root", "info", "--bogus-flag"}).code == 2);
  std::ostringstream out;
  CHECK(run_cli({"--help"}, out) == 0);
  CHECK(out.str().find("spectrum") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  std::vector<std::vector<std::string>> cmds = {
      {"root", "info", "D4"},
      {"witness", "run", "--type", "A3", "--count", "4", "--index", "3", "--rho", "1"},
      {"twisted", "classes", "--group", kS3},
      {"spectrum", "zn", "--n", "3", "--target", "14"},
  };
  for (const auto& c : cmds) {
    auto a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.text == b.text);
  }
}
