#include "doctest.h"

#include <set>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "radchar/qpoly.hpp"

using namespace radchar;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("census json for the extraspecial group") {
  auto r = run({"census", "--type", "C", "--n", "2", "--d", "1", "--q", "3", "--format", "json", "--no-timing"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["e"] == 0);
  CHECK(j["rows"][0]["count_at_q"] == "9");
  CHECK(j["rows"][1]["e"] == 1);
  CHECK(j["rows"][1]["count_at_q"] == "2");
  CHECK(qpoly_from_json(j["rows"][1]["count"]) == QPoly::q() - 1);
  CHECK(j["verdicts"]["sum_of_squares"] == true);
  CHECK(j["warnings"].size() == 1);
  CHECK(!j.contains("timing_ms"));
}

TEST_CASE("census json is deterministic without timing") {
  const std::vector<std::string> a{"census", "--type", "U", "--n", "3", "--d", "1", "--q", "3",
                                   "--format", "json", "--oracle", "--no-timing"};
  auto r1 = run(a), r2 = run(a);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  const json j = json::parse(r1.out);
  CHECK(j["oracle"]["verdict"] == "pass");
  CHECK(j["degree_convention"].get<std::string>().find("q^(2e)") != std::string::npos);
}

TEST_CASE("census oracle flags the printed unitary variant") {
  auto r = run({"census", "--type", "U", "--n", "2", "--d", "1", "--variant", "printed", "--q", "3", "--oracle",
                "--format", "json", "--no-timing"});
  CHECK(r.code == 1);
  const json j = json::parse(r.out);
  CHECK(j["oracle"]["verdict"] == "fail");
  CHECK(j["oracle"]["classes"]["brute"] == "83");
  CHECK(j["verdicts"]["sum_of_squares"] == false);
}

TEST_CASE("census oracle with corrected variant passes") {
  auto r = run({"census", "--type", "U", "--n", "2", "--d", "1", "--q", "3", "--oracle", "--no-timing"});
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle classes: brute 83, formula 83 match") != std::string::npos);
}

TEST_CASE("census abelian case and csv layout") {
  auto r = run({"census", "--type", "C", "--n", "2", "--d", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "type,n,d,r,e,degree,count_poly,count_at_q\nC,2,2,0,0,1,q^3,\n");
  CHECK(r.err.find("warning") != std::string::npos);

  auto b = run({"census", "--type", "C", "--n", "2", "--d", "1", "--format", "csv", "--basis", "qminus1"});
  CHECK(b.out.find("C,2,1,0,0,1,(q-1)^2 + 2(q-1) + 1,") != std::string::npos);
}

TEST_CASE("census usage errors") {
  CHECK(run({"census", "--type", "C", "--n", "2"}).code == 2);
  CHECK(run({"census", "--type", "X", "--n", "2", "--d", "1"}).code == 2);
  CHECK(run({"census", "--type", "U", "--n", "2", "--d", "2"}).code == 2);
  CHECK(run({"census", "--type", "C", "--n", "2", "--d", "1", "--oracle"}).code == 2);
  CHECK(run({"census", "--type", "C", "--n", "2", "--d", "1", "--q", "4"}).code == 2);
  CHECK(run({"census", "--type", "C", "--n", "2", "--d", "1", "--format", "xml"}).code == 2);
  CHECK(run({"census", "--type", "C", "--n", "2", "--d", "1", "--budget", "1000000000"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("census oracle refuses over budget") {
  auto r = run({"census", "--type", "C", "--n", "4", "--d", "2", "--q", "3", "--oracle", "--budget", "100"});
  CHECK(r.code == 2);
  CHECK(r.err.find("oracle refused") != std::string::npos);
  CHECK(r.err.find("100") != std::string::npos);
}

TEST_CASE("ranks command") {
  auto r = run({"ranks", "--class", "sym", "--n", "2", "--q", "3", "--brute", "--format", "json", "--no-timing"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["rows"][0]["brute"] == "1");
  CHECK(j["rows"][1]["brute"] == "8");
  CHECK(j["rows"][2]["brute"] == "18");
  CHECK(j["verdict"] == "pass");

  auto s = run({"ranks", "--class", "skew", "--n", "2", "--r", "1"});
  CHECK(s.code == 2);
  CHECK(s.err.find("skew-symmetric rank must be even") != std::string::npos);

  auto h = run({"ranks", "--class", "herm", "--n", "1", "--q", "3", "--brute", "--format", "json", "--no-timing"});
  CHECK(h.code == 0);
  const json hj = json::parse(h.out);
  CHECK(hj["printed_flagged"] == true);
  CHECK(hj["rows"][1]["match"] == true);
  CHECK(hj["rows"][1]["printed_match"] == false);

  CHECK(run({"ranks", "--class", "sym", "--n", "2", "--brute"}).code == 2);
}

TEST_CASE("verify command") {
  auto bad = run({"verify", "--suite", "ranks", "--q", "2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("odd prime power required") != std::string::npos);

  auto pos = run({"verify", "--suite", "positivity", "--max-n", "10", "--no-timing"});
  CHECK(pos.code == 0);
  CHECK(pos.out.find("failures: []") != std::string::npos);

  auto orb = run({"verify", "--suite", "orbits", "--q", "3", "--max-n", "3", "--format", "json", "--no-timing"});
  CHECK(orb.code == 0);
  const json j = json::parse(orb.out);
  CHECK(j["failures"].empty());
  std::set<std::string> labels;
  for (const auto& c : j["checks"]) labels.insert(c["check"].get<std::string>());
  for (const char* want : {"(C,2,1) q=3 census", "(C,3,1) q=3 census", "(C,3,2) q=3 census",
                           "(U,2,1) q=3 census"})
    CHECK(labels.count(want));

  auto pr = run({"verify", "--suite", "pairings", "--max-n", "3", "--no-timing"});
  CHECK(pr.code == 0);
  CHECK(run({"verify", "--suite", "nothing"}).code == 2);
}
