#include "cli.hpp"
#include "series_json.hpp"

#include "doctest.h"

#include <sstream>

using namespace lvoa;
using lvoa::tools::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = tools::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("kernel json for the B2 blue module") {
  auto r = run({"kernel", "--algebra", "B2", "--ell", "4", "--module", "blue", "--max-level", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["algebra"] == "B2");
  CHECK(j["rows"] == json::parse("[[2,1,1],[8,4,0]]"));
  CHECK(j["failures"].empty());
  CHECK(j["modules"][0]["layers"][1]["methods"] == json::parse(R"(["exact","exact"])"));
}

TEST_CASE("kernel json for all B2 modules") {
  auto r = run({"kernel", "--algebra", "B2", "--module", "all", "--max-level", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  std::map<std::string, json> rows;
  for (const auto& m : j["modules"]) rows[m["module"]] = m["rows"];
  CHECK(rows["green"] == json::parse("[[2,1,0],[8,4,4]]"));
  CHECK(rows["steinberg"] == json::parse("[[4,4,4],[8,8,8]]"));
}

TEST_CASE("degeneracy for Bn with n = 3") {
  auto r = run({"degeneracy", "--algebra", "Bn", "--n", "3", "--ell", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("C3") != std::string::npos);
  CHECK(r.out.find("A1^3") != std::string::npos);
  auto md = run({"degeneracy", "--algebra", "Bn", "--n", "3", "--ell", "4"});
  CHECK(md.code == 0);
  CHECK(md.out.find("| B3 | 4 | degenerate | A1^3 | C3 |") != std::string::npos);
}

TEST_CASE("characters checks") {
  auto jtp = run({"characters", "--algebra", "A1", "--ell", "4", "--check-jtp", "--order", "12"});
  CHECK(jtp.code == 0);
  CHECK(jtp.out.find("MATCH") != std::string::npos);
  CHECK(jtp.out.find("MISMATCH") == std::string::npos);
  auto sf = run({"characters", "--algebra", "Bn", "--n", "2", "--check-sf", "--sf-level", "2"});
  CHECK(sf.code == 0);
  CHECK(sf.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"lattice-info", "--algebra", "B2"}).code == 0);
  CHECK(run({"virasoro-check", "--algebra", "A1", "--max-mode", "2", "--max-level", "2"}).code == 0);
  // usage errors
  CHECK(run({"kernel", "--format", "yaml"}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"kernel", "--algebra", "B2", "--module", "purple"}).code == 2);
  // preconditions
  CHECK(run({"lattice-info", "--algebra", "B2", "--ell", "5"}).code == 2);
  CHECK(run({"degeneracy", "--algebra", "X7"}).code == 2);
  auto classified = run({"degeneracy", "--algebra", "B2", "--ell", "8"});
  CHECK(classified.code == 0);
  CHECK(classified.out.find("extension") == std::string::npos);
  auto big = run({"kernel", "--algebra", "Bn", "--n", "7", "--module", "blue", "--max-level", "3"});
  CHECK(big.code == 2);
  CHECK(big.err.find("limit") != std::string::npos);
  auto frac = run({"screen-apply", "--algebra", "A1", "--momentum", "1/2*a", "--state", "exp[-a]"});
  CHECK(frac.code == 2);
  CHECK(frac.err.find("--fractional") != std::string::npos);
  auto bad = run({"screen-apply", "--algebra", "A1", "--momentum", "-a", "--state", "exp[b]"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("position") != std::string::npos);
}

TEST_CASE("integral screening action through the cli") {
  auto r = run({"screen-apply", "--algebra", "A1", "--momentum", "-a", "--state", "d phi[a] * exp[a]", "--format",
                "json"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"0\"") != std::string::npos);
}

TEST_CASE("fractional pairings print a banner") {
  auto r = run({"screen-apply", "--algebra", "A1", "--momentum", "1/2*a", "--state", "exp[-a]", "--fractional",
                "--truncate", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("> APPROXIMATE OUTPUT", 0) == 0);
  CHECK(r.out.find("0.636619772") != std::string::npos);  // 2/pi
}

TEST_CASE("series json round trip") {
  CHECK(tools::rational_to_json(7) == json(7));
  CHECK(tools::rational_to_json(make_rational(-1, 12)) == json("-1/12"));
  CHECK(tools::rational_from_json(json("5/10")) == make_rational(1, 2));
  CHECK(tools::rational_from_json(json(-3)) == -3);
  Rational huge = Rational(Integer("123456789012345678901234567890"));
  CHECK(tools::rational_from_json(tools::rational_to_json(huge)) == huge);

  SFCharacters sf = sf_characters(2, 6);
  for (const QSeries* q : {&sf.ns_plus, &sf.r_plus, &sf.chi4}) {
    json j = tools::series_to_json(*q);
    CHECK(tools::series_from_json(j) == *q);
    CHECK(tools::series_from_json(json::parse(j.dump())) == *q);
  }
  CHECK(tools::series_to_json(sf.r_plus)["step"] == "1/2");
}
