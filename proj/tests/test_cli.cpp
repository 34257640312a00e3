#include "doctest.h"

#include "cli.hpp"
#include "zonoforge/io.hpp"
#include "zonoforge/volumes.hpp"

#include <sstream>

using namespace zonoforge;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ZONOFORGE_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("bw qn") {
  const auto r = run({"bw", "qn", "--n", "2"});
  REQUIRE(r.code == 0);
  CHECK(poly_from_json(r.doc()) == stanley_pitman_q(2));
  CHECK(r.doc().dump() ==
        R"({"nvars":2,"terms":[{"exp":[0,2],"num":"1","den":"2"},{"exp":[1,1],"num":"1","den":"1"}]})");
  CHECK(run({"bw", "qn", "--n", "3", "--format", "table"}).out == stanley_pitman_q(3).str() + "\n");
  CHECK(run({"bw", "qn", "--n", "13"}).code == 2);
}

TEST_CASE("bw parking and tutte") {
  const auto r = run({"bw", "parking", "--n", "3", "--class", "maximal"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["functions"].size() == 4);
  CHECK(r.doc()["class"] == "maximal");
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = run({"bw", "parking", "--n", std::to_string(n)});
    CHECK(mpz_class(static_cast<unsigned long>(all.doc()["functions"].size())) == spanning_tree_count(broken_wheel(n)));
  }
  CHECK(run({"bw", "parking", "--n", "3", "--class", "bogus"}).code == 2);

  CHECK(run({"bw", "tutte", "--n", "0"}).code == 2);
  const auto t = run({"bw", "tutte", "--n", "2"});
  REQUIRE(t.code == 0);
  CHECK(t.doc()["terms"].dump() ==
        R"([{"s":0,"t":1,"c":1},{"s":0,"t":2,"c":1},{"s":1,"t":0,"c":1},{"s":1,"t":1,"c":1},{"s":2,"t":0,"c":1}])");
}

TEST_CASE("bw hilbert and monic") {
  const auto h = run({"bw", "hilbert", "--n", "4", "--kind", "internal"});
  REQUIRE(h.code == 0);
  CHECK(h.doc()["dims"].dump() == "[1,3,3,1,0]");
  CHECK(run({"bw", "hilbert", "--n", "2", "--kind", "other"}).code == 2);
  const auto m = run({"bw", "monic", "--n", "3", "--s", "1,1,0", "--internal"});
  REQUIRE(m.code == 0);
  CHECK(poly_from_json(m.doc()["polynomial"]).str() == "t1*t2 + 1/2*t1^2");
  const auto q = run({"bw", "monic", "--n", "3", "--s", "1,1,1"});
  CHECK(poly_from_json(q.doc()["polynomial"]) == stanley_pitman_q(3));
  CHECK(run({"bw", "monic", "--n", "3", "--s", "0,0,2"}).code == 2);
  CHECK(run({"bw", "monic", "--n", "3", "--s", "1,1"}).code == 2);
}

TEST_CASE("gbw subdivide reproduces the fork figure") {
  const auto r = run({"gbw", "subdivide", "--tree", data("fork.json")});
  REQUIRE(r.code == 0);
  const auto j = r.doc();
  REQUIRE(j["chambers"].size() == 4);
  CHECK(j["partition_ok"] == true);
  CHECK(j["sum_identity_ok"] == true);
  const std::vector<std::string> refs{"[3,0,0]", "[2,0,1]", "[2,1,0]", "[1,1,1]"};
  const std::vector<std::string> volumes{"1/6", "7/6", "7/6", "2"};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(j["chambers"][i]["ref"].dump() == refs[i]);
    CHECK(j["chambers"][i]["volume"] == volumes[i]);
  }
  CHECK(poly_from_json(j["chambers"][1]["q"]).str() == "1/6*t3^3 + 1/2*t1*t3^2 + 1/2*t1^2*t3");
}

TEST_CASE("gbw verify") {
  const auto r = run({"gbw", "verify", "--tree", data("line.json"), "--checks", "partition"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["checks"]["partition"]["sum_identity_ok"] == true);
  const auto all = run({"gbw", "verify", "--tree", data("tree4.json"), "--seed", "3", "--samples", "20000"});
  CHECK(all.code == 0);
  CHECK(all.doc()["ok"] == true);
  CHECK(all.doc()["checks"].size() == 4);
  CHECK(run({"gbw", "verify", "--tree", data("line.json"), "--checks", "nope"}).code == 2);
  CHECK(run({"gbw", "verify", "--tree", data("line.json"), "--checks", "mc", "--samples", "10"}).code == 2);
}

TEST_CASE("gbw verify fails loudly on an impossible tolerance") {
  const auto r = run({"gbw", "verify", "--tree", data("fork.json"), "--checks", "mc", "--sigma", "1e-9"});
  CHECK(r.code == 1);
  CHECK(r.doc()["ok"] == false);
  CHECK_FALSE(r.doc()["witness"].get<std::string>().empty());
  CHECK(r.err.find("verification failed") != std::string::npos);
}

TEST_CASE("malformed trees are parse errors") {
  const auto r = run({"gbw", "subdivide", "--tree", data("malformed.json")});
  CHECK(r.code == 2);
  CHECK(r.err.find("parse error") != std::string::npos);
  CHECK(run({"gbw", "subdivide", "--tree", data("cyclic.json")}).code == 2);
  CHECK(run({"gbw", "subdivide", "--tree", data("missing.json")}).code == 2);
  CHECK(run({"gbw", "subdivide", "--tree", data("fork.json"), "--t", "1,0,1"}).code == 2);
  CHECK(run({"gbw", "subdivide", "--tree", data("fork.json"), "--t", "1,1"}).code == 2);
}

TEST_CASE("assoc") {
  const auto r = run({"assoc", "--n", "3"});
  REQUIRE(r.code == 0);
  const auto j = r.doc();
  CHECK(j["trees"].size() == 5);
  std::set<Exponent> ks;
  MPoly total(3);
  for (const auto& row : j["trees"]) {
    ks.insert(row["kT"].get<Exponent>());
    total += poly_from_json(row["volume"]);
  }
  CHECK(ks == composition_set(3).members);
  CHECK(total == poly_from_json(j["sum"]));
  CHECK(total.reversed() == stanley_pitman_q(3));
  CHECK(j["kT_set_ok"] == true);
  CHECK(j["sum_ok"] == true);
  CHECK(run({"assoc", "--n", "11"}).code == 2);
  CHECK(run({"assoc"}).code == 2);
}

TEST_CASE("assoc locate") {
  const auto r = run({"assoc", "locate", "--x", "1", "--y", "1/2", "--s", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["stem"] == "1/2");
  CHECK(r.doc()["roundtrip_ok"] == true);
  const auto d = run({"assoc", "locate", "--x", "1", "--y", "1", "--s", "2"});
  CHECK(d.code == 1);
  CHECK(d.err.find("degenerate contour") != std::string::npos);
  CHECK(run({"assoc", "locate", "--x", "1,1", "--y", "1/2", "--s", "3"}).code == 2);
  CHECK(run({"assoc", "locate", "--x", "1", "--y", "1/2", "--s", "a"}).code == 2);
}

TEST_CASE("usage errors and determinism") {
  CHECK(run({}).code == 2);
  CHECK(run({"bw"}).code == 2);
  CHECK(run({"bw", "qn"}).code == 2);
  CHECK(run({"bw", "qn", "--n", "x"}).code == 2);
  CHECK(run({"bw", "qn", "--n", "2", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const std::vector<std::string> args{"gbw", "verify", "--tree", data("fork.json"), "--seed", "9", "--samples", "30000"};
  CHECK(run(args).out == run(args).out);
}
