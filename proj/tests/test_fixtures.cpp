#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <string>

#include "doctest.h"
#include "fleck/canonical.hpp"
#include "fleck/fixtures.hpp"

using namespace fleck;

TEST_CASE("every stock instance replays its frozen behavior") {
  for (const std::string& name : default_fixture_instances()) {
    const CheckReport r = verify_fixture(name);
    CAPTURE(name);
    CHECK(r.pass);
    for (const auto& [k, v] : r.trace) {
      CAPTURE(k);
      CHECK(v == "ok");  // anything else spells out the mismatch
    }
  }
}

TEST_CASE("the catalog names are resolvable and documented") {
  std::set<std::string> seen;
  for (const FixtureInfo& info : fixture_list()) {
    CHECK(!info.provenance.empty());
    CHECK(seen.insert(info.name).second);
  }
  CHECK(fixture_list().size() >= 7);
  CHECK(default_fixture_instances().size() >= 10);

  CHECK_THROWS_AS(fixture("no_such_model"), UnknownFixtureError);
  CHECK_THROWS_AS(fixture("boolean(nope)"), UnknownFixtureError);
  CHECK_THROWS_AS(fixture("heyting_chain(1)"), PreconditionError);
}

TEST_CASE("parametric spellings are aliases") {
  const Fixture spelled = fixture("boolean(2)");
  const Fixture bare = fixture("boolean2");
  REQUIRE(spelled.algebra.has_value());
  REQUIRE(bare.algebra.has_value());
  CHECK(spelled.name == bare.name);
  CHECK(canonicalize(*spelled.algebra) == canonicalize(*bare.algebra));
}

TEST_CASE("finite and integer fixtures carry the right model") {
  const Fixture fin = fixture("heyting_chain(4)");
  CHECK(fin.algebra.has_value());
  CHECK(!fin.zn.has_value());
  CHECK(fin.algebra->size() == 4);

  const Fixture z = fixture("z(-1)");
  CHECK(!z.algebra.has_value());
  REQUIRE(z.zn.has_value());
  CHECK(z.zn->n == -1);
}

TEST_CASE("expectations pin exact witnesses, not just verdicts") {
  const Fixture fig1 = fixture("fig1_pc_not_spc");
  bool saw_spc = false;
  for (const Expectation& e : fig1.expected) {
    if (e.subject.find("spc") == std::string::npos) continue;
    if (e.expect_witness.empty()) continue;
    saw_spc = true;
    CHECK(!e.expect_pass);
    const CheckReport r = e.run(fig1);
    CHECK(!r.pass);
    CHECK(r.witness == e.expect_witness);
  }
  CHECK(saw_spc);

  // the six-element subject separates BT from BT*
  const Fixture b6 = fixture("btstar_six");
  bool saw_btstar = false;
  for (const Expectation& e : b6.expected)
    if (e.subject.find("BT*") != std::string::npos) saw_btstar = true;
  CHECK(saw_btstar);
}

TEST_CASE("a doctored expectation is reported with both verdicts") {
  Fixture f = fixture("boolean(2)");
  REQUIRE(!f.expected.empty());
  f.expected[0].expect_pass = !f.expected[0].expect_pass;
  const CheckReport r = verify_fixture(f);
  CHECK(!r.pass);
  bool mentioned = false;
  for (const auto& [k, v] : r.trace)
    if (k == f.expected[0].subject && v != "ok") mentioned = true;
  CHECK(mentioned);
}
