#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "fleck/analysis.hpp"
#include "fleck/enumerate.hpp"
#include "fleck/fixtures.hpp"

using namespace fleck;

namespace {

const Corpus& corpus4() {
  static const Corpus c = enumerate_fle_up_to(4).corpus;
  return c;
}

std::string witness_value(const NamedValues& w, const std::string& key) {
  for (const auto& [k, v] : w)
    if (k == key) return v;
  return "<missing " + key + ">";
}

}  // namespace

TEST_CASE("classification pins the stock fixtures") {
  const Classification fig1 = classify(*fixture("fig1_pc_not_spc").algebra);
  CHECK(fig1.integral.value);
  CHECK(fig1.pc.value);
  CHECK(!fig1.spc.value);
  CHECK(witness_value(fig1.spc.witness, "x") == "0");
  CHECK(witness_value(fig1.spc.witness, "y") == "bot");
  CHECK(!fig1.involutive.value);
  CHECK(!fig1.zero_greatest.value);
  CHECK(!fig1.boolean_alg.value);
  CHECK(!fig1.glivenko_ba.value);
  CHECK(!fig1.glivenko_ba_int_route.value);
  CHECK(!fig1.proto_cnx_meet.value);
  CHECK(fig1.weakly_cnx_meet.value);
  CHECK(fig1.ns_meet.value);
  CHECK(!fig1.one_leq_zero.value);

  const Classification b2 = classify(*fixture("boolean(2)").algebra);
  CHECK(b2.integral.value);
  CHECK(b2.zero_bounded.value);
  CHECK(b2.involutive.value);
  CHECK(b2.pc.value);
  CHECK(b2.spc.value);
  CHECK(b2.boolean_alg.value);
  CHECK(b2.glivenko_ba.value);
  CHECK(b2.glivenko_ba_int_route.value);
  CHECK(!b2.zero_greatest.value);
  CHECK(b2.dm1_greatest.value);
  // the symmetrized arrows rescue Aristotle and Boethius on {bot, top}
  CHECK(b2.proto_cnx_meet.value);
  CHECK(b2.proto_cnx_prod.value);
  CHECK(!b2.ns_meet.value);

  const Classification d4 = classify(*fixture("delta_four").algebra);
  CHECK(!d4.integral.value);
  CHECK(d4.zero_greatest.value);
  CHECK(d4.dm1_greatest.value);
  CHECK(d4.one_leq_zero.value);
  CHECK(d4.pc.value);
  CHECK(d4.spc.value);
  CHECK(d4.glivenko_ba.value);
  CHECK(!d4.involutive.value);
  CHECK(d4.proto_cnx_meet.value);
  CHECK(d4.proto_cnx_prod.value);
  CHECK(d4.k1_refuted.value);

  const Classification h3 = classify(*fixture("heyting_chain(3)").algebra);
  CHECK(h3.integral.value);
  CHECK(h3.zero_bounded.value);
  CHECK(h3.spc.value);
  CHECK(h3.glivenko_ba.value);
  CHECK(h3.glivenko_ba_int_route.value);
  CHECK(!h3.involutive.value);
}

TEST_CASE("flag registry exposes every flag by name") {
  const std::vector<std::string>& names = classification_flag_names();
  CHECK(names.size() == 19);
  const Classification c = classify(*fixture("boolean(2)").algebra);
  for (const std::string& n : names) CHECK(classification_flag(c, n));
  CHECK(classification_flag(c, "no_such_flag") == nullptr);
  CHECK(classification_flag(c, "spc")->value == c.spc.value);
}

TEST_CASE("analysis entry points agree with the raw-table engine") {
  for (const CorpusEntry& e : corpus4().entries) {
    const FleAlgebra& a = e.algebra;
    for (ArrowKind k : {ArrowKind::CnxMeet, ArrowKind::CnxProd}) {
      const BinTable f = arrow_table(a, k);
      CHECK(proto_connexive(a, k).pass == proto_table(a, f).pass);
      CHECK(weakly_connexive(a, k).pass == weak_table(a, f).pass);
      CHECK(non_symmetry_witness(a, k) == ns_witness(a, f));
      CHECK(strong_connexivity_refutation(a, k).has_value() ==
            strong_refutation(a, f).has_value());
    }
    if (a.size() > 3) continue;  // decorated sweep on the tiny sizes only
    for (const UnaryMap& m : increasing_maps(a)) {
      CHECK(proto_connexive(a, ArrowKind::CnxMeetD, &m).pass ==
            proto_table(a, cnx_meet_table(a, m.table)).pass);
      CHECK(proto_connexive(a, ArrowKind::CnxProdD, &m).pass ==
            proto_table(a, cnx_prod_table(a, m.table)).pass);
      CHECK(arrow_table(a, ArrowKind::CnxMeetD, &m.table) ==
            cnx_meet_table(a, m.table));
    }
  }
}

TEST_CASE("the three-element chain is weakly but not proto connexive") {
  const FleAlgebra a = *fixture("fig1_pc_not_spc").algebra;
  const CheckReport proto = proto_connexive(a, ArrowKind::CnxMeet);
  REQUIRE(!proto.pass);
  CHECK(witness_value(proto.witness, "thesis") == "BT");
  CHECK(witness_value(proto.witness, "x") == "0");
  CHECK(witness_value(proto.witness, "y") == "bot");
  CHECK(weakly_connexive(a, ArrowKind::CnxMeet).pass);
  // product = meet collapses the two arrows
  CHECK(arrow_table(a, ArrowKind::CnxProd) ==
        arrow_table(a, ArrowKind::CnxMeet));
  CHECK(!proto_connexive(a, ArrowKind::CnxProd).pass);
  CHECK(weakly_connexive(a, ArrowKind::CnxProd).pass);
}

TEST_CASE("strong connexivity refutations") {
  CHECK(!strong_connexivity_refutation(*fixture("heyting_chain(3)").algebra,
                                       ArrowKind::CnxMeet));
  CHECK(!strong_connexivity_refutation(*fixture("fig1_pc_not_spc").algebra,
                                       ArrowKind::CnxMeet));
  CHECK(!strong_connexivity_refutation(*fixture("boolean(2)").algebra,
                                       ArrowKind::CnxMeet));
  const auto r = strong_connexivity_refutation(*fixture("delta_four").algebra,
                                               ArrowKind::CnxMeet);
  REQUIRE(r.has_value());
  CHECK(r->kind == StrongRefutation::K1SelfNeg);
  CHECK(r->x == 0);  // bot already satisfies x => ~x
}

TEST_CASE("non-symmetry witnesses") {
  const FleAlgebra fig1 = *fixture("fig1_pc_not_spc").algebra;
  const auto w = non_symmetry_witness(fig1, ArrowKind::CnxMeet);
  REQUIRE(w.has_value());
  CHECK(*w == std::pair<Elem, Elem>{0, 1});  // bot vs 0 breaks both ways
  CHECK(!non_symmetry_witness(*fixture("boolean(2)").algebra,
                              ArrowKind::CnxMeet));
}

TEST_CASE("interval analysis modes on the six-element subject") {
  const FleAlgebra a = *fixture("btstar_six").algebra;
  const UnaryMap dm = dm_map(a);

  const IntervalReport ep = interval_analysis(a, dm, IntervalMode::endpoints());
  CHECK(ep.member_count == 4);
  CHECK(!ep.count_saturated);
  CHECK(ep.checked == 0);
  CHECK(!ep.exhaustive);
  CHECK(!ep.capped_out);
  CHECK(ep.lo.pass);
  CHECK(ep.hi.pass);
  CHECK(ep.all_proto);

  // independent member count: product of the cell-wise choice counts
  const BinTable lo = cnx_prod_table(a, dm.table);
  const BinTable hi = cnx_meet_table(a, dm.table);
  std::uint64_t count = 1;
  for (int c = 0; c < a.size() * a.size(); ++c) {
    std::uint64_t k = 0;
    for (Elem z = 0; z < a.size(); ++z)
      if (a.leq(lo[c], z) && a.leq(z, hi[c])) ++k;
    count *= k;
  }
  CHECK(count == ep.member_count);

  const IntervalReport ex = interval_analysis(a, dm, IntervalMode::exhaustive());
  CHECK(ex.exhaustive);
  CHECK(ex.checked == 4);
  CHECK(ex.all_proto);
  CHECK(!ex.failing_member);

  const IntervalReport capped =
      interval_analysis(a, dm, IntervalMode::exhaustive(3));
  CHECK(capped.capped_out);
  CHECK(!capped.exhaustive);
  CHECK(capped.checked == 0);

  const IntervalReport s1 = interval_analysis(a, dm, IntervalMode::sampled(25, 42));
  const IntervalReport s2 = interval_analysis(a, dm, IntervalMode::sampled(25, 42));
  CHECK(s1.checked == 25);
  CHECK(s1.all_proto);
  CHECK(s1.all_proto == s2.all_proto);
  CHECK(s1.failing_member == s2.failing_member);

  // the identity map breaks the lower endpoint
  const UnaryMap ident = increasing_maps(a).front();
  const IntervalReport bad = interval_analysis(a, ident, IntervalMode::exhaustive());
  CHECK(bad.member_count == 4);
  CHECK(!bad.lo.pass);
  CHECK(!bad.all_proto);
  REQUIRE(bad.failing_member.has_value());
  CHECK(*bad.failing_member == cnx_prod_table(a, ident.table));
  CHECK(witness_value(bad.failing_verdict.witness, "thesis") == "BT");
  CHECK(witness_value(bad.failing_verdict.witness, "x") == "bot");
  CHECK(witness_value(bad.failing_verdict.witness, "y") == "0");

  CHECK_THROWS_AS(interval_analysis(*fixture("delta_four").algebra, dm_map(*fixture("delta_four").algebra),
                                    IntervalMode::endpoints()),
                  PreconditionError);
  const FleAlgebra fig1 = *fixture("fig1_pc_not_spc").algebra;
  CHECK_THROWS_AS(interval_analysis(fig1, UnaryMap::analyze(fig1, {0, 0, 0}),
                                    IntervalMode::endpoints()),
                  PreconditionError);
}

TEST_CASE("delta forcing") {
  const FleAlgebra h3 = *fixture("heyting_chain(3)").algebra;
  const DeltaForcingReport r3 = delta_forcing(h3);
  CHECK(r3.delta_count == 6);
  REQUIRE(r3.dm_index >= 0);
  CHECK(increasing_maps(h3)[r3.dm_index].table == h3.dm_table());
  CHECK(r3.meet_forced);
  CHECK(r3.prod_bt_passing == r3.meet_bt_passing);  // product = meet here

  const FleAlgebra d4 = *fixture("delta_four").algebra;
  const DeltaForcingReport r4 = delta_forcing(d4);
  CHECK(r4.delta_count == 24);
  CHECK(r4.meet_forced);
  REQUIRE(r4.prod_bt_passing.size() == 2);
  CHECK(std::find(r4.prod_bt_passing.begin(), r4.prod_bt_passing.end(),
                  r4.dm_index) != r4.prod_bt_passing.end());
  for (int i : r4.prod_bt_passing)
    if (i != r4.dm_index)
      CHECK(increasing_maps(d4)[i].table == std::vector<Elem>{3, 2, 3, 3});

  CHECK_THROWS_AS(delta_forcing(*fixture("fig1_pc_not_spc").algebra),
                  PreconditionError);
}

TEST_CASE("diamond expansion survey") {
  const BDiamondReport fig1 =
      bdiamond_expansions(*fixture("fig1_pc_not_spc").algebra);
  CHECK(fig1.candidates == 4);
  CHECK(fig1.admissible == 1);
  CHECK(fig1.all_equal_dm);
  CHECK(fig1.sampled_tables == 100);
  CHECK(fig1.all_below_meet_arrow);

  const BDiamondReport b2 = bdiamond_expansions(*fixture("boolean(2)").algebra);
  CHECK(b2.candidates == 2);
  CHECK(b2.admissible == 1);
  CHECK(b2.all_equal_dm);

  const BDiamondReport d4 = bdiamond_expansions(*fixture("delta_four").algebra);
  CHECK(d4.candidates == 1);  // constant-top dm leaves no slack
  CHECK(d4.admissible == 1);
  CHECK(d4.all_equal_dm);

  const BDiamondReport b6 = bdiamond_expansions(*fixture("btstar_six").algebra,
                                                7, 40);
  CHECK(b6.admissible >= 1);
  CHECK(b6.sampled_tables == 40);
  CHECK(b6.all_below_meet_arrow);
}

TEST_CASE("zero-greatest algebras and the decorated product arrow") {
  // With 0 on top, negation is constantly top: both Aristotle theses hold
  // under every increasing delta, and dm itself passes the whole battery.
  int seen = 0;
  for (const CorpusEntry& e : corpus4().entries) {
    const FleAlgebra& a = e.algebra;
    if (!classify(a).zero_greatest.value) continue;
    ++seen;
    const UnaryMap dm = dm_map(a);
    CHECK(proto_connexive(a, ArrowKind::CnxMeetD, &dm).pass);
    CHECK(proto_connexive(a, ArrowKind::CnxProdD, &dm).pass);
    for (const UnaryMap& m : increasing_maps(a)) {
      for (const BinTable& f :
           {cnx_meet_table(a, m.table), cnx_prod_table(a, m.table)}) {
        CHECK(check_thesis(a, f, Thesis::AT).pass);
        CHECK(check_thesis(a, f, Thesis::ATp).pass);
      }
    }
  }
  CHECK(seen >= 2);

  // Boethius does not extend to arbitrary increasing deltas: the four-element
  // witness fails BT under its non-dm idempotent map.
  const FleAlgebra d4 = *fixture("delta_four").algebra;
  const UnaryMap printed = UnaryMap::analyze(d4, {3, 3, 2, 3});
  REQUIRE(printed.is_increasing);
  const CheckReport r = proto_connexive(d4, ArrowKind::CnxProdD, &printed);
  REQUIRE(!r.pass);
  CHECK(witness_value(r.witness, "thesis") == "BT");
  CHECK(witness_value(r.witness, "x") == "a");
  CHECK(witness_value(r.witness, "y") == "a");
}

TEST_CASE("decorated arrows demand a usable delta") {
  const FleAlgebra a = *fixture("fig1_pc_not_spc").algebra;
  CHECK_THROWS_AS(proto_connexive(a, ArrowKind::CnxMeetD), UnboundDeltaError);
  const UnaryMap bad = UnaryMap::analyze(a, {0, 0, 0});
  CHECK(!bad.is_increasing);
  CHECK_THROWS_AS(proto_connexive(a, ArrowKind::CnxProdD, &bad),
                  PreconditionError);
}
