#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fleck/algebra.hpp"
#include "fleck/canonical.hpp"
#include "fleck/enumerate.hpp"
#include "fleck/fixtures.hpp"
#include "fleck/lattice.hpp"
#include "oracles.hpp"

using namespace fleck;

namespace {

oracle::Table leq_of(const FleAlgebra& a) {
  const int n = a.size();
  oracle::Table t(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) t[x * n + y] = a.leq(x, y) ? 1 : 0;
  return t;
}

oracle::Table prod_of(const FleAlgebra& a) {
  return oracle::Table(a.prod_table().begin(), a.prod_table().end());
}

std::vector<FleAlgebra> probe_algebras() {
  std::vector<FleAlgebra> out;
  for (const char* name : {"fig1_pc_not_spc", "btstar_six", "delta_four",
                           "heyting_star", "heyting_chain(4)", "boolean(8)"})
    out.push_back(*fixture(name).algebra);
  for (auto& e : enumerate_fle_up_to(4).corpus.entries)
    out.push_back(e.algebra);
  return out;
}

FleAlgebra relabeled(const FleAlgebra& a, const std::vector<Elem>& p) {
  const int n = a.size();
  std::vector<Elem> q(n);
  for (int i = 0; i < n; ++i) q[p[i]] = i;
  std::vector<std::uint8_t> leq(n * n);
  std::vector<Elem> prod(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      leq[x * n + y] = a.leq(p[x], p[y]) ? 1 : 0;
      prod[x * n + y] = q[a.prod(p[x], p[y])];
    }
  return FleAlgebra::make(FiniteLattice::from_leq(n, std::move(leq)),
                          std::move(prod), q[a.unit()], q[a.zero()]);
}

}  // namespace

TEST_CASE("lattice tables agree with the scan oracle") {
  for (const FleAlgebra& a : probe_algebras()) {
    const int n = a.size();
    const oracle::Table leq = leq_of(a);
    REQUIRE(oracle::is_poset(leq, n));
    REQUIRE(oracle::is_lattice(leq, n));
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        CHECK(a.meet(x, y) == *oracle::glb(leq, n, x, y));
        CHECK(a.join(x, y) == *oracle::lub(leq, n, x, y));
      }
    CHECK(a.leq(a.lattice().bottom(), 0));
    CHECK(a.leq(0, a.lattice().top()));
  }
}

TEST_CASE("the stored arrow is the residual, cell by cell") {
  for (const FleAlgebra& a : probe_algebras()) {
    const int n = a.size();
    const oracle::Table leq = leq_of(a), prod = prod_of(a);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        const auto r = oracle::residual(leq, prod, n, x, y);
        REQUIRE(r.has_value());
        CHECK(a.arrow(x, y) == *r);
      }
  }
}

TEST_CASE("residuation law holds as a biconditional") {
  for (const FleAlgebra& a : probe_algebras()) {
    const int n = a.size();
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          CHECK(a.leq(a.prod(x, y), z) == a.leq(x, a.arrow(y, z)));
  }
}

TEST_CASE("build_algebra names the violated axiom") {
  std::vector<std::uint8_t> chain3 = {1, 1, 1, 0, 1, 1, 0, 0, 1};

  SUBCASE("commutativity") {
    // 0 is bottom-absorbing on the left only
    const BuildResult r =
        build_algebra(FiniteLattice::from_leq(3, chain3),
                      {0, 0, 0, 0, 1, 2, 0, 2, 2}, 1, 0, {}, nullptr);
    CHECK(r.algebra.has_value());  // that table is fine; now break it
    const BuildResult bad =
        build_algebra(FiniteLattice::from_leq(3, chain3),
                      {0, 0, 1, 0, 1, 2, 0, 2, 2}, 1, 0, {}, nullptr);
    REQUIRE(!bad.algebra.has_value());
    CHECK(bad.report.rule == "commutativity");
  }
  SUBCASE("unit") {
    const BuildResult bad =
        build_algebra(FiniteLattice::from_leq(3, chain3),
                      {0, 0, 0, 0, 2, 2, 0, 2, 2}, 1, 0, {}, nullptr);
    REQUIRE(!bad.algebra.has_value());
    CHECK(bad.report.rule == "unit");
  }
  SUBCASE("associativity") {
    // commutative with unit 1, but (0*0)*2 = 1*2 = 2 while 0*(0*2) = 0*0 = 1
    const BuildResult bad =
        build_algebra(FiniteLattice::from_leq(3, chain3),
                      {1, 0, 0, 0, 1, 2, 0, 2, 2}, 1, 0, {}, nullptr);
    REQUIRE(!bad.algebra.has_value());
    CHECK(bad.report.rule == "associativity");
  }
  SUBCASE("residuation") {
    // 0*0 = 2 breaks monotonicity, so the law of residuation cannot hold
    const BuildResult bad =
        build_algebra(FiniteLattice::from_leq(3, chain3),
                      {2, 0, 0, 0, 1, 2, 0, 2, 2}, 1, 0, {}, nullptr);
    CHECK(!bad.algebra.has_value());
  }
  SUBCASE("supplied arrow cross-check") {
    std::vector<Elem> wrong = {2, 2, 2, 0, 2, 2, 0, 0, 2};
    const BuildResult bad =
        build_algebra(FiniteLattice::from_leq(3, chain3),
                      {0, 0, 0, 0, 1, 2, 0, 2, 2}, 1, 0, {}, &wrong);
    REQUIRE(!bad.algebra.has_value());
    CHECK(bad.report.rule == "residuation");
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(20240817);
  for (const FleAlgebra& a : probe_algebras()) {
    const CanonicalForm base = canonicalize(a);
    std::vector<Elem> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    for (int round = 0; round < 3; ++round) {
      std::shuffle(p.begin(), p.end(), rng);
      CHECK(canonicalize(relabeled(a, p)) == base);
    }
  }
}

TEST_CASE("canonical form rebuilds to an isomorphic algebra") {
  for (const FleAlgebra& a : probe_algebras()) {
    const CanonicalForm form = canonicalize(a);
    const FleAlgebra b = algebra_from_form(form);
    CHECK(canonicalize(b) == form);
    CHECK(b.size() == a.size());
  }
}

TEST_CASE("library and oracle canonicalization induce the same classes") {
  // Same partition test: two algebras share a library form iff they share an
  // oracle key. Checked across the full size-4 corpus plus relabelings.
  std::mt19937 rng(7);
  for (const FleAlgebra& a : probe_algebras()) {
    if (a.size() > 4) continue;
    oracle::RawAlgebra raw{a.size(), leq_of(a), prod_of(a), a.unit(),
                           a.zero()};
    const std::string key = oracle::canonical_algebra_key(raw);
    std::vector<Elem> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    const FleAlgebra b = relabeled(a, p);
    oracle::RawAlgebra rawb{b.size(), leq_of(b), prod_of(b), b.unit(),
                            b.zero()};
    CHECK(oracle::canonical_algebra_key(rawb) == key);
    CHECK((canonicalize(b) == canonicalize(a)));
  }
}

TEST_CASE("double negation is a nucleus and its image is involutive") {
  for (const FleAlgebra& a : probe_algebras()) {
    const UnaryMap dm = dm_map(a);
    CHECK(dm.is_increasing);
    CHECK(dm.is_monotone);
    CHECK(dm.is_idempotent);
    CHECK(dm.is_nucleus);
    const FleAlgebra img = nucleus_image(a, dm);
    CHECK(img.size() <= a.size());
    for (Elem x = 0; x < img.size(); ++x)
      CHECK(img.dm(x) == x);  // involutive image
  }
}

TEST_CASE("unary map analysis flags exactly the right properties") {
  const FleAlgebra a = *fixture("delta_four").algebra;
  const UnaryMap printed = UnaryMap::analyze(a, {3, 3, 2, 3});
  CHECK(printed.is_increasing);
  CHECK(printed.is_idempotent);
  // 1 <= a yet delta(1) = top and delta(a) = a, so order is not preserved
  CHECK(!printed.is_monotone);
  const UnaryMap ident = UnaryMap::analyze(a, {0, 1, 2, 3});
  CHECK(ident.is_increasing);
  CHECK(ident.is_monotone);
  CHECK(ident.is_idempotent);
  CHECK(ident.is_nucleus);
  const UnaryMap drop = UnaryMap::analyze(a, {0, 0, 2, 3});
  CHECK(!drop.is_increasing);
}

TEST_CASE("increasing_maps enumerates every pointwise-increasing table") {
  const FleAlgebra four = *fixture("delta_four").algebra;
  CHECK(increasing_maps(four).size() == 24);  // 4*3*2*1 on a 4-chain
  const FleAlgebra two = *fixture("boolean(2)").algebra;
  CHECK(increasing_maps(two).size() == 2);
  for (const UnaryMap& m : increasing_maps(four)) {
    for (Elem x = 0; x < four.size(); ++x) CHECK(four.leq(x, m.table[x]));
  }
}

TEST_CASE("neg and dm tables match their pointwise definitions") {
  for (const FleAlgebra& a : probe_algebras()) {
    const std::vector<Elem> neg = a.neg_table(), dm = a.dm_table();
    for (Elem x = 0; x < a.size(); ++x) {
      CHECK(neg[x] == a.arrow(x, a.zero()));
      CHECK(dm[x] == neg[neg[x]]);
    }
  }
}
