#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "doctest.h"
#include "fleck/enumerate.hpp"
#include "fleck/json_io.hpp"
#include "oracles.hpp"

using namespace fleck;

namespace {

oracle::RawAlgebra raw_of(const FleAlgebra& a) {
  oracle::RawAlgebra r;
  r.n = a.size();
  r.leq.resize(r.n * r.n);
  r.prod.resize(r.n * r.n);
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) {
      r.leq[x * r.n + y] = a.leq(x, y) ? 1 : 0;
      r.prod[x * r.n + y] = a.prod(x, y);
    }
  r.unit = a.unit();
  r.zero = a.zero();
  return r;
}

}  // namespace

TEST_CASE("lattice enumeration matches the brute-force oracle") {
  const int expect[] = {0, 1, 1, 1, 2, 5};
  for (int n = 1; n <= 5; ++n) {
    const auto got = enumerate_lattices(n);
    CHECK(static_cast<int>(got.size()) == expect[n]);
    CHECK(oracle::all_lattices(n).size() == got.size());

    std::set<std::string> keys;
    for (const FiniteLattice& lat : got) {
      // carrier indices form a linear extension
      for (Elem x = 0; x < lat.size(); ++x)
        for (Elem y = 0; y < lat.size(); ++y)
          if (lat.leq(x, y)) CHECK(x <= y);
      std::vector<int> leq(n * n);
      for (Elem x = 0; x < lat.size(); ++x)
        for (Elem y = 0; y < lat.size(); ++y)
          leq[x * n + y] = lat.leq(x, y) ? 1 : 0;
      keys.insert(oracle::canonical_lattice_key(leq, n));
    }
    CHECK(keys.size() == got.size());  // pairwise non-isomorphic
    CHECK(keys == oracle::all_lattices(n));
  }
  CHECK(enumerate_lattices(6).size() == 15);
}

TEST_CASE("algebra enumeration matches the brute-force oracle up to size 4") {
  const std::set<std::string> expected = oracle::all_fle_keys(4);
  std::set<std::string> got;
  for (const CorpusEntry& e : enumerate_fle_up_to(4).corpus.entries)
    got.insert(oracle::canonical_algebra_key(raw_of(e.algebra)));
  CHECK(got == expected);
  CHECK(got.size() == 75);
}

TEST_CASE("census is frozen") {
  const EnumerationReport rep = enumerate_fle_up_to(6, 4);
  const int lattices[] = {0, 1, 1, 1, 2, 5, 15};
  const int crls[] = {0, 1, 1, 3, 16, 100, 794};
  const int fle[] = {0, 1, 2, 9, 63, 492, 4676};
  REQUIRE(rep.by_size.size() == 6);
  for (int n = 1; n <= 6; ++n) {
    const SizeCounts& c = rep.by_size.at(n);
    CHECK(c.lattices == lattices[n]);
    CHECK(c.crls == crls[n]);
    CHECK(c.fle == fle[n]);
  }
  CHECK(rep.corpus.entries.size() == 1 + 2 + 9 + 63 + 492 + 4676);
}

TEST_CASE("corpus entries are canonical, ordered, and reproducible") {
  const EnumerationReport rep = enumerate_fle_up_to(4);
  std::set<std::string> hashes;
  const CorpusEntry* prev = nullptr;
  for (const CorpusEntry& e : rep.corpus.entries) {
    CHECK(canonicalize(e.algebra) == e.form);  // stored tables are the form
    CHECK(canonical_hash_hex(e.form) == e.hash);
    const FleAlgebra back = algebra_from_form(e.form);
    CHECK(canonicalize(back) == e.form);
    hashes.insert(e.hash);
    if (prev) CHECK(prev->form < e.form);
    prev = &e;
  }
  CHECK(hashes.size() == rep.corpus.entries.size());
}

TEST_CASE("thread counts do not change the result") {
  const EnumerationReport one = enumerate_fle_up_to(5, 1);
  const EnumerationReport four = enumerate_fle_up_to(5, 4);
  REQUIRE(one.corpus.entries.size() == four.corpus.entries.size());
  CHECK(one.corpus.entries.size() == 567);
  for (std::size_t i = 0; i < one.corpus.entries.size(); ++i)
    CHECK(one.corpus.entries[i].form == four.corpus.entries[i].form);
}

TEST_CASE("two-element extension is exactly the two pointed chains") {
  const auto lats = enumerate_lattices(2);
  REQUIRE(lats.size() == 1);
  const auto algs = extend_to_fle(lats[0]);
  CHECK(algs.size() == 2);  // the unit can only sit on top; zero varies
  for (const FleAlgebra& a : algs) CHECK(a.unit() == 1);
}

TEST_CASE("size cap guards the entry points") {
  CHECK_THROWS_AS(enumerate_fle(7), PreconditionError);
  CHECK_THROWS_AS(enumerate_fle_up_to(7), PreconditionError);
  CHECK_THROWS_AS(enumerate_fle(3, 1, 2), PreconditionError);  // lowered cap
}

TEST_CASE("corpus persistence round-trips") {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / "fleck_corpus_test";
  fs::remove_all(dir);

  const EnumerationReport rep = enumerate_fle_up_to(3);
  save_corpus(rep, dir.string());
  CHECK(fs::exists(dir / "index.json"));
  CHECK(corpus_matches(dir.string(), 3));
  CHECK(!corpus_matches(dir.string(), 4));
  CHECK(!corpus_matches((dir / "absent").string(), 3));

  const EnumerationReport back = load_corpus(dir.string());
  REQUIRE(back.corpus.entries.size() == rep.corpus.entries.size());
  for (std::size_t i = 0; i < back.corpus.entries.size(); ++i) {
    CHECK(back.corpus.entries[i].form == rep.corpus.entries[i].form);
    CHECK(back.corpus.entries[i].hash == rep.corpus.entries[i].hash);
  }
  for (const auto& [n, c] : rep.by_size) {
    CHECK(back.by_size.at(n).lattices == c.lattices);
    CHECK(back.by_size.at(n).crls == c.crls);
    CHECK(back.by_size.at(n).fle == c.fle);
  }

  // a tampered algebra file no longer matches its stored hash
  const fs::path victim = dir / (rep.corpus.entries.back().hash + ".json");
  REQUIRE(fs::exists(victim));
  Json j;
  {
    std::ifstream in(victim);
    j = Json::parse(in);
  }
  j["zero"] = (j["zero"].get<int>() + 1) % j["size"].get<int>();
  {
    std::ofstream out(victim, std::ios::trunc);
    out << j.dump(2);
  }
  CHECK_THROWS_AS(load_corpus(dir.string()), Error);

  fs::remove_all(dir);
}
