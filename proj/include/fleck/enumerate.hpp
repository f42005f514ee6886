#pragma once

#include <map>
#include <string>
#include <vector>

#include "fleck/canonical.hpp"

namespace fleck {

inline constexpr int kDefaultSizeCap = 6;

// All n-element lattices, one per order-isomorphism class, in a fixed order.
// Carrier indices are a linear extension of each lattice's order.
std::vector<FiniteLattice> enumerate_lattices(int n);

// All FLe-algebras on the given lattice: every commutative monoid table that
// admits a residual, crossed with every zero choice. Labeled (not yet
// deduplicated up to isomorphism); every result is validated.
std::vector<FleAlgebra> extend_to_fle(const FiniteLattice& lat);

struct CorpusEntry {
  FleAlgebra algebra;  // tables equal to the canonical form itself
  CanonicalForm form;
  std::string hash;
};

// Canonical-form ascending; forms begin with the size byte, so iteration is
// also size ascending.
struct Corpus {
  std::vector<CorpusEntry> entries;
};

struct SizeCounts {
  int lattices = 0;
  int crls = 0;  // distinct unpointed algebras (zero choices collapsed)
  int fle = 0;
};

struct EnumerationReport {
  std::map<int, SizeCounts> by_size;
  Corpus corpus;
  double seconds = 0;  // wall time; excluded from serialized output
};

// All FLe-algebras with exactly n elements, up to isomorphism. The size cap
// guards accidental blowups (PreconditionError beyond it).
EnumerationReport enumerate_fle(int n, int threads = 1,
                                int size_cap = kDefaultSizeCap);

// Sizes 1 through max_size inclusive.
EnumerationReport enumerate_fle_up_to(int max_size, int threads = 1,
                                      int size_cap = kDefaultSizeCap);

// Corpus persistence: a directory of <hash>.json algebra files plus
// index.json holding counts and the entry order. Loading revalidates every
// algebra and recomputes its canonical form; a mismatch against the stored
// hash is an integrity error.
void save_corpus(const EnumerationReport& report, const std::string& dir);
EnumerationReport load_corpus(const std::string& dir);

// True when dir holds an index for exactly this size range.
bool corpus_matches(const std::string& dir, int max_size);

}  // namespace fleck
