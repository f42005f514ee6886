#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fleck/report.hpp"

namespace fleck {

// Dense element index into a finite carrier, always 0..size-1.
using Elem = int;

// Finite lattice over {0..n-1}. Order, meet and join are total tables; the
// three are kept consistent by construction (leq(x,y) iff meet(x,y)==x iff
// join(x,y)==y). Instances are immutable after construction.
class FiniteLattice {
 public:
  int size() const { return n_; }
  bool leq(Elem x, Elem y) const { return leq_[x * n_ + y] != 0; }
  Elem meet(Elem x, Elem y) const { return meet_[x * n_ + y]; }
  Elem join(Elem x, Elem y) const { return join_[x * n_ + y]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  const std::vector<std::uint8_t>& leq_table() const { return leq_; }
  const std::vector<Elem>& meet_table() const { return meet_; }
  const std::vector<Elem>& join_table() const { return join_; }

  // Elements >= x in ascending index order. Never empty (contains x).
  std::vector<Elem> upset(Elem x) const;

  // Throwing constructors, used for file input. Reject non-posets and posets
  // without totally defined meets/joins, naming the offending pair.
  static FiniteLattice from_leq(int n, std::vector<std::uint8_t> leq);
  static FiniteLattice from_meet_join(int n, std::vector<Elem> meet,
                                      std::vector<Elem> join);

  // Non-throwing variant for enumeration hot paths.
  static std::optional<FiniteLattice> try_from_leq(
      int n, const std::vector<std::uint8_t>& leq);

 private:
  FiniteLattice() = default;
  // Derives meet/join from a validated order; nullopt when some pair lacks a
  // greatest lower or least upper bound.
  bool derive_tables();

  int n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> meet_, join_;
  Elem bottom_ = 0, top_ = 0;
};

}  // namespace fleck
