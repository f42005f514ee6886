#include "fleck/lattice.hpp"

#include <string>

namespace fleck {

namespace {

std::string pair_msg(const char* what, Elem x, Elem y) {
  return std::string(what) + " at (" + std::to_string(x) + "," +
         std::to_string(y) + ")";
}

// nullopt on success, else the offending pair/triple message.
std::optional<std::string> order_defect(int n,
                                        const std::vector<std::uint8_t>& leq) {
  if (static_cast<int>(leq.size()) != n * n) return "leq table size mismatch";
  auto at = [&](Elem x, Elem y) { return leq[x * n + y] != 0; };
  for (Elem x = 0; x < n; ++x)
    if (!at(x, x)) return pair_msg("order not reflexive", x, x);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (x != y && at(x, y) && at(y, x))
        return pair_msg("order not antisymmetric", x, y);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!at(x, y)) continue;
      for (Elem z = 0; z < n; ++z)
        if (at(y, z) && !at(x, z))
          return pair_msg("order not transitive", x, z);
    }
  return std::nullopt;
}

}  // namespace

std::vector<Elem> FiniteLattice::upset(Elem x) const {
  std::vector<Elem> out;
  for (Elem y = 0; y < n_; ++y)
    if (leq(x, y)) out.push_back(y);
  return out;
}

bool FiniteLattice::derive_tables() {
  meet_.assign(n_ * n_, -1);
  join_.assign(n_ * n_, -1);
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y) {
      Elem glb = -1, lub = -1;
      for (Elem z = 0; z < n_; ++z) {
        if (leq(z, x) && leq(z, y) && (glb < 0 || leq(glb, z))) glb = z;
        if (leq(x, z) && leq(y, z) && (lub < 0 || leq(z, lub))) lub = z;
      }
      // Candidate must dominate every common bound, not just the ones seen
      // before it in index order.
      if (glb >= 0)
        for (Elem z = 0; z < n_; ++z)
          if (leq(z, x) && leq(z, y) && !leq(z, glb)) glb = -1;
      if (lub >= 0)
        for (Elem z = 0; z < n_; ++z)
          if (leq(x, z) && leq(y, z) && !leq(lub, z)) lub = -1;
      if (glb < 0 || lub < 0) return false;
      meet_[x * n_ + y] = glb;
      join_[x * n_ + y] = lub;
    }
  bottom_ = 0;
  top_ = 0;
  for (Elem x = 0; x < n_; ++x) {
    bottom_ = meet(bottom_, x);
    top_ = join(top_, x);
  }
  return true;
}

FiniteLattice FiniteLattice::from_leq(int n, std::vector<std::uint8_t> leq) {
  if (n < 1) throw MalformedTableError("carrier size must be at least 1");
  if (auto defect = order_defect(n, leq))
    throw MalformedTableError(*defect);
  FiniteLattice lat;
  lat.n_ = n;
  lat.leq_ = std::move(leq);
  if (!lat.derive_tables())
    throw MalformedTableError("order is not a lattice: some pair lacks a meet or join");
  return lat;
}

std::optional<FiniteLattice> FiniteLattice::try_from_leq(
    int n, const std::vector<std::uint8_t>& leq) {
  if (n < 1 || order_defect(n, leq)) return std::nullopt;
  FiniteLattice lat;
  lat.n_ = n;
  lat.leq_ = leq;
  if (!lat.derive_tables()) return std::nullopt;
  return lat;
}

FiniteLattice FiniteLattice::from_meet_join(int n, std::vector<Elem> meet,
                                            std::vector<Elem> join) {
  if (n < 1) throw MalformedTableError("carrier size must be at least 1");
  if (static_cast<int>(meet.size()) != n * n ||
      static_cast<int>(join.size()) != n * n)
    throw MalformedTableError("meet/join table size mismatch");
  for (int i = 0; i < n * n; ++i)
    if (meet[i] < 0 || meet[i] >= n || join[i] < 0 || join[i] >= n)
      throw MalformedTableError("meet/join entry out of range");
  // leq is definable from meet; everything else is rechecked against it.
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      leq[x * n + y] = (meet[x * n + y] == x) ? 1 : 0;
  FiniteLattice lat = from_leq(n, std::move(leq));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (lat.meet(x, y) != meet[x * n + y])
        throw MalformedTableError(pair_msg("meet table disagrees with order", x, y));
      if (lat.join(x, y) != join[x * n + y])
        throw MalformedTableError(pair_msg("join table disagrees with order", x, y));
    }
  return lat;
}

}  // namespace fleck
