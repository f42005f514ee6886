#pragma once

#include <optional>
#include <vector>

#include "fleck/algebra.hpp"
#include "fleck/named.hpp"

namespace fleck {

// Row-major n*n table for a candidate implication; the thesis evaluators work
// on raw tables so interval members and decorated arrows share one engine.
using BinTable = std::vector<Elem>;

BinTable cnx_meet_table(const FleAlgebra& a, const std::vector<Elem>& delta);
BinTable cnx_prod_table(const FleAlgebra& a, const std::vector<Elem>& delta);

// Table realizing the given arrow kind; delta is required for cmd/cpd and
// ignored otherwise (cm/cp always use double negation).
BinTable arrow_table(const FleAlgebra& a, ArrowKind k,
                     const std::vector<Elem>* delta = nullptr);

enum class Thesis { AT, ATp, BT, BTp, BTw, BTwp, P1, P2, P3, BTstar };

Thesis thesis_from_name(const std::string& name);  // AT, AT', BT, ... BT*
std::string thesis_name(Thesis t);

struct ThesisOutcome {
  bool pass = true;
  std::vector<Elem> witness;  // assignment tuple (x[, y[, z]]) when failed
};

ThesisOutcome check_thesis(const FleAlgebra& a, const BinTable& f, Thesis t);

// AT, AT', BT, BT' in that order; first failure wins.
ThesisOutcome proto_table(const FleAlgebra& a, const BinTable& f);
// AT, AT', BTw, BTw'.
ThesisOutcome weak_table(const FleAlgebra& a, const BinTable& f);

// Least (x, y) violating symmetry of f in either direction; nullopt when f
// is symmetric as an order relation (x f y = y f x up to <=, both ways).
std::optional<std::pair<Elem, Elem>> ns_witness(const FleAlgebra& a,
                                                const BinTable& f);

// Witness that the strong-connexivity prohibitions fail: some satisfiable
// x f ~x or ~x f x (K1), else some x with both x f y and x f ~y satisfiable
// (K2); searched in that order, least witness each.
struct StrongRefutation {
  enum Kind { K1SelfNeg, K1NegSelf, K2 } kind;
  Elem x = -1, y = -1;
};
std::optional<StrongRefutation> strong_refutation(const FleAlgebra& a,
                                                  const BinTable& f);

}  // namespace fleck
