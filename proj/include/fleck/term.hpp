#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace fleck {

// Connectives of the statement language. Meet/Join/Prod/Arrow plus the two
// constants are primitive; the rest abbreviate combinations of them, except
// Delta and BDiamond which denote unary maps bound at evaluation time.
enum class TermKind {
  Var,
  Zero,
  One,
  Meet,
  Join,
  Prod,
  Arrow,     // ->
  BiArrow,   // <->
  Neg,       // ~
  Dm,        // dm(t), double negation
  Delta,     // delta(t), bound unary map
  BDiamond,  // bdiam(t), bound unary map
  CnxMeet,   // cm: (s -> t) /\ (t -> dm(s))
  CnxProd,   // cp: (s -> t) *  (t -> dm(s))
  CnxMeetD,  // cmd: (s -> t) /\ (t -> delta(s))
  CnxProdD,  // cpd: (s -> t) *  (t -> delta(s))
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
 public:
  TermKind kind() const { return kind_; }
  const std::string& var_name() const { return var_; }
  const TermPtr& left() const { return a_; }
  const TermPtr& right() const { return b_; }

  static TermPtr var(std::string name);
  static TermPtr zero();
  static TermPtr one();
  static TermPtr unary(TermKind k, TermPtr t);
  static TermPtr binary(TermKind k, TermPtr a, TermPtr b);

  static TermPtr neg(TermPtr t) { return unary(TermKind::Neg, std::move(t)); }
  static TermPtr dm(TermPtr t) { return unary(TermKind::Dm, std::move(t)); }
  static TermPtr meet(TermPtr a, TermPtr b) { return binary(TermKind::Meet, std::move(a), std::move(b)); }
  static TermPtr join(TermPtr a, TermPtr b) { return binary(TermKind::Join, std::move(a), std::move(b)); }
  static TermPtr prod(TermPtr a, TermPtr b) { return binary(TermKind::Prod, std::move(a), std::move(b)); }
  static TermPtr arrow(TermPtr a, TermPtr b) { return binary(TermKind::Arrow, std::move(a), std::move(b)); }

 private:
  TermKind kind_;
  std::string var_;
  TermPtr a_, b_;
  explicit Term(TermKind k) : kind_(k) {}
};

bool equal(const TermPtr& a, const TermPtr& b);
std::string to_string(const TermPtr& t);

// Rewrites abbreviations into primitives: ~t => t -> 0, dm(t) => ~~t,
// s <-> t => (s->t) /\ (t->s), cnx arrows into their definitions. Delta and
// BDiamond survive (they are not definable). Idempotent.
TermPtr expand(const TermPtr& t);

void collect_vars(const TermPtr& t, std::set<std::string>& out);

// One relation between two terms: s = t or s <= t.
struct Atom {
  bool is_identity = true;
  TermPtr lhs, rhs;
};

// Identity, inequation or quasi-identity. An assertional statement 1 <= t is
// represented as the inequation it is. premises is empty unless quasi.
struct Statement {
  std::vector<Atom> premises;
  Atom conclusion;

  bool is_quasi() const { return !premises.empty(); }

  static Statement identity(TermPtr l, TermPtr r);
  static Statement inequation(TermPtr l, TermPtr r);
  static Statement assertional(TermPtr t);
  static Statement quasi(std::vector<Atom> premises, Atom conclusion);
};

bool equal(const Atom& a, const Atom& b);
bool equal(const Statement& a, const Statement& b);
std::string to_string(const Atom& a);
std::string to_string(const Statement& s);

// Free variables in sorted order; drives assignment enumeration everywhere.
std::vector<std::string> variables(const Statement& s);

bool uses_delta(const Statement& s);
bool uses_bdiamond(const Statement& s);

}  // namespace fleck
