#include "fleck/term.hpp"

namespace fleck {

TermPtr Term::var(std::string name) {
  auto t = std::shared_ptr<Term>(new Term(TermKind::Var));
  t->var_ = std::move(name);
  return t;
}

TermPtr Term::zero() { return std::shared_ptr<Term>(new Term(TermKind::Zero)); }
TermPtr Term::one() { return std::shared_ptr<Term>(new Term(TermKind::One)); }

TermPtr Term::unary(TermKind k, TermPtr t) {
  auto r = std::shared_ptr<Term>(new Term(k));
  r->a_ = std::move(t);
  return r;
}

TermPtr Term::binary(TermKind k, TermPtr a, TermPtr b) {
  auto r = std::shared_ptr<Term>(new Term(k));
  r->a_ = std::move(a);
  r->b_ = std::move(b);
  return r;
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case TermKind::Var:
      return a->var_name() == b->var_name();
    case TermKind::Zero:
    case TermKind::One:
      return true;
    case TermKind::Neg:
    case TermKind::Dm:
    case TermKind::Delta:
    case TermKind::BDiamond:
      return equal(a->left(), b->left());
    default:
      return equal(a->left(), b->left()) && equal(a->right(), b->right());
  }
}

namespace {

// Binding strength; comparison operators sit below all of these.
// arrows < \/ < /\ < * < unary/atoms, arrows right-associative.
int prec(TermKind k) {
  switch (k) {
    case TermKind::Arrow:
    case TermKind::BiArrow:
    case TermKind::CnxMeet:
    case TermKind::CnxProd:
    case TermKind::CnxMeetD:
    case TermKind::CnxProdD:
      return 1;
    case TermKind::Join:
      return 2;
    case TermKind::Meet:
      return 3;
    case TermKind::Prod:
      return 4;
    default:
      return 5;
  }
}

const char* op_token(TermKind k) {
  switch (k) {
    case TermKind::Arrow: return "->";
    case TermKind::BiArrow: return "<->";
    case TermKind::CnxMeet: return "cm";
    case TermKind::CnxProd: return "cp";
    case TermKind::CnxMeetD: return "cmd";
    case TermKind::CnxProdD: return "cpd";
    case TermKind::Join: return "\\/";
    case TermKind::Meet: return "/\\";
    case TermKind::Prod: return "*";
    default: return "?";
  }
}

void print(const TermPtr& t, std::string& out) {
  switch (t->kind()) {
    case TermKind::Var:
      out += t->var_name();
      return;
    case TermKind::Zero:
      out += '0';
      return;
    case TermKind::One:
      out += '1';
      return;
    case TermKind::Neg: {
      const bool parens = prec(t->left()->kind()) < 5;
      out += '~';
      if (parens) out += '(';
      print(t->left(), out);
      if (parens) out += ')';
      return;
    }
    case TermKind::Dm:
    case TermKind::Delta:
    case TermKind::BDiamond:
      out += t->kind() == TermKind::Dm      ? "dm("
             : t->kind() == TermKind::Delta ? "delta("
                                            : "bdiam(";
      print(t->left(), out);
      out += ')';
      return;
    default:
      break;
  }
  const int p = prec(t->kind());
  const bool right_assoc = p == 1;
  // Right-associative level: parenthesize a left child of the same level.
  // Left-associative levels: parenthesize a right child of the same level.
  const int lp = prec(t->left()->kind());
  const int rp = prec(t->right()->kind());
  const bool lparens = right_assoc ? lp <= p : lp < p;
  const bool rparens = right_assoc ? rp < p : rp <= p;
  if (lparens) out += '(';
  print(t->left(), out);
  if (lparens) out += ')';
  out += ' ';
  out += op_token(t->kind());
  out += ' ';
  if (rparens) out += '(';
  print(t->right(), out);
  if (rparens) out += ')';
}

}  // namespace

std::string to_string(const TermPtr& t) {
  std::string out;
  print(t, out);
  return out;
}

TermPtr expand(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Var:
    case TermKind::Zero:
    case TermKind::One:
      return t;
    case TermKind::Neg:
      return Term::arrow(expand(t->left()), Term::zero());
    case TermKind::Dm:
      return expand(Term::neg(Term::neg(t->left())));
    case TermKind::Delta:
    case TermKind::BDiamond:
      return Term::unary(t->kind(), expand(t->left()));
    case TermKind::BiArrow:
      return Term::meet(Term::arrow(expand(t->left()), expand(t->right())),
                        Term::arrow(expand(t->right()), expand(t->left())));
    case TermKind::CnxMeet:
    case TermKind::CnxProd:
    case TermKind::CnxMeetD:
    case TermKind::CnxProdD: {
      const bool meety =
          t->kind() == TermKind::CnxMeet || t->kind() == TermKind::CnxMeetD;
      const bool dmarrow =
          t->kind() == TermKind::CnxMeet || t->kind() == TermKind::CnxProd;
      TermPtr s = expand(t->left());
      TermPtr u = expand(t->right());
      TermPtr back = dmarrow ? expand(Term::dm(s))
                             : Term::unary(TermKind::Delta, s);
      TermPtr lhs = Term::arrow(s, u);
      TermPtr rhs = Term::arrow(u, back);
      return meety ? Term::meet(lhs, rhs) : Term::prod(lhs, rhs);
    }
    default:
      return Term::binary(t->kind(), expand(t->left()), expand(t->right()));
  }
}

void collect_vars(const TermPtr& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind() == TermKind::Var) out.insert(t->var_name());
  collect_vars(t->left(), out);
  collect_vars(t->right(), out);
}

Statement Statement::identity(TermPtr l, TermPtr r) {
  Statement s;
  s.conclusion = Atom{true, std::move(l), std::move(r)};
  return s;
}

Statement Statement::inequation(TermPtr l, TermPtr r) {
  Statement s;
  s.conclusion = Atom{false, std::move(l), std::move(r)};
  return s;
}

Statement Statement::assertional(TermPtr t) {
  return inequation(Term::one(), std::move(t));
}

Statement Statement::quasi(std::vector<Atom> premises, Atom conclusion) {
  Statement s;
  s.premises = std::move(premises);
  s.conclusion = std::move(conclusion);
  return s;
}

bool equal(const Atom& a, const Atom& b) {
  return a.is_identity == b.is_identity && equal(a.lhs, b.lhs) &&
         equal(a.rhs, b.rhs);
}

bool equal(const Statement& a, const Statement& b) {
  if (a.premises.size() != b.premises.size()) return false;
  for (std::size_t i = 0; i < a.premises.size(); ++i)
    if (!equal(a.premises[i], b.premises[i])) return false;
  return equal(a.conclusion, b.conclusion);
}

std::string to_string(const Atom& a) {
  return to_string(a.lhs) + (a.is_identity ? " = " : " <= ") +
         to_string(a.rhs);
}

std::string to_string(const Statement& s) {
  std::string out;
  for (const Atom& p : s.premises) {
    if (!out.empty()) out += ", ";
    out += to_string(p);
  }
  if (!out.empty()) out += " |- ";
  out += to_string(s.conclusion);
  return out;
}

std::vector<std::string> variables(const Statement& s) {
  std::set<std::string> vars;
  for (const Atom& p : s.premises) {
    collect_vars(p.lhs, vars);
    collect_vars(p.rhs, vars);
  }
  collect_vars(s.conclusion.lhs, vars);
  collect_vars(s.conclusion.rhs, vars);
  return {vars.begin(), vars.end()};
}

namespace {

bool term_uses(const TermPtr& t, TermKind k1, TermKind k2, TermKind k3) {
  if (!t) return false;
  if (t->kind() == k1 || t->kind() == k2 || t->kind() == k3) return true;
  return term_uses(t->left(), k1, k2, k3) || term_uses(t->right(), k1, k2, k3);
}

bool stmt_uses(const Statement& s, TermKind k1, TermKind k2, TermKind k3) {
  for (const Atom& p : s.premises)
    if (term_uses(p.lhs, k1, k2, k3) || term_uses(p.rhs, k1, k2, k3))
      return true;
  return term_uses(s.conclusion.lhs, k1, k2, k3) ||
         term_uses(s.conclusion.rhs, k1, k2, k3);
}

}  // namespace

bool uses_delta(const Statement& s) {
  return stmt_uses(s, TermKind::Delta, TermKind::CnxMeetD, TermKind::CnxProdD);
}

bool uses_bdiamond(const Statement& s) {
  return stmt_uses(s, TermKind::BDiamond, TermKind::BDiamond,
                   TermKind::BDiamond);
}

}  // namespace fleck
