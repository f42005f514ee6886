#include "fleck/named.hpp"

#include "fleck/report.hpp"

namespace fleck {

ArrowKind arrow_kind_from_string(const std::string& s) {
  if (s == "res") return ArrowKind::Residual;
  if (s == "cm") return ArrowKind::CnxMeet;
  if (s == "cp") return ArrowKind::CnxProd;
  if (s == "cmd") return ArrowKind::CnxMeetD;
  if (s == "cpd") return ArrowKind::CnxProdD;
  throw UnknownNameError("unknown arrow kind '" + s + "' (want res|cm|cp|cmd|cpd)");
}

std::string to_string(ArrowKind k) {
  switch (k) {
    case ArrowKind::Residual: return "res";
    case ArrowKind::CnxMeet: return "cm";
    case ArrowKind::CnxProd: return "cp";
    case ArrowKind::CnxMeetD: return "cmd";
    case ArrowKind::CnxProdD: return "cpd";
  }
  return "?";
}

TermPtr apply_arrow(ArrowKind k, TermPtr l, TermPtr r) {
  switch (k) {
    case ArrowKind::Residual:
      return Term::arrow(std::move(l), std::move(r));
    case ArrowKind::CnxMeet:
      return Term::binary(TermKind::CnxMeet, std::move(l), std::move(r));
    case ArrowKind::CnxProd:
      return Term::binary(TermKind::CnxProd, std::move(l), std::move(r));
    case ArrowKind::CnxMeetD:
      return Term::binary(TermKind::CnxMeetD, std::move(l), std::move(r));
    case ArrowKind::CnxProdD:
      return Term::binary(TermKind::CnxProdD, std::move(l), std::move(r));
  }
  throw Error("unreachable arrow kind");
}

namespace {

TermPtr x() { return Term::var("x"); }
TermPtr y() { return Term::var("y"); }
TermPtr z() { return Term::var("z"); }

}  // namespace

Statement named_statement(const std::string& name, ArrowKind k) {
  auto imp = [&](TermPtr l, TermPtr r) {
    return apply_arrow(k, std::move(l), std::move(r));
  };
  if (name == "AT")  // nothing implies its own negation
    return Statement::assertional(Term::neg(imp(x(), Term::neg(x()))));
  if (name == "AT'")
    return Statement::assertional(Term::neg(imp(Term::neg(x()), x())));
  if (name == "BT")
    return Statement::assertional(
        imp(imp(x(), y()), Term::neg(imp(x(), Term::neg(y())))));
  if (name == "BT'")
    return Statement::assertional(
        imp(imp(x(), Term::neg(y())), Term::neg(imp(x(), y()))));
  if (name == "BT*")  // transitive strengthening of BT
    return Statement::assertional(
        imp(imp(x(), y()),
            imp(imp(y(), z()), Term::neg(imp(x(), Term::neg(z()))))));
  if (name == "BTw")  // rule form of BT
    return Statement::quasi(
        {Atom{false, Term::one(), imp(x(), y())}},
        Atom{false, Term::one(), Term::neg(imp(x(), Term::neg(y())))});
  if (name == "BTw'")
    return Statement::quasi(
        {Atom{false, Term::one(), imp(x(), Term::neg(y()))}},
        Atom{false, Term::one(), Term::neg(imp(x(), y()))});
  if (name == "P1")
    return Statement::assertional(imp(x(), Term::dm(x())));
  if (name == "P2")
    return Statement::identity(Term::dm(imp(x(), y())),
                               Term::neg(imp(x(), Term::neg(y()))));
  if (name == "P3")
    return Statement::identity(Term::neg(imp(x(), y())),
                               imp(x(), Term::neg(y())));
  if (name == "PC")
    return Statement::inequation(Term::meet(x(), Term::neg(x())),
                                 Term::zero());
  if (name == "SPC")
    return Statement::inequation(
        Term::meet(Term::neg(x()), Term::neg(Term::arrow(x(), y()))),
        Term::zero());
  if (name == "GLV_A")
    return Statement::identity(Term::neg(Term::prod(x(), y())),
                               Term::neg(Term::meet(x(), y())));
  if (name == "GLV_B")
    return Statement::assertional(
        Term::dm(Term::arrow(Term::dm(x()), x())));
  if (name == "GLV_B_ALT")
    return Statement::identity(
        Term::neg(Term::arrow(x(), y())),
        Term::neg(Term::join(Term::neg(x()), y())));
  if (name == "EFQ_Q")
    return Statement::quasi({Atom{false, Term::one(), Term::zero()}},
                            Atom{false, Term::one(), x()});
  if (name == "TOP_DM1")
    return Statement::inequation(x(), Term::dm(Term::one()));
  if (name == "A1_BDIAMOND")
    return Statement::inequation(
        Term::unary(TermKind::BDiamond, Term::neg(x())),
        Term::neg(Term::unary(TermKind::BDiamond, x())));
  if (name == "A2_BDIAMOND")
    return Statement::inequation(Term::dm(x()),
                                 Term::unary(TermKind::BDiamond, x()));
  throw UnknownNameError("unknown statement name '" + name + "'");
}

const std::vector<std::string>& named_statement_names() {
  static const std::vector<std::string> names = {
      "AT", "AT'", "BT", "BT'", "BTw", "BTw'", "BT*", "P1", "P2", "P3",
      "PC", "SPC", "GLV_A", "GLV_B", "GLV_B_ALT", "EFQ_Q", "TOP_DM1",
      "A1_BDIAMOND", "A2_BDIAMOND"};
  return names;
}

bool named_statement_takes_arrow(const std::string& name) {
  return name == "AT" || name == "AT'" || name == "BT" || name == "BT'" ||
         name == "BTw" || name == "BTw'" || name == "BT*" || name == "P1" ||
         name == "P2" || name == "P3";
}

}  // namespace fleck
