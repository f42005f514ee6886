#include "fleck/zn.hpp"

#include <algorithm>

#include "fleck/report.hpp"

namespace fleck {

ZVal ZnAlgebra::eval(const TermPtr& t, const ZAssignment& assignment) const {
  switch (t->kind()) {
    case TermKind::Var: {
      auto it = assignment.find(t->var_name());
      if (it == assignment.end())
        throw UnboundVariableError("unbound variable '" + t->var_name() + "'");
      return it->second;
    }
    case TermKind::Zero: return n;
    case TermKind::One: return 0;
    case TermKind::Meet:
      return std::min(eval(t->left(), assignment), eval(t->right(), assignment));
    case TermKind::Join:
      return std::max(eval(t->left(), assignment), eval(t->right(), assignment));
    case TermKind::Prod:
      return eval(t->left(), assignment) + eval(t->right(), assignment);
    case TermKind::Arrow:
      return eval(t->right(), assignment) - eval(t->left(), assignment);
    case TermKind::Neg: return n - eval(t->left(), assignment);
    case TermKind::Dm: return n - (n - eval(t->left(), assignment));
    case TermKind::Delta:
    case TermKind::BDiamond:
      throw UnboundDeltaError("bound unary maps are not available on this model");
    case TermKind::BiArrow: {
      const ZVal l = eval(t->left(), assignment);
      const ZVal r = eval(t->right(), assignment);
      return std::min(r - l, l - r);
    }
    case TermKind::CnxMeet:
    case TermKind::CnxProd: {
      const ZVal l = eval(t->left(), assignment);
      const ZVal r = eval(t->right(), assignment);
      const ZVal fwd = r - l;
      const ZVal back = (n - (n - l)) - r;  // r -> dm(l)
      return t->kind() == TermKind::CnxMeet ? std::min(fwd, back) : fwd + back;
    }
    case TermKind::CnxMeetD:
    case TermKind::CnxProdD:
      throw UnboundDeltaError("bound unary maps are not available on this model");
  }
  throw Error("unreachable term kind");
}

bool ZnAlgebra::atom_holds(const Atom& a, const ZAssignment& assignment) const {
  const ZVal l = eval(a.lhs, assignment);
  const ZVal r = eval(a.rhs, assignment);
  return a.is_identity ? l == r : l <= r;
}

std::optional<ZAssignment> ZnAlgebra::search_witness(const Statement& s,
                                                     ZVal window) const {
  const std::vector<std::string> vars = variables(s);
  std::vector<ZVal> vals(vars.size(), -window);
  while (true) {
    ZAssignment assignment;
    for (std::size_t i = 0; i < vars.size(); ++i) assignment[vars[i]] = vals[i];
    bool premises_hold = true;
    for (const Atom& p : s.premises)
      if (!atom_holds(p, assignment)) {
        premises_hold = false;
        break;
      }
    if (premises_hold && !atom_holds(s.conclusion, assignment))
      return assignment;
    if (vars.empty()) return std::nullopt;
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++vals[i] <= window) break;
      vals[i] = -window;
      if (i == 0) return std::nullopt;
    }
  }
}

}  // namespace fleck
