#include "fleck/eval.hpp"

#include <algorithm>

namespace fleck {

namespace {

struct Env {
  const FleAlgebra& a;
  const std::vector<std::string>& vars;  // sorted
  const std::vector<Elem>& vals;         // parallel to vars
  const Bindings& bind;

  Elem var(const std::string& name) const {
    auto it = std::lower_bound(vars.begin(), vars.end(), name);
    if (it == vars.end() || *it != name)
      throw UnboundVariableError("unbound variable '" + name + "'");
    return vals[it - vars.begin()];
  }

  Elem run(const TermPtr& t) const {
    switch (t->kind()) {
      case TermKind::Var: return var(t->var_name());
      case TermKind::Zero: return a.zero();
      case TermKind::One: return a.unit();
      case TermKind::Meet: return a.meet(run(t->left()), run(t->right()));
      case TermKind::Join: return a.join(run(t->left()), run(t->right()));
      case TermKind::Prod: return a.prod(run(t->left()), run(t->right()));
      case TermKind::Arrow: return a.arrow(run(t->left()), run(t->right()));
      case TermKind::Neg: return a.neg(run(t->left()));
      case TermKind::Dm: return a.dm(run(t->left()));
      case TermKind::Delta:
        if (!bind.delta)
          throw UnboundDeltaError("delta(...) used without a bound map");
        return (*bind.delta)[run(t->left())];
      case TermKind::BDiamond:
        if (!bind.bdiam)
          throw UnboundDeltaError("bdiam(...) used without a bound map");
        return (*bind.bdiam)[run(t->left())];
      case TermKind::BiArrow: {
        const Elem l = run(t->left()), r = run(t->right());
        return a.meet(a.arrow(l, r), a.arrow(r, l));
      }
      case TermKind::CnxMeet:
      case TermKind::CnxProd: {
        const Elem l = run(t->left()), r = run(t->right());
        const Elem fwd = a.arrow(l, r), back = a.arrow(r, a.dm(l));
        return t->kind() == TermKind::CnxMeet ? a.meet(fwd, back)
                                              : a.prod(fwd, back);
      }
      case TermKind::CnxMeetD:
      case TermKind::CnxProdD: {
        if (!bind.delta)
          throw UnboundDeltaError("decorated arrow used without a bound map");
        const Elem l = run(t->left()), r = run(t->right());
        const Elem fwd = a.arrow(l, r);
        const Elem back = a.arrow(r, (*bind.delta)[l]);
        return t->kind() == TermKind::CnxMeetD ? a.meet(fwd, back)
                                               : a.prod(fwd, back);
      }
    }
    throw Error("unreachable term kind");
  }
};

bool atom_holds(const Env& env, const Atom& atom) {
  const Elem l = env.run(atom.lhs);
  const Elem r = env.run(atom.rhs);
  return atom.is_identity ? l == r : env.a.leq(l, r);
}

void trace_term(const Env& env, const TermPtr& t, NamedValues& out) {
  if (t->left()) trace_term(env, t->left(), out);
  if (t->right()) trace_term(env, t->right(), out);
  const std::string text = to_string(t);
  for (const auto& [k, v] : out)
    if (k == text) return;
  out.emplace_back(text, env.a.label(env.run(t)));
}

}  // namespace

Elem eval(const FleAlgebra& a, const TermPtr& t,
          const std::map<std::string, Elem>& assignment,
          const Bindings& bind) {
  std::vector<std::string> vars;
  std::vector<Elem> vals;
  for (const auto& [k, v] : assignment) {
    if (v < 0 || v >= a.size())
      throw MalformedTableError("assignment value out of range for '" + k + "'");
    vars.push_back(k);
    vals.push_back(v);
  }
  return Env{a, vars, vals, bind}.run(t);
}

CheckReport check(const FleAlgebra& a, const Statement& s,
                  const Bindings& bind) {
  const std::vector<std::string> vars = variables(s);
  std::vector<Elem> vals(vars.size(), 0);
  const std::string rule = to_string(s);
  const int n = a.size();

  Env env{a, vars, vals, bind};
  while (true) {
    bool premises_hold = true;
    for (const Atom& p : s.premises)
      if (!atom_holds(env, p)) {
        premises_hold = false;
        break;
      }
    if (premises_hold && !atom_holds(env, s.conclusion)) {
      NamedValues witness;
      for (std::size_t i = 0; i < vars.size(); ++i)
        witness.emplace_back(vars[i], a.label(vals[i]));
      NamedValues trace;
      for (const Atom& p : s.premises) {
        trace_term(env, p.lhs, trace);
        trace_term(env, p.rhs, trace);
      }
      trace_term(env, s.conclusion.lhs, trace);
      trace_term(env, s.conclusion.rhs, trace);
      return CheckReport::fail(rule, std::move(witness), std::move(trace));
    }
    // Odometer: last variable fastest, so tuples ascend lexicographically.
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++vals[i] < n) break;
      vals[i] = 0;
      if (i == 0) return CheckReport::ok(rule);
    }
    if (vars.empty()) return CheckReport::ok(rule);
  }
}

}  // namespace fleck
