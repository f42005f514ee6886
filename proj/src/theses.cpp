#include "fleck/theses.hpp"

namespace fleck {

BinTable cnx_meet_table(const FleAlgebra& a, const std::vector<Elem>& delta) {
  const int n = a.size();
  BinTable f(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      f[x * n + y] = a.meet(a.arrow(x, y), a.arrow(y, delta[x]));
  return f;
}

BinTable cnx_prod_table(const FleAlgebra& a, const std::vector<Elem>& delta) {
  const int n = a.size();
  BinTable f(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      f[x * n + y] = a.prod(a.arrow(x, y), a.arrow(y, delta[x]));
  return f;
}

BinTable arrow_table(const FleAlgebra& a, ArrowKind k,
                     const std::vector<Elem>* delta) {
  switch (k) {
    case ArrowKind::Residual:
      return a.arrow_table();
    case ArrowKind::CnxMeet:
      return cnx_meet_table(a, a.dm_table());
    case ArrowKind::CnxProd:
      return cnx_prod_table(a, a.dm_table());
    case ArrowKind::CnxMeetD:
    case ArrowKind::CnxProdD:
      if (!delta)
        throw UnboundDeltaError("decorated arrow table needs a delta map");
      return k == ArrowKind::CnxMeetD ? cnx_meet_table(a, *delta)
                                      : cnx_prod_table(a, *delta);
  }
  throw Error("unreachable arrow kind");
}

Thesis thesis_from_name(const std::string& name) {
  if (name == "AT") return Thesis::AT;
  if (name == "AT'") return Thesis::ATp;
  if (name == "BT") return Thesis::BT;
  if (name == "BT'") return Thesis::BTp;
  if (name == "BTw") return Thesis::BTw;
  if (name == "BTw'") return Thesis::BTwp;
  if (name == "P1") return Thesis::P1;
  if (name == "P2") return Thesis::P2;
  if (name == "P3") return Thesis::P3;
  if (name == "BT*") return Thesis::BTstar;
  throw UnknownNameError("unknown thesis '" + name + "'");
}

std::string thesis_name(Thesis t) {
  switch (t) {
    case Thesis::AT: return "AT";
    case Thesis::ATp: return "AT'";
    case Thesis::BT: return "BT";
    case Thesis::BTp: return "BT'";
    case Thesis::BTw: return "BTw";
    case Thesis::BTwp: return "BTw'";
    case Thesis::P1: return "P1";
    case Thesis::P2: return "P2";
    case Thesis::P3: return "P3";
    case Thesis::BTstar: return "BT*";
  }
  return "?";
}

ThesisOutcome check_thesis(const FleAlgebra& a, const BinTable& f, Thesis t) {
  const int n = a.size();
  const Elem one = a.unit();
  std::vector<Elem> neg(n), dm(n);
  for (Elem x = 0; x < n; ++x) neg[x] = a.neg(x);
  for (Elem x = 0; x < n; ++x) dm[x] = neg[neg[x]];
  auto F = [&](Elem x, Elem y) { return f[x * n + y]; };
  auto asserted = [&](Elem v) { return a.leq(one, v); };

  switch (t) {
    case Thesis::AT:
      for (Elem x = 0; x < n; ++x)
        if (!asserted(neg[F(x, neg[x])])) return {false, {x}};
      return {};
    case Thesis::ATp:
      for (Elem x = 0; x < n; ++x)
        if (!asserted(neg[F(neg[x], x)])) return {false, {x}};
      return {};
    case Thesis::P1:
      for (Elem x = 0; x < n; ++x)
        if (!asserted(F(x, dm[x]))) return {false, {x}};
      return {};
    case Thesis::BT:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (!asserted(F(F(x, y), neg[F(x, neg[y])]))) return {false, {x, y}};
      return {};
    case Thesis::BTp:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (!asserted(F(F(x, neg[y]), neg[F(x, y)]))) return {false, {x, y}};
      return {};
    case Thesis::BTw:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (asserted(F(x, y)) && !asserted(neg[F(x, neg[y])]))
            return {false, {x, y}};
      return {};
    case Thesis::BTwp:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (asserted(F(x, neg[y])) && !asserted(neg[F(x, y)]))
            return {false, {x, y}};
      return {};
    case Thesis::P2:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (dm[F(x, y)] != neg[F(x, neg[y])]) return {false, {x, y}};
      return {};
    case Thesis::P3:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (neg[F(x, y)] != F(x, neg[y])) return {false, {x, y}};
      return {};
    case Thesis::BTstar:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          for (Elem z = 0; z < n; ++z)
            if (!asserted(F(F(x, y), F(F(y, z), neg[F(x, neg[z])]))))
              return {false, {x, y, z}};
      return {};
  }
  throw Error("unreachable thesis");
}

ThesisOutcome proto_table(const FleAlgebra& a, const BinTable& f) {
  for (Thesis t : {Thesis::AT, Thesis::ATp, Thesis::BT, Thesis::BTp}) {
    ThesisOutcome o = check_thesis(a, f, t);
    if (!o.pass) return o;
  }
  return {};
}

ThesisOutcome weak_table(const FleAlgebra& a, const BinTable& f) {
  for (Thesis t : {Thesis::AT, Thesis::ATp, Thesis::BTw, Thesis::BTwp}) {
    ThesisOutcome o = check_thesis(a, f, t);
    if (!o.pass) return o;
  }
  return {};
}

std::optional<std::pair<Elem, Elem>> ns_witness(const FleAlgebra& a,
                                                const BinTable& f) {
  const int n = a.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem fwd = f[x * n + y], back = f[y * n + x];
      if (!a.leq(fwd, back) || !a.leq(back, fwd)) return std::pair{x, y};
    }
  return std::nullopt;
}

std::optional<StrongRefutation> strong_refutation(const FleAlgebra& a,
                                                  const BinTable& f) {
  const int n = a.size();
  const Elem one = a.unit();
  std::vector<Elem> neg(n);
  for (Elem x = 0; x < n; ++x) neg[x] = a.neg(x);
  for (Elem x = 0; x < n; ++x)
    if (a.leq(one, f[x * n + neg[x]]))
      return StrongRefutation{StrongRefutation::K1SelfNeg, x, -1};
  for (Elem x = 0; x < n; ++x)
    if (a.leq(one, f[neg[x] * n + x]))
      return StrongRefutation{StrongRefutation::K1NegSelf, x, -1};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (a.leq(one, f[x * n + y]) && a.leq(one, f[x * n + neg[y]]))
        return StrongRefutation{StrongRefutation::K2, x, y};
  return std::nullopt;
}

}  // namespace fleck
