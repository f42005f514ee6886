#include "fleck/classify.hpp"

namespace fleck {

namespace {

NamedValues w1(const FleAlgebra& a, Elem x) { return {{"x", a.label(x)}}; }
NamedValues w2(const FleAlgebra& a, Elem x, Elem y) {
  return {{"x", a.label(x)}, {"y", a.label(y)}};
}

Flag from_outcome(const FleAlgebra& a, const ThesisOutcome& o) {
  Flag f;
  f.value = o.pass;
  if (!o.pass) {
    const char* names[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < o.witness.size(); ++i)
      f.witness.emplace_back(names[i], a.label(o.witness[i]));
  }
  return f;
}

}  // namespace

Classification classify(const FleAlgebra& a) {
  const int n = a.size();
  Classification c;

  c.integral.value = true;
  for (Elem x = 0; x < n; ++x)
    if (!a.leq(x, a.unit())) {
      c.integral = {false, w1(a, x)};
      break;
    }
  c.zero_bounded.value = true;
  for (Elem x = 0; x < n; ++x)
    if (!a.leq(a.zero(), x)) {
      c.zero_bounded = {false, w1(a, x)};
      break;
    }
  c.involutive.value = true;
  for (Elem x = 0; x < n; ++x)
    if (a.dm(x) != x) {
      c.involutive = {false, w1(a, x)};
      break;
    }
  c.pc.value = true;
  for (Elem x = 0; x < n; ++x)
    if (!a.leq(a.meet(x, a.neg(x)), a.zero())) {
      c.pc = {false, w1(a, x)};
      break;
    }
  c.spc.value = true;
  for (Elem x = 0; x < n && c.spc.value; ++x)
    for (Elem y = 0; y < n; ++y)
      if (!a.leq(a.meet(a.neg(x), a.neg(a.arrow(x, y))), a.zero())) {
        c.spc = {false, w2(a, x, y)};
        break;
      }

  c.boolean_alg.value =
      c.integral.value && c.involutive.value && c.pc.value;
  if (!c.boolean_alg.value)
    c.boolean_alg.witness = !c.integral.value    ? c.integral.witness
                            : !c.involutive.value ? c.involutive.witness
                                                  : c.pc.witness;
  // Cross-check: the definition must coincide with the direct term test.
  bool boolean_direct = true;
  for (Elem x = 0; x < n && boolean_direct; ++x)
    for (Elem y = 0; y < n; ++y)
      if (a.prod(x, y) != a.meet(x, y) ||
          a.arrow(x, y) != a.join(a.neg(x), y)) {
        boolean_direct = false;
        break;
      }
  if (boolean_direct != c.boolean_alg.value)
    throw Error("classification cross-check failed: boolean");

  c.zero_greatest.value = true;
  for (Elem x = 0; x < n; ++x)
    if (!a.leq(x, a.zero())) {
      c.zero_greatest = {false, w1(a, x)};
      break;
    }
  bool const_neg = true;
  for (Elem x = 1; x < n && const_neg; ++x)
    if (a.neg(x) != a.neg(0)) const_neg = false;
  if (const_neg != c.zero_greatest.value)
    throw Error("classification cross-check failed: zero_greatest");

  c.dm1_greatest.value = true;
  const Elem dm1 = a.dm(a.unit());
  for (Elem x = 0; x < n; ++x)
    if (!a.leq(x, dm1)) {
      c.dm1_greatest = {false, w1(a, x)};
      break;
    }

  c.glivenko_ba.value = true;
  for (Elem x = 0; x < n && c.glivenko_ba.value; ++x)
    for (Elem y = 0; y < n; ++y)
      if (a.neg(a.prod(x, y)) != a.neg(a.meet(x, y))) {
        c.glivenko_ba = {false, w2(a, x, y)};
        break;
      }
  if (c.glivenko_ba.value)
    for (Elem x = 0; x < n; ++x)
      if (!a.leq(a.unit(), a.dm(a.arrow(a.dm(x), x)))) {
        c.glivenko_ba = {false, w1(a, x)};
        break;
      }

  c.glivenko_ba_int_route.value = c.integral.value && c.spc.value;
  if (!c.glivenko_ba_int_route.value)
    c.glivenko_ba_int_route.witness =
        !c.integral.value ? c.integral.witness : c.spc.witness;
  if (c.integral.value) {
    if (c.glivenko_ba.value != c.spc.value)
      throw Error("classification cross-check failed: glivenko vs spc");
    bool alt = true;
    for (Elem x = 0; x < n && alt; ++x)
      for (Elem y = 0; y < n; ++y)
        if (a.neg(a.arrow(x, y)) != a.neg(a.join(a.neg(x), y))) {
          alt = false;
          break;
        }
    if (alt != c.glivenko_ba.value)
      throw Error("classification cross-check failed: glivenko vs negated arrow");
  }

  const BinTable cm = arrow_table(a, ArrowKind::CnxMeet);
  const BinTable cp = arrow_table(a, ArrowKind::CnxProd);
  c.proto_cnx_meet = from_outcome(a, proto_table(a, cm));
  c.proto_cnx_prod = from_outcome(a, proto_table(a, cp));
  c.weakly_cnx_meet = from_outcome(a, weak_table(a, cm));
  c.weakly_cnx_prod = from_outcome(a, weak_table(a, cp));

  if (auto w = ns_witness(a, cm))
    c.ns_meet = {true, w2(a, w->first, w->second)};
  if (auto w = ns_witness(a, cp))
    c.ns_prod = {true, w2(a, w->first, w->second)};

  for (Elem x = 0; x < n && !c.k1_refuted.value; ++x)
    if (a.leq(a.unit(), cm[x * n + a.neg(x)]) ||
        a.leq(a.unit(), cm[a.neg(x) * n + x]))
      c.k1_refuted = {true, w1(a, x)};
  for (Elem x = 0; x < n && !c.k2_refuted.value; ++x)
    for (Elem y = 0; y < n; ++y)
      if (a.leq(a.unit(), cm[x * n + y]) &&
          a.leq(a.unit(), cm[x * n + a.neg(y)])) {
        c.k2_refuted = {true, w2(a, x, y)};
        break;
      }

  c.one_leq_zero.value = a.leq(a.unit(), a.zero());

  return c;
}

namespace {

struct FlagEntry {
  const char* name;
  Flag Classification::* member;
};

constexpr FlagEntry kFlagTable[] = {
    {"integral", &Classification::integral},
    {"zero_bounded", &Classification::zero_bounded},
    {"involutive", &Classification::involutive},
    {"pc", &Classification::pc},
    {"spc", &Classification::spc},
    {"boolean", &Classification::boolean_alg},
    {"zero_greatest", &Classification::zero_greatest},
    {"dm1_greatest", &Classification::dm1_greatest},
    {"glivenko_ba", &Classification::glivenko_ba},
    {"glivenko_ba_int_route", &Classification::glivenko_ba_int_route},
    {"proto_cnx_meet", &Classification::proto_cnx_meet},
    {"proto_cnx_prod", &Classification::proto_cnx_prod},
    {"weakly_cnx_meet", &Classification::weakly_cnx_meet},
    {"weakly_cnx_prod", &Classification::weakly_cnx_prod},
    {"ns_meet", &Classification::ns_meet},
    {"ns_prod", &Classification::ns_prod},
    {"k1_refuted", &Classification::k1_refuted},
    {"k2_refuted", &Classification::k2_refuted},
    {"one_leq_zero", &Classification::one_leq_zero},
};

}  // namespace

const Flag* classification_flag(const Classification& c,
                                const std::string& name) {
  for (const FlagEntry& e : kFlagTable)
    if (name == e.name) return &(c.*e.member);
  return nullptr;
}

const std::vector<std::string>& classification_flag_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const FlagEntry& e : kFlagTable) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

}  // namespace fleck
