#include "fleck/fixtures.hpp"

#include <algorithm>

#include "fleck/eval.hpp"
#include "fleck/theses.hpp"

namespace fleck {

namespace {

FiniteLattice chain(int k) {
  std::vector<std::uint8_t> leq(k * k, 0);
  for (int x = 0; x < k; ++x)
    for (int y = x; y < k; ++y) leq[x * k + y] = 1;
  return FiniteLattice::from_leq(k, std::move(leq));
}

std::vector<Elem> meet_product(const FiniteLattice& lat) {
  const int n = lat.size();
  std::vector<Elem> prod(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) prod[x * n + y] = lat.meet(x, y);
  return prod;
}

FleAlgebra must_build(FiniteLattice lat, std::vector<Elem> prod, Elem unit,
                      Elem zero, std::vector<std::string> labels) {
  BuildResult r = build_algebra(std::move(lat), std::move(prod), unit, zero,
                                std::move(labels));
  if (!r.algebra)
    throw Error("internal defect: fixture fails to validate: " +
                r.report.rule);
  return *std::move(r.algebra);
}

Expectation named_exp(const std::string& nm, ArrowKind k, bool pass,
                      NamedValues witness = {}) {
  Expectation e;
  e.subject =
      named_statement_takes_arrow(nm) ? nm + "(" + to_string(k) + ")" : nm;
  e.expect_pass = pass;
  e.expect_witness = std::move(witness);
  e.run = [nm, k](const Fixture& f) {
    return check(*f.algebra, named_statement(nm, k));
  };
  return e;
}

// The report's pass mirrors the flag's value, so expect_pass is the expected
// flag value; existential flags witness their true side.
Expectation flag_exp(const std::string& flag, bool want,
                     NamedValues witness = {}) {
  Expectation e;
  e.subject = "flag:" + flag;
  e.expect_pass = want;
  e.expect_witness = std::move(witness);
  e.run = [flag](const Fixture& f) {
    const Classification c = classify(*f.algebra);
    const Flag* fl = classification_flag(c, flag);
    if (!fl) throw UnknownNameError("unknown flag '" + flag + "'");
    CheckReport r;
    r.pass = fl->value;
    r.rule = "flag:" + flag;
    r.witness = fl->witness;
    return r;
  };
  return e;
}

Expectation custom_exp(std::string subject, bool pass,
                       std::function<CheckReport(const Fixture&)> run,
                       NamedValues witness = {}) {
  Expectation e;
  e.subject = std::move(subject);
  e.expect_pass = pass;
  e.expect_witness = std::move(witness);
  e.run = std::move(run);
  return e;
}

CheckReport z_window_report(const ZnAlgebra& z, const Statement& s,
                            ZVal window = 10) {
  CheckReport r;
  r.rule = to_string(s) + "  [window " + std::to_string(-window) + ".." +
           std::to_string(window) + "]";
  const std::optional<ZAssignment> w = z.search_witness(s, window);
  if (!w) {
    r.pass = true;
    return r;
  }
  r.pass = false;
  for (const auto& [name, val] : *w)
    r.witness.emplace_back(name, std::to_string(val));
  return r;
}

CheckReport value_report(const std::string& rule, long long got,
                         long long want) {
  CheckReport r;
  r.rule = rule;
  r.pass = got == want;
  r.witness = {{"value", std::to_string(got)},
               {"expected", std::to_string(want)}};
  if (r.pass) r.witness.clear();
  return r;
}

Fixture make_fig1() {
  Fixture f;
  f.name = "fig1_pc_not_spc";
  f.provenance =
      "three-element chain bot < 0 < 1 with product = meet; "
      "pseudo-complemented but not strongly so";
  FiniteLattice lat = chain(3);
  std::vector<Elem> prod = meet_product(lat);
  f.algebra = must_build(std::move(lat), std::move(prod), 2, 1,
                         {"bot", "0", "1"});
  f.expected.push_back(flag_exp("integral", true));
  f.expected.push_back(flag_exp("pc", true));
  f.expected.push_back(
      flag_exp("spc", false, {{"x", "0"}, {"y", "bot"}}));
  f.expected.push_back(flag_exp("glivenko_ba", false));
  f.expected.push_back(named_exp("PC", ArrowKind::CnxMeet, true));
  f.expected.push_back(custom_exp(
      "SPC with the failing value", false,
      [](const Fixture& fx) {
        const FleAlgebra& a = *fx.algebra;
        const Statement s = named_statement("SPC");
        CheckReport r = check(a, s);
        // Surface the left-hand value at the reported witness so the
        // exactness checks downstream can pin it.
        if (!r.pass && r.witness.size() == 2) {
          const Elem lhs = eval(a, s.conclusion.lhs,
                                {{"x", 1}, {"y", 0}});
          r.witness.emplace_back("lhs", a.label(lhs));
        }
        r.trace.clear();
        return r;
      },
      {{"x", "0"}, {"y", "bot"}, {"lhs", "1"}}));
  f.expected.push_back(named_exp("BT", ArrowKind::CnxMeet, false,
                                 {{"x", "0"}, {"y", "bot"}}));
  return f;
}

Fixture make_heyting_star() {
  Fixture f;
  f.name = "heyting_star";
  f.provenance =
      "three-element Heyting chain with the pointed constant moved from the "
      "bottom to the middle element, which keeps a bottom strictly below 0; "
      "weakly connexive for the meet arrow yet not proto-connexive";
  FiniteLattice lat = chain(3);
  std::vector<Elem> prod = meet_product(lat);
  f.algebra =
      must_build(std::move(lat), std::move(prod), 2, 1, {"bot", "0", "1"});
  f.expected.push_back(named_exp("AT", ArrowKind::CnxMeet, true));
  f.expected.push_back(named_exp("AT'", ArrowKind::CnxMeet, true));
  f.expected.push_back(named_exp("BTw", ArrowKind::CnxMeet, true));
  f.expected.push_back(named_exp("BTw'", ArrowKind::CnxMeet, true));
  f.expected.push_back(named_exp("P3", ArrowKind::CnxMeet, false,
                                 {{"x", "0"}, {"y", "bot"}}));
  f.expected.push_back(flag_exp("pc", true));
  f.expected.push_back(flag_exp("spc", false));
  f.expected.push_back(custom_exp(
      "weakly connexive but not proto-connexive, meet arrow", true,
      [](const Fixture& fx) {
        const CheckReport weak = weakly_connexive(*fx.algebra, ArrowKind::CnxMeet);
        const CheckReport proto = proto_connexive(*fx.algebra, ArrowKind::CnxMeet);
        CheckReport r;
        r.rule = "weak(cm) and not proto(cm)";
        r.pass = weak.pass && !proto.pass;
        if (!proto.pass) r.witness = proto.witness;
        return r;
      }));
  return f;
}

Fixture make_btstar_six() {
  Fixture f;
  f.name = "btstar_six";
  f.provenance =
      "six elements bot < 0 < b,c < a < 1 (b, c incomparable); unit 1, bot "
      "absorbing, x*x = x for x != 0, 0*x = bot for x != 1, a*b = b, "
      "a*c = c, b*c = bot";
  const int n = 6;
  // Indices: bot=0, "0"=1, b=2, c=3, a=4, "1"=5.
  std::vector<std::uint8_t> leq(n * n, 0);
  auto rel = [&](int x, int y) { leq[x * n + y] = 1; };
  for (int x = 0; x < n; ++x) rel(x, x);
  for (int y = 1; y < n; ++y) rel(0, y);
  rel(1, 2); rel(1, 3); rel(1, 4); rel(1, 5);
  rel(2, 4); rel(2, 5);
  rel(3, 4); rel(3, 5);
  rel(4, 5);
  const std::vector<Elem> prod = {
      0, 0, 0, 0, 0, 0,
      0, 0, 0, 0, 0, 1,
      0, 0, 2, 0, 2, 2,
      0, 0, 0, 3, 3, 3,
      0, 0, 2, 3, 4, 4,
      0, 1, 2, 3, 4, 5,
  };
  f.algebra = must_build(FiniteLattice::from_leq(n, std::move(leq)), prod, 5,
                         1, {"bot", "0", "b", "c", "a", "1"});
  f.expected.push_back(flag_exp("integral", true));
  f.expected.push_back(flag_exp("spc", true));
  f.expected.push_back(flag_exp("glivenko_ba", true));
  f.expected.push_back(flag_exp("proto_cnx_meet", true));
  f.expected.push_back(custom_exp(
      "derived residual spot values", true, [](const Fixture& fx) {
        const FleAlgebra& a = *fx.algebra;
        CheckReport r;
        r.rule = "~c = b, ~b = c, 0 -> bot = a";
        r.pass = a.neg(3) == 2 && a.neg(2) == 3 && a.arrow(1, 0) == 4;
        if (!r.pass)
          r.witness = {{"~c", a.label(a.neg(3))},
                       {"~b", a.label(a.neg(2))},
                       {"0 -> bot", a.label(a.arrow(1, 0))}};
        return r;
      }));
  f.expected.push_back(custom_exp(
      "proto(cp)", true, [](const Fixture& fx) {
        return proto_connexive(*fx.algebra, ArrowKind::CnxProd);
      }));
  f.expected.push_back(custom_exp(
      "BT*(cp) instance at (0, 1, b)", false,
      [](const Fixture& fx) {
        const FleAlgebra& a = *fx.algebra;
        const BinTable F = arrow_table(a, ArrowKind::CnxProd);
        auto cp = [&](Elem u, Elem v) { return F[u * a.size() + v]; };
        const Elem x = 1, y = 5, z = 2;
        const Elem value =
            cp(cp(x, y), cp(cp(y, z), a.neg(cp(x, a.neg(z)))));
        CheckReport r;
        r.rule = "(x cp y) cp ((y cp z) cp ~(x cp ~z))";
        r.pass = a.leq(a.unit(), value);
        r.witness = {{"x", a.label(x)},
                     {"y", a.label(y)},
                     {"z", a.label(z)},
                     {"value", a.label(value)}};
        return r;
      },
      {{"x", "0"}, {"y", "1"}, {"z", "b"}, {"value", "a"}}));
  f.expected.push_back(named_exp("BT*", ArrowKind::CnxProd, false));
  return f;
}

Fixture make_delta_four() {
  Fixture f;
  f.name = "delta_four";
  f.provenance =
      "four-element chain bot < 1 < a < 0; bot absorbing, a*a = a, "
      "a*0 = 0*0 = 0; admits an increasing idempotent delta different from "
      "double negation";
  const int n = 4;
  // Indices: bot=0, "1"=1, a=2, "0"=3.
  const std::vector<Elem> prod = {
      0, 0, 0, 0,
      0, 1, 2, 3,
      0, 2, 2, 3,
      0, 3, 3, 3,
  };
  f.algebra =
      must_build(chain(n), prod, 1, 3, {"bot", "1", "a", "0"});
  f.expected.push_back(flag_exp("zero_greatest", true));
  f.expected.push_back(flag_exp("glivenko_ba", true));
  f.expected.push_back(custom_exp(
      "AT and AT' hold for cpd under every increasing delta", true,
      [](const Fixture& fx) {
        const FleAlgebra& a = *fx.algebra;
        const std::vector<UnaryMap> maps = increasing_maps(a);
        CheckReport r;
        // Negation is constantly the top element here, so both Aristotle
        // forms pass no matter how the arrow is decorated.
        r.rule = "both Aristotle theses for every decorated product arrow";
        r.pass = true;
        for (std::size_t i = 0; i < maps.size(); ++i) {
          const BinTable t = cnx_prod_table(a, maps[i].table);
          for (const Thesis th : {Thesis::AT, Thesis::ATp}) {
            const ThesisOutcome out = check_thesis(a, t, th);
            if (!out.pass) {
              r.pass = false;
              r.witness = {{"delta_index", std::to_string(i)},
                           {"thesis", thesis_name(th)}};
              return r;
            }
          }
        }
        r.note = std::to_string(maps.size()) + " increasing maps";
        return r;
      }));
  f.expected.push_back(custom_exp(
      "exactly two increasing deltas make cpd proto-connexive, dm included",
      true, [](const Fixture& fx) {
        const FleAlgebra& a = *fx.algebra;
        const std::vector<UnaryMap> maps = increasing_maps(a);
        int passing = 0;
        bool dm_passes = false;
        const std::vector<Elem> dmt = a.dm_table();
        for (const UnaryMap& m : maps) {
          if (!proto_connexive(a, ArrowKind::CnxProdD, &m).pass) continue;
          ++passing;
          if (m.table == dmt) dm_passes = true;
        }
        CheckReport r;
        r.rule = "count increasing deltas whose cpd passes all four theses";
        r.pass = passing == 2 && dm_passes;
        r.note = std::to_string(passing) + " of " +
                 std::to_string(maps.size()) + " pass";
        return r;
      }));
  f.expected.push_back(custom_exp(
      "the printed delta is increasing, idempotent, and differs from dm",
      true, [](const Fixture& fx) {
        const FleAlgebra& a = *fx.algebra;
        const UnaryMap d = UnaryMap::analyze(a, {3, 3, 2, 3});
        CheckReport r;
        r.rule = "delta: bot,1,0 -> 0 and a -> a";
        r.pass = d.is_increasing && d.is_idempotent && d.table != a.dm_table();
        return r;
      }));
  f.expected.push_back(custom_exp(
      "BT fails for the printed delta's product arrow", false,
      [](const Fixture& fx) {
        const FleAlgebra& a = *fx.algebra;
        const BinTable t = cnx_prod_table(a, {3, 3, 2, 3});
        const ThesisOutcome out = check_thesis(a, t, Thesis::BT);
        CheckReport r;
        // a cpd a = a, and BT instantiates to 0*(0 -> delta a) = bot < 1.
        r.rule = "BT for cpd decorated by the printed delta";
        r.pass = out.pass;
        if (!out.pass)
          r.witness = {{"x", a.label(out.witness[0])},
                       {"y", a.label(out.witness[1])}};
        return r;
      },
      {{"x", "a"}, {"y", "a"}}));
  f.expected.push_back(custom_exp(
      "delta forcing: meet side pinned to dm, product side not", true,
      [](const Fixture& fx) {
        const DeltaForcingReport d = delta_forcing(*fx.algebra);
        CheckReport r;
        r.rule = "meet_forced and multiple product-arrow deltas";
        r.pass = d.meet_forced && d.prod_bt_passing.size() >= 2;
        r.note = std::to_string(d.prod_bt_passing.size()) +
                 " product-side deltas pass BT";
        return r;
      }));
  return f;
}

Fixture make_heyting_chain(long long k) {
  if (k < 2 || k > 64)
    throw PreconditionError("heyting_chain takes a length between 2 and 64");
  Fixture f;
  f.name = "heyting_chain(" + std::to_string(k) + ")";
  f.provenance = "chain of " + std::to_string(k) +
                 " elements with product = meet, unit = top, zero = bottom";
  const int n = static_cast<int>(k);
  FiniteLattice lat = chain(n);
  std::vector<Elem> prod = meet_product(lat);
  f.algebra = must_build(std::move(lat), std::move(prod), n - 1, 0, {});
  f.expected.push_back(flag_exp("integral", true));
  f.expected.push_back(flag_exp("zero_bounded", true));
  f.expected.push_back(flag_exp("pc", true));
  f.expected.push_back(flag_exp("glivenko_ba", true));
  f.expected.push_back(flag_exp("boolean", k == 2));
  f.expected.push_back(flag_exp("ns_meet", k > 2));
  f.expected.push_back(custom_exp("proto(cm)", true, [](const Fixture& fx) {
    return proto_connexive(*fx.algebra, ArrowKind::CnxMeet);
  }));
  return f;
}

Fixture make_boolean(long long m) {
  if (m < 1 || m > 64 || (m & (m - 1)) != 0)
    throw PreconditionError(
        "boolean takes a power-of-two size between 1 and 64");
  Fixture f;
  f.name = "boolean(" + std::to_string(m) + ")";
  f.provenance = "powerset algebra on " + std::to_string(m) +
                 " elements; product = meet, arrow = material implication";
  const int n = static_cast<int>(m);
  std::vector<std::uint8_t> leq(n * n, 0);
  std::vector<Elem> prod(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      leq[x * n + y] = (x & y) == x ? 1 : 0;
      prod[x * n + y] = x & y;
    }
  f.algebra = must_build(FiniteLattice::from_leq(n, std::move(leq)),
                         std::move(prod), n - 1, 0, {});
  f.expected.push_back(flag_exp("boolean", true));
  f.expected.push_back(flag_exp("glivenko_ba", true));
  f.expected.push_back(flag_exp("ns_meet", false));
  f.expected.push_back(flag_exp("ns_prod", false));
  f.expected.push_back(custom_exp("proto(cm)", true, [](const Fixture& fx) {
    return proto_connexive(*fx.algebra, ArrowKind::CnxMeet);
  }));
  f.expected.push_back(custom_exp("proto(cp)", true, [](const Fixture& fx) {
    return proto_connexive(*fx.algebra, ArrowKind::CnxProd);
  }));
  return f;
}

Fixture make_z(long long n) {
  Fixture f;
  f.name = "z(" + std::to_string(n) + ")";
  f.provenance =
      "the integers with min, max, and addition; x -> y = y - x, unit 0, "
      "pointed constant " + std::to_string(n) + "; window-checked only";
  f.zn = ZnAlgebra{n};

  f.expected.push_back(custom_exp(
      "involutive across the window", true, [](const Fixture& fx) {
        const TermPtr t = Term::dm(Term::var("x"));
        CheckReport r;
        r.rule = "dm(x) = x on [-10, 10]";
        r.pass = true;
        for (ZVal v = -10; v <= 10; ++v)
          if (fx.zn->eval(t, {{"x", v}}) != v) {
            r.pass = false;
            r.witness = {{"x", std::to_string(v)}};
            break;
          }
        return r;
      }));

  if (n == -1) {
    f.expected.push_back(custom_exp(
        "AT(cp) window search", false,
        [](const Fixture& fx) {
          return z_window_report(*fx.zn, named_statement("AT", ArrowKind::CnxProd));
        },
        {{"x", "-10"}}));
    f.expected.push_back(custom_exp(
        "AT(cp) failing value", true, [](const Fixture& fx) {
          const TermPtr x = Term::var("x");
          const TermPtr body = Term::neg(
              apply_arrow(ArrowKind::CnxProd, x, Term::neg(x)));
          return value_report("~(x cp ~x) at x = 0", fx.zn->eval(body, {{"x", 0}}),
                              -1);
        }));
  }
  if (n == 5) {
    f.expected.push_back(custom_exp(
        "P2(cp) window search", false,
        [](const Fixture& fx) {
          return z_window_report(*fx.zn, named_statement("P2", ArrowKind::CnxProd));
        },
        {{"x", "-10"}, {"y", "-10"}}));
    f.expected.push_back(custom_exp(
        "P2(cp) sides at the origin", true, [](const Fixture& fx) {
          const TermPtr x = Term::var("x");
          const TermPtr y = Term::var("y");
          const TermPtr lhs =
              Term::dm(apply_arrow(ArrowKind::CnxProd, x, y));
          const TermPtr rhs = Term::neg(
              apply_arrow(ArrowKind::CnxProd, x, Term::neg(y)));
          const ZAssignment at{{"x", 0}, {"y", 0}};
          CheckReport left =
              value_report("dm(x cp y) at the origin", fx.zn->eval(lhs, at), 0);
          CheckReport right = value_report("~(x cp ~y) at the origin",
                                           fx.zn->eval(rhs, at), 5);
          CheckReport r;
          r.rule = left.rule + "; " + right.rule;
          r.pass = left.pass && right.pass;
          if (!r.pass) {
            r.witness = left.witness;
            r.witness.insert(r.witness.end(), right.witness.begin(),
                             right.witness.end());
          }
          return r;
        }));
  }
  if (n == 0) {
    f.expected.push_back(custom_exp(
        "P2(cp) window search", true, [](const Fixture& fx) {
          return z_window_report(*fx.zn, named_statement("P2", ArrowKind::CnxProd));
        }));
    f.expected.push_back(custom_exp(
        "BT(cm) instance at (0, 1)", false, [](const Fixture& fx) {
          const TermPtr x = Term::var("x");
          const TermPtr y = Term::var("y");
          const TermPtr body = apply_arrow(
              ArrowKind::CnxMeet, apply_arrow(ArrowKind::CnxMeet, x, y),
              Term::neg(apply_arrow(ArrowKind::CnxMeet, x, Term::neg(y))));
          const ZVal v = fx.zn->eval(body, {{"x", 0}, {"y", 1}});
          CheckReport r;
          r.rule = "(x cm y) cm ~(x cm ~y) at (0, 1)";
          r.pass = v >= 0;
          r.witness = {{"x", "0"}, {"y", "1"}, {"value", std::to_string(v)}};
          return r;
        },
        {{"x", "0"}, {"y", "1"}, {"value", "-2"}}));
  }
  return f;
}

long long parse_param(const std::string& rest, const std::string& base) {
  std::string digits = rest;
  if (!digits.empty() && digits.front() == '(') {
    if (digits.back() != ')')
      throw UnknownFixtureError("unbalanced parameter in fixture name");
    digits = digits.substr(1, digits.size() - 2);
  }
  if (digits.empty())
    throw UnknownFixtureError("fixture '" + base + "' needs a parameter");
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(digits, &used);
  } catch (...) {
    throw UnknownFixtureError("bad fixture parameter '" + digits + "'");
  }
  if (used != digits.size())
    throw UnknownFixtureError("bad fixture parameter '" + digits + "'");
  return value;
}

}  // namespace

Fixture fixture(const std::string& name) {
  if (name == "fig1_pc_not_spc") return make_fig1();
  if (name == "btstar_six") return make_btstar_six();
  if (name == "delta_four") return make_delta_four();
  if (name == "heyting_star") return make_heyting_star();
  for (const std::string& base : {std::string("heyting_chain"),
                                  std::string("boolean"), std::string("z")}) {
    if (name.size() > base.size() && name.compare(0, base.size(), base) == 0) {
      const long long p = parse_param(name.substr(base.size()), base);
      if (base == "heyting_chain") return make_heyting_chain(p);
      if (base == "boolean") return make_boolean(p);
      return make_z(p);
    }
  }
  throw UnknownFixtureError("unknown fixture '" + name + "'");
}

const std::vector<FixtureInfo>& fixture_list() {
  static const std::vector<FixtureInfo> list = {
      {"fig1_pc_not_spc", make_fig1().provenance},
      {"z(n)", "the integers with min, max, and addition; x -> y = y - x, "
               "unit 0, pointed constant n; window-checked only"},
      {"btstar_six", make_btstar_six().provenance},
      {"delta_four", make_delta_four().provenance},
      {"heyting_star", make_heyting_star().provenance},
      {"heyting_chain(k)",
       "chain of k elements with product = meet, unit = top, zero = bottom"},
      {"boolean(2^k)",
       "powerset algebra; product = meet, arrow = material implication"},
  };
  return list;
}

const std::vector<std::string>& default_fixture_instances() {
  static const std::vector<std::string> names = {
      "fig1_pc_not_spc", "btstar_six",       "delta_four",
      "heyting_star",    "heyting_chain(3)", "heyting_chain(4)",
      "heyting_chain(5)", "boolean(2)",      "boolean(4)",
      "boolean(8)",      "z(-1)",            "z(0)",
      "z(5)",
  };
  return names;
}

CheckReport verify_fixture(const Fixture& f) {
  CheckReport agg = CheckReport::ok("fixture:" + f.name);
  int failures = 0;
  for (const Expectation& e : f.expected) {
    std::string diff;
    try {
      const CheckReport actual = e.run(f);
      if (actual.pass != e.expect_pass) {
        diff = std::string("expected ") + (e.expect_pass ? "pass" : "fail") +
               ", got " + (actual.pass ? "pass" : "fail");
      } else if (!e.expect_witness.empty() &&
                 actual.witness != e.expect_witness) {
        auto fmt = [](const NamedValues& w) {
          std::string s = "{";
          for (const auto& [k, v] : w) s += " " + k + "=" + v;
          return s + " }";
        };
        diff = "witness mismatch: expected " + fmt(e.expect_witness) +
               ", got " + fmt(actual.witness);
      }
    } catch (const Error& err) {
      diff = std::string("error: ") + err.what();
    }
    if (diff.empty()) {
      agg.trace.emplace_back(e.subject, "ok");
    } else {
      ++failures;
      agg.trace.emplace_back(e.subject, diff);
    }
  }
  agg.note = std::to_string(f.expected.size() - failures) + "/" +
             std::to_string(f.expected.size()) + " expectations hold";
  if (failures) {
    agg.pass = false;
    agg.witness.emplace_back("failed", std::to_string(failures));
  }
  return agg;
}

CheckReport verify_fixture(const std::string& name) {
  return verify_fixture(fixture(name));
}

}  // namespace fleck
