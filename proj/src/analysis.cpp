#include "fleck/analysis.hpp"

#include <random>

namespace fleck {

namespace {

constexpr const char* kVarNames[] = {"x", "y", "z"};

NamedValues outcome_witness(const FleAlgebra& a, const ThesisOutcome& o,
                            Thesis t) {
  NamedValues w{{"thesis", thesis_name(t)}};
  for (std::size_t i = 0; i < o.witness.size(); ++i)
    w.emplace_back(kVarNames[i], a.label(o.witness[i]));
  return w;
}

// AT, AT', BT, BT' over a raw table; skip_aristotle is the interval shortcut
// (sound because members sit below the meet arrow and ~ is antitone), never
// applied to the Boethius theses.
CheckReport proto_report(const FleAlgebra& a, const BinTable& f,
                         const std::string& rule,
                         bool skip_aristotle = false) {
  for (Thesis t : {Thesis::AT, Thesis::ATp, Thesis::BT, Thesis::BTp}) {
    if (skip_aristotle && (t == Thesis::AT || t == Thesis::ATp)) continue;
    ThesisOutcome o = check_thesis(a, f, t);
    if (!o.pass)
      return CheckReport::fail(rule, outcome_witness(a, o, t));
  }
  return CheckReport::ok(rule);
}

BinTable decorated_table(const FleAlgebra& a, ArrowKind k,
                         const UnaryMap* delta) {
  if (k == ArrowKind::CnxMeetD || k == ArrowKind::CnxProdD) {
    if (!delta)
      throw UnboundDeltaError("decorated arrow needs a delta map");
    if (!delta->is_increasing)
      throw PreconditionError("delta map is not increasing");
    return arrow_table(a, k, &delta->table);
  }
  return arrow_table(a, k);
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = a;
  for (std::uint64_t v : {b, c}) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

std::vector<UnaryMap> increasing_maps(const FleAlgebra& a) {
  const int n = a.size();
  std::vector<std::vector<Elem>> up(n);
  for (Elem x = 0; x < n; ++x) up[x] = a.lattice().upset(x);

  std::vector<UnaryMap> out;
  std::vector<int> idx(n, 0);
  while (true) {
    std::vector<Elem> t(n);
    for (Elem x = 0; x < n; ++x) t[x] = up[x][idx[x]];
    out.push_back(UnaryMap::analyze(a, std::move(t)));
    int k = n - 1;
    while (k >= 0 && ++idx[k] == static_cast<int>(up[k].size())) idx[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

CheckReport proto_connexive(const FleAlgebra& a, ArrowKind k,
                            const UnaryMap* delta) {
  return proto_report(a, decorated_table(a, k, delta),
                      "proto(" + to_string(k) + ")");
}

std::optional<std::pair<Elem, Elem>> non_symmetry_witness(
    const FleAlgebra& a, ArrowKind k, const UnaryMap* delta) {
  return ns_witness(a, decorated_table(a, k, delta));
}

CheckReport weakly_connexive(const FleAlgebra& a, ArrowKind k) {
  const BinTable f = decorated_table(a, k, nullptr);
  const std::string rule = "weak(" + to_string(k) + ")";

  const ThesisOutcome btw = check_thesis(a, f, Thesis::BTw);
  const ThesisOutcome btwp = check_thesis(a, f, Thesis::BTwp);
  // The two quasi-rules are interderivable for the undecorated arrows.
  if ((k == ArrowKind::CnxMeet || k == ArrowKind::CnxProd) &&
      btw.pass != btwp.pass)
    throw Error("internal defect: the weak Boethius rules disagree");

  for (Thesis t : {Thesis::AT, Thesis::ATp}) {
    ThesisOutcome o = check_thesis(a, f, t);
    if (!o.pass) return CheckReport::fail(rule, outcome_witness(a, o, t));
  }
  if (!btw.pass)
    return CheckReport::fail(rule, outcome_witness(a, btw, Thesis::BTw));
  if (!btwp.pass)
    return CheckReport::fail(rule, outcome_witness(a, btwp, Thesis::BTwp));
  return CheckReport::ok(rule);
}

std::optional<StrongRefutation> strong_connexivity_refutation(
    const FleAlgebra& a, ArrowKind k, const UnaryMap* delta) {
  return strong_refutation(a, decorated_table(a, k, delta));
}

DeltaForcingReport delta_forcing(const FleAlgebra& a) {
  const Classification c = classify(a);
  if (!c.glivenko_ba.value)
    throw PreconditionError(
        "delta forcing requires the Glivenko property over Boolean algebras");

  const std::vector<Elem> dmt = a.dm_table();
  DeltaForcingReport r;
  const std::vector<UnaryMap> maps = increasing_maps(a);
  r.delta_count = static_cast<int>(maps.size());
  for (int i = 0; i < r.delta_count; ++i) {
    const UnaryMap& m = maps[i];
    if (m.table == dmt) r.dm_index = i;
    if (check_thesis(a, cnx_meet_table(a, m.table), Thesis::BT).pass)
      r.meet_bt_passing.push_back(i);
    if (check_thesis(a, cnx_prod_table(a, m.table), Thesis::BT).pass)
      r.prod_bt_passing.push_back(i);
  }
  r.meet_forced = r.dm_index >= 0 &&
                  r.meet_bt_passing == std::vector<int>{r.dm_index};
  return r;
}

IntervalReport interval_analysis(const FleAlgebra& a, const UnaryMap& delta,
                                 IntervalMode mode) {
  const int n = a.size();
  for (Elem x = 0; x < n; ++x)
    if (!a.leq(x, a.unit()))
      throw PreconditionError("interval analysis requires an integral algebra");
  if (!delta.is_increasing)
    throw PreconditionError("delta map is not increasing");

  const BinTable lo = cnx_prod_table(a, delta.table);
  const BinTable hi = cnx_meet_table(a, delta.table);
  for (int c = 0; c < n * n; ++c)
    if (!a.leq(lo[c], hi[c]))
      throw Error("internal defect: interval endpoints out of order");

  // Cell-wise candidate sets; the interval is their product.
  std::vector<std::vector<Elem>> cell(n * n);
  IntervalReport r;
  r.member_count = 1;
  for (int c = 0; c < n * n; ++c) {
    for (Elem z = 0; z < n; ++z)
      if (a.leq(lo[c], z) && a.leq(z, hi[c])) cell[c].push_back(z);
    const std::uint64_t k = cell[c].size();
    if (r.member_count > UINT64_MAX / k) {
      r.count_saturated = true;
      r.member_count = UINT64_MAX;
    } else {
      r.member_count *= k;
    }
  }

  r.lo = proto_report(a, lo, "proto(interval lower endpoint)");
  r.hi = proto_report(a, hi, "proto(interval upper endpoint)");
  r.all_proto = r.lo.pass && r.hi.pass;
  if (!r.lo.pass && !r.failing_member) {
    r.failing_member = lo;
    r.failing_verdict = r.lo;
  }
  if (!r.hi.pass && !r.failing_member) {
    r.failing_member = hi;
    r.failing_verdict = r.hi;
  }

  // Aristotle's theses transfer from the upper endpoint to every member.
  const bool skip_at =
      check_thesis(a, hi, Thesis::AT).pass && check_thesis(a, hi, Thesis::ATp).pass;

  auto check_member = [&](const BinTable& f) {
    ++r.checked;
    CheckReport v = proto_report(a, f, "proto(interval member)", skip_at);
    if (!v.pass) {
      r.all_proto = false;
      if (!r.failing_member) {
        r.failing_member = f;
        r.failing_verdict = std::move(v);
      }
    }
  };

  if (mode.kind == IntervalMode::Sampled) {
    std::mt19937_64 rng(mix_seed(mode.seed, 0x1e7a11, 0));
    BinTable f(n * n);
    for (int s = 0; s < mode.samples; ++s) {
      for (int c = 0; c < n * n; ++c)
        f[c] = cell[c][rng() % cell[c].size()];
      check_member(f);
    }
  } else if (mode.kind == IntervalMode::Exhaustive) {
    if (r.count_saturated || r.member_count > mode.cap) {
      r.capped_out = true;
    } else {
      std::vector<int> idx(n * n, 0);
      BinTable f(n * n);
      while (true) {
        for (int c = 0; c < n * n; ++c) f[c] = cell[c][idx[c]];
        check_member(f);
        int k = n * n - 1;
        while (k >= 0 && ++idx[k] == static_cast<int>(cell[k].size()))
          idx[k--] = 0;
        if (k < 0) break;
      }
      r.exhaustive = true;
    }
  }
  return r;
}

BDiamondReport bdiamond_expansions(const FleAlgebra& a, std::uint64_t seed,
                                   int samples) {
  const int n = a.size();
  const std::vector<Elem> dmt = a.dm_table();
  std::vector<Elem> neg(n);
  for (Elem x = 0; x < n; ++x) neg[x] = a.neg(x);

  BDiamondReport r;
  // Second axiom pins d(x) into the upset of dm(x); walk that grid and filter
  // by the first axiom.
  std::vector<std::vector<Elem>> up(n);
  r.candidates = 1;
  for (Elem x = 0; x < n; ++x) {
    up[x] = a.lattice().upset(dmt[x]);
    r.candidates *= up[x].size();
  }
  r.all_equal_dm = true;
  std::vector<int> idx(n, 0);
  std::vector<Elem> d(n);
  while (true) {
    for (Elem x = 0; x < n; ++x) d[x] = up[x][idx[x]];
    bool a1 = true;
    for (Elem x = 0; x < n && a1; ++x)
      if (!a.leq(d[neg[x]], neg[d[x]])) a1 = false;
    if (a1) {
      ++r.admissible;
      if (d != dmt) r.all_equal_dm = false;
    }
    int k = n - 1;
    while (k >= 0 && ++idx[k] == static_cast<int>(up[k].size())) idx[k--] = 0;
    if (k < 0) break;
  }

  // Weakest-arrow demonstration: tables below both residual bounds stay below
  // the meet arrow. Bound membership is tested against the two arrows
  // directly, never via the meet, so the comparison is not circular.
  const BinTable cm = cnx_meet_table(a, dmt);
  std::vector<std::vector<Elem>> below(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (a.leq(z, a.arrow(x, y)) && a.leq(z, a.arrow(y, dmt[x])))
          below[x * n + y].push_back(z);

  std::mt19937_64 rng(mix_seed(seed, 0xd1a40, 0));
  r.all_below_meet_arrow = true;
  BinTable f(n * n);
  for (int s = 0; s < samples; ++s) {
    for (int c = 0; c < n * n; ++c) f[c] = below[c][rng() % below[c].size()];
    ++r.sampled_tables;
    for (int c = 0; c < n * n; ++c)
      if (!a.leq(f[c], cm[c])) r.all_below_meet_arrow = false;
  }
  return r;
}

}  // namespace fleck
