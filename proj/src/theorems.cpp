#include "fleck/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>

#include "fleck/analysis.hpp"
#include "fleck/fixtures.hpp"
#include "fleck/parallel.hpp"

namespace fleck {
namespace {

struct Ctx {
  const FleAlgebra* a;
  const std::string* hash;
  const Classification* cls;
  const BinTable* cm;  // meet arrow, double-negation decoration
  const BinTable* cp;  // product arrow, double-negation decoration
};

// Per-(check, algebra) outcome. A note is informational and never a failure.
struct Verdict {
  bool in_scope = true;
  bool pass = true;
  std::string witness;
  std::vector<std::string> notes;
};

using CheckFn = Verdict (*)(const Ctx&, const SuiteConfig&);

struct CheckDef {
  const char* id;
  const char* title;
  const char* scope;  // empty = every algebra
  const char* evidence;
  const char* statement;
  CheckFn fn;
};

std::uint64_t blend(std::uint64_t h, std::uint64_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::uint64_t hash_seed(const std::string& hex) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char ch : hex) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string tag(const Ctx& c) {
  return c.hash->substr(0, 12) + " (n=" + std::to_string(c.a->size()) + ")";
}

std::string wit1(const FleAlgebra& a, const char* nx, Elem x) {
  return std::string(nx) + "=" + a.label(x);
}

std::string wit2(const FleAlgebra& a, Elem x, Elem y) {
  return "x=" + a.label(x) + ", y=" + a.label(y);
}

std::string wit3(const FleAlgebra& a, Elem x, Elem y, Elem z) {
  return wit2(a, x, y) + ", z=" + a.label(z);
}

bool holds(const FleAlgebra& a, const BinTable& f, Thesis t) {
  return check_thesis(a, f, t).pass;
}

bool leq1(const FleAlgebra& a, Elem t) { return a.leq(a.unit(), t); }

// Direct single-pass property loops. The suite recomputes both sides of each
// equivalence from the raw tables so a defect shows up as data, not as a
// crashed cross-check.
bool prop_integral(const FleAlgebra& a) {
  for (Elem x = 0; x < a.size(); ++x)
    if (!a.leq(x, a.unit())) return false;
  return true;
}

bool prop_zero_bounded(const FleAlgebra& a) {
  for (Elem x = 0; x < a.size(); ++x)
    if (!a.leq(a.zero(), x)) return false;
  return true;
}

bool prop_involutive(const FleAlgebra& a) {
  for (Elem x = 0; x < a.size(); ++x)
    if (a.dm(x) != x) return false;
  return true;
}

bool prop_pc(const FleAlgebra& a) {
  for (Elem x = 0; x < a.size(); ++x)
    if (!a.leq(a.meet(x, a.neg(x)), a.zero())) return false;
  return true;
}

bool prop_spc(const FleAlgebra& a) {
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (!a.leq(a.meet(a.neg(x), a.neg(a.arrow(x, y))), a.zero()))
        return false;
  return true;
}

bool prop_zero_greatest(const FleAlgebra& a) {
  for (Elem x = 0; x < a.size(); ++x)
    if (!a.leq(x, a.zero())) return false;
  return true;
}

bool prop_dm1_greatest(const FleAlgebra& a) {
  const Elem d1 = a.dm(a.unit());
  for (Elem x = 0; x < a.size(); ++x)
    if (!a.leq(x, d1)) return false;
  return true;
}

bool prop_glv_a(const FleAlgebra& a) {
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (a.neg(a.prod(x, y)) != a.neg(a.meet(x, y))) return false;
  return true;
}

bool prop_glv_b(const FleAlgebra& a) {
  for (Elem x = 0; x < a.size(); ++x)
    if (!leq1(a, a.dm(a.arrow(a.dm(x), x)))) return false;
  return true;
}

bool prop_glv_b_alt(const FleAlgebra& a) {
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (a.neg(a.arrow(x, y)) != a.neg(a.join(a.neg(x), y))) return false;
  return true;
}

// x*y = x/\y and x->y = ~x\/y everywhere.
bool boolean_by_terms(const FleAlgebra& a) {
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) {
      if (a.prod(x, y) != a.meet(x, y)) return false;
      if (a.arrow(x, y) != a.join(a.neg(x), y)) return false;
    }
  return true;
}

std::optional<FleAlgebra> try_image(const FleAlgebra& a) {
  UnaryMap g = dm_map(a);
  if (!g.is_nucleus) return std::nullopt;
  try {
    return nucleus_image(a, g);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Interval evidence policy shared by the member-quantified checks: full
// sweeps when the carrier is small or the member count fits the sampling
// budget anyway, endpoints plus seeded samples beyond.
std::uint64_t policy_cap(const FleAlgebra& a, const SuiteConfig& cfg) {
  if (a.size() <= cfg.exhaustive_interval_max_size) return cfg.interval_cap;
  return std::min<std::uint64_t>(cfg.interval_cap,
                                 static_cast<std::uint64_t>(cfg.samples) + 2);
}

IntervalReport interval_policy(const FleAlgebra& a, const UnaryMap& delta,
                               const SuiteConfig& cfg, std::uint64_t seed) {
  IntervalReport r =
      interval_analysis(a, delta, IntervalMode::exhaustive(policy_cap(a, cfg)));
  if (r.capped_out)
    r = interval_analysis(a, delta, IntervalMode::sampled(cfg.samples, seed));
  return r;
}

struct ScanStats {
  std::uint64_t member_count = 1;
  bool saturated = false;
  bool exhaustive = false;
  std::uint64_t visited = 0;
};

// Visits members of the pointwise interval [lo, hi]; visit returns false to
// stop early. Coverage follows the same policy as interval_policy.
template <typename Visit>
ScanStats scan_members(const FleAlgebra& a, const BinTable& lo,
                       const BinTable& hi, const SuiteConfig& cfg,
                       std::uint64_t seed, Visit&& visit) {
  const int n = a.size();
  const int cells = n * n;
  std::vector<std::vector<Elem>> cell(cells);
  ScanStats st;
  for (int c = 0; c < cells; ++c) {
    for (Elem z = 0; z < n; ++z)
      if (a.leq(lo[c], z) && a.leq(z, hi[c])) cell[c].push_back(z);
    const std::uint64_t k = cell[c].size();
    if (k == 0) throw Error("internal defect: interval endpoints out of order");
    if (st.member_count > UINT64_MAX / k) {
      st.saturated = true;
      st.member_count = UINT64_MAX;
    } else {
      st.member_count *= k;
    }
  }
  if (!st.saturated && st.member_count <= policy_cap(a, cfg)) {
    st.exhaustive = true;
    std::vector<int> idx(cells, 0);
    BinTable f(cells);
    while (true) {
      for (int c = 0; c < cells; ++c) f[c] = cell[c][idx[c]];
      ++st.visited;
      if (!visit(static_cast<const BinTable&>(f))) return st;
      int k = cells - 1;
      while (k >= 0 && ++idx[k] == static_cast<int>(cell[k].size()))
        idx[k--] = 0;
      if (k < 0) break;
    }
    return st;
  }
  ++st.visited;
  if (!visit(lo)) return st;
  ++st.visited;
  if (!visit(hi)) return st;
  std::mt19937_64 rng(seed);
  BinTable f(cells);
  for (int s = 0; s < cfg.samples; ++s) {
    for (int c = 0; c < cells; ++c) f[c] = cell[c][rng() % cell[c].size()];
    ++st.visited;
    if (!visit(static_cast<const BinTable&>(f))) return st;
  }
  return st;
}

// Increasing maps with the double-negation map first; the remaining order is
// the enumeration order. Pairs each map with its enumeration index so seeds
// stay independent of the visiting order.
std::vector<int> delta_order(const std::vector<UnaryMap>& maps,
                             const std::vector<Elem>& dmt) {
  std::vector<int> ord;
  ord.reserve(maps.size());
  int dmi = -1;
  for (int i = 0; i < static_cast<int>(maps.size()); ++i)
    if (maps[i].table == dmt) {
      dmi = i;
      break;
    }
  if (dmi >= 0) ord.push_back(dmi);
  for (int i = 0; i < static_cast<int>(maps.size()); ++i)
    if (i != dmi) ord.push_back(i);
  return ord;
}

const char* kTableEvidence = "every assignment over the carrier";
const char* kIntervalEvidence =
    "assignment scans are exhaustive; interval member sweeps are full when "
    "the member count fits the cap (always on carriers of at most the "
    "configured small size), otherwise both endpoints plus seeded samples";

Verdict check_t1(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  const int n = a.size();
  Verdict v;
  for (Elem x = 0; x < n; ++x) {
    if (a.arrow(a.unit(), x) != x) {
      v.pass = false;
      v.witness = "1 -> x differs from x at " + wit1(a, "x", x);
      return v;
    }
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (a.leq(a.prod(x, y), z) != a.leq(x, a.arrow(y, z))) {
          v.pass = false;
          v.witness = "residuation fails at " + wit3(a, x, y, z);
          return v;
        }
        if (a.prod(x, a.join(y, z)) != a.join(a.prod(x, y), a.prod(x, z))) {
          v.pass = false;
          v.witness = "product misses join distribution at " + wit3(a, x, y, z);
          return v;
        }
        if (a.arrow(x, a.meet(y, z)) != a.meet(a.arrow(x, y), a.arrow(x, z))) {
          v.pass = false;
          v.witness = "arrow misses meet distribution at " + wit3(a, x, y, z);
          return v;
        }
        if (a.arrow(a.join(x, y), z) != a.meet(a.arrow(x, z), a.arrow(y, z))) {
          v.pass = false;
          v.witness = "join in the antecedent misses meet at " + wit3(a, x, y, z);
          return v;
        }
        if (a.arrow(x, a.arrow(y, z)) != a.arrow(a.prod(y, x), z)) {
          v.pass = false;
          v.witness = "currying fails at " + wit3(a, x, y, z);
          return v;
        }
        if (a.leq(x, y)) {
          if (!a.leq(a.prod(x, z), a.prod(y, z)) ||
              !a.leq(a.arrow(z, x), a.arrow(z, y)) ||
              !a.leq(a.arrow(y, z), a.arrow(x, z))) {
            v.pass = false;
            v.witness = "a monotonicity law fails at " + wit3(a, x, y, z);
            return v;
          }
        }
      }
  }
  return v;
}

Verdict check_t2(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  const int n = a.size();
  Verdict v;
  for (Elem x = 0; x < n; ++x) {
    if (!a.leq(x, a.dm(x)) || a.dm(a.dm(x)) != a.dm(x)) {
      v.pass = false;
      v.witness = "double negation is not inflationary idempotent at " +
                  wit1(a, "x", x);
      return v;
    }
    for (Elem y = 0; y < n; ++y) {
      if (a.leq(x, y) && !a.leq(a.dm(x), a.dm(y))) {
        v.pass = false;
        v.witness = "double negation is not monotone at " + wit2(a, x, y);
        return v;
      }
      if (!a.leq(a.prod(a.dm(x), a.dm(y)), a.dm(a.prod(x, y)))) {
        v.pass = false;
        v.witness = "nucleus product bound fails at " + wit2(a, x, y);
        return v;
      }
      const Elem m = a.meet(a.dm(x), a.dm(y));
      if (a.dm(m) != m) {
        v.pass = false;
        v.witness = "meet of closed elements is not closed at " + wit2(a, x, y);
        return v;
      }
      const Elem r = a.arrow(x, a.dm(y));
      if (a.arrow(a.dm(x), a.dm(y)) != r || a.dm(r) != r) {
        v.pass = false;
        v.witness = "arrow into a closed element is not closed at " +
                    wit2(a, x, y);
        return v;
      }
    }
  }
  UnaryMap g = dm_map(a);
  if (!g.is_nucleus) {
    v.pass = false;
    v.witness = "double negation fails the nucleus laws";
    return v;
  }
  std::optional<FleAlgebra> im = try_image(a);
  if (!im) {
    v.pass = false;
    v.witness = "closure image does not assemble into an algebra";
    return v;
  }
  if (!prop_involutive(*im)) {
    v.pass = false;
    v.witness = "closure image is not involutive";
    return v;
  }
  return v;
}

Verdict check_t3(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  const bool flags = prop_integral(a) && prop_involutive(a) && prop_pc(a);
  const bool terms = boolean_by_terms(a);
  if (flags != terms) {
    v.pass = false;
    v.witness = std::string("Boolean by axioms: ") + (flags ? "yes" : "no") +
                ", Boolean by term equivalence: " + (terms ? "yes" : "no");
  }
  return v;
}

Verdict check_t4(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  const bool glv_b = prop_glv_b(a);
  const bool one = prop_glv_a(a) && glv_b;
  const bool two = prop_pc(a) && glv_b && prop_dm1_greatest(a);
  std::optional<FleAlgebra> im = try_image(a);
  if (!im) {
    v.pass = false;
    v.witness = "closure image unavailable";
    return v;
  }
  const bool three = glv_b && boolean_by_terms(*im) && prop_integral(*im) &&
                     prop_involutive(*im) && prop_pc(*im);
  if (one != two || two != three) {
    v.pass = false;
    v.witness = std::string("axioms: ") + (one ? "yes" : "no") +
                ", contradiction law with greatest closed unit: " +
                (two ? "yes" : "no") +
                ", Boolean closure image with the second axiom: " +
                (three ? "yes" : "no");
  }
  return v;
}

Verdict check_t5(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  if (!prop_integral(a)) {
    v.in_scope = false;
    return v;
  }
  const bool one = prop_pc(a) && prop_glv_b(a);
  const bool two = prop_spc(a);
  const bool three = prop_glv_b_alt(a);
  const bool general = prop_glv_a(a) && prop_glv_b(a);
  if (one != two || two != three || one != general) {
    v.pass = false;
    v.witness = std::string("integral axioms: ") + (one ? "yes" : "no") +
                ", strong contradiction law: " + (two ? "yes" : "no") +
                ", negated-arrow identity: " + (three ? "yes" : "no") +
                ", general axioms: " + (general ? "yes" : "no");
  }
  return v;
}

Verdict check_t6(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  const BinTable& res = a.arrow_table();
  const bool proto = proto_table(a, res).pass;
  const bool at = holds(a, res, Thesis::AT);
  const bool zg = prop_zero_greatest(a);
  if (proto != at || at != zg) {
    v.pass = false;
    v.witness = std::string("residual proto-connexive: ") +
                (proto ? "yes" : "no") + ", residual Aristotle law: " +
                (at ? "yes" : "no") + ", zero greatest: " + (zg ? "yes" : "no");
  }
  return v;
}

Verdict check_t7(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  const BinTable& cm = *c.cm;
  Verdict v;
  const bool bt = holds(a, cm, Thesis::BT);
  const bool btp = holds(a, cm, Thesis::BTp);
  const bool p2 = holds(a, cm, Thesis::P2);
  const bool p3 = holds(a, cm, Thesis::P3);
  const bool proto = proto_table(a, cm).pass;
  if (bt != btp || bt != p2 || bt != p3 || bt != proto ||
      proto != c.cls->proto_cnx_meet.value) {
    v.pass = false;
    v.witness = std::string("Boethius: ") + (bt ? "yes" : "no") +
                ", converse Boethius: " + (btp ? "yes" : "no") +
                ", conversion law: " + (p2 ? "yes" : "no") +
                ", negation exchange: " + (p3 ? "yes" : "no") +
                ", proto-connexive: " + (proto ? "yes" : "no");
  }
  return v;
}

Verdict check_t8(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  const bool proto = proto_table(a, *c.cm).pass;
  const bool glv = prop_glv_a(a) && prop_glv_b(a);
  if (proto != glv) {
    v.pass = false;
    v.witness = std::string("meet arrow proto-connexive: ") +
                (proto ? "yes" : "no") +
                ", Glivenko axioms: " + (glv ? "yes" : "no");
  }
  return v;
}

Verdict check_t9(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  if (!c.cls->dm1_greatest.value) {
    v.in_scope = false;
    return v;
  }
  const int n = a.size();
  const BinTable& cm = *c.cm;
  const BinTable& cp = *c.cp;
  if (!holds(a, cp, Thesis::P1)) {
    v.pass = false;
    v.witness = "product arrow misses the negation compatibility hypothesis";
    return v;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem f = cp[x * n + y];
      const Elem dy = a.dm(y);
      const Elem bound = a.meet(a.arrow(x, dy), a.arrow(dy, a.dm(x)));
      if (!a.leq(f, a.dm(f)) || !a.leq(a.dm(f), bound)) {
        v.pass = false;
        v.witness = "squeeze hypothesis fails at " + wit2(a, x, y);
        return v;
      }
    }
  const bool pp = proto_table(a, cp).pass;
  const bool bt = holds(a, cp, Thesis::BT);
  const bool btp = holds(a, cp, Thesis::BTp);
  const bool p2 = holds(a, cp, Thesis::P2);
  const bool pm = proto_table(a, cm).pass;
  const bool glv = prop_glv_a(a) && prop_glv_b(a);
  if (pp != bt || bt != btp || btp != p2 || p2 != pm || pm != glv) {
    v.pass = false;
    v.witness = std::string("product proto: ") + (pp ? "yes" : "no") +
                ", Boethius: " + (bt ? "yes" : "no") + ", converse: " +
                (btp ? "yes" : "no") + ", conversion law: " +
                (p2 ? "yes" : "no") + ", meet proto: " + (pm ? "yes" : "no") +
                ", Glivenko axioms: " + (glv ? "yes" : "no");
  }
  return v;
}

Verdict check_t10(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  const bool pm = proto_table(a, *c.cm).pass;
  const bool pp = proto_table(a, *c.cp).pass;
  const bool d1 = prop_dm1_greatest(a);
  if (pm != (pp && d1)) {
    v.pass = false;
    v.witness = std::string("meet proto: ") + (pm ? "yes" : "no") +
                ", product proto: " + (pp ? "yes" : "no") +
                ", closed unit greatest: " + (d1 ? "yes" : "no");
  }
  return v;
}

Verdict check_t11(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  if (!c.cls->glivenko_ba.value) {
    v.in_scope = false;
    return v;
  }
  const bool sym_cm = !ns_witness(a, *c.cm).has_value();
  const bool sym_cp = !ns_witness(a, *c.cp).has_value();
  const bool boolean = c.cls->boolean_alg.value;
  if (sym_cm != boolean || sym_cp != boolean) {
    v.pass = false;
    v.witness = std::string("meet arrow symmetric: ") +
                (sym_cm ? "yes" : "no") + ", product arrow symmetric: " +
                (sym_cp ? "yes" : "no") + ", Boolean: " +
                (boolean ? "yes" : "no");
  }
  return v;
}

Verdict check_t12(const Ctx& c, const SuiteConfig& cfg) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  if (!prop_integral(a)) {
    v.in_scope = false;
    return v;
  }
  const int n = a.size();
  const std::vector<Elem> dmt = a.dm_table();
  const std::vector<UnaryMap> maps = increasing_maps(a);
  const bool pc = prop_pc(a);
  const bool glv = c.cls->glivenko_ba.value;
  const std::uint64_t base = blend(blend(cfg.seed, hash_seed(*c.hash)), 0x12);
  for (int d = 0; d < static_cast<int>(maps.size()); ++d) {
    const UnaryMap& dl = maps[d];
    const BinTable lo = cnx_prod_table(a, dl.table);
    const BinTable hi = cnx_meet_table(a, dl.table);
    const Elem u = a.unit();
    for (Elem x = 0; x < n; ++x) {
      if (lo[u * n + x] != x || hi[u * n + x] != x) {
        v.pass = false;
        v.witness = "unit antecedent law fails for decoration #" +
                    std::to_string(d) + " at " + wit1(a, "x", x);
        return v;
      }
      if (lo[x * n + u] != dl.table[x] || hi[x * n + u] != dl.table[x]) {
        v.pass = false;
        v.witness = "unit consequent law fails for decoration #" +
                    std::to_string(d) + " at " + wit1(a, "x", x);
        return v;
      }
    }
    if (!pc && (holds(a, lo, Thesis::AT) || holds(a, lo, Thesis::ATp))) {
      v.pass = false;
      v.witness = "an Aristotle law holds for decoration #" +
                  std::to_string(d) + " on an algebra without the "
                  "contradiction law";
      return v;
    }
    const bool conclusions_ok = glv && dl.table == dmt;
    scan_members(a, lo, hi, cfg, blend(base, static_cast<std::uint64_t>(d)),
                 [&](const BinTable& f) {
                   if (!holds(a, f, Thesis::BT)) return true;
                   if (!conclusions_ok) {
                     v.pass = false;
                     v.witness =
                         "a member satisfies Boethius for decoration #" +
                         std::to_string(d) +
                         " although the decoration is not double negation "
                         "or the algebra misses the Glivenko axioms";
                     return false;
                   }
                   for (Elem x = 0; x < n; ++x)
                     if (f[x * n + a.zero()] != a.neg(x)) {
                       v.pass = false;
                       v.witness =
                           "a Boethius member disagrees with negation at " +
                           wit1(a, "x", x);
                       return false;
                     }
                   return true;
                 });
    if (!v.pass) return v;
  }
  return v;
}

Verdict check_t13(const Ctx& c, const SuiteConfig& cfg) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  if (!prop_integral(a)) {
    v.in_scope = false;
    return v;
  }
  const bool spc = prop_spc(a);
  const std::uint64_t base = blend(blend(cfg.seed, hash_seed(*c.hash)), 0x13);
  const IntervalReport ir = interval_policy(a, dm_map(a), cfg, blend(base, 0));
  const bool two = ir.all_proto;
  bool three = two;  // the meet arrow itself passes Boethius when two holds
  if (!three) {
    const std::vector<UnaryMap> maps = increasing_maps(a);
    const std::vector<Elem> dmt = a.dm_table();
    for (int d : delta_order(maps, dmt)) {
      const BinTable lo = cnx_prod_table(a, maps[d].table);
      const BinTable hi = cnx_meet_table(a, maps[d].table);
      scan_members(a, lo, hi, cfg, blend(base, static_cast<std::uint64_t>(d)),
                   [&](const BinTable& f) {
                     if (holds(a, f, Thesis::BT)) {
                       three = true;
                       return false;
                     }
                     return true;
                   });
      if (three) break;
    }
  }
  if (spc != two || two != three) {
    v.pass = false;
    v.witness = std::string("strong contradiction law: ") +
                (spc ? "yes" : "no") + ", whole bare interval proto: " +
                (two ? "yes" : "no") +
                ", some decorated member passes Boethius: " +
                (three ? "yes" : "no");
  }
  return v;
}

Verdict check_t14(const Ctx& c, const SuiteConfig& cfg) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  if (!prop_integral(a) || !prop_zero_bounded(a)) {
    v.in_scope = false;
    return v;
  }
  const bool pc = prop_pc(a);
  const std::uint64_t base = blend(blend(cfg.seed, hash_seed(*c.hash)), 0x14);
  const IntervalReport ir = interval_policy(a, dm_map(a), cfg, blend(base, 0));
  const bool two = ir.all_proto;
  // A member satisfies an Aristotle law only if the product endpoint does,
  // so the existential side needs the endpoints alone.
  bool three = false;
  const std::vector<UnaryMap> maps = increasing_maps(a);
  const std::vector<Elem> dmt = a.dm_table();
  for (int d : delta_order(maps, dmt)) {
    const BinTable lo = cnx_prod_table(a, maps[d].table);
    if (holds(a, lo, Thesis::AT)) {
      three = true;
      break;
    }
  }
  if (pc != two || two != three) {
    v.pass = false;
    v.witness = std::string("contradiction law: ") + (pc ? "yes" : "no") +
                ", whole bare interval proto: " + (two ? "yes" : "no") +
                ", some decorated member passes Aristotle: " +
                (three ? "yes" : "no");
  }
  return v;
}

Verdict check_t15(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  const bool bt = holds(a, *c.cm, Thesis::BT);
  const bool chain = holds(a, *c.cm, Thesis::BTstar);
  if (bt != chain) {
    v.pass = false;
    v.witness = std::string("Boethius: ") + (bt ? "yes" : "no") +
                ", chained Boethius: " + (chain ? "yes" : "no");
  }
  return v;
}

Verdict check_t16(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  if (!c.cls->glivenko_ba.value) {
    v.in_scope = false;
    return v;
  }
  const DeltaForcingReport d = delta_forcing(a);
  if (!d.meet_forced) {
    v.pass = false;
    std::string ids;
    for (int i : d.meet_bt_passing) {
      if (!ids.empty()) ids += ", ";
      ids += "#" + std::to_string(i);
    }
    v.witness = "meet-arrow Boethius passes for decorations {" + ids +
                "} while double negation is #" + std::to_string(d.dm_index);
    return v;
  }
  if (d.prod_bt_passing.size() > 1)
    v.notes.push_back(tag(c) + ": product-arrow Boethius admits " +
                      std::to_string(d.prod_bt_passing.size()) +
                      " decorations; only the meet arrow is forced");
  return v;
}

Verdict check_t17(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  const bool d1 = c.cls->dm1_greatest.value;
  const struct {
    const char* name;
    const BinTable* f;
    bool transfer;  // Boethius pushes down to the weak laws for this arrow
  } arrows[] = {{"meet", c.cm, true}, {"product", c.cp, d1}};
  for (const auto& ar : arrows) {
    const BinTable& f = *ar.f;
    const bool btw = holds(a, f, Thesis::BTw);
    const bool btwp = holds(a, f, Thesis::BTwp);
    if (btw != btwp) {
      v.pass = false;
      v.witness = std::string("weak Boethius and its converse disagree for "
                              "the ") + ar.name + " arrow";
      return v;
    }
    if (btw && !(holds(a, f, Thesis::AT) && holds(a, f, Thesis::ATp))) {
      v.pass = false;
      v.witness = std::string("weak Boethius holds without both Aristotle "
                              "laws for the ") + ar.name + " arrow";
      return v;
    }
    const bool bt = holds(a, f, Thesis::BT) || holds(a, f, Thesis::BTp);
    if (ar.transfer && bt && !(btw && btwp)) {
      v.pass = false;
      v.witness = std::string("Boethius holds without the weak laws for "
                              "the ") + ar.name + " arrow";
      return v;
    }
  }
  return v;
}

Verdict check_t18(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  const bool in = prop_integral(a) && prop_zero_bounded(a);
  const std::pair<const char*, const BinTable*> arrows[] = {
      {"meet", c.cm}, {"product", c.cp}};
  if (!in) {
    v.in_scope = false;
    for (const auto& [name, f] : arrows) {
      if (weak_table(a, *f).pass && !proto_table(a, *f).pass)
        v.notes.push_back(tag(c) + ": weakly but not proto-connexive "
                          "outside the weakening hypothesis (" +
                          std::string(name) + " arrow)");
    }
    return v;
  }
  for (const auto& [name, f] : arrows) {
    const bool weak = weak_table(a, *f).pass;
    const bool proto = proto_table(a, *f).pass;
    if (weak != proto) {
      v.pass = false;
      v.witness = std::string("weak: ") + (weak ? "yes" : "no") +
                  ", proto: " + (proto ? "yes" : "no") + " for the " + name +
                  " arrow";
      return v;
    }
  }
  return v;
}

Verdict check_t19(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  const bool pm = proto_table(a, *c.cm).pass;
  const bool pp = proto_table(a, *c.cp).pass;
  if (!pm && !pp) {
    v.in_scope = false;
    return v;
  }
  if (pm) {
    const bool refuted = strong_refutation(a, *c.cm).has_value();
    const bool zg = prop_zero_greatest(a);
    if (refuted != zg) {
      v.pass = false;
      v.witness = std::string("meet arrow: strong prohibitions refuted: ") +
                  (refuted ? "yes" : "no") + ", zero greatest: " +
                  (zg ? "yes" : "no");
      return v;
    }
  }
  if (pp && strong_refutation(a, *c.cp).has_value() &&
      !leq1(a, a.zero())) {
    v.pass = false;
    v.witness = "product arrow: strong prohibitions refuted although the "
                "unit is not below zero";
  }
  return v;
}

Verdict check_t20(const Ctx& c, const SuiteConfig& cfg) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  const std::uint64_t seed = blend(blend(cfg.seed, hash_seed(*c.hash)), 0x20);
  const BDiamondReport r = bdiamond_expansions(a, seed, 100);
  if (r.admissible < 1 || !r.all_equal_dm) {
    v.pass = false;
    v.witness = std::to_string(r.admissible) + " admissible diamonds out of " +
                std::to_string(r.candidates) +
                " candidates; not all equal double negation";
    return v;
  }
  if (!r.all_below_meet_arrow) {
    v.pass = false;
    v.witness = "a sampled arrow under both residual bounds escapes the "
                "meet arrow";
  }
  return v;
}

Verdict check_t21(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  const std::pair<const char*, const BinTable*> arrows[] = {
      {"meet", c.cm}, {"product", c.cp}};
  for (const auto& [name, f] : arrows) {
    if (!holds(a, *f, Thesis::P1)) {
      v.pass = false;
      v.witness = std::string("negation compatibility fails for the ") +
                  name + " arrow";
      return v;
    }
    if (holds(a, *f, Thesis::P2) && !proto_table(a, *f).pass) {
      v.pass = false;
      v.witness = std::string("conversion law holds without "
                              "proto-connexivity for the ") + name + " arrow";
      return v;
    }
  }
  return v;
}

Verdict check_t22(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  if (!prop_zero_greatest(a)) {
    v.in_scope = false;
    return v;
  }
  const bool sym = !ns_witness(a, a.arrow_table()).has_value();
  if (sym != (a.size() == 1)) {
    v.pass = false;
    v.witness = std::string("residual symmetric: ") + (sym ? "yes" : "no") +
                " on a carrier of size " + std::to_string(a.size());
    return v;
  }
  if (!proto_table(a, a.arrow_table()).pass) {
    v.pass = false;
    v.witness = "residual not proto-connexive although zero is greatest";
  }
  return v;
}

Verdict check_t23(const Ctx& c, const SuiteConfig&) {
  const FleAlgebra& a = *c.a;
  Verdict v;
  if (!c.cls->dm1_greatest.value) {
    v.in_scope = false;
    return v;
  }
  const int n = a.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem m = a.meet(a.dm(x), y);
      const Elem via = a.meet(a.arrow(x, m), a.arrow(m, a.dm(x)));
      if (via != a.arrow(x, y)) {
        v.pass = false;
        v.witness = "residual recovery fails at " + wit2(a, x, y);
        return v;
      }
    }
  return v;
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"T1", "residuated lattice arithmetic", "", kTableEvidence,
       "residuation ties product and arrow together: x*y <= z exactly when "
       "x <= y -> z; product distributes over join, the arrow turns meets in "
       "the consequent and joins in the antecedent into meets, 1 -> x = x, "
       "currying x -> (y -> z) = y*x -> z, and all three operations are "
       "monotone the right way round",
       check_t1},
      {"T2", "double negation is a nucleus with an involutive image", "",
       kTableEvidence,
       "~~ is inflationary, monotone and idempotent, multiplies below the "
       "closure of the product, keeps meets and arrows into closed elements "
       "closed, and its image algebra (closure product and join, inherited "
       "meet and arrow, closed constants) is an involutive algebra",
       check_t2},
      {"T3", "Boolean characterization and term equivalence", "",
       kTableEvidence,
       "an algebra is integral, involutive and satisfies x /\\ ~x <= 0 "
       "exactly when product is meet and x -> y = ~x \\/ y everywhere",
       check_t3},
      {"T4", "Glivenko class membership, three ways", "", kTableEvidence,
       "~(x*y) = ~(x/\\y) plus 1 <= ~~(~~x -> x) holds exactly when the "
       "contradiction law holds with the closed unit greatest, and exactly "
       "when the closure image is Boolean and the second axiom holds",
       check_t4},
      {"T5", "integral Glivenko membership equals the strong contradiction "
       "law", "integral", kTableEvidence,
       "on integral algebras the contradiction law plus 1 <= ~~(~~x -> x) "
       "is equivalent to ~x /\\ ~(x -> y) <= 0 and to "
       "~(x -> y) = ~(~x \\/ y), and agrees with the general axioms",
       check_t5},
      {"T6", "residual connexivity happens only when zero is greatest", "",
       kTableEvidence,
       "for the residual arrow, proto-connexivity, the single Aristotle "
       "law, and zero being the greatest element all coincide",
       check_t6},
      {"T7", "connexive laws coincide for the meet arrow", "", kTableEvidence,
       "for the meet arrow, Boethius, converse Boethius, the conversion "
       "law ~~ (x => y) = ~(x => ~y), the negation exchange law, and full "
       "proto-connexivity stand or fall together",
       check_t7},
      {"T8", "meet-arrow proto-connexivity equals Glivenko membership", "",
       kTableEvidence,
       "the meet arrow is proto-connexive exactly on algebras satisfying "
       "the two Glivenko axioms",
       check_t8},
      {"T9", "meet-like arrows collapse to one connexivity verdict",
       "double negation of the unit is greatest", kTableEvidence,
       "the product arrow sits under its closure which sits under the meet "
       "arrow against closed consequents, negation compatibility holds, and "
       "then product-arrow proto-connexivity, Boethius, converse Boethius, "
       "the conversion law, meet-arrow proto-connexivity and the Glivenko "
       "axioms all agree",
       check_t9},
      {"T10", "meet-arrow connexivity splits into the product verdict plus "
       "a greatest closed unit", "", kTableEvidence,
       "the meet arrow is proto-connexive exactly when the product arrow is "
       "and the double negation of the unit is the greatest element",
       check_t10},
      {"T11", "connexive arrows are symmetric only on Boolean algebras",
       "Glivenko axioms hold", kTableEvidence,
       "inside the Glivenko class, the meet arrow (and the product arrow) "
       "is symmetric exactly on Boolean algebras",
       check_t11},
      {"T12", "decorated intervals force the Boethius conclusions",
       "integral", kIntervalEvidence,
       "for every increasing decoration, every arrow between the decorated "
       "product and meet arrows sends 1 => x to x and x => 1 to the "
       "decoration; an Aristotle law at the product endpoint forces the "
       "contradiction law; and any member satisfying Boethius forces the "
       "decoration to be double negation, the Glivenko axioms, and "
       "x => 0 = ~x",
       check_t12},
      {"T13", "the strong contradiction law equals interval-wide "
       "connexivity", "integral", kIntervalEvidence,
       "~x /\\ ~(x -> y) <= 0 holds exactly when every arrow between the "
       "bare product and meet arrows is proto-connexive, and exactly when "
       "some member of some increasingly decorated interval satisfies "
       "Boethius",
       check_t13},
      {"T14", "the contradiction law equals interval-wide connexivity "
       "under weakening", "integral and zero-bounded", kIntervalEvidence,
       "with 0 least, x /\\ ~x <= 0 holds exactly when every arrow between "
       "the bare product and meet arrows is proto-connexive, and exactly "
       "when some decorated product endpoint satisfies Aristotle (members "
       "inherit Aristotle downward, so endpoints decide the existential "
       "side)",
       check_t14},
      {"T15", "Boethius and its chained form coincide for the meet arrow",
       "", kTableEvidence,
       "the meet arrow satisfies 1 <= (x => y) => ~(x => ~y) exactly when "
       "it satisfies 1 <= (x => y) => ((y => z) => ~(x => ~z))",
       check_t15},
      {"T16", "only double negation decorates a Boethius-passing meet "
       "arrow", "Glivenko axioms hold", "every increasing decoration",
       "among all increasing decorations, the decorated meet arrow "
       "satisfies Boethius exactly for double negation; the product arrow "
       "may admit several, which is reported as a note",
       check_t16},
      {"T17", "weak Boethius laws: equivalence and transfer", "",
       kTableEvidence,
       "for both arrows the two weak Boethius rules agree and imply both "
       "Aristotle laws; Boethius or its converse implies both weak rules, "
       "for the product arrow under a greatest closed unit",
       check_t17},
      {"T18", "weak and proto connexivity coincide under weakening",
       "integral and zero-bounded", kTableEvidence,
       "with 1 greatest and 0 least, each arrow is weakly connexive "
       "exactly when it is proto-connexive; algebras outside the scope "
       "that are weakly but not proto-connexive are noted",
       check_t18},
      {"T19", "strong connexivity fails except in the degenerate case",
       "proto-connexive for the relevant arrow", kTableEvidence,
       "within meet-arrow proto-connexivity, the strong prohibitions are "
       "refuted exactly when zero is greatest; within product-arrow "
       "proto-connexivity, a refutation forces the unit below zero",
       check_t19},
      {"T20", "admissible diamonds are double negation; the meet arrow is "
       "the weakest fit", "",
       "all unary tables above double negation; sampled binary tables "
       "under both residual bounds",
       "every unary operation that is below negation-switching and above "
       "double negation equals double negation, and every binary table "
       "under x -> y and y -> ~~x stays under the meet arrow",
       check_t20},
      {"T21", "negation compatibility plus the conversion law give "
       "connexivity", "", kTableEvidence,
       "both arrows always satisfy 1 <= x => ~~x, and whenever the "
       "conversion law ~~(x => y) = ~(x => ~y) holds the arrow is "
       "proto-connexive",
       check_t21},
      {"T22", "a symmetric residual forces the one-element algebra",
       "zero is greatest", kTableEvidence,
       "when zero is greatest the residual arrow is proto-connexive, and "
       "it is symmetric exactly on the one-element algebra",
       check_t22},
      {"T23", "the residual is recoverable from the meet arrow",
       "double negation of the unit is greatest", kTableEvidence,
       "x -> y equals x => (~~x /\\ y) for the meet arrow whenever the "
       "double negation of the unit is greatest",
       check_t23},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const CheckDef& d : registry()) v.push_back(d.id);
    return v;
  }();
  return ids;
}

std::string explain_check(const std::string& check_id) {
  for (const CheckDef& d : registry())
    if (check_id == d.id) {
      std::string s = std::string(d.id) + "  " + d.title;
      s += "\nstatement: ";
      s += d.statement;
      s += "\nscope: ";
      s += *d.scope ? d.scope : "every algebra";
      s += "\nevidence: ";
      s += d.evidence;
      return s;
    }
  throw UnknownCheckError("unknown check id: " + check_id);
}

SuiteReport run_suite(const Corpus& corpus, const SuiteConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<CheckDef>& defs = registry();
  const std::size_t na = corpus.entries.size();

  std::vector<Classification> cls(na);
  std::vector<BinTable> cm(na), cp(na);
  parallel_for(na, config.threads, [&](std::size_t i) {
    const FleAlgebra& a = corpus.entries[i].algebra;
    cls[i] = classify(a);
    cm[i] = arrow_table(a, ArrowKind::CnxMeet);
    cp[i] = arrow_table(a, ArrowKind::CnxProd);
  });

  std::vector<std::vector<Verdict>> slots(defs.size(),
                                          std::vector<Verdict>(na));
  parallel_for(defs.size() * na, config.threads, [&](std::size_t t) {
    const std::size_t ci = t / (na ? na : 1);
    const std::size_t ai = t % (na ? na : 1);
    const Ctx ctx{&corpus.entries[ai].algebra, &corpus.entries[ai].hash,
                  &cls[ai], &cm[ai], &cp[ai]};
    slots[ci][ai] = defs[ci].fn(ctx, config);
  });

  SuiteReport rep;
  rep.algebras = na;
  rep.pass = true;
  for (std::size_t ci = 0; ci < defs.size(); ++ci) {
    CheckRow row;
    row.id = defs[ci].id;
    row.title = defs[ci].title;
    row.scope = defs[ci].scope;
    row.evidence = defs[ci].evidence;
    std::uint64_t extra_witnesses = 0, extra_notes = 0;
    for (std::size_t ai = 0; ai < na; ++ai) {
      const Verdict& v = slots[ci][ai];
      for (const std::string& note : v.notes) {
        if (static_cast<int>(row.notes.size()) < config.witness_cap)
          row.notes.push_back(note);
        else
          ++extra_notes;
      }
      if (!v.in_scope) continue;
      ++row.scanned;
      if (!v.pass) {
        ++row.failures;
        const Ctx ctx{&corpus.entries[ai].algebra, &corpus.entries[ai].hash,
                      &cls[ai], &cm[ai], &cp[ai]};
        if (static_cast<int>(row.witnesses.size()) < config.witness_cap)
          row.witnesses.push_back(tag(ctx) + ": " + v.witness);
        else
          ++extra_witnesses;
      }
    }
    if (extra_witnesses)
      row.witnesses.push_back("... and " + std::to_string(extra_witnesses) +
                              " more failing algebras");
    if (extra_notes)
      row.notes.push_back("... and " + std::to_string(extra_notes) +
                          " more notes");
    if (row.scanned == 0)
      row.notes.push_back("no in-scope algebra in this corpus");
    if (row.failures) rep.pass = false;
    rep.rows.push_back(std::move(row));
  }
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

Corpus with_stock_fixtures(Corpus base) {
  std::set<CanonicalForm> seen;
  for (const CorpusEntry& e : base.entries) seen.insert(e.form);
  for (const std::string& name : default_fixture_instances()) {
    const Fixture f = fixture(name);
    if (!f.algebra) continue;
    CanonicalForm form = canonicalize(*f.algebra);
    if (!seen.insert(form).second) continue;
    std::string hex = canonical_hash_hex(form);
    base.entries.push_back(
        CorpusEntry{algebra_from_form(form), std::move(form), std::move(hex)});
  }
  std::sort(base.entries.begin(), base.entries.end(),
            [](const CorpusEntry& l, const CorpusEntry& r) {
              return l.form < r.form;
            });
  return base;
}

Corpus suite_corpus(int max_size, int threads, int size_cap) {
  EnumerationReport rep = enumerate_fle_up_to(max_size, threads, size_cap);
  return with_stock_fixtures(std::move(rep.corpus));
}

Json suite_report_to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const CheckRow& row : r.rows) {
    Json j;
    j["id"] = row.id;
    j["title"] = row.title;
    j["scope"] = row.scope.empty() ? "every algebra" : row.scope;
    j["evidence"] = row.evidence;
    j["scanned"] = row.scanned;
    j["failures"] = row.failures;
    j["witnesses"] = row.witnesses;
    j["notes"] = row.notes;
    checks.push_back(std::move(j));
  }
  Json out;
  out["pass"] = r.pass;
  out["algebras"] = r.algebras;
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace fleck
