#pragma once

// Naive reference implementations used to pin expected values. Everything
// here recomputes from raw tables with plain scans; nothing calls back into
// the library, so a bug there cannot hide itself.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Table = std::vector<int>;  // row-major n*n

inline bool leq_at(const Table& leq, int n, int x, int y) {
  return leq[x * n + y] != 0;
}

// Largest z with z*x <= y, by scanning every candidate and insisting the
// maximum dominates all others; nullopt when no single maximum exists.
inline std::optional<int> residual(const Table& leq, const Table& prod, int n,
                                   int x, int y) {
  std::vector<int> fits;
  for (int z = 0; z < n; ++z)
    if (leq_at(leq, n, prod[z * n + x], y)) fits.push_back(z);
  for (int cand : fits) {
    bool top = true;
    for (int other : fits)
      if (!leq_at(leq, n, other, cand)) top = false;
    if (top) return cand;
  }
  return std::nullopt;
}

inline bool is_poset(const Table& leq, int n) {
  for (int x = 0; x < n; ++x)
    if (!leq_at(leq, n, x, x)) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x != y && leq_at(leq, n, x, y) && leq_at(leq, n, y, x)) return false;
      for (int z = 0; z < n; ++z)
        if (leq_at(leq, n, x, y) && leq_at(leq, n, y, z) &&
            !leq_at(leq, n, x, z))
          return false;
    }
  return true;
}

// Unique greatest lower bound of x,y; nullopt when absent.
inline std::optional<int> glb(const Table& leq, int n, int x, int y) {
  std::vector<int> lows;
  for (int z = 0; z < n; ++z)
    if (leq_at(leq, n, z, x) && leq_at(leq, n, z, y)) lows.push_back(z);
  for (int cand : lows) {
    bool top = true;
    for (int other : lows)
      if (!leq_at(leq, n, other, cand)) top = false;
    if (top) return cand;
  }
  return std::nullopt;
}

inline std::optional<int> lub(const Table& leq, int n, int x, int y) {
  std::vector<int> ups;
  for (int z = 0; z < n; ++z)
    if (leq_at(leq, n, x, z) && leq_at(leq, n, y, z)) ups.push_back(z);
  for (int cand : ups) {
    bool bottom = true;
    for (int other : ups)
      if (!leq_at(leq, n, cand, other)) bottom = false;
    if (bottom) return cand;
  }
  return std::nullopt;
}

inline bool is_lattice(const Table& leq, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!glb(leq, n, x, y) || !lub(leq, n, x, y)) return false;
  return true;
}

inline std::string permuted_key(const Table& leq, int n,
                                const std::vector<int>& p) {
  std::string s;
  s.reserve(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      s.push_back(leq_at(leq, n, p[x], p[y]) ? '1' : '0');
  return s;
}

inline std::string canonical_lattice_key(const Table& leq, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::string best = permuted_key(leq, n, p);
  while (std::next_permutation(p.begin(), p.end()))
    best = std::min(best, permuted_key(leq, n, p));
  return best;
}

// All lattices on n elements up to isomorphism, as canonical leq keys, found
// by sweeping every reflexive relation bit pattern.
inline std::set<std::string> all_lattices(int n) {
  std::set<std::string> found;
  const int bits = n * (n - 1);
  for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
    Table leq(n * n, 0);
    int b = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y)
          leq[x * n + y] = 1;
        else
          leq[x * n + y] = (mask >> b++) & 1;
      }
    if (is_poset(leq, n) && is_lattice(leq, n))
      found.insert(canonical_lattice_key(leq, n));
  }
  return found;
}

struct RawAlgebra {
  int n = 0;
  Table leq, prod;
  int unit = 0, zero = 0;
};

// Canonical key over (leq, prod, unit, zero), minimized over all carrier
// permutations. Independent of the library's byte layout on purpose; both
// sides of a comparison must be run through this same function.
inline std::string canonical_algebra_key(const RawAlgebra& a) {
  const int n = a.n;
  std::vector<int> p(n), q(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::string best;
  do {
    for (int i = 0; i < n; ++i) q[p[i]] = i;  // q = p^-1
    std::string s;
    s.reserve(2 * n * n + 2);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        s.push_back(leq_at(a.leq, n, p[x], p[y]) ? '1' : '0');
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        s.push_back(static_cast<char>('0' + q[a.prod[p[x] * n + p[y]]]));
    s.push_back(static_cast<char>('0' + q[a.unit]));
    s.push_back(static_cast<char>('0' + q[a.zero]));
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline bool commutative(const Table& prod, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (prod[x * n + y] != prod[y * n + x]) return false;
  return true;
}

inline std::optional<int> unit_of(const Table& prod, int n) {
  for (int u = 0; u < n; ++u) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (prod[u * n + x] != x || prod[x * n + u] != x) ok = false;
    if (ok) return u;
  }
  return std::nullopt;
}

inline bool associative(const Table& prod, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (prod[prod[x * n + y] * n + z] != prod[x * n + prod[y * n + z]])
          return false;
  return true;
}

inline bool residuated(const Table& leq, const Table& prod, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::optional<int> r = residual(leq, prod, n, x, y);
      if (!r) return false;
      // z <= x->y must hold exactly when x*z <= y; a maximum alone is not
      // enough, the fit set has to be the residual's whole downset
      for (int z = 0; z < n; ++z)
        if (leq_at(leq, n, z, *r) != leq_at(leq, n, prod[z * n + x], y))
          return false;
    }
  return true;
}

// Every pointed commutative residuated lattice on at most n elements, as
// canonical keys: raw product tables swept cell by cell over every oracle
// lattice, filtered by the axioms, then every zero choice.
inline std::set<std::string> all_fle_keys(int max_n) {
  std::set<std::string> found;
  for (int n = 1; n <= max_n; ++n) {
    for (const std::string& key : all_lattices(n)) {
      Table leq(n * n);
      for (int i = 0; i < n * n; ++i) leq[i] = key[i] == '1';
      // odometer over the upper triangle; commutativity fills the rest
      std::vector<std::pair<int, int>> cells;
      for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) cells.emplace_back(x, y);
      std::vector<int> pick(cells.size(), 0);
      while (true) {
        Table prod(n * n);
        for (std::size_t i = 0; i < cells.size(); ++i) {
          prod[cells[i].first * n + cells[i].second] = pick[i];
          prod[cells[i].second * n + cells[i].first] = pick[i];
        }
        const std::optional<int> u = unit_of(prod, n);
        if (u && associative(prod, n) && residuated(leq, prod, n)) {
          for (int zero = 0; zero < n; ++zero) {
            RawAlgebra a;
            a.n = n;
            a.leq = leq;
            a.prod = prod;
            a.unit = *u;
            a.zero = zero;
            found.insert(canonical_algebra_key(a));
          }
        }
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == n) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    }
  }
  return found;
}

}  // namespace oracle
