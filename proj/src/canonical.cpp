#include "fleck/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace fleck {

namespace {

// Relabels the algebra by p (element x becomes p[x]) and serializes. The
// candidate buffer is reused across permutations.
void relabel_into(const FleAlgebra& a, const std::vector<int>& p,
                  bool with_zero, CanonicalForm& out) {
  const int n = a.size();
  out.assign(1 + 2 * n * n + (with_zero ? 2 : 1), 0);
  out[0] = static_cast<std::uint8_t>(n);
  std::uint8_t* leq = out.data() + 1;
  std::uint8_t* prod = leq + n * n;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      leq[p[x] * n + p[y]] = a.leq(x, y) ? 1 : 0;
      prod[p[x] * n + p[y]] = static_cast<std::uint8_t>(p[a.prod(x, y)]);
    }
  out[1 + 2 * n * n] = static_cast<std::uint8_t>(p[a.unit()]);
  if (with_zero)
    out[2 + 2 * n * n] = static_cast<std::uint8_t>(p[a.zero()]);
}

CanonicalForm minimize(const FleAlgebra& a, bool with_zero) {
  const int n = a.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  CanonicalForm best, candidate;
  do {
    relabel_into(a, p, with_zero, candidate);
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

}  // namespace

CanonicalForm canonicalize(const FleAlgebra& a) { return minimize(a, true); }

CanonicalForm canonicalize_crl(const FleAlgebra& a) {
  return minimize(a, false);
}

FleAlgebra algebra_from_form(const CanonicalForm& form) {
  if (form.empty()) throw MalformedTableError("empty canonical form");
  const int n = form[0];
  if (static_cast<int>(form.size()) != 1 + 2 * n * n + 2)
    throw MalformedTableError("canonical form has the wrong length");
  std::vector<std::uint8_t> leq(form.begin() + 1, form.begin() + 1 + n * n);
  std::vector<Elem> prod(n * n);
  for (int c = 0; c < n * n; ++c) prod[c] = form[1 + n * n + c];
  const Elem unit = form[1 + 2 * n * n];
  const Elem zero = form[2 + 2 * n * n];
  BuildResult r = build_algebra(FiniteLattice::from_leq(n, leq),
                                std::move(prod), unit, zero);
  if (!r.algebra)
    throw Error("internal defect: canonical form does not rebuild: " +
                r.report.rule);
  return *std::move(r.algebra);
}

std::string canonical_hash_hex(const CanonicalForm& form) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint8_t b : form) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  std::string hex(16, '0');
  for (int i = 15; i >= 0; --i) {
    hex[i] = "0123456789abcdef"[h & 0xf];
    h >>= 4;
  }
  return hex;
}

}  // namespace fleck
