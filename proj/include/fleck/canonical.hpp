#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fleck/algebra.hpp"

namespace fleck {

// Isomorphism-invariant byte string: size, then the lexicographically least
// relabeling of (leq, prod, unit, zero) over all carrier permutations. Two
// validated algebras share a form iff some bijection preserves <=, *, 1, 0
// (the arrow is derived, so it transports for free).
using CanonicalForm = std::vector<std::uint8_t>;

CanonicalForm canonicalize(const FleAlgebra& a);

// The unpointed variant: zero is left out, so all zero choices of one
// commutative residuated lattice collapse to a single form.
CanonicalForm canonicalize_crl(const FleAlgebra& a);

// FNV-1a over the form, as 16 lowercase hex digits; used for corpus
// filenames.
std::string canonical_hash_hex(const CanonicalForm& form);

// Rebuilds the algebra whose tables are the form itself, so corpus
// representatives are byte-reproducible. Throws on malformed bytes.
FleAlgebra algebra_from_form(const CanonicalForm& form);

}  // namespace fleck
