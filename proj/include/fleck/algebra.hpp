#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fleck/lattice.hpp"
#include "fleck/report.hpp"

namespace fleck {

// Outcome of deriving the residual x -> y = max{z : x*z <= y} from a product.
// On rejection (x, y) names the first cell whose residual set is empty or
// whose join fails the residuation law.
struct ResidualResult {
  bool ok = false;
  std::vector<Elem> arrow;
  Elem x = -1, y = -1;
};

ResidualResult residual_from_product(const FiniteLattice& lat,
                                     const std::vector<Elem>& prod);

// Pointed commutative residuated lattice on a finite carrier. The arrow table
// is always the one recomputed from the product; construction never trusts a
// supplied arrow (build_algebra cross-checks one if given). Immutable once
// built; all operations are pure table lookups.
class FleAlgebra {
 public:
  int size() const { return lat_.size(); }
  const FiniteLattice& lattice() const { return lat_; }
  bool leq(Elem x, Elem y) const { return lat_.leq(x, y); }
  Elem meet(Elem x, Elem y) const { return lat_.meet(x, y); }
  Elem join(Elem x, Elem y) const { return lat_.join(x, y); }
  Elem prod(Elem x, Elem y) const { return prod_[x * size() + y]; }
  Elem arrow(Elem x, Elem y) const { return arrow_[x * size() + y]; }
  Elem unit() const { return unit_; }
  Elem zero() const { return zero_; }
  Elem neg(Elem x) const { return arrow(x, zero_); }
  Elem dm(Elem x) const { return neg(neg(x)); }

  const std::vector<Elem>& prod_table() const { return prod_; }
  const std::vector<Elem>& arrow_table() const { return arrow_; }
  std::vector<Elem> neg_table() const;
  std::vector<Elem> dm_table() const;

  // Display label for witnesses: the labels array when present, else the index.
  std::string label(Elem x) const;
  const std::vector<std::string>& labels() const { return labels_; }

  // Validating constructor; throws MalformedTableError / Error with the
  // violated axiom. Prefer build_algebra when the report itself is wanted.
  static FleAlgebra make(FiniteLattice lat, std::vector<Elem> prod, Elem unit,
                         Elem zero, std::vector<std::string> labels = {});

  // Trusted constructor for enumeration output whose tables were already
  // checked piecewise; still verifies nothing, so callers must have done so.
  static FleAlgebra assemble(FiniteLattice lat, std::vector<Elem> prod,
                             Elem unit, Elem zero, std::vector<Elem> arrow,
                             std::vector<std::string> labels = {});

  FleAlgebra with_labels(std::vector<std::string> labels) const;

 private:
  explicit FleAlgebra(FiniteLattice lat) : lat_(std::move(lat)) {}
  FiniteLattice lat_;
  std::vector<Elem> prod_, arrow_;
  Elem unit_ = 0, zero_ = 0;
  std::vector<std::string> labels_;
};

struct BuildResult {
  std::optional<FleAlgebra> algebra;
  CheckReport report;
};

// Checks table shape, commutativity, unit, associativity and residuation in
// that order; derives the arrow and, when supplied_arrow is given, rejects on
// the first mismatching cell (rule "residuation").
BuildResult build_algebra(FiniteLattice lat, std::vector<Elem> prod, Elem unit,
                          Elem zero, std::vector<std::string> labels = {},
                          const std::vector<Elem>* supplied_arrow = nullptr);

// Re-runs every axiom on an existing algebra.
CheckReport validate(const FleAlgebra& a);

// Unary map with structural flags; flags are always recomputed from the
// table, never taken from input.
struct UnaryMap {
  std::vector<Elem> table;
  bool is_increasing = false;
  bool is_monotone = false;
  bool is_idempotent = false;
  bool is_nucleus = false;

  Elem operator()(Elem x) const { return table[x]; }
  static UnaryMap analyze(const FleAlgebra& a, std::vector<Elem> table);
};

// The double-negation map x -> ~~x; a nucleus on every algebra here.
UnaryMap dm_map(const FleAlgebra& a);

// Algebra on the image of a nucleus g: meet inherited, join/product composed
// with g, unit g(1), zero g(0), arrow rederived from the image product.
// Throws PreconditionError when g is not a nucleus.
FleAlgebra nucleus_image(const FleAlgebra& a, const UnaryMap& g);

}  // namespace fleck
