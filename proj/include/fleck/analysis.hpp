#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fleck/classify.hpp"

namespace fleck {

// Every map m with x <= m(x), in a fixed order: odometer over each element's
// ascending upset, last element fastest. Count = product of upset sizes.
std::vector<UnaryMap> increasing_maps(const FleAlgebra& a);

// AT, AT', BT, BT' in order for the chosen arrow; the failing thesis is named
// in the witness. delta is required for the decorated kinds and must be
// increasing (PreconditionError otherwise); it is ignored for res/cm/cp.
CheckReport proto_connexive(const FleAlgebra& a, ArrowKind k,
                            const UnaryMap* delta = nullptr);

// Least (x, y) whose arrow values in the two directions are not mutually <=.
std::optional<std::pair<Elem, Elem>> non_symmetry_witness(
    const FleAlgebra& a, ArrowKind k, const UnaryMap* delta = nullptr);

// AT, AT', BTw, BTw'. The two quasi-rules are computed independently and must
// agree; a disagreement is an internal defect and throws.
CheckReport weakly_connexive(const FleAlgebra& a, ArrowKind k);

std::optional<StrongRefutation> strong_connexivity_refutation(
    const FleAlgebra& a, ArrowKind k, const UnaryMap* delta = nullptr);

// Which increasing maps let the decorated arrows pass BT. Indices refer to
// the increasing_maps order. Requires the Glivenko flags (PreconditionError
// otherwise); under them every meet-arrow pass is forced onto double
// negation, which meet_forced records rather than assumes.
struct DeltaForcingReport {
  int delta_count = 0;
  int dm_index = -1;                 // position of the double-negation map
  std::vector<int> meet_bt_passing;  // BT holds for the decorated meet arrow
  std::vector<int> prod_bt_passing;  // BT holds for the decorated product arrow
  bool meet_forced = false;          // meet_bt_passing == {dm_index}
};
DeltaForcingReport delta_forcing(const FleAlgebra& a);

// Evidence mode for the implication interval [prod arrow, meet arrow].
struct IntervalMode {
  enum Kind { Endpoints, Sampled, Exhaustive } kind = Endpoints;
  int samples = 1000;            // Sampled
  std::uint64_t seed = 0;        // Sampled
  std::uint64_t cap = 1 << 20;   // Exhaustive refuses above this member count

  static IntervalMode endpoints() { return {}; }
  static IntervalMode sampled(int n, std::uint64_t seed) {
    return {Sampled, n, seed, 1 << 20};
  }
  static IntervalMode exhaustive(std::uint64_t cap = 1 << 20) {
    return {Exhaustive, 0, 0, cap};
  }
};

struct IntervalReport {
  std::uint64_t member_count = 0;  // product of cell ranges, saturated
  bool count_saturated = false;
  bool exhaustive = false;         // every member was checked
  bool capped_out = false;         // exhaustive mode refused: count > cap
  int checked = 0;                 // members checked beyond the endpoints
  CheckReport lo;                  // proto verdict at the product endpoint
  CheckReport hi;                  // proto verdict at the meet endpoint
  bool all_proto = false;          // every checked member is proto-connexive
  std::optional<BinTable> failing_member;
  CheckReport failing_verdict;
};

// Checks members of the pointwise interval between the two decorated arrows
// for proto-connexivity. Integral algebras only (PreconditionError); delta
// must be increasing.
IntervalReport interval_analysis(const FleAlgebra& a, const UnaryMap& delta,
                                 IntervalMode mode);

// Diamond expansion survey: enumerates every unary table d with dm(x) <= d(x)
// pointwise (the second axiom) and d(~x) <= ~d(x) (the first), and records
// whether each survivor equals double negation. Also samples random binary
// tables under the bounds f(x,y) <= x->y and f(x,y) <= y->dm(x) and records
// whether each stays below the meet arrow pointwise.
struct BDiamondReport {
  std::uint64_t candidates = 0;   // tables satisfying the second axiom alone
  int admissible = 0;             // tables satisfying both axioms
  bool all_equal_dm = false;
  int sampled_tables = 0;
  bool all_below_meet_arrow = false;
};
BDiamondReport bdiamond_expansions(const FleAlgebra& a, std::uint64_t seed = 0,
                                   int samples = 100);

}  // namespace fleck
