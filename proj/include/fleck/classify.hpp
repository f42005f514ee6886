#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fleck/theses.hpp"

namespace fleck {

// One classification flag. For universally quantified properties the witness
// is the least falsifying assignment (present iff value is false); for the
// existential ones (ns_*, k1/k2_refuted) it is the least witness (present iff
// value is true).
struct Flag {
  bool value = false;
  NamedValues witness;
};

struct Classification {
  Flag integral;        // 1 is greatest
  Flag zero_bounded;    // 0 is least
  Flag involutive;      // ~~x = x
  Flag pc;              // x /\ ~x <= 0
  Flag spc;             // ~x /\ ~(x -> y) <= 0
  Flag boolean_alg;     // integral + involutive + pc
  Flag zero_greatest;   // x <= 0
  Flag dm1_greatest;    // x <= dm(1)
  Flag glivenko_ba;     // GLV_A and GLV_B
  Flag glivenko_ba_int_route;  // integral and spc
  Flag proto_cnx_meet, proto_cnx_prod;
  Flag weakly_cnx_meet, weakly_cnx_prod;
  Flag ns_meet, ns_prod;
  Flag k1_refuted, k2_refuted;  // for the meet arrow
  Flag one_leq_zero;
};

// Computes every flag with cross-checks: boolean by definition vs the direct
// x*y = x/\y, x->y = ~x\/y test; zero_greatest vs constant negation; on
// integral algebras glivenko_ba vs spc vs the negated-arrow identity. A
// cross-check mismatch is an internal defect and throws.
Classification classify(const FleAlgebra& a);

// Lookup by serialized name ("integral", ..., "one_leq_zero"); nullptr when
// unknown. The name list is in serialization order.
const Flag* classification_flag(const Classification& c,
                                const std::string& name);
const std::vector<std::string>& classification_flag_names();

}  // namespace fleck
