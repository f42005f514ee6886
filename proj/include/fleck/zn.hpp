#pragma once

#include <map>
#include <optional>
#include <string>

#include "fleck/term.hpp"

namespace fleck {

using ZVal = long long;
using ZAssignment = std::map<std::string, ZVal>;

// The integers with min/max/addition, x -> y = y - x, unit = integer 0 and
// pointed zero = n (so ~x = n - x and dm is the identity). Infinite carrier:
// statements can only be window-checked, never certified; every claim a
// report derives from this model is labeled accordingly.
struct ZnAlgebra {
  ZVal n = 0;

  // Exact evaluation; terms may not contain delta/bdiam.
  ZVal eval(const TermPtr& t, const ZAssignment& assignment) const;

  // Least failing assignment with all variables in [-window, window],
  // scanning tuples in ascending lexicographic order; nullopt when the
  // statement holds throughout the window.
  std::optional<ZAssignment> search_witness(const Statement& s,
                                            ZVal window = 10) const;

  bool atom_holds(const Atom& a, const ZAssignment& assignment) const;
};

}  // namespace fleck
