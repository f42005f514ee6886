#pragma once

#include <map>
#include <string>

#include "fleck/algebra.hpp"
#include "fleck/term.hpp"

namespace fleck {

// Optional bindings for the two bound unary connectives. Undecorated cm/cp
// always mean the double-negation map regardless of the delta binding.
struct Bindings {
  const std::vector<Elem>* delta = nullptr;
  const std::vector<Elem>* bdiam = nullptr;
};

// Throws UnboundVariableError / UnboundDeltaError when the term needs a name
// or map the context does not supply.
Elem eval(const FleAlgebra& a, const TermPtr& t,
          const std::map<std::string, Elem>& assignment,
          const Bindings& bind = {});

// Decides the statement over every assignment (variables in sorted order,
// tuples ascending lexicographically, so a reported witness is the least
// one). Quasi-identities pass iff every premise-satisfying assignment
// satisfies the conclusion. The failure trace lists each subterm of the
// statement with its value at the witness.
CheckReport check(const FleAlgebra& a, const Statement& s,
                  const Bindings& bind = {});

}  // namespace fleck
