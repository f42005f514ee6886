#pragma once

#include <string>
#include <vector>

#include "fleck/term.hpp"

namespace fleck {

// The five binary implication-like connectives a named statement can be
// instantiated with: the residual itself, the two connexive arrows built on
// double negation, and their delta-decorated variants.
enum class ArrowKind { Residual, CnxMeet, CnxProd, CnxMeetD, CnxProdD };

ArrowKind arrow_kind_from_string(const std::string& s);  // res|cm|cp|cmd|cpd
std::string to_string(ArrowKind k);

// Builds `l K r` for the given kind.
TermPtr apply_arrow(ArrowKind k, TermPtr l, TermPtr r);

// Registry of the named (quasi-)identities. Parameterized names take the
// arrow kind; fixed names (PC, SPC, GLV_*, EFQ_Q, TOP_DM1, A{1,2}_BDIAMOND)
// ignore it. Throws UnknownNameError.
Statement named_statement(const std::string& name,
                          ArrowKind k = ArrowKind::CnxMeet);
const std::vector<std::string>& named_statement_names();
bool named_statement_takes_arrow(const std::string& name);

}  // namespace fleck
