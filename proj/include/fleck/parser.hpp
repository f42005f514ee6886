#pragma once

#include <string>

#include "fleck/term.hpp"

namespace fleck {

// Statement grammar, loosest to tightest:
//   stmt  := atom {"," atom} ["|-" atom]      (commas require the turnstile)
//   atom  := term ("=" | "<=") term
//   term  := arrows over \/ over /\ over * over unary
//   arrow := "->" | "<->" | "cm" | "cp" | "cmd" | "cpd"   (right-associative)
//   unary := "~" unary | "dm(" term ")" | "delta(" term ")" | "bdiam(" term ")"
//          | ident | "0" | "1" | "(" term ")"
//   ident := [a-z][a-z0-9_]*   (cm, cp, cmd, cpd, dm, delta, bdiam reserved)
// Throws ParseError with a byte position on malformed input.
Statement parse_statement(const std::string& text);
TermPtr parse_term(const std::string& text);

}  // namespace fleck
