#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fleck {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised on syntactically broken statement text; pos is a 0-based byte offset.
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p) : Error(msg), pos(p) {}
};

struct MalformedTableError : Error { using Error::Error; };
struct UnknownNameError : Error { using Error::Error; };
struct UnknownFixtureError : Error { using Error::Error; };
struct UnknownCheckError : Error { using Error::Error; };
struct UnboundVariableError : Error { using Error::Error; };
struct UnboundDeltaError : Error { using Error::Error; };

// Violated preconditions: non-integral interval analysis, non-nucleus image,
// non-increasing delta, size cap overruns, delta forcing outside its scope.
struct PreconditionError : Error { using Error::Error; };

using NamedValues = std::vector<std::pair<std::string, std::string>>;

// Universal pass/fail currency. `rule` names the axiom or echoes the statement;
// a failed report always carries the witness assignment that falsifies it.
struct CheckReport {
  bool pass = true;
  std::string rule;
  NamedValues witness;
  NamedValues trace;
  std::string note;

  static CheckReport ok(std::string rule) {
    CheckReport r;
    r.pass = true;
    r.rule = std::move(rule);
    return r;
  }
  static CheckReport fail(std::string rule, NamedValues witness,
                          NamedValues trace = {}, std::string note = {}) {
    CheckReport r;
    r.pass = false;
    r.rule = std::move(rule);
    r.witness = std::move(witness);
    r.trace = std::move(trace);
    r.note = std::move(note);
    return r;
  }
};

}  // namespace fleck
