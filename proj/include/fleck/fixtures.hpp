#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fleck/analysis.hpp"
#include "fleck/zn.hpp"

namespace fleck {

struct Fixture;

// One pinned verdict: what to check, whether it must pass, and (when
// nonempty) the exact witness demanded of a failing check.
struct Expectation {
  std::string subject;
  bool expect_pass = true;
  NamedValues expect_witness;
  std::function<CheckReport(const Fixture&)> run;
};

// A named reference model with its frozen behavior. Finite fixtures carry a
// validated FleAlgebra; the integer family carries a window-checked model
// instead.
struct Fixture {
  std::string name;
  std::string provenance;  // where the model comes from, in plain math terms
  std::optional<FleAlgebra> algebra;
  std::optional<ZnAlgebra> zn;
  std::vector<Expectation> expected;
};

// Parametric names parse as base(k); a bare trailing integer also works
// (boolean2 = boolean(2)). Throws UnknownFixtureError.
Fixture fixture(const std::string& name);

struct FixtureInfo {
  std::string name;  // with parameter placeholder for families
  std::string provenance;
};
const std::vector<FixtureInfo>& fixture_list();

// The concrete instances exercised by default; finite ones join the theorem
// suite corpus.
const std::vector<std::string>& default_fixture_instances();

// Re-checks every expectation, witnesses included; each mismatch is one
// trace entry of the aggregate (expected vs actual).
CheckReport verify_fixture(const Fixture& f);
CheckReport verify_fixture(const std::string& name);

}  // namespace fleck
