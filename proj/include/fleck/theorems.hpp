#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fleck/enumerate.hpp"
#include "fleck/json_io.hpp"

namespace fleck {

struct SuiteConfig {
  int threads = 1;
  std::uint64_t seed = 0;

  // Interval evidence policy: full member sweeps on small carriers, endpoint
  // plus seeded-sample sweeps beyond. The cap guards the full sweep even on a
  // small carrier with unexpectedly wide cells.
  int samples = 1000;
  int exhaustive_interval_max_size = 3;
  std::uint64_t interval_cap = std::uint64_t(1) << 20;

  // Per-check witness lines kept in a row (failures beyond are only counted).
  int witness_cap = 5;
};

struct CheckRow {
  std::string id;
  std::string title;
  std::string scope;     // hypothesis filter, empty when unconditional
  std::string evidence;  // how members/maps were covered
  std::uint64_t scanned = 0;   // in-scope algebras visited
  std::uint64_t failures = 0;  // in-scope algebras falsifying the statement
  std::vector<std::string> witnesses;  // "<hash> (n=k): detail", capped
  std::vector<std::string> notes;      // informational, never failures
};

struct SuiteReport {
  bool pass = false;
  std::uint64_t algebras = 0;
  std::vector<CheckRow> rows;
  double seconds = 0;  // wall time; excluded from serialized output
};

// Registered check ids in run order (T1..T23).
const std::vector<std::string>& suite_check_ids();

// Statement, scope and evidence policy of one check, as display text.
// Throws UnknownCheckError for an unregistered id.
std::string explain_check(const std::string& check_id);

// Runs every registered check over every corpus entry. The report depends
// only on (corpus, config minus threads): work is scheduled in parallel but
// written into per-(check, entry) slots and merged in corpus order.
SuiteReport run_suite(const Corpus& corpus, const SuiteConfig& config = {});

// Enumerated corpus up to max_size merged with the finite stock fixtures
// (deduplicated by canonical form, kept form-ascending). Fixtures join even
// when larger than max_size; the cap applies to enumeration only.
Corpus suite_corpus(int max_size, int threads = 1,
                    int size_cap = kDefaultSizeCap);

// Merges the finite stock fixtures into an existing corpus (same dedup and
// ordering rules as suite_corpus).
Corpus with_stock_fixtures(Corpus base);

Json suite_report_to_json(const SuiteReport& r);

}  // namespace fleck
