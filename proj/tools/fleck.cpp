#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "fleck/analysis.hpp"
#include "fleck/eval.hpp"
#include "fleck/fixtures.hpp"
#include "fleck/json_io.hpp"
#include "fleck/parser.hpp"
#include "fleck/theorems.hpp"

namespace {

using namespace fleck;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;   // a witness falsified the question asked
constexpr int kExitUsage = 2;  // bad invocation or unreadable input

struct Target {
  std::optional<FleAlgebra> a;
  std::optional<ZnAlgebra> z;
  std::string name;
};

Target load_target(const std::string& algebra_path,
                   const std::string& fixture_name) {
  if (!algebra_path.empty() && !fixture_name.empty())
    throw Error("--algebra and --fixture are mutually exclusive");
  Target t;
  if (!algebra_path.empty()) {
    t.a = load_algebra(algebra_path);
    t.name = algebra_path;
    return t;
  }
  if (!fixture_name.empty()) {
    Fixture f = fixture(fixture_name);
    t.a = std::move(f.algebra);
    t.z = std::move(f.zn);
    t.name = fixture_name;
    return t;
  }
  throw Error("one of --algebra or --fixture is required");
}

// --delta accepts "dm" or "table:<path>" (a JSON array of element indices).
std::vector<Elem> delta_table_for(const FleAlgebra& a, const std::string& spec) {
  if (spec == "dm") return a.dm_table();
  const std::string prefix = "table:";
  if (spec.rfind(prefix, 0) != 0)
    throw Error("--delta expects dm or table:<path>");
  const std::string path = spec.substr(prefix.size());
  std::ifstream in(path);
  if (!in) throw Error("cannot open delta table file '" + path + "'");
  const Json j = Json::parse(in);
  if (!j.is_array() || static_cast<int>(j.size()) != a.size())
    throw MalformedTableError("delta table must be an array of " +
                              std::to_string(a.size()) + " element indices");
  std::vector<Elem> t;
  for (const Json& v : j) {
    if (!v.is_number_integer())
      throw MalformedTableError("delta table entries must be integers");
    const long long e = v.get<long long>();
    if (e < 0 || e >= a.size())
      throw MalformedTableError("delta table entry out of range");
    t.push_back(static_cast<Elem>(e));
  }
  const UnaryMap m = UnaryMap::analyze(a, t);
  if (!m.is_increasing)
    throw PreconditionError("delta map is not increasing");
  return t;
}

Statement statement_from_flags(const std::string& stmt,
                               const std::string& named,
                               const std::string& arrow) {
  if (stmt.empty() == named.empty())
    throw Error("exactly one of --stmt or --named is required");
  if (!stmt.empty()) return parse_statement(stmt);
  return named_statement(named, arrow_kind_from_string(arrow));
}

std::string join_values(const NamedValues& vals) {
  std::string s;
  for (const auto& [k, v] : vals) {
    if (!s.empty()) s += ", ";
    s += k + "=" + v;
  }
  return s;
}

void print_report(const CheckReport& r) {
  std::cout << (r.pass ? "pass" : "fail") << ": " << r.rule << "\n";
  if (!r.witness.empty())
    std::cout << "  witness: " << join_values(r.witness) << "\n";
  for (const auto& [k, v] : r.trace)
    std::cout << "  " << k << " = " << v << "\n";
  if (!r.note.empty()) std::cout << "  note: " << r.note << "\n";
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int report_valid(const FleAlgebra& a, bool json) {
  if (json) {
    Json j;
    j["valid"] = true;
    j["algebra"] = algebra_to_json(a);
    emit(j);
  } else {
    std::cout << "valid: " << a.size() << " elements, unit "
              << a.label(a.unit()) << ", zero " << a.label(a.zero()) << "\n";
  }
  return kExitPass;
}

int run_validate(const std::string& algebra, const std::string& fix,
                 bool json) {
  if (algebra.empty() || !fix.empty()) {
    // Fixtures and the integer models are valid by construction; an unknown
    // name or a missing flag is a usage error and throws past us.
    const Target t = load_target(algebra, fix);
    if (t.a) return report_valid(*t.a, json);
    if (json) {
      Json j;
      j["valid"] = true;
      j["model"] = "integers";
      emit(j);
    } else {
      std::cout << "integer model " << t.name
                << ": residuation laws hold by construction\n";
    }
    return kExitPass;
  }
  // Unreadable files and malformed tables are usage errors (they throw); a
  // well-formed table that breaks an axiom is a finding, reported with the
  // failing rule and exit code 1.
  std::ifstream in(algebra);
  if (!in) throw Error("cannot open '" + algebra + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw MalformedTableError("bad JSON in '" + algebra + "': " + e.what());
  }
  BuildResult r = build_from_json(j);
  if (r.algebra) return report_valid(*r.algebra, json);
  if (json) {
    Json out;
    out["valid"] = false;
    out["report"] = report_to_json(r.report);
    emit(out);
  } else {
    std::cout << "invalid\n";
    print_report(r.report);
  }
  return kExitFail;
}

int run_classify(const std::string& algebra, const std::string& fix,
                 bool json) {
  const Target t = load_target(algebra, fix);
  if (!t.a) throw Error("classification needs a finite algebra");
  const Classification c = classify(*t.a);
  if (json) {
    emit(classification_to_json(c));
    return kExitPass;
  }
  for (const std::string& name : classification_flag_names()) {
    const Flag* f = classification_flag(c, name);
    std::cout << std::left << std::setw(23) << name
              << (f->value ? "yes" : "no");
    if (!f->witness.empty())
      std::cout << "   [" << join_values(f->witness) << "]";
    std::cout << "\n";
  }
  return kExitPass;
}

int run_check(const std::string& algebra, const std::string& fix,
              const std::string& stmt, const std::string& named,
              const std::string& arrow, const std::string& delta, bool json) {
  const Target t = load_target(algebra, fix);
  const Statement s = statement_from_flags(stmt, named, arrow);
  if (t.a) {
    Bindings b;
    std::vector<Elem> dt, bt;
    if (uses_delta(s)) {
      dt = delta_table_for(*t.a, delta);
      b.delta = &dt;
    }
    if (uses_bdiamond(s)) {
      // The diamond connective is bound to double negation; supplying other
      // tables is the business of the expansion survey, not the checker.
      bt = t.a->dm_table();
      b.bdiam = &bt;
    }
    const CheckReport r = check(*t.a, s, b);
    if (json)
      emit(report_to_json(r));
    else
      print_report(r);
    return r.pass ? kExitPass : kExitFail;
  }
  if (uses_delta(s) || uses_bdiamond(s))
    throw Error("the integer models support undecorated connectives only");
  const ZVal window = 10;
  const std::optional<ZAssignment> w = t.z->search_witness(s, window);
  CheckReport r;
  r.rule = to_string(s);
  r.pass = !w.has_value();
  r.note = "window check over [-" + std::to_string(window) + ", " +
           std::to_string(window) + "] on the integer model; no finite "
           "certificate";
  if (w)
    for (const auto& [k, v] : *w) r.witness.emplace_back(k, std::to_string(v));
  if (json)
    emit(report_to_json(r));
  else
    print_report(r);
  return r.pass ? kExitPass : kExitFail;
}

Json enumeration_json(const EnumerationReport& rep) {
  Json by_size = Json::object();
  for (const auto& [n, counts] : rep.by_size) {
    Json row;
    row["lattices"] = counts.lattices;
    row["crls"] = counts.crls;
    row["fle"] = counts.fle;
    by_size[std::to_string(n)] = std::move(row);
  }
  Json j;
  j["by_size"] = std::move(by_size);
  j["total"] = rep.corpus.entries.size();
  return j;
}

EnumerationReport corpus_or_enumerate(int max_size, int threads, int size_cap,
                                      const std::string& dir, bool resume) {
  if (!dir.empty() && resume && corpus_matches(dir, max_size))
    return load_corpus(dir);
  EnumerationReport rep = enumerate_fle_up_to(max_size, threads, size_cap);
  if (!dir.empty()) save_corpus(rep, dir);
  return rep;
}

int run_enumerate(int max_size, int threads, int size_cap,
                  const std::string& dir, bool resume, bool json) {
  const EnumerationReport rep =
      corpus_or_enumerate(max_size, threads, size_cap, dir, resume);
  if (json) {
    emit(enumeration_json(rep));
    return kExitPass;
  }
  for (const auto& [n, counts] : rep.by_size)
    std::cout << "size " << n << ": " << counts.lattices << " lattices, "
              << counts.crls << " residuated lattices, " << counts.fle
              << " pointed algebras\n";
  std::cout << "total: " << rep.corpus.entries.size() << " algebras\n";
  return kExitPass;
}

SuiteConfig suite_config_from(int threads, std::uint64_t seed,
                              const std::string& interval) {
  SuiteConfig cfg;
  cfg.threads = threads;
  cfg.seed = seed;
  if (interval.empty()) return cfg;
  if (interval == "endpoints") {
    cfg.samples = 0;
    cfg.exhaustive_interval_max_size = 0;
    cfg.interval_cap = 2;
    return cfg;
  }
  const std::string sampled = "sampled:";
  const std::string exhaustive = "exhaustive:";
  try {
    if (interval.rfind(sampled, 0) == 0) {
      cfg.samples = std::stoi(interval.substr(sampled.size()));
      cfg.exhaustive_interval_max_size = 0;
      return cfg;
    }
    if (interval.rfind(exhaustive, 0) == 0) {
      cfg.interval_cap = std::stoull(interval.substr(exhaustive.size()));
      cfg.exhaustive_interval_max_size = 64;
      return cfg;
    }
  } catch (const std::exception&) {
    throw Error("--interval bound is not a number");
  }
  throw Error("--interval expects endpoints, sampled:<n> or exhaustive:<cap>");
}

int run_verify(int max_size, int threads, std::uint64_t seed,
               const std::string& interval, int size_cap,
               const std::string& dir, bool resume, bool size_six,
               const std::string& explain, bool json) {
  if (!explain.empty()) {
    std::cout << explain_check(explain) << "\n";
    return kExitPass;
  }
  if (size_six && max_size < 6) max_size = 6;
  EnumerationReport base =
      corpus_or_enumerate(max_size, threads, size_cap, dir, resume);
  const Corpus corpus = with_stock_fixtures(std::move(base.corpus));
  const SuiteConfig cfg = suite_config_from(threads, seed, interval);
  const SuiteReport rep = run_suite(corpus, cfg);
  if (json) {
    emit(suite_report_to_json(rep));
  } else {
    for (const CheckRow& row : rep.rows) {
      std::cout << std::left << std::setw(5) << row.id
                << (row.failures ? "FAIL" : "pass") << "  scanned "
                << std::setw(5) << row.scanned << row.title << "\n";
      for (const std::string& w : row.witnesses)
        std::cout << "       witness " << w << "\n";
      for (const std::string& n : row.notes)
        std::cout << "       note " << n << "\n";
    }
    std::cout << (rep.pass ? "pass" : "FAIL") << ": " << rep.rows.size()
              << " checks over " << rep.algebras << " algebras in "
              << std::fixed << std::setprecision(1) << rep.seconds << "s\n";
  }
  return rep.pass ? kExitPass : kExitFail;
}

int run_search(const std::string& stmt, const std::string& named,
               const std::string& arrow, const std::string& delta,
               int max_size, int threads, int size_cap,
               const std::vector<std::string>& filters, bool json) {
  const Statement s = statement_from_flags(stmt, named, arrow);
  if (delta != "dm")
    throw Error("search decorates with dm only; fixed tables cannot span "
                "carriers of different sizes");
  const EnumerationReport rep =
      enumerate_fle_up_to(max_size, threads, size_cap);
  std::uint64_t scanned = 0;
  for (const CorpusEntry& e : rep.corpus.entries) {
    if (!filters.empty()) {
      const Classification c = classify(e.algebra);
      bool keep = true;
      for (const std::string& req : filters) {
        const bool negated = !req.empty() && req[0] == '!';
        const std::string name = negated ? req.substr(1) : req;
        const Flag* f = classification_flag(c, name);
        if (!f) throw UnknownNameError("unknown classification flag '" +
                                       name + "'");
        if (f->value == negated) {
          keep = false;
          break;
        }
      }
      if (!keep) continue;
    }
    ++scanned;
    Bindings b;
    std::vector<Elem> dt, bt;
    if (uses_delta(s)) {
      dt = e.algebra.dm_table();
      b.delta = &dt;
    }
    if (uses_bdiamond(s)) {
      bt = e.algebra.dm_table();
      b.bdiam = &bt;
    }
    const CheckReport r = check(e.algebra, s, b);
    if (!r.pass) {
      if (json) {
        Json j;
        j["found"] = true;
        j["hash"] = e.hash;
        j["size"] = e.algebra.size();
        j["scanned"] = scanned;
        j["report"] = report_to_json(r);
        j["algebra"] = algebra_to_json(e.algebra);
        emit(j);
      } else {
        std::cout << "countermodel " << e.hash << " (n=" << e.algebra.size()
                  << ") after " << scanned << " candidates\n";
        print_report(r);
      }
      return kExitFail;
    }
  }
  if (json) {
    Json j;
    j["found"] = false;
    j["scanned"] = scanned;
    j["max_size"] = max_size;
    emit(j);
  } else {
    std::cout << "no countermodel among " << scanned
              << " candidate algebras up to size " << max_size << "\n";
  }
  return kExitPass;
}

int run_fixtures(const std::string& fix, bool json) {
  if (fix.empty()) {
    if (json) {
      Json arr = Json::array();
      for (const FixtureInfo& info : fixture_list()) {
        Json j;
        j["name"] = info.name;
        j["provenance"] = info.provenance;
        arr.push_back(std::move(j));
      }
      emit(arr);
    } else {
      for (const FixtureInfo& info : fixture_list())
        std::cout << std::left << std::setw(18) << info.name
                  << info.provenance << "\n";
    }
    return kExitPass;
  }
  const CheckReport r = verify_fixture(fix);
  if (json)
    emit(report_to_json(r));
  else
    print_report(r);
  return r.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model workbench for pointed commutative residuated "
               "lattices and their connexive arrows"};
  app.require_subcommand(1);

  std::string algebra, fix, stmt, named, explain, corpus_dir;
  std::string arrow = "cm", delta = "dm", interval;
  int max_size = 4, threads = 1, size_cap = kDefaultSizeCap;
  std::uint64_t seed = 0;
  bool json = false, resume = false, size_six = false;
  std::vector<std::string> filters;

  CLI::App* validate = app.add_subcommand(
      "validate", "check an algebra file or stock fixture against the axioms");
  validate->add_option("--algebra", algebra, "path to an algebra JSON file");
  validate->add_option("--fixture", fix, "stock fixture name");
  validate->add_flag("--json", json, "machine output");

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "report the property flags of one algebra");
  classify_cmd->add_option("--algebra", algebra, "path to an algebra JSON file");
  classify_cmd->add_option("--fixture", fix, "stock fixture name");
  classify_cmd->add_flag("--json", json, "machine output");

  CLI::App* check_cmd = app.add_subcommand(
      "check", "decide one statement over one algebra (exit 1 on a witness)");
  check_cmd->add_option("--algebra", algebra, "path to an algebra JSON file");
  check_cmd->add_option("--fixture", fix, "stock fixture name");
  check_cmd->add_option("--stmt", stmt, "statement text");
  check_cmd->add_option("--named", named, "named statement (AT, BT, PC, ...)");
  check_cmd->add_option("--arrow", arrow,
                        "arrow for named statements: res|cm|cp|cmd|cpd");
  check_cmd->add_option("--delta", delta, "decoration: dm or table:<path>");
  check_cmd->add_flag("--json", json, "machine output");

  CLI::App* enum_cmd = app.add_subcommand(
      "enumerate", "count and persist all algebras up to a size");
  enum_cmd->add_option("--max-size", max_size, "largest carrier size")
      ->check(CLI::Range(1, 16));
  enum_cmd->add_option("--threads", threads, "worker threads")
      ->check(CLI::Range(1, 256));
  enum_cmd->add_option("--size-cap", size_cap, "hard enumeration guard");
  enum_cmd->add_option("--corpus", corpus_dir, "corpus directory");
  enum_cmd->add_flag("--resume", resume, "reuse a matching persisted corpus");
  enum_cmd->add_flag("--json", json, "machine output");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run every registered check over the corpus plus fixtures");
  verify_cmd->add_option("--max-size", max_size, "largest enumerated size")
      ->default_val(5)
      ->check(CLI::Range(1, 16));
  verify_cmd->add_option("--threads", threads, "worker threads")
      ->check(CLI::Range(1, 256));
  verify_cmd->add_option("--seed", seed, "sampling seed");
  verify_cmd->add_option("--interval", interval,
                         "member coverage: endpoints, sampled:<n> or "
                         "exhaustive:<cap>");
  verify_cmd->add_option("--size-cap", size_cap, "hard enumeration guard");
  verify_cmd->add_option("--corpus", corpus_dir, "corpus directory");
  verify_cmd->add_flag("--resume", resume, "reuse a matching persisted corpus");
  verify_cmd->add_flag("--size-six", size_six,
                       "extend enumeration to six-element carriers");
  verify_cmd->add_option("--explain", explain,
                         "print what the given check id verifies and exit");
  verify_cmd->add_flag("--json", json, "machine output");

  CLI::App* search_cmd = app.add_subcommand(
      "search", "find the smallest enumerated countermodel of a statement");
  search_cmd->add_option("--stmt", stmt, "statement text");
  search_cmd->add_option("--named", named, "named statement");
  search_cmd->add_option("--arrow", arrow,
                         "arrow for named statements: res|cm|cp|cmd|cpd");
  search_cmd->add_option("--delta", delta, "decoration: dm only for search");
  search_cmd->add_option("--max-size", max_size, "largest carrier size")
      ->check(CLI::Range(1, 16));
  search_cmd->add_option("--threads", threads, "worker threads")
      ->check(CLI::Range(1, 256));
  search_cmd->add_option("--size-cap", size_cap, "hard enumeration guard");
  search_cmd->add_option("--require", filters,
                         "classification flag the countermodel must satisfy; "
                         "prefix ! to negate; repeatable");
  search_cmd->add_flag("--json", json, "machine output");

  CLI::App* fixtures_cmd = app.add_subcommand(
      "fixtures", "list stock fixtures or replay one fixture's expectations");
  fixtures_cmd->add_option("--fixture", fix, "fixture to replay");
  fixtures_cmd->add_flag("--json", json, "machine output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate) return run_validate(algebra, fix, json);
    if (*classify_cmd) return run_classify(algebra, fix, json);
    if (*check_cmd)
      return run_check(algebra, fix, stmt, named, arrow, delta, json);
    if (*enum_cmd)
      return run_enumerate(max_size, threads, size_cap, corpus_dir, resume,
                           json);
    if (*verify_cmd)
      return run_verify(max_size, threads, seed, interval, size_cap,
                        corpus_dir, resume, size_six, explain, json);
    if (*search_cmd)
      return run_search(stmt, named, arrow, delta, max_size, threads,
                        size_cap, filters, json);
    if (*fixtures_cmd) return run_fixtures(fix, json);
  } catch (const ParseError& e) {
    std::cerr << "parse error at byte " << e.pos << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::parse_error& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
