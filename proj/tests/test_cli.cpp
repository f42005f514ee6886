#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "fleck/fixtures.hpp"
#include "fleck/json_io.hpp"

using namespace fleck;

namespace {

struct CliResult {
  int code;
  std::string out;  // stdout and stderr, interleaved
};

// The contract under test is the process boundary: argv in, exit code and
// bytes out. Everything goes through a real fork/exec, not the library.
CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(FLECK_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return CliResult{WEXITSTATUS(status), std::move(out)};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "fleck_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("validate resolves fixtures and rejects bad invocations") {
  CliResult r = run_cli("validate --fixture boolean2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "valid: 2 elements"));

  r = run_cli("validate --fixture 'z(3)'");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "integer model"));

  r = run_cli("validate --fixture nope");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "unknown fixture"));

  r = run_cli("validate");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "one of --algebra or --fixture"));

  r = run_cli("validate --algebra a.json --fixture boolean2");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "mutually exclusive"));
}

TEST_CASE("validate separates axiom findings from unreadable input") {
  // A sound file passes; save/load is the same codec the CLI uses.
  const auto good = scratch_dir() / "good.json";
  save_algebra(*fixture("boolean2").algebra, good.string());
  CliResult r = run_cli("validate --algebra " + good.string());
  CHECK(r.code == 0);
  CHECK(contains(r.out, "valid: 2 elements"));

  // Well-formed tables that break an axiom are a finding, exit 1.
  const std::string bad_prod = write_file("noncomm.json", R"({
    "size": 2,
    "leq": [[1, 1], [0, 1]],
    "prod": [[0, 1], [0, 1]],
    "unit": 1,
    "zero": 0
  })");
  r = run_cli("validate --algebra " + bad_prod);
  CHECK(r.code == 1);
  CHECK(contains(r.out, "invalid"));
  CHECK(contains(r.out, "commutativity"));

  // Shape problems never reach the axiom checker: exit 2.
  const std::string no_prod = write_file(
      "noprod.json", R"({"size": 2, "leq": [[1, 1], [0, 1]]})");
  r = run_cli("validate --algebra " + no_prod);
  CHECK(r.code == 2);

  const std::string not_json = write_file("garbage.json", "not json at all");
  r = run_cli("validate --algebra " + not_json);
  CHECK(r.code == 2);
  CHECK(contains(r.out, "bad JSON"));

  r = run_cli("validate --algebra " + (scratch_dir() / "absent.json").string());
  CHECK(r.code == 2);
  CHECK(contains(r.out, "cannot open"));
}

TEST_CASE("check reports the least witness for a failing statement") {
  // Named and spelled-out forms of the same statement agree byte for byte.
  const CliResult named =
      run_cli("check --fixture fig1_pc_not_spc --named SPC");
  CHECK(named.code == 1);
  CHECK(contains(named.out, "fail: ~x /\\ ~(x -> y) <= 0"));
  CHECK(contains(named.out, "witness: x=0, y=bot"));
  CHECK(contains(named.out, "~x /\\ ~(x -> y) = 1"));

  const CliResult spelled = run_cli(
      "check --fixture fig1_pc_not_spc --stmt '~x /\\ ~(x -> y) <= 0'");
  CHECK(spelled.code == 1);
  CHECK(spelled.out == named.out);

  const CliResult pass = run_cli("check --fixture fig1_pc_not_spc --named PC");
  CHECK(pass.code == 0);
  CHECK(contains(pass.out, "pass:"));

  // The machine form carries the same witness.
  const CliResult js =
      run_cli("check --fixture fig1_pc_not_spc --named SPC --json");
  CHECK(js.code == 1);
  const Json j = Json::parse(js.out);
  CHECK(j.at("pass") == false);
  REQUIRE(j.at("witness").size() == 2);
  CHECK(j.at("witness")[0].at("name") == "x");
  CHECK(j.at("witness")[0].at("value") == "0");
  CHECK(j.at("witness")[1].at("value") == "bot");
}

TEST_CASE("check covers the integer models through a finite window") {
  CliResult r = run_cli("check --fixture 'z(0)' --named P2 --arrow cp");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "pass: dm(x cp y) = ~(x cp ~y)"));
  CHECK(contains(r.out,
                 "window check over [-10, 10] on the integer model; "
                 "no finite certificate"));

  r = run_cli("check --fixture 'z(5)' --named P2 --arrow cp");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "witness: x=-10, y=-10"));

  // Decorated connectives need a table over a finite carrier.
  r = run_cli("check --fixture 'z(2)' --named BT --arrow cmd");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "undecorated connectives only"));
}

TEST_CASE("delta decorations load from dm or a table file") {
  CliResult r =
      run_cli("check --fixture delta_four --named BT --arrow cpd --delta dm");
  CHECK(r.code == 0);

  // An increasing map other than double negation can break Boethius.
  const std::string other = write_file("delta_other.json", "[3, 3, 2, 3]");
  r = run_cli("check --fixture delta_four --named BT --arrow cpd "
              "--delta table:" + other);
  CHECK(r.code == 1);
  CHECK(contains(r.out, "witness: x=a, y=a"));

  const std::string decreasing = write_file("delta_dec.json", "[1, 0, 2, 3]");
  r = run_cli("check --fixture delta_four --named BT --arrow cpd "
              "--delta table:" + decreasing);
  CHECK(r.code == 2);
  CHECK(contains(r.out, "not increasing"));

  const std::string short_tab = write_file("delta_short.json", "[0, 1]");
  r = run_cli("check --fixture delta_four --named BT --arrow cpd "
              "--delta table:" + short_tab);
  CHECK(r.code == 2);

  r = run_cli("check --fixture delta_four --named BT --arrow cpd "
              "--delta table:" +
              (scratch_dir() / "absent_delta.json").string());
  CHECK(r.code == 2);
  CHECK(contains(r.out, "cannot open"));

  r = run_cli("check --fixture delta_four --named BT --arrow cpd "
              "--delta whatever");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "dm or table:"));
}

TEST_CASE("usage mistakes exit with code two") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("nosuchcmd").code == 2);
  CHECK(run_cli("check --fixture boolean2").code == 2);
  CHECK(run_cli("check --fixture boolean2 --stmt 'x = x' --named AT").code ==
        2);

  CliResult r = run_cli("check --fixture boolean2 --named NOPE");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "unknown statement name 'NOPE'"));

  r = run_cli("check --fixture boolean2 --named AT --arrow zz");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "unknown arrow kind 'zz'"));

  r = run_cli("check --fixture boolean2 --stmt 'x <= '");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "parse error at byte 5"));

  r = run_cli("classify --fixture 'z(3)'");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "needs a finite algebra"));

  r = run_cli("verify --explain C99");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "unknown check id"));

  r = run_cli("verify --interval bogus --max-size 1");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "endpoints, sampled:<n> or exhaustive:<cap>"));
}

TEST_CASE("classify prints every flag in both styles") {
  const CliResult text = run_cli("classify --fixture boolean2");
  CHECK(text.code == 0);
  CHECK(contains(text.out, "integral"));
  CHECK(contains(text.out, "spc"));
  // zero_greatest fails on the two-element Boolean algebra; the refuting
  // element rides along in brackets.
  CHECK(contains(text.out, "[x=1]"));

  const CliResult js = run_cli("classify --fixture delta_four --json");
  CHECK(js.code == 0);
  const Json j = Json::parse(js.out);
  CHECK(j.at("zero_greatest") == true);
  CHECK(j.at("integral") == false);
  CHECK(j.at("spc") == true);
  CHECK(j.at("boolean") == false);
  CHECK(j.at("boolean_witness")[0].at("value") == "a");
}

TEST_CASE("enumerate counts, persists, and resumes a corpus") {
  const CliResult js = run_cli("enumerate --max-size 3 --json");
  CHECK(js.code == 0);
  const Json j = Json::parse(js.out);
  CHECK(j.at("total") == 12);
  CHECK(j.at("by_size").at("3").at("lattices") == 1);
  CHECK(j.at("by_size").at("3").at("crls") == 3);
  CHECK(j.at("by_size").at("3").at("fle") == 9);

  const auto dir = scratch_dir() / "corpus3";
  std::filesystem::remove_all(dir);
  const CliResult first =
      run_cli("enumerate --max-size 3 --json --corpus " + dir.string());
  CHECK(first.code == 0);
  // One file per algebra plus the index.
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e :
       std::filesystem::directory_iterator(dir))
    ++files;
  CHECK(files == 13);

  const CliResult again = run_cli("enumerate --max-size 3 --json --resume "
                                  "--corpus " + dir.string());
  CHECK(again.code == 0);
  CHECK(again.out == first.out);

  // The persisted corpus feeds the battery without re-enumerating.
  const CliResult ver = run_cli("verify --max-size 3 --resume --corpus " +
                                dir.string());
  CHECK(ver.code == 0);
  CHECK(contains(ver.out, "pass: 23 checks over 18 algebras"));
}

TEST_CASE("search finds the least countermodel subject to filters") {
  // Statement fails somewhere, but every countermodel below the bound is
  // filtered out: the pc requirement leaves only the shifted Heyting chain.
  const CliResult js = run_cli(
      "search --named SPC --max-size 4 --require pc --json");
  CHECK(js.code == 1);
  const Json j = Json::parse(js.out);
  CHECK(j.at("found") == true);
  CHECK(j.at("hash") == "5fbd49bc32d21d50");
  CHECK(j.at("size") == 3);
  CHECK(j.at("report").at("pass") == false);

  const CliResult text =
      run_cli("search --named SPC --max-size 4 --require pc");
  CHECK(text.code == 1);
  CHECK(contains(text.out, "countermodel 5fbd49bc32d21d50 (n=3)"));

  // With a bottom-positioned constant the strong form follows, so the same
  // search exhausts once the filter also demands zero_bounded.
  const CliResult none = run_cli(
      "search --named SPC --max-size 4 --require pc --require zero_bounded");
  CHECK(none.code == 0);
  CHECK(contains(none.out, "no countermodel among 14 candidate algebras"));

  const CliResult tauto = run_cli("search --stmt 'x = x' --max-size 3");
  CHECK(tauto.code == 0);
  CHECK(contains(tauto.out, "no countermodel among 12 candidate algebras"));

  CliResult r = run_cli("search --named SPC --max-size 3 --require bogus");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "unknown classification flag"));

  r = run_cli("search --named AT --max-size 3 --delta table:x");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "dm only"));

  // The scan order is canonical, so the countermodel never depends on the
  // thread count.
  const CliResult t4 = run_cli(
      "search --named SPC --max-size 4 --require pc --json --threads 4");
  CHECK(t4.out == js.out);
}

TEST_CASE("fixtures list and replay through the command line") {
  const CliResult list = run_cli("fixtures");
  CHECK(list.code == 0);
  CHECK(contains(list.out, "fig1_pc_not_spc"));
  CHECK(contains(list.out, "heyting_chain(k)"));

  const CliResult js = run_cli("fixtures --json");
  CHECK(js.code == 0);
  const Json j = Json::parse(js.out);
  REQUIRE(j.is_array());
  CHECK(j.size() >= 7);
  for (const Json& item : j) {
    CHECK(item.contains("name"));
    CHECK(!item.at("provenance").get<std::string>().empty());
  }

  const CliResult replay = run_cli("fixtures --fixture fig1_pc_not_spc");
  CHECK(replay.code == 0);
  CHECK(contains(replay.out, "pass: fixture:fig1_pc_not_spc"));
  CHECK(contains(replay.out, "flag:spc = ok"));

  const CliResult rj = run_cli("fixtures --fixture btstar_six --json");
  CHECK(rj.code == 0);
  CHECK(Json::parse(rj.out).at("pass") == true);

  CHECK(run_cli("fixtures --fixture nope").code == 2);
}

TEST_CASE("verify runs the battery and explains its checks") {
  const CliResult text = run_cli("verify --max-size 3");
  CHECK(text.code == 0);
  CHECK(contains(text.out, "T1"));
  CHECK(contains(text.out, "T23"));
  CHECK(contains(text.out, "pass: 23 checks over 18 algebras"));
  CHECK(!contains(text.out, "FAIL"));

  // Machine output is stable across worker counts, byte for byte.
  const CliResult one = run_cli("verify --max-size 4 --json --threads 1");
  CHECK(one.code == 0);
  const CliResult four = run_cli("verify --max-size 4 --json --threads 4");
  CHECK(four.out == one.out);
  const Json j = Json::parse(one.out);
  CHECK(j.at("pass") == true);
  CHECK(j.at("checks").size() == 23);

  // Interval policies are a flag away; verdicts stay green either way.
  const CliResult sampled =
      run_cli("verify --max-size 3 --interval sampled:11");
  CHECK(sampled.code == 0);
  const CliResult ends = run_cli("verify --max-size 3 --interval endpoints");
  CHECK(ends.code == 0);

  const CliResult why = run_cli("verify --explain T7");
  CHECK(why.code == 0);
  CHECK(contains(why.out, "T7"));
  CHECK(contains(why.out, "meet arrow"));
  CHECK(why.out.size() > 40);
}
