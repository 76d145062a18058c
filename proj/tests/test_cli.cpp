#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "stx/cli.hpp"
#include "stx/stx_format.hpp"

using namespace stx;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string src_path(const std::string& rel) { return std::string(STX_SOURCE_DIR) + "/" + rel; }

std::string temp_write(const std::string& name, const std::string& text) {
  std::string path = "/tmp/" + name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check: verdict lines and exit codes") {
  for (const std::string& name : builtin_names()) {
    CAPTURE(name);
    CliResult r = run({"check", "builtin:" + name});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "Con1"));
    CHECK(contains(r.out, "Con7"));
    CHECK(contains(r.out, "result: PASS"));
    CHECK(r.err.empty());
  }

  // one ternary sign flipped: collapse laws break, exit reports the failure
  std::string mutated = temp_write(
      "cli_mut3.stx",
      "scalar QQ\ngen x even\ngen theta odd\n"
      "delta2\n  x -> x # x + theta # theta\n  theta -> x # theta + theta # x\n"
      "delta3\n  x -> x # 1 # 1 + 1 # x # 1 + 1 # 1 # x\n"
      "  theta -> theta # 1 # 1 - 1 # theta # 1 + 1 # 1 # theta\n"
      "counit\n  x -> 1\n  theta -> 0\ncozero\n  x -> 0\n  theta -> 0\n");
  CliResult bad = run({"check", mutated});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "Con2"));
  CHECK(contains(bad.out, "FAIL"));
  CHECK(contains(bad.out, "witness: x"));
  CHECK(contains(bad.out, "x # 1 + 2 # x"));

  // the one binary sign flip that stays a valid structure passes
  std::string survivor = temp_write(
      "cli_mut2.stx",
      "scalar QQ\ngen x even\ngen theta odd\n"
      "delta2\n  x -> x # x - theta # theta\n  theta -> x # theta + theta # x\n"
      "delta3\n  x -> x # 1 # 1 - 1 # x # 1 + 1 # 1 # x\n"
      "  theta -> theta # 1 # 1 - 1 # theta # 1 + 1 # 1 # theta\n"
      "counit\n  x -> 1\n  theta -> 0\ncozero\n  x -> 0\n  theta -> 0\n");
  CHECK(run({"check", survivor}).code == 0);

  CHECK(run({"check", "builtin:poly_theta", "--sigma13", "plain"}).code == 0);
}

TEST_CASE("shipped twin files parse equal to the builtins") {
  for (const std::string& name : builtin_names()) {
    CAPTURE(name);
    std::string path = src_path("presentations/" + name + ".stx");
    CotrussPresentation twin = parse_stx_file(path);
    CHECK(presentations_equal(twin, builtin_presentation(name, Field::rationals())));
    CHECK(run({"check", path}).code == 0);
    // round-trip on the shipped file
    CHECK(presentations_equal(parse_stx(render_stx(twin)), twin));
  }
}

TEST_CASE("points: modes, skips, and input errors") {
  CliResult ex = run({"points", "builtin:poly_theta", "--field", "fp:2", "--grassmann", "1",
                      "--exhaustive"});
  CHECK(ex.code == 0);
  CHECK(contains(ex.out, "mode exhaustive"));
  CHECK(contains(ex.out, "absorber-law"));
  CHECK(contains(ex.out, "transposition"));

  // no cozero: the absorber row is skipped, not failed
  CliResult sk = run({"points", "builtin:laurent_theta", "--field", "fp:3", "--exhaustive"});
  CHECK(sk.code == 0);
  CHECK(contains(sk.out, "skip"));
  CHECK(contains(sk.out, "no cozero"));

  // rationals default to sampling; requesting the full sweep is an input error
  CliResult qq = run({"points", "builtin:poly_theta", "--grassmann", "1", "--samples", "10",
                      "--seed", "4"});
  CHECK(qq.code == 0);
  CHECK(contains(qq.out, "mode sampled (seed 4)"));
  CHECK(contains(qq.out, "10 tuples (sampled)"));
  CHECK(run({"points", "builtin:poly_theta", "--exhaustive"}).code == 2);

  // sampling over a finite field is allowed
  CliResult fps = run({"points", "builtin:poly_theta", "--field", "fp:3", "--samples", "25"});
  CHECK(fps.code == 0);
  CHECK(contains(fps.out, "mode sampled"));

  CliResult tight = run({"points", "builtin:poly_theta", "--field", "fp:3", "--grassmann", "2",
                         "--exhaustive", "--budget", "100"});
  CHECK(tight.code == 2);
  CHECK(contains(tight.err, "budget"));
}

TEST_CASE("ybe: braid verdicts, refusals, and the q flag") {
  CliResult flip = run({"ybe", "builtin:poly_theta", "--map", "flip", "--field", "fp:2",
                        "--grassmann", "1", "--exhaustive"});
  CHECK(flip.code == 0);
  for (const char* eq : {"braid", "YB1", "YB2", "YB3", "agreement"}) CHECK(contains(flip.out, eq));
  CHECK(contains(flip.out, "left-nondegenerate"));
  CHECK(contains(flip.out, "result: PASS"));

  // the heap-action family fails the braid relation on scalar points mod 3
  CliResult la = run({"ybe", "builtin:poly_theta", "--map", "left-action", "--field", "fp:3",
                      "--exhaustive"});
  CHECK(la.code == 1);
  CHECK(contains(la.out, "4 fail"));
  CHECK(contains(la.out, "triple #18"));
  CHECK(contains(la.out, "result: FAIL"));

  CliResult refused = run({"ybe", "builtin:poly_theta", "--map", "odd-scaling", "--q", "2",
                           "--grassmann", "2", "--samples", "5"});
  CHECK(refused.code == 1);
  CHECK(contains(refused.out, "map refused (NotMultiplicative)"));

  CliResult frac = run({"ybe", "builtin:laurent_theta", "--map", "odd-scaling", "--q", "1/2",
                        "--grassmann", "2", "--samples", "10"});
  CHECK(frac.code == 0);
  CHECK(contains(frac.out, "non-degeneracy not decided"));

  CHECK(run({"ybe", "builtin:poly_theta", "--map", "odd-scaling", "--field", "fp:5"}).code == 2);
  CHECK(run({"ybe", "builtin:poly_theta", "--map", "bogus", "--field", "fp:3"}).code == 2);
  CHECK(run({"ybe", "builtin:poly_theta", "--map", "flip", "--exhaustive"}).code == 2);
}

TEST_CASE("ybe: machine report shape") {
  CliResult r = run({"ybe", "builtin:poly_theta", "--map", "superflip", "--field", "fp:2",
                     "--grassmann", "1", "--exhaustive", "--json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "ybe");
  CHECK(j["all_pass"] == true);
  CHECK(j["options"]["map"] == "superflip");
  CHECK(j["options"]["mode"] == "exhaustive");
  CHECK(j["input"]["source"] == "builtin:poly_theta");
  CHECK(j["yang_baxter"]["checks"].size() == 5);
  CHECK(j["yang_baxter"]["point_count"] == 4);
  CHECK(j["nondegeneracy"]["nondegenerate"] == true);
  CHECK(!contains(r.out, "elapsed"));  // nothing time-dependent in machine output
}

TEST_CASE("json reports are byte-identical across runs") {
  std::vector<std::string> argv = {"ybe",  "builtin:laurent_theta", "--map",    "inverse-map",
                                   "--grassmann", "2",              "--samples", "8",
                                   "--seed", "11", "--json"};
  CliResult a = run(argv);
  CliResult b = run(argv);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  std::vector<std::string> pargv = {"points", "builtin:poly_theta", "--grassmann", "1",
                                    "--samples", "7", "--seed", "5", "--json"};
  CHECK(run(pargv).out == run(pargv).out);
}

TEST_CASE("reduce: writes the even part") {
  std::string out_path = "/tmp/cli_reduced.stx";
  CliResult r = run({"reduce", "builtin:poly_theta", "-o", out_path});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "2 generators -> 1"));
  CotrussPresentation R = parse_stx_file(out_path);
  CHECK(presentations_equal(R, reduce(builtin_presentation("poly_theta", Field::rationals()))));
  std::remove(out_path.c_str());

  // without -o the rendering goes to the report itself
  CliResult inline_out = run({"reduce", "builtin:laurent_theta"});
  CHECK(inline_out.code == 0);
  CHECK(contains(inline_out.out, "gen x even invertible xinv"));
  CHECK(!contains(inline_out.out, "gen theta"));
}

TEST_CASE("morphism: intertwining verdicts") {
  std::string parity = temp_write("cli_parity.stx", "map\n  x -> x\n  theta -> -theta\n");
  CliResult good = run({"morphism", parity, "builtin:poly_theta", "builtin:poly_theta"});
  CHECK(good.code == 0);
  for (const char* row : {"delta2-intertwine", "delta3-intertwine", "counit-compat",
                          "cozero-compat"})
    CHECK(contains(good.out, row));

  // collapsing everything to the unit respects the counit but not the cozero
  std::string collapse = temp_write("cli_collapse.stx", "map\n  x -> 1\n  theta -> 0\n");
  CliResult bad = run({"morphism", collapse, "builtin:poly_theta", "builtin:poly_theta"});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "cozero-compat"));
  CHECK(contains(bad.out, "FAIL"));

  std::string fp_pres = temp_write("cli_fp3.stx",
                                   "scalar FP 3\ngen x even\ndelta2\n  x -> x # x\ndelta3\n"
                                   "  x -> x # 1 # 1 - 1 # x # 1 + 1 # 1 # x\n");
  CliResult mixed = run({"morphism", parity, fp_pres, "builtin:poly_theta"});
  CHECK(mixed.code == 2);
  CHECK(contains(mixed.err, "different scalar fields"));
}

TEST_CASE("flag misuse and bad inputs exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "/tmp/no_such_file.stx"}).code == 2);
  CHECK(run({"check", "builtin:nope"}).code == 2);
  CHECK(run({"points", "builtin:poly_theta", "--field", "fp:9"}).code == 2);
  CHECK(run({"points", "builtin:poly_theta", "--field", "zz"}).code == 2);
  CHECK(run({"points", "builtin:poly_theta", "--exhaustive", "--samples", "5"}).code == 2);
  CHECK(run({"check", "builtin:poly_theta", "--sigma13", "weird"}).code == 2);
  CHECK(run({"ybe", "builtin:poly_theta", "--map", "odd-scaling", "--q", "x", "--field",
             "fp:3"}).code == 2);

  CliResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "check"));
  CHECK(contains(help.out, "ybe"));
}

}  // TEST_SUITE
