#include "stx/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "stx/report.hpp"
#include "stx/stx_format.hpp"

namespace stx {

namespace {

Field parse_field_arg(const std::string& s) {
  if (s == "qq" || s == "QQ") return Field::rationals();
  if (s.rfind("fp:", 0) != 0 && s.rfind("FP:", 0) != 0)
    throw InputError("malformed field: " + s + " (expected qq or fp:<prime>)");
  const std::string num = s.substr(3);
  size_t used = 0;
  long long p = 0;
  try {
    p = std::stoll(num, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (num.empty() || used != num.size() || p < 2)
    throw InputError("malformed field: " + s + " (expected qq or fp:<prime>)");
  return Field::prime(static_cast<std::uint64_t>(p));
}

Scalar parse_scalar_arg(const Field& f, const std::string& s) {
  auto parse_ll = [&](const std::string& part) {
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) throw InputError("malformed scalar: " + s);
    return v;
  };
  if (auto slash = s.find('/'); slash != std::string::npos)
    return Scalar::fraction(f, parse_ll(s.substr(0, slash)), parse_ll(s.substr(slash + 1)));
  return Scalar::of(f, parse_ll(s));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LoadedInput {
  PresPtr pres;
  std::string source;  // as given on the command line
  std::string digest;  // of the file bytes, or of the canonical rendering for builtins
};

LoadedInput load_presentation(const std::string& input, const std::optional<Field>& requested) {
  if (input.rfind("builtin:", 0) == 0) {
    Field f = requested.value_or(Field::rationals());
    CotrussPresentation P = builtin_presentation(input.substr(8), f);
    std::string bytes = render_stx(P);
    return {share(std::move(P)), input, fnv1a_hex(bytes)};
  }
  std::string bytes = slurp(input);
  CotrussPresentation P = parse_stx(bytes, std::filesystem::path(input).stem().string());
  if (requested && P.field != *requested)
    throw InputError("file " + input + " declares scalar " + P.field.to_string() +
                     " but --field asks for " + requested->to_string());
  return {share(std::move(P)), input, fnv1a_hex(bytes)};
}

// Report envelope: JSON carries nothing time-dependent; the human form ends
// with a PASS/FAIL line plus the elapsed wall-clock time.
class Emitter {
 public:
  Emitter(std::ostream& out, bool json, std::string command) :
      out_(out), json_(json), command_(std::move(command)) {}

  void add_input(const std::string& source, const std::string& digest) {
    inputs_.push_back({{"source", source}, {"digest", digest}});
  }
  void set_options(nlohmann::json options) { options_ = std::move(options); }
  void set_title(std::string title) { title_ = std::move(title); }

  int finish(bool pass, const nlohmann::json& payload, const std::string& human) {
    if (json_) {
      nlohmann::json env = {{"schema_version", kSchemaVersion},
                            {"tool_version", kToolVersion},
                            {"command", command_},
                            {"input", inputs_.size() == 1 ? inputs_.front() : inputs_},
                            {"options", options_},
                            {"all_pass", pass}};
      for (const auto& [k, v] : payload.items()) env[k] = v;
      out_ << env.dump(2) << '\n';
    } else {
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
      out_ << title_ << '\n';
      for (const auto& in : inputs_)
        out_ << "  input " << in["source"].get<std::string>() << "  (digest "
             << in["digest"].get<std::string>() << ")\n";
      out_ << human;
      out_ << "result: " << (pass ? "PASS" : "FAIL") << "  (" << std::fixed
           << std::setprecision(2) << secs << " s)\n";
    }
    return pass ? 0 : 1;
  }

 private:
  std::ostream& out_;
  bool json_;
  std::string command_;
  nlohmann::json inputs_ = nlohmann::json::array();
  nlohmann::json options_ = nlohmann::json::object();
  std::string title_;
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

struct Args {
  std::string input, field, map, q, output, phi, src, dst;
  std::string sigma13 = "graded";
  int grassmann = 0;
  bool exhaustive = false;
  bool json = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10'000'000;
};

std::optional<Field> requested_field(const Args& a) {
  if (a.field.empty()) return std::nullopt;
  return parse_field_arg(a.field);
}

int run_check(const Args& a, std::ostream& out) {
  Emitter em(out, a.json, "check");
  LoadedInput L = load_presentation(a.input, std::nullopt);
  em.add_input(L.source, L.digest);
  em.set_options({{"sigma13", a.sigma13}, {"seed", a.seed}});
  em.set_title("check " + L.source);

  CheckOptions opts;
  opts.sigma13_graded = a.sigma13 == "graded";
  opts.seed = a.seed;
  CheckReport rep = check_axioms(*L.pres, opts);
  nlohmann::json payload = {{"presentation", L.pres->name},
                            {"field", L.pres->field.to_string()},
                            {"axioms", to_json(rep)}};
  return em.finish(rep.all_pass(), payload, render_text(rep));
}

int run_points(const Args& a, std::ostream& out) {
  Emitter em(out, a.json, "points");
  LoadedInput L = load_presentation(a.input, requested_field(a));
  em.add_input(L.source, L.digest);

  const Field& f = L.pres->field;
  TestAlgebra A{f, a.grassmann};
  bool sampled = a.samples > 0 || (!a.exhaustive && !f.is_prime_field());
  std::uint64_t samples = a.samples > 0 ? a.samples : 100;

  em.set_options({{"field", f.to_string()},
                  {"grassmann", a.grassmann},
                  {"mode", sampled ? "sampled" : "exhaustive"},
                  {"samples", sampled ? samples : 0},
                  {"seed", a.seed},
                  {"budget", a.budget}});
  em.set_title("points " + L.source + " over " + A.to_string());

  TrussReport rep;
  if (sampled) {
    rep = check_truss_sampled(L.pres, A, samples, a.seed, a.budget);
  } else {
    SweepOptions opts;
    opts.budget = a.budget;
    opts.seed = a.seed;
    rep = check_truss_exhaustive(L.pres, A, opts);
  }
  return em.finish(rep.all_pass(), {{"truss", to_json(rep)}}, render_text(rep));
}

int run_ybe(const Args& a, std::ostream& out) {
  Emitter em(out, a.json, "ybe");
  LoadedInput L = load_presentation(a.input, requested_field(a));
  em.add_input(L.source, L.digest);

  const Field& f = L.pres->field;
  TestAlgebra A{f, a.grassmann};
  bool finite = f.is_prime_field();
  bool sampled = a.samples > 0 || !finite;
  std::uint64_t samples = a.samples > 0 ? a.samples : 100;

  em.set_options({{"map", a.map},
                  {"q", a.q},
                  {"field", f.to_string()},
                  {"grassmann", a.grassmann},
                  {"mode", sampled ? "sampled" : "exhaustive"},
                  {"samples", sampled ? samples : 0},
                  {"seed", a.seed},
                  {"budget", a.budget}});
  em.set_title("ybe " + L.source + " --map " + a.map + " over " + A.to_string());

  std::optional<Scalar> q;
  if (!a.q.empty()) q = parse_scalar_arg(f, a.q);
  if (!finite && a.exhaustive)
    throw InfiniteBaseError("exhaustive sweeps need a finite scalar field; use --samples over QQ");

  try {
    YBMap r = make_map(a.map, L.pres, A, q);

    SweepOptions opts;
    opts.budget = a.budget;
    opts.seed = a.seed;
    YBReport rep;
    nlohmann::json nd_json;
    std::string nd_text;
    if (finite) {
      if (a.samples > 0) {
        opts.sweep_cap = 0;  // sample even when the triple domain is small
        opts.sample_count = a.samples;
      }
      MapTables T = build_map_tables(r, a.budget);
      rep = check_braid(r, T, opts);
      YBReport comp = check_components(r, T, opts);
      for (const YBCheckItem& c : comp.checks) rep.checks.push_back(c);
      if (comp.mode == "sampled") rep.mode = comp.mode;
      NondegReport nd = check_nondegenerate(r, a.budget);
      nd_json = to_json(nd);
      nd_text = render_text(nd);
    } else {
      opts.sample_count = samples;
      rep = check_braid(r, opts);
      YBReport comp = check_components(r, opts);
      rep.point_evals += comp.point_evals;  // two separate sampled passes
      for (const YBCheckItem& c : comp.checks) rep.checks.push_back(c);
      nd_json = nullptr;
      nd_text = "  non-degeneracy not decided over an infinite point set\n";
    }
    nlohmann::json payload = {{"yang_baxter", to_json(rep)}, {"nondegeneracy", nd_json}};
    return em.finish(rep.all_pass(), payload, render_text(rep) + nd_text);
  } catch (const MapRefusedError& e) {
    nlohmann::json payload = {{"refused", {{"code", e.code}, {"reason", e.what()}}}};
    std::string human = "  map refused (" + e.code + "): " + e.what() + "\n";
    return em.finish(false, payload, human);
  }
}

int run_reduce(const Args& a, std::ostream& out) {
  Emitter em(out, a.json, "reduce");
  LoadedInput L = load_presentation(a.input, std::nullopt);
  em.add_input(L.source, L.digest);
  em.set_options({{"output", a.output}});
  em.set_title("reduce " + L.source);

  CotrussPresentation R = reduce(*L.pres);
  std::string text = render_stx(R);
  if (!a.output.empty()) {
    std::ofstream o(a.output, std::ios::binary);
    if (!o) throw InputError("cannot write file: " + a.output);
    o << text;
  }

  nlohmann::json payload = {{"reduce",
                             {{"presentation", L.pres->name},
                              {"generators_before", L.pres->gens->count()},
                              {"generators_after", R.gens->count()},
                              {"counit", R.counit.has_value()},
                              {"cozero", R.cozero.has_value()},
                              {"output", a.output},
                              {"digest", fnv1a_hex(text)}}}};
  std::ostringstream human;
  human << "  reduced " << L.pres->name << ": " << L.pres->gens->count() << " generators -> "
        << R.gens->count() << "\n";
  if (!a.output.empty())
    human << "  written to " << a.output << "\n";
  else
    human << text;
  return em.finish(true, payload, human.str());
}

int run_morphism(const Args& a, std::ostream& out) {
  Emitter em(out, a.json, "morphism");
  std::string phi_bytes = slurp(a.phi);
  LoadedInput LP = load_presentation(a.src, std::nullopt);
  LoadedInput LQ = load_presentation(a.dst, std::nullopt);
  em.add_input(a.phi, fnv1a_hex(phi_bytes));
  em.add_input(LP.source, LP.digest);
  em.add_input(LQ.source, LQ.digest);
  em.set_title("morphism " + a.phi + ": " + LP.source + " -> " + LQ.source);

  if (LP.pres->field != LQ.pres->field)
    throw InputError("presentations use different scalar fields: " + LP.pres->field.to_string() +
                     " vs " + LQ.pres->field.to_string());
  GenHom phi = parse_morphism(phi_bytes, LP.pres->gens, LQ.pres->gens, LP.pres->field);
  CheckReport rep = check_morphism(phi, *LP.pres, *LQ.pres);
  return em.finish(rep.all_pass(), {{"intertwining", to_json(rep)}}, render_text(rep));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact checks for supercommutative comultiplication presentations"};
  app.require_subcommand(1);
  Args a;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", a.json, "machine-readable report"); };
  auto add_pointset = [&](CLI::App* c) {
    c->add_option("--field", a.field, "scalar field: qq or fp:<prime> (files must match)");
    c->add_option("--grassmann", a.grassmann, "number of odd test dimensions")
        ->check(CLI::NonNegativeNumber);
    auto* ex = c->add_flag("--exhaustive", a.exhaustive, "sweep the whole point set");
    auto* sm = c->add_option("--samples", a.samples, "number of random point tuples");
    ex->excludes(sm);
    c->add_option("--seed", a.seed, "seed for sampled modes");
    c->add_option("--budget", a.budget, "point-evaluation cap");
  };

  CLI::App* check = app.add_subcommand("check", "verify the comultiplication axioms");
  check->add_option("input", a.input, "presentation file or builtin:<name>")->required();
  check->add_option("--sigma13", a.sigma13, "outer-swap convention for the ternary symmetry")
      ->check(CLI::IsMember({"graded", "plain"}));
  check->add_option("--seed", a.seed, "seed for randomized extra products");
  add_json(check);

  CLI::App* points =
      app.add_subcommand("points", "truss and semi-brace identities on test-algebra points");
  points->add_option("input", a.input, "presentation file or builtin:<name>")->required();
  add_pointset(points);
  add_json(points);

  CLI::App* ybe = app.add_subcommand("ybe", "braid relation for a catalogued map on points");
  ybe->add_option("input", a.input, "presentation file or builtin:<name>")->required();
  ybe->add_option("--map", a.map,
                  "flip | superflip | left-action | inverse-map | odd-scaling | "
                  "composed:<outer>:<inner>")
      ->required();
  ybe->add_option("--q", a.q, "scaling factor (integer or a/b)");
  add_pointset(ybe);
  add_json(ybe);

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "project out the odd generators");
  reduce_cmd->add_option("input", a.input, "presentation file or builtin:<name>")->required();
  reduce_cmd->add_option("-o,--output", a.output, "write the reduced presentation here");
  add_json(reduce_cmd);

  CLI::App* morphism =
      app.add_subcommand("morphism", "check that a generator map intertwines two presentations");
  morphism->add_option("phi", a.phi, "morphism file (a map block)")->required();
  morphism->add_option("source", a.src, "source presentation file or builtin:<name>")->required();
  morphism->add_option("target", a.dst, "target presentation file or builtin:<name>")->required();
  add_json(morphism);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (check->parsed()) return run_check(a, out);
    if (points->parsed()) return run_points(a, out);
    if (ybe->parsed()) return run_ybe(a, out);
    if (reduce_cmd->parsed()) return run_reduce(a, out);
    return run_morphism(a, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace stx
