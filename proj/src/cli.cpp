#include "hmlab/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "hmlab/coset.hpp"
#include "hmlab/monodromy.hpp"
#include "hmlab/predict.hpp"
#include "hmlab/report.hpp"
#include "hmlab/verify.hpp"

namespace hmlab {

namespace {

/// Everything a command can be parameterised by.
struct RunConfig
{
  std::string command;
  std::string group = "sym4";
  std::optional<std::size_t> b;
  std::optional<std::size_t> g;
  std::optional<std::uint64_t> N;
  std::string method = "orbit-bfs";
  std::string format = "text";
  std::string cache;
  std::optional<double> budget;  // seconds
  bool stretch = false;
  std::string tag;
  std::string suite = "desk";
  std::vector<int> only;
  std::size_t coset_budget = 100'000;
};

/// Sigma sizes above this need --stretch for a full BSGS.
constexpr std::size_t stretch_threshold = 2000;

char const *const commands[] = {"enumerate",  "analyze",    "omega-crosscheck", "coset-rep",
                                "witness",    "chain-check", "cube-check",      "predict",
                                "verify"};

EnumerationMethod parse_method(std::string const &m)
{
  if (m == "orbit-bfs")
    return EnumerationMethod::orbit_bfs;
  if (m == "exhaustive")
    return EnumerationMethod::exhaustive;
  throw CLI::ValidationError("--method", "expected orbit-bfs or exhaustive");
}

SchreierSimsOptions bsgs_options(RunConfig const &cfg)
{
  SchreierSimsOptions o;
  if (cfg.budget)
    o.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(*cfg.budget));
  if (cfg.stretch)
    o.variant = SchreierSimsOptions::Variant::randomized_verified;
  return o;
}

std::size_t require_b(RunConfig const &cfg)
{
  if (cfg.b)
    return *cfg.b;
  if (cfg.g)
    return 2 * *cfg.g + 6;
  throw HypothesisError("missing parameter: --b or --g");
}

std::size_t require_g(RunConfig const &cfg)
{
  if (cfg.g)
    return *cfg.g;
  if (cfg.b && *cfg.b >= 6 && *cfg.b % 2 == 0)
    return (*cfg.b - 6) / 2;
  throw HypothesisError("missing parameter: --g");
}

std::uint64_t require_N(RunConfig const &cfg)
{
  if (!cfg.N)
    throw HypothesisError("missing parameter: --N");
  return *cfg.N;
}

/// Reads the class set from the cache when present, otherwise enumerates
/// and writes it there.
ClassSet load_classes(RunConfig const &cfg, GroupSpec spec, std::size_t b)
{
  if (!cfg.cache.empty() && std::filesystem::exists(cfg.cache)) {
    std::ifstream in(cfg.cache);
    ClassSet cs = read_class_cache(in);
    if (!(cs.group().spec() == spec) || cs.b() != b)
      throw std::runtime_error("cache " + cfg.cache + " holds " + cs.group().spec().str() +
                               " b=" + std::to_string(cs.b()) + ", not the requested classes");
    return cs;
  }
  ClassSet cs = enumerate_classes(make_group(spec), b, parse_method(cfg.method));
  if (!cfg.cache.empty()) {
    std::ofstream out(cfg.cache);
    write_class_cache(out, cs);
    if (!out)
      throw std::runtime_error("cannot write cache " + cfg.cache);
  }
  return cs;
}

HurwitzSetup setup_for(RunConfig const &cfg)
{
  GroupSpec const spec = GroupSpec::parse(cfg.group);
  std::size_t const b = require_b(cfg);
  if (spec.kind == GroupKind::sym3)
    throw HypothesisError("Hurwitz setup needs --group sym4 or xnN (sym3 is Omega itself)");
  if (cfg.cache.empty())
    return make_hurwitz_setup(spec, b, parse_method(cfg.method));
  // Validate the cache now; make_hurwitz_setup enumerates on its own, and the
  // two must agree.
  ClassSet cached = load_classes(cfg, spec, b);
  HurwitzSetup s = make_hurwitz_setup(spec, b, parse_method(cfg.method));
  if (!(cached == s.sigma))
    throw std::runtime_error("cache " + cfg.cache + " disagrees with a fresh enumeration");
  return s;
}

Report run_enumerate(RunConfig const &cfg)
{
  GroupSpec const spec = GroupSpec::parse(cfg.group);
  std::size_t const b = require_b(cfg);
  ClassSet cs = load_classes(cfg, spec, b);
  Report r{"enumerate", {{"group", spec.str()}, {"b", b}, {"method", cfg.method}}, Json::object()};
  r.results["classes"] = cs.size();
  if (spec.kind != GroupKind::sym3) {
    ClassSet omega = enumerate_classes(make_group(GroupSpec::sym3()), b, parse_method(cfg.method));
    auto projection = project_to_s3(cs, omega);
    std::map<std::size_t, std::size_t> fiber;
    for (std::size_t x : projection)
      ++fiber[x];
    std::map<std::size_t, std::size_t> sizes;
    for (auto [w, n] : fiber)
      ++sizes[n];
    r.results["omega_classes"] = omega.size();
    Json fs = Json::array();
    for (auto [n, count] : sizes)
      fs.push_back({n, count});
    r.results["fiber_sizes"] = fs;
  }
  return r;
}

Report run_analyze(RunConfig const &cfg)
{
  HurwitzSetup setup = setup_for(cfg);
  if (setup.sigma.size() > stretch_threshold && !cfg.stretch)
    throw HypothesisError("analyze on " + std::to_string(setup.sigma.size()) +
                          " classes is beyond desk scale; pass --stretch (with --budget) to try");
  RunConfig c = cfg;
  if (cfg.stretch && !cfg.budget)
    c.budget = 600;
  Report r = make_report(analyze(setup, bsgs_options(c)));
  r.params["method"] = cfg.method;
  return r;
}

int run_verify(RunConfig const &cfg, std::ostream &out)
{
  if (cfg.suite != "desk")
    throw CLI::ValidationError("--suite", "only the desk suite exists");
  DeskSuiteOptions opts;
  opts.only.insert(cfg.only.begin(), cfg.only.end());
  opts.progress = &out;
  auto results = run_desk_suite(opts);
  std::size_t passed = 0;
  for (auto const &r : results)
    passed += r.passed();
  out << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size() ? exit_ok : exit_hypothesis;
}

Report run(RunConfig const &cfg)
{
  if (cfg.command == "enumerate")
    return run_enumerate(cfg);
  if (cfg.command == "analyze")
    return run_analyze(cfg);
  if (cfg.command == "omega-crosscheck")
    return make_report(omega_transvection_crosscheck(require_g(cfg)));
  if (cfg.command == "coset-rep") {
    RunConfig c = cfg;
    c.group = "sym4";
    if (!c.b)
      c.b = 2 * require_g(cfg) + 6;
    return make_report(coset_representation(setup_for(c), cfg.coset_budget, bsgs_options(cfg)));
  }
  if (cfg.command == "witness")
    return make_report(commutator_witness(setup_for(cfg)));
  if (cfg.command == "chain-check")
    return make_report(chain_rep_check(require_g(cfg), require_N(cfg)));
  if (cfg.command == "cube-check")
    return make_report(cube_closure_check(require_g(cfg), require_N(cfg)));
  if (cfg.command == "predict") {
    auto tag = parse_theorem_tag(cfg.tag);
    if (!tag)
      throw CLI::ValidationError("predict", "unknown theorem tag '" + cfg.tag + "'");
    return make_report(predict(*tag, {cfg.g, cfg.b, cfg.N}));
  }
  throw CLI::ValidationError(cfg.command, "unknown command");
}

} // namespace

int dispatch(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  RunConfig cfg;
  CLI::App app{"Monodromy of degree-4 and X_N Hurwitz spaces", "hmlab"};
  app.require_subcommand(1);

  auto group_opts = [&](CLI::App *sub) {
    sub->add_option("--group", cfg.group, "sym3, sym4 or xnN")->capture_default_str();
    sub->add_option("--b", cfg.b, "number of branch points");
    sub->add_option("--g", cfg.g, "genus, b = 2g+6");
    sub->add_option("--method", cfg.method, "orbit-bfs or exhaustive")->capture_default_str();
    sub->add_option("--cache", cfg.cache, "class cache file (read if present, else written)");
  };
  auto common = [&](CLI::App *sub) {
    sub->add_option("--format", cfg.format, "text, json or tsv")->capture_default_str();
    sub->add_option("--budget", cfg.budget, "time budget in seconds");
  };

  auto *en = app.add_subcommand("enumerate", "enumerate Nielsen classes");
  group_opts(en);
  common(en);
  auto *an = app.add_subcommand("analyze", "braid monodromy on classes and on Omega");
  group_opts(an);
  common(an);
  an->add_flag("--stretch", cfg.stretch, "allow beyond-desk-scale BSGS (randomized + verified)");
  auto *oc = app.add_subcommand("omega-crosscheck", "compare the two models of Omega");
  oc->add_option("--g", cfg.g)->required();
  common(oc);
  auto *cr = app.add_subcommand("coset-rep", "representation on the cosets of H2*");
  cr->add_option("--g", cfg.g, "0 or 1")->required();
  cr->add_option("--cosets", cfg.coset_budget, "coset budget")->capture_default_str();
  common(cr);
  auto *wi = app.add_subcommand("witness", "commutator [beta_1^3, beta_2^3] on Sigma");
  group_opts(wi);
  common(wi);
  for (auto [name, help] : {std::pair{"chain-check", "chain transvection group vs |Sp(2g+2,Z/N)|"},
                            {"cube-check", "normal closure of a cubed transvection"}}) {
    auto *sub = app.add_subcommand(name, help);
    sub->add_option("--g", cfg.g)->required();
    sub->add_option("--N", cfg.N)->required();
    common(sub);
  }
  auto *pr = app.add_subcommand("predict", "predicted structure from a theorem");
  pr->add_option("tag", cfg.tag,
                 "thm1, thm1-exceptional-g0, thm1-exceptional-g1, thm2 or thm3")
      ->required();
  pr->add_option("--g", cfg.g);
  pr->add_option("--b", cfg.b);
  pr->add_option("--N", cfg.N);
  common(pr);
  auto *ve = app.add_subcommand("verify", "acceptance criteria");
  ve->add_option("--suite", cfg.suite)->capture_default_str();
  ve->add_option("--only", cfg.only, "criterion numbers")->delimiter(',');

  bool const known = !args.empty() && std::ranges::find(commands, args.front()) != std::end(commands);
  bool const help = !args.empty() && (args.front() == "--help" || args.front() == "-h");
  if (!known && !help) {
    if (!args.empty())
      err << "unknown command '" << args.front() << "'\n";
    err << app.help();
    return exit_usage;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return exit_ok;
  } catch (CLI::ParseError const &e) {
    err << e.what() << '\n' << app.help();
    return exit_usage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "verify")
      return run_verify(cfg, out);
    OutputFormat const fmt = parse_output_format(cfg.format);
    out << run(cfg).render(fmt);
    return exit_ok;
  } catch (HypothesisError const &e) {
    err << e.what() << '\n';
    return exit_hypothesis;
  } catch (BudgetExceeded const &e) {
    err << e.what() << "; partial: " << e.partial() << '\n';
    return exit_budget;
  } catch (CLI::ParseError const &e) {
    err << e.what() << '\n';
    return exit_usage;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return exit_hypothesis;
  }
}

int dispatch(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
  return dispatch(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace hmlab
