#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cnfsat/dimacs.hpp"
#include "cnfsat/experiment.hpp"
#include "cnfsat/oracle.hpp"
#include "cnfsat/report.hpp"
#include "cnfsat/resolution.hpp"
#include "cnfsat/rng.hpp"
#include "cnfsat/seating.hpp"
#include "cnfsat/walksat.hpp"

namespace cnfsat::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path));
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot create '{}'", path));
  out << text;
  out.flush();
  if (!out) throw IoError(fmt::format("failed writing '{}'", path));
}

void print_model(std::ostream& out, const Model& m) {
  const auto lits = m.to_dimacs();
  std::string line = "v";
  for (const auto lit : lits) {
    const auto token = fmt::format(" {}", lit);
    if (line.size() + token.size() > 78) {
      out << line << '\n';
      line = "v";
    }
    line += token;
  }
  out << line << " 0\n";
}

std::uint64_t seed_or_entropy(const std::optional<std::uint64_t>& seed, std::ostream& note,
                              std::string_view prefix) {
  if (seed) return *seed;
  const auto s = entropy_seed();
  note << prefix << "seed " << s << '\n';
  return s;
}

struct SolveArgs {
  std::string path;
  std::string solver = "walksat";
  double p = 0.5;
  std::size_t max_flips = 100;
  std::optional<std::uint64_t> seed;
  std::size_t max_clauses = ResolutionLimits{}.max_clauses;
  std::size_t max_rounds = ResolutionLimits{}.max_rounds;
  double time_budget = ResolutionLimits{}.time_budget.count();
  bool keep_tautologies = false;
  std::size_t var_limit = kDefaultOracleVarLimit;
  bool strict = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  DimacsDocument doc;
  try {
    doc = parse_dimacs(read_file(a.path), DimacsOptions{a.strict});
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  for (const auto& w : doc.warnings) err << "warning: " << w << '\n';
  const Formula& f = doc.formula;
  out << fmt::format("c {} variables, {} clauses, solver {}\n", f.num_vars(), f.size(), a.solver);

  Verdict verdict = Unknown{UnknownReason::resource_limit_exceeded};
  if (a.solver == "walksat") {
    WalkSatParams params{a.p, a.max_flips, seed_or_entropy(a.seed, out, "c ")};
    const auto r = walksat(f, params);
    out << fmt::format("c flips {} unsatisfied {}\n", r.stats.flips_used,
                       r.stats.final_unsat_count);
    verdict = r.verdict;
  } else if (a.solver == "resolution") {
    ResolutionLimits limits{a.max_clauses, a.max_rounds,
                            std::chrono::duration<double>(a.time_budget)};
    const auto r = pl_resolution(f, limits, ResolutionOptions{!a.keep_tautologies, false});
    out << fmt::format("c rounds {} clauses {} resolvents {} time {:.3f}s\n", r.stats.rounds,
                       r.stats.clauses_final, r.stats.resolvents_generated,
                       r.stats.elapsed.count());
    verdict = r.verdict;
  } else {
    try {
      verdict = brute_force_solve(f, a.var_limit);
    } catch (const TooManyVariables& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
  }

  if (is_sat(verdict)) {
    out << "s SATISFIABLE\n";
    if (const Model* m = model_of(verdict)) print_model(out, *m);
    return kExitSat;
  }
  if (is_unsat(verdict)) {
    out << "s UNSATISFIABLE\n";
    return kExitUnsat;
  }
  out << "c " << to_string(std::get<Unknown>(verdict).reason) << '\n';
  out << "s UNKNOWN\n";
  return kExitUnknown;
}

struct VerifyArgs {
  std::string cnf;
  std::string model;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const auto doc = parse_dimacs(read_file(a.cnf));
    const auto model = parse_model(read_file(a.model), doc.formula.num_vars());
    const bool ok = verify_model(doc.formula, model);
    out << (ok ? "VALID" : "INVALID") << '\n';
    return ok ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

struct GenerateArgs {
  std::uint32_t guests = 0;
  std::uint32_t tables = 0;
  double f = 0.0;
  double e = 0.0;
  std::optional<std::uint64_t> seed;
  std::string out_path;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  const auto seed = seed_or_entropy(a.seed, err, "");
  const auto text = format_instance(generate_instance(a.guests, a.tables, a.f, a.e, seed));
  if (a.out_path.empty()) {
    out << text;
  } else {
    write_file(a.out_path, text);
  }
  return 0;
}

struct EncodeArgs {
  std::optional<std::uint32_t> guests;
  std::optional<std::uint32_t> tables;
  std::string instance_path;
  double f = 0.0;
  double e = 0.0;
  std::optional<std::uint64_t> seed;
  std::string out_path;
};

int cmd_encode(const EncodeArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<SeatingInstance> inst;
  if (!a.instance_path.empty()) {
    inst = parse_instance(read_file(a.instance_path));
    if ((a.guests && *a.guests != inst->num_guests()) ||
        (a.tables && *a.tables != inst->num_tables())) {
      err << "error: --guests/--tables disagree with the instance file\n";
      return 1;
    }
  } else {
    if (!a.guests || !a.tables) {
      err << "error: --guests and --tables are required without --instance\n";
      return 1;
    }
    inst = generate_instance(*a.guests, *a.tables, a.f, a.e, seed_or_entropy(a.seed, err, ""));
  }
  const auto enc = encode(*inst);
  DimacsDocument doc;
  doc.comments.push_back(fmt::format("seating guests {} tables {} friends {} enemies {}",
                                     inst->num_guests(), inst->num_tables(),
                                     inst->count(Relation::friends),
                                     inst->count(Relation::enemies)));
  doc.comments.push_back(fmt::format("variable (i - 1) * {} + n means guest i sits at table n",
                                     inst->num_tables()));
  doc.formula = enc.formula;
  const auto text = serialize_dimacs(doc);
  if (a.out_path.empty() || a.out_path == "-") {
    out << text;
  } else {
    write_file(a.out_path, text);
  }
  return 0;
}

struct DecodeArgs {
  std::string instance_path;
  std::string model_path;
};

int cmd_decode(const DecodeArgs& a, std::ostream& out, std::ostream& err) {
  const auto inst = parse_instance(read_file(a.instance_path));
  const EncodingMap map(inst.num_guests(), inst.num_tables());
  try {
    const auto model = parse_model(read_file(a.model_path), map.num_vars());
    const auto chart = decode(model, map);
    out << format_chart(chart);
    if (!chart_satisfies(chart, inst)) {
      err << "warning: chart violates a Friends/Enemies constraint\n";
      return 1;
    }
    return 0;
  } catch (const ModelFormatError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

struct ExperimentArgs {
  std::string config_path;
  std::string csv_path;
  std::string plot_path;
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> seed;
};

int cmd_experiment(const ExperimentArgs& a, std::ostream& out, std::ostream&) {
  auto cfg = parse_config(read_file(a.config_path));
  if (a.threads) cfg.threads = *a.threads;
  if (a.seed) cfg.master_seed = *a.seed;
  validate(cfg);
  out << fmt::format("c {} points x {} instances, guests {} tables {} f {} complete {}\n",
                     cfg.e_values.size(), cfg.instances_per_point, cfg.guests, cfg.tables, cfg.f,
                     to_string(cfg.complete_solver));
  const auto points = run_experiment(cfg);
  for (const auto& p : points) {
    out << fmt::format("e {:.2f}  P_complete {:.2f}  P_walksat {:.2f}  unknown {:.2f}\n", p.e,
                       p.p_complete, p.p_walksat, p.unknown_complete);
  }
  if (!a.csv_path.empty()) write_file(a.csv_path, emit_csv(points));
  if (!a.plot_path.empty()) {
    const char* label =
        cfg.complete_solver == CompleteSolver::oracle ? "Truth table" : "PL-Resolution";
    write_file(a.plot_path, emit_plot_svg(points, label));
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"CNF satisfiability toolkit: PL-Resolution, WalkSAT, seating encoder"};
  app.name("cnfsat");
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Decide a DIMACS CNF file");
  solve->add_option("path", solve_args.path, "DIMACS CNF file")->required();
  solve->add_option("--solver", solve_args.solver)
      ->check(CLI::IsMember({"walksat", "resolution", "oracle"}))
      ->capture_default_str();
  solve->add_option("-p", solve_args.p, "WalkSAT random-walk probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  solve->add_option("--max-flips", solve_args.max_flips)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--seed", solve_args.seed, "WalkSAT seed (random when omitted)");
  solve->add_option("--max-clauses", solve_args.max_clauses)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--max-rounds", solve_args.max_rounds)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--time-budget", solve_args.time_budget, "Resolution time budget, seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_flag("--keep-tautologies", solve_args.keep_tautologies,
                  "Keep tautological resolvents");
  solve->add_option("--var-limit", solve_args.var_limit, "Truth-table variable limit")
      ->capture_default_str();
  solve->add_flag("--strict", solve_args.strict, "Reject clause-count mismatches");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check a model against a DIMACS CNF file");
  verify->add_option("cnf", verify_args.cnf)->required();
  verify->add_option("model", verify_args.model)->required();

  GenerateArgs gen_args;
  auto* generate = app.add_subcommand("generate", "Generate a random seating instance");
  generate->add_option("--guests", gen_args.guests)->required()->check(CLI::PositiveNumber);
  generate->add_option("--tables", gen_args.tables)->required()->check(CLI::PositiveNumber);
  generate->add_option("--f", gen_args.f, "Friends probability")->check(CLI::Range(0.0, 1.0));
  generate->add_option("--e", gen_args.e, "Enemies probability")->check(CLI::Range(0.0, 1.0));
  generate->add_option("--seed", gen_args.seed);
  generate->add_option("--out", gen_args.out_path, "Output file (stdout when omitted)");

  EncodeArgs enc_args;
  auto* encode_cmd = app.add_subcommand("encode-seating", "Encode a seating instance as DIMACS");
  encode_cmd->add_option("--guests", enc_args.guests)->check(CLI::PositiveNumber);
  encode_cmd->add_option("--tables", enc_args.tables)->check(CLI::PositiveNumber);
  auto* inst_opt = encode_cmd->add_option("--instance", enc_args.instance_path);
  encode_cmd->add_option("--f", enc_args.f)->check(CLI::Range(0.0, 1.0))->excludes(inst_opt);
  encode_cmd->add_option("--e", enc_args.e)->check(CLI::Range(0.0, 1.0))->excludes(inst_opt);
  encode_cmd->add_option("--seed", enc_args.seed)->excludes(inst_opt);
  encode_cmd->add_option("--out", enc_args.out_path, "Output .cnf file (stdout when omitted)");

  DecodeArgs dec_args;
  auto* decode_cmd = app.add_subcommand("decode", "Turn a model into a seating chart");
  decode_cmd->add_option("--instance", dec_args.instance_path)->required();
  decode_cmd->add_option("--model", dec_args.model_path)->required();

  ExperimentArgs exp_args;
  auto* experiment = app.add_subcommand("experiment", "Run a satisfiable-fraction sweep");
  experiment->add_option("--config", exp_args.config_path, "key = value config file")->required();
  experiment->add_option("--csv", exp_args.csv_path);
  experiment->add_option("--plot", exp_args.plot_path, "SVG output");
  experiment->add_option("--threads", exp_args.threads);
  experiment->add_option("--seed", exp_args.seed, "Override master_seed");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("cnfsat");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args, out, err);
    if (verify->parsed()) return cmd_verify(verify_args, out, err);
    if (generate->parsed()) return cmd_generate(gen_args, out, err);
    if (encode_cmd->parsed()) return cmd_encode(enc_args, out, err);
    if (decode_cmd->parsed()) return cmd_decode(dec_args, out, err);
    if (experiment->parsed()) return cmd_experiment(exp_args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace cnfsat::cli
