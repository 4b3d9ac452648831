#include "cnfsat/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <thread>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "cnfsat/oracle.hpp"
#include "cnfsat/rng.hpp"
#include "cnfsat/seating.hpp"

namespace cnfsat {

std::string to_string(CompleteSolver s) {
  return s == CompleteSolver::oracle ? "oracle" : "resolution";
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.guests == 0 || cfg.tables == 0) throw ConfigError("guests and tables must be >= 1");
  if (cfg.e_values.empty()) throw ConfigError("e_values must not be empty");
  if (!(cfg.f >= 0.0 && cfg.f <= 1.0)) throw ConfigError("f must lie in [0, 1]");
  for (std::size_t i = 0; i < cfg.e_values.size(); ++i) {
    const double e = cfg.e_values[i];
    if (!(e >= 0.0 && e <= 1.0)) throw ConfigError(fmt::format("e value {} outside [0, 1]", e));
    if (i > 0 && !(e > cfg.e_values[i - 1])) {
      throw ConfigError("e_values must be strictly increasing");
    }
  }
  if (cfg.f + cfg.e_values.back() > 1.0 + 1e-12) throw ConfigError("f + max(e) must be <= 1");
  if (cfg.instances_per_point == 0) throw ConfigError("instances_per_point must be >= 1");
  if (!(cfg.walksat.p >= 0.0 && cfg.walksat.p <= 1.0)) throw ConfigError("p must lie in [0, 1]");
  if (cfg.walksat.max_flips == 0) throw ConfigError("max_flips must be >= 1");
  const auto& lim = cfg.resolution_limits;
  if (lim.max_clauses == 0 || lim.max_rounds == 0 || !(lim.time_budget.count() > 0.0)) {
    throw ConfigError("resolution limits must be positive");
  }
  const std::size_t vars = static_cast<std::size_t>(cfg.guests) * cfg.tables;
  if (cfg.complete_solver == CompleteSolver::oracle && vars > kDefaultOracleVarLimit) {
    throw ConfigError(fmt::format("oracle handles at most {} variables, config has {}",
                                  kDefaultOracleVarLimit, vars));
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError(fmt::format("invalid value '{}' for key '{}'", value, key));
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(fmt::format("invalid boolean '{}' for key '{}'", value, key));
}

std::vector<double> parse_list(std::string_view key, std::string_view value) {
  std::vector<double> out;
  while (!value.empty()) {
    const auto comma = value.find(',');
    out.push_back(parse_number<double>(key, trim(value.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

using Setter = std::function<void(ExperimentConfig&, std::string_view, std::string_view)>;

const std::map<std::string_view, Setter>& setters() {
  static const std::map<std::string_view, Setter> table{
      {"guests", [](auto& c, auto k, auto v) { c.guests = parse_number<std::uint32_t>(k, v); }},
      {"tables", [](auto& c, auto k, auto v) { c.tables = parse_number<std::uint32_t>(k, v); }},
      {"f", [](auto& c, auto k, auto v) { c.f = parse_number<double>(k, v); }},
      {"e_values", [](auto& c, auto k, auto v) { c.e_values = parse_list(k, v); }},
      {"instances_per_point",
       [](auto& c, auto k, auto v) { c.instances_per_point = parse_number<std::size_t>(k, v); }},
      {"p", [](auto& c, auto k, auto v) { c.walksat.p = parse_number<double>(k, v); }},
      {"max_flips",
       [](auto& c, auto k, auto v) { c.walksat.max_flips = parse_number<std::size_t>(k, v); }},
      {"max_clauses",
       [](auto& c, auto k, auto v) {
         c.resolution_limits.max_clauses = parse_number<std::size_t>(k, v);
       }},
      {"max_rounds",
       [](auto& c, auto k, auto v) {
         c.resolution_limits.max_rounds = parse_number<std::size_t>(k, v);
       }},
      {"time_budget",
       [](auto& c, auto k, auto v) {
         c.resolution_limits.time_budget = std::chrono::duration<double>(parse_number<double>(k, v));
       }},
      {"complete_solver",
       [](auto& c, auto k, auto v) {
         if (v == "resolution") {
           c.complete_solver = CompleteSolver::resolution;
         } else if (v == "oracle") {
           c.complete_solver = CompleteSolver::oracle;
         } else {
           throw ConfigError(fmt::format("invalid value '{}' for key '{}'", v, k));
         }
       }},
      {"master_seed",
       [](auto& c, auto k, auto v) { c.master_seed = parse_number<std::uint64_t>(k, v); }},
      {"record_timings", [](auto& c, auto k, auto v) { c.record_timings = parse_bool(k, v); }},
      {"threads", [](auto& c, auto k, auto v) { c.threads = parse_number<unsigned>(k, v); }},
  };
  return table;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(fmt::format("line {}: expected 'key = value'", line_no));
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(fmt::format("line {}: unknown key '{}'", line_no, key));
    it->second(cfg, key, value);
  }
  return cfg;
}

std::string format_config(const ExperimentConfig& cfg) {
  return fmt::format(
      "guests = {}\ntables = {}\nf = {}\ne_values = {}\ninstances_per_point = {}\np = {}\n"
      "max_flips = {}\nmax_clauses = {}\nmax_rounds = {}\ntime_budget = {}\n"
      "complete_solver = {}\nmaster_seed = {}\nrecord_timings = {}\nthreads = {}\n",
      cfg.guests, cfg.tables, cfg.f, fmt::join(cfg.e_values, ","), cfg.instances_per_point,
      cfg.walksat.p, cfg.walksat.max_flips, cfg.resolution_limits.max_clauses,
      cfg.resolution_limits.max_rounds, cfg.resolution_limits.time_budget.count(),
      to_string(cfg.complete_solver), cfg.master_seed, cfg.record_timings, cfg.threads);
}

std::uint64_t instance_seed(std::uint64_t master_seed, std::size_t point_index,
                            std::size_t instance_index) {
  return mix64(mix64(mix64(master_seed) ^ point_index) ^ instance_index);
}

std::uint64_t walksat_seed(std::uint64_t instance_seed) {
  return mix64(instance_seed ^ 0x57414c4b534154ULL);
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Judgement judge(const Verdict& v) {
  if (is_sat(v)) return Judgement::satisfiable;
  if (is_unsat(v)) return Judgement::unsatisfiable;
  return Judgement::unknown;
}

}  // namespace

InstanceOutcome run_instance(const ExperimentConfig& cfg, std::size_t point_index,
                             std::size_t instance_index) {
  const std::uint64_t seed = instance_seed(cfg.master_seed, point_index, instance_index);
  const auto inst =
      generate_instance(cfg.guests, cfg.tables, cfg.f, cfg.e_values.at(point_index), seed);
  const auto formula = encode(inst).formula;

  InstanceOutcome out;
  auto t0 = Clock::now();
  try {
    if (cfg.complete_solver == CompleteSolver::oracle) {
      out.complete = judge(brute_force_solve(formula));
    } else {
      out.complete = judge(pl_resolution(formula, cfg.resolution_limits).verdict);
    }
  } catch (const std::exception&) {
    out.complete = Judgement::unknown;
    out.complete_failed = true;
  }
  out.complete_ms = ms_since(t0);

  WalkSatParams params = cfg.walksat;
  params.seed = walksat_seed(seed);
  t0 = Clock::now();
  const auto ws = walksat(formula, params);
  out.walksat_ms = ms_since(t0);
  const Model* model = model_of(ws.verdict);
  out.walksat_found_model = model != nullptr && verify_model(formula, *model);

  if (!cfg.record_timings) out.complete_ms = out.walksat_ms = 0.0;
  return out;
}

std::vector<ExperimentPoint> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const std::size_t per_point = cfg.instances_per_point;
  const std::size_t total = cfg.e_values.size() * per_point;
  std::vector<InstanceOutcome> outcomes(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < total; job = next++) {
      outcomes[job] = run_instance(cfg, job / per_point, job % per_point);
    }
  };
  unsigned threads = cfg.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                      : cfg.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<ExperimentPoint> points;
  points.reserve(cfg.e_values.size());
  for (std::size_t i = 0; i < cfg.e_values.size(); ++i) {
    std::size_t sat = 0, unknown = 0, walk = 0, failed = 0;
    double rt_complete = 0.0, rt_walk = 0.0;
    for (std::size_t k = 0; k < per_point; ++k) {
      const auto& o = outcomes[i * per_point + k];
      sat += o.complete == Judgement::satisfiable ? 1 : 0;
      unknown += o.complete == Judgement::unknown ? 1 : 0;
      walk += o.walksat_found_model ? 1 : 0;
      failed += o.complete_failed ? 1 : 0;
      rt_complete += o.complete_ms;
      rt_walk += o.walksat_ms;
    }
    const auto n = static_cast<double>(per_point);
    points.push_back({cfg.e_values[i], static_cast<double>(sat) / n,
                      static_cast<double>(walk) / n, static_cast<double>(unknown) / n,
                      rt_complete / n, rt_walk / n, per_point, failed});
  }
  return points;
}

}  // namespace cnfsat
