#include "fairhouse/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "fairhouse/experiments.hpp"
#include "fairhouse/instance_io.hpp"
#include "fairhouse/oracle.hpp"
#include "fairhouse/solvers_ef.hpp"
#include "fairhouse/solvers_esw.hpp"
#include "fairhouse/solvers_usw.hpp"

namespace fairhouse::cli {
namespace {

// Thrown by a problem that legitimately has no answer.
struct NoneExists {};

const std::map<std::string, std::function<Allocation(const Instance&)>>& problems() {
  static const std::map<std::string, std::function<Allocation(const Instance&)>> table{
      {"ef-max-size", [](const Instance& inst) { return max_size_envy_free(inst).allocation; }},
      {"ef-max-usw",
       [](const Instance& inst) {
         auto a = max_usw_envy_free(inst);
         if (!a) throw NoneExists{};
         return *a;
       }},
      {"ef-max-esw",
       [](const Instance& inst) {
         auto r = max_esw_envy_free(inst);
         if (!r) throw NoneExists{};
         return r->allocation;
       }},
      {"min-envy-max-usw", min_num_envy_max_usw},
      {"min-total-envy-max-usw", min_total_envy_max_usw},
      {"min-envy-complete", min_num_envy_complete},
      {"min-total-envy-complete", min_total_envy_complete_mleqn},
      {"max-esw", [](const Instance& inst) { return max_esw(inst).allocation; }},
  };
  return table;
}

const std::map<std::string, Objective>& objectives() {
  static const std::map<std::string, Objective> table{
      {"max-size-ef", Objective::MaxSizeEf},
      {"min-num-envy", Objective::MinNumEnvy},
      {"min-total-envy", Objective::MinTotalEnvy},
      {"minimax-total-envy", Objective::MinimaxTotalEnvy},
  };
  return table;
}

// none | max-usw | max-esw | complete | size>=K
std::optional<Constraint> parse_constraint(const std::string& text) {
  if (text == "none") return Constraint::none();
  if (text == "max-usw") return Constraint::max_usw();
  if (text == "max-esw") return Constraint::max_esw();
  if (text == "complete") return Constraint::complete();
  const std::string prefix = "size>=";
  if (text.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      int k = std::stoi(text.substr(prefix.size()), &used);
      if (used == text.size() - prefix.size() && k >= 0) return Constraint::size_at_least(k);
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

template <typename Map>
std::string keys_of(const Map& map) {
  std::string out;
  for (const auto& [key, _] : map) out += (out.empty() ? "" : ", ") + key;
  return out;
}

void print_report(std::ostream& out, const Instance& inst, const EnvyReport& report,
                  const std::string& format) {
  if (format == "text") {
    out << format_report(inst, report);
    return;
  }
  out << "metric,value\n";
  out << "size," << report.size << '\n';
  out << "usw," << format_rational(report.usw) << '\n';
  out << "esw_k," << report.esw_k << '\n';
  out << "esw_beta," << format_rational(report.esw_beta) << '\n';
  out << "num_envious," << report.num_envious << '\n';
  out << "total_envy," << format_rational(report.total_envy) << '\n';
  out << "max_agent_envy," << format_rational(report.max_agent_envy) << '\n';
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

struct Options {
  std::string instance_path;
  std::string second_arg;  // problem or allocation path or objective
  std::string constraint;
  std::string out_path;
  std::string format = "text";
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::optional<int> n, trials, threads;
  std::vector<std::string> lambdas, models;
  std::vector<double> multipliers;
};

int cmd_solve(const Options& opt, std::ostream& out, std::ostream& err) {
  auto it = problems().find(opt.second_arg);
  if (it == problems().end()) {
    err << "error: unknown problem '" << opt.second_arg << "' (expected one of "
        << keys_of(problems()) << ")\n";
    return kInputError;
  }
  const Instance inst = load_instance(opt.instance_path);
  Allocation alloc;
  try {
    alloc = it->second(inst);
  } catch (const NoneExists&) {
    out << "none exists\n";
    err << opt.second_arg << ": none exists\n";
    return kNoneExists;
  }
  const std::string text = write_allocation(alloc);
  if (!opt.out_path.empty()) write_file(opt.out_path, text);
  if (opt.format == "text") out << text;
  print_report(out, inst, evaluate(inst, alloc), opt.format);
  return kOk;
}

int cmd_oracle(const Options& opt, std::ostream& out, std::ostream& err) {
  auto obj = objectives().find(opt.second_arg);
  if (obj == objectives().end()) {
    err << "error: unknown objective '" << opt.second_arg << "' (expected one of "
        << keys_of(objectives()) << ")\n";
    return kInputError;
  }
  auto constraint = parse_constraint(opt.constraint);
  if (!constraint) {
    err << "error: unknown constraint '" << opt.constraint
        << "' (expected none, max-usw, max-esw, complete or size>=K)\n";
    return kInputError;
  }
  const Instance inst = load_instance(opt.instance_path);
  const OracleResult r = oracle_solve(inst, obj->second, *constraint, opt.budget.value_or(kDefaultBudget));
  if (!r.feasible) {
    out << "none exists\n";
    out << "candidates: " << r.candidates << '\n';
    err << "oracle: no allocation satisfies " << to_string(obj->second) << " under "
        << to_string(*constraint) << '\n';
    return kNoneExists;
  }
  if (opt.format == "csv") {
    out << "field,value\n";
    out << "value," << format_rational(r.value) << '\n';
    out << "optimum_count," << r.optimum_count << '\n';
    out << "candidates," << r.candidates << '\n';
    return kOk;
  }
  out << "value: " << format_rational(r.value) << '\n';
  out << "optimum_count: " << r.optimum_count << '\n';
  out << "candidates: " << r.candidates << '\n';
  out << "witness:\n" << write_allocation(r.witness);
  if (!opt.out_path.empty()) write_file(opt.out_path, write_allocation(r.witness));
  return kOk;
}

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(opt.instance_path);
  Allocation alloc = load_allocation(opt.second_arg, inst.agent_count());
  try {
    validate_allocation(alloc, inst.agent_count(), inst.house_count());
  } catch (const InvalidAllocation& e) {
    err << "invalid allocation: " << e.what() << '\n';
    return kInputError;
  }
  print_report(out, inst, evaluate(inst, alloc), opt.format);
  return kOk;
}

int cmd_experiment(const Options& opt, std::ostream& out, std::ostream&) {
  ExperimentConfig config;
  if (!opt.config_path.empty()) config = load_experiment_config(opt.config_path);
  if (opt.seed) config.seed = *opt.seed;
  if (opt.budget) config.oracle_budget = *opt.budget;
  if (opt.n) config.n = *opt.n;
  if (opt.trials) config.trials = *opt.trials;
  if (opt.threads) config.threads = *opt.threads;
  if (!opt.multipliers.empty()) config.house_multipliers = opt.multipliers;
  if (!opt.lambdas.empty()) {
    config.lambdas.clear();
    for (const auto& text : opt.lambdas) {
      auto value = parse_rational(text);
      if (!value) throw std::invalid_argument("lambda '" + text + "' is not a number");
      config.lambdas.push_back(*value);
    }
  }
  if (!opt.models.empty()) {
    config.models.clear();
    for (const auto& text : opt.models) {
      auto model = parse_model(text);
      if (!model) throw std::invalid_argument("unknown model '" + text + "'");
      config.models.push_back(*model);
    }
  }
  config.validate();

  const auto records = run_sweep(config);
  const auto summary = summarize(records);
  if (opt.out_path.empty()) {
    write_trials_csv(out, records);
    out << '\n';
    write_summary_csv(out, summary);
    return kOk;
  }
  std::filesystem::create_directories(opt.out_path);
  const auto dir = std::filesystem::path(opt.out_path);
  std::ofstream trials(dir / "trials.csv"), summary_file(dir / "summary.csv");
  if (!trials || !summary_file) throw std::runtime_error("cannot write into " + opt.out_path);
  write_trials_csv(trials, records);
  write_summary_csv(summary_file, summary);
  out << "wrote " << records.size() * kSolverCodes.size() << " trial rows to "
      << (dir / "trials.csv").string() << '\n';
  out << "wrote " << summary.size() << " summary rows to " << (dir / "summary.csv").string()
      << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fair house allocation solvers"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "csv"}));
  };

  auto* solve = app.add_subcommand("solve", "Run a polynomial solver on an instance");
  solve->add_option("instance", opt.instance_path, "Instance file")->required();
  solve->add_option("problem", opt.second_arg, "Problem: " + keys_of(problems()))->required();
  solve->add_option("--out", opt.out_path, "Write the allocation to this file");
  add_format(solve);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum of an objective");
  oracle->add_option("instance", opt.instance_path, "Instance file")->required();
  oracle->add_option("objective", opt.second_arg, "Objective: " + keys_of(objectives()))
      ->required();
  oracle->add_option("constraint", opt.constraint,
                     "Constraint: none, max-usw, max-esw, complete or size>=K")
      ->required();
  oracle->add_option("--budget", opt.budget, "Maximum number of allocations to enumerate");
  oracle->add_option("--out", opt.out_path, "Write the witness allocation to this file");
  add_format(oracle);

  auto* validate = app.add_subcommand("validate", "Report the metrics of an allocation");
  validate->add_option("instance", opt.instance_path, "Instance file")->required();
  validate->add_option("allocation", opt.second_arg, "Allocation file")->required();
  add_format(validate);

  auto* experiment = app.add_subcommand("experiment", "Random-instance sweep");
  experiment->add_option("--config", opt.config_path, "YAML experiment config");
  experiment->add_option("--seed", opt.seed, "Base seed");
  experiment->add_option("--budget", opt.budget, "Oracle budget for complete cells with m > n");
  experiment->add_option("--out", opt.out_path,
                         "Directory for trials.csv and summary.csv (default: standard output)");
  experiment->add_option("--n", opt.n, "Number of agents");
  experiment->add_option("--trials", opt.trials, "Trials per cell");
  experiment->add_option("--threads", opt.threads, "Worker threads");
  experiment->add_option("--lambdas", opt.lambdas, "Edge densities");
  experiment->add_option("--multipliers", opt.multipliers, "House-count multipliers of n");
  experiment->add_option("--models", opt.models, "binary and/or weighted");
  add_format(experiment);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    if (*solve) return cmd_solve(opt, out, err);
    if (*oracle) return cmd_oracle(opt, out, err);
    if (*validate) return cmd_validate(opt, out, err);
    return cmd_experiment(opt, out, err);
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPreconditionFailed;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace fairhouse::cli
