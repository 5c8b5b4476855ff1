#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairhouse/core.hpp"
#include "fairhouse/oracle.hpp"

namespace fairhouse {

enum class ValuationModel { Binary, Weighted };

std::string to_string(ValuationModel model);
std::optional<ValuationModel> parse_model(std::string_view text);

struct ExperimentConfig {
  int n = 5;
  // House counts are round(multiplier * n).
  std::vector<double> house_multipliers{1.0, 2.0};
  // Edge densities in [0, 1], kept exact so CSV output and sampling agree.
  std::vector<Rational> lambdas = default_lambdas();
  std::vector<ValuationModel> models{ValuationModel::Binary};
  int trials = 100;
  std::uint64_t seed = 0;
  std::uint64_t oracle_budget = kDefaultBudget;
  // Worker threads; output order does not depend on it.
  int threads = 1;

  static std::vector<Rational> default_lambdas();
  std::vector<int> house_counts() const;
  // Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

// Reads a YAML mapping with any of: n, house_multipliers, lambdas, models,
// trials, seed, budget, threads. Missing keys keep their defaults.
ExperimentConfig parse_experiment_config(std::string_view text);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

// Each (agent, house) pair is liked independently with probability lambda.
// Binary: liked pairs get value 1. Weighted: with D the maximum degree over
// all agents and houses, an agent of degree d gets a random permutation of
// {D - d + 1, ..., D} on its liked houses. Portable: the same seed gives the
// same instance on every platform.
Instance gen_random_instance(int n, int m, const Rational& lambda, ValuationModel model,
                             std::uint64_t seed);

// Solver codes: min #envy complete, min #envy max-USW, min total envy
// complete, min total envy max-USW.
enum class SolverCode { MEC, MEMW, MTEC, MTEMW };
inline constexpr std::array<SolverCode, 4> kSolverCodes{SolverCode::MEC, SolverCode::MEMW,
                                                       SolverCode::MTEC, SolverCode::MTEMW};
std::string to_string(SolverCode code);

struct SolverOutcome {
  SolverCode solver = SolverCode::MEC;
  // False when the oracle fallback exceeded its budget; metrics are then 0.
  bool ok = true;
  int num_envious = 0;
  Rational total_envy{0};
  Rational usw{0};
};

struct TrialRecord {
  ValuationModel model = ValuationModel::Binary;
  int m = 0;
  Rational lambda{0};
  int trial = 0;
  std::uint64_t seed = 0;
  std::array<SolverOutcome, 4> outcomes;  // in kSolverCodes order
};

std::uint64_t trial_seed(std::uint64_t base, ValuationModel model, int m, const Rational& lambda,
                         int trial);

// Runs all four solvers on one instance. Complete-allocation solvers use the
// polynomial algorithms when m <= n and the oracle otherwise.
std::array<SolverOutcome, 4> run_solvers(const Instance& inst, std::uint64_t oracle_budget);

// Records in (model, m, lambda, trial) order.
std::vector<TrialRecord> run_sweep(const ExperimentConfig& config);

struct SummaryRow {
  ValuationModel model = ValuationModel::Binary;
  int m = 0;
  Rational lambda{0};
  SolverCode solver = SolverCode::MEC;
  std::string metric;  // num_envious | total_envy | usw
  Rational mean{0};
  // 1.96 * sample standard deviation / sqrt(trials); 0 for one trial.
  double ci_halfwidth = 0.0;
  int trials = 0;  // successful trials in the cell
};

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records);

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

}  // namespace fairhouse
