#include "fairhouse/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <yaml-cpp/yaml.h>

#include "fairhouse/solvers_usw.hpp"

namespace fairhouse {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) { return splitmix64(h ^ splitmix64(v)); }

// std::uniform_int_distribution is implementation-defined; rejection sampling
// on raw engine output is not.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

// True with probability lambda (exact for lambda = 0 and 1).
class Bernoulli {
 public:
  explicit Bernoulli(const Rational& lambda) {
    if (lambda >= 1) {
      always_ = true;
    } else if (lambda > 0) {
      BigInt scaled = numerator(lambda) * (BigInt(1) << 64) / denominator(lambda);
      threshold_ = static_cast<std::uint64_t>(scaled);
    }
  }
  bool operator()(std::mt19937_64& rng) const { return always_ || rng() < threshold_; }

 private:
  bool always_ = false;
  std::uint64_t threshold_ = 0;
};

Rational parse_lambda(const YAML::Node& node) {
  auto value = parse_rational(node.as<std::string>());
  if (!value) throw std::invalid_argument("lambda '" + node.as<std::string>() + "' is not a number");
  return *value;
}

std::string format_ci(double value) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << value;
  return os.str();
}

}  // namespace

std::string to_string(ValuationModel model) {
  return model == ValuationModel::Binary ? "binary" : "weighted";
}

std::optional<ValuationModel> parse_model(std::string_view text) {
  if (text == "binary") return ValuationModel::Binary;
  if (text == "weighted") return ValuationModel::Weighted;
  return std::nullopt;
}

std::string to_string(SolverCode code) {
  switch (code) {
    case SolverCode::MEC: return "MEC";
    case SolverCode::MEMW: return "MEMW";
    case SolverCode::MTEC: return "MTEC";
    case SolverCode::MTEMW: return "MTEMW";
  }
  return "?";
}

std::vector<Rational> ExperimentConfig::default_lambdas() {
  std::vector<Rational> out;
  for (int i = 1; i <= 10; ++i) out.emplace_back(i, 10);
  return out;
}

std::vector<int> ExperimentConfig::house_counts() const {
  std::vector<int> out;
  for (double mult : house_multipliers) out.push_back(static_cast<int>(std::lround(mult * n)));
  return out;
}

void ExperimentConfig::validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
  if (house_multipliers.empty() || lambdas.empty() || models.empty())
    throw std::invalid_argument("house_multipliers, lambdas and models must be non-empty");
  for (int m : house_counts())
    if (m < 1) throw std::invalid_argument("every house multiplier must give at least one house");
  for (const Rational& l : lambdas)
    if (l < 0 || l > 1) throw std::invalid_argument("lambda " + format_rational(l) + " outside [0, 1]");
}

ExperimentConfig parse_experiment_config(std::string_view text) {
  ExperimentConfig config;
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  if (root.IsNull()) return config;
  if (!root.IsMap()) throw ParseError("experiment config must be a mapping", 1, 1);
  try {
    for (auto entry : root) {
      const std::string key = entry.first.as<std::string>();
      const YAML::Node& v = entry.second;
      if (key == "n") {
        config.n = v.as<int>();
      } else if (key == "house_multipliers") {
        config.house_multipliers = v.as<std::vector<double>>();
      } else if (key == "lambdas") {
        config.lambdas.clear();
        for (const auto& item : v) config.lambdas.push_back(parse_lambda(item));
      } else if (key == "models") {
        config.models.clear();
        for (const auto& item : v) {
          auto model = parse_model(item.as<std::string>());
          if (!model) throw ParseError("unknown model '" + item.as<std::string>() + "'",
                                       item.Mark().line + 1, item.Mark().column + 1, key);
          config.models.push_back(*model);
        }
      } else if (key == "trials") {
        config.trials = v.as<int>();
      } else if (key == "seed") {
        config.seed = v.as<std::uint64_t>();
      } else if (key == "budget") {
        config.oracle_budget = v.as<std::uint64_t>();
      } else if (key == "threads") {
        config.threads = v.as<int>();
      } else {
        throw ParseError("unknown key", entry.first.Mark().line + 1,
                         entry.first.Mark().column + 1, key);
      }
    }
  } catch (const YAML::Exception& e) {
    throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  config.validate();
  return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment_config(buffer.str());
}

Instance gen_random_instance(int n, int m, const Rational& lambda, ValuationModel model,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Bernoulli coin(lambda);
  std::vector<std::vector<char>> liked(static_cast<std::size_t>(n),
                                       std::vector<char>(static_cast<std::size_t>(m), 0));
  for (auto& row : liked)
    for (auto& cell : row) cell = coin(rng);

  ValueMatrix<Rational> values = ValueMatrix<Rational>::Zero(n, m);
  if (model == ValuationModel::Binary) {
    for (int i = 0; i < n; ++i)
      for (int h = 0; h < m; ++h)
        if (liked[static_cast<std::size_t>(i)][static_cast<std::size_t>(h)]) values(i, h) = 1;
    return Instance(std::move(values));
  }

  std::vector<int> agent_degree(static_cast<std::size_t>(n), 0);
  std::vector<int> house_degree(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < n; ++i)
    for (int h = 0; h < m; ++h)
      if (liked[static_cast<std::size_t>(i)][static_cast<std::size_t>(h)]) {
        ++agent_degree[static_cast<std::size_t>(i)];
        ++house_degree[static_cast<std::size_t>(h)];
      }
  const int max_degree = std::max(*std::max_element(agent_degree.begin(), agent_degree.end()),
                                  *std::max_element(house_degree.begin(), house_degree.end()));
  for (int i = 0; i < n; ++i) {
    const int d = agent_degree[static_cast<std::size_t>(i)];
    std::vector<int> pool;
    for (int v = max_degree - d + 1; v <= max_degree; ++v) pool.push_back(v);
    for (std::size_t k = pool.size(); k > 1; --k)
      std::swap(pool[k - 1], pool[uniform_below(rng, k)]);
    std::size_t next = 0;
    for (int h = 0; h < m; ++h)
      if (liked[static_cast<std::size_t>(i)][static_cast<std::size_t>(h)]) values(i, h) = pool[next++];
  }
  return Instance(std::move(values));
}

std::uint64_t trial_seed(std::uint64_t base, ValuationModel model, int m, const Rational& lambda,
                         int trial) {
  const auto milli = static_cast<std::uint64_t>(
      static_cast<std::int64_t>(std::llround(to_double(lambda) * 1000.0)));
  std::uint64_t h = splitmix64(base);
  h = mix(h, static_cast<std::uint64_t>(model));
  h = mix(h, static_cast<std::uint64_t>(m));
  h = mix(h, milli);
  return mix(h, static_cast<std::uint64_t>(trial));
}

std::array<SolverOutcome, 4> run_solvers(const Instance& inst, std::uint64_t oracle_budget) {
  const bool polynomial_complete = inst.house_count() <= inst.agent_count();
  std::array<SolverOutcome, 4> out;
  for (std::size_t s = 0; s < kSolverCodes.size(); ++s) {
    SolverOutcome& o = out[s];
    o.solver = kSolverCodes[s];
    Allocation alloc;
    try {
      switch (o.solver) {
        case SolverCode::MEC:
          alloc = polynomial_complete
                      ? min_num_envy_complete(inst)
                      : oracle_solve(inst, Objective::MinNumEnvy, Constraint::complete(),
                                     oracle_budget).witness;
          break;
        case SolverCode::MTEC:
          alloc = polynomial_complete
                      ? min_total_envy_complete_mleqn(inst)
                      : oracle_solve(inst, Objective::MinTotalEnvy, Constraint::complete(),
                                     oracle_budget).witness;
          break;
        case SolverCode::MEMW:
          alloc = min_num_envy_max_usw(inst);
          break;
        case SolverCode::MTEMW:
          alloc = min_total_envy_max_usw(inst);
          break;
      }
    } catch (const BudgetExceeded&) {
      o.ok = false;
      continue;
    }
    const EnvyReport report = evaluate(inst, alloc);
    o.num_envious = report.num_envious;
    o.total_envy = report.total_envy;
    o.usw = report.usw;
  }
  return out;
}

std::vector<TrialRecord> run_sweep(const ExperimentConfig& config) {
  config.validate();
  std::vector<TrialRecord> records;
  for (ValuationModel model : config.models)
    for (int m : config.house_counts())
      for (const Rational& lambda : config.lambdas)
        for (int t = 0; t < config.trials; ++t) {
          TrialRecord r;
          r.model = model;
          r.m = m;
          r.lambda = lambda;
          r.trial = t;
          r.seed = trial_seed(config.seed, model, m, lambda, t);
          records.push_back(std::move(r));
        }

  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t k = begin; k < records.size(); k += stride) {
      TrialRecord& r = records[k];
      const Instance inst = gen_random_instance(config.n, r.m, r.lambda, r.model, r.seed);
      r.outcomes = run_solvers(inst, config.oracle_budget);
    }
  };
  const auto workers = static_cast<std::size_t>(config.threads);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }
  return records;
}

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records) {
  using CellKey = std::tuple<int, int, Rational>;
  // Keeps first-seen cell order so the summary follows the sweep order.
  std::vector<CellKey> order;
  std::map<CellKey, std::vector<const TrialRecord*>> cells;
  for (const TrialRecord& r : records) {
    CellKey key{static_cast<int>(r.model), r.m, r.lambda};
    auto [it, inserted] = cells.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.push_back(&r);
  }

  static const std::array<std::string, 3> kMetrics{"num_envious", "total_envy", "usw"};
  std::vector<SummaryRow> rows;
  for (const CellKey& key : order) {
    const auto& trials = cells[key];
    for (std::size_t s = 0; s < kSolverCodes.size(); ++s) {
      for (const std::string& metric : kMetrics) {
        std::vector<Rational> samples;
        for (const TrialRecord* r : trials) {
          const SolverOutcome& o = r->outcomes[s];
          if (!o.ok) continue;
          if (metric == "num_envious") samples.emplace_back(o.num_envious);
          else if (metric == "total_envy") samples.push_back(o.total_envy);
          else samples.push_back(o.usw);
        }
        SummaryRow row;
        row.model = static_cast<ValuationModel>(std::get<0>(key));
        row.m = std::get<1>(key);
        row.lambda = std::get<2>(key);
        row.solver = kSolverCodes[s];
        row.metric = metric;
        row.trials = static_cast<int>(samples.size());
        if (!samples.empty()) {
          Rational sum = 0;
          for (const Rational& x : samples) sum += x;
          row.mean = sum / static_cast<int>(samples.size());
        }
        if (samples.size() > 1) {
          Rational ss = 0;
          for (const Rational& x : samples) ss += (x - row.mean) * (x - row.mean);
          const double variance = to_double(ss / static_cast<int>(samples.size() - 1));
          row.ci_halfwidth = 1.96 * std::sqrt(variance) / std::sqrt(static_cast<double>(samples.size()));
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << "model,m,lambda,trial,seed,solver,num_envious,total_envy,usw,status\n";
  for (const TrialRecord& r : records) {
    for (const SolverOutcome& o : r.outcomes) {
      out << to_string(r.model) << ',' << r.m << ',' << format_rational(r.lambda) << ','
          << r.trial << ',' << r.seed << ',' << to_string(o.solver) << ',';
      if (o.ok) {
        out << o.num_envious << ',' << format_rational(o.total_envy) << ','
            << format_rational(o.usw) << ",ok\n";
      } else {
        out << ",,,budget_exceeded\n";
      }
    }
  }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "model,m,lambda,solver,metric,mean,ci_halfwidth,trials\n";
  for (const SummaryRow& row : rows) {
    out << to_string(row.model) << ',' << row.m << ',' << format_rational(row.lambda) << ','
        << to_string(row.solver) << ',' << row.metric << ',';
    if (row.trials > 0) out << format_rational(row.mean);
    out << ',' << format_ci(row.ci_halfwidth) << ',' << row.trials << '\n';
  }
}

}  // namespace fairhouse
