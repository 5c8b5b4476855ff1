#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "fairhouse/experiments.hpp"
#include "fairhouse/oracle.hpp"
#include "fairhouse/solvers_usw.hpp"
#include "support/reference.hpp"

namespace fairhouse {
namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.n = 4;
  c.house_multipliers = {1.0, 1.5};
  c.lambdas = {Rational(3, 10), Rational(7, 10)};
  c.models = {ValuationModel::Binary, ValuationModel::Weighted};
  c.trials = 3;
  c.seed = 99;
  return c;
}

TEST(GeneratorTest, ExtremeDensities) {
  for (auto model : {ValuationModel::Binary, ValuationModel::Weighted}) {
    const Instance full = gen_random_instance(4, 6, Rational(1), model, 5);
    const Instance empty = gen_random_instance(4, 6, Rational(0), model, 5);
    for (int i = 0; i < 4; ++i)
      for (int h = 0; h < 6; ++h) {
        EXPECT_GT(full.value(i, h), 0);
        EXPECT_EQ(empty.value(i, h), 0);
      }
  }
}

TEST(GeneratorTest, DeterministicPerSeed) {
  const Rational l(1, 2);
  EXPECT_EQ(ref::flat(gen_random_instance(5, 7, l, ValuationModel::Weighted, 17)),
            ref::flat(gen_random_instance(5, 7, l, ValuationModel::Weighted, 17)));
  EXPECT_NE(ref::flat(gen_random_instance(5, 7, l, ValuationModel::Weighted, 17)),
            ref::flat(gen_random_instance(5, 7, l, ValuationModel::Weighted, 18)));
}

TEST(GeneratorTest, WeightedValuesFollowDegrees) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4), m = 2 + static_cast<int>(seed % 7);
    const Instance inst = gen_random_instance(n, m, Rational(1, 2), ValuationModel::Weighted, seed);
    int max_degree = 0;
    std::vector<int> agent_deg(n, 0), house_deg(m, 0);
    for (int i = 0; i < n; ++i)
      for (int h = 0; h < m; ++h)
        if (inst.value(i, h) > 0) {
          ++agent_deg[i];
          ++house_deg[h];
        }
    for (int d : agent_deg) max_degree = std::max(max_degree, d);
    for (int d : house_deg) max_degree = std::max(max_degree, d);
    for (int i = 0; i < n; ++i) {
      std::set<int> got;
      for (int h = 0; h < m; ++h)
        if (inst.value(i, h) > 0) got.insert(static_cast<int>(*to_int64(inst.value(i, h))));
      std::set<int> want;
      for (int v = max_degree - agent_deg[i] + 1; v <= max_degree; ++v) want.insert(v);
      ASSERT_EQ(got, want) << "seed " << seed << " agent " << i;
    }
  }
}

TEST(GeneratorTest, DensityIsRoughlyLambda) {
  int liked = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = gen_random_instance(5, 10, Rational(3, 10), ValuationModel::Binary, seed);
    for (Eigen::Index k = 0; k < inst.values.size(); ++k) liked += inst.values.data()[k] > 0;
    total += static_cast<int>(inst.values.size());
  }
  EXPECT_NEAR(static_cast<double>(liked) / total, 0.3, 0.02);
}

TEST(ConfigTest, HouseCountsRound) {
  ExperimentConfig c;
  c.house_multipliers = {1.0, 1.6, 2.0};
  EXPECT_EQ(c.house_counts(), (std::vector<int>{5, 8, 10}));
}

TEST(ConfigTest, ParsesYaml) {
  const ExperimentConfig c = parse_experiment_config(
      "n: 3\nhouse_multipliers: [1, 2]\nlambdas: [0.5, 1]\nmodels: [weighted]\n"
      "trials: 4\nseed: 12\nthreads: 2\n");
  EXPECT_EQ(c.n, 3);
  EXPECT_EQ(c.lambdas, (std::vector<Rational>{Rational(1, 2), Rational(1)}));
  EXPECT_EQ(c.models, (std::vector<ValuationModel>{ValuationModel::Weighted}));
  EXPECT_EQ(c.trials, 4);
  EXPECT_EQ(c.seed, 12u);
  EXPECT_EQ(c.threads, 2);
}

TEST(ConfigTest, RejectsBadValues) {
  EXPECT_THROW(parse_experiment_config("lambdas: [1.5]\n"), std::invalid_argument);
  EXPECT_THROW(parse_experiment_config("trials: 0\n"), std::invalid_argument);
  EXPECT_THROW(parse_experiment_config("models: [ordinal]\n"), ParseError);
  EXPECT_THROW(parse_experiment_config("speed: 3\n"), ParseError);
}

TEST(SweepTest, RecordLayoutAndOrder) {
  const auto records = run_sweep(small_config());
  ASSERT_EQ(records.size(), 2u * 2u * 2u * 3u);
  EXPECT_EQ(records[0].model, ValuationModel::Binary);
  EXPECT_EQ(records[0].m, 4);
  EXPECT_EQ(records[1].trial, 1);
  EXPECT_EQ(records.back().model, ValuationModel::Weighted);
  EXPECT_EQ(records.back().m, 6);
}

TEST(SweepTest, MetricsAreConsistentWithSolvers) {
  const ExperimentConfig config = small_config();
  for (const TrialRecord& r : run_sweep(config)) {
    const Instance inst = gen_random_instance(config.n, r.m, r.lambda, r.model, r.seed);
    const Rational best = max_utilitarian_welfare(inst);
    const auto& mec = r.outcomes[0];
    const auto& memw = r.outcomes[1];
    const auto& mtec = r.outcomes[2];
    const auto& mtemw = r.outcomes[3];
    for (const auto& o : r.outcomes) ASSERT_TRUE(o.ok);
    ASSERT_EQ(memw.usw, best);
    ASSERT_EQ(mtemw.usw, best);
    ASSERT_LE(mtemw.total_envy, memw.total_envy);
    ASSERT_LE(mec.num_envious, mtec.num_envious);
    ASSERT_EQ(Rational(mec.num_envious),
              oracle_solve(inst, Objective::MinNumEnvy, Constraint::complete()).value);
    const Rational best_te = oracle_solve(inst, Objective::MinTotalEnvy, Constraint::complete()).value;
    if (r.model == ValuationModel::Binary || r.m > config.n) {
      ASSERT_LE(mtec.total_envy, mec.total_envy);
      ASSERT_EQ(mtec.total_envy, best_te);
    } else {
      ASSERT_GE(mtec.total_envy, best_te);
    }
  }
}

TEST(SweepTest, ThreadCountDoesNotChangeOutput) {
  ExperimentConfig one = small_config(), four = small_config();
  four.threads = 4;
  std::ostringstream a, b;
  write_trials_csv(a, run_sweep(one));
  write_trials_csv(b, run_sweep(four));
  EXPECT_EQ(a.str(), b.str());
}

TEST(SweepTest, FullBinaryDensityWithSpareHousesHasNoEnvy) {
  ExperimentConfig c;
  c.house_multipliers = {2.0};
  c.lambdas = {Rational(1)};
  c.trials = 5;
  for (const TrialRecord& r : run_sweep(c)) {
    EXPECT_EQ(r.outcomes[1].num_envious, 0);
    EXPECT_EQ(r.outcomes[0].num_envious, 0);
  }
}

TEST(SweepTest, CompleteUnitGraphGivesFullWelfare) {
  ExperimentConfig c;
  c.house_multipliers = {1.0};
  c.lambdas = {Rational(1)};
  c.trials = 3;
  for (const TrialRecord& r : run_sweep(c))
    for (const auto& o : r.outcomes) EXPECT_EQ(o.usw, Rational(5));
}

TEST(SweepTest, BudgetFailureIsRecordedNotThrown) {
  ExperimentConfig c;
  c.n = 3;
  c.house_multipliers = {2.0};
  c.lambdas = {Rational(1, 2)};
  c.trials = 1;
  c.oracle_budget = 10;
  const auto records = run_sweep(c);
  EXPECT_FALSE(records[0].outcomes[0].ok);
  EXPECT_TRUE(records[0].outcomes[1].ok);
  std::ostringstream out;
  write_trials_csv(out, records);
  EXPECT_NE(out.str().find("MEC,,,,budget_exceeded"), std::string::npos);
}

TEST(SummaryTest, MeanAndConfidenceInterval) {
  std::vector<TrialRecord> records(2);
  records[0].outcomes[0].total_envy = 0;
  records[1].outcomes[0].total_envy = 2;
  records[1].trial = 1;
  const auto rows = summarize(records);
  const auto it = std::find_if(rows.begin(), rows.end(), [](const SummaryRow& r) {
    return r.solver == SolverCode::MEC && r.metric == "total_envy";
  });
  ASSERT_NE(it, rows.end());
  EXPECT_EQ(it->mean, Rational(1));
  EXPECT_NEAR(it->ci_halfwidth, 1.96 * std::sqrt(2.0) / std::sqrt(2.0), 1e-12);
  EXPECT_EQ(it->trials, 2);
}

TEST(SummaryTest, IdenticalRecordsHaveZeroWidth) {
  std::vector<TrialRecord> records(5);
  for (const SummaryRow& row : summarize(records)) EXPECT_EQ(row.ci_halfwidth, 0.0);
}

TEST(SummaryTest, CompleteTotalEnvyDominanceCarriesToMeans) {
  const auto rows = summarize(run_sweep(small_config()));
  for (const SummaryRow& mtec : rows) {
    if (mtec.solver != SolverCode::MTEC || mtec.metric != "total_envy") continue;
    for (const SummaryRow& mec : rows)
      if (mec.solver == SolverCode::MEC && mec.metric == "total_envy" && mec.m == mtec.m &&
          (mec.model == ValuationModel::Binary || mec.m > 4) &&
          mec.lambda == mtec.lambda && mec.model == mtec.model)
        EXPECT_LE(mtec.mean, mec.mean);
  }
}

TEST(CsvTest, Headers) {
  std::ostringstream trials, summary;
  write_trials_csv(trials, {});
  write_summary_csv(summary, {});
  EXPECT_EQ(trials.str(), "model,m,lambda,trial,seed,solver,num_envious,total_envy,usw,status\n");
  EXPECT_EQ(summary.str(), "model,m,lambda,solver,metric,mean,ci_halfwidth,trials\n");
}

}  // namespace
}  // namespace fairhouse
