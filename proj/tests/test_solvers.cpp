#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "moshop/errors.hpp"
#include "moshop/solvers.hpp"

using namespace moshop;
using namespace moshop::testing;

namespace {

const ObjectiveSpec kCmaxTmax = ObjectiveSpec::parse("cmax,tmax");

SolverConfig config_for(Method m, std::size_t budget, std::uint64_t seed = 1) {
  SolverConfig c;
  c.method = m;
  c.budget = budget;
  c.seed = seed;
  return c;
}

SolverConfig mosa_config(std::size_t budget, std::uint64_t seed = 1) {
  auto c = config_for(Method::mosa, budget, seed);
  c.weights = 3;
  c.initial_temperature = 10.0;
  c.cooling = 0.95;
  c.chain_length = 5;
  return c;
}

bool archive_is_consistent(const SolveResult& r, const Instance& inst, const ObjectiveSpec& spec) {
  const auto vs = r.archive.vectors();
  if (nondominated_filter(vs).size() != vs.size()) return false;
  for (const auto& e : r.archive.entries()) {
    if (count_violations(e.schedule, inst) != 0) return false;
    if (!(evaluate(e.schedule, inst, spec) == e.vector)) return false;
    if (!is_permutation_of_quota(e.sequence, inst)) return false;
  }
  return true;
}

} // namespace

TEST(GifflerThompson, SptOnT2) {
  const auto r = giffler_thompson(t2(), PriorityRule::spt, kCmaxTmax, 0);
  EXPECT_EQ(r.schedule.start(2, 1), 0);
  EXPECT_EQ(r.schedule.start(1, 1), 0);
  EXPECT_EQ(r.schedule.start(1, 2), 3);
  EXPECT_EQ(r.schedule.start(2, 2), 3);
  EXPECT_EQ(r.vector, (ObjectiveVector{7, 0}));
}

TEST(GifflerThompson, LptOnT2) {
  const auto r = giffler_thompson(t2(), PriorityRule::lpt, kCmaxTmax, 0);
  EXPECT_EQ(r.schedule.start(2, 1), 0);
  EXPECT_EQ(r.schedule.start(2, 2), 2);
  EXPECT_EQ(r.schedule.start(1, 1), 6);
  EXPECT_EQ(r.schedule.start(1, 2), 9);
  EXPECT_EQ(r.vector, (ObjectiveVector{11, 6}));
}

TEST(GifflerThompson, EddOnT2) {
  EXPECT_EQ(giffler_thompson(t2(), PriorityRule::edd, kCmaxTmax, 0).vector, (ObjectiveVector{7, 0}));
  EXPECT_THROW(giffler_thompson(t2(false), PriorityRule::edd, ObjectiveSpec::parse("cmax"), 0), SpecError);
}

TEST(GifflerThompson, SchedulesAreFeasibleAndActive) {
  Rng rng(31);
  const PriorityRule rules[] = {PriorityRule::spt, PriorityRule::lpt, PriorityRule::edd,
                                PriorityRule::fcfs, PriorityRule::mwr, PriorityRule::random};
  for (int i = 0; i < 100; ++i) {
    const auto inst = random_instance(rng, false);
    for (auto rule : rules) {
      const auto s = giffler_thompson_schedule(inst, rule, rng);
      ASSERT_EQ(count_violations(s, inst), 0u);
      ASSERT_EQ(count_active_violations(s, inst), 0u) << to_string(rule);
    }
  }
}

TEST(GifflerThompson, DecodedSemiActiveSchedulesAreNotAlwaysActive) {
  // the decoder and the GT builder yield distinct schedule classes
  Rng rng(5);
  std::size_t non_active = 0;
  for (int i = 0; i < 50; ++i) {
    const auto inst = random_instance(rng, false);
    non_active += count_active_violations(decode_semi_active(random_sequence(inst, rng), inst), inst) > 0;
  }
  EXPECT_GT(non_active, 0u);
}

TEST(PriorityPortfolio, T2) {
  const auto r = priority_portfolio(t2(), kCmaxTmax, config_for(Method::priority_portfolio, 10));
  EXPECT_EQ(r.archive.vectors(), (std::vector<ObjectiveVector>{{7, 0}}));
  EXPECT_EQ(r.evaluations, 10u);
}

TEST(PriorityPortfolio, BudgetBelowRuleCount) {
  EXPECT_THROW(priority_portfolio(t2(), kCmaxTmax, config_for(Method::priority_portfolio, 4)), ContractError);
  EXPECT_NO_THROW(priority_portfolio(t2(false), ObjectiveSpec::parse("cmax"),
                                     config_for(Method::priority_portfolio, 4)));
}

TEST(PriorityPortfolio, SingleJob) {
  Instance inst;
  inst.name = "one";
  inst.machine_count = 3;
  inst.jobs.push_back(make_job(1, {{2, 4}, {0, 1}, {1, 3}}, 5));
  const auto r = priority_portfolio(inst, ObjectiveSpec::parse("cmax,csum,tmax"),
                                    config_for(Method::priority_portfolio, 25));
  EXPECT_EQ(r.archive.size(), 1u);
}

TEST(Hillclimb, T2ReachesExactFront) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto r = hillclimb(t2(), kCmaxTmax, config_for(Method::hillclimb, 200, seed));
    EXPECT_EQ(r.archive.vectors(), (std::vector<ObjectiveVector>{{7, 0}}));
    EXPECT_LE(r.evaluations, 200u);
  }
}

TEST(Hillclimb, BudgetOneHoldsInitialEvaluation) {
  const auto cfg = config_for(Method::hillclimb, 1, 9);
  const auto r = hillclimb(t2(), kCmaxTmax, cfg);
  EXPECT_EQ(r.evaluations, 1u);
  ASSERT_EQ(r.archive.size(), 1u);
  EXPECT_EQ(r.archive.entries().front().sequence, random_sequence(t2(), std::uint64_t{9}));
}

TEST(Hillclimb, LocalOptimumTriggersRestart) {
  const auto r = hillclimb(t2(), kCmaxTmax, config_for(Method::hillclimb, 200, 3));
  EXPECT_GT(r.restarts, 0u);
}

TEST(Hillclimb, AllNeighborhoods) {
  for (auto n : {Neighborhood::adjacent_swap, Neighborhood::general_swap, Neighborhood::shift}) {
    auto cfg = config_for(Method::hillclimb, 300, 4);
    cfg.neighborhood = n;
    const auto r = hillclimb(j3x3(), ObjectiveSpec::parse("cmax,csum,tmax"), cfg);
    EXPECT_TRUE(archive_is_consistent(r, j3x3(), ObjectiveSpec::parse("cmax,csum,tmax")));
    EXPECT_LE(r.evaluations, 300u);
  }
}

TEST(ParetoRank, Examples) {
  EXPECT_EQ(pareto_rank(std::vector<ObjectiveVector>{{1, 1}, {2, 2}, {3, 0}}), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(pareto_rank(std::vector<ObjectiveVector>{{4, 4}, {4, 4}, {4, 4}}), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(pareto_rank(std::vector<ObjectiveVector>{{1, 1}, {2, 2}, {3, 3}}), (std::vector<std::size_t>{1, 2, 3}));
}

TEST(ParetoRank, LayerDefinition) {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    std::vector<ObjectiveVector> vs;
    for (int i = 0; i < 30; ++i) vs.push_back({rng.between(0, 8), rng.between(0, 8), rng.between(0, 8)});
    const auto rank = pareto_rank(vs);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = 0; j < vs.size(); ++j) {
        if (dominates(vs[j], vs[i])) ASSERT_LT(rank[j], rank[i]);
      }
      if (rank[i] > 1) {
        bool has_parent = false;
        for (std::size_t j = 0; j < vs.size(); ++j) has_parent |= rank[j] == rank[i] - 1 && dominates(vs[j], vs[i]);
        ASSERT_TRUE(has_parent);
      }
    }
  }
}

TEST(Moea, T2ReachesExactFront) {
  auto cfg = config_for(Method::moea, 400);
  cfg.population = 8;
  const auto r = moea_run(t2(), kCmaxTmax, cfg);
  EXPECT_EQ(r.archive.vectors(), (std::vector<ObjectiveVector>{{7, 0}}));
  EXPECT_LE(r.evaluations, 400u);
}

TEST(Moea, BudgetEqualToPopulationEvaluatesInitialOnly) {
  auto cfg = config_for(Method::moea, 8, 6);
  cfg.population = 8;
  const auto r = moea_run(j3x3(), ObjectiveSpec::parse("cmax,csum"), cfg);
  EXPECT_EQ(r.evaluations, 8u);
  Rng rng(6);
  std::vector<ObjectiveVector> initial;
  for (int i = 0; i < 8; ++i) initial.push_back(evaluate(decode_semi_active(random_sequence(j3x3(), rng), j3x3()),
                                                          j3x3(), ObjectiveSpec::parse("cmax,csum")));
  EXPECT_EQ(as_set(r.archive.vectors()), as_set(nondominated_filter(initial)));
}

TEST(Moea, AllCrossoversProduceConsistentArchives) {
  const auto spec = ObjectiveSpec::parse("cmax,csum,tmax");
  for (auto kind : {CrossoverKind::uobx, CrossoverKind::obx, CrossoverKind::tpox, CrossoverKind::pmx}) {
    auto cfg = config_for(Method::moea, 500, 3);
    cfg.population = 10;
    cfg.crossover = kind;
    const auto r = moea_run(j3x3(), spec, cfg);
    EXPECT_TRUE(archive_is_consistent(r, j3x3(), spec));
    EXPECT_LE(r.evaluations, 500u);
  }
}

TEST(Moea, InvalidConfig) {
  auto cfg = config_for(Method::moea, 10);
  cfg.population = 1;
  EXPECT_THROW(moea_run(t2(), kCmaxTmax, cfg), ContractError);
  cfg.population = 20;
  EXPECT_THROW(moea_run(t2(), kCmaxTmax, cfg), ContractError);
}

TEST(Mosa, AcceptProbability) {
  EXPECT_DOUBLE_EQ(mosa_accept_probability(0.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(mosa_accept_probability(-3.0, 1.0), 1.0);
  EXPECT_NEAR(mosa_accept_probability(1.0, 1.0), 0.367879, 1e-6);
  EXPECT_NEAR(mosa_accept_probability(1.0, 0.01), 0.0, 1e-40);
  EXPECT_GT(mosa_accept_probability(1.0, 0.01), 0.0);
  EXPECT_THROW(mosa_accept_probability(1.0, 0.0), ContractError);
  EXPECT_THROW(mosa_accept_probability(1.0, -1.0), ContractError);
  // monotone in delta and temperature
  EXPECT_GT(mosa_accept_probability(1.0, 2.0), mosa_accept_probability(2.0, 2.0));
  EXPECT_GT(mosa_accept_probability(1.0, 3.0), mosa_accept_probability(1.0, 2.0));
}

TEST(Mosa, MetropolisFrequency) {
  Rng rng(2718);
  const double p = mosa_accept_probability(1.0, 1.0);
  int hits = 0;
  for (int i = 0; i < 100000; ++i) hits += rng.unit() < p;
  EXPECT_NEAR(hits / 100000.0, std::exp(-1.0), 0.01);
}

TEST(Mosa, Weights) {
  const auto w = mosa_weights(2, 3);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0], (std::vector<double>{1.0, 0.0}));
  EXPECT_EQ(w[1], (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(w[2], (std::vector<double>{0.0, 1.0}));
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t n = 1; n <= 12; ++n) {
      const auto ws = mosa_weights(k, n);
      ASSERT_EQ(ws.size(), n);
      for (const auto& v : ws) {
        double sum = 0;
        for (double x : v) {
          ASSERT_GE(x, 0.0);
          sum += x;
        }
        ASSERT_NEAR(sum, 1.0, 1e-12);
      }
    }
  }
}

TEST(Mosa, T2ReachesExactFront) {
  const auto r = mosa_run(t2(), kCmaxTmax, mosa_config(600));
  EXPECT_EQ(r.archive.vectors(), (std::vector<ObjectiveVector>{{7, 0}}));
  EXPECT_LE(r.evaluations, 600u);
}

TEST(Mosa, ZeroRangeObjectiveUsesRawDelta) {
  // single-job instance: every objective has zero range, so all deltas are 0
  // and every move is accepted; the run must still finish within budget
  Instance inst;
  inst.name = "one";
  inst.machine_count = 2;
  inst.jobs.push_back(make_job(1, {{0, 2}, {1, 3}}, 4));
  const auto r = mosa_run(inst, kCmaxTmax, mosa_config(30));
  EXPECT_EQ(r.archive.vectors(), (std::vector<ObjectiveVector>{{5, 1}}));
  EXPECT_EQ(r.evaluations, 30u);
}

TEST(Mosa, BudgetBelowWeightCount) {
  EXPECT_THROW(mosa_run(t2(), kCmaxTmax, mosa_config(2)), ContractError);
}

TEST(Solvers, EvaluationAccountingAndDeterminism) {
  const auto inst = j3x3();
  const auto spec = ObjectiveSpec::parse("cmax,csum,tmax");
  for (auto m : {Method::priority_portfolio, Method::hillclimb, Method::moea, Method::mosa}) {
    for (std::size_t budget : {10u, 137u, 500u}) {
      auto cfg = config_for(m, budget, 77);
      cfg.population = 8;
      cfg.weights = 3;
      std::size_t calls = 0;
      const auto r = solve(inst, spec, cfg, [&](std::size_t) { ++calls; });
      EXPECT_EQ(calls, r.evaluations);
      EXPECT_LE(r.evaluations, budget) << to_string(m);
      EXPECT_TRUE(archive_is_consistent(r, inst, spec));
      const auto again = solve(inst, spec, cfg);
      ASSERT_EQ(again.archive.size(), r.archive.size());
      for (std::size_t i = 0; i < r.archive.size(); ++i) {
        EXPECT_EQ(again.archive.entries()[i].vector, r.archive.entries()[i].vector);
        EXPECT_EQ(again.archive.entries()[i].sequence, r.archive.entries()[i].sequence);
      }
    }
  }
}

TEST(Solvers, SmallInstanceExactFrontWithBudget2000) {
  const auto inst = j3x3();
  const auto spec = ObjectiveSpec::parse("cmax,csum,tmax");
  const auto exact = as_set(brute_force_front(inst, spec, 1680));
  for (auto m : {Method::hillclimb, Method::moea, Method::mosa}) {
    const auto r = solve(inst, spec, config_for(m, 2000, 1));
    EXPECT_EQ(as_set(r.archive.vectors()), exact) << to_string(m);
  }
}

TEST(SolverConfigTest, Validation) {
  SolverConfig c;
  EXPECT_NO_THROW(c.validate());
  c.budget = 0;
  EXPECT_THROW(c.validate(), ContractError);
  c = {};
  c.cooling = 1.0;
  EXPECT_THROW(c.validate(), ContractError);
  c = {};
  c.weights = 0;
  EXPECT_THROW(c.validate(), ContractError);
  EXPECT_EQ(method_from_string("priority"), Method::priority_portfolio);
  EXPECT_THROW(method_from_string("tabu"), ContractError);
}
