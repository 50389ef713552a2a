#include <algorithm>
#include <numeric>

#include "evaluator.hpp"
#include "moshop/solvers.hpp"

namespace moshop {

namespace {

struct Individual {
  OperationSequence seq;
  ObjectiveVector vector;
};

std::vector<std::size_t> ranks_of(const std::vector<Individual>& pop) {
  std::vector<ObjectiveVector> vs;
  vs.reserve(pop.size());
  for (const auto& ind : pop) vs.push_back(ind.vector);
  return pareto_rank(vs);
}

std::size_t tournament(const std::vector<std::size_t>& rank, Rng& rng) {
  const auto a = static_cast<std::size_t>(rng.below(rank.size()));
  const auto b = static_cast<std::size_t>(rng.below(rank.size()));
  if (rank[a] != rank[b]) return rank[a] < rank[b] ? a : b;
  return rng.chance(0.5) ? a : b;
}

} // namespace

// Random numbers are drawn in this order per generation: for each offspring
// two tournaments, the crossover coin (and operator draws), the mutation coin
// (and move draws); then the elite sample.
SolveResult moea_run(const Instance& inst, const ObjectiveSpec& spec, const SolverConfig& config,
                     const EvaluationObserver& observer) {
  config.validate();
  spec.check(inst);
  Rng rng(config.seed);
  detail::Evaluator eval(inst, spec, config, observer);
  const std::size_t mu = config.population;

  std::vector<Individual> pop;
  pop.reserve(mu);
  while (pop.size() < mu) {
    OperationSequence s = random_sequence(inst, rng);
    auto v = eval(s);
    if (!v) return std::move(eval).finish();
    pop.push_back({std::move(s), std::move(*v)});
  }

  const auto elite_quota = static_cast<std::size_t>(static_cast<double>(mu) * config.elite_fraction);
  while (!eval.exhausted()) {
    const auto rank = ranks_of(pop);
    std::vector<Individual> offspring;
    offspring.reserve(mu);
    while (offspring.size() < mu) {
      const auto& p1 = pop[tournament(rank, rng)];
      const auto& p2 = pop[tournament(rank, rng)];
      OperationSequence child =
          rng.chance(config.crossover_probability) ? crossover(p1.seq, p2.seq, config.crossover, rng) : p1.seq;
      if (rng.chance(config.mutation_probability)) child = mutate(child, config.mutation, rng);
      auto v = eval(child);
      if (!v) break;
      offspring.push_back({std::move(child), std::move(*v)});
    }
    if (offspring.size() < mu) break;
    pop = std::move(offspring);

    // Elitism: archive members replace the worst-ranked individuals.
    const auto& elite_pool = eval.archive().entries();
    const std::size_t take = std::min(elite_quota, elite_pool.size());
    if (take == 0) continue;
    std::vector<std::size_t> pick(elite_pool.size());
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    rng.shuffle(pick);
    const auto new_rank = ranks_of(pop);
    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return new_rank[a] > new_rank[b]; });
    for (std::size_t e = 0; e < take; ++e) {
      const auto& entry = elite_pool[pick[e]];
      pop[order[e]] = {entry.sequence, entry.vector};
    }
  }
  return std::move(eval).finish();
}

} // namespace moshop
