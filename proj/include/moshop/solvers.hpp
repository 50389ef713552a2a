#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "moshop/model.hpp"
#include "moshop/pareto.hpp"
#include "moshop/rng.hpp"

namespace moshop {

enum class Method { priority_portfolio, hillclimb, moea, mosa };
enum class PriorityRule { spt, lpt, edd, fcfs, mwr, random };
enum class CrossoverKind { uobx, obx, tpox, pmx };
enum class MutationKind { swap, shift };
enum class Neighborhood { adjacent_swap, general_swap, shift };

std::string_view to_string(Method m);
std::string_view to_string(PriorityRule r);
std::string_view to_string(CrossoverKind c);
std::string_view to_string(MutationKind m);
std::string_view to_string(Neighborhood n);
// Each parser throws ContractError on an unknown name. Method accepts the
// alias "priority" for the portfolio.
Method method_from_string(std::string_view name);
PriorityRule priority_rule_from_string(std::string_view name);
CrossoverKind crossover_from_string(std::string_view name);
MutationKind mutation_from_string(std::string_view name);
Neighborhood neighborhood_from_string(std::string_view name);

struct SolverConfig {
  Method method = Method::moea;
  std::size_t budget = 1000; // maximum objective evaluations
  std::uint64_t seed = 1;
  std::optional<std::size_t> archive_capacity;

  // hillclimb
  std::size_t points = 4;
  Neighborhood neighborhood = Neighborhood::general_swap;

  // moea
  std::size_t population = 20;
  CrossoverKind crossover = CrossoverKind::tpox;
  double crossover_probability = 0.9;
  double mutation_probability = 0.5;
  double elite_fraction = 0.25;

  // moea and mosa
  MutationKind mutation = MutationKind::swap;

  // mosa
  std::size_t weights = 5;
  double initial_temperature = 10.0;
  double cooling = 0.95;
  std::size_t chain_length = 5;

  // Throws ContractError on out-of-range parameters.
  void validate() const;

  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

struct SolveResult {
  Archive archive;
  std::size_t evaluations = 0;
  std::size_t restarts = 0; // hillclimb: points restarted at a local optimum
};

// Called after every objective evaluation with the running count.
using EvaluationObserver = std::function<void(std::size_t)>;

// --- genotype operators -----------------------------------------------------

// Child takes parent 1's genes where `inherit` is true. The other positions
// are filled left to right from parent 2, reading first the genes parent 2
// holds at those positions and then the rest, each accepted only while its
// job still has unused quota.
OperationSequence quota_fill(const OperationSequence& p1, const OperationSequence& p2,
                             const std::vector<bool>& inherit);

// Two-point order crossover keeping parent 1's window [first, last].
OperationSequence tpox(const OperationSequence& p1, const OperationSequence& p2, std::size_t first,
                       std::size_t last);
// Partially mapped crossover on window [first, last], quota-repaired.
OperationSequence pmx(const OperationSequence& p1, const OperationSequence& p2, std::size_t first,
                      std::size_t last);

// Throws ContractError if the parents are not permutations of the same multiset.
OperationSequence crossover(const OperationSequence& p1, const OperationSequence& p2, CrossoverKind kind,
                            Rng& rng);
OperationSequence crossover(const OperationSequence& p1, const OperationSequence& p2, CrossoverKind kind,
                            std::uint64_t seed);

OperationSequence swap_genes(OperationSequence s, std::size_t i, std::size_t j);
// Removes the gene at `from` and reinserts it so that it lands at `to`.
OperationSequence shift_gene(OperationSequence s, std::size_t from, std::size_t to);

OperationSequence mutate(const OperationSequence& s, MutationKind kind, Rng& rng);
OperationSequence mutate(const OperationSequence& s, MutationKind kind, std::uint64_t seed);

// --- priority rules ---------------------------------------------------------

struct RuleOutcome {
  Schedule schedule;
  ObjectiveVector vector;
};

// Active schedule generation: repeatedly take the schedulable operation with
// the earliest completion C* (machine M*), collect the operations on M* that
// could start before C*, and dispatch one of them by `rule`.
Schedule giffler_thompson_schedule(const Instance& inst, PriorityRule rule, Rng& rng);
RuleOutcome giffler_thompson(const Instance& inst, PriorityRule rule, const ObjectiveSpec& spec,
                             std::uint64_t seed);

// Deterministic rules usable on `inst` (EDD only with due dates).
std::vector<PriorityRule> applicable_rules(const Instance& inst);

// --- method families --------------------------------------------------------

SolveResult priority_portfolio(const Instance& inst, const ObjectiveSpec& spec, const SolverConfig& config,
                               const EvaluationObserver& observer = {});
SolveResult hillclimb(const Instance& inst, const ObjectiveSpec& spec, const SolverConfig& config,
                      const EvaluationObserver& observer = {});
SolveResult moea_run(const Instance& inst, const ObjectiveSpec& spec, const SolverConfig& config,
                     const EvaluationObserver& observer = {});
SolveResult mosa_run(const Instance& inst, const ObjectiveSpec& spec, const SolverConfig& config,
                     const EvaluationObserver& observer = {});

// Dispatches on config.method.
SolveResult solve(const Instance& inst, const ObjectiveSpec& spec, const SolverConfig& config,
                  const EvaluationObserver& observer = {});

// Nondominated layer index (1 = first front) of every vector.
std::vector<std::size_t> pareto_rank(std::span<const ObjectiveVector> vectors);

// Metropolis acceptance: 1 for delta <= 0, exp(-delta / t) otherwise.
double mosa_accept_probability(double delta, double temperature);

// `count` weight vectors on the k-simplex lattice, spread evenly over it.
std::vector<std::vector<double>> mosa_weights(std::size_t k, std::size_t count);

} // namespace moshop
