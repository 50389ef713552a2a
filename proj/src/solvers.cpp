#include "moshop/solvers.hpp"

#include <array>
#include <string>
#include <utility>

#include "moshop/errors.hpp"

namespace moshop {

namespace {

template <class Enum, std::size_t N>
Enum lookup(const std::array<std::pair<std::string_view, Enum>, N>& table, std::string_view name,
            const char* what) {
  for (const auto& [key, value] : table) {
    if (key == name) return value;
  }
  throw ContractError(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

template <class Enum, std::size_t N>
std::string_view reverse_lookup(const std::array<std::pair<std::string_view, Enum>, N>& table, Enum value) {
  for (const auto& [key, v] : table) {
    if (v == value) return key;
  }
  return "?";
}

constexpr std::array<std::pair<std::string_view, Method>, 4> kMethods{{
    {"priority", Method::priority_portfolio},
    {"hillclimb", Method::hillclimb},
    {"moea", Method::moea},
    {"mosa", Method::mosa},
}};

constexpr std::array<std::pair<std::string_view, PriorityRule>, 6> kRules{{
    {"spt", PriorityRule::spt},
    {"lpt", PriorityRule::lpt},
    {"edd", PriorityRule::edd},
    {"fcfs", PriorityRule::fcfs},
    {"mwr", PriorityRule::mwr},
    {"random", PriorityRule::random},
}};

constexpr std::array<std::pair<std::string_view, CrossoverKind>, 4> kCrossovers{{
    {"uobx", CrossoverKind::uobx},
    {"obx", CrossoverKind::obx},
    {"tpox", CrossoverKind::tpox},
    {"pmx", CrossoverKind::pmx},
}};

constexpr std::array<std::pair<std::string_view, MutationKind>, 2> kMutations{{
    {"swap", MutationKind::swap},
    {"shift", MutationKind::shift},
}};

constexpr std::array<std::pair<std::string_view, Neighborhood>, 3> kNeighborhoods{{
    {"adjacent_swap", Neighborhood::adjacent_swap},
    {"general_swap", Neighborhood::general_swap},
    {"shift", Neighborhood::shift},
}};

} // namespace

std::string_view to_string(Method m) { return reverse_lookup(kMethods, m); }
std::string_view to_string(PriorityRule r) { return reverse_lookup(kRules, r); }
std::string_view to_string(CrossoverKind c) { return reverse_lookup(kCrossovers, c); }
std::string_view to_string(MutationKind m) { return reverse_lookup(kMutations, m); }
std::string_view to_string(Neighborhood n) { return reverse_lookup(kNeighborhoods, n); }

Method method_from_string(std::string_view name) {
  if (name == "priority_portfolio") return Method::priority_portfolio;
  return lookup(kMethods, name, "method");
}
PriorityRule priority_rule_from_string(std::string_view name) { return lookup(kRules, name, "priority rule"); }
CrossoverKind crossover_from_string(std::string_view name) { return lookup(kCrossovers, name, "crossover"); }
MutationKind mutation_from_string(std::string_view name) { return lookup(kMutations, name, "mutation"); }
Neighborhood neighborhood_from_string(std::string_view name) {
  return lookup(kNeighborhoods, name, "neighborhood");
}

void SolverConfig::validate() const {
  if (budget < 1) throw ContractError("budget must be at least 1");
  if (archive_capacity && *archive_capacity == 0) throw ContractError("archive capacity must be positive");
  if (points < 1) throw ContractError("hillclimb needs at least one point");
  if (method == Method::moea && population < 2) throw ContractError("moea population must be at least 2");
  if (method == Method::moea && budget < population) throw ContractError("moea budget must cover the population");
  if (!(crossover_probability >= 0.0 && crossover_probability <= 1.0)) {
    throw ContractError("crossover probability must lie in [0, 1]");
  }
  if (!(mutation_probability >= 0.0 && mutation_probability <= 1.0)) {
    throw ContractError("mutation probability must lie in [0, 1]");
  }
  if (!(elite_fraction >= 0.0 && elite_fraction <= 1.0)) throw ContractError("elite fraction must lie in [0, 1]");
  if (weights < 1) throw ContractError("mosa needs at least one weight vector");
  if (method == Method::mosa && budget < weights) throw ContractError("mosa budget must cover one start per weight");
  if (!(initial_temperature > 0.0)) throw ContractError("initial temperature must be positive");
  if (!(cooling > 0.0 && cooling < 1.0)) throw ContractError("cooling factor must lie in (0, 1)");
  if (chain_length < 1) throw ContractError("chain length must be at least 1");
}

SolveResult solve(const Instance& inst, const ObjectiveSpec& spec, const SolverConfig& config,
                  const EvaluationObserver& observer) {
  switch (config.method) {
    case Method::priority_portfolio: return priority_portfolio(inst, spec, config, observer);
    case Method::hillclimb: return hillclimb(inst, spec, config, observer);
    case Method::moea: return moea_run(inst, spec, config, observer);
    case Method::mosa: return mosa_run(inst, spec, config, observer);
  }
  throw ContractError("unknown method");
}

std::vector<std::size_t> pareto_rank(std::span<const ObjectiveVector> vectors) {
  std::vector<std::size_t> rank(vectors.size(), 0);
  std::size_t assigned = 0;
  for (std::size_t layer = 1; assigned < vectors.size(); ++layer) {
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (rank[i] != 0) continue;
      bool dominated = false;
      for (std::size_t j = 0; j < vectors.size() && !dominated; ++j) {
        dominated = rank[j] == 0 && dominates(vectors[j], vectors[i]);
      }
      if (!dominated) current.push_back(i);
    }
    for (std::size_t i : current) rank[i] = layer;
    assigned += current.size();
  }
  return rank;
}

} // namespace moshop
