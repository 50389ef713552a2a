#include <algorithm>
#include <cmath>
#include <functional>

#include "evaluator.hpp"
#include "moshop/errors.hpp"
#include "moshop/solvers.hpp"

namespace moshop {

double mosa_accept_probability(double delta, double temperature) {
  if (!(temperature > 0.0)) throw ContractError("temperature must be positive");
  if (delta <= 0.0) return 1.0;
  return std::exp(-delta / temperature);
}

std::vector<std::vector<double>> mosa_weights(std::size_t k, std::size_t count) {
  if (k == 0 || count == 0) throw ContractError("weight generation needs k >= 1 and count >= 1");
  if (k == 1) return std::vector<std::vector<double>>(count, std::vector<double>{1.0});
  if (count == 1) return {std::vector<double>(k, 1.0 / static_cast<double>(k))};

  auto lattice_size = [k](std::size_t h) {
    // C(h + k - 1, k - 1)
    double c = 1.0;
    for (std::size_t i = 1; i < k; ++i) c = c * static_cast<double>(h + i) / static_cast<double>(i);
    return static_cast<std::size_t>(std::llround(c));
  };
  std::size_t divisions = 1;
  while (lattice_size(divisions) < count) ++divisions;

  // Lattice points with the first coordinate descending, e.g. (1,0), (.5,.5), (0,1).
  std::vector<std::vector<double>> lattice;
  std::vector<std::size_t> parts(k, 0);
  std::function<void(std::size_t, std::size_t)> emit = [&](std::size_t pos, std::size_t left) {
    if (pos + 1 == k) {
      parts[pos] = left;
      std::vector<double> w(k);
      for (std::size_t i = 0; i < k; ++i) w[i] = static_cast<double>(parts[i]) / static_cast<double>(divisions);
      lattice.push_back(std::move(w));
      return;
    }
    for (std::size_t v = left + 1; v-- > 0;) {
      parts[pos] = v;
      emit(pos + 1, left - v);
    }
  };
  emit(0, divisions);

  std::vector<std::vector<double>> out;
  out.reserve(count);
  const std::size_t last = lattice.size() - 1;
  for (std::size_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(std::llround(static_cast<double>(i * last) / static_cast<double>(count - 1)));
    out.push_back(lattice[idx]);
  }
  return out;
}

// One annealing chain per weight vector, run one after another with the
// budget split evenly (earlier chains take the remainder). Per chain the
// generator is consumed as: start sequence, then per step the move draws
// followed by one acceptance draw.
SolveResult mosa_run(const Instance& inst, const ObjectiveSpec& spec, const SolverConfig& config,
                     const EvaluationObserver& observer) {
  config.validate();
  spec.check(inst);
  Rng rng(config.seed);
  detail::Evaluator eval(inst, spec, config, observer);
  const std::size_t k = spec.size();
  const auto weights = mosa_weights(k, config.weights);

  for (std::size_t w = 0; w < weights.size(); ++w) {
    const std::size_t share = config.budget / weights.size() + (w < config.budget % weights.size() ? 1 : 0);
    const std::size_t stop_at = eval.evaluations() + share;
    const auto& weight = weights[w];

    OperationSequence current = random_sequence(inst, rng);
    auto first = eval(current);
    if (!first) break;
    ObjectiveVector cur_vec = std::move(*first);
    std::vector<std::int64_t> lo = cur_vec.values, hi = cur_vec.values;
    double temperature = config.initial_temperature;

    for (std::size_t step = 1; eval.evaluations() < stop_at; ++step) {
      OperationSequence candidate = mutate(current, config.mutation, rng);
      auto v = eval(candidate);
      if (!v) break;
      double delta = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        lo[i] = std::min(lo[i], (*v)[i]);
        hi[i] = std::max(hi[i], (*v)[i]);
        const double range = hi[i] > lo[i] ? static_cast<double>(hi[i] - lo[i]) : 1.0;
        delta += weight[i] * static_cast<double>((*v)[i] - cur_vec[i]) / range;
      }
      if (rng.unit() < mosa_accept_probability(delta, temperature)) {
        current = std::move(candidate);
        cur_vec = std::move(*v);
      }
      if (step % config.chain_length == 0) temperature *= config.cooling;
    }
  }
  return std::move(eval).finish();
}

} // namespace moshop
