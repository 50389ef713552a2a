#include <algorithm>
#include <limits>

#include "evaluator.hpp"
#include "moshop/errors.hpp"
#include "moshop/solvers.hpp"

namespace moshop {

namespace {

struct Candidate {
  std::size_t job; // 0-based
  const Operation* op;
  Time earliest_start;
  Time ready; // when the job itself became available
  Time remaining_work;
};

// Strict "a is preferred over b" under `rule`; ties fall through to job id.
bool preferred(const Candidate& a, const Candidate& b, PriorityRule rule, const Instance& inst) {
  auto key = [&](const Candidate& c) -> Time {
    switch (rule) {
      case PriorityRule::spt: return c.op->duration;
      case PriorityRule::lpt: return -c.op->duration;
      case PriorityRule::edd: return *inst.jobs[c.job].due;
      case PriorityRule::fcfs: return c.ready;
      case PriorityRule::mwr: return -c.remaining_work;
      case PriorityRule::random: return 0;
    }
    return 0;
  };
  const Time ka = key(a), kb = key(b);
  if (ka != kb) return ka < kb;
  return a.job < b.job;
}

} // namespace

Schedule giffler_thompson_schedule(const Instance& inst, PriorityRule rule, Rng& rng) {
  if (rule == PriorityRule::edd && !inst.has_due_dates()) {
    throw SpecError("EDD dispatching needs a due date on every job");
  }
  const std::size_t n = inst.job_count();
  std::vector<std::size_t> next(n, 0);
  std::vector<Time> job_ready(n);
  std::vector<Time> remaining(n, 0);
  std::vector<Time> machine_free(static_cast<std::size_t>(inst.machine_count), 0);
  std::vector<std::vector<Time>> starts(n);
  for (std::size_t j = 0; j < n; ++j) {
    job_ready[j] = inst.jobs[j].release;
    starts[j].assign(inst.jobs[j].operations.size(), 0);
    for (const auto& op : inst.jobs[j].operations) remaining[j] += op.duration;
  }

  std::vector<Candidate> schedulable;
  std::vector<Candidate> conflict;
  for (std::size_t placed = 0, total = inst.operation_count(); placed < total; ++placed) {
    schedulable.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (next[j] == inst.jobs[j].operations.size()) continue;
      const Operation& op = inst.jobs[j].operations[next[j]];
      const Time est = std::max(job_ready[j], machine_free[static_cast<std::size_t>(op.machine)]);
      schedulable.push_back({j, &op, est, job_ready[j], remaining[j]});
    }
    // C*: earliest completion; ties by machine index, then job id
    const Candidate* pivot = &schedulable.front();
    for (const auto& c : schedulable) {
      const Time ec = c.earliest_start + c.op->duration;
      const Time ep = pivot->earliest_start + pivot->op->duration;
      if (ec < ep || (ec == ep && c.op->machine < pivot->op->machine)) pivot = &c;
    }
    const Time c_star = pivot->earliest_start + pivot->op->duration;
    const int m_star = pivot->op->machine;

    conflict.clear();
    for (const auto& c : schedulable) {
      if (c.op->machine == m_star && (c.earliest_start < c_star || &c == pivot)) conflict.push_back(c);
    }
    const Candidate* chosen = &conflict.front();
    if (rule == PriorityRule::random) {
      chosen = &conflict[static_cast<std::size_t>(rng.below(conflict.size()))];
    } else {
      for (const auto& c : conflict) {
        if (preferred(c, *chosen, rule, inst)) chosen = &c;
      }
    }

    const std::size_t j = chosen->job;
    const Operation& op = *chosen->op;
    starts[j][next[j]] = chosen->earliest_start;
    job_ready[j] = chosen->earliest_start + op.duration;
    if (op.duration > 0) machine_free[static_cast<std::size_t>(op.machine)] = job_ready[j];
    remaining[j] -= op.duration;
    ++next[j];
  }
  return make_schedule(inst, std::move(starts));
}

RuleOutcome giffler_thompson(const Instance& inst, PriorityRule rule, const ObjectiveSpec& spec,
                             std::uint64_t seed) {
  spec.check(inst);
  Rng rng(seed);
  Schedule sched = giffler_thompson_schedule(inst, rule, rng);
  ObjectiveVector v = evaluate(sched, inst, spec);
  return {std::move(sched), std::move(v)};
}

std::vector<PriorityRule> applicable_rules(const Instance& inst) {
  std::vector<PriorityRule> rules{PriorityRule::spt, PriorityRule::lpt};
  if (inst.has_due_dates()) rules.push_back(PriorityRule::edd);
  rules.push_back(PriorityRule::fcfs);
  rules.push_back(PriorityRule::mwr);
  return rules;
}

SolveResult priority_portfolio(const Instance& inst, const ObjectiveSpec& spec, const SolverConfig& config,
                               const EvaluationObserver& observer) {
  config.validate();
  spec.check(inst);
  const auto rules = applicable_rules(inst);
  if (config.budget < rules.size()) {
    throw ContractError("budget " + std::to_string(config.budget) + " is below the " +
                        std::to_string(rules.size()) + " applicable priority rules");
  }
  Rng rng(config.seed);
  detail::Evaluator eval(inst, spec, config, observer);
  for (PriorityRule rule : rules) eval.record(giffler_thompson_schedule(inst, rule, rng));
  while (!eval.exhausted()) eval.record(giffler_thompson_schedule(inst, PriorityRule::random, rng));
  return std::move(eval).finish();
}

} // namespace moshop
