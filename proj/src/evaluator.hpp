#pragma once

#include <optional>

#include "moshop/model.hpp"
#include "moshop/pareto.hpp"
#include "moshop/solvers.hpp"

namespace moshop::detail {

// Budget-limited evaluation front end shared by the method families. Every
// evaluation is offered to the run's archive.
class Evaluator {
public:
  Evaluator(const Instance& inst, const ObjectiveSpec& spec, const SolverConfig& config,
            const EvaluationObserver& observer)
      : inst_(inst), spec_(spec), budget_(config.budget), archive_(config.archive_capacity), observer_(observer) {}

  bool exhausted() const noexcept { return count_ >= budget_; }
  std::size_t evaluations() const noexcept { return count_; }
  std::size_t remaining() const noexcept { return budget_ - count_; }
  const Archive& archive() const noexcept { return archive_; }

  // Decodes and evaluates; nullopt once the budget is spent.
  std::optional<ObjectiveVector> operator()(const OperationSequence& seq) {
    if (exhausted()) return std::nullopt;
    Schedule sched = decode_semi_active(seq, inst_);
    ObjectiveVector v = evaluate(sched, inst_, spec_);
    archive_.insert({v, seq, std::move(sched)});
    tick();
    return v;
  }

  // Accounts for a schedule built outside the decoder.
  std::optional<ObjectiveVector> record(Schedule sched) {
    if (exhausted()) return std::nullopt;
    ObjectiveVector v = evaluate(sched, inst_, spec_);
    OperationSequence seq = sequence_from_schedule(sched, inst_);
    archive_.insert({v, std::move(seq), std::move(sched)});
    tick();
    return v;
  }

  SolveResult finish(std::size_t restarts = 0) && { return {std::move(archive_), count_, restarts}; }

private:
  void tick() {
    ++count_;
    if (observer_) observer_(count_);
  }

  const Instance& inst_;
  const ObjectiveSpec& spec_;
  std::size_t budget_;
  std::size_t count_ = 0;
  Archive archive_;
  const EvaluationObserver& observer_;
};

} // namespace moshop::detail
