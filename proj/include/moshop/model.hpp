#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moshop/rng.hpp"

namespace moshop {

using Time = std::int64_t;

enum class ShopKind { job_shop, flow_shop };

std::string_view to_string(ShopKind kind);
ShopKind shop_kind_from_string(std::string_view name);

// O_jk: the k-th step (1-based) in the routing of job `job`. Machines are 0-based.
struct Operation {
  int job = 0;
  int index = 0;
  int machine = 0;
  Time duration = 0;

  friend bool operator==(const Operation&, const Operation&) = default;
};

struct Job {
  int id = 0;
  Time release = 0;
  std::optional<Time> due;
  std::vector<Operation> operations;

  friend bool operator==(const Job&, const Job&) = default;
};

struct Instance {
  std::string name;
  ShopKind kind = ShopKind::job_shop;
  int machine_count = 0;
  std::vector<Job> jobs; // jobs[j - 1] has id j

  std::size_t job_count() const noexcept { return jobs.size(); }
  std::size_t operation_count() const noexcept;
  bool has_due_dates() const noexcept;
  const Job& job(int id) const { return jobs.at(static_cast<std::size_t>(id - 1)); }

  // Throws ContractError naming the first broken invariant.
  void validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Operation-based genotype: job j occurs once per operation of j, and its
// i-th occurrence refers to O_ji.
struct OperationSequence {
  std::vector<int> genes;

  std::size_t size() const noexcept { return genes.size(); }
  friend bool operator==(const OperationSequence&, const OperationSequence&) = default;
};

// Throws GenotypeError when `seq` is not a permutation with repetition for `inst`.
void validate_sequence(const OperationSequence& seq, const Instance& inst);

struct Schedule {
  std::vector<std::vector<Time>> starts; // starts[j - 1][k - 1] = s_jk
  std::vector<Time> completions;         // completions[j - 1] = C_j

  Time start(int job, int index) const {
    return starts.at(static_cast<std::size_t>(job - 1)).at(static_cast<std::size_t>(index - 1));
  }
  Time completion(int job) const { return completions.at(static_cast<std::size_t>(job - 1)); }

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Builds a schedule (and its completions) from explicit start times.
Schedule make_schedule(const Instance& inst, std::vector<std::vector<Time>> starts);

// Lists every violated routing, release, or machine-exclusivity constraint.
// Empty result means the schedule is feasible.
std::vector<std::string> schedule_violations(const Schedule& sched, const Instance& inst);

// Operations sorted by (start, job id, index); the genotype that reproduces
// a schedule whose operations start at machine or job frontiers.
OperationSequence sequence_from_schedule(const Schedule& sched, const Instance& inst);

enum class Objective { cmax, csum, tmax, tardy_count };

std::string_view to_string(Objective obj);
Objective objective_from_string(std::string_view name);

class ObjectiveSpec {
public:
  ObjectiveSpec() = default;
  // Throws SpecError on an empty selection or repeated objectives.
  explicit ObjectiveSpec(std::vector<Objective> selected);

  // Parses a comma-separated list such as "cmax,tmax".
  static ObjectiveSpec parse(std::string_view list);

  const std::vector<Objective>& selected() const noexcept { return selected_; }
  std::size_t size() const noexcept { return selected_.size(); }
  bool needs_due_dates() const noexcept;
  std::vector<std::string> names() const;

  // Throws SpecError if a due-date objective is selected and a job lacks one.
  void check(const Instance& inst) const;

  friend bool operator==(const ObjectiveSpec&, const ObjectiveSpec&) = default;

private:
  std::vector<Objective> selected_;
};

struct ObjectiveVector {
  std::vector<std::int64_t> values;

  ObjectiveVector() = default;
  ObjectiveVector(std::initializer_list<std::int64_t> v) : values(v) {}
  explicit ObjectiveVector(std::vector<std::int64_t> v) : values(std::move(v)) {}

  std::size_t size() const noexcept { return values.size(); }
  std::int64_t operator[](std::size_t i) const { return values[i]; }

  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
  friend auto operator<=>(const ObjectiveVector&, const ObjectiveVector&) = default;
};

std::string to_string(const ObjectiveVector& v);

// Appends O_j,i for the i-th occurrence of j at the earliest time allowed by
// the machine frontier, the job frontier, and r_j. Zero-duration operations
// respect the machine frontier but do not advance it.
Schedule decode_semi_active(const OperationSequence& seq, const Instance& inst);

ObjectiveVector evaluate(const Schedule& sched, const Instance& inst, const ObjectiveSpec& spec);

OperationSequence random_sequence(const Instance& inst, std::uint64_t seed);
OperationSequence random_sequence(const Instance& inst, Rng& rng);

// Multinomial (sum o_j)! / prod(o_j!), saturating at the maximum value.
unsigned long long sequence_count(const Instance& inst);

} // namespace moshop
