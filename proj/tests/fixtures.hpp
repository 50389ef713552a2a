#pragma once

// Test-only instances and oracles. The oracles here re-derive properties from
// first principles and do not call the code paths they are used to check.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "moshop/model.hpp"
#include "moshop/rng.hpp"

namespace moshop::testing {

inline Job make_job(int id, std::vector<std::pair<int, Time>> ops, std::optional<Time> due = std::nullopt,
                    Time release = 0) {
  Job job{id, release, due, {}};
  int k = 0;
  for (auto [machine, duration] : ops) job.operations.push_back({id, ++k, machine, duration});
  return job;
}

// J1: (M1,3),(M2,2), d1=5;  J2: (M2,2),(M1,4), d2=7  (machines 0-based here)
inline Instance t2(bool with_due = true) {
  Instance inst;
  inst.name = "T2";
  inst.kind = ShopKind::job_shop;
  inst.machine_count = 2;
  inst.jobs.push_back(make_job(1, {{0, 3}, {1, 2}}, with_due ? std::optional<Time>(5) : std::nullopt));
  inst.jobs.push_back(make_job(2, {{1, 2}, {0, 4}}, with_due ? std::optional<Time>(7) : std::nullopt));
  return inst;
}

// Fixed 3x3 job shop (1680 sequences). Frozen output of
// generate_random_instance(3, 3, 1, 9, 1.3, 11).
inline Instance j3x3() {
  Instance inst;
  inst.name = "J3x3";
  inst.kind = ShopKind::job_shop;
  inst.machine_count = 3;
  inst.jobs.push_back(make_job(1, {{2, 3}, {1, 2}, {0, 2}}, 10));
  inst.jobs.push_back(make_job(2, {{1, 9}, {0, 7}, {2, 4}}, 26));
  inst.jobs.push_back(make_job(3, {{2, 3}, {0, 4}, {1, 6}}, 17));
  return inst;
}

// Random job shop with optional zero durations, releases, and due dates;
// jobs may revisit machines.
inline Instance random_instance(Rng& rng, bool allow_zero = true) {
  Instance inst;
  inst.name = "fuzz";
  inst.kind = ShopKind::job_shop;
  inst.machine_count = static_cast<int>(rng.between(1, 5));
  const auto n = rng.between(1, 6);
  for (int j = 1; j <= n; ++j) {
    std::vector<std::pair<int, Time>> ops;
    const auto o = rng.between(1, 5);
    for (int k = 0; k < o; ++k) {
      ops.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(inst.machine_count))),
                       rng.between(allow_zero ? 0 : 1, 9));
    }
    inst.jobs.push_back(make_job(j, ops, rng.between(0, 40), rng.between(0, 6)));
  }
  return inst;
}

// Independent feasibility check: routing, release, machine exclusivity.
inline std::size_t count_violations(const Schedule& s, const Instance& inst) {
  std::size_t bad = 0;
  struct Iv {
    Time a, b;
  };
  std::map<int, std::vector<Iv>> per_machine;
  for (const auto& job : inst.jobs) {
    if (s.start(job.id, 1) < job.release) ++bad;
    for (std::size_t k = 0; k < job.operations.size(); ++k) {
      const auto& op = job.operations[k];
      const Time st = s.start(job.id, op.index);
      if (k + 1 < job.operations.size() && s.start(job.id, op.index + 1) < st + op.duration) ++bad;
      if (op.duration > 0) per_machine[op.machine].push_back({st, st + op.duration});
    }
  }
  for (auto& [m, ivs] : per_machine) {
    for (std::size_t i = 0; i < ivs.size(); ++i) {
      for (std::size_t j = i + 1; j < ivs.size(); ++j) {
        if (ivs[i].a < ivs[j].b && ivs[j].a < ivs[i].b) ++bad;
      }
    }
  }
  return bad;
}

// Active-schedule oracle: for each positive-duration operation, try every
// idle gap on its machine (before the first bar, between bars) and report a
// violation if it could start earlier there without moving anything else.
inline std::size_t count_active_violations(const Schedule& s, const Instance& inst) {
  std::size_t bad = 0;
  for (const auto& job : inst.jobs) {
    for (std::size_t k = 0; k < job.operations.size(); ++k) {
      const auto& op = job.operations[k];
      if (op.duration == 0) continue;
      const Time st = s.start(job.id, op.index);
      const Time lower = k == 0 ? job.release
                                : s.start(job.id, op.index - 1) + job.operations[k - 1].duration;
      std::vector<std::pair<Time, Time>> busy;
      for (const auto& other : inst.jobs) {
        for (const auto& o2 : other.operations) {
          if (o2.machine != op.machine || o2.duration == 0) continue;
          if (other.id == job.id && o2.index == op.index) continue;
          const Time b = s.start(other.id, o2.index);
          busy.emplace_back(b, b + o2.duration);
        }
      }
      std::sort(busy.begin(), busy.end());
      // idle gaps [gap_start, next busy start), the last one unbounded
      Time gap_start = 0;
      for (std::size_t g = 0; g <= busy.size(); ++g) {
        const Time cand = std::max(gap_start, lower);
        const bool fits = g == busy.size() || cand + op.duration <= busy[g].first;
        if (cand < st && fits) {
          ++bad;
          break;
        }
        if (g < busy.size()) gap_start = std::max(gap_start, busy[g].second);
      }
    }
  }
  return bad;
}

// All permutations with repetition, generated recursively.
inline void for_each_sequence(const Instance& inst, const std::function<void(const OperationSequence&)>& fn) {
  std::vector<std::size_t> left;
  for (const auto& j : inst.jobs) left.push_back(j.operations.size());
  OperationSequence seq;
  std::function<void()> rec = [&] {
    if (seq.genes.size() == inst.operation_count()) {
      fn(seq);
      return;
    }
    for (std::size_t j = 0; j < left.size(); ++j) {
      if (left[j] == 0) continue;
      --left[j];
      seq.genes.push_back(static_cast<int>(j + 1));
      rec();
      seq.genes.pop_back();
      ++left[j];
    }
  };
  rec();
}

inline bool is_permutation_of_quota(const OperationSequence& s, const Instance& inst) {
  std::map<int, std::size_t> count;
  for (int g : s.genes) ++count[g];
  if (s.genes.size() != inst.operation_count()) return false;
  for (const auto& j : inst.jobs) {
    if (count[j.id] != j.operations.size()) return false;
  }
  return true;
}

inline std::set<ObjectiveVector> as_set(const std::vector<ObjectiveVector>& v) { return {v.begin(), v.end()}; }

} // namespace moshop::testing
