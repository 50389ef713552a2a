#include "moshop/model.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

#include "moshop/errors.hpp"

namespace moshop {

std::string_view to_string(ShopKind kind) {
  return kind == ShopKind::job_shop ? "job_shop" : "flow_shop";
}

ShopKind shop_kind_from_string(std::string_view name) {
  if (name == "job_shop") return ShopKind::job_shop;
  if (name == "flow_shop") return ShopKind::flow_shop;
  throw ContractError("unknown shop kind '" + std::string(name) + "'");
}

std::size_t Instance::operation_count() const noexcept {
  std::size_t total = 0;
  for (const auto& j : jobs) total += j.operations.size();
  return total;
}

bool Instance::has_due_dates() const noexcept {
  return std::all_of(jobs.begin(), jobs.end(), [](const Job& j) { return j.due.has_value(); });
}

void Instance::validate() const {
  if (machine_count <= 0) throw ContractError("instance needs at least one machine");
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const Job& job = jobs[j];
    const std::string where = "job " + std::to_string(j + 1);
    if (job.id != static_cast<int>(j + 1)) throw ContractError(where + ": id must be " + std::to_string(j + 1));
    if (job.operations.empty()) throw ContractError(where + ": no operations");
    if (job.release < 0) throw ContractError(where + ": negative release date");
    if (job.due && *job.due < 0) throw ContractError(where + ": negative due date");
    for (std::size_t k = 0; k < job.operations.size(); ++k) {
      const Operation& op = job.operations[k];
      if (op.job != job.id || op.index != static_cast<int>(k + 1)) {
        throw ContractError(where + ": operation " + std::to_string(k + 1) + " has inconsistent ids");
      }
      if (op.machine < 0 || op.machine >= machine_count) {
        throw ContractError(where + ": machine index " + std::to_string(op.machine) + " out of range");
      }
      if (op.duration < 0) throw ContractError(where + ": negative duration");
      if (kind == ShopKind::flow_shop && op.machine != static_cast<int>(k)) {
        throw ContractError(where + ": flow-shop routing must visit machines in order");
      }
    }
    if (kind == ShopKind::flow_shop && job.operations.size() != static_cast<std::size_t>(machine_count)) {
      throw ContractError(where + ": flow-shop job must visit every machine");
    }
  }
}

void validate_sequence(const OperationSequence& seq, const Instance& inst) {
  std::vector<std::size_t> counts(inst.job_count(), 0);
  for (int gene : seq.genes) {
    if (gene < 1 || gene > static_cast<int>(inst.job_count())) {
      throw GenotypeError("gene " + std::to_string(gene) + " is not a job of the instance", gene);
    }
    ++counts[static_cast<std::size_t>(gene - 1)];
  }
  for (std::size_t j = 0; j < counts.size(); ++j) {
    const std::size_t quota = inst.jobs[j].operations.size();
    if (counts[j] != quota) {
      throw GenotypeError("job " + std::to_string(j + 1) + " occurs " + std::to_string(counts[j]) +
                              " times, expected " + std::to_string(quota),
                          static_cast<int>(j + 1));
    }
  }
}

Schedule make_schedule(const Instance& inst, std::vector<std::vector<Time>> starts) {
  if (starts.size() != inst.job_count()) throw ContractError("start table does not match job count");
  Schedule s;
  s.completions.resize(inst.job_count());
  for (std::size_t j = 0; j < inst.job_count(); ++j) {
    const auto& ops = inst.jobs[j].operations;
    if (starts[j].size() != ops.size()) {
      throw ContractError("start table row " + std::to_string(j + 1) + " does not match operation count");
    }
    s.completions[j] = starts[j].back() + ops.back().duration;
  }
  s.starts = std::move(starts);
  return s;
}

std::vector<std::string> schedule_violations(const Schedule& sched, const Instance& inst) {
  std::vector<std::string> out;
  auto name = [](int j, int k) { return "O" + std::to_string(j) + "," + std::to_string(k); };
  if (sched.starts.size() != inst.job_count() || sched.completions.size() != inst.job_count()) {
    out.push_back("schedule shape does not match instance");
    return out;
  }
  struct Bar {
    Time start, end;
    int job, index;
  };
  std::vector<std::vector<Bar>> bars(static_cast<std::size_t>(inst.machine_count));
  for (const Job& job : inst.jobs) {
    const auto& row = sched.starts[static_cast<std::size_t>(job.id - 1)];
    if (row.size() != job.operations.size()) {
      out.push_back("job " + std::to_string(job.id) + " has wrong number of starts");
      continue;
    }
    if (row.front() < job.release) out.push_back("release: " + name(job.id, 1) + " starts before r_j");
    for (std::size_t k = 0; k < row.size(); ++k) {
      const Operation& op = job.operations[k];
      if (row[k] < 0) out.push_back("negative start of " + name(job.id, op.index));
      if (k + 1 < row.size() && row[k + 1] < row[k] + op.duration) {
        out.push_back("routing: " + name(job.id, op.index + 1) + " starts before " + name(job.id, op.index) +
                      " completes");
      }
      if (op.duration > 0) bars[static_cast<std::size_t>(op.machine)].push_back({row[k], row[k] + op.duration, job.id, op.index});
    }
    if (sched.completions[static_cast<std::size_t>(job.id - 1)] != row.back() + job.operations.back().duration) {
      out.push_back("completion of job " + std::to_string(job.id) + " is inconsistent");
    }
  }
  for (std::size_t m = 0; m < bars.size(); ++m) {
    auto& list = bars[m];
    std::sort(list.begin(), list.end(), [](const Bar& a, const Bar& b) { return a.start < b.start; });
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i].start < list[i - 1].end) {
        out.push_back("machine " + std::to_string(m) + ": " + name(list[i - 1].job, list[i - 1].index) +
                      " overlaps " + name(list[i].job, list[i].index));
      }
    }
  }
  return out;
}

OperationSequence sequence_from_schedule(const Schedule& sched, const Instance& inst) {
  std::vector<std::tuple<Time, int, int>> order;
  order.reserve(inst.operation_count());
  for (const Job& job : inst.jobs) {
    for (const Operation& op : job.operations) order.emplace_back(sched.start(job.id, op.index), job.id, op.index);
  }
  std::sort(order.begin(), order.end());
  OperationSequence seq;
  seq.genes.reserve(order.size());
  for (const auto& [start, job, index] : order) seq.genes.push_back(job);
  return seq;
}

std::string_view to_string(Objective obj) {
  switch (obj) {
    case Objective::cmax: return "cmax";
    case Objective::csum: return "csum";
    case Objective::tmax: return "tmax";
    case Objective::tardy_count: return "u";
  }
  return "?";
}

Objective objective_from_string(std::string_view name) {
  if (name == "cmax") return Objective::cmax;
  if (name == "csum") return Objective::csum;
  if (name == "tmax") return Objective::tmax;
  if (name == "u") return Objective::tardy_count;
  throw SpecError("unknown objective '" + std::string(name) + "'");
}

ObjectiveSpec::ObjectiveSpec(std::vector<Objective> selected) : selected_(std::move(selected)) {
  if (selected_.empty()) throw SpecError("objective selection is empty");
  for (std::size_t i = 0; i < selected_.size(); ++i) {
    for (std::size_t j = i + 1; j < selected_.size(); ++j) {
      if (selected_[i] == selected_[j]) {
        throw SpecError("objective '" + std::string(to_string(selected_[i])) + "' selected twice");
      }
    }
  }
}

ObjectiveSpec ObjectiveSpec::parse(std::string_view list) {
  std::vector<Objective> sel;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    sel.push_back(objective_from_string(list.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return ObjectiveSpec(std::move(sel));
}

bool ObjectiveSpec::needs_due_dates() const noexcept {
  return std::any_of(selected_.begin(), selected_.end(),
                     [](Objective o) { return o == Objective::tmax || o == Objective::tardy_count; });
}

std::vector<std::string> ObjectiveSpec::names() const {
  std::vector<std::string> out;
  for (Objective o : selected_) out.emplace_back(to_string(o));
  return out;
}

void ObjectiveSpec::check(const Instance& inst) const {
  if (selected_.empty()) throw SpecError("objective selection is empty");
  if (!needs_due_dates()) return;
  for (const Job& job : inst.jobs) {
    if (!job.due) throw SpecError("job " + std::to_string(job.id) + " has no due date but tmax/u is selected");
  }
}

std::string to_string(const ObjectiveVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Schedule decode_semi_active(const OperationSequence& seq, const Instance& inst) {
  validate_sequence(seq, inst);
  const std::size_t n = inst.job_count();
  std::vector<Time> machine_free(static_cast<std::size_t>(inst.machine_count), 0);
  std::vector<Time> job_ready(n);
  std::vector<std::size_t> next_op(n, 0);
  Schedule s;
  s.starts.resize(n);
  s.completions.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    job_ready[j] = inst.jobs[j].release;
    s.starts[j].assign(inst.jobs[j].operations.size(), 0);
  }
  for (int gene : seq.genes) {
    const auto j = static_cast<std::size_t>(gene - 1);
    const Operation& op = inst.jobs[j].operations[next_op[j]];
    auto& frontier = machine_free[static_cast<std::size_t>(op.machine)];
    const Time start = std::max(frontier, job_ready[j]);
    s.starts[j][next_op[j]] = start;
    job_ready[j] = start + op.duration;
    if (op.duration > 0) frontier = start + op.duration;
    ++next_op[j];
  }
  s.completions = job_ready;
  return s;
}

ObjectiveVector evaluate(const Schedule& sched, const Instance& inst, const ObjectiveSpec& spec) {
  spec.check(inst);
  ObjectiveVector out;
  out.values.reserve(spec.size());
  for (Objective obj : spec.selected()) {
    std::int64_t value = 0;
    for (const Job& job : inst.jobs) {
      const Time c = sched.completion(job.id);
      switch (obj) {
        case Objective::cmax: value = std::max(value, c); break;
        case Objective::csum: value += c; break;
        case Objective::tmax: value = std::max(value, std::max<Time>(c - *job.due, 0)); break;
        case Objective::tardy_count: value += c > *job.due ? 1 : 0; break;
      }
    }
    out.values.push_back(value);
  }
  return out;
}

OperationSequence random_sequence(const Instance& inst, Rng& rng) {
  OperationSequence seq;
  seq.genes.reserve(inst.operation_count());
  for (const Job& job : inst.jobs) seq.genes.insert(seq.genes.end(), job.operations.size(), job.id);
  rng.shuffle(seq.genes);
  return seq;
}

OperationSequence random_sequence(const Instance& inst, std::uint64_t seed) {
  Rng rng(seed);
  return random_sequence(inst, rng);
}

unsigned long long sequence_count(const Instance& inst) {
  constexpr auto cap = std::numeric_limits<unsigned long long>::max();
  unsigned __int128 result = 1;
  unsigned long long placed = 0;
  for (const Job& job : inst.jobs) {
    // result *= C(placed + o, o), built so every intermediate division is exact
    unsigned __int128 binom = 1;
    const unsigned long long o = job.operations.size();
    for (unsigned long long i = 1; i <= o; ++i) {
      binom = binom * (placed + i) / i;
      if (binom > cap) return cap;
    }
    result *= binom;
    if (result > cap) return cap;
    placed += o;
  }
  return static_cast<unsigned long long>(result);
}

} // namespace moshop
