#include "moshop/pareto.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "moshop/errors.hpp"

namespace moshop {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.size() != b.size()) {
    throw ContractError("cannot compare objective vectors of length " + std::to_string(a.size()) + " and " +
                        std::to_string(b.size()));
  }
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

Archive::Archive(std::optional<std::size_t> capacity) : capacity_(capacity) {
  if (capacity_ && *capacity_ == 0) throw ContractError("archive capacity must be positive");
}

InsertResult Archive::insert(ArchiveEntry candidate) {
  if (!entries_.empty() && entries_.front().vector.size() != candidate.vector.size()) {
    throw ContractError("candidate vector length does not match the archive");
  }
  for (const auto& e : entries_) {
    if (e.vector == candidate.vector) return InsertResult::rejected_duplicate;
    if (dominates(e.vector, candidate.vector)) return InsertResult::rejected_dominated;
  }
  std::erase_if(entries_, [&](const ArchiveEntry& e) { return dominates(candidate.vector, e.vector); });
  entries_.push_back(std::move(candidate));
  if (capacity_ && entries_.size() > *capacity_) prune();
  return InsertResult::added;
}

void Archive::prune() {
  const std::size_t k = entries_.front().vector.size();
  std::vector<std::int64_t> lo(k, std::numeric_limits<std::int64_t>::max());
  std::vector<std::int64_t> hi(k, std::numeric_limits<std::int64_t>::min());
  for (const auto& e : entries_) {
    for (std::size_t i = 0; i < k; ++i) {
      lo[i] = std::min(lo[i], e.vector[i]);
      hi[i] = std::max(hi[i], e.vector[i]);
    }
  }
  auto is_protected = [&](const ArchiveEntry& e) {
    for (std::size_t i = 0; i < k; ++i) {
      if (e.vector[i] == lo[i]) return true;
    }
    return false;
  };
  // crowding box: per-objective range / 10 around each entry
  auto near = [&](const ObjectiveVector& a, const ObjectiveVector& b) {
    for (std::size_t i = 0; i < k; ++i) {
      const double half = static_cast<double>(hi[i] - lo[i]) / 10.0;
      if (static_cast<double>(a[i] > b[i] ? a[i] - b[i] : b[i] - a[i]) > half) return false;
    }
    return true;
  };
  std::optional<std::size_t> victim;
  std::size_t densest = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (is_protected(entries_[i])) continue;
    std::size_t count = 0;
    for (std::size_t j = 0; j < entries_.size(); ++j) {
      if (j != i && near(entries_[i].vector, entries_[j].vector)) ++count;
    }
    if (!victim || count > densest) {
      victim = i;
      densest = count;
    }
  }
  // every entry holds some objective's best value: nothing may be evicted
  if (victim) entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(*victim));
}

std::vector<ObjectiveVector> Archive::vectors() const {
  std::vector<ObjectiveVector> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.vector);
  return out;
}

std::vector<ArchiveEntry> Archive::sorted_entries() const {
  auto out = entries_;
  std::sort(out.begin(), out.end(), [](const ArchiveEntry& a, const ArchiveEntry& b) { return a.vector < b.vector; });
  return out;
}

std::vector<ObjectiveVector> nondominated_filter(std::span<const ObjectiveVector> vectors) {
  std::vector<ObjectiveVector> out;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < vectors.size() && keep; ++j) {
      if (dominates(vectors[j], vectors[i])) keep = false;
    }
    for (std::size_t j = 0; j < i && keep; ++j) {
      if (vectors[j] == vectors[i]) keep = false;
    }
    if (keep) out.push_back(vectors[i]);
  }
  return out;
}

std::vector<ObjectiveVector> brute_force_front(const Instance& inst, const ObjectiveSpec& spec,
                                               unsigned long long limit) {
  spec.check(inst);
  const unsigned long long count = sequence_count(inst);
  if (count > limit) throw RefusalError(count);

  OperationSequence seq;
  for (const Job& job : inst.jobs) seq.genes.insert(seq.genes.end(), job.operations.size(), job.id);
  // genes start sorted, so next_permutation visits each distinct multiset permutation once
  std::set<ObjectiveVector> image;
  do {
    image.insert(evaluate(decode_semi_active(seq, inst), inst, spec));
  } while (std::next_permutation(seq.genes.begin(), seq.genes.end()));

  const std::vector<ObjectiveVector> distinct(image.begin(), image.end());
  return nondominated_filter(distinct); // already lexicographic
}

double coverage(std::span<const ObjectiveVector> a, std::span<const ObjectiveVector> b) {
  if (b.empty()) return 1.0;
  std::size_t covered = 0;
  for (const auto& target : b) {
    const bool hit = std::any_of(a.begin(), a.end(),
                                 [&](const ObjectiveVector& x) { return x == target || dominates(x, target); });
    if (hit) ++covered;
  }
  return static_cast<double>(covered) / static_cast<double>(b.size());
}

} // namespace moshop
