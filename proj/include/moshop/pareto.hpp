#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "moshop/model.hpp"

namespace moshop {

// Pareto dominance for minimization: a <= b componentwise and a < b somewhere.
// Throws ContractError on a length mismatch.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

struct ArchiveEntry {
  ObjectiveVector vector;
  OperationSequence sequence;
  Schedule schedule;
};

enum class InsertResult { added, rejected_dominated, rejected_duplicate };

// Incrementally maintained set of mutually nondominated entries, one per
// distinct objective vector (first representative wins). With a capacity, an
// overflowing insertion evicts the entry in the most crowded region, never
// one holding the best value of some objective.
class Archive {
public:
  Archive() = default;
  explicit Archive(std::optional<std::size_t> capacity);

  InsertResult insert(ArchiveEntry candidate);

  const std::vector<ArchiveEntry>& entries() const noexcept { return entries_; }
  std::vector<ObjectiveVector> vectors() const;
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::optional<std::size_t> capacity() const noexcept { return capacity_; }

  // Entries ordered lexicographically by objective vector.
  std::vector<ArchiveEntry> sorted_entries() const;

private:
  void prune();

  std::optional<std::size_t> capacity_;
  std::vector<ArchiveEntry> entries_;
};

// Quadratic pairwise filter: vectors not dominated by any input, duplicates
// collapsed, in order of first occurrence.
std::vector<ObjectiveVector> nondominated_filter(std::span<const ObjectiveVector> vectors);

// Exact front of the decoder's image, found by enumerating every permutation
// with repetition. Result is sorted lexicographically. Throws RefusalError
// when the sequence count exceeds `limit`.
std::vector<ObjectiveVector> brute_force_front(const Instance& inst, const ObjectiveSpec& spec,
                                               unsigned long long limit);

// Fraction of `b` weakly dominated (equal or dominated) by some member of `a`;
// 1.0 for empty `b`.
double coverage(std::span<const ObjectiveVector> a, std::span<const ObjectiveVector> b);

} // namespace moshop
