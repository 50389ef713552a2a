#include <algorithm>
#include <map>

#include "moshop/errors.hpp"
#include "moshop/solvers.hpp"

namespace moshop {

namespace {

std::map<int, std::size_t> gene_counts(const OperationSequence& s) {
  std::map<int, std::size_t> counts;
  for (int g : s.genes) ++counts[g];
  return counts;
}

void require_same_multiset(const OperationSequence& p1, const OperationSequence& p2) {
  if (p1.size() != p2.size() || gene_counts(p1) != gene_counts(p2)) {
    throw ContractError("crossover parents are not permutations of the same job multiset");
  }
}

std::vector<bool> window_mask(std::size_t n, std::size_t first, std::size_t last) {
  if (first > last || last >= n) throw ContractError("crossover window out of range");
  std::vector<bool> mask(n, false);
  std::fill(mask.begin() + static_cast<std::ptrdiff_t>(first), mask.begin() + static_cast<std::ptrdiff_t>(last) + 1,
            true);
  return mask;
}

std::pair<std::size_t, std::size_t> random_window(std::size_t n, Rng& rng) {
  auto a = static_cast<std::size_t>(rng.below(n));
  auto b = static_cast<std::size_t>(rng.below(n));
  if (a > b) std::swap(a, b);
  return {a, b};
}

// Syswerda-style order-based mask: genes parent 2 holds at randomly chosen
// positions are vacated in parent 1 (leftmost matching occurrences first).
std::vector<bool> order_based_mask(const OperationSequence& p1, const OperationSequence& p2, Rng& rng) {
  std::map<int, std::size_t> selected;
  for (int g : p2.genes) {
    if (rng.chance(0.5)) ++selected[g];
  }
  std::vector<bool> inherit(p1.size(), true);
  for (std::size_t i = 0; i < p1.size(); ++i) {
    auto it = selected.find(p1.genes[i]);
    if (it != selected.end() && it->second > 0) {
      inherit[i] = false;
      --it->second;
    }
  }
  return inherit;
}

// Positions with `inherit` set keep `base`'s gene; the rest draw from `donor`
// under the per-job `quota`.
OperationSequence fill_from_donor(const OperationSequence& base, const OperationSequence& donor,
                                  const std::vector<bool>& inherit, std::map<int, std::size_t> quota) {
  OperationSequence child;
  child.genes.assign(base.size(), 0);
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (inherit[i]) {
      child.genes[i] = base.genes[i];
      --quota[base.genes[i]];
    }
  }
  std::vector<int> pool;
  pool.reserve(donor.size());
  for (std::size_t i = 0; i < donor.size(); ++i) {
    if (!inherit[i]) pool.push_back(donor.genes[i]);
  }
  for (std::size_t i = 0; i < donor.size(); ++i) {
    if (inherit[i]) pool.push_back(donor.genes[i]);
  }
  auto next = pool.begin();
  for (std::size_t i = 0; i < child.size(); ++i) {
    if (inherit[i]) continue;
    while (quota[*next] == 0) ++next;
    child.genes[i] = *next;
    --quota[*next];
    ++next;
  }
  return child;
}

} // namespace

OperationSequence quota_fill(const OperationSequence& p1, const OperationSequence& p2,
                             const std::vector<bool>& inherit) {
  require_same_multiset(p1, p2);
  if (inherit.size() != p1.size()) throw ContractError("inheritance mask has the wrong length");
  return fill_from_donor(p1, p2, inherit, gene_counts(p1));
}

OperationSequence tpox(const OperationSequence& p1, const OperationSequence& p2, std::size_t first,
                       std::size_t last) {
  return quota_fill(p1, p2, window_mask(p1.size(), first, last));
}

OperationSequence pmx(const OperationSequence& p1, const OperationSequence& p2, std::size_t first,
                      std::size_t last) {
  require_same_multiset(p1, p2);
  const std::size_t n = p1.size();
  const auto in_window = window_mask(n, first, last);

  // Tentative child: p1's window, p2 elsewhere.
  OperationSequence child = p2;
  for (std::size_t i = first; i <= last; ++i) child.genes[i] = p1.genes[i];

  const auto quota = gene_counts(p1);
  auto used = gene_counts(child);
  auto excess = [&](int g) { return used[g] > quota.at(g); };

  // Mapping step: an over-represented gene outside the window follows the
  // window's p1 -> p2 pairs until it reaches a gene that is still short.
  std::vector<bool> pair_taken(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (in_window[i] || !excess(child.genes[i])) continue;
    int g = child.genes[i];
    for (std::size_t hop = first; hop <= last && excess(g); ++hop) {
      bool moved = false;
      for (std::size_t t = first; t <= last; ++t) {
        if (!pair_taken[t] && p1.genes[t] == g) {
          pair_taken[t] = true;
          g = p2.genes[t];
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    if (g != child.genes[i] && used[g] < quota.at(g)) {
      --used[child.genes[i]];
      ++used[g];
      child.genes[i] = g;
    }
  }

  // Repair: keep the window and every outside gene still within quota, then
  // quota-fill the rest from p2.
  std::vector<bool> keep(n, false);
  std::map<int, std::size_t> kept;
  for (std::size_t i = first; i <= last; ++i) {
    keep[i] = true;
    ++kept[child.genes[i]];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (in_window[i]) continue;
    const int g = child.genes[i];
    if (kept[g] < quota.at(g)) {
      keep[i] = true;
      ++kept[g];
    }
  }
  return fill_from_donor(child, p2, keep, quota);
}

OperationSequence crossover(const OperationSequence& p1, const OperationSequence& p2, CrossoverKind kind,
                            Rng& rng) {
  require_same_multiset(p1, p2);
  if (p1.size() == 0) return p1;
  switch (kind) {
    case CrossoverKind::uobx: {
      std::vector<bool> mask(p1.size());
      for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = rng.chance(0.5);
      return quota_fill(p1, p2, mask);
    }
    case CrossoverKind::obx:
      return quota_fill(p1, p2, order_based_mask(p1, p2, rng));
    case CrossoverKind::tpox: {
      const auto [a, b] = random_window(p1.size(), rng);
      return tpox(p1, p2, a, b);
    }
    case CrossoverKind::pmx: {
      const auto [a, b] = random_window(p1.size(), rng);
      return pmx(p1, p2, a, b);
    }
  }
  throw ContractError("unknown crossover kind");
}

OperationSequence crossover(const OperationSequence& p1, const OperationSequence& p2, CrossoverKind kind,
                            std::uint64_t seed) {
  Rng rng(seed);
  return crossover(p1, p2, kind, rng);
}

OperationSequence swap_genes(OperationSequence s, std::size_t i, std::size_t j) {
  if (i >= s.size() || j >= s.size()) throw ContractError("swap position out of range");
  std::swap(s.genes[i], s.genes[j]);
  return s;
}

OperationSequence shift_gene(OperationSequence s, std::size_t from, std::size_t to) {
  if (from >= s.size() || to >= s.size()) throw ContractError("shift position out of range");
  const int g = s.genes[from];
  s.genes.erase(s.genes.begin() + static_cast<std::ptrdiff_t>(from));
  s.genes.insert(s.genes.begin() + static_cast<std::ptrdiff_t>(to), g);
  return s;
}

OperationSequence mutate(const OperationSequence& s, MutationKind kind, Rng& rng) {
  if (s.size() < 2) return s;
  const auto i = static_cast<std::size_t>(rng.below(s.size()));
  auto j = static_cast<std::size_t>(rng.below(s.size() - 1));
  if (j >= i) ++j;
  return kind == MutationKind::swap ? swap_genes(s, i, j) : shift_gene(s, i, j);
}

OperationSequence mutate(const OperationSequence& s, MutationKind kind, std::uint64_t seed) {
  Rng rng(seed);
  return mutate(s, kind, rng);
}

} // namespace moshop
