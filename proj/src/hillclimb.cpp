#include <utility>

#include "evaluator.hpp"
#include "moshop/solvers.hpp"

namespace moshop {

namespace {

struct Move {
  std::size_t a, b;
};

std::vector<Move> neighborhood_moves(const OperationSequence& s, Neighborhood kind) {
  std::vector<Move> moves;
  const std::size_t n = s.size();
  switch (kind) {
    case Neighborhood::adjacent_swap:
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (s.genes[i] != s.genes[i + 1]) moves.push_back({i, i + 1});
      }
      break;
    case Neighborhood::general_swap:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (s.genes[i] != s.genes[j]) moves.push_back({i, j});
        }
      }
      break;
    case Neighborhood::shift:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          // shifting onto the neighbouring slot duplicates the adjacent swap from the other side
          if (i == j || j + 1 == i) continue;
          moves.push_back({i, j});
        }
      }
      break;
  }
  return moves;
}

OperationSequence apply(const OperationSequence& s, Move m, Neighborhood kind) {
  return kind == Neighborhood::shift ? shift_gene(s, m.a, m.b) : swap_genes(s, m.a, m.b);
}

struct Point {
  OperationSequence seq;
  ObjectiveVector vector;
  std::vector<Move> moves; // shuffled scan order
  std::size_t cursor = 0;
};

} // namespace

SolveResult hillclimb(const Instance& inst, const ObjectiveSpec& spec, const SolverConfig& config,
                      const EvaluationObserver& observer) {
  config.validate();
  spec.check(inst);
  Rng rng(config.seed);
  detail::Evaluator eval(inst, spec, config, observer);
  std::size_t restarts = 0;

  auto reset_scan = [&](Point& p) {
    p.moves = neighborhood_moves(p.seq, config.neighborhood);
    rng.shuffle(p.moves);
    p.cursor = 0;
  };
  auto fresh_point = [&]() -> std::optional<Point> {
    Point p;
    p.seq = random_sequence(inst, rng);
    auto v = eval(p.seq);
    if (!v) return std::nullopt;
    p.vector = std::move(*v);
    reset_scan(p);
    return p;
  };

  std::vector<Point> points;
  while (points.size() < config.points) {
    auto p = fresh_point();
    if (!p) break;
    points.push_back(std::move(*p));
  }

  // Round robin: each turn a point scans its neighbourhood until the first
  // neighbour that dominates it; a point with no such neighbour restarts.
  while (!eval.exhausted() && !points.empty()) {
    for (auto& p : points) {
      bool moved = false;
      while (p.cursor < p.moves.size()) {
        OperationSequence next = apply(p.seq, p.moves[p.cursor++], config.neighborhood);
        if (next == p.seq) continue;
        auto v = eval(next);
        if (!v) break;
        if (dominates(*v, p.vector)) {
          p.seq = std::move(next);
          p.vector = std::move(*v);
          reset_scan(p);
          moved = true;
          break;
        }
      }
      if (eval.exhausted()) break;
      if (!moved) {
        ++restarts;
        auto q = fresh_point();
        if (!q) break;
        p = std::move(*q);
      }
    }
  }
  return std::move(eval).finish(restarts);
}

} // namespace moshop
