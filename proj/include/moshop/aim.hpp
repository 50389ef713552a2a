#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "moshop/model.hpp"

namespace moshop {

struct FrontPoint {
  std::string id;
  ObjectiveVector vector;
};

// Aspiration-level session over a fixed front. The partition is always
// derived from the levels:
//   satisfied = { x : g_i(x) <= level_i for all i },  unsatisfied = rest.
class AimSession {
public:
  // Levels start at the componentwise worst values, so every point is
  // satisfied. Throws ContractError on an empty or ragged front.
  explicit AimSession(std::vector<FrontPoint> front);

  const std::vector<FrontPoint>& front() const noexcept { return front_; }
  const std::vector<std::int64_t>& levels() const noexcept { return levels_; }
  std::size_t objective_count() const noexcept { return levels_.size(); }

  // Objective index is 1-based. Tightening and loosening are both allowed;
  // an empty satisfied set is a legal state.
  void set_level(std::size_t objective, std::int64_t value);

  // When every satisfied point has the same objective vector, narrows the
  // satisfied set to the named one. Cleared by the next level change.
  void pick(const std::string& id);

  const std::vector<std::string>& satisfied() const noexcept { return satisfied_; }
  const std::vector<std::string>& unsatisfied() const noexcept { return unsatisfied_; }

  // The unique satisfied solution; NotConvergedError otherwise.
  std::string finalize() const;

private:
  void repartition();

  std::vector<FrontPoint> front_;
  std::vector<std::int64_t> levels_;
  std::optional<std::string> picked_;
  std::vector<std::string> satisfied_;
  std::vector<std::string> unsatisfied_;
};

AimSession start_session(std::vector<FrontPoint> front);

} // namespace moshop
