#include "moshop/aim.hpp"

#include <algorithm>

#include "moshop/errors.hpp"

namespace moshop {

AimSession::AimSession(std::vector<FrontPoint> front) : front_(std::move(front)) {
  if (front_.empty()) throw ContractError("aspiration session needs a nonempty front");
  const std::size_t k = front_.front().vector.size();
  if (k == 0) throw ContractError("front vectors are empty");
  levels_ = front_.front().vector.values;
  for (const auto& p : front_) {
    if (p.vector.size() != k) throw ContractError("front vectors differ in length");
    for (std::size_t i = 0; i < k; ++i) levels_[i] = std::max(levels_[i], p.vector[i]);
  }
  repartition();
}

void AimSession::set_level(std::size_t objective, std::int64_t value) {
  if (objective < 1 || objective > levels_.size()) {
    throw ContractError("objective index " + std::to_string(objective) + " outside 1.." +
                        std::to_string(levels_.size()));
  }
  levels_[objective - 1] = value;
  picked_.reset();
  repartition();
}

void AimSession::pick(const std::string& id) {
  if (std::find(satisfied_.begin(), satisfied_.end(), id) == satisfied_.end()) {
    throw ContractError("solution '" + id + "' does not meet the aspiration levels");
  }
  const ObjectiveVector* first = nullptr;
  for (const auto& p : front_) {
    if (std::find(satisfied_.begin(), satisfied_.end(), p.id) == satisfied_.end()) continue;
    if (first && !(p.vector == *first)) {
      throw ContractError("pick is only available among solutions with equal objective vectors");
    }
    first = &p.vector;
  }
  picked_ = id;
  repartition();
}

void AimSession::repartition() {
  satisfied_.clear();
  unsatisfied_.clear();
  for (const auto& p : front_) {
    bool meets = true;
    for (std::size_t i = 0; i < levels_.size() && meets; ++i) meets = p.vector[i] <= levels_[i];
    if (meets && picked_ && p.id != *picked_) meets = false;
    (meets ? satisfied_ : unsatisfied_).push_back(p.id);
  }
}

std::string AimSession::finalize() const {
  if (satisfied_.size() != 1) throw NotConvergedError(satisfied_.size());
  return satisfied_.front();
}

AimSession start_session(std::vector<FrontPoint> front) { return AimSession(std::move(front)); }

} // namespace moshop
