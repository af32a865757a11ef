#include "dml/return_set.hpp"

#include <algorithm>

#include "dml/error.hpp"

namespace dml {

ReturnSet::ReturnSet(std::size_t horizon, std::vector<std::size_t> indices)
    : horizon_(horizon), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (!indices_.empty() && indices_.back() >= horizon_) {
    throw Error("index " + std::to_string(indices_.back()) + " is outside the horizon " +
                std::to_string(horizon_));
  }
}

bool ReturnSet::contains(std::size_t n) const {
  return std::binary_search(indices_.begin(), indices_.end(), n);
}

std::vector<bool> ReturnSet::indicator() const {
  std::vector<bool> bits(horizon_, false);
  for (auto n : indices_) bits[n] = true;
  return bits;
}

}  // namespace dml
