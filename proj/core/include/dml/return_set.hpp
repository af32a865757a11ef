#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dml {

/// Indices n in [0, horizon) at which an orbit lies on a closed set; the
/// finite-horizon view of {n : phi^n(alpha) in V}.
class ReturnSet {
 public:
  ReturnSet() = default;
  /// Sorts and deduplicates; throws if an index is >= horizon.
  ReturnSet(std::size_t horizon, std::vector<std::size_t> indices);

  std::size_t horizon() const noexcept { return horizon_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(std::size_t n) const;

  /// membership[n] for n < horizon.
  std::vector<bool> indicator() const;

  bool operator==(const ReturnSet&) const = default;

 private:
  std::size_t horizon_ = 0;
  std::vector<std::size_t> indices_;
};

}  // namespace dml
