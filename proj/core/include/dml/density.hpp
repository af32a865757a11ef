#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "dml/return_set.hpp"

namespace dml {

/// Exact density ratios. Rendered as "num/den" in reports.
using Ratio = mpq_class;

std::string ratio_to_string(const Ratio& r);

/// The infinite progression {modulus * l + offset : l >= 0}.
struct Progression {
  std::size_t modulus = 1;
  std::size_t offset = 0;

  bool contains(std::size_t n) const noexcept { return n >= offset && (n - offset) % modulus == 0; }
  /// Members below the horizon.
  std::size_t members_below(std::size_t horizon) const noexcept;

  bool operator==(const Progression&) const = default;
};

struct DensityEntry {
  std::size_t window = 0;
  std::size_t max_count = 0;
  Ratio max_ratio;
};

/// Max-over-windows statistic at a few window lengths; the finite stand-in
/// for the Banach density limsup. Including window = horizon gives the
/// ordinary density of the sample.
struct DensityProfile {
  std::size_t horizon = 0;
  std::vector<DensityEntry> entries;
};

/// S = A u B inside [0, horizon): A is the union of the progressions,
/// B the residual.
struct Decomposition {
  std::size_t horizon = 0;
  std::vector<Progression> progressions;
  ReturnSet residual;
  DensityProfile residual_profile;
};

/// Largest |S n I| over intervals I of length `window` inside [0, N).
std::size_t window_count_max(const ReturnSet& s, std::size_t window);
Ratio window_density_max(const ReturnSet& s, std::size_t window);

/// {ceil(N^(1/4)), ceil(N^(1/2)), ceil(N^(3/4)), N}, deduplicated.
std::vector<std::size_t> default_schedule(std::size_t horizon);
DensityProfile density_profile(const ReturnSet& s, std::span<const std::size_t> schedule);
DensityProfile density_profile(const ReturnSet& s);

/// ceil(sqrt(N)).
std::size_t default_a_max(std::size_t horizon);

/// Every member of the progression in [offset, N) lies in S.
bool progression_contained(const ReturnSet& s, const Progression& p);

/// Progressions (a, b) with a <= a_max and tail_start <= b < tail_start + a
/// whose members in [b, N) all lie in S, with at least m_min of them.
/// A progression is dropped when an already accepted (a0, b0) with a0 | a
/// and b = b0 (mod a0) covers it. Sorted by (a, b).
std::vector<Progression> detect_progressions(const ReturnSet& s, std::size_t a_max, std::size_t m_min,
                                             std::size_t tail_start);

/// Throws "progression not contained in S" for an unverified progression.
Decomposition decompose_return_set(const ReturnSet& s, std::span<const Progression> progressions);

/// Indices below the horizon covered by at least one progression.
ReturnSet covered_indices(std::span<const Progression> progressions, std::size_t horizon);

}  // namespace dml
