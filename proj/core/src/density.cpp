#include "dml/density.hpp"

#include <algorithm>

#include "dml/error.hpp"

namespace dml {

namespace {

// Smallest k with k^root >= n^power.
std::size_t ceil_root(std::size_t n, unsigned power, unsigned root) {
  auto pow = [](std::size_t base, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
  };
  const mpz_class target = pow(n, power);
  std::size_t lo = 0;
  std::size_t hi = n;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (pow(mid, root) >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

std::string ratio_to_string(const Ratio& r) {
  Ratio c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::size_t Progression::members_below(std::size_t horizon) const noexcept {
  if (offset >= horizon) return 0;
  return (horizon - 1 - offset) / modulus + 1;
}

std::size_t window_count_max(const ReturnSet& s, std::size_t window) {
  if (window == 0) throw Error("window length must be positive");
  if (window > s.horizon()) {
    throw Error("window length " + std::to_string(window) + " exceeds the horizon " + std::to_string(s.horizon()));
  }
  const auto bits = s.indicator();
  std::size_t count = 0;
  for (std::size_t i = 0; i < window; ++i) count += bits[i];
  std::size_t best = count;
  for (std::size_t i = window; i < bits.size(); ++i) {
    count += bits[i];
    count -= bits[i - window];
    best = std::max(best, count);
  }
  return best;
}

Ratio window_density_max(const ReturnSet& s, std::size_t window) {
  Ratio r(window_count_max(s, window), window);
  r.canonicalize();
  return r;
}

std::vector<std::size_t> default_schedule(std::size_t horizon) {
  if (horizon == 0) throw Error("horizon must be at least 1");
  std::vector<std::size_t> out{ceil_root(horizon, 1, 4), ceil_root(horizon, 1, 2), ceil_root(horizon, 3, 4),
                               horizon};
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DensityProfile density_profile(const ReturnSet& s, std::span<const std::size_t> schedule) {
  if (schedule.empty()) throw Error("density schedule is empty");
  DensityProfile profile{s.horizon(), {}};
  for (auto window : schedule) {
    const std::size_t count = window_count_max(s, window);
    Ratio r(count, window);
    r.canonicalize();
    profile.entries.push_back({window, count, r});
  }
  return profile;
}

DensityProfile density_profile(const ReturnSet& s) {
  const auto schedule = default_schedule(s.horizon());
  return density_profile(s, schedule);
}

std::size_t default_a_max(std::size_t horizon) { return std::max<std::size_t>(1, ceil_root(horizon, 1, 2)); }

bool progression_contained(const ReturnSet& s, const Progression& p) {
  if (p.modulus == 0) return false;
  for (std::size_t n = p.offset; n < s.horizon(); n += p.modulus) {
    if (!s.contains(n)) return false;
  }
  return true;
}

std::vector<Progression> detect_progressions(const ReturnSet& s, std::size_t a_max, std::size_t m_min,
                                             std::size_t tail_start) {
  const std::size_t horizon = s.horizon();
  if (a_max < 1) throw Error("a_max must be at least 1");
  if (m_min < 2) throw Error("m_min must be at least 2");
  if (tail_start >= horizon) throw Error("tail_start must be below the horizon");
  const auto bits = s.indicator();
  std::vector<Progression> found;
  for (std::size_t a = 1; a <= a_max; ++a) {
    for (std::size_t b = tail_start; b < tail_start + a && b < horizon; ++b) {
      const Progression candidate{a, b};
      if (candidate.members_below(horizon) < m_min) continue;
      const bool covered = std::any_of(found.begin(), found.end(), [&](const Progression& q) {
        return a % q.modulus == 0 && b % q.modulus == q.offset % q.modulus;
      });
      if (covered) continue;
      bool all = true;
      for (std::size_t n = b; n < horizon && all; n += a) all = bits[n];
      if (all) found.push_back(candidate);
    }
  }
  return found;
}

ReturnSet covered_indices(std::span<const Progression> progressions, std::size_t horizon) {
  std::vector<std::size_t> out;
  for (const auto& p : progressions) {
    for (std::size_t n = p.offset; n < horizon; n += p.modulus) out.push_back(n);
  }
  return ReturnSet(horizon, std::move(out));
}

Decomposition decompose_return_set(const ReturnSet& s, std::span<const Progression> progressions) {
  for (const auto& p : progressions) {
    if (p.modulus == 0 || p.offset >= s.horizon() || !progression_contained(s, p)) {
      throw Error("progression not contained in S: (" + std::to_string(p.modulus) + ", " +
                  std::to_string(p.offset) + ")");
    }
  }
  const ReturnSet a_part = covered_indices(progressions, s.horizon());
  std::vector<std::size_t> residual;
  std::set_difference(s.indices().begin(), s.indices().end(), a_part.indices().begin(), a_part.indices().end(),
                      std::back_inserter(residual));
  Decomposition d;
  d.horizon = s.horizon();
  d.progressions.assign(progressions.begin(), progressions.end());
  d.residual = ReturnSet(s.horizon(), std::move(residual));
  d.residual_profile = density_profile(d.residual);
  return d;
}

}  // namespace dml
