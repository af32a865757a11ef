#pragma once

#include <string>
#include <vector>

#include "dml/density.hpp"
#include "dml/ideal.hpp"
#include "dml/orbit.hpp"

namespace dml {

/// Sampling knobs for orbit closures. Samples start at initial_samples and
/// double until two consecutive ideals agree or the next doubling would
/// exceed sample_budget.
struct ClosureParams {
  std::size_t initial_samples = 4;
  std::size_t sample_budget = 64;
  /// Only relations of total degree <= degree_cap in the ambient variables
  /// are kept, so results are degree-capped closures, not exact ones.
  unsigned degree_cap = 4;
};

struct ClosureIdeal {
  ReducedGroebnerBasis ideal;
  bool stabilized = false;
  std::size_t sample_size = 0;
  unsigned degree_cap = 0;
};

/// Degree-capped ideal of {phi^(a*l + j)(alpha) : l < m}, grown by sample
/// doubling until it stops changing.
ClosureIdeal orbit_closure_ideal(const Morphism& phi, const RationalPoint& alpha, std::size_t a, std::size_t j,
                                 const ClosureParams& params, const MonomialOrder& order);

struct ChainLink {
  std::size_t offset = 0;
  ClosureIdeal closure;
  int dimension = 0;
};

/// Closures W_j for the offsets j in [base, base + modulus).
struct ClosureChain {
  std::size_t modulus = 1;
  std::size_t base = 0;
  std::vector<ChainLink> links;
  /// False when some dim W_(j+1) > dim W_j, a sign of unstabilized sampling.
  bool dimensions_nonincreasing = true;
  std::vector<std::string> diagnostics;

  const ChainLink& at(std::size_t offset) const;
};

ClosureChain closure_chain(const Morphism& phi, const RationalPoint& alpha, std::size_t a, std::size_t b,
                           const ClosureParams& params, const MonomialOrder& order);

struct InvarianceWitness {
  MultiPoly generator;
  MultiPoly normal_form;
};

/// Algebraic check of phi^a(W) in W: every generator pulled back along
/// phi^a must reduce to zero modulo W.
struct PeriodicityCertificate {
  ReducedGroebnerBasis ideal;
  std::size_t modulus = 1;
  bool invariant = false;
  std::vector<InvarianceWitness> witnesses;
};

PeriodicityCertificate certify_invariant(const ReducedGroebnerBasis& w, const Morphism& phi, std::size_t a);

enum class OffsetCase {
  /// V n W_j is empty, so the offset contributes nothing.
  IntersectionEmpty,
  /// dim(V n W_j) < dim V: recursed on psi = phi^a from phi^j(alpha).
  Recursed,
  /// dim(V n W_j) = dim V and W_j = V: the whole class a*N + j returns.
  WholeClass,
  /// Dimensions agree but the ideals differ; V may be reducible.
  IrreducibilityUnverified,
  /// Recursion depth ran out.
  DepthExhausted,
};

std::string to_string(OffsetCase c);

struct CaseSplitReport;

struct OffsetResolution {
  std::size_t offset = 0;
  OffsetCase outcome = OffsetCase::DepthExhausted;
  int intersection_dimension = -1;
  /// Sub-progressions established for this offset, in top-level indices.
  std::vector<Progression> resolved;
  /// Reports from the recursion on psi = phi^a, one per progression found
  /// in the sub-orbit.
  std::vector<CaseSplitReport> nested;
  /// Sub-horizon used by the recursion.
  std::size_t sub_horizon = 0;
  /// No empirical fallback anywhere below this offset.
  bool algebraic = false;
};

struct CaseSplitReport {
  /// The progression this report refines, in top-level indices.
  Progression progression;
  std::size_t level = 0;
  int variety_dimension = -1;
  int base_closure_dimension = -1;
  /// dim W_b < dim V.
  bool lower_dimensional = false;
  std::vector<OffsetResolution> offsets;
  std::vector<Progression> resolved;
  std::vector<std::string> flags;
  bool algebraic = false;
};

struct CaseSplitContext {
  /// Horizon of the index space the chain was built in.
  std::size_t horizon = 1;
  /// 0 picks ceil(sqrt(sub-horizon)) for each recursion.
  std::size_t a_max = 0;
  std::size_t m_min = 5;
  ClosureParams closure;
};

/// Case analysis of a progression a*N + b contained in the return set. For
/// each offset j it compares dim(V n W_j) with dim V and either recurses on
/// phi^a (lower dimension) or, when W_j = V, declares the whole class.
CaseSplitReport refine_case_split(const ReducedGroebnerBasis& v, const ClosureChain& chain, const Morphism& phi,
                                  const RationalPoint& alpha, std::size_t depth_limit, const CaseSplitContext& ctx);

}  // namespace dml
