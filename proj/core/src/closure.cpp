#include "dml/closure.hpp"

#include <algorithm>
#include <tuple>

#include "dml/error.hpp"

namespace dml {

namespace {

// Maps indices of a sub-orbit back to the top-level orbit: l -> scale*l + shift.
struct IndexMap {
  std::size_t scale = 1;
  std::size_t shift = 0;

  std::size_t operator()(std::size_t l) const { return scale * l + shift; }
  Progression operator()(const Progression& p) const { return {scale * p.modulus, (*this)(p.offset)}; }
  IndexMap then(std::size_t a, std::size_t j) const { return {scale * a, (*this)(j)}; }
};

void append_unique(std::vector<Progression>& out, const std::vector<Progression>& more) {
  for (const auto& p : more) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const Progression& x, const Progression& y) {
    return std::tie(x.modulus, x.offset) < std::tie(y.modulus, y.offset);
  });
}

CaseSplitReport refine(const ReducedGroebnerBasis& v, const ClosureChain& chain, const Morphism& phi,
                       const RationalPoint& alpha, std::size_t depth, const CaseSplitContext& ctx,
                       std::size_t level, const IndexMap& map);

OffsetResolution recurse_on_offset(const ReducedGroebnerBasis& target, const ClosureChain& chain,
                                   const Morphism& phi, const RationalPoint& alpha, std::size_t j,
                                   std::size_t depth, const CaseSplitContext& ctx, std::size_t level,
                                   const IndexMap& map, std::vector<std::string>& flags) {
  const std::size_t a = chain.modulus;
  OffsetResolution res;
  res.offset = map(j);
  res.outcome = OffsetCase::Recursed;
  res.sub_horizon = j < ctx.horizon ? (ctx.horizon - j + a - 1) / a : 0;
  if (res.sub_horizon == 0) {
    flags.push_back("offset " + std::to_string(res.offset) + ": no sub-orbit samples below the horizon");
    return res;
  }
  const Morphism psi = phi.power(a);
  const RationalPoint beta = morphism_iterate(phi, alpha, j);
  const ReturnSet sub = return_set(psi, beta, target, res.sub_horizon);
  const std::size_t a_max = ctx.a_max ? ctx.a_max : default_a_max(res.sub_horizon);
  const auto progs = detect_progressions(sub, a_max, ctx.m_min, 0);

  CaseSplitContext sub_ctx = ctx;
  sub_ctx.horizon = res.sub_horizon;
  const IndexMap sub_map = map.then(a, j);
  res.algebraic = true;
  for (const auto& p : progs) {
    const ClosureChain sub_chain = closure_chain(psi, beta, p.modulus, p.offset, ctx.closure, target.order());
    CaseSplitReport nested = refine(target, sub_chain, psi, beta, depth - 1, sub_ctx, level + 1, sub_map);
    append_unique(res.resolved, nested.resolved);
    res.algebraic = res.algebraic && nested.algebraic;
    res.nested.push_back(std::move(nested));
  }
  return res;
}

CaseSplitReport refine(const ReducedGroebnerBasis& v, const ClosureChain& chain, const Morphism& phi,
                       const RationalPoint& alpha, std::size_t depth, const CaseSplitContext& ctx,
                       std::size_t level, const IndexMap& map) {
  CaseSplitReport report;
  report.progression = map(Progression{chain.modulus, chain.base});
  report.level = level;
  report.variety_dimension = ideal_dimension(v);
  const ChainLink& base = chain.at(chain.base);
  report.base_closure_dimension = base.dimension;
  report.lower_dimensional = base.dimension < report.variety_dimension;
  report.flags = chain.diagnostics;
  if (!ideal_contains(base.closure.ideal, v)) {
    report.flags.push_back("sampled closure of the base class is not contained in V");
  }

  report.algebraic = true;
  for (const auto& link : chain.links) {
    const std::size_t j = link.offset;
    const ReducedGroebnerBasis meet = ideal_sum(v, link.closure.ideal);
    OffsetResolution res;
    const int d = ideal_dimension(meet);
    if (d < report.variety_dimension) {
      if (meet.is_unit_ideal()) {
        res.offset = map(j);
        res.outcome = OffsetCase::IntersectionEmpty;
        res.algebraic = true;
      } else if (depth == 0) {
        res.offset = map(j);
        res.outcome = OffsetCase::DepthExhausted;
        report.flags.push_back("offset " + std::to_string(res.offset) +
                               ": depth limit reached, empirical fallback");
      } else {
        res = recurse_on_offset(meet, chain, phi, alpha, j, depth, ctx, level, map, report.flags);
      }
    } else if (ideal_equal(link.closure.ideal, v)) {
      res.offset = map(j);
      res.outcome = OffsetCase::WholeClass;
      res.resolved.push_back(map(Progression{chain.modulus, j}));
      res.algebraic = true;
    } else {
      res.offset = map(j);
      res.outcome = OffsetCase::IrreducibilityUnverified;
      report.flags.push_back("offset " + std::to_string(res.offset) +
                             ": irreducibility assumption unverified, empirical fallback");
    }
    res.intersection_dimension = d;
    append_unique(report.resolved, res.resolved);
    report.algebraic = report.algebraic && res.algebraic;
    report.offsets.push_back(std::move(res));
  }
  return report;
}

}  // namespace

ClosureIdeal orbit_closure_ideal(const Morphism& phi, const RationalPoint& alpha, std::size_t a, std::size_t j,
                                 const ClosureParams& params, const MonomialOrder& order) {
  if (a < 1) throw Error("closure modulus must be at least 1");
  if (params.initial_samples < 2) throw Error("initial_samples must be at least 2");
  if (params.sample_budget < params.initial_samples) throw Error("sample_budget is below initial_samples");
  if (order.num_vars() != phi.num_vars()) throw Error("variable count mismatch");

  const Morphism step = phi.power(a);
  PointSet samples(phi.field(), phi.num_vars());
  RationalPoint next = morphism_iterate(phi, alpha, j);
  auto closure_of = [&](std::size_t m) {
    while (samples.points().size() < m) {
      samples.add(next.coords());
      next = step.apply(next);
    }
    return vanishing_ideal(samples, order, params.degree_cap);
  };

  std::size_t m = params.initial_samples;
  ReducedGroebnerBasis prev = closure_of(m);
  while (2 * m <= params.sample_budget) {
    ReducedGroebnerBasis cur = closure_of(2 * m);
    m *= 2;
    if (ideal_equal(cur, prev)) return {std::move(cur), true, m, params.degree_cap};
    prev = std::move(cur);
  }
  return {std::move(prev), false, m, params.degree_cap};
}

const ChainLink& ClosureChain::at(std::size_t offset) const {
  for (const auto& l : links) {
    if (l.offset == offset) return l;
  }
  throw Error("offset " + std::to_string(offset) + " is not part of the chain");
}

ClosureChain closure_chain(const Morphism& phi, const RationalPoint& alpha, std::size_t a, std::size_t b,
                           const ClosureParams& params, const MonomialOrder& order) {
  if (a < 1) throw Error("closure modulus must be at least 1");
  ClosureChain chain;
  chain.modulus = a;
  chain.base = b;
  for (std::size_t j = b; j < b + a; ++j) {
    ChainLink link{j, orbit_closure_ideal(phi, alpha, a, j, params, order), 0};
    link.dimension = ideal_dimension(link.closure.ideal);
    if (!link.closure.stabilized) {
      chain.diagnostics.push_back("W_" + std::to_string(j) + " did not stabilize within " +
                                  std::to_string(link.closure.sample_size) + " samples");
    }
    if (!chain.links.empty() && link.dimension > chain.links.back().dimension) {
      chain.dimensions_nonincreasing = false;
      chain.diagnostics.push_back("dimension increases from W_" + std::to_string(j - 1) + " to W_" +
                                  std::to_string(j));
    }
    chain.links.push_back(std::move(link));
  }
  return chain;
}

PeriodicityCertificate certify_invariant(const ReducedGroebnerBasis& w, const Morphism& phi, std::size_t a) {
  if (a < 1) throw Error("certificate modulus must be at least 1");
  if (w.num_vars() != phi.num_vars()) throw Error("variable count mismatch");
  const Morphism step = phi.power(a);
  PeriodicityCertificate cert{w, a, true, {}};
  for (const auto& g : w.generators()) {
    MultiPoly nf = normal_form(step.pullback(g), w);
    if (!nf.is_zero()) cert.witnesses.push_back({g, std::move(nf)});
  }
  cert.invariant = cert.witnesses.empty();
  return cert;
}

std::string to_string(OffsetCase c) {
  switch (c) {
    case OffsetCase::IntersectionEmpty:
      return "intersection_empty";
    case OffsetCase::Recursed:
      return "lower_dimension_recursed";
    case OffsetCase::WholeClass:
      return "whole_class";
    case OffsetCase::IrreducibilityUnverified:
      return "irreducibility_unverified";
    case OffsetCase::DepthExhausted:
      return "depth_exhausted";
  }
  return "unknown";
}

CaseSplitReport refine_case_split(const ReducedGroebnerBasis& v, const ClosureChain& chain, const Morphism& phi,
                                  const RationalPoint& alpha, std::size_t depth_limit, const CaseSplitContext& ctx) {
  if (chain.links.empty()) throw Error("empty closure chain");
  return refine(v, chain, phi, alpha, depth_limit, ctx, 0, IndexMap{});
}

}  // namespace dml
