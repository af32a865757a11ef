#include <gtest/gtest.h>

#include "dml/closure.hpp"
#include "dml/error.hpp"
#include "generators.hpp"

using namespace dml;
using namespace dml::testing;

namespace {

std::vector<std::string> rendered(const ReducedGroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.generators()) out.push_back(render(g, xy(), gb.order()));
  return out;
}

using Strings = std::vector<std::string>;

ReducedGroebnerBasis ideal_of(std::vector<MultiPoly> gens, const MonomialOrder& order) {
  return buchberger(gens, order, gens.front().field());
}

MultiPoly X(const FieldDescriptor& d = qq()) { return var(d, 2, 0); }
MultiPoly Y(const FieldDescriptor& d = qq()) { return var(d, 2, 1); }
MultiPoly C(long long c, const FieldDescriptor& d = qq()) { return cst(c, d, 2); }

}  // namespace

TEST(OrbitClosure, Examples) {
  const auto swap = orbit_closure_ideal(swap_map(), point(qq(), {1, 2}), 2, 0, {}, lex_y_over_x());
  EXPECT_EQ(rendered(swap.ideal), (Strings{"y - 2", "x - 1"}));
  EXPECT_TRUE(swap.stabilized);

  ClosureParams linear;
  linear.degree_cap = 1;
  const auto ex = orbit_closure_ideal(frobenius_map(2), ones(gft(2), 2), 1, 0, linear, MonomialOrder::grevlex(2));
  EXPECT_TRUE(ex.ideal.is_zero_ideal());
  EXPECT_TRUE(ex.stabilized);

  const auto d = qq();
  const Morphism doubling({cst(2, d, 1) * var(d, 1, 0)});
  const auto dbl = orbit_closure_ideal(doubling, point(d, {1}), 1, 0, {}, MonomialOrder::grevlex(1));
  EXPECT_TRUE(dbl.ideal.is_zero_ideal());
  EXPECT_TRUE(dbl.stabilized);
}

TEST(OrbitClosure, ParameterValidation) {
  EXPECT_THROW((void)orbit_closure_ideal(swap_map(), point(qq(), {1, 2}), 0, 0, {}, MonomialOrder::grevlex(2)), Error);
  ClosureParams tiny;
  tiny.initial_samples = 1;
  EXPECT_THROW((void)orbit_closure_ideal(swap_map(), point(qq(), {1, 2}), 1, 0, tiny, MonomialOrder::grevlex(2)), Error);
}

TEST(OrbitClosure, BudgetExhaustionIsReportedNotThrown) {
  // x -> x + 1 over QQ: with cap 8 each doubling up to 8 samples finds a new
  // degree-m relation, so a budget of 8 never sees two equal ideals.
  const auto d = qq();
  const Morphism shift({var(d, 1, 0) + cst(1, d, 1)});
  ClosureParams p;
  p.degree_cap = 8;
  p.sample_budget = 8;
  const auto c = orbit_closure_ideal(shift, point(d, {0}), 1, 0, p, MonomialOrder::grevlex(1));
  EXPECT_FALSE(c.stabilized);
  EXPECT_EQ(c.sample_size, 8u);
}

TEST(OrbitClosure, SamplesLieOnTheClosure) {
  Rng rng(51);
  for (int trial = 0; trial < 25; ++trial) {
    const auto d = gf(5);
    std::vector<MultiPoly> comps{random_poly(rng, d, 2, 3, 2), random_poly(rng, d, 2, 3, 2)};
    const Morphism phi(comps);
    const RationalPoint alpha(random_point(rng, d, 2));
    const std::size_t a = static_cast<std::size_t>(uniform(rng, 1, 3));
    const std::size_t j = static_cast<std::size_t>(uniform(rng, 0, 3));
    const auto c = orbit_closure_ideal(phi, alpha, a, j, {}, MonomialOrder::grevlex(2));
    for (std::size_t l = 0; l < c.sample_size; ++l) {
      const auto pt = morphism_iterate(phi, alpha, a * l + j);
      EXPECT_TRUE(lies_on(c.ideal.generators(), pt));
    }
  }
}

TEST(OrbitClosure, DoublingNeverShrinksTheVariety) {
  Rng rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = gf(7);
    const Morphism phi({random_poly(rng, d, 2, 3, 2), random_poly(rng, d, 2, 3, 2)});
    const RationalPoint alpha(random_point(rng, d, 2));
    ClosureParams small;
    small.sample_budget = 8;
    ClosureParams large;
    large.sample_budget = 16;
    const auto s = orbit_closure_ideal(phi, alpha, 1, 0, small, MonomialOrder::grevlex(2));
    const auto l = orbit_closure_ideal(phi, alpha, 1, 0, large, MonomialOrder::grevlex(2));
    for (std::size_t k = 0; k < s.sample_size; ++k) {
      EXPECT_TRUE(lies_on(l.ideal.generators(), morphism_iterate(phi, alpha, k)));
    }
  }
}

TEST(ClosureChain, Examples) {
  const auto order = lex_y_over_x();
  const auto swap = closure_chain(swap_map(), point(qq(), {1, 2}), 2, 0, {}, order);
  ASSERT_EQ(swap.links.size(), 2u);
  EXPECT_EQ(rendered(swap.at(0).closure.ideal), (Strings{"y - 2", "x - 1"}));
  EXPECT_EQ(rendered(swap.at(1).closure.ideal), (Strings{"y - 1", "x - 2"}));
  EXPECT_EQ(swap.at(0).dimension, 0);
  EXPECT_EQ(swap.at(1).dimension, 0);
  EXPECT_TRUE(swap.dimensions_nonincreasing);
  EXPECT_THROW((void)swap.at(2), Error);

  const auto ex = closure_chain(frobenius_map(2), ones(gft(2), 2), 2, 1, {}, MonomialOrder::grevlex(2));
  ASSERT_EQ(ex.links.size(), 2u);
  for (const auto& l : ex.links) {
    EXPECT_TRUE(l.closure.ideal.is_zero_ideal());
    EXPECT_EQ(l.dimension, 2);
  }

  const auto d = qq();
  const Morphism identity({var(d, 1, 0)});
  const auto fixed = closure_chain(identity, point(d, {5}), 1, 0, {}, MonomialOrder::grevlex(1));
  EXPECT_EQ(render(fixed.at(0).closure.ideal.generators().at(0), std::vector<std::string>{"x"}), "x - 5");
  EXPECT_EQ(fixed.at(0).dimension, 0);
}

TEST(CertifyInvariant, Examples) {
  const auto d = gft(2);
  const auto line = ideal_of({X(d) + Y(d) - C(1, d)}, MonomialOrder::lex(2));
  const auto cert = certify_invariant(line, frobenius_map(2), 1);
  EXPECT_FALSE(cert.invariant);
  ASSERT_EQ(cert.witnesses.size(), 1u);
  EXPECT_EQ(render(cert.witnesses[0].normal_form, xy(), line.order()), "y + t + 1");

  const auto pt = ideal_of({Y() - C(2), X() - C(1)}, lex_y_over_x());
  EXPECT_TRUE(certify_invariant(pt, swap_map(), 2).invariant);
  EXPECT_FALSE(certify_invariant(pt, swap_map(), 1).invariant);

  const auto whole = ReducedGroebnerBasis::zero_ideal(MonomialOrder::grevlex(2), gft(2));
  EXPECT_TRUE(certify_invariant(whole, frobenius_map(2), 1).invariant);
  EXPECT_THROW((void)certify_invariant(pt, swap_map(), 0), Error);
}

TEST(CertifyInvariant, SoundAgainstOrbitMembership) {
  // An invariant W through phi^b(alpha) inside V forces a*N + b into S.
  Rng rng(53);
  int certified = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto d = gf(5);
    const Morphism phi({random_poly(rng, d, 2, 3, 2), random_poly(rng, d, 2, 3, 2)});
    const RationalPoint alpha(random_point(rng, d, 2));
    const std::size_t a = static_cast<std::size_t>(uniform(rng, 1, 3));
    const std::size_t b = static_cast<std::size_t>(uniform(rng, 0, 3));
    const auto w = orbit_closure_ideal(phi, alpha, a, b, {}, MonomialOrder::grevlex(2));
    if (!certify_invariant(w.ideal, phi, a).invariant || w.ideal.is_zero_ideal()) continue;
    ++certified;
    const auto s = return_set(phi, alpha, w.ideal, 60);
    for (std::size_t n = b; n < 60; n += a) EXPECT_TRUE(s.contains(n));
  }
  EXPECT_GT(certified, 10);
}

TEST(CaseSplit, SwapRecursesToTheWholeEvenClass) {
  const auto order = MonomialOrder::grevlex(2);
  const auto v = ideal_of({X() - C(1)}, order);
  const auto chain = closure_chain(swap_map(), point(qq(), {1, 2}), 2, 0, {}, order);
  CaseSplitContext ctx;
  ctx.horizon = 100;
  const auto r = refine_case_split(v, chain, swap_map(), point(qq(), {1, 2}), 3, ctx);
  EXPECT_TRUE(r.lower_dimensional);
  ASSERT_EQ(r.offsets.size(), 2u);
  EXPECT_EQ(r.offsets[0].outcome, OffsetCase::Recursed);
  EXPECT_EQ(r.offsets[1].outcome, OffsetCase::IntersectionEmpty);
  EXPECT_EQ(r.resolved, (std::vector<Progression>{{2, 0}}));
  EXPECT_TRUE(r.algebraic);
  EXPECT_TRUE(r.flags.empty());
}

TEST(CaseSplit, WholeSpaceIsOneClass) {
  const auto order = MonomialOrder::grevlex(2);
  const auto v = ReducedGroebnerBasis::zero_ideal(order, qq());
  const auto d = qq();
  const Morphism phi({X() + C(1), Y() * C(2)});
  const auto chain = closure_chain(phi, point(d, {0, 1}), 1, 0, {}, order);
  CaseSplitContext ctx;
  ctx.horizon = 50;
  const auto r = refine_case_split(v, chain, phi, point(d, {0, 1}), 3, ctx);
  ASSERT_EQ(r.offsets.size(), 1u);
  EXPECT_EQ(r.offsets[0].outcome, OffsetCase::WholeClass);
  EXPECT_EQ(r.resolved, (std::vector<Progression>{{1, 0}}));
}

TEST(CaseSplit, DepthExhaustionIsFlagged) {
  const auto order = MonomialOrder::grevlex(2);
  const auto v = ideal_of({X() - C(1)}, order);
  const auto chain = closure_chain(swap_map(), point(qq(), {1, 2}), 2, 0, {}, order);
  CaseSplitContext ctx;
  ctx.horizon = 100;
  const auto r = refine_case_split(v, chain, swap_map(), point(qq(), {1, 2}), 0, ctx);
  EXPECT_EQ(r.offsets[0].outcome, OffsetCase::DepthExhausted);
  EXPECT_FALSE(r.algebraic);
  EXPECT_FALSE(r.flags.empty());
}

TEST(CaseSplit, ReducibleVarietyIsFlagged) {
  // V = {x*y = 0} is two lines; the orbit stays on one of them.
  const auto order = MonomialOrder::grevlex(2);
  const auto v = ideal_of({X() * Y()}, order);
  const Morphism phi({X() + C(1), Y()});
  const auto alpha = point(qq(), {0, 0});
  const auto chain = closure_chain(phi, alpha, 1, 0, {}, order);
  CaseSplitContext ctx;
  ctx.horizon = 40;
  const auto r = refine_case_split(v, chain, phi, alpha, 3, ctx);
  EXPECT_EQ(r.offsets[0].outcome, OffsetCase::IrreducibilityUnverified);
  EXPECT_FALSE(r.flags.empty());
  EXPECT_EQ(to_string(OffsetCase::IrreducibilityUnverified), "irreducibility_unverified");
}
