// Acceptance criteria, one PASS/FAIL line each. Exit status is the number
// of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "dml/closure.hpp"
#include "dml/density.hpp"
#include "dml/experiment.hpp"
#include "dml/ideal.hpp"
#include "dml/orbit.hpp"
#include "generators.hpp"

using namespace dml;
using namespace dml::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok && pass) detail << what;
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<MultiPoly> frobenius_line(std::uint64_t p) {
  const auto d = gft(p);
  return {var(d, 2, 0) + var(d, 2, 1) - cst(1, d, 2)};
}

std::vector<std::size_t> powers_below(std::size_t p, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k < n; k *= p) out.push_back(k);
  return out;
}

void frobenius_return_sets(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto s2 = return_set(frobenius_map(2), ones(gft(2), 2), frobenius_line(2), 1100);
  const auto s3 = return_set(frobenius_map(3), ones(gft(3), 2), frobenius_line(3), 800);
  const double elapsed = seconds_since(start);
  o.check(s2.indices() == powers_below(2, 1100), "p=2 return set differs; ");
  o.check(s3.indices() == powers_below(3, 800), "p=3 return set differs; ");
  o.check(elapsed < 10.0, "runtime over 10 s; ");
  o.detail << "p=2: " << s2.size() << " indices, p=3: " << s3.size() << " indices, " << elapsed << " s";
}

void frobenius_no_progressions(Outcome& o) {
  const std::size_t n = 1u << 16;
  const auto start = std::chrono::steady_clock::now();
  const auto s = return_set(frobenius_map(2), ones(gft(2), 2), frobenius_line(2), n);
  const auto progs = detect_progressions(s, 64, 5, 0);
  const auto dec = decompose_return_set(s, progs);
  o.check(s.indices() == powers_below(2, n), "return set is not the powers of 2; ");
  o.check(progs.empty(), "progressions found; ");
  o.check(dec.progressions.empty() && dec.residual == s, "decomposition is not A=0, B=S; ");
  o.detail << "|S|=" << s.size() << ", progressions=" << progs.size() << ", " << seconds_since(start) << " s";
}

void cube_block_density(Outcome& o) {
  const std::size_t n = 100000;
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::size_t> v;
  for (std::size_t k = 1; k * k * k < n; ++k) {
    for (std::size_t m = k * k * k; m <= k * k * k + k && m < n; ++m) v.push_back(m);
  }
  const ReturnSet s(n, v);
  const std::vector<std::size_t> schedule{40, n};
  const auto profile = density_profile(s, schedule);
  const double elapsed = seconds_since(start);
  o.check(profile.entries.at(1).max_ratio == Ratio(1127, 100000), "ordinary density differs; ");
  o.check(profile.entries.at(0).max_ratio == Ratio(1), "L=40 ratio differs; ");
  o.check(elapsed < 5.0, "runtime over 5 s; ");
  o.detail << "L=N: " << ratio_to_string(profile.entries.at(1).max_ratio)
           << ", L=40: " << ratio_to_string(profile.entries.at(0).max_ratio) << ", " << elapsed << " s";
}

void finite_field_oracle(Outcome& o) {
  Rng rng(20240601);
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
  int instances = 0;
  int with_progressions = 0;
  int with_exceptions = 0;
  while (instances < 150) {
    const auto d = gf(primes[uniform(rng, 0, 5)]);
    const std::size_t nv = static_cast<std::size_t>(uniform(rng, 1, 2));
    std::vector<MultiPoly> comps;
    for (std::size_t i = 0; i < nv; ++i) comps.push_back(random_poly(rng, d, nv, 3, 2));
    const Morphism phi(comps);
    const RationalPoint alpha(random_point(rng, d, nv));
    const std::vector<MultiPoly> v{random_poly(rng, d, nv, 2, 2)};
    ++instances;

    // Exact answer from the cycle: residue classes beyond the preperiod plus
    // the finite set of early returns.
    const auto cyc = detect_cycle(phi, alpha);
    const std::size_t n = cyc.preperiod + 4 * cyc.period;
    std::vector<Progression> classes;
    std::vector<std::size_t> early;
    RationalPoint p = alpha;
    for (std::size_t k = 0; k < cyc.preperiod + cyc.period; ++k) {
      if (k > 0) p = phi.apply(p);
      if (!lies_on(v, p)) continue;
      if (k < cyc.preperiod) {
        early.push_back(k);
      } else {
        classes.push_back({cyc.period, k});
      }
    }
    const auto exact_cover = covered_indices(classes, n);
    const ReturnSet exact_residual(n, early);

    const auto s = return_set(phi, alpha, v, n);
    const auto found = detect_progressions(s, cyc.period, 4, cyc.preperiod);
    const auto dec = decompose_return_set(s, found);
    const bool same = covered_indices(dec.progressions, n) == exact_cover && dec.residual == exact_residual;
    if (!same) {
      o.check(false, "instance " + std::to_string(instances) + " disagrees; ");
    }
    with_progressions += !classes.empty();
    with_exceptions += !early.empty();
  }
  o.detail << instances << " instances (" << with_progressions << " with progressions, " << with_exceptions
           << " with early returns)";
}

void groebner_properties(Outcome& o) {
  Rng rng(77);
  const std::vector<FieldDescriptor> fields{qq(), gf(7), gf(2), gft(3)};
  int bases = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto d = fields[static_cast<std::size_t>(trial) % fields.size()];
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto order = random_order(rng, n);
    std::vector<MultiPoly> gens;
    for (long long k = uniform(rng, 1, 4); k > 0; --k) gens.push_back(random_poly(rng, d, n, 3, 2));
    const auto gb = buchberger(gens, order, d);
    ++bases;
    const auto& g = gb.generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        o.check(normal_form(s_polynomial(g[i], g[j], order), gb).is_zero(), "S-polynomial with nonzero remainder; ");
      }
    }
    for (int perm = 0; perm < 3; ++perm) {
      std::shuffle(gens.begin(), gens.end(), rng);
      o.check(buchberger(gens, order, d) == gb, "basis depends on generator order; ");
    }
  }
  const auto d = gf(7);
  const std::vector<MultiPoly> fixture{var(d, 3, 0) * var(d, 3, 1) - var(d, 3, 2), var(d, 3, 1) * var(d, 3, 1) - cst(1, d, 3),
                                       var(d, 3, 0) + var(d, 3, 2) * var(d, 3, 2)};
  const auto gb = buchberger(fixture, MonomialOrder::grevlex(3));
  for (int i = 0; i < 1000; ++i) {
    const auto f = random_poly(rng, d, 3, 5, 4);
    const auto nf = normal_form(f, gb);
    o.check(normal_form(nf, gb) == nf, "normal form not idempotent; ");
  }
  o.detail << bases << " random bases, 1000 normal forms";
}

void buchberger_moller(Outcome& o) {
  Rng rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = trial % 2 ? gf(7) : qq();
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    PointSet pts(d, n);
    for (long long k = uniform(rng, 1, 20); k > 0; --k) {
      std::vector<FieldValue> p;
      for (std::size_t i = 0; i < n; ++i) p.push_back(FieldValue::from_integer(uniform(rng, -4, 4), d));
      pts.add(p);
    }
    const auto gb = vanishing_ideal(pts, random_order(rng, n));
    for (const auto& g : gb.generators()) {
      for (const auto& p : pts.points()) o.check(g.evaluate(p).is_zero(), "generator does not vanish; ");
    }
    o.check(standard_monomial_count(gb) == pts.distinct().size(), "standard monomial count differs; ");
  }

  auto rendered = [](const ReducedGroebnerBasis& gb) {
    std::vector<std::string> out;
    for (const auto& g : gb.generators()) out.push_back(render(g, xy(), gb.order()));
    return out;
  };
  auto pts = [](std::initializer_list<std::pair<long long, long long>> list) {
    PointSet s(qq(), 2);
    for (auto [a, b] : list) s.add({FieldValue::from_integer(a, qq()), FieldValue::from_integer(b, qq())});
    return s;
  };
  using Strings = std::vector<std::string>;
  const auto order = lex_y_over_x();
  o.check(rendered(vanishing_ideal(pts({{1, 2}}), order)) == Strings{"y - 2", "x - 1"}, "worked example 1; ");
  o.check(rendered(vanishing_ideal(pts({{1, 1}, {2, 4}, {3, 9}}), order)) ==
              Strings{"y - x^2", "x^3 - 6*x^2 + 11*x - 6"},
          "worked example 2; ");
  o.check(rendered(vanishing_ideal(pts({{0, 0}, {1, 1}}), order)) == Strings{"y - x", "x^2 - x"}, "worked example 3; ");
  o.detail << "100 random point sets, 3 worked examples";
}

void swap_end_to_end(Outcome& o) {
  const std::vector<MultiPoly> v{var(qq(), 2, 0) - cst(1, qq(), 2)};
  for (std::size_t n : {1, 2, 3, 7, 50, 100, 257, 1000}) {
    const auto s = return_set(swap_map(), point(qq(), {1, 2}), v, n);
    std::vector<std::size_t> evens;
    for (std::size_t k = 0; k < n; k += 2) evens.push_back(k);
    o.check(s.indices() == evens, "return set at N=" + std::to_string(n) + " is not 2N; ");
  }
  for (std::size_t n : {10, 100, 257}) {
    ExperimentSpec spec;
    spec.field = qq();
    spec.vars = {"x", "y"};
    spec.phi = {"y", "x"};
    spec.alpha = {"1", "2"};
    spec.variety = {"x - 1"};
    spec.horizon = n;
    const auto report = run_experiment(spec);
    const std::string at = " at N=" + std::to_string(n) + "; ";
    o.check(report.decomposition.progressions == std::vector<Progression>{{2, 0}}, "A is not [(2,0)]" + at);
    o.check(report.decomposition.residual.empty(), "B is not empty" + at);
    o.check(report.progressions.size() == 1, "expected one certified progression" + at);
    if (report.progressions.size() != 1) continue;
    const auto& cert = report.progressions[0].certificate;
    std::vector<std::string> w0;
    for (const auto& g : cert.ideal.generators()) w0.push_back(render(g, spec.vars, cert.ideal.order()));
    o.check(cert.invariant, "certificate not invariant" + at);
    o.check(w0 == std::vector<std::string>{"x - 1", "y - 2"}, "W_0 differs" + at);
  }
  o.detail << "A=[(2,0)], W_0={x - 1, y - 2} invariant, B=empty";
}

void non_invariance_witness(Outcome& o) {
  const auto d = gft(2);
  std::string last;
  for (const auto& order : {MonomialOrder::lex(2), MonomialOrder::grevlex(2)}) {
    const auto w = buchberger(frobenius_line(2), order, d);
    const auto cert = certify_invariant(w, frobenius_map(2), 1);
    o.check(!cert.invariant, "reported invariant; ");
    o.check(cert.witnesses.size() == 1, "expected one witness; ");
    if (cert.witnesses.size() != 1) continue;
    last = render(cert.witnesses[0].normal_form, xy(), order);
    o.check(last == "y + t + 1", "witness normal form is " + last + "; ");
  }
  o.detail << "invariant=false, witness normal form: " << last;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"1 Frobenius orbit return sets (p=2, N=1100; p=3, N=800)", frobenius_return_sets},
      {"2 Frobenius orbit has no progression at N=2^16", frobenius_no_progressions},
      {"3 cube-block set densities", cube_block_density},
      {"4 finite-field cycle oracle equivalence", finite_field_oracle},
      {"5 Groebner engine properties", groebner_properties},
      {"6 Buchberger-Moller correctness", buchberger_moller},
      {"7 swap fixture end to end", swap_end_to_end},
      {"8 non-invariance witness", non_invariance_witness},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what() + "; ");
    }
    failed += !o.pass;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed;
}
