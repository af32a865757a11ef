#include <benchmark/benchmark.h>

#include "dml/closure.hpp"
#include "dml/density.hpp"
#include "dml/ideal.hpp"
#include "dml/orbit.hpp"
#include "dml/parser.hpp"

namespace {

using namespace dml;

const std::vector<std::string> kVars{"x", "y"};

MultiPoly poly(const char* src, const FieldDescriptor& d) { return parse_polynomial_expr(src, kVars, d); }

Morphism example_map(std::uint64_t p) {
  const auto d = FieldDescriptor::rational_functions(p);
  return Morphism({poly("t*x", d), poly("(1-t)*y", d)});
}

RationalPoint ones(const FieldDescriptor& d) { return RationalPoint({FieldValue::one(d), FieldValue::one(d)}); }

void BM_ReturnSetFunctionField(benchmark::State& state) {
  const auto d = FieldDescriptor::rational_functions(2);
  const auto phi = example_map(2);
  const std::vector<MultiPoly> v{poly("x + y - 1", d)};
  const auto horizon = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(return_set(phi, ones(d), v, horizon));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ReturnSetFunctionField)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_DetectCycle(benchmark::State& state) {
  const auto d = FieldDescriptor::prime_field(static_cast<std::uint64_t>(state.range(0)));
  const Morphism phi({poly("x^2 + y", d), poly("x*y + 1", d)});
  const RationalPoint alpha({FieldValue::from_integer(1, d), FieldValue::from_integer(2, d)});
  for (auto _ : state) benchmark::DoNotOptimize(detect_cycle(phi, alpha));
}
BENCHMARK(BM_DetectCycle)->Arg(101)->Arg(1009)->Arg(10007);

void BM_Buchberger(benchmark::State& state) {
  const auto d = FieldDescriptor::prime_field(32003);
  const std::vector<std::string> vars{"x", "y", "z"};
  const std::vector<MultiPoly> gens{parse_polynomial_expr("x^2 + y*z - 1", vars, d),
                                    parse_polynomial_expr("x*y - z^2 + x", vars, d),
                                    parse_polynomial_expr("y^2 - x*z + 2", vars, d)};
  const auto order = state.range(0) ? MonomialOrder::lex(3) : MonomialOrder::grevlex(3);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, order, d));
}
BENCHMARK(BM_Buchberger)->Arg(0)->Arg(1);

void BM_VanishingIdeal(benchmark::State& state) {
  const auto d = FieldDescriptor::rationals();
  PointSet pts(d, 2);
  for (long long i = 0; i < state.range(0); ++i) {
    pts.add({FieldValue::from_integer(i, d), FieldValue::from_integer(i * i * i - 2 * i, d)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_ideal(pts, MonomialOrder::grevlex(2)));
}
BENCHMARK(BM_VanishingIdeal)->Arg(8)->Arg(16)->Arg(32);

void BM_WindowDensity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::size_t> idx;
  for (std::size_t k = 1; k * k < n; ++k) idx.push_back(k * k);
  const ReturnSet s(n, idx);
  for (auto _ : state) benchmark::DoNotOptimize(density_profile(s));
}
BENCHMARK(BM_WindowDensity)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);

void BM_ClosureChainSwap(benchmark::State& state) {
  const auto d = FieldDescriptor::rationals();
  const Morphism phi({poly("y", d), poly("x", d)});
  const RationalPoint alpha({FieldValue::from_integer(1, d), FieldValue::from_integer(2, d)});
  for (auto _ : state) benchmark::DoNotOptimize(closure_chain(phi, alpha, 2, 0, {}, MonomialOrder::grevlex(2)));
}
BENCHMARK(BM_ClosureChainSwap);

}  // namespace

BENCHMARK_MAIN();
