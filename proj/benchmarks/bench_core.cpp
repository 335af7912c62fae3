#include <benchmark/benchmark.h>

#include "nsatz/elimination.hpp"
#include "nsatz/gcd.hpp"
#include "nsatz/hentzelt.hpp"
#include "nsatz/nullsatz.hpp"
#include "nsatz/parse.hpp"
#include "nsatz/resultant.hpp"

using namespace nsatz;

namespace {

void BM_resultant_bivariate(benchmark::State& state) {
  auto ctx = make_ctx({"x", "y"});
  Poly f = parse("x^3 + 2*x^2*y - x*y^2 + y^3 - 3*x + 1", ctx);
  Poly g = parse("2*x^3 - x^2 + 3*x*y^2 - y + 2", ctx);
  for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g, 0));
}
BENCHMARK(BM_resultant_bivariate);

void BM_resultant_cofactors(benchmark::State& state) {
  auto ctx = make_ctx({"x", "y"});
  Poly f = parse("x^4 - x*y + y^2 - 2", ctx);
  Poly g = parse("x^3 + y*x - 1", ctx);
  for (auto _ : state)
    benchmark::DoNotOptimize(resultant_with_cofactors(f, g, 0));
}
BENCHMARK(BM_resultant_cofactors);

void BM_kronecker_resolvent(benchmark::State& state) {
  auto ctx = make_ctx({"x1", "x2", "x3"});
  Ideal ideal = ideal_from_strings(
      ctx, {"x1^3", "x2^3", "x1^2 + x2^2 + x1*x2*x3"});
  for (auto _ : state) benchmark::DoNotOptimize(kronecker_resolvent(ideal, 0));
}
BENCHMARK(BM_kronecker_resolvent);

void BM_hentzelt_chain(benchmark::State& state) {
  auto ctx = make_ctx({"x1", "x2", "x3"});
  Ideal ideal = ideal_from_strings(
      ctx, {"x1^3", "x2^3", "x1^2 + x2^2 + x1*x2*x3"});
  for (auto _ : state) benchmark::DoNotOptimize(hentzelt_chain(ideal, 0));
}
BENCHMARK(BM_hentzelt_chain);

void BM_gcd_multivariate(benchmark::State& state) {
  auto ctx = make_ctx({"x", "y"});
  Poly d = parse("x^2 - y^2 + x - 1", ctx);
  Poly a = d * parse("x^3 + 2*y - 1", ctx);
  Poly b = d * parse("y^3 - x + 2", ctx);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_gcd_multivariate);

void BM_hilbert_function(benchmark::State& state) {
  auto ctx = make_ctx({"x1", "x2", "x3"});
  Ideal ideal = ideal_from_strings(ctx, {"x1^2", "x2^2", "x3^2"});
  int nu = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_function(ideal, nu));
}
BENCHMARK(BM_hilbert_function)->Arg(3)->Arg(6);

void BM_radical_membership(benchmark::State& state) {
  auto ctx = make_ctx({"x", "y"});
  Ideal conics = ideal_from_strings(ctx, {"x^2 + y^2 - 1", "x^2 + 4*y^2 - 1"});
  Poly y = Poly::variable(ctx, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(radical_membership(y, conics, 0));
}
BENCHMARK(BM_radical_membership);

}  // namespace

BENCHMARK_MAIN();
