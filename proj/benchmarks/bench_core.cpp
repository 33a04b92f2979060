#include <benchmark/benchmark.h>

#include "adegree/catalog.hpp"
#include "adegree/heights.hpp"
#include "adegree/monomial.hpp"
#include "adegree/parse.hpp"

using namespace adegree;

namespace {

ProjPoint pt23() { return ProjPoint({Int(2), Int(3), Int(1)}); }

void BM_poly_mul_dense(benchmark::State& state) {
    HomPoly a = parse_homogeneous("X^3 + 2*X^2*Y - Y^3 + X*Y*Z + Z^3", 3);
    HomPoly b = a;
    for (int i = 0; i < static_cast<int>(state.range(0)); ++i) b = poly_mul(b, a);
    for (auto _ : state) benchmark::DoNotOptimize(poly_mul(b, b));
}
BENCHMARK(BM_poly_mul_dense)->Arg(2)->Arg(4);

void BM_poly_gcd_shared_factor(benchmark::State& state) {
    HomPoly g = parse_homogeneous("X^2 + Y*Z - Z^2", 3);
    HomPoly a = poly_mul(g, parse_homogeneous("X^2 - Y^2 + X*Z", 3));
    HomPoly b = poly_mul(g, parse_homogeneous("Y^2 + 3*X*Z", 3));
    for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_poly_gcd_shared_factor);

void BM_degree_sequence_fibonacci(benchmark::State& state) {
    RationalMap f = parse_map("A2: (y, x*y)");
    for (auto _ : state) benchmark::DoNotOptimize(degree_sequence(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_degree_sequence_fibonacci)->Arg(10)->Arg(15);

void BM_degree_sequence_case32(benchmark::State& state) {
    RationalMap f = parse_map("A2: (y, x*(x - y))");
    for (auto _ : state) benchmark::DoNotOptimize(degree_sequence(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_degree_sequence_case32)->Arg(6)->Arg(9);

void BM_orbit_heights(benchmark::State& state) {
    RationalMap f = parse_map("P2: [X^2, Y^2, Z^2]");
    for (auto _ : state) benchmark::DoNotOptimize(orbit_profile(f, pt23(), 12));
}
BENCHMARK(BM_orbit_heights);

void BM_spectral_radius(benchmark::State& state) {
    IntMatrix a = {{Int(2), Int(1), Int(0)}, {Int(1), Int(1), Int(1)}, {Int(0), Int(1), Int(1)}};
    for (auto _ : state) benchmark::DoNotOptimize(monomial_delta(a));
}
BENCHMARK(BM_spectral_radius);

void BM_certificate(benchmark::State& state) {
    RationalMap f = parse_map("A2: (x^2 + y, y^2)");
    NeighborhoodSpec spec{Int(2), NeighborhoodKind::FixedPointU};
    for (auto _ : state)
        benchmark::DoNotOptimize(certify(f, {Rat(1, 2), Rat(1)}, spec, 8));
}
BENCHMARK(BM_certificate);

void BM_verify_case_11(benchmark::State& state) {
    GuedjCase gc = guedj("1.1");
    for (auto _ : state) benchmark::DoNotOptimize(verify_case(gc));
}
BENCHMARK(BM_verify_case_11);

} // namespace

BENCHMARK_MAIN();
