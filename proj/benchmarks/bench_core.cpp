#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "groupalg/decide.hpp"
#include "groupalg/json_io.hpp"
#include "groupalg/matrix.hpp"

using namespace groupalg;

namespace {

Graph load_fixture(const std::string& name) {
    std::ifstream in(std::string(GROUPALG_FIXTURE_DIR) + "/" + name);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_graph(os.str());
}

// product of Z/2 with the pair groupoid on 3 units: 36 arrows
std::shared_ptr<const DiscreteGroupoid> bench_groupoid() {
    const int k = 2, n = 3;
    auto id_of = [&](int g, int i, int j) { return 1 + g * n * n + i * n + j; };
    std::vector<int> units = {1, 2, 3};
    std::vector<FiniteGroupoid::ArrowDef> arrows;
    std::map<std::pair<int, int>, int> compose;
    std::map<int, int> inverse;
    for (int g = 0; g < k; ++g)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) arrows.push_back({id_of(g, i, j), i + 1, j + 1});
    for (int g = 0; g < k; ++g)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                inverse[id_of(g, i, j)] = id_of(g, j, i);
                for (int h = 0; h < k; ++h)
                    for (int l = 0; l < n; ++l)
                        compose[{id_of(g, i, j), id_of(h, l, i)}] = id_of((g + h) % k, l, j);
            }
    return DiscreteGroupoid::from_explicit(
        FiniteGroupoid(std::move(units), std::move(arrows), std::move(compose),
                       std::move(inverse)));
}

ConvElement random_element(const Ring& ring, const std::shared_ptr<const DiscreteGroupoid>& g,
                           std::mt19937& rng, int terms) {
    std::vector<GArrow> arrows = g->arrows();
    std::uniform_int_distribution<size_t> pick(0, arrows.size() - 1);
    std::uniform_int_distribution<int> coeff(-4, 4);
    ConvElement out(ring, g);
    for (int t = 0; t < terms; ++t) {
        int c = coeff(rng);
        if (c != 0)
            out = out.add(ConvElement::delta(ring, g, arrows[pick(rng)], ring.from_int(c)));
    }
    return out;
}

void bm_convolve(benchmark::State& state) {
    auto g = bench_groupoid();
    Ring ring = Ring::integers();
    std::mt19937 rng(7);
    ConvElement f = random_element(ring, g, rng, static_cast<int>(state.range(0)));
    ConvElement h = random_element(ring, g, rng, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.convolve(h));
    }
}
BENCHMARK(bm_convolve)->Arg(4)->Arg(12)->Arg(24);

void bm_boundary_analysis(benchmark::State& state) {
    Graph g = load_fixture("two_cycles.json");
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze_boundary(g));
    }
}
BENCHMARK(bm_boundary_analysis);

void bm_decide_graph(benchmark::State& state) {
    Graph g = load_fixture("loop_with_entry.json");
    Ring ring = Ring::rationals();
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide_graph(g, ring));
    }
}
BENCHMARK(bm_decide_graph);

void bm_verify_iso(benchmark::State& state) {
    auto analysis = std::make_shared<const BoundaryAnalysis>(
        analyze_boundary(load_fixture("a3.json")));
    auto g = DiscreteGroupoid::from_boundary(analysis);
    Ring ring = Ring::integers();
    for (auto _ : state) {
        DecompositionIso iso = build_iso(g, ring);
        benchmark::DoNotOptimize(verify_iso(iso, static_cast<long>(state.range(0))));
    }
}
BENCHMARK(bm_verify_iso)->Arg(2)->Arg(3);

void bm_left_ideals(benchmark::State& state) {
    Ring ring = Ring::integers_mod(static_cast<unsigned long>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(left_ideals(ring));
    }
}
BENCHMARK(bm_left_ideals)->Arg(6)->Arg(12);

} // namespace

BENCHMARK_MAIN();
