#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "groupalg/decide.hpp"

using namespace groupalg;
namespace gt = groupalg::test;

namespace {

const ChainFlags kFieldLike{Tri::yes, Tri::yes};
const ChainFlags kZLike{Tri::yes, Tri::no};

bool verdict_coherent(const ChainVerdict& v) {
    bool cat_eq_local = v.categorically_noetherian == v.locally_noetherian &&
                        v.categorically_artinian == v.locally_artinian;
    bool hl = !(v.artinian() == Tri::yes && v.noetherian() != Tri::yes);
    bool decomp = (v.noetherian() == Tri::yes) == !v.decomposition.empty() ||
                  (v.noetherian() == Tri::yes && v.decomposition.empty());
    return cat_eq_local && hl && decomp;
}

} // namespace

TEST_CASE("explicit groupoid verdicts") {
    auto pair = DiscreteGroupoid::from_explicit(gt::pair_groupoid());
    ChainVerdict v = decide_groupoid(pair, kZLike);
    CHECK(v.noetherian() == Tri::yes);
    CHECK(v.artinian() == Tri::no);
    REQUIRE(v.decomposition.size() == 1);
    CHECK(v.decomposition[0].size == 2);
    CHECK(v.decomposition[0].target_label == "R");

    auto z2 = DiscreteGroupoid::from_explicit(gt::one_object_group(gt::cyclic_table(2)));
    ChainVerdict w = decide_groupoid(z2, Ring::rationals());
    CHECK(w.noetherian() == Tri::yes);
    CHECK(w.artinian() == Tri::yes);
    REQUIRE(w.decomposition.size() == 1);
    CHECK(w.decomposition[0].size == 1);
    CHECK(w.decomposition[0].target_label == "GroupRing:Q:C2");

    // the empty groupoid satisfies everything vacuously
    auto empty = DiscreteGroupoid::from_explicit(FiniteGroupoid({}, {}, {}, {}));
    ChainVerdict e = decide_groupoid(empty, ChainFlags{Tri::no, Tri::no});
    CHECK(e.noetherian() == Tri::yes);
    CHECK(e.artinian() == Tri::yes);
    CHECK(e.decomposition.empty());
}

TEST_CASE("graph verdicts match the golden table") {
    ChainVerdict a2 = decide_graph(gt::load_graph("a2.json"), Ring::rationals());
    CHECK(a2.noetherian() == Tri::yes);
    CHECK(a2.artinian() == Tri::yes);
    REQUIRE(a2.decomposition.size() == 1);
    CHECK(a2.decomposition[0].size == 2);
    CHECK(a2.decomposition[0].target_label == "Q");

    ChainVerdict loop = decide_graph(gt::load_graph("loop.json"), Ring::integers());
    CHECK(loop.noetherian() == Tri::yes);
    CHECK(loop.artinian() == Tri::no);
    REQUIRE(loop.decomposition.size() == 1);
    CHECK(loop.decomposition[0].size == 1);
    CHECK(loop.decomposition[0].target_label == "Laurent:Z");

    ChainVerdict lwe = decide_graph(gt::load_graph("loop_with_exit.json"), Ring::rationals());
    CHECK(lwe.noetherian() == Tri::no);
    CHECK(lwe.artinian() == Tri::no);
    CHECK(lwe.decomposition.empty());
    CHECK(lwe.witness.has_value());

    ChainVerdict ie = decide_graph(gt::load_graph("infinite_emitter.json"), Ring::rationals());
    CHECK(ie.noetherian() == Tri::no);
    CHECK(ie.witness->kind == NonDiscretenessWitness::Kind::infinite_emitter);

    // a sink orbit and a cycle orbit side by side
    ChainVerdict mix = decide_graph(gt::load_graph("sink_and_cycle.json"), Ring::integers());
    CHECK(mix.noetherian() == Tri::yes);
    CHECK(mix.artinian() == Tri::no);
    REQUIRE(mix.decomposition.size() == 2);
    CHECK(mix.decomposition[0].size == 2);
    CHECK(mix.decomposition[0].target_label == "Z");
    CHECK(mix.decomposition[1].size == 2);
    CHECK(mix.decomposition[1].target_label == "Laurent:Z");

    // one orbit whose entry prefixes land at different cycle rotations
    ChainVerdict cwe = decide_graph(gt::load_graph("cycle_with_entry.json"), Ring::rationals());
    CHECK(cwe.noetherian() == Tri::yes);
    REQUIRE(cwe.decomposition.size() == 1);
    CHECK(cwe.decomposition[0].size == 3);
    CHECK(cwe.decomposition[0].target_label == "Laurent:Q");
}

TEST_CASE("graph verdicts carry auditable reasons") {
    ChainVerdict v = decide_graph(gt::load_graph("loop.json"), Ring::integers());
    std::set<std::string> rules;
    for (const Reason& r : v.reasons) rules.insert(r.rule);
    CHECK(rules.count("connell-artinian"));
    CHECK(rules.count("hopkins-levitzki"));
    CHECK(rules.count("discreteness:ray-clause"));
    CHECK(rules.count("categorical-equals-local"));
    CHECK(rules.count("involution"));
}

TEST_CASE("cross-model consistency on discrete fixtures") {
    for (const char* fixture : {"a2.json", "a3.json", "loop.json", "loop_with_entry.json",
                                "two_sinks.json", "two_cycles.json", "cycle_with_entry.json",
                                "sink_and_cycle.json"}) {
        Graph g = gt::load_graph(fixture);
        for (const ChainFlags& flags : {kFieldLike, kZLike, ChainFlags{Tri::no, Tri::no}}) {
            ChainVerdict direct = decide_graph(g, flags);
            // orbit-wise group-ring flag computation over the boundary orbits
            Tri noeth = Tri::yes, artin = Tri::yes;
            for (const OrbitDescriptor& o : boundary_orbits(g)) {
                Group iso = o.isotropy == OrbitDescriptor::Isotropy::trivial
                                ? Group::trivial()
                                : Group::infinite_cyclic();
                ChainFlags f = group_ring_flags(flags, iso);
                noeth = tri_and(noeth, f.noetherian);
                artin = tri_and(artin, f.artinian);
            }
            CHECK(direct.noetherian() == noeth);
            CHECK(direct.artinian() == artin);
        }
    }
}

TEST_CASE("orbit sizes against the materialized boundary groupoid") {
    for (const char* fixture : {"a2.json", "a3.json", "two_sinks.json",
                                "sink_and_cycle.json"}) {
        BoundaryAnalysis a = analyze_boundary(gt::load_graph(fixture));
        FiniteGroupoid ex = boundary_explicit_part(a);
        CHECK(ex.validate().ok());
        size_t expected = 0;
        for (const OrbitDescriptor& o : a.orbits)
            if (o.isotropy == OrbitDescriptor::Isotropy::trivial)
                expected += static_cast<size_t>(o.size()) * static_cast<size_t>(o.size());
        CHECK(ex.arrows().size() == expected);
    }
}

TEST_CASE("verdict coherence and flag monotonicity") {
    for (const char* fixture : {"a2.json", "a3.json", "loop.json", "loop_with_entry.json",
                                "loop_with_exit.json", "infinite_emitter.json",
                                "two_cycles.json", "cycle_with_entry.json",
                                "sink_and_cycle.json"}) {
        Graph g = gt::load_graph(fixture);
        std::vector<Tri> states = {Tri::yes, Tri::no, Tri::unknown};
        for (Tri n : states) {
            for (Tri a : states) {
                ChainFlags f{n, a};
                ChainVerdict v = decide_graph(g, f);
                CHECK(verdict_coherent(v));
                // weakening any flag never improves any verdict
                for (Tri n2 : states) {
                    for (Tri a2 : states) {
                        if (!tri_le(n2, n) || !tri_le(a2, a)) continue;
                        ChainVerdict w = decide_graph(g, ChainFlags{n2, a2});
                        CHECK(tri_le(w.noetherian(), v.noetherian()));
                        CHECK(tri_le(w.artinian(), v.artinian()));
                    }
                }
            }
        }
    }
}

TEST_CASE("decide_groupoid rejects the boundary model") {
    auto loop = std::make_shared<const BoundaryAnalysis>(
        analyze_boundary(gt::load_graph("loop.json")));
    auto g = DiscreteGroupoid::from_boundary(loop);
    CHECK_THROWS_AS(decide_groupoid(g, kZLike), domain_error);
}
