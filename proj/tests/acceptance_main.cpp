// Acceptance suite: one pass/fail line per criterion, exact arithmetic,
// zero tolerance throughout. Exit code 0 iff every criterion passes.

#include <functional>
#include <iostream>
#include <sstream>

#include "groupalg/decide.hpp"
#include "groupalg/json_io.hpp"
#include "groupalg/matrix.hpp"
#include "test_support.hpp"

using namespace groupalg;
namespace gt = groupalg::test;

namespace {

using CriterionFn = std::function<std::optional<std::string>()>;

std::shared_ptr<const BoundaryAnalysis> analyzed(const std::string& fixture) {
    return std::make_shared<const BoundaryAnalysis>(analyze_boundary(gt::load_graph(fixture)));
}

#define REQUIRE_OR(cond, msg)                                                                      \
    do {                                                                                           \
        if (!(cond)) return std::string(msg);                                                      \
    } while (0)

// 1. convolution algebra axioms on randomized triples
std::optional<std::string> criterion_axioms() {
    gt::Rng rng(0xA11C0DE);
    const std::vector<Ring> rings = {Ring::integers(), Ring::rationals(), Ring::integers_mod(4)};
    auto groupoids = gt::axiom_fixture_groupoids();
    REQUIRE_OR(groupoids.size() == 5, "expected five fixture groupoids");
    for (const auto& g : groupoids)
        REQUIRE_OR(g->arrows().size() <= 12, "fixture groupoid exceeds 12 arrows");
    for (const auto& g : groupoids) {
        for (const Ring& ring : rings) {
            for (int iter = 0; iter < 500; ++iter) {
                ConvElement f = rng.conv(ring, g);
                ConvElement h = rng.conv(ring, g);
                ConvElement k = rng.conv(ring, g);
                if (!(f.convolve(h).convolve(k) == f.convolve(h.convolve(k))))
                    return "associativity failed";
                if (!(f.convolve(h.add(k)) == f.convolve(h).add(f.convolve(k))))
                    return "left distributivity failed";
                if (!(f.add(h).convolve(k) == f.convolve(k).add(h.convolve(k))))
                    return "right distributivity failed";
                if (!(f.convolve(h).involute() == h.involute().convolve(f.involute())))
                    return "involution anti-multiplicativity failed";
            }
        }
    }
    return std::nullopt;
}

// 2. chi_V * chi_W = chi_{V cap W}, and = chi_V iff V subset of W, exhaustively
std::optional<std::string> criterion_unit_characteristics() {
    const Ring Z = Ring::integers();
    for (const auto& g : gt::axiom_fixture_groupoids()) {
        const auto& units = g->units();
        REQUIRE_OR(units.size() <= 4, "fixture unit space exceeds 4");
        for (unsigned vm = 0; vm < (1u << units.size()); ++vm) {
            for (unsigned wm = 0; wm < (1u << units.size()); ++wm) {
                std::vector<int> V, W, meet;
                for (size_t i = 0; i < units.size(); ++i) {
                    if (vm & (1u << i)) V.push_back(units[i]);
                    if (wm & (1u << i)) W.push_back(units[i]);
                    if ((vm & wm) & (1u << i)) meet.push_back(units[i]);
                }
                ConvElement cv = ConvElement::unit_char(Z, g, V);
                ConvElement cw = ConvElement::unit_char(Z, g, W);
                if (!(cv.convolve(cw) == ConvElement::unit_char(Z, g, meet)))
                    return "chi_V * chi_W != chi_{V cap W}";
                bool subset = (vm & wm) == vm;
                if ((cv.convolve(cw) == cv) != subset)
                    return "chi_V * chi_W = chi_V iff V subset W violated";
            }
        }
    }
    return std::nullopt;
}

// 3. decomposition isomorphism across the explicit and boundary fixture set
std::optional<std::string> criterion_iso() {
    std::vector<std::pair<std::string, std::shared_ptr<const DiscreteGroupoid>>> pool = {
        {"pair groupoid", DiscreteGroupoid::from_explicit(gt::pair_groupoid())},
        {"one-object Z/2", DiscreteGroupoid::from_explicit(gt::one_object_group(gt::cyclic_table(2)))},
        {"mixed two-orbit", DiscreteGroupoid::from_explicit(gt::mixed_two_orbit())},
    };
    for (const char* fixture :
         {"a2.json", "a3.json", "loop.json", "loop_with_entry.json", "two_sinks.json"}) {
        pool.emplace_back(fixture, DiscreteGroupoid::from_boundary(analyzed(fixture)));
    }
    for (const auto& [name, g] : pool) {
        IsoVerification rep = verify_iso(build_iso(g, Ring::integers()), 3);
        if (!rep.ok()) {
            for (const auto& c : rep.checks)
                if (!c.pass)
                    return name + ": " + c.name + " failed: " +
                           (c.failures.empty() ? "" : c.failures.front());
        }
    }
    return std::nullopt;
}

// 4. column-module/ideal bijection with pinned lattice sizes
std::optional<std::string> criterion_column_oracle() {
    const std::vector<std::pair<unsigned long, size_t>> table = {{2, 2}, {4, 3}, {6, 4}};
    for (const auto& [modulus, ideal_count] : table) {
        Ring ring = Ring::integers_mod(modulus);
        if (left_ideals(ring).size() != ideal_count)
            return "Zmod:" + std::to_string(modulus) + " ideal count != " +
                   std::to_string(ideal_count);
        for (int size : {2, 3}) {
            std::vector<int> J;
            for (int i = 1; i <= size; ++i) J.push_back(i);
            for (int p : J) {
                ColumnOracleReport rep = column_submodule_check(ring, J, p);
                if (!rep.bijective)
                    return "bijection failed for Zmod:" + std::to_string(modulus) +
                           ", |J|=" + std::to_string(size) + ", p=" + std::to_string(p);
                if (!rep.inclusion_preserving)
                    return "inclusion preservation failed for Zmod:" + std::to_string(modulus);
                if (rep.submodule_sizes.size() != ideal_count ||
                    rep.ideals.size() != ideal_count)
                    return "lattice size mismatch for Zmod:" + std::to_string(modulus);
            }
        }
    }
    return std::nullopt;
}

// 5. golden graph verdicts
std::optional<std::string> criterion_golden_verdicts() {
    {
        ChainVerdict v = decide_graph(gt::load_graph("a3.json"), Ring::rationals());
        REQUIRE_OR(v.noetherian() == Tri::yes && v.artinian() == Tri::yes,
                   "(A3, Q) must be noetherian and artinian");
        REQUIRE_OR(v.decomposition.size() == 1 && v.decomposition[0].size == 3 &&
                       v.decomposition[0].target_label == "Q",
                   "(A3, Q) decomposition must be M_3(Q)");
    }
    {
        ChainVerdict v = decide_graph(gt::load_graph("loop.json"), Ring::integers());
        REQUIRE_OR(v.noetherian() == Tri::yes && v.artinian() == Tri::no,
                   "(loop, Z) must be noetherian only");
        REQUIRE_OR(v.decomposition.size() == 1 && v.decomposition[0].size == 1 &&
                       v.decomposition[0].target_label == "Laurent:Z",
                   "(loop, Z) decomposition must be M_1(Laurent:Z)");
    }
    {
        ChainVerdict v = decide_graph(gt::load_graph("loop_with_entry.json"), Ring::rationals());
        REQUIRE_OR(v.noetherian() == Tri::yes && v.artinian() == Tri::no,
                   "(loop-with-entry, Q) must be noetherian only");
        REQUIRE_OR(v.decomposition.size() == 1 && v.decomposition[0].size == 2 &&
                       v.decomposition[0].target_label == "Laurent:Q",
                   "(loop-with-entry, Q) decomposition must be M_2(Laurent:Q)");
    }
    for (const Ring& ring : {Ring::rationals(), Ring::integers(), Ring::integers_mod(4)}) {
        ChainVerdict v = decide_graph(gt::load_graph("loop_with_exit.json"), ring);
        REQUIRE_OR(v.noetherian() == Tri::no && v.artinian() == Tri::no,
                   "(loop-with-exit) must satisfy neither condition");
        REQUIRE_OR(v.witness.has_value(), "(loop-with-exit) must carry a witness");
        REQUIRE_OR(v.witness->kind == NonDiscretenessWitness::Kind::cycle_with_exit,
                   "(loop-with-exit) witness must be the infinite cylinder family");
    }
    {
        ChainVerdict v = decide_graph(gt::load_graph("infinite_emitter.json"), Ring::rationals());
        REQUIRE_OR(v.noetherian() == Tri::no && v.artinian() == Tri::no,
                   "(infinite emitter) must satisfy neither condition");
        REQUIRE_OR(v.witness &&
                       v.witness->kind == NonDiscretenessWitness::Kind::infinite_emitter,
                   "(infinite emitter) witness must name the flagged vertex");
    }
    return std::nullopt;
}

// 6. cross-model consistency
std::optional<std::string> criterion_cross_model() {
    const std::vector<ChainFlags> flag_pool = {{Tri::yes, Tri::yes},
                                               {Tri::yes, Tri::no},
                                               {Tri::no, Tri::no}};
    for (const char* fixture : {"a2.json", "a3.json", "loop.json", "loop_with_entry.json",
                                "two_sinks.json", "two_cycles.json"}) {
        Graph g = gt::load_graph(fixture);
        BoundaryAnalysis a = analyze_boundary(g);
        FiniteGroupoid ex = boundary_explicit_part(a);
        if (!ex.validate().ok()) return std::string(fixture) + ": explicit part invalid";
        size_t expected = 0;
        for (const OrbitDescriptor& o : a.orbits)
            if (o.isotropy == OrbitDescriptor::Isotropy::trivial)
                expected += static_cast<size_t>(o.size()) * static_cast<size_t>(o.size());
        if (ex.arrows().size() != expected)
            return std::string(fixture) + ": arrow count != sum of squared orbit sizes";

        for (const ChainFlags& flags : flag_pool) {
            ChainVerdict direct = decide_graph(g, flags);
            Tri noeth = Tri::yes, artin = Tri::yes;
            for (const OrbitDescriptor& o : a.orbits) {
                Group iso = o.isotropy == OrbitDescriptor::Isotropy::trivial
                                ? Group::trivial()
                                : Group::infinite_cyclic();
                ChainFlags f = group_ring_flags(flags, iso);
                noeth = tri_and(noeth, f.noetherian);
                artin = tri_and(artin, f.artinian);
            }
            if (direct.noetherian() != noeth || direct.artinian() != artin)
                return std::string(fixture) + ": graph verdict != orbit-wise computation";
        }
    }
    return std::nullopt;
}

// 7. coherence meta-properties on randomized (graph, ring-spec) pairs
std::optional<std::string> criterion_random_coherence() {
    gt::Rng rng(0xC0FFEE);
    const std::vector<std::string> ring_pool = {"Z",          "Q",          "Zmod:4",
                                                "Zmod:6",     "Laurent:Z",  "Laurent:Q",
                                                "GroupRing:Q:C3", "GroupRing:Zmod:4:C2"};
    for (int iter = 0; iter < 200; ++iter) {
        // random multigraph on 1..5 vertices with 0..7 edges
        int nv = rng.uniform(1, 5);
        std::vector<std::string> names;
        for (int v = 0; v < nv; ++v) names.push_back("v" + std::to_string(v));
        std::vector<Graph::Edge> edges;
        int ne = rng.uniform(0, 7);
        for (int e = 0; e < ne; ++e)
            edges.push_back({"e" + std::to_string(e), rng.uniform(0, nv - 1),
                             rng.uniform(0, nv - 1)});
        std::set<int> emitters;
        if (rng.uniform(0, 9) == 0) emitters.insert(rng.uniform(0, nv - 1));
        Graph g(names, edges, emitters);

        Ring ring = Ring::parse_spec(ring_pool[static_cast<size_t>(
            rng.uniform(0, static_cast<int>(ring_pool.size()) - 1))]);
        ChainFlags flags = ring.chain_flags();
        ChainVerdict v = decide_graph(g, ring);
        if (v.artinian() == Tri::yes && v.noetherian() != Tri::yes)
            return "artinian verdict without noetherian verdict";
        if (v.categorically_noetherian != v.locally_noetherian ||
            v.categorically_artinian != v.locally_artinian)
            return "categorical and local fields differ";
        // flag weakening never improves the verdict
        ChainVerdict weaker = decide_graph(g, ChainFlags{flags.noetherian, Tri::no});
        if (!tri_le(weaker.artinian(), v.artinian()) ||
            !tri_le(weaker.noetherian(), v.noetherian()))
            return "flag weakening improved a verdict";
        ChainVerdict weakest = decide_graph(g, ChainFlags{Tri::no, Tri::no});
        if (weakest.noetherian() == Tri::yes || weakest.artinian() == Tri::yes)
            return "no-flags ring still produced a yes verdict";
    }
    return std::nullopt;
}

// 8. non-discreteness witnesses are concrete cylinder facts
std::optional<std::string> criterion_witness_cylinders() {
    Graph g = gt::load_graph("loop_with_exit.json");
    int v = g.vertex_index("v");
    auto census = cylinder_census(g, make_cylinder(g, v, {}));
    REQUIRE_OR(census.kind == CylinderCensus::Kind::infinite,
               "C(eps_v) must have an infinite census");
    int loop_edge = g.edge_index("e");
    int exit_edge = g.edge_index("f");
    for (int k = 0; k <= 5; ++k) {
        std::vector<int> alpha(static_cast<size_t>(k), loop_edge);
        alpha.push_back(exit_edge);
        auto ck = cylinder_census(g, make_cylinder(g, v, alpha));
        REQUIRE_OR(ck.kind != CylinderCensus::Kind::empty,
                   "C(cycle^k.exit) must be nonempty for k = " + std::to_string(k));
    }
    return std::nullopt;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, CriterionFn>> criteria = {
        {"convolution algebra axioms (500 triples x 5 groupoids x {Z, Q, Z/4})",
         criterion_axioms},
        {"unit characteristic functions: chi_V * chi_W = chi_{V cap W}, exhaustive",
         criterion_unit_characteristics},
        {"decomposition isomorphism verified on the fixture set (bound 3)", criterion_iso},
        {"column-module/ideal bijection for Z/2, Z/4, Z/6 with |J| in {2,3}",
         criterion_column_oracle},
        {"golden chain-condition verdicts", criterion_golden_verdicts},
        {"cross-model consistency (graph verdicts vs orbit data vs explicit groupoid)",
         criterion_cross_model},
        {"coherence meta-properties on 200 randomized (graph, ring) pairs",
         criterion_random_coherence},
        {"non-discreteness witness cylinders (infinite census, nonempty family)",
         criterion_witness_cylinders},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::optional<std::string> failure;
        try {
            failure = criteria[i].second();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (failure) {
            ++failures;
            std::cout << "[FAIL] criterion " << (i + 1) << ": " << criteria[i].first << " -- "
                      << *failure << "\n";
        } else {
            std::cout << "[PASS] criterion " << (i + 1) << ": " << criteria[i].first << "\n";
        }
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
