#include "groupalg/decide.hpp"

#include <sstream>

namespace groupalg {

namespace {

Tri tri_of(bool b) {
    return b ? Tri::yes : Tri::no;
}

// artinian implies noetherian (Hopkins-Levitzki): repair flag inputs that
// violate the implication so verdicts stay coherent and monotone
ChainFlags normalize(const ChainFlags& flags) {
    return {flags.noetherian, tri_min(flags.artinian, flags.noetherian)};
}

void finish(ChainVerdict& v, Tri noeth, Tri artin) {
    artin = tri_min(artin, noeth);
    v.categorically_noetherian = v.locally_noetherian = noeth;
    v.categorically_artinian = v.locally_artinian = artin;
    v.reasons.push_back({"categorical-equals-local",
                         "categorical and local chain conditions coincide for rings with local "
                         "units carried by an orbit decomposition"});
    v.reasons.push_back({"involution",
                         "the algebra has an involution, so left and right verdicts coincide"});
}

ChainVerdict decide_graph_impl(const Graph& g, const ChainFlags& raw_flags,
                               const std::optional<Ring>& ring) {
    const ChainFlags flags = normalize(raw_flags);
    ChainVerdict v;
    BoundaryAnalysis a = analyze_boundary(g);

    if (a.discrete()) {
        v.reasons.push_back({"discreteness:no-infinite-emitter",
                             "no vertex is flagged as an infinite emitter"});
        v.reasons.push_back({"discreteness:cycles-no-exit", "every cycle has an empty exit list"});
    } else {
        const auto& w = *a.discreteness.witness;
        if (w.kind == NonDiscretenessWitness::Kind::infinite_emitter)
            v.reasons.push_back({"discreteness:no-infinite-emitter", w.describe(g)});
        else
            v.reasons.push_back({"discreteness:cycles-no-exit", w.describe(g)});
        v.witness = w;
    }
    v.reasons.push_back({"discreteness:ray-clause", a.discreteness.notes.front()});

    bool acyclic = a.cycles.empty();

    Tri noeth = tri_and(flags.noetherian, tri_of(a.discrete()));
    v.reasons.push_back(
        {"hilbert-basis+hall",
         "isotropy group rings (R and R[x,x^-1]) are noetherian iff R is noetherian"});

    Tri artin = tri_and(flags.artinian, tri_of(a.discrete() && acyclic));
    if (!acyclic)
        v.reasons.push_back({"connell-artinian",
                             "the graph has a cycle, so some isotropy group ring is R[x,x^-1], "
                             "the group ring of an infinite group; artinian fails"});
    else
        v.reasons.push_back({"connell-artinian",
                             "acyclic graph: all isotropy groups are trivial, so the artinian "
                             "verdict reduces to the coefficient ring's"});
    v.reasons.push_back({"hopkins-levitzki", "an artinian verdict forces the noetherian one"});

    if (noeth == Tri::yes) {
        for (const OrbitDescriptor& o : a.orbits) {
            Summand s;
            if (o.kind == OrbitDescriptor::Kind::sink) {
                s.kind = Summand::Kind::sink_orbit;
                s.orbit_label = "sink " + g.vertex_name(o.terminal);
                if (ring) {
                    s.target_ring = *ring;
                    s.target_label = ring->spec_string();
                } else {
                    s.target_label = "R";
                }
            } else {
                s.kind = Summand::Kind::cycle_orbit;
                std::ostringstream os;
                os << "cycle (";
                const Cycle& c = a.cycles[static_cast<size_t>(o.terminal)];
                for (size_t i = 0; i < c.edges.size(); ++i)
                    os << (i ? "." : "") << g.edge(c.edges[i]).name;
                os << ")";
                s.orbit_label = os.str();
                if (ring) {
                    s.target_ring = Ring::laurent(*ring);
                    s.target_label = s.target_ring->spec_string();
                } else {
                    s.target_label = "Laurent:R";
                }
            }
            s.size = o.size();
            v.decomposition.push_back(std::move(s));
        }
        v.reasons.push_back({"matrix-decomposition",
                             "one matrix summand per orbit, sized by the orbit, over the "
                             "isotropy group ring"});
    }

    finish(v, noeth, artin);
    return v;
}

ChainVerdict decide_groupoid_impl(const std::shared_ptr<const DiscreteGroupoid>& g,
                                  const ChainFlags& raw_flags, const std::optional<Ring>& ring) {
    const ChainFlags flags = normalize(raw_flags);
    if (!g) throw domain_error("null groupoid");
    if (!g->is_explicit())
        throw domain_error("decide_groupoid expects the explicit model; use decide_graph for "
                           "boundary-path groupoids");
    ChainVerdict v;
    v.reasons.push_back({"discreteness:finite-model",
                         "an explicit finite groupoid is discrete by construction"});

    Tri noeth = Tri::yes;
    Tri artin = Tri::yes;
    for (const Orbit& o : g->orbits()) {
        Group iso = g->isotropy(o.representative);
        ChainFlags f = group_ring_flags(flags, iso);
        noeth = tri_and(noeth, f.noetherian);
        artin = tri_and(artin, f.artinian);
        v.reasons.push_back({"connell-artinian",
                             "orbit of unit " + std::to_string(o.representative) +
                                 ": isotropy group of order " + std::to_string(iso.order()) +
                                 " is finite; group-ring flags inherit from the coefficient ring"});
    }
    if (g->orbits().empty())
        v.reasons.push_back({"empty-groupoid", "no orbits: both conditions hold vacuously"});

    if (noeth == Tri::yes) {
        for (const Orbit& o : g->orbits()) {
            Group iso = g->isotropy(o.representative);
            Summand s;
            s.kind = Summand::Kind::explicit_orbit;
            s.size = static_cast<int>(o.members.size());
            s.orbit_label = "orbit of unit " + std::to_string(o.representative);
            if (ring) {
                s.target_ring = Ring::group_ring(*ring, iso);
                s.target_label = s.target_ring->spec_string();
            } else {
                s.target_label = iso.is_trivial() ? "R" : "GroupRing:R:" + iso.spec_string();
            }
            v.decomposition.push_back(std::move(s));
        }
        if (!g->orbits().empty())
            v.reasons.push_back({"matrix-decomposition",
                                 "one matrix summand per orbit, sized by the orbit, over the "
                                 "isotropy group ring"});
    }

    finish(v, noeth, artin);
    return v;
}

} // namespace

ChainVerdict decide_graph(const Graph& g, const ChainFlags& ring_flags) {
    return decide_graph_impl(g, ring_flags, std::nullopt);
}

ChainVerdict decide_graph(const Graph& g, const Ring& ring) {
    return decide_graph_impl(g, ring.chain_flags(), ring);
}

ChainVerdict decide_groupoid(const std::shared_ptr<const DiscreteGroupoid>& g,
                             const ChainFlags& ring_flags) {
    return decide_groupoid_impl(g, ring_flags, std::nullopt);
}

ChainVerdict decide_groupoid(const std::shared_ptr<const DiscreteGroupoid>& g, const Ring& ring) {
    return decide_groupoid_impl(g, ring.chain_flags(), ring);
}

} // namespace groupalg
