#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupalg/graph.hpp"
#include "groupalg/groupoid.hpp"
#include "groupalg/ring.hpp"

namespace groupalg {

struct Reason {
    std::string rule;   // machine-readable rule tag
    std::string detail;
};

struct Summand {
    enum class Kind { sink_orbit, cycle_orbit, explicit_orbit };
    Kind kind;
    int size;
    std::optional<Ring> target_ring; // filled when a concrete coefficient ring is known
    std::string target_label;        // spec string, or symbolic ("R", "Laurent:R")
    std::string orbit_label;         // representative description
};

/// The four-way chain-condition verdict. Categorical and local fields are
/// always equal (groupoid algebras have local units and an involution); the
/// artinian verdict never exceeds the noetherian one.
struct ChainVerdict {
    Tri categorically_noetherian = Tri::unknown;
    Tri categorically_artinian = Tri::unknown;
    Tri locally_noetherian = Tri::unknown;
    Tri locally_artinian = Tri::unknown;
    std::vector<Reason> reasons;
    std::vector<Summand> decomposition; // present iff the noetherian verdict is yes
    std::optional<NonDiscretenessWitness> witness;

    Tri noetherian() const { return categorically_noetherian; }
    Tri artinian() const { return categorically_artinian; }
};

/// Verdict for the boundary-path groupoid algebra of a finite graph, from
/// the coefficient ring's chain flags. Noetherian requires the ring flag
/// and discreteness; artinian additionally requires acyclicity.
ChainVerdict decide_graph(const Graph& g, const ChainFlags& ring_flags);
/// Same, with decomposition target rings named concretely.
ChainVerdict decide_graph(const Graph& g, const Ring& ring);

/// Verdict for an explicit finite groupoid: group-ring flags of every
/// orbit's isotropy group must hold.
ChainVerdict decide_groupoid(const std::shared_ptr<const DiscreteGroupoid>& g,
                             const ChainFlags& ring_flags);
ChainVerdict decide_groupoid(const std::shared_ptr<const DiscreteGroupoid>& g, const Ring& ring);

} // namespace groupalg
