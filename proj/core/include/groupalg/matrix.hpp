#pragma once

#include <map>
#include <memory>
#include <vector>

#include "groupalg/conv.hpp"
#include "groupalg/groupoid.hpp"
#include "groupalg/ring.hpp"

namespace groupalg {

/// A finitely supported square matrix over a ring, indexed by an arbitrary
/// id list (rows = columns). No stored zeros.
class FinSuppMatrix {
public:
    using Entries = std::vector<std::pair<std::pair<int, int>, RingElem>>;

    FinSuppMatrix(Ring ring, std::vector<int> index_set);
    /// E_{i,j} * value (value defaults to one).
    static FinSuppMatrix unit(Ring ring, std::vector<int> index_set, int i, int j,
                              std::optional<RingElem> value = std::nullopt);

    const Ring& ring() const { return ring_; }
    const std::vector<int>& index_set() const { return index_; }
    const Entries& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    RingElem at(int i, int j) const;
    void accumulate(int i, int j, const RingElem& v); // canonicalizing insert

    FinSuppMatrix add(const FinSuppMatrix& other) const;
    FinSuppMatrix multiply(const FinSuppMatrix& other) const;
    /// Transpose with entrywise ring involution (group-ring keys inverted).
    FinSuppMatrix adjoint() const;

    bool operator==(const FinSuppMatrix& other) const;
    bool operator!=(const FinSuppMatrix& other) const { return !(*this == other); }

private:
    Ring ring_;
    std::vector<int> index_;
    Entries entries_;
    void check_index(int i) const;
    void require_compatible(const FinSuppMatrix& other) const;
};

/// The explicit isomorphism R·G = (+)_orbits M_orbit(R G_x^x) for a discrete
/// groupoid model, carried by per-orbit transversals.
class DecompositionIso {
public:
    struct OrbitData {
        int representative = -1;
        std::map<int, GArrow> transversal; // unit u -> arrow x_alpha -> u
        Group isotropy = Group::trivial();
        Ring target_ring = Ring::integers(); // group_ring(ring, isotropy)
        std::vector<GArrow> iso_loops;       // explicit model: group element order
        long cycle_length = 0;               // boundary cycle orbits
    };

    const std::shared_ptr<const DiscreteGroupoid>& groupoid() const { return groupoid_; }
    const Ring& ring() const { return ring_; }
    const std::vector<OrbitData>& orbit_data() const { return orbits_; }

    struct BasisImage {
        int orbit;
        int row; // r(g)
        int col; // d(g)
        RingElem value; // in the orbit's target ring
    };
    /// Image of the basis element delta_g: E_{r(g), d(g)} * phi(t_r^-1 g t_d).
    BasisImage forward_arrow(const GArrow& g) const;
    /// Preimage of E_{row,col} * (monomial with the given key).
    GArrow backward_key(int orbit, int row, int col, long key) const;

    std::map<int, FinSuppMatrix> forward(const ConvElement& f) const;
    ConvElement backward(const std::map<int, FinSuppMatrix>& mats) const;

    // test hook: deliberately corrupt a transversal entry
    void corrupt_transversal(int orbit, int unit, GArrow replacement);

private:
    friend DecompositionIso build_iso(std::shared_ptr<const DiscreteGroupoid>, Ring);
    std::shared_ptr<const DiscreteGroupoid> groupoid_;
    Ring ring_ = Ring::integers();
    std::vector<OrbitData> orbits_;
};

/// Canonical transversals: smallest arrow id (explicit model) or minimal
/// non-negative integer component (boundary model).
DecompositionIso build_iso(std::shared_ptr<const DiscreteGroupoid> g, Ring ring);

struct IsoCheck {
    std::string name;
    bool pass = true;
    std::vector<std::string> failures;
};

struct IsoVerification {
    long basis_arrows = 0;
    std::vector<IsoCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Bounded-exhaustive verification of the decomposition isomorphism:
/// structure of the transversal, injectivity of the basis correspondence,
/// multiplicativity on all composable pairs, involution compatibility and
/// the two round trips, over all arrows with |integer component| <= bound.
IsoVerification verify_iso(const DecompositionIso& iso, long bound);

/// All left ideals of a finite ring, by exhaustive subset enumeration;
/// each ideal is the sorted list of positions into ring.enumerate().
std::vector<std::vector<int>> left_ideals(const Ring& ring);

/// The column module C_{J,p}(S) oracle: enumerate all M_J(S)-submodules by
/// closure search and match them against the left-ideal lattice.
struct ColumnOracleReport {
    std::vector<std::vector<int>> ideals;           // left_ideals(ring)
    std::vector<long> submodule_sizes;              // per enumerated submodule
    std::vector<int> submodule_to_ideal;            // correspondence, -1 when unmatched
    bool bijective = false;
    bool inclusion_preserving = false;
    bool ok() const { return bijective && inclusion_preserving; }
};

ColumnOracleReport column_submodule_check(const Ring& ring, const std::vector<int>& index_set,
                                          int pivot);

} // namespace groupalg
