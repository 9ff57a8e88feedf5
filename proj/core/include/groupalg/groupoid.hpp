#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "groupalg/errors.hpp"
#include "groupalg/graph.hpp"
#include "groupalg/ring.hpp"

namespace groupalg {

/// One arrow of a discrete groupoid model. src = d(g), tgt = r(g). The tag
/// is the arrow id for the explicit model and the integer component for the
/// boundary-path model. Ordering is (tag, src, tgt), which sorts explicit
/// supports by arrow id.
struct GArrow {
    int src;
    int tgt;
    long tag;

    bool operator==(const GArrow&) const = default;
    bool operator<(const GArrow& o) const {
        if (tag != o.tag) return tag < o.tag;
        if (src != o.src) return src < o.src;
        return tgt < o.tgt;
    }
};

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

/// An explicit finite groupoid given by its arrow table. Construction only
/// stores the raw data; validate() checks every axiom exhaustively and
/// reports all violations.
class FiniteGroupoid {
public:
    struct ArrowDef {
        int id;
        int src;
        int tgt;
    };

    FiniteGroupoid(std::vector<int> objects, std::vector<ArrowDef> arrows,
                   std::map<std::pair<int, int>, int> compose,
                   std::map<int, int> inverse);

    ValidationReport validate() const;

    const std::vector<int>& objects() const { return objects_; }
    const std::vector<ArrowDef>& arrows() const { return arrows_; }
    bool has_arrow(int id) const { return by_id_.count(id) > 0; }
    const ArrowDef& arrow(int id) const;
    bool compose_defined(int a, int b) const { return compose_.count({a, b}) > 0; }
    int compose(int a, int b) const; // throws when undefined
    int inverse(int a) const;
    int identity_at(int object) const; // valid groupoids only
    const std::map<std::pair<int, int>, int>& compose_table() const { return compose_; }
    const std::map<int, int>& inverse_table() const { return inverse_; }

private:
    std::vector<int> objects_;
    std::vector<ArrowDef> arrows_;
    std::map<int, ArrowDef> by_id_;
    std::map<std::pair<int, int>, int> compose_;
    std::map<int, int> inverse_;
    std::map<int, int> identities_; // object -> identity arrow id
    void find_identities();
};

struct Orbit {
    int representative;       // smallest unit id
    std::vector<int> members; // ascending
};

/// A discrete groupoid: either an explicit finite groupoid or the boundary
/// path groupoid of an analyzed discrete graph. Units are object ids for
/// the explicit model and path indices for the boundary model. Immutable;
/// shared by pointer so algebra elements can compare their carrier.
class DiscreteGroupoid {
public:
    /// Validates the table; throws domain_error listing the first issue.
    static std::shared_ptr<const DiscreteGroupoid> from_explicit(FiniteGroupoid g);
    /// Requires a discrete analysis; throws domain_error otherwise.
    static std::shared_ptr<const DiscreteGroupoid> from_boundary(
        std::shared_ptr<const BoundaryAnalysis> analysis);

    bool is_explicit() const { return explicit_.has_value(); }
    const FiniteGroupoid& explicit_model() const;
    const BoundaryAnalysis& boundary() const;

    const std::vector<int>& units() const { return units_; }
    bool is_unit(int u) const;
    GArrow identity(int unit) const;
    bool is_identity(const GArrow& a) const;
    bool valid_arrow(const GArrow& a) const;
    bool composable(const GArrow& a, const GArrow& b) const; // d(a) == r(b)
    GArrow compose(const GArrow& a, const GArrow& b) const;  // throws when not composable
    GArrow inverse(const GArrow& a) const;

    /// True when the arrow set is finite (explicit model, or boundary model
    /// without cycle orbits).
    bool arrows_finite() const;
    /// All arrows when finite; otherwise all arrows with |integer tag| <=
    /// bound (boundary model). Sorted.
    std::vector<GArrow> arrows(long bound = -1) const;

    const std::vector<Orbit>& orbits() const { return orbits_; }
    int orbit_of(int unit) const; // index into orbits()
    Group isotropy(int unit) const;
    /// Explicit model: the loop arrows at `unit` in the element order of
    /// isotropy(unit)'s table (identity first, then ascending arrow id).
    std::vector<GArrow> isotropy_loops(int unit) const;
    bool is_invariant(const std::vector<int>& unit_set) const;

    std::string arrow_string(const GArrow& a) const;

private:
    DiscreteGroupoid() = default;
    std::optional<FiniteGroupoid> explicit_;
    std::shared_ptr<const BoundaryAnalysis> analysis_;
    std::vector<int> units_;
    std::vector<Orbit> orbits_;
    std::map<int, int> orbit_index_; // unit -> orbit position
    void compute_orbits_explicit();
    void compute_orbits_boundary();
};

/// The full subgroupoid of a boundary-path groupoid over its trivial-isotropy
/// (sink) orbits, materialized as an explicit finite groupoid. Arrow ids are
/// assigned in the sorted order of the boundary arrows.
FiniteGroupoid boundary_explicit_part(const BoundaryAnalysis& analysis);

} // namespace groupalg
