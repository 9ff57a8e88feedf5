#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "groupalg/errors.hpp"

namespace groupalg {

// Three-valued answer used by every chain-condition predicate.
enum class Tri { yes, no, unknown };

Tri tri_and(Tri a, Tri b);
const char* to_string(Tri t);

// Is `a` weaker than or equal to `b` in the order no < unknown < yes?
bool tri_le(Tri a, Tri b);
Tri tri_min(Tri a, Tri b);

struct ChainFlags {
    Tri noetherian = Tri::unknown;
    Tri artinian = Tri::unknown;

    bool operator==(const ChainFlags&) const = default;
};

/// A group usable as a group-ring exponent universe: either a finite group
/// given by its multiplication table (element ids 0..k-1, id 0 the identity)
/// or the infinite cyclic group.
class Group {
public:
    static Group infinite_cyclic();
    static Group trivial();
    static Group cyclic(int order);
    /// Validates the group axioms exhaustively; throws domain_error on failure.
    static Group from_table(std::vector<std::vector<int>> table);

    bool is_finite() const { return table_ != nullptr; }
    bool is_trivial() const;
    int order() const; // finite groups only
    int multiply(int a, int b) const;
    int inverse_of(int a) const;
    bool abelian() const;
    /// Order of a cyclic finite group, or nullopt when not cyclic / not finite.
    std::optional<int> cyclic_order() const;

    bool same(const Group& other) const;
    std::string spec_string() const; // "Zinf", "C3", "Finite6"

private:
    Group() = default;
    // null table means the infinite cyclic group
    std::shared_ptr<const std::vector<std::vector<int>>> table_;
};

/// One exact ring element. The payload shape is dictated by the owning
/// Ring descriptor; elements do not carry their descriptor.
class RingElem {
public:
    // finitely supported key -> coefficient map, sorted by key, no zeros
    using Terms = std::vector<std::pair<long, RingElem>>;

    RingElem() : v_(mpz_class(0)) {}
    explicit RingElem(mpz_class z) : v_(std::move(z)) {}
    explicit RingElem(mpq_class q) : v_(std::move(q)) {}
    explicit RingElem(Terms t) : v_(std::move(t)) {}

    bool holds_int() const { return std::holds_alternative<mpz_class>(v_); }
    bool holds_rat() const { return std::holds_alternative<mpq_class>(v_); }
    bool holds_terms() const { return std::holds_alternative<Terms>(v_); }

    const mpz_class& int_value() const;
    const mpq_class& rat_value() const;
    const Terms& terms() const;

    bool operator==(const RingElem& other) const;
    bool operator!=(const RingElem& other) const { return !(*this == other); }
    // total order; used for canonical enumeration output only
    bool operator<(const RingElem& other) const;

private:
    std::variant<mpz_class, mpq_class, Terms> v_;
};

/// Immutable coefficient-ring descriptor. Copies share the underlying node.
///
/// The universe is closed: Z, Q, Z/n, Laurent extensions and group rings
/// over it. Ring operations are exact and return canonical forms (no stored
/// zero coefficients, reduced positive-denominator fractions, residues in
/// [0, n)).
class Ring {
public:
    enum class Kind { integers, rationals, integers_mod, laurent, group_ring };

    static Ring integers();
    static Ring rationals();
    static Ring integers_mod(unsigned long n); // requires n >= 2
    static Ring laurent(Ring base);
    /// Group ring base[G]. The infinite cyclic group yields laurent(base)
    /// and the trivial group yields base itself.
    static Ring group_ring(Ring base, Group g);

    /// CLI ring specs: Z | Q | Zmod:<n> | Laurent:<base> | GroupRing:<base>:C<k>
    static Ring parse_spec(const std::string& spec);
    std::string spec_string() const;

    Kind kind() const { return node_->kind; }
    bool commutative() const { return node_->commutative; }
    unsigned long modulus() const;  // integers_mod only
    Ring base() const;              // laurent / group_ring only
    const Group& group() const;     // group_ring only
    bool same(const Ring& other) const;

    RingElem zero() const;
    RingElem one() const;
    RingElem from_int(long v) const;
    /// Monomial coeff * x^key (laurent) or coeff * g_key (group ring).
    RingElem monomial(long key, const RingElem& coeff) const;

    bool is_zero(const RingElem& a) const;
    bool eq(const RingElem& a, const RingElem& b) const;
    RingElem add(const RingElem& a, const RingElem& b) const;
    RingElem neg(const RingElem& a) const;
    RingElem sub(const RingElem& a, const RingElem& b) const;
    RingElem mul(const RingElem& a, const RingElem& b) const;
    /// Re-canonicalizes an element (idempotent on operation results).
    RingElem canonical(const RingElem& a) const;
    /// The *-involution: inverts group-ring keys, fixes base elements.
    RingElem star(const RingElem& a) const;

    /// Throws domain_error when the payload shape does not match this ring.
    void check_elem(const RingElem& a) const;

    ChainFlags chain_flags() const;

    /// True when the element universe is finite (Z/n, and group rings of
    /// finite groups over finite rings).
    bool finite() const;
    /// All elements in a canonical order; finite rings only.
    std::vector<RingElem> enumerate() const;
    unsigned long cardinality() const;

    std::string elem_string(const RingElem& a) const;

private:
    struct Node {
        Kind kind;
        bool commutative;
        unsigned long n = 0;                // integers_mod
        std::shared_ptr<const Node> base;   // laurent / group_ring
        std::optional<Group> grp;           // group_ring
    };
    explicit Ring(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Chain flags of base[G] from the flags of the base ring, without
/// constructing a descriptor: the group ring is artinian iff the base is
/// artinian and G is finite (Connell), and inherits noetherianity because
/// both supported groups are polycyclic-by-finite (Hall, Hilbert basis).
ChainFlags group_ring_flags(const ChainFlags& base, const Group& g);

} // namespace groupalg
