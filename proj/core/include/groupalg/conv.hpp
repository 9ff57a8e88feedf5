#pragma once

#include <map>
#include <memory>
#include <vector>

#include "groupalg/groupoid.hpp"
#include "groupalg/ring.hpp"

namespace groupalg {

/// An element of the convolution algebra R·G of a discrete groupoid model:
/// a finitely supported map arrow -> coefficient, canonical (sorted support,
/// no stored zeros). Elements over distinct carriers never mix.
class ConvElement {
public:
    using Terms = std::vector<std::pair<GArrow, RingElem>>;

    ConvElement(Ring ring, std::shared_ptr<const DiscreteGroupoid> groupoid);

    /// Point mass coeff * delta_a.
    static ConvElement delta(Ring ring, std::shared_ptr<const DiscreteGroupoid> g, GArrow a,
                             std::optional<RingElem> coeff = std::nullopt);
    /// Characteristic function of an arrow set; the set must be a bisection
    /// (d and r injective on it) and every arrow must be valid.
    static ConvElement char_fn(Ring ring, std::shared_ptr<const DiscreteGroupoid> g,
                               std::vector<GArrow> arrows);
    /// chi_U for a unit subset (identity arrows of U).
    static ConvElement unit_char(Ring ring, std::shared_ptr<const DiscreteGroupoid> g,
                                 const std::vector<int>& units);

    const Ring& ring() const { return ring_; }
    const std::shared_ptr<const DiscreteGroupoid>& groupoid() const { return groupoid_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RingElem at(const GArrow& a) const;

    ConvElement add(const ConvElement& other) const;
    ConvElement negate() const;
    ConvElement sub(const ConvElement& other) const;
    ConvElement scale(const RingElem& r) const;
    /// Convolution product: (f*g)(x) = sum over composable support pairs.
    ConvElement convolve(const ConvElement& other) const;
    /// Involution f*(g) = f(g^{-1}).
    ConvElement involute() const;
    /// chi_U * f * chi_U for a unit subset U.
    ConvElement corner(const std::vector<int>& units) const;
    /// Restrictions to the orbit subgroupoids; keys are orbit indices of the
    /// carrier, entries sum to the element, cross products vanish.
    std::map<int, ConvElement> orbit_split() const;

    bool operator==(const ConvElement& other) const;
    bool operator!=(const ConvElement& other) const { return !(*this == other); }

private:
    Ring ring_;
    std::shared_ptr<const DiscreteGroupoid> groupoid_;
    Terms terms_;
    void set(const GArrow& a, RingElem v); // accumulate, prune zeros
    void require_compatible(const ConvElement& other) const;
};

} // namespace groupalg
