#include "groupalg/conv.hpp"

#include <algorithm>

namespace groupalg {

ConvElement::ConvElement(Ring ring, std::shared_ptr<const DiscreteGroupoid> groupoid)
    : ring_(std::move(ring)), groupoid_(std::move(groupoid)) {
    if (!groupoid_) throw domain_error("null groupoid");
    if (!ring_.commutative())
        throw domain_error("groupoid-algebra coefficients must form a commutative ring");
}

ConvElement ConvElement::delta(Ring ring, std::shared_ptr<const DiscreteGroupoid> g, GArrow a,
                               std::optional<RingElem> coeff) {
    ConvElement out(std::move(ring), std::move(g));
    if (!out.groupoid_->valid_arrow(a))
        throw domain_error("arrow outside the groupoid: " + out.groupoid_->arrow_string(a));
    RingElem c = coeff ? *coeff : out.ring_.one();
    out.ring_.check_elem(c);
    if (!out.ring_.is_zero(c)) out.terms_.emplace_back(a, std::move(c));
    return out;
}

ConvElement ConvElement::char_fn(Ring ring, std::shared_ptr<const DiscreteGroupoid> g,
                                 std::vector<GArrow> arrows) {
    std::sort(arrows.begin(), arrows.end());
    arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
    ConvElement out(std::move(ring), std::move(g));
    std::map<int, GArrow> by_src, by_tgt;
    for (const GArrow& a : arrows) {
        if (!out.groupoid_->valid_arrow(a))
            throw domain_error("arrow outside the groupoid: " + out.groupoid_->arrow_string(a));
        if (auto [it, fresh] = by_src.emplace(a.src, a); !fresh)
            throw domain_error("not a bisection: arrows " + out.groupoid_->arrow_string(it->second) +
                               " and " + out.groupoid_->arrow_string(a) + " share a source");
        if (auto [it, fresh] = by_tgt.emplace(a.tgt, a); !fresh)
            throw domain_error("not a bisection: arrows " + out.groupoid_->arrow_string(it->second) +
                               " and " + out.groupoid_->arrow_string(a) + " share a target");
    }
    const RingElem one = out.ring_.one();
    for (const GArrow& a : arrows) out.terms_.emplace_back(a, one);
    return out;
}

ConvElement ConvElement::unit_char(Ring ring, std::shared_ptr<const DiscreteGroupoid> g,
                                   const std::vector<int>& units) {
    std::vector<GArrow> ids;
    ids.reserve(units.size());
    for (int u : units) ids.push_back(g->identity(u));
    return char_fn(std::move(ring), std::move(g), std::move(ids));
}

RingElem ConvElement::at(const GArrow& a) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), a,
                               [](const auto& t, const GArrow& k) { return t.first < k; });
    if (it != terms_.end() && it->first == a) return it->second;
    return ring_.zero();
}

void ConvElement::set(const GArrow& a, RingElem v) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), a,
                               [](const auto& t, const GArrow& k) { return t.first < k; });
    if (it != terms_.end() && it->first == a) {
        it->second = ring_.add(it->second, v);
        if (ring_.is_zero(it->second)) terms_.erase(it);
    } else if (!ring_.is_zero(v)) {
        terms_.insert(it, {a, std::move(v)});
    }
}

void ConvElement::require_compatible(const ConvElement& other) const {
    if (!ring_.same(other.ring_))
        throw domain_error("coefficient rings differ: " + ring_.spec_string() + " vs " +
                           other.ring_.spec_string());
    if (groupoid_ != other.groupoid_)
        throw domain_error("elements live over different groupoids");
}

ConvElement ConvElement::add(const ConvElement& other) const {
    require_compatible(other);
    ConvElement out(ring_, groupoid_);
    out.terms_ = terms_;
    for (const auto& [a, c] : other.terms_) out.set(a, c);
    return out;
}

ConvElement ConvElement::negate() const {
    ConvElement out(ring_, groupoid_);
    out.terms_ = terms_;
    for (auto& [a, c] : out.terms_) c = ring_.neg(c);
    return out;
}

ConvElement ConvElement::sub(const ConvElement& other) const {
    return add(other.negate());
}

ConvElement ConvElement::scale(const RingElem& r) const {
    ring_.check_elem(r);
    ConvElement out(ring_, groupoid_);
    for (const auto& [a, c] : terms_) {
        RingElem p = ring_.mul(r, c);
        if (!ring_.is_zero(p)) out.terms_.emplace_back(a, std::move(p));
    }
    return out;
}

ConvElement ConvElement::convolve(const ConvElement& other) const {
    require_compatible(other);
    ConvElement out(ring_, groupoid_);
    const DiscreteGroupoid& g = *groupoid_;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : other.terms_)
            if (g.composable(a, b)) out.set(g.compose(a, b), ring_.mul(ca, cb));
    return out;
}

ConvElement ConvElement::involute() const {
    ConvElement out(ring_, groupoid_);
    for (const auto& [a, c] : terms_) out.set(groupoid_->inverse(a), c);
    return out;
}

ConvElement ConvElement::corner(const std::vector<int>& units) const {
    ConvElement chi = unit_char(ring_, groupoid_, units);
    return chi.convolve(*this).convolve(chi);
}

std::map<int, ConvElement> ConvElement::orbit_split() const {
    std::map<int, ConvElement> out;
    for (const auto& [a, c] : terms_) {
        int orbit = groupoid_->orbit_of(a.src);
        auto [it, fresh] = out.try_emplace(orbit, ConvElement(ring_, groupoid_));
        it->second.set(a, c);
    }
    return out;
}

bool ConvElement::operator==(const ConvElement& other) const {
    if (!ring_.same(other.ring_) || groupoid_ != other.groupoid_) return false;
    return terms_ == other.terms_;
}

} // namespace groupalg
