#include "groupalg/matrix.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <sstream>

namespace groupalg {

FinSuppMatrix::FinSuppMatrix(Ring ring, std::vector<int> index_set)
    : ring_(std::move(ring)), index_(std::move(index_set)) {
    std::sort(index_.begin(), index_.end());
    if (std::adjacent_find(index_.begin(), index_.end()) != index_.end())
        throw domain_error("matrix index set contains duplicates");
}

FinSuppMatrix FinSuppMatrix::unit(Ring ring, std::vector<int> index_set, int i, int j,
                                  std::optional<RingElem> value) {
    FinSuppMatrix out(std::move(ring), std::move(index_set));
    RingElem v = value ? *value : out.ring_.one();
    out.accumulate(i, j, v);
    return out;
}

void FinSuppMatrix::check_index(int i) const {
    if (!std::binary_search(index_.begin(), index_.end(), i))
        throw domain_error("matrix index " + std::to_string(i) + " outside the index set");
}

RingElem FinSuppMatrix::at(int i, int j) const {
    const std::pair<int, int> key{i, j};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const auto& e, const std::pair<int, int>& k) { return e.first < k; });
    if (it != entries_.end() && it->first == key) return it->second;
    return ring_.zero();
}

void FinSuppMatrix::accumulate(int i, int j, const RingElem& v) {
    check_index(i);
    check_index(j);
    ring_.check_elem(v);
    const std::pair<int, int> key{i, j};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const auto& e, const std::pair<int, int>& k) { return e.first < k; });
    if (it != entries_.end() && it->first == key) {
        it->second = ring_.add(it->second, v);
        if (ring_.is_zero(it->second)) entries_.erase(it);
    } else if (!ring_.is_zero(v)) {
        entries_.insert(it, {key, v});
    }
}

void FinSuppMatrix::require_compatible(const FinSuppMatrix& other) const {
    if (!ring_.same(other.ring_))
        throw domain_error("matrix rings differ: " + ring_.spec_string() + " vs " +
                           other.ring_.spec_string());
    if (index_ != other.index_) throw domain_error("matrix index sets differ");
}

FinSuppMatrix FinSuppMatrix::add(const FinSuppMatrix& other) const {
    require_compatible(other);
    FinSuppMatrix out = *this;
    for (const auto& [key, v] : other.entries_) out.accumulate(key.first, key.second, v);
    return out;
}

FinSuppMatrix FinSuppMatrix::multiply(const FinSuppMatrix& other) const {
    require_compatible(other);
    FinSuppMatrix out(ring_, index_);
    for (const auto& [ka, va] : entries_)
        for (const auto& [kb, vb] : other.entries_)
            if (ka.second == kb.first)
                out.accumulate(ka.first, kb.second, ring_.mul(va, vb));
    return out;
}

FinSuppMatrix FinSuppMatrix::adjoint() const {
    FinSuppMatrix out(ring_, index_);
    for (const auto& [key, v] : entries_) out.accumulate(key.second, key.first, ring_.star(v));
    return out;
}

bool FinSuppMatrix::operator==(const FinSuppMatrix& other) const {
    return ring_.same(other.ring_) && index_ == other.index_ && entries_ == other.entries_;
}

// ---------------------------------------------------------------------------
// DecompositionIso

DecompositionIso build_iso(std::shared_ptr<const DiscreteGroupoid> g, Ring ring) {
    if (!g) throw domain_error("null groupoid");
    if (!ring.commutative())
        throw domain_error("groupoid-algebra coefficients must form a commutative ring");
    DecompositionIso iso;
    iso.groupoid_ = g;
    iso.ring_ = ring;
    for (const Orbit& orbit : g->orbits()) {
        DecompositionIso::OrbitData data;
        data.representative = orbit.representative;
        data.isotropy = g->isotropy(orbit.representative);
        data.target_ring = Ring::group_ring(ring, data.isotropy);
        if (g->is_explicit()) {
            data.iso_loops = g->isotropy_loops(orbit.representative);
            for (int u : orbit.members) {
                if (u == orbit.representative) {
                    data.transversal[u] = g->identity(u);
                    continue;
                }
                std::optional<GArrow> best;
                for (const auto& def : g->explicit_model().arrows()) {
                    if (def.src == orbit.representative && def.tgt == u) {
                        GArrow cand{def.src, def.tgt, def.id};
                        if (!best || cand.tag < best->tag) best = cand;
                    }
                }
                if (!best) throw domain_error("orbit member unreachable from representative");
                data.transversal[u] = *best;
            }
        } else {
            const BoundaryAnalysis& a = g->boundary();
            const BoundaryPath& rep_path = a.paths[static_cast<size_t>(orbit.representative)];
            if (rep_path.kind == BoundaryPath::Kind::cycle)
                data.cycle_length = a.cycle_length(rep_path.terminal);
            for (int u : orbit.members) {
                long n0 = a.min_admissible(u, orbit.representative);
                data.transversal[u] = GArrow{orbit.representative, u, n0};
            }
        }
        iso.orbits_.push_back(std::move(data));
    }
    return iso;
}

namespace {

// c * phi(sigma) in the orbit's target ring
RingElem phi_value(const DecompositionIso::OrbitData& data, const GArrow& sigma,
                   const RingElem& coeff) {
    if (data.isotropy.is_trivial()) return coeff; // target ring = coefficient ring
    if (!data.isotropy.is_finite()) {
        if (data.cycle_length <= 0) throw domain_error("missing cycle length for winding");
        if (sigma.tag % data.cycle_length != 0)
            throw domain_error("isotropy arrow tag is not a multiple of the cycle length");
        return data.target_ring.monomial(sigma.tag / data.cycle_length, coeff);
    }
    for (size_t k = 0; k < data.iso_loops.size(); ++k)
        if (data.iso_loops[k] == sigma)
            return data.target_ring.monomial(static_cast<long>(k), coeff);
    throw domain_error("isotropy arrow not found in the loop table");
}

} // namespace

DecompositionIso::BasisImage DecompositionIso::forward_arrow(const GArrow& g) const {
    if (!groupoid_->valid_arrow(g))
        throw domain_error("arrow outside the groupoid: " + groupoid_->arrow_string(g));
    const int orbit = groupoid_->orbit_of(g.src);
    const OrbitData& data = orbits_.at(static_cast<size_t>(orbit));
    const GArrow& t_src = data.transversal.at(g.src);
    const GArrow& t_tgt = data.transversal.at(g.tgt);
    GArrow sigma = groupoid_->compose(groupoid_->inverse(t_tgt), groupoid_->compose(g, t_src));
    return BasisImage{orbit, g.tgt, g.src, phi_value(data, sigma, ring_.one())};
}

GArrow DecompositionIso::backward_key(int orbit, int row, int col, long key) const {
    const OrbitData& data = orbits_.at(static_cast<size_t>(orbit));
    GArrow iso_elem{data.representative, data.representative, 0};
    if (!data.isotropy.is_finite()) {
        iso_elem.tag = key * data.cycle_length;
    } else if (!data.isotropy.is_trivial()) {
        iso_elem = data.iso_loops.at(static_cast<size_t>(key));
    } else if (key != 0) {
        throw domain_error("trivial isotropy admits only the key 0");
    } else if (groupoid_->is_explicit()) {
        iso_elem = groupoid_->identity(data.representative);
    }
    const GArrow& t_row = data.transversal.at(row);
    const GArrow& t_col = data.transversal.at(col);
    return groupoid_->compose(t_row, groupoid_->compose(iso_elem, groupoid_->inverse(t_col)));
}

std::map<int, FinSuppMatrix> DecompositionIso::forward(const ConvElement& f) const {
    if (!f.ring().same(ring_)) throw domain_error("element ring differs from the iso ring");
    if (f.groupoid() != groupoid_) throw domain_error("element lives over a different groupoid");
    std::map<int, FinSuppMatrix> out;
    for (const auto& [g, c] : f.terms()) {
        const int orbit = groupoid_->orbit_of(g.src);
        const OrbitData& data = orbits_.at(static_cast<size_t>(orbit));
        auto it = out.find(orbit);
        if (it == out.end()) {
            it = out.emplace(orbit, FinSuppMatrix(data.target_ring,
                                                  groupoid_->orbits()[static_cast<size_t>(orbit)].members))
                     .first;
        }
        const GArrow& t_src = data.transversal.at(g.src);
        const GArrow& t_tgt = data.transversal.at(g.tgt);
        GArrow sigma = groupoid_->compose(groupoid_->inverse(t_tgt), groupoid_->compose(g, t_src));
        it->second.accumulate(g.tgt, g.src, phi_value(data, sigma, c));
    }
    return out;
}

ConvElement DecompositionIso::backward(const std::map<int, FinSuppMatrix>& mats) const {
    ConvElement out(ring_, groupoid_);
    for (const auto& [orbit, mat] : mats) {
        if (orbit < 0 || orbit >= static_cast<int>(orbits_.size()))
            throw domain_error("unknown orbit index " + std::to_string(orbit));
        const OrbitData& data = orbits_.at(static_cast<size_t>(orbit));
        if (!mat.ring().same(data.target_ring))
            throw domain_error("matrix ring differs from the orbit target ring");
        for (const auto& [key, value] : mat.entries()) {
            auto [row, col] = key;
            if (data.isotropy.is_trivial()) {
                GArrow g = backward_key(orbit, row, col, 0);
                out = out.add(ConvElement::delta(ring_, groupoid_, g, value));
            } else {
                for (const auto& [k, c] : value.terms()) {
                    GArrow g = backward_key(orbit, row, col, k);
                    out = out.add(ConvElement::delta(ring_, groupoid_, g, c));
                }
            }
        }
    }
    return out;
}

void DecompositionIso::corrupt_transversal(int orbit, int unit, GArrow replacement) {
    orbits_.at(static_cast<size_t>(orbit)).transversal.at(unit) = replacement;
}

// ---------------------------------------------------------------------------
// verify_iso

IsoVerification verify_iso(const DecompositionIso& iso, long bound) {
    if (bound < 1) throw domain_error("verification bound must be >= 1");
    IsoVerification rep;
    const auto& g = *iso.groupoid();
    std::vector<GArrow> basis = g.arrows(g.is_explicit() ? -1 : bound);
    rep.basis_arrows = static_cast<long>(basis.size());

    IsoCheck structure{"structure", true, {}};
    for (size_t oi = 0; oi < iso.orbit_data().size(); ++oi) {
        const auto& data = iso.orbit_data()[oi];
        const Orbit& orbit = g.orbits()[oi];
        if (data.transversal.size() != orbit.members.size())
            structure.failures.push_back("orbit " + std::to_string(oi) +
                                         ": transversal does not cover the orbit");
        for (const auto& [u, t] : data.transversal) {
            if (!g.valid_arrow(t))
                structure.failures.push_back("t_" + std::to_string(u) + " is not a valid arrow");
            else if (t.src != data.representative || t.tgt != u)
                structure.failures.push_back("t_" + std::to_string(u) + " has wrong endpoints");
        }
        auto it = data.transversal.find(data.representative);
        if (it == data.transversal.end() || !g.valid_arrow(it->second) ||
            !g.is_identity(it->second))
            structure.failures.push_back("orbit " + std::to_string(oi) +
                                         ": transversal at the representative is not the identity");
    }
    structure.pass = structure.failures.empty();
    rep.checks.push_back(std::move(structure));

    const Ring& ring = iso.ring();
    auto delta = [&](const GArrow& a) {
        return ConvElement::delta(ring, iso.groupoid(), a);
    };

    IsoCheck bijectivity{"bijectivity", true, {}};
    {
        std::vector<std::tuple<int, int, int, RingElem>> images;
        for (const GArrow& a : basis) {
            try {
                auto img = iso.forward_arrow(a);
                images.emplace_back(img.orbit, img.row, img.col, img.value);
            } catch (const error& e) {
                bijectivity.failures.push_back("forward image undefined for " + g.arrow_string(a) +
                                               ": " + e.what());
            }
        }
        for (size_t i = 0; i < images.size(); ++i)
            for (size_t j = i + 1; j < images.size(); ++j)
                if (images[i] == images[j])
                    bijectivity.failures.push_back(
                        "basis arrows " + g.arrow_string(basis[i]) + " and " +
                        g.arrow_string(basis[j]) + " share a matrix image");
    }
    bijectivity.pass = bijectivity.failures.empty();
    rep.checks.push_back(std::move(bijectivity));

    IsoCheck mult{"multiplicativity", true, {}};
    for (const GArrow& a : basis) {
        for (const GArrow& b : basis) {
            try {
                ConvElement da = delta(a), db = delta(b);
                auto lhs = iso.forward(da.convolve(db));
                auto fa = iso.forward(da);
                auto fb = iso.forward(db);
                std::map<int, FinSuppMatrix> rhs;
                for (const auto& [orbit, ma] : fa) {
                    auto it = fb.find(orbit);
                    if (it == fb.end()) continue;
                    FinSuppMatrix prod = ma.multiply(it->second);
                    if (!prod.is_zero()) rhs.emplace(orbit, std::move(prod));
                }
                for (auto it = lhs.begin(); it != lhs.end();)
                    it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
                if (lhs != rhs)
                    mult.failures.push_back("iso(d_a * d_b) != iso(d_a) iso(d_b) for a = " +
                                            g.arrow_string(a) + ", b = " + g.arrow_string(b));
            } catch (const error& e) {
                mult.failures.push_back("multiplicativity undefined for a = " + g.arrow_string(a) +
                                        ", b = " + g.arrow_string(b) + ": " + e.what());
            }
        }
    }
    mult.pass = mult.failures.empty();
    rep.checks.push_back(std::move(mult));

    IsoCheck invol{"involution", true, {}};
    for (const GArrow& a : basis) {
        try {
            auto lhs = iso.forward(delta(a).involute());
            auto rhs = iso.forward(delta(a));
            for (auto& [orbit, m] : rhs) m = m.adjoint();
            if (lhs != rhs)
                invol.failures.push_back("iso(d_a^*) != iso(d_a)^* for a = " + g.arrow_string(a));
        } catch (const error& e) {
            invol.failures.push_back("involution undefined for a = " + g.arrow_string(a) + ": " +
                                     e.what());
        }
    }
    invol.pass = invol.failures.empty();
    rep.checks.push_back(std::move(invol));

    IsoCheck round{"roundtrip", true, {}};
    for (const GArrow& a : basis) {
        try {
            if (iso.backward(iso.forward(delta(a))) != delta(a))
                round.failures.push_back("backward(forward(d_a)) != d_a for a = " +
                                         g.arrow_string(a));
        } catch (const error& e) {
            round.failures.push_back("roundtrip undefined for a = " + g.arrow_string(a) + ": " +
                                     e.what());
        }
    }
    // matrix-side round trip over the bounded basis of each orbit target
    for (size_t oi = 0; oi < iso.orbit_data().size(); ++oi) {
        const auto& data = iso.orbit_data()[oi];
        const Orbit& orbit = g.orbits()[oi];
        std::vector<long> keys;
        if (data.isotropy.is_trivial())
            keys = {0};
        else if (data.isotropy.is_finite())
            for (int k = 0; k < data.isotropy.order(); ++k) keys.push_back(k);
        else
            for (long k = -bound; k <= bound; ++k) keys.push_back(k);
        for (int row : orbit.members) {
            for (int col : orbit.members) {
                for (long k : keys) {
                    try {
                        RingElem v = data.isotropy.is_trivial()
                                         ? ring.one()
                                         : data.target_ring.monomial(k, ring.one());
                        FinSuppMatrix e = FinSuppMatrix::unit(data.target_ring, orbit.members,
                                                              row, col, v);
                        std::map<int, FinSuppMatrix> mats;
                        mats.emplace(static_cast<int>(oi), e);
                        auto back = iso.backward(mats);
                        auto again = iso.forward(back);
                        for (auto it = again.begin(); it != again.end();)
                            it = it->second.is_zero() ? again.erase(it) : std::next(it);
                        if (again != mats)
                            round.failures.push_back("forward(backward(E)) != E at orbit " +
                                                     std::to_string(oi) + " entry (" +
                                                     std::to_string(row) + "," +
                                                     std::to_string(col) + ")");
                    } catch (const error& e) {
                        round.failures.push_back("matrix roundtrip undefined at orbit " +
                                                 std::to_string(oi) + ": " + e.what());
                    }
                }
            }
        }
    }
    round.pass = round.failures.empty();
    rep.checks.push_back(std::move(round));
    return rep;
}

// ---------------------------------------------------------------------------
// finite-ring oracles

namespace {

struct FiniteRingTables {
    std::vector<RingElem> elems;
    std::vector<std::vector<int>> add;
    std::vector<std::vector<int>> mul;
    int zero_index = -1;

    explicit FiniteRingTables(const Ring& ring) {
        if (!ring.finite())
            throw domain_error("oracle requires a finite ring; " + ring.spec_string() +
                               " is infinite");
        elems = ring.enumerate();
        const int n = static_cast<int>(elems.size());
        auto index_of = [&](const RingElem& e) {
            for (int i = 0; i < n; ++i)
                if (elems[static_cast<size_t>(i)] == e) return i;
            throw domain_error("ring operation left the enumerated universe");
        };
        add.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
        mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                add[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    index_of(ring.add(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]));
                mul[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    index_of(ring.mul(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]));
            }
        zero_index = index_of(ring.zero());
    }
    int size() const { return static_cast<int>(elems.size()); }
};

} // namespace

std::vector<std::vector<int>> left_ideals(const Ring& ring) {
    FiniteRingTables t(ring);
    const int n = t.size();
    if (n > 16) throw domain_error("finite ring too large for subset enumeration");
    std::vector<uint32_t> masks;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!(mask & (1u << t.zero_index))) continue;
        bool closed = true;
        for (int i = 0; i < n && closed; ++i) {
            if (!(mask & (1u << i))) continue;
            for (int j = 0; j < n && closed; ++j) {
                if (mask & (1u << j))
                    closed = (mask & (1u << t.add[static_cast<size_t>(i)][static_cast<size_t>(j)])) != 0;
            }
            for (int r = 0; r < n && closed; ++r)
                closed = (mask & (1u << t.mul[static_cast<size_t>(r)][static_cast<size_t>(i)])) != 0;
        }
        if (closed) masks.push_back(mask);
    }
    std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::vector<int>> out;
    for (uint32_t mask : masks) {
        std::vector<int> ideal;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) ideal.push_back(i);
        out.push_back(std::move(ideal));
    }
    return out;
}

ColumnOracleReport column_submodule_check(const Ring& ring, const std::vector<int>& index_set,
                                          int pivot) {
    if (index_set.empty() || index_set.size() > 3)
        throw domain_error("column oracle supports index sets of size 1..3");
    if (std::find(index_set.begin(), index_set.end(), pivot) == index_set.end())
        throw domain_error("pivot " + std::to_string(pivot) + " is not in the index set");
    FiniteRingTables t(ring);
    const int n = t.size();
    const int m = static_cast<int>(index_set.size());
    long total = 1;
    for (int i = 0; i < m; ++i) {
        total *= n;
        if (total > 4096) throw domain_error("column space too large to enumerate");
    }
    const int pivot_pos = static_cast<int>(
        std::find(index_set.begin(), index_set.end(), pivot) - index_set.begin());

    auto coord = [&](long code, int pos) {
        for (int i = 0; i < pos; ++i) code /= n;
        return static_cast<int>(code % n);
    };
    auto vadd = [&](long a, long b) {
        long out = 0, mult = 1;
        for (int i = 0; i < m; ++i) {
            out += mult * t.add[static_cast<size_t>(coord(a, i))][static_cast<size_t>(coord(b, i))];
            mult *= n;
        }
        return out;
    };
    // E_{i,j} * s applied to v: e_i * (s * v[j])
    auto act = [&](int i, int j, int s, long v) {
        long mult = 1;
        for (int k = 0; k < i; ++k) mult *= n;
        return mult * t.mul[static_cast<size_t>(s)][static_cast<size_t>(coord(v, j))];
    };

    auto closure = [&](std::set<long> gens) {
        std::set<long> closed{0};
        std::deque<long> work(gens.begin(), gens.end());
        for (long v : gens) closed.insert(v);
        while (!work.empty()) {
            long v = work.front();
            work.pop_front();
            std::vector<long> produced;
            for (long w : closed) produced.push_back(vadd(v, w));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    for (int s = 0; s < n; ++s) produced.push_back(act(i, j, s, v));
            for (long p : produced)
                if (closed.insert(p).second) work.push_back(p);
        }
        return closed;
    };

    // lattice enumeration: grow every submodule by every missing vector
    std::set<std::set<long>> seen;
    std::deque<std::set<long>> work;
    std::set<long> zero_mod = closure({});
    seen.insert(zero_mod);
    work.push_back(zero_mod);
    while (!work.empty()) {
        std::set<long> cur = work.front();
        work.pop_front();
        for (long v = 0; v < total; ++v) {
            if (cur.count(v)) continue;
            std::set<long> gens = cur;
            gens.insert(v);
            std::set<long> next = closure(gens);
            if (seen.insert(next).second) work.push_back(next);
        }
    }

    ColumnOracleReport rep;
    rep.ideals = left_ideals(ring);
    std::vector<std::set<long>> submodules(seen.begin(), seen.end());
    std::sort(submodules.begin(), submodules.end(),
              [](const std::set<long>& a, const std::set<long>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });

    std::vector<std::set<int>> ideal_sets;
    for (const auto& ideal : rep.ideals) ideal_sets.emplace_back(ideal.begin(), ideal.end());

    std::vector<std::set<int>> pivots; // A = set of pivot coordinates per submodule
    bool all_match = true;
    for (const auto& sub : submodules) {
        rep.submodule_sizes.push_back(static_cast<long>(sub.size()));
        std::set<int> A;
        for (long v : sub) A.insert(coord(v, pivot_pos));
        pivots.push_back(A);
        // N must equal C_{J,p}(A): all vectors with every coordinate in A
        bool equals = true;
        long expected = 1;
        for (int i = 0; i < m; ++i) expected *= static_cast<long>(A.size());
        if (expected != static_cast<long>(sub.size())) equals = false;
        for (long v : sub)
            for (int i = 0; i < m && equals; ++i) equals = A.count(coord(v, i)) > 0;
        int match = -1;
        for (size_t ii = 0; ii < ideal_sets.size(); ++ii)
            if (ideal_sets[ii] == A) match = static_cast<int>(ii);
        rep.submodule_to_ideal.push_back(equals ? match : -1);
        all_match = all_match && equals && match >= 0;
    }

    std::set<int> hit(rep.submodule_to_ideal.begin(), rep.submodule_to_ideal.end());
    rep.bijective = all_match && submodules.size() == rep.ideals.size() &&
                    hit.size() == submodules.size() && !hit.count(-1);

    rep.inclusion_preserving = true;
    for (size_t i = 0; i < submodules.size(); ++i)
        for (size_t j = 0; j < submodules.size(); ++j) {
            bool sub_incl = std::includes(submodules[j].begin(), submodules[j].end(),
                                          submodules[i].begin(), submodules[i].end());
            bool ideal_incl = std::includes(pivots[j].begin(), pivots[j].end(),
                                            pivots[i].begin(), pivots[i].end());
            if (sub_incl != ideal_incl) rep.inclusion_preserving = false;
        }
    return rep;
}

} // namespace groupalg
