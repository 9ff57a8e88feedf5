#include "groupalg/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace groupalg {

FiniteGroupoid::FiniteGroupoid(std::vector<int> objects, std::vector<ArrowDef> arrows,
                               std::map<std::pair<int, int>, int> compose,
                               std::map<int, int> inverse)
    : objects_(std::move(objects)),
      arrows_(std::move(arrows)),
      compose_(std::move(compose)),
      inverse_(std::move(inverse)) {
    std::sort(objects_.begin(), objects_.end());
    std::sort(arrows_.begin(), arrows_.end(),
              [](const ArrowDef& a, const ArrowDef& b) { return a.id < b.id; });
    for (const ArrowDef& a : arrows_) by_id_.emplace(a.id, a);
    find_identities();
}

const FiniteGroupoid::ArrowDef& FiniteGroupoid::arrow(int id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) throw domain_error("unknown arrow id " + std::to_string(id));
    return it->second;
}

int FiniteGroupoid::compose(int a, int b) const {
    auto it = compose_.find({a, b});
    if (it == compose_.end())
        throw domain_error("composition undefined for arrows " + std::to_string(a) + ", " +
                           std::to_string(b));
    return it->second;
}

int FiniteGroupoid::inverse(int a) const {
    auto it = inverse_.find(a);
    if (it == inverse_.end())
        throw domain_error("inverse undefined for arrow " + std::to_string(a));
    return it->second;
}

void FiniteGroupoid::find_identities() {
    for (int x : objects_) {
        for (const ArrowDef& e : arrows_) {
            if (e.src != x || e.tgt != x) continue;
            bool acts_as_identity = true;
            for (const ArrowDef& g : arrows_) {
                if (g.tgt == x) {
                    auto it = compose_.find({e.id, g.id});
                    if (it == compose_.end() || it->second != g.id) acts_as_identity = false;
                }
                if (g.src == x) {
                    auto it = compose_.find({g.id, e.id});
                    if (it == compose_.end() || it->second != g.id) acts_as_identity = false;
                }
                if (!acts_as_identity) break;
            }
            if (acts_as_identity) {
                identities_.emplace(x, e.id);
                break;
            }
        }
    }
}

int FiniteGroupoid::identity_at(int object) const {
    auto it = identities_.find(object);
    if (it == identities_.end())
        throw domain_error("no identity arrow at object " + std::to_string(object));
    return it->second;
}

ValidationReport FiniteGroupoid::validate() const {
    ValidationReport rep;
    auto issue = [&rep](const std::string& s) { rep.issues.push_back(s); };

    std::set<int> objset(objects_.begin(), objects_.end());
    if (objset.size() != objects_.size()) issue("duplicate object ids");
    if (by_id_.size() != arrows_.size()) issue("duplicate arrow ids");

    for (const ArrowDef& a : arrows_) {
        if (!objset.count(a.src) || !objset.count(a.tgt))
            issue("arrow " + std::to_string(a.id) + " has an undeclared endpoint");
    }

    // composition defined exactly on composable pairs, with correct endpoints
    for (const auto& [pair, c] : compose_) {
        auto [aid, bid] = pair;
        if (!by_id_.count(aid) || !by_id_.count(bid) || !by_id_.count(c)) {
            issue("composition entry (" + std::to_string(aid) + "," + std::to_string(bid) +
                  ") references an unknown arrow");
            continue;
        }
        const ArrowDef& a = by_id_.at(aid);
        const ArrowDef& b = by_id_.at(bid);
        const ArrowDef& ab = by_id_.at(c);
        if (a.src != b.tgt) {
            issue("composition defined for non-composable pair (" + std::to_string(aid) + "," +
                  std::to_string(bid) + "): src of first != tgt of second");
            continue;
        }
        if (ab.src != b.src || ab.tgt != a.tgt)
            issue("composite of (" + std::to_string(aid) + "," + std::to_string(bid) +
                  ") has wrong endpoints");
    }
    for (const ArrowDef& a : arrows_) {
        for (const ArrowDef& b : arrows_) {
            if (a.src == b.tgt && !compose_.count({a.id, b.id}))
                issue("composition missing for composable pair (" + std::to_string(a.id) + "," +
                      std::to_string(b.id) + ")");
        }
    }

    // associativity on fully defined triples
    for (const ArrowDef& a : arrows_) {
        for (const ArrowDef& b : arrows_) {
            if (a.src != b.tgt) continue;
            auto ab = compose_.find({a.id, b.id});
            if (ab == compose_.end()) continue;
            for (const ArrowDef& c : arrows_) {
                if (b.src != c.tgt) continue;
                auto bc = compose_.find({b.id, c.id});
                if (bc == compose_.end()) continue;
                auto ab_c = compose_.find({ab->second, c.id});
                auto a_bc = compose_.find({a.id, bc->second});
                if (ab_c == compose_.end() || a_bc == compose_.end() ||
                    ab_c->second != a_bc->second)
                    issue("non-associative triple (" + std::to_string(a.id) + "," +
                          std::to_string(b.id) + "," + std::to_string(c.id) + ")");
            }
        }
    }

    // identities
    for (int x : objects_) {
        if (!identities_.count(x)) issue("no identity arrow at object " + std::to_string(x));
    }

    // inverses
    for (const ArrowDef& a : arrows_) {
        auto it = inverse_.find(a.id);
        if (it == inverse_.end()) {
            issue("no inverse recorded for arrow " + std::to_string(a.id));
            continue;
        }
        if (!by_id_.count(it->second)) {
            issue("inverse of arrow " + std::to_string(a.id) + " is unknown");
            continue;
        }
        const ArrowDef& ai = by_id_.at(it->second);
        if (ai.src != a.tgt || ai.tgt != a.src) {
            issue("inverse of arrow " + std::to_string(a.id) + " has wrong endpoints");
            continue;
        }
        auto inv_inv = inverse_.find(ai.id);
        if (inv_inv == inverse_.end() || inv_inv->second != a.id)
            issue("inverse is not involutive at arrow " + std::to_string(a.id));
        if (identities_.count(a.tgt)) {
            auto gi = compose_.find({a.id, ai.id});
            if (gi == compose_.end() || gi->second != identities_.at(a.tgt))
                issue("arrow " + std::to_string(a.id) +
                      " composed with its inverse is not the identity at its target");
        }
        if (identities_.count(a.src)) {
            auto ig = compose_.find({ai.id, a.id});
            if (ig == compose_.end() || ig->second != identities_.at(a.src))
                issue("inverse of arrow " + std::to_string(a.id) +
                      " composed with it is not the identity at its source");
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// DiscreteGroupoid

std::shared_ptr<const DiscreteGroupoid> DiscreteGroupoid::from_explicit(FiniteGroupoid g) {
    ValidationReport rep = g.validate();
    if (!rep.ok()) {
        std::ostringstream os;
        os << "groupoid table is invalid: " << rep.issues.front();
        if (rep.issues.size() > 1) os << " (+" << rep.issues.size() - 1 << " more issues)";
        throw domain_error(os.str());
    }
    auto out = std::shared_ptr<DiscreteGroupoid>(new DiscreteGroupoid());
    out->explicit_ = std::move(g);
    out->units_ = out->explicit_->objects();
    out->compute_orbits_explicit();
    return out;
}

std::shared_ptr<const DiscreteGroupoid> DiscreteGroupoid::from_boundary(
    std::shared_ptr<const BoundaryAnalysis> analysis) {
    if (!analysis) throw domain_error("null boundary analysis");
    if (!analysis->discrete())
        throw domain_error("boundary path groupoid is not discrete: " +
                           analysis->discreteness.witness->describe(analysis->graph));
    auto out = std::shared_ptr<DiscreteGroupoid>(new DiscreteGroupoid());
    out->analysis_ = std::move(analysis);
    out->units_.resize(out->analysis_->paths.size());
    std::iota(out->units_.begin(), out->units_.end(), 0);
    out->compute_orbits_boundary();
    return out;
}

const FiniteGroupoid& DiscreteGroupoid::explicit_model() const {
    if (!explicit_) throw domain_error("not an explicit groupoid");
    return *explicit_;
}

const BoundaryAnalysis& DiscreteGroupoid::boundary() const {
    if (!analysis_) throw domain_error("not a boundary-path groupoid");
    return *analysis_;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

} // namespace

void DiscreteGroupoid::compute_orbits_explicit() {
    std::map<int, int> pos;
    for (size_t i = 0; i < units_.size(); ++i) pos[units_[i]] = static_cast<int>(i);
    UnionFind uf(units_.size());
    for (const auto& a : explicit_->arrows()) uf.unite(pos.at(a.src), pos.at(a.tgt));
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < units_.size(); ++i)
        groups[uf.find(static_cast<int>(i))].push_back(units_[i]);
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        orbits_.push_back(Orbit{members.front(), members});
    }
    std::sort(orbits_.begin(), orbits_.end(),
              [](const Orbit& a, const Orbit& b) { return a.representative < b.representative; });
    for (size_t i = 0; i < orbits_.size(); ++i)
        for (int u : orbits_[i].members) orbit_index_[u] = static_cast<int>(i);
}

void DiscreteGroupoid::compute_orbits_boundary() {
    for (const OrbitDescriptor& od : analysis_->orbits) {
        Orbit o;
        o.members = od.members;
        std::sort(o.members.begin(), o.members.end());
        o.representative = o.members.front();
        orbits_.push_back(std::move(o));
    }
    std::sort(orbits_.begin(), orbits_.end(),
              [](const Orbit& a, const Orbit& b) { return a.representative < b.representative; });
    for (size_t i = 0; i < orbits_.size(); ++i)
        for (int u : orbits_[i].members) orbit_index_[u] = static_cast<int>(i);
}

bool DiscreteGroupoid::is_unit(int u) const {
    return orbit_index_.count(u) > 0;
}

GArrow DiscreteGroupoid::identity(int unit) const {
    if (!is_unit(unit)) throw domain_error("unknown unit " + std::to_string(unit));
    if (is_explicit()) return GArrow{unit, unit, explicit_->identity_at(unit)};
    return GArrow{unit, unit, 0};
}

bool DiscreteGroupoid::is_identity(const GArrow& a) const {
    return valid_arrow(a) && a == identity(a.src);
}

bool DiscreteGroupoid::valid_arrow(const GArrow& a) const {
    if (is_explicit()) {
        if (!explicit_->has_arrow(static_cast<int>(a.tag))) return false;
        const auto& def = explicit_->arrow(static_cast<int>(a.tag));
        return def.src == a.src && def.tgt == a.tgt;
    }
    if (!is_unit(a.src) || !is_unit(a.tgt)) return false;
    // the triple (p, n, q) has r = p = tgt and d = q = src
    return analysis_->arrow_valid(a.tgt, a.tag, a.src);
}

bool DiscreteGroupoid::composable(const GArrow& a, const GArrow& b) const {
    return a.src == b.tgt;
}

GArrow DiscreteGroupoid::compose(const GArrow& a, const GArrow& b) const {
    if (!valid_arrow(a) || !valid_arrow(b))
        throw domain_error("compose applied to an arrow outside the groupoid");
    if (!composable(a, b))
        throw domain_error("non-composable arrows: d(" + arrow_string(a) + ") != r(" +
                           arrow_string(b) + ")");
    if (is_explicit()) {
        int c = explicit_->compose(static_cast<int>(a.tag), static_cast<int>(b.tag));
        const auto& def = explicit_->arrow(c);
        return GArrow{def.src, def.tgt, c};
    }
    return GArrow{b.src, a.tgt, a.tag + b.tag};
}

GArrow DiscreteGroupoid::inverse(const GArrow& a) const {
    if (!valid_arrow(a)) throw domain_error("inverse applied to an arrow outside the groupoid");
    if (is_explicit()) {
        int c = explicit_->inverse(static_cast<int>(a.tag));
        const auto& def = explicit_->arrow(c);
        return GArrow{def.src, def.tgt, c};
    }
    return GArrow{a.tgt, a.src, -a.tag};
}

bool DiscreteGroupoid::arrows_finite() const {
    if (is_explicit()) return true;
    for (const OrbitDescriptor& od : analysis_->orbits)
        if (od.kind == OrbitDescriptor::Kind::cycle) return false;
    return true;
}

std::vector<GArrow> DiscreteGroupoid::arrows(long bound) const {
    std::vector<GArrow> out;
    if (is_explicit()) {
        for (const auto& def : explicit_->arrows()) out.push_back(GArrow{def.src, def.tgt, def.id});
    } else {
        if (bound < 0 && !arrows_finite())
            throw domain_error("boundary groupoid has infinitely many arrows; a bound is required");
        for (const Orbit& o : orbits_) {
            for (int p : o.members) {
                for (int q : o.members) {
                    const BoundaryPath& pp = analysis_->paths[static_cast<size_t>(p)];
                    if (pp.kind == BoundaryPath::Kind::sink) {
                        long n = analysis_->min_admissible(p, q);
                        if (bound < 0 || std::abs(n) <= bound)
                            out.push_back(GArrow{q, p, n});
                    } else {
                        long ell = analysis_->cycle_length(pp.terminal);
                        long n0 = analysis_->min_admissible(p, q);
                        // all n == n0 (mod ell) in [-bound, bound]
                        for (long n = n0 - ((n0 + bound) / ell) * ell; n <= bound; n += ell)
                            out.push_back(GArrow{q, p, n});
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int DiscreteGroupoid::orbit_of(int unit) const {
    auto it = orbit_index_.find(unit);
    if (it == orbit_index_.end()) throw domain_error("unknown unit " + std::to_string(unit));
    return it->second;
}

Group DiscreteGroupoid::isotropy(int unit) const {
    if (!is_unit(unit)) throw domain_error("unknown unit " + std::to_string(unit));
    if (is_explicit()) {
        std::vector<GArrow> loops = isotropy_loops(unit);
        const int k = static_cast<int>(loops.size());
        std::map<long, int> index;
        for (int i = 0; i < k; ++i) index[loops[static_cast<size_t>(i)].tag] = i;
        std::vector<std::vector<int>> table(static_cast<size_t>(k),
                                            std::vector<int>(static_cast<size_t>(k)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                GArrow c = compose(loops[static_cast<size_t>(i)], loops[static_cast<size_t>(j)]);
                table[static_cast<size_t>(i)][static_cast<size_t>(j)] = index.at(c.tag);
            }
        return Group::from_table(std::move(table));
    }
    const BoundaryPath& p = analysis_->paths[static_cast<size_t>(unit)];
    return p.kind == BoundaryPath::Kind::sink ? Group::trivial() : Group::infinite_cyclic();
}

std::vector<GArrow> DiscreteGroupoid::isotropy_loops(int unit) const {
    if (!is_explicit()) {
        const BoundaryPath& p = analysis_->paths[static_cast<size_t>(unit)];
        if (p.kind == BoundaryPath::Kind::sink) return {identity(unit)};
        throw domain_error("cycle-orbit isotropy has infinitely many loops");
    }
    std::vector<GArrow> loops;
    loops.push_back(identity(unit));
    for (const auto& def : explicit_->arrows())
        if (def.src == unit && def.tgt == unit && def.id != loops.front().tag)
            loops.push_back(GArrow{def.src, def.tgt, def.id});
    return loops;
}

bool DiscreteGroupoid::is_invariant(const std::vector<int>& unit_set) const {
    std::set<int> u(unit_set.begin(), unit_set.end());
    for (int x : u)
        if (!is_unit(x)) throw domain_error("unknown unit " + std::to_string(x));
    for (const Orbit& o : orbits_) {
        size_t inside = 0;
        for (int m : o.members) inside += u.count(m);
        if (inside != 0 && inside != o.members.size()) return false;
    }
    return true;
}

std::string DiscreteGroupoid::arrow_string(const GArrow& a) const {
    std::ostringstream os;
    if (is_explicit()) {
        os << "#" << a.tag << "(" << a.src << "->" << a.tgt << ")";
    } else if (is_unit(a.src) && is_unit(a.tgt)) {
        os << "(" << analysis_->paths[static_cast<size_t>(a.tgt)].encoding << ", " << a.tag << ", "
           << analysis_->paths[static_cast<size_t>(a.src)].encoding << ")";
    } else {
        os << "(unit " << a.tgt << ", " << a.tag << ", unit " << a.src << ")";
    }
    return os.str();
}

FiniteGroupoid boundary_explicit_part(const BoundaryAnalysis& analysis) {
    if (!analysis.discrete())
        throw domain_error("boundary path groupoid is not discrete");
    std::vector<GArrow> arrows;
    std::vector<int> objects;
    for (const OrbitDescriptor& od : analysis.orbits) {
        if (od.kind != OrbitDescriptor::Kind::sink) continue;
        for (int p : od.members) objects.push_back(p);
        for (int p : od.members)
            for (int q : od.members)
                arrows.push_back(GArrow{q, p, analysis.min_admissible(p, q)});
    }
    std::sort(arrows.begin(), arrows.end());
    std::vector<FiniteGroupoid::ArrowDef> defs;
    std::map<std::pair<int, int>, int> by_ends; // (src,tgt) -> id; unique per pair here
    for (size_t i = 0; i < arrows.size(); ++i) {
        defs.push_back({static_cast<int>(i), arrows[i].src, arrows[i].tgt});
        by_ends[{arrows[i].src, arrows[i].tgt}] = static_cast<int>(i);
    }
    std::map<std::pair<int, int>, int> compose;
    std::map<int, int> inverse;
    for (size_t i = 0; i < arrows.size(); ++i) {
        inverse[static_cast<int>(i)] = by_ends.at({arrows[i].tgt, arrows[i].src});
        for (size_t j = 0; j < arrows.size(); ++j)
            if (arrows[i].src == arrows[j].tgt)
                compose[{static_cast<int>(i), static_cast<int>(j)}] =
                    by_ends.at({arrows[j].src, arrows[i].tgt});
    }
    return FiniteGroupoid(std::move(objects), std::move(defs), std::move(compose),
                          std::move(inverse));
}

} // namespace groupalg
