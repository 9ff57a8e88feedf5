#include "groupalg/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace groupalg {

Graph::Graph(std::vector<std::string> vertex_names, std::vector<Edge> edges,
             std::set<int> infinite_emitters)
    : vertex_names_(std::move(vertex_names)),
      edges_(std::move(edges)),
      infinite_emitters_(std::move(infinite_emitters)) {
    const int n = vertex_count();
    for (int v = 0; v < n; ++v) {
        if (!vertex_by_name_.emplace(vertex_names_[static_cast<size_t>(v)], v).second)
            throw parse_error("duplicate vertex id '" + vertex_names_[static_cast<size_t>(v)] + "'");
    }
    out_.assign(static_cast<size_t>(n), {});
    for (int e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        if (ed.src < 0 || ed.src >= n || ed.dst < 0 || ed.dst >= n)
            throw parse_error("edge '" + ed.name + "' has an undeclared endpoint");
        if (!edge_by_name_.emplace(ed.name, e).second)
            throw parse_error("duplicate edge id '" + ed.name + "'");
        out_[static_cast<size_t>(ed.src)].push_back(e);
    }
    for (int v : infinite_emitters_)
        if (v < 0 || v >= n)
            throw parse_error("infinite emitter flag on undeclared vertex");
}

int Graph::vertex_index(const std::string& name) const {
    auto it = vertex_by_name_.find(name);
    if (it == vertex_by_name_.end()) throw domain_error("unknown vertex '" + name + "'");
    return it->second;
}

int Graph::edge_index(const std::string& name) const {
    auto it = edge_by_name_.find(name);
    if (it == edge_by_name_.end()) throw domain_error("unknown edge '" + name + "'");
    return it->second;
}

VertexClasses classify_vertices(const Graph& g) {
    VertexClasses out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.is_infinite_emitter(v))
            out.infinite_emitters.push_back(v);
        else if (g.out_edges(v).empty())
            out.sinks.push_back(v);
        else
            out.regular.push_back(v);
    }
    return out;
}

std::vector<Cycle> find_cycles(const Graph& g) {
    std::vector<Cycle> cycles;
    std::vector<bool> on_path(static_cast<size_t>(g.vertex_count()), false);
    std::vector<int> path_edges;

    std::function<void(int, int)> dfs = [&](int start, int w) {
        for (int e : g.out_edges(w)) {
            int dst = g.edge(e).dst;
            if (dst == start) {
                Cycle c;
                c.edges = path_edges;
                c.edges.push_back(e);
                for (int ce : c.edges) c.vertices.push_back(g.edge(ce).src);
                cycles.push_back(std::move(c));
            } else if (dst > start && !on_path[static_cast<size_t>(dst)]) {
                on_path[static_cast<size_t>(dst)] = true;
                path_edges.push_back(e);
                dfs(start, dst);
                path_edges.pop_back();
                on_path[static_cast<size_t>(dst)] = false;
            }
        }
    };

    for (int v = 0; v < g.vertex_count(); ++v) {
        on_path[static_cast<size_t>(v)] = true;
        dfs(v, v);
        on_path[static_cast<size_t>(v)] = false;
    }
    return cycles;
}

CycleExits cycle_exits(const Graph& g, const Cycle& c) {
    CycleExits out;
    for (int i = 0; i < c.length(); ++i) {
        int v = c.vertices[static_cast<size_t>(i)];
        if (g.is_infinite_emitter(v)) out.infinitely_many = true;
        for (int e : g.out_edges(v))
            if (e != c.edges[static_cast<size_t>(i)]) out.edges.push_back(e);
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::string NonDiscretenessWitness::describe(const Graph& g) const {
    std::ostringstream os;
    if (kind == Kind::infinite_emitter) {
        os << "vertex '" << g.vertex_name(vertex)
           << "' is an infinite emitter; the generalized cylinders C(eps_"
           << g.vertex_name(vertex) << ", {e}) over its edges form an infinite family "
           << "of nonempty compact sets around eps_" << g.vertex_name(vertex);
    } else {
        os << "cycle (";
        for (size_t i = 0; i < cycle.edges.size(); ++i)
            os << (i ? "." : "") << g.edge(cycle.edges[i]).name;
        os << ") has exit '" << g.edge(exit_edge).name
           << "'; the cylinders C(cycle^k.exit) are nonempty and pairwise disjoint for all k";
    }
    return os.str();
}

DiscretenessReport is_discrete(const Graph& g) {
    DiscretenessReport rep;
    rep.notes.push_back(
        "ray clause: a ray has no repeated vertex, impossible in a finite graph; "
        "vacuously satisfied");
    if (!g.infinite_emitters().empty()) {
        rep.discrete = false;
        NonDiscretenessWitness w;
        w.kind = NonDiscretenessWitness::Kind::infinite_emitter;
        w.vertex = *g.infinite_emitters().begin();
        rep.witness = std::move(w);
        return rep;
    }
    for (const Cycle& c : find_cycles(g)) {
        CycleExits ex = cycle_exits(g, c);
        if (!ex.empty()) {
            rep.discrete = false;
            NonDiscretenessWitness w;
            w.kind = NonDiscretenessWitness::Kind::cycle_with_exit;
            w.cycle = c;
            w.exit_edge = ex.edges.empty() ? -1 : ex.edges.front();
            rep.witness = std::move(w);
            return rep;
        }
    }
    rep.discrete = true;
    return rep;
}

namespace {

std::string join_edges(const Graph& g, const std::vector<int>& edges) {
    std::ostringstream os;
    for (size_t i = 0; i < edges.size(); ++i)
        os << (i ? "." : "") << g.edge(edges[i]).name;
    return os.str();
}

std::string encode_sink_path(const Graph& g, const std::vector<int>& edges, int sink) {
    return join_edges(g, edges) + "@" + g.vertex_name(sink);
}

std::string encode_cycle_path(const Graph& g, const std::vector<int>& prefix,
                              const Cycle& c, int rotation) {
    std::ostringstream os;
    os << join_edges(g, prefix) << "~(";
    for (int i = 0; i < c.length(); ++i) {
        int e = c.edges[static_cast<size_t>((rotation + i) % c.length())];
        os << (i ? "." : "") << g.edge(e).name;
    }
    os << ")";
    return os.str();
}

struct CycleLookup {
    // vertex -> (cycle index, rotation); -1 when not on a no-exit cycle
    std::vector<std::pair<int, int>> at;

    CycleLookup(const Graph& g, const std::vector<Cycle>& cycles) {
        at.assign(static_cast<size_t>(g.vertex_count()), {-1, -1});
        for (size_t ci = 0; ci < cycles.size(); ++ci) {
            if (!cycle_exits(g, cycles[ci]).empty()) continue;
            for (int r = 0; r < cycles[ci].length(); ++r)
                at[static_cast<size_t>(cycles[ci].vertices[static_cast<size_t>(r)])] = {
                    static_cast<int>(ci), r};
        }
    }
    bool on_no_exit_cycle(int v) const { return at[static_cast<size_t>(v)].first >= 0; }
};

} // namespace

BoundaryAnalysis analyze_boundary(const Graph& g) {
    BoundaryAnalysis a{g, is_discrete(g), find_cycles(g), {}, {}};
    if (!a.discreteness.discrete) return a;

    CycleLookup look(g, a.cycles);

    // all paths from v that end in a sink, v not on a cycle
    std::vector<std::optional<std::vector<std::vector<int>>>> sink_memo(
        static_cast<size_t>(g.vertex_count()));
    std::function<const std::vector<std::vector<int>>&(int)> sink_paths_from =
        [&](int v) -> const std::vector<std::vector<int>>& {
        auto& slot = sink_memo[static_cast<size_t>(v)];
        if (slot) return *slot;
        std::vector<std::vector<int>> acc;
        if (g.out_edges(v).empty()) acc.push_back({});
        for (int e : g.out_edges(v)) {
            int dst = g.edge(e).dst;
            if (look.on_no_exit_cycle(dst)) continue;
            for (const auto& rest : sink_paths_from(dst)) {
                std::vector<int> p;
                p.reserve(rest.size() + 1);
                p.push_back(e);
                p.insert(p.end(), rest.begin(), rest.end());
                acc.push_back(std::move(p));
            }
        }
        slot = std::move(acc);
        return *slot;
    };

    // all prefixes from v whose only cycle vertex is the final one
    std::vector<std::optional<std::vector<std::vector<int>>>> pre_memo(
        static_cast<size_t>(g.vertex_count()));
    std::function<const std::vector<std::vector<int>>&(int)> prefixes_from =
        [&](int v) -> const std::vector<std::vector<int>>& {
        auto& slot = pre_memo[static_cast<size_t>(v)];
        if (slot) return *slot;
        std::vector<std::vector<int>> acc;
        for (int e : g.out_edges(v)) {
            int dst = g.edge(e).dst;
            if (look.on_no_exit_cycle(dst)) {
                acc.push_back({e});
            } else {
                for (const auto& rest : prefixes_from(dst)) {
                    std::vector<int> p;
                    p.reserve(rest.size() + 1);
                    p.push_back(e);
                    p.insert(p.end(), rest.begin(), rest.end());
                    acc.push_back(std::move(p));
                }
            }
        }
        slot = std::move(acc);
        return *slot;
    };

    std::vector<BoundaryPath> paths;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (look.on_no_exit_cycle(v)) {
            auto [ci, rot] = look.at[static_cast<size_t>(v)];
            BoundaryPath p;
            p.kind = BoundaryPath::Kind::cycle;
            p.terminal = ci;
            p.rotation = rot;
            p.encoding = encode_cycle_path(g, {}, a.cycles[static_cast<size_t>(ci)], rot);
            paths.push_back(std::move(p));
            continue;
        }
        for (const auto& sp : sink_paths_from(v)) {
            int sink = sp.empty() ? v : g.edge(sp.back()).dst;
            BoundaryPath p;
            p.kind = BoundaryPath::Kind::sink;
            p.edges = sp;
            p.terminal = sink;
            p.encoding = encode_sink_path(g, sp, sink);
            paths.push_back(std::move(p));
        }
        for (const auto& pre : prefixes_from(v)) {
            int entry = g.edge(pre.back()).dst;
            auto [ci, rot] = look.at[static_cast<size_t>(entry)];
            BoundaryPath p;
            p.kind = BoundaryPath::Kind::cycle;
            p.edges = pre;
            p.terminal = ci;
            p.rotation = rot;
            p.encoding = encode_cycle_path(g, pre, a.cycles[static_cast<size_t>(ci)], rot);
            paths.push_back(std::move(p));
        }
    }
    std::sort(paths.begin(), paths.end(),
              [](const BoundaryPath& x, const BoundaryPath& y) { return x.encoding < y.encoding; });

    // orbits: one per sink with paths, one per no-exit cycle with paths
    std::map<std::pair<int, int>, std::vector<int>> groups; // (kind, terminal) -> members
    for (size_t i = 0; i < paths.size(); ++i) {
        int kind = paths[i].kind == BoundaryPath::Kind::sink ? 0 : 1;
        groups[{kind, paths[i].terminal}].push_back(static_cast<int>(i));
    }
    for (auto& [key, members] : groups) {
        OrbitDescriptor o;
        o.kind = key.first == 0 ? OrbitDescriptor::Kind::sink : OrbitDescriptor::Kind::cycle;
        o.terminal = key.second;
        o.isotropy = key.first == 0 ? OrbitDescriptor::Isotropy::trivial
                                    : OrbitDescriptor::Isotropy::infinite_cyclic;
        o.members = members;
        for (int m : members) paths[static_cast<size_t>(m)].orbit = static_cast<int>(a.orbits.size());
        a.orbits.push_back(std::move(o));
    }
    a.paths = std::move(paths);
    return a;
}

int BoundaryAnalysis::path_index(const std::string& encoding) const {
    for (size_t i = 0; i < paths.size(); ++i)
        if (paths[i].encoding == encoding) return static_cast<int>(i);
    throw domain_error("unknown boundary path '" + encoding + "'");
}

long BoundaryAnalysis::cycle_length(int cycle_idx) const {
    return cycles.at(static_cast<size_t>(cycle_idx)).length();
}

long BoundaryAnalysis::phase(int path_idx) const {
    const BoundaryPath& p = paths.at(static_cast<size_t>(path_idx));
    if (p.kind != BoundaryPath::Kind::cycle)
        throw domain_error("phase is defined for cycle paths only");
    long ell = cycle_length(p.terminal);
    long ph = (p.length() - p.rotation) % ell;
    return ph < 0 ? ph + ell : ph;
}

bool BoundaryAnalysis::arrow_valid(int p, long n, int q) const {
    if (p < 0 || q < 0 || p >= static_cast<int>(paths.size()) ||
        q >= static_cast<int>(paths.size()))
        throw domain_error("unknown boundary path id");
    const BoundaryPath& pp = paths[static_cast<size_t>(p)];
    const BoundaryPath& qq = paths[static_cast<size_t>(q)];
    if (pp.orbit != qq.orbit) return false;
    if (pp.kind == BoundaryPath::Kind::sink) return n == pp.length() - qq.length();
    long ell = cycle_length(pp.terminal);
    long want = (phase(p) - phase(q)) % ell;
    long got = n % ell;
    return ((want - got) % ell + ell) % ell == 0;
}

long BoundaryAnalysis::min_admissible(int p, int q) const {
    const BoundaryPath& pp = paths.at(static_cast<size_t>(p));
    const BoundaryPath& qq = paths.at(static_cast<size_t>(q));
    if (pp.orbit != qq.orbit) throw domain_error("paths are not tail equivalent");
    if (pp.kind == BoundaryPath::Kind::sink) return pp.length() - qq.length();
    long ell = cycle_length(pp.terminal);
    long n = (phase(p) - phase(q)) % ell;
    return n < 0 ? n + ell : n;
}

std::vector<BoundaryPath> enumerate_boundary(const Graph& g) {
    BoundaryAnalysis a = analyze_boundary(g);
    if (!a.discrete()) {
        throw domain_error("boundary path space is not discrete: " +
                           a.discreteness.witness->describe(g));
    }
    return a.paths;
}

std::vector<OrbitDescriptor> boundary_orbits(const Graph& g) {
    BoundaryAnalysis a = analyze_boundary(g);
    if (!a.discrete()) {
        throw domain_error("boundary path space is not discrete: " +
                           a.discreteness.witness->describe(g));
    }
    return a.orbits;
}

// ---------------------------------------------------------------------------
// Cylinder sets

CylinderSet make_cylinder(const Graph& g, int base_vertex, std::vector<int> alpha,
                          std::vector<int> excluded) {
    if (base_vertex < 0 || base_vertex >= g.vertex_count())
        throw domain_error("cylinder base vertex out of range");
    int at = base_vertex;
    for (int e : alpha) {
        if (e < 0 || e >= g.edge_count()) throw domain_error("cylinder edge out of range");
        if (g.edge(e).src != at)
            throw domain_error("cylinder word is not a path: edge '" + g.edge(e).name +
                               "' does not start where the previous edge ends");
        at = g.edge(e).dst;
    }
    std::sort(excluded.begin(), excluded.end());
    excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
    for (int e : excluded) {
        if (e < 0 || e >= g.edge_count()) throw domain_error("excluded edge out of range");
        if (g.edge(e).src != at)
            throw domain_error("excluded edge '" + g.edge(e).name +
                               "' does not start at the range of the cylinder word");
    }
    return CylinderSet{base_vertex, std::move(alpha), std::move(excluded)};
}

int cylinder_range(const Graph& g, const CylinderSet& c) {
    return c.alpha.empty() ? c.base_vertex : g.edge(c.alpha.back()).dst;
}

CylinderMeet cylinder_intersect(const Graph& g, const CylinderSet& a, const CylinderSet& b) {
    // re-validate both (cheap, keeps the op total on hand-built values)
    CylinderSet ca = make_cylinder(g, a.base_vertex, a.alpha, a.excluded);
    CylinderSet cb = make_cylinder(g, b.base_vertex, b.alpha, b.excluded);

    const CylinderSet* shorter = &ca;
    const CylinderSet* longer = &cb;
    if (ca.alpha.size() > cb.alpha.size()) std::swap(shorter, longer);

    if (shorter->base_vertex != longer->base_vertex)
        return {CylinderMeet::Kind::empty, std::nullopt};
    for (size_t i = 0; i < shorter->alpha.size(); ++i)
        if (shorter->alpha[i] != longer->alpha[i])
            return {CylinderMeet::Kind::empty, std::nullopt};

    if (shorter->alpha.size() == longer->alpha.size()) {
        std::vector<int> ex = shorter->excluded;
        ex.insert(ex.end(), longer->excluded.begin(), longer->excluded.end());
        return {CylinderMeet::Kind::cylinder,
                make_cylinder(g, shorter->base_vertex, shorter->alpha, std::move(ex))};
    }
    // the longer word continues through the shorter cylinder's junction edge
    int junction = longer->alpha[shorter->alpha.size()];
    if (std::binary_search(shorter->excluded.begin(), shorter->excluded.end(), junction))
        return {CylinderMeet::Kind::empty, std::nullopt};
    return {CylinderMeet::Kind::cylinder, *longer};
}

CylinderCensus cylinder_census(const Graph& g, const CylinderSet& c) {
    CylinderSet cc = make_cylinder(g, c.base_vertex, c.alpha, c.excluded);
    int range = cylinder_range(g, cc);

    if (g.is_infinite_emitter(range)) return {CylinderCensus::Kind::infinite, 0};

    std::vector<int> allowed;
    for (int e : g.out_edges(range))
        if (!std::binary_search(cc.excluded.begin(), cc.excluded.end(), e)) allowed.push_back(e);

    // reachable continuation region
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count()), false);
    std::vector<int> stack;
    for (int e : allowed) {
        int v = g.edge(e).dst;
        if (!seen[static_cast<size_t>(v)]) {
            seen[static_cast<size_t>(v)] = true;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (g.is_infinite_emitter(v)) return {CylinderCensus::Kind::infinite, 0};
        for (int e : g.out_edges(v)) {
            int w = g.edge(e).dst;
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }

    std::vector<Cycle> cycles = find_cycles(g);
    std::vector<bool> on_no_exit_cycle(static_cast<size_t>(g.vertex_count()), false);
    for (const Cycle& cy : cycles) {
        bool in_region = false;
        for (int v : cy.vertices) in_region = in_region || seen[static_cast<size_t>(v)];
        bool has_exit = !cycle_exits(g, cy).empty();
        if (in_region && has_exit) return {CylinderCensus::Kind::infinite, 0};
        if (!has_exit)
            for (int v : cy.vertices) on_no_exit_cycle[static_cast<size_t>(v)] = true;
    }

    // finite: count boundary continuations
    std::vector<std::optional<long>> memo(static_cast<size_t>(g.vertex_count()));
    std::function<long(int)> count_from = [&](int v) -> long {
        auto& slot = memo[static_cast<size_t>(v)];
        if (slot) return *slot;
        long total = 0;
        if (on_no_exit_cycle[static_cast<size_t>(v)]) {
            total = 1; // the unique periodic continuation
        } else if (g.out_edges(v).empty()) {
            total = 1; // ends at this sink
        } else {
            for (int e : g.out_edges(v)) total += count_from(g.edge(e).dst);
        }
        slot = total;
        return total;
    };

    long count = g.out_edges(range).empty() ? 1 : 0; // alpha itself ends at a sink
    for (int e : allowed) count += count_from(g.edge(e).dst);
    if (count == 0) return {CylinderCensus::Kind::empty, 0};
    return {CylinderCensus::Kind::finite, count};
}

} // namespace groupalg
