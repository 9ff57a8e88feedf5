#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "groupalg/errors.hpp"

namespace groupalg {

/// A finite directed multigraph. Vertices and edges carry user-facing string
/// names; everywhere else they are dense indices. A vertex flagged as an
/// infinite emitter symbolically emits infinitely many edges that are not
/// materialized in the edge list.
class Graph {
public:
    struct Edge {
        std::string name;
        int src;
        int dst;
    };

    Graph(std::vector<std::string> vertex_names, std::vector<Edge> edges,
          std::set<int> infinite_emitters);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::string& vertex_name(int v) const { return vertex_names_.at(static_cast<size_t>(v)); }
    const Edge& edge(int e) const { return edges_.at(static_cast<size_t>(e)); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::set<int>& infinite_emitters() const { return infinite_emitters_; }
    bool is_infinite_emitter(int v) const { return infinite_emitters_.count(v) > 0; }
    /// Materialized out-edges of v (the symbolic flag adds none).
    const std::vector<int>& out_edges(int v) const { return out_.at(static_cast<size_t>(v)); }

    int vertex_index(const std::string& name) const;  // throws on unknown name
    int edge_index(const std::string& name) const;

private:
    std::vector<std::string> vertex_names_;
    std::vector<Edge> edges_;
    std::set<int> infinite_emitters_;
    std::vector<std::vector<int>> out_;
    std::map<std::string, int> vertex_by_name_;
    std::map<std::string, int> edge_by_name_;
};

struct VertexClasses {
    std::vector<int> sinks;
    std::vector<int> infinite_emitters;
    std::vector<int> regular;
};

/// sinks = no materialized out-edges and not flagged; the flag dominates.
VertexClasses classify_vertices(const Graph& g);

/// A simple cycle as an edge sequence, rotated to start at its smallest
/// vertex id.
struct Cycle {
    std::vector<int> edges;
    std::vector<int> vertices; // vertices[i] = source of edges[i]
    int length() const { return static_cast<int>(edges.size()); }
};

/// All simple cycles (no repeated source vertex), canonically rotated,
/// in deterministic order.
std::vector<Cycle> find_cycles(const Graph& g);

struct CycleExits {
    std::vector<int> edges;       // materialized exits
    bool infinitely_many = false; // a cycle vertex is an infinite emitter
    bool empty() const { return edges.empty() && !infinitely_many; }
};

CycleExits cycle_exits(const Graph& g, const Cycle& c);

struct NonDiscretenessWitness {
    enum class Kind { infinite_emitter, cycle_with_exit };
    Kind kind;
    int vertex = -1;   // infinite_emitter: the flagged vertex
    Cycle cycle;       // cycle_with_exit
    int exit_edge = -1;
    std::string describe(const Graph& g) const;
};

struct DiscretenessReport {
    bool discrete = false;
    std::optional<NonDiscretenessWitness> witness;
    std::vector<std::string> notes; // includes the vacuous ray clause
};

/// Boundary-path-space discreteness for a finite graph: no infinite-emitter
/// flags and every cycle exitless. The ray clause is vacuous for finite
/// graphs and is recorded as a note.
DiscretenessReport is_discrete(const Graph& g);

/// Canonical encoding of one boundary path of a discrete graph. Sink paths
/// store the whole edge list; cycle paths store the entry prefix plus the
/// entered cycle and the rotation at which it is entered.
struct BoundaryPath {
    enum class Kind { sink, cycle };
    Kind kind;
    std::vector<int> edges; // sink: full path; cycle: entry prefix
    int terminal;           // sink: sink vertex; cycle: cycle index
    int rotation = 0;       // cycle only: entry position in the canonical cycle
    std::string encoding;
    int orbit = -1;
    long length() const { return static_cast<long>(edges.size()); }
};

struct OrbitDescriptor {
    enum class Kind { sink, cycle };
    enum class Isotropy { trivial, infinite_cyclic };
    Kind kind;
    int terminal; // sink vertex or cycle index
    Isotropy isotropy;
    std::vector<int> members; // path indices, ascending
    int size() const { return static_cast<int>(members.size()); }
};

struct BoundaryAnalysis {
    Graph graph;
    DiscretenessReport discreteness;
    std::vector<Cycle> cycles;
    std::vector<BoundaryPath> paths;      // sorted by encoding; empty unless discrete
    std::vector<OrbitDescriptor> orbits;  // sinks first (by vertex), then cycles

    bool discrete() const { return discreteness.discrete; }
    int path_index(const std::string& encoding) const; // throws on unknown
    long cycle_length(int cycle_idx) const;
    /// For cycle paths: (prefix length - entry rotation) mod cycle length.
    long phase(int path_idx) const;
    /// Admissibility of the triple (p, n, q): same orbit, and n in the
    /// orbit's admissible class (forced difference for sink orbits, a
    /// residue class mod the cycle length for cycle orbits).
    bool arrow_valid(int p, long n, int q) const;
    /// Least non-negative admissible n for (p, ?, q); sink orbits may force
    /// a negative value, which is returned as-is.
    long min_admissible(int p, int q) const; // requires same orbit
};

/// Full boundary analysis. Paths and orbits are filled only when the graph
/// is discrete; the discreteness report and cycles are always present.
BoundaryAnalysis analyze_boundary(const Graph& g);

/// The boundary paths of a discrete graph; throws domain_error when the
/// graph is not discrete.
std::vector<BoundaryPath> enumerate_boundary(const Graph& g);
std::vector<OrbitDescriptor> boundary_orbits(const Graph& g);

/// Generalized cylinder C(alpha, excluded). The base vertex pins down empty
/// paths; excluded edges must start at the range of alpha.
struct CylinderSet {
    int base_vertex;
    std::vector<int> alpha;    // edge indices, consecutive
    std::vector<int> excluded; // edges at r(alpha), sorted
};

/// Validates path shape; throws domain_error when alpha is not a path or an
/// excluded edge does not start at r(alpha).
CylinderSet make_cylinder(const Graph& g, int base_vertex, std::vector<int> alpha,
                          std::vector<int> excluded = {});
int cylinder_range(const Graph& g, const CylinderSet& c);

struct CylinderMeet {
    enum class Kind { empty, cylinder };
    Kind kind;
    std::optional<CylinderSet> value;
};

/// Intersection in normal form: for plain cylinders the three-case law; a
/// generalized cylinder either swallows the longer one or the meet is empty.
CylinderMeet cylinder_intersect(const Graph& g, const CylinderSet& a, const CylinderSet& b);

struct CylinderCensus {
    enum class Kind { empty, finite, infinite };
    Kind kind;
    long count = 0; // meaningful for empty (0) and finite
};

/// Counts boundary paths in the cylinder. Infinite exactly when a
/// cycle-with-exit or an infinite emitter is reachable inside the allowed
/// continuation region; works on non-discrete graphs (the witness engine).
CylinderCensus cylinder_census(const Graph& g, const CylinderSet& c);

} // namespace groupalg
