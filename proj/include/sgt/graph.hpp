#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace sgt {

using Index = std::int32_t;

// Graph description as read from input files, before validation.
struct RawVertex {
    std::string id;
    double mass = 1.0;
};

struct RawEdge {
    std::string tail;
    std::string head;
    double conductance = 1.0;
};

struct RawGraph {
    std::vector<RawVertex> vertices;
    std::vector<RawEdge> edges;
};

struct Vertex {
    std::string id;
    double mass;
};

// One canonical oriented edge per undirected pair. The reverse orientation is
// implicit: 1-forms extend skew-symmetrically and are never stored twice.
struct Edge {
    Index tail;
    Index head;
    double conductance;
};

/// Validated weighted graph: positive vertex masses, positive edge
/// conductances, no self-loops, no duplicate undirected pairs. Vertex and
/// edge indices are dense and follow input order. Immutable once built.
class WeightedGraph {
public:
    /// Validates a raw description. Throws Error (kind SelfLoop,
    /// DuplicateEdge, DuplicateVertex, NonpositiveWeight or
    /// DanglingVertexReference) naming the offending element.
    static WeightedGraph validate(const RawGraph& raw);

    Index vertex_count() const { return static_cast<Index>(vertices_.size()); }
    Index edge_count() const { return static_cast<Index>(edges_.size()); }

    const Vertex& vertex(Index v) const { return vertices_[static_cast<std::size_t>(v)]; }
    const Edge& edge(Index e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    double mass(Index v) const { return vertex(v).mass; }
    double conductance(Index e) const { return edge(e).conductance; }

    /// Index of a vertex id, or -1 if absent.
    Index vertex_index(const std::string& id) const;

    // Incidence of a canonical edge at a vertex: +1 when the vertex is the
    // head, -1 when it is the tail.
    struct Incidence {
        Index edge;
        int sign;
    };

    /// Canonical edges incident to v, in edge input order.
    const std::vector<Incidence>& incident(Index v) const {
        return incident_[static_cast<std::size_t>(v)];
    }

private:
    WeightedGraph() = default;

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> incident_;
    std::unordered_map<std::string, Index> index_of_;
};

struct ComponentAssignment {
    std::vector<Index> component_of; // vertex -> component index
    Index count = 0;
};

/// Partition of the vertices by edge-path reachability. Components are
/// numbered by their smallest contained vertex index.
ComponentAssignment connected_components(const WeightedGraph& g);

struct SpanningForestDecomposition {
    std::vector<Index> tree_edges;   // in BFS discovery order
    std::vector<Index> chord_edges;  // in edge input order
    std::vector<Index> component_of; // vertex -> component index
    Index component_count = 0;
};

/// Deterministic BFS spanning forest: roots are the smallest vertex index of
/// each component, neighbor exploration follows edge input order.
SpanningForestDecomposition spanning_forest(const WeightedGraph& g);

/// |E| - |V| + #components; the number of independent cycles.
Index circuit_rank(const WeightedGraph& g);

// A closed edge walk. sign +1 traverses the canonical edge tail -> head,
// sign -1 the reverse. Consecutive steps chain, the last step returns to the
// start of the first.
struct SignedCycle {
    struct Step {
        Index edge;
        int sign;
    };
    std::vector<Step> steps;
};

/// True iff the steps chain head-to-tail under their signs, close up, and no
/// edge repeats.
bool is_valid_cycle(const WeightedGraph& g, const SignedCycle& cycle);

/// The unique cycle made of a chord plus the tree path between its endpoints,
/// oriented so the chord is traversed with sign +1. Throws NotAChord when the
/// edge is not a chord of the decomposition.
SignedCycle fundamental_cycle(const WeightedGraph& g,
                              const SpanningForestDecomposition& forest,
                              Index chord_edge);

/// One fundamental cycle per chord of the BFS spanning forest; the list
/// length equals circuit_rank(g).
std::vector<SignedCycle> cycle_basis(const WeightedGraph& g);

} // namespace sgt
