#include "sgt/graph.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sgt/errors.hpp"

namespace sgt {

WeightedGraph WeightedGraph::validate(const RawGraph& raw) {
    WeightedGraph g;
    g.vertices_.reserve(raw.vertices.size());

    for (const RawVertex& rv : raw.vertices) {
        if (g.index_of_.count(rv.id) != 0) {
            throw Error::input("DuplicateVertex", "vertex id '" + rv.id + "' appears twice");
        }
        if (!(rv.mass > 0.0) || !std::isfinite(rv.mass)) {
            throw Error::input("NonpositiveWeight",
                               "vertex '" + rv.id + "' has mass " + std::to_string(rv.mass) +
                                   "; masses must be positive and finite");
        }
        g.index_of_.emplace(rv.id, static_cast<Index>(g.vertices_.size()));
        g.vertices_.push_back({rv.id, rv.mass});
    }

    g.edges_.reserve(raw.edges.size());
    std::unordered_map<std::uint64_t, Index> seen_pairs;
    seen_pairs.reserve(raw.edges.size());

    for (std::size_t k = 0; k < raw.edges.size(); ++k) {
        const RawEdge& re = raw.edges[k];
        const std::string label =
            "edge " + std::to_string(k) + " (" + re.tail + " -> " + re.head + ")";

        auto it_t = g.index_of_.find(re.tail);
        auto it_h = g.index_of_.find(re.head);
        if (it_t == g.index_of_.end()) {
            throw Error::input("DanglingVertexReference",
                               label + " references unknown vertex '" + re.tail + "'");
        }
        if (it_h == g.index_of_.end()) {
            throw Error::input("DanglingVertexReference",
                               label + " references unknown vertex '" + re.head + "'");
        }
        const Index t = it_t->second;
        const Index h = it_h->second;
        if (t == h) {
            throw Error::input("SelfLoop", label + ": self-loops are not allowed");
        }
        if (!(re.conductance > 0.0) || !std::isfinite(re.conductance)) {
            throw Error::input("NonpositiveWeight",
                               label + " has conductance " + std::to_string(re.conductance) +
                                   "; conductances must be positive and finite");
        }
        const std::uint64_t key =
            (static_cast<std::uint64_t>(std::min(t, h)) << 32) | static_cast<std::uint32_t>(std::max(t, h));
        if (!seen_pairs.emplace(key, static_cast<Index>(k)).second) {
            throw Error::input("DuplicateEdge",
                               label + " duplicates an earlier undirected pair");
        }
        g.edges_.push_back({t, h, re.conductance});
    }

    g.incident_.resize(g.vertices_.size());
    for (Index e = 0; e < g.edge_count(); ++e) {
        g.incident_[static_cast<std::size_t>(g.edges_[e].tail)].push_back({e, -1});
        g.incident_[static_cast<std::size_t>(g.edges_[e].head)].push_back({e, +1});
    }
    return g;
}

Index WeightedGraph::vertex_index(const std::string& id) const {
    auto it = index_of_.find(id);
    return it == index_of_.end() ? Index{-1} : it->second;
}

namespace {

Index other_endpoint(const Edge& e, Index v) { return e.tail == v ? e.head : e.tail; }

} // namespace

ComponentAssignment connected_components(const WeightedGraph& g) {
    ComponentAssignment out;
    out.component_of.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Index> queue;

    for (Index root = 0; root < g.vertex_count(); ++root) {
        if (out.component_of[static_cast<std::size_t>(root)] >= 0) continue;
        const Index comp = out.count++;
        out.component_of[static_cast<std::size_t>(root)] = comp;
        queue.assign(1, root);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            for (const auto& inc : g.incident(queue[qi])) {
                const Index y = other_endpoint(g.edge(inc.edge), queue[qi]);
                if (out.component_of[static_cast<std::size_t>(y)] < 0) {
                    out.component_of[static_cast<std::size_t>(y)] = comp;
                    queue.push_back(y);
                }
            }
        }
    }
    return out;
}

SpanningForestDecomposition spanning_forest(const WeightedGraph& g) {
    SpanningForestDecomposition out;
    out.component_of.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<char> in_tree(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<Index> queue;

    for (Index root = 0; root < g.vertex_count(); ++root) {
        if (out.component_of[static_cast<std::size_t>(root)] >= 0) continue;
        const Index comp = out.component_count++;
        out.component_of[static_cast<std::size_t>(root)] = comp;
        queue.assign(1, root);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const Index x = queue[qi];
            for (const auto& inc : g.incident(x)) {
                const Index y = other_endpoint(g.edge(inc.edge), x);
                if (out.component_of[static_cast<std::size_t>(y)] >= 0) continue;
                out.component_of[static_cast<std::size_t>(y)] = comp;
                in_tree[static_cast<std::size_t>(inc.edge)] = 1;
                out.tree_edges.push_back(inc.edge);
                queue.push_back(y);
            }
        }
    }
    for (Index e = 0; e < g.edge_count(); ++e) {
        if (!in_tree[static_cast<std::size_t>(e)]) out.chord_edges.push_back(e);
    }
    return out;
}

Index circuit_rank(const WeightedGraph& g) {
    return g.edge_count() - g.vertex_count() + connected_components(g).count;
}

bool is_valid_cycle(const WeightedGraph& g, const SignedCycle& cycle) {
    if (cycle.steps.empty()) return false;
    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);

    auto start_of = [&](const SignedCycle::Step& s) {
        const Edge& e = g.edge(s.edge);
        return s.sign > 0 ? e.tail : e.head;
    };
    auto end_of = [&](const SignedCycle::Step& s) {
        const Edge& e = g.edge(s.edge);
        return s.sign > 0 ? e.head : e.tail;
    };

    for (const auto& s : cycle.steps) {
        if (s.edge < 0 || s.edge >= g.edge_count()) return false;
        if (s.sign != 1 && s.sign != -1) return false;
        if (used[static_cast<std::size_t>(s.edge)]) return false;
        used[static_cast<std::size_t>(s.edge)] = 1;
    }
    for (std::size_t i = 0; i + 1 < cycle.steps.size(); ++i) {
        if (end_of(cycle.steps[i]) != start_of(cycle.steps[i + 1])) return false;
    }
    return end_of(cycle.steps.back()) == start_of(cycle.steps.front());
}

SignedCycle fundamental_cycle(const WeightedGraph& g,
                              const SpanningForestDecomposition& forest,
                              Index chord_edge) {
    const bool is_chord =
        std::find(forest.chord_edges.begin(), forest.chord_edges.end(), chord_edge) !=
        forest.chord_edges.end();
    if (!is_chord) {
        throw Error::precondition("NotAChord",
                                  "edge " + std::to_string(chord_edge) +
                                      " is not a chord of the given forest");
    }

    // Tree adjacency restricted to the forest edges.
    std::vector<std::vector<WeightedGraph::Incidence>> tree_adj(
        static_cast<std::size_t>(g.vertex_count()));
    for (Index e : forest.tree_edges) {
        tree_adj[static_cast<std::size_t>(g.edge(e).tail)].push_back({e, -1});
        tree_adj[static_cast<std::size_t>(g.edge(e).head)].push_back({e, +1});
    }

    const Index from = g.edge(chord_edge).head;
    const Index to = g.edge(chord_edge).tail;

    // BFS from the chord head; parent pointers give the unique tree path.
    std::vector<Index> parent_vertex(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Index> parent_edge(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
    visited[static_cast<std::size_t>(from)] = 1;
    std::vector<Index> queue{from};
    for (std::size_t qi = 0; qi < queue.size() && !visited[static_cast<std::size_t>(to)]; ++qi) {
        const Index x = queue[qi];
        for (const auto& inc : tree_adj[static_cast<std::size_t>(x)]) {
            const Index y = other_endpoint(g.edge(inc.edge), x);
            if (visited[static_cast<std::size_t>(y)]) continue;
            visited[static_cast<std::size_t>(y)] = 1;
            parent_vertex[static_cast<std::size_t>(y)] = x;
            parent_edge[static_cast<std::size_t>(y)] = inc.edge;
            queue.push_back(y);
        }
    }
    if (!visited[static_cast<std::size_t>(to)]) {
        throw Error::precondition("NotAChord",
                                  "chord endpoints are not connected by the given forest");
    }

    SignedCycle cycle;
    cycle.steps.push_back({chord_edge, +1});
    std::vector<SignedCycle::Step> back;
    for (Index v = to; v != from; v = parent_vertex[static_cast<std::size_t>(v)]) {
        const Index e = parent_edge[static_cast<std::size_t>(v)];
        // Step goes parent -> v.
        back.push_back({e, g.edge(e).head == v ? +1 : -1});
    }
    cycle.steps.insert(cycle.steps.end(), back.rbegin(), back.rend());
    return cycle;
}

std::vector<SignedCycle> cycle_basis(const WeightedGraph& g) {
    const SpanningForestDecomposition forest = spanning_forest(g);
    std::vector<SignedCycle> basis;
    basis.reserve(forest.chord_edges.size());
    for (Index chord : forest.chord_edges) {
        basis.push_back(fundamental_cycle(g, forest, chord));
    }
    return basis;
}

} // namespace sgt
