#pragma once

#include <functional>
#include <string>

#include "sgt/graph.hpp"

namespace sgt {

// Symbolic description of an infinite graph on the integer line: vertices are
// all of Z, line edges join n to n+1, and an optional chord rule adds the
// edges (k, -k) for k >= 1. Rules are closed-form evaluators and must return
// strictly positive finite values wherever they are evaluated.
struct LineFamily {
    std::string name;
    std::function<double(long long)> line_conductance; // c(n, n+1)
    std::function<double(long long)> vertex_mass;      // m(n)
    bool has_chords = false;
    std::function<double(long long)> chord_conductance; // c(k, -k), k >= 1

    double line_c(long long n) const;
    double mass(long long n) const;
    double chord_c(long long k) const;
};

/// Built-in families: "simple-Z" (c = m = 1), "G1" (c(j, j+1) = (j+1)^2 + 1,
/// m = 1), "exponential" (c(n, n+1) = alpha^|n|, alpha > 1, m = 1) and "G2"
/// (the G1 line weights plus unit chords (k, -k)). Throws UnknownFamily or
/// BadParameter.
LineFamily builtin_family(const std::string& name, double alpha = 0.0);

/// Family from a JSON description:
///   { "name": str?, "c": expr, "m": expr?, "chords": {"enabled": bool, "c": expr}? }
/// where expressions use the variable n (see Expression).
LineFamily family_from_json_text(const std::string& text);

// Finite window of a family: the graph on the vertices {-N, ..., N} with all
// family edges whose endpoints lie inside. Analyses quantify only over
// functions supported in the window, so every lower bound stated for
// compactly supported functions on the infinite graph applies verbatim.
struct Truncation {
    long long radius = 0;
    WeightedGraph graph;

    Index vertex_of(long long n) const { return static_cast<Index>(n + radius); }
    long long label_of(Index v) const { return static_cast<long long>(v) - radius; }

    /// Edge (n, n+1) for n in [-N, N-1].
    Index line_edge_of(long long n) const { return static_cast<Index>(n + radius); }
    Index line_edge_count() const { return static_cast<Index>(2 * radius); }

    /// Chord (k, -k) for k in [1, N]; only present for chord families.
    Index chord_edge_of(long long k) const {
        return static_cast<Index>(2 * radius + (k - 1));
    }
};

/// Deterministic truncation: vertices -N..N in order, line edges first
/// (ascending tail), then chords ascending. N >= 1.
Truncation truncate(const LineFamily& fam, long long radius);

} // namespace sgt
