#pragma once

#include <Eigen/Dense>

#include "sgt/graph.hpp"

namespace sgt {

// A 0-form: one real value per vertex, living in l2(V, m).
struct VertexFunction {
    const WeightedGraph* graph = nullptr;
    Eigen::VectorXd values;
};

// A 1-form: one real value per canonical edge, living in l2(E, c). The value
// on a reversed edge is the negation and is never stored.
struct EdgeForm {
    const WeightedGraph* graph = nullptr;
    Eigen::VectorXd values;
};

inline VertexFunction zero_vertex_function(const WeightedGraph& g) {
    return {&g, Eigen::VectorXd::Zero(g.vertex_count())};
}

inline EdgeForm zero_edge_form(const WeightedGraph& g) {
    return {&g, Eigen::VectorXd::Zero(g.edge_count())};
}

/// <f, g>_V = sum_x m(x) f(x) g(x)
double inner_vertex(const VertexFunction& a, const VertexFunction& b);

/// <phi, psi>_E = sum over canonical edges of c(e) phi(e) psi(e); the 1/2 in
/// the symmetric-edge-set convention cancels against the implicit reversed
/// copies.
double inner_edge(const EdgeForm& a, const EdgeForm& b);

double norm_vertex(const VertexFunction& f);
double norm_edge(const EdgeForm& phi);

} // namespace sgt
