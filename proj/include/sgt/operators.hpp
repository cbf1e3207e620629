#pragma once

#include <Eigen/Dense>

#include "sgt/forms.hpp"
#include "sgt/graph.hpp"

namespace sgt {

enum class Space { Vertex, Edge };

// Dense matrix of a linear map between the weighted spaces l2(V, m) and
// l2(E, c), tagged with its domain and codomain.
struct OperatorMatrix {
    Eigen::MatrixXd matrix;
    Space domain = Space::Vertex;
    Space codomain = Space::Vertex;
    const WeightedGraph* graph = nullptr;
};

// Dense assembly is refused beyond this size; the matrix-free applies below
// remain available for larger windows.
inline constexpr Index kDenseLimit = 4000;

/// Matrix of the difference operator d: row per canonical edge with +1 at the
/// head column and -1 at the tail column.
OperatorMatrix incidence(const WeightedGraph& g);

/// df(e) = f(head) - f(tail), matrix-free.
EdgeForm d_apply(const VertexFunction& f);

/// Coboundary (formal adjoint of d): delta phi(x) = (1/m(x)) * sum of
/// c(e) phi(e) over edges with head x minus the same sum over edges with
/// tail x. Matrix-free.
VertexFunction coboundary_apply(const EdgeForm& phi);

/// Matrix of delta: M^{-1} B^T C, mapping l2(E, c) -> l2(V, m).
OperatorMatrix coboundary(const WeightedGraph& g);

/// 0-form Laplacian delta∘d as a |V| x |V| matrix: M^{-1} (D - C) with D the
/// weighted-degree diagonal and C the conductance adjacency. Cross-checked
/// against the explicit composition on small graphs.
OperatorMatrix laplacian0(const WeightedGraph& g);

/// 1-form Laplacian d∘delta as an |E| x |E| matrix. Assembled from the shared
/// vertices: diagonal c(e)(1/m(head) + 1/m(tail)), off-diagonal
/// +-c(e_j)/m(shared vertex) with + for head-head or tail-tail meetings and
/// - for head-tail. Cross-checked against the explicit composition on small
/// graphs.
OperatorMatrix laplacian1(const WeightedGraph& g);

/// Delta0 f without assembling the matrix.
VertexFunction laplacian0_apply(const VertexFunction& f);

/// Delta1 phi without assembling the matrix.
EdgeForm laplacian1_apply(const EdgeForm& phi);

// A Laplacian conjugated into the standard inner product:
// W^{1/2} op W^{-1/2} with W the diagonal of the relevant weights (m on V,
// c on E). Similar to op, so the spectrum is unchanged; w_sqrt pulls
// eigenvectors back to the weighted space.
struct SymmetrizedOperator {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd w_sqrt;
    Space space = Space::Vertex;
    const WeightedGraph* graph = nullptr;
};

/// Diagonal-similarity symmetrization of a Laplacian. Throws NotALaplacian
/// when the operator's space tags are inconsistent (domain != codomain).
SymmetrizedOperator symmetrize(const OperatorMatrix& op);

/// max |a_ij - a_ji| over all pairs; 0 for an exactly symmetric matrix.
double max_asymmetry(const Eigen::MatrixXd& m);

} // namespace sgt
