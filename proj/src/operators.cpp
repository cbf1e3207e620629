#include "sgt/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sgt/errors.hpp"

namespace sgt {

namespace {

void require_dense(Index dim, const char* what) {
    if (dim > kDenseLimit) {
        throw Error::input("DenseThresholdExceeded",
                           std::string(what) + " would be " + std::to_string(dim) + "x" +
                               std::to_string(dim) + "; dense assembly is limited to " +
                               std::to_string(kDenseLimit) +
                               " (use the matrix-free applies instead)");
    }
}

// Entrywise agreement check between the direct assembly and the operator
// composition; only run at sizes where the product is cheap.
void check_composition(const Eigen::MatrixXd& direct, const Eigen::MatrixXd& composed,
                       const char* what) {
    const double scale = std::max(1.0, direct.cwiseAbs().maxCoeff());
    const double diff = (direct - composed).cwiseAbs().maxCoeff();
    if (diff > 1e-12 * scale) {
        throw Error::numerical("AssemblyMismatch",
                               std::string(what) + ": direct and composed assemblies differ by " +
                                   std::to_string(diff));
    }
}

constexpr Index kCompositionCheckLimit = 1024;

} // namespace

double inner_vertex(const VertexFunction& a, const VertexFunction& b) {
    const WeightedGraph& g = *a.graph;
    double s = 0.0;
    for (Index v = 0; v < g.vertex_count(); ++v) {
        s += g.mass(v) * a.values[v] * b.values[v];
    }
    return s;
}

double inner_edge(const EdgeForm& a, const EdgeForm& b) {
    const WeightedGraph& g = *a.graph;
    double s = 0.0;
    for (Index e = 0; e < g.edge_count(); ++e) {
        s += g.conductance(e) * a.values[e] * b.values[e];
    }
    return s;
}

double norm_vertex(const VertexFunction& f) { return std::sqrt(inner_vertex(f, f)); }

double norm_edge(const EdgeForm& phi) { return std::sqrt(inner_edge(phi, phi)); }

OperatorMatrix incidence(const WeightedGraph& g) {
    require_dense(std::max(g.edge_count(), g.vertex_count()), "incidence matrix");
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(g.edge_count(), g.vertex_count());
    for (Index e = 0; e < g.edge_count(); ++e) {
        b(e, g.edge(e).head) = 1.0;
        b(e, g.edge(e).tail) = -1.0;
    }
    return {std::move(b), Space::Vertex, Space::Edge, &g};
}

EdgeForm d_apply(const VertexFunction& f) {
    const WeightedGraph& g = *f.graph;
    EdgeForm out = zero_edge_form(g);
    for (Index e = 0; e < g.edge_count(); ++e) {
        out.values[e] = f.values[g.edge(e).head] - f.values[g.edge(e).tail];
    }
    return out;
}

VertexFunction coboundary_apply(const EdgeForm& phi) {
    const WeightedGraph& g = *phi.graph;
    VertexFunction out = zero_vertex_function(g);
    for (Index v = 0; v < g.vertex_count(); ++v) {
        double s = 0.0;
        for (const auto& inc : g.incident(v)) {
            s += inc.sign * g.conductance(inc.edge) * phi.values[inc.edge];
        }
        out.values[v] = s / g.mass(v);
    }
    return out;
}

OperatorMatrix coboundary(const WeightedGraph& g) {
    require_dense(std::max(g.edge_count(), g.vertex_count()), "coboundary matrix");
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(g.vertex_count(), g.edge_count());
    for (Index v = 0; v < g.vertex_count(); ++v) {
        for (const auto& inc : g.incident(v)) {
            d(v, inc.edge) = inc.sign * g.conductance(inc.edge) / g.mass(v);
        }
    }
    return {std::move(d), Space::Edge, Space::Vertex, &g};
}

OperatorMatrix laplacian0(const WeightedGraph& g) {
    require_dense(g.vertex_count(), "laplacian0");
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(g.vertex_count(), g.vertex_count());
    for (Index v = 0; v < g.vertex_count(); ++v) {
        double degree = 0.0;
        for (const auto& inc : g.incident(v)) {
            const Edge& e = g.edge(inc.edge);
            const Index y = e.tail == v ? e.head : e.tail;
            degree += e.conductance;
            l(v, y) -= e.conductance / g.mass(v);
        }
        l(v, v) = degree / g.mass(v);
    }
    if (g.vertex_count() <= kCompositionCheckLimit && g.edge_count() <= kCompositionCheckLimit) {
        check_composition(l, coboundary(g).matrix * incidence(g).matrix, "laplacian0");
    }
    return {std::move(l), Space::Vertex, Space::Vertex, &g};
}

OperatorMatrix laplacian1(const WeightedGraph& g) {
    require_dense(g.edge_count(), "laplacian1");
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(g.edge_count(), g.edge_count());
    // (i, j) entry: sum over shared vertices x of sign_i(x) sign_j(x) c(e_j) / m(x).
    for (Index v = 0; v < g.vertex_count(); ++v) {
        const auto& star = g.incident(v);
        for (const auto& a : star) {
            for (const auto& b : star) {
                l(a.edge, b.edge) += a.sign * b.sign * g.conductance(b.edge) / g.mass(v);
            }
        }
    }
    if (g.vertex_count() <= kCompositionCheckLimit && g.edge_count() <= kCompositionCheckLimit) {
        check_composition(l, incidence(g).matrix * coboundary(g).matrix, "laplacian1");
    }
    return {std::move(l), Space::Edge, Space::Edge, &g};
}

VertexFunction laplacian0_apply(const VertexFunction& f) {
    return coboundary_apply(d_apply(f));
}

EdgeForm laplacian1_apply(const EdgeForm& phi) {
    return d_apply(coboundary_apply(phi));
}

double max_asymmetry(const Eigen::MatrixXd& m) {
    if (m.rows() == 0) return 0.0;
    return (m - m.transpose()).cwiseAbs().maxCoeff();
}

SymmetrizedOperator symmetrize(const OperatorMatrix& op) {
    if (op.domain != op.codomain || op.graph == nullptr) {
        throw Error::precondition("NotALaplacian",
                                  "symmetrize needs an endomorphism of l2(V, m) or l2(E, c)");
    }
    const WeightedGraph& g = *op.graph;
    const Index n = op.domain == Space::Vertex ? g.vertex_count() : g.edge_count();
    if (op.matrix.rows() != n || op.matrix.cols() != n) {
        throw Error::precondition("NotALaplacian", "operator dimensions do not match its space tag");
    }

    Eigen::VectorXd w_sqrt(n);
    for (Index i = 0; i < n; ++i) {
        w_sqrt[i] = std::sqrt(op.domain == Space::Vertex ? g.mass(i) : g.conductance(i));
    }
    Eigen::MatrixXd s(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            s(i, j) = w_sqrt[i] * op.matrix(i, j) / w_sqrt[j];
        }
    }
    return {std::move(s), std::move(w_sqrt), op.domain, &g};
}

} // namespace sgt
