#include "sgt/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sgt/errors.hpp"
#include "sgt/rational.hpp"

namespace sgt {

namespace {

double effective_tolerance(const Eigen::MatrixXd& m, double tol) {
    const double scale = m.rows() == 0 ? 1.0 : std::max(1.0, m.cwiseAbs().maxCoeff());
    return tol * scale;
}

} // namespace

EigenDecomposition eigen_decompose(const SymmetrizedOperator& op) {
    const Index n = static_cast<Index>(op.matrix.rows());
    if (n == 0) return {};

    const double scale = std::max(1.0, op.matrix.cwiseAbs().maxCoeff());
    const double asym = max_asymmetry(op.matrix);
    if (asym > 1e-10 * scale) {
        throw Error::numerical("NotSymmetric",
                               "matrix asymmetry " + std::to_string(asym) +
                                   " exceeds round-off scale; symmetrize the operator first");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.matrix);
    if (solver.info() != Eigen::Success) {
        throw Error::numerical("NoConvergence", "symmetric eigensolver failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<SpectrumGroup> group_eigenvalues(const Eigen::VectorXd& values, double tol) {
    std::vector<SpectrumGroup> groups;
    Index start = 0;
    for (Index i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values[i] - values[i - 1] > tol) {
            double mean = 0.0;
            for (Index k = start; k < i; ++k) mean += values[k];
            mean /= static_cast<double>(i - start);
            groups.push_back({mean, i - start});
            start = i;
        }
    }
    return groups;
}

SpectrumReport spectrum(const SymmetrizedOperator& op, double tol) {
    if (tol <= 0.0) {
        throw Error::input("BadParameter", "tolerance must be positive");
    }
    SpectrumReport report;
    report.tolerance = effective_tolerance(op.matrix, tol);
    if (op.matrix.rows() == 0) return report;

    const EigenDecomposition d = eigen_decompose(op);
    report.eigenvalues.assign(d.values.data(), d.values.data() + d.values.size());
    report.groups = group_eigenvalues(d.values, report.tolerance);
    for (const auto& grp : report.groups) {
        if (std::abs(grp.value) <= report.tolerance) report.kernel_dim += grp.multiplicity;
    }
    return report;
}

VertexFunction eigenvector_vertex(const SymmetrizedOperator& op, const EigenDecomposition& d,
                                  Index k) {
    VertexFunction f = zero_vertex_function(*op.graph);
    f.values = d.vectors.col(k).cwiseQuotient(op.w_sqrt);
    return f;
}

EdgeForm eigenvector_edge(const SymmetrizedOperator& op, const EigenDecomposition& d, Index k) {
    EdgeForm phi = zero_edge_form(*op.graph);
    phi.values = d.vectors.col(k).cwiseQuotient(op.w_sqrt);
    return phi;
}

Index kernel_dim(const SymmetrizedOperator& op, double tol) {
    const double eff = effective_tolerance(op.matrix, tol);
    const EigenDecomposition d = eigen_decompose(op);

    Index count = 0;
    for (Index i = 0; i < d.values.size(); ++i) {
        const double a = std::abs(d.values[i]);
        if (a <= eff) {
            ++count;
        } else if (a <= 10.0 * eff) {
            throw Error::numerical("ToleranceAmbiguity",
                                   "eigenvalue " + std::to_string(d.values[i]) +
                                       " lies between tol and 10*tol; the zero/nonzero split is "
                                       "unreliable at this tolerance");
        }
    }

    if (op.graph != nullptr && op.graph->edge_count() <= kExactCrossCheckEdges) {
        const Index exact = rational_kernel_dim(*op.graph, op.space);
        if (exact != count) {
            throw Error::numerical("ToleranceAmbiguity",
                                   "floating-point kernel dimension " + std::to_string(count) +
                                       " disagrees with the exact rational rank " +
                                       std::to_string(exact));
        }
    }
    return count;
}

CoincidenceReport verify_coincidence(const WeightedGraph& g, double tol) {
    CoincidenceReport report;
    report.component_count = connected_components(g).count;
    report.circuit_rank = g.edge_count() - g.vertex_count() + report.component_count;

    const SymmetrizedOperator s0 = symmetrize(laplacian0(g));
    const SymmetrizedOperator s1 = symmetrize(laplacian1(g));
    const SpectrumReport r0 = spectrum(s0, tol);
    const SpectrumReport r1 = spectrum(s1, tol);
    report.tolerance = std::max(r0.tolerance, r1.tolerance);

    std::vector<SpectrumGroup> nz0;
    std::vector<SpectrumGroup> nz1;
    for (const auto& grp : r0.groups) {
        if (std::abs(grp.value) <= report.tolerance) {
            report.zero_mult0 += grp.multiplicity;
        } else {
            nz0.push_back(grp);
        }
    }
    for (const auto& grp : r1.groups) {
        if (std::abs(grp.value) <= report.tolerance) {
            report.zero_mult1 += grp.multiplicity;
        } else {
            nz1.push_back(grp);
        }
    }

    bool ok = nz0.size() == nz1.size();
    if (!ok) {
        report.notes.push_back("nonzero group counts differ: " + std::to_string(nz0.size()) +
                               " vs " + std::to_string(nz1.size()));
    }
    for (std::size_t i = 0; ok && i < nz0.size(); ++i) {
        report.matched.push_back({nz0[i].value, nz1[i].value, nz0[i].multiplicity,
                                  nz1[i].multiplicity});
        if (std::abs(nz0[i].value - nz1[i].value) > report.tolerance ||
            nz0[i].multiplicity != nz1[i].multiplicity) {
            ok = false;
            report.notes.push_back("nonzero group " + std::to_string(i) + " mismatch");
        }
    }

    if (report.zero_mult0 != report.component_count) {
        ok = false;
        report.notes.push_back("dim ker Delta0 = " + std::to_string(report.zero_mult0) +
                               " but the graph has " + std::to_string(report.component_count) +
                               " components");
    }
    if (report.component_count == 1) {
        if (report.zero_mult1 != report.circuit_rank) {
            ok = false;
            report.notes.push_back("dim ker Delta1 = " + std::to_string(report.zero_mult1) +
                                   " but the circuit rank is " +
                                   std::to_string(report.circuit_rank));
        }
    } else {
        report.notes.push_back(
            "graph is disconnected: the kernel/circuit-rank identity for Delta1 is only "
            "asserted on connected graphs");
    }

    report.verdict = ok;
    return report;
}

EdgeForm harmonic_cycle_form(const WeightedGraph& g, const SignedCycle& cycle) {
    if (!is_valid_cycle(g, cycle)) {
        throw Error::precondition("InvalidCycle",
                                  "steps do not form a closed edge-disjoint cycle of this graph");
    }
    EdgeForm phi = zero_edge_form(g);
    for (const auto& step : cycle.steps) {
        phi.values[step.edge] = step.sign / g.conductance(step.edge);
    }
    return phi;
}

namespace {

IntertwineReport intertwine_impl(double mu, double mapped_norm_sq, double source_norm_sq,
                                 double residual_norm, double tol) {
    IntertwineReport report;
    const double mapped_norm = std::sqrt(mapped_norm_sq);
    report.eigen_residual = residual_norm / mapped_norm;
    report.norm_identity_error =
        std::abs(mapped_norm_sq - mu * source_norm_sq) / (mu * source_norm_sq);
    report.pass = report.eigen_residual <= tol && report.norm_identity_error <= tol;
    return report;
}

} // namespace

IntertwineReport intertwine_check(const WeightedGraph& g, double mu, const VertexFunction& f,
                                  double tol) {
    if (std::abs(mu) <= tol) {
        throw Error::precondition("ZeroEigenvalueRejected",
                                  "the intertwining identity needs a nonzero eigenvalue (df "
                                  "may vanish for mu = 0)");
    }
    const EdgeForm df = d_apply(f);
    EdgeForm residual = laplacian1_apply(df);
    residual.values -= mu * df.values;
    return intertwine_impl(mu, inner_edge(df, df), inner_vertex(f, f), norm_edge(residual), tol);
}

IntertwineReport intertwine_check_edge(const WeightedGraph& g, double lambda, const EdgeForm& phi,
                                       double tol) {
    if (std::abs(lambda) <= tol) {
        throw Error::precondition("ZeroEigenvalueRejected",
                                  "the intertwining identity needs a nonzero eigenvalue (delta "
                                  "phi may vanish for lambda = 0)");
    }
    const VertexFunction dphi = coboundary_apply(phi);
    VertexFunction residual = laplacian0_apply(dphi);
    residual.values -= lambda * dphi.values;
    return intertwine_impl(lambda, inner_vertex(dphi, dphi), inner_edge(phi, phi),
                           norm_vertex(residual), tol);
}

} // namespace sgt
