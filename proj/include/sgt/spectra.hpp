#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sgt/forms.hpp"
#include "sgt/graph.hpp"
#include "sgt/operators.hpp"

namespace sgt {

struct SpectrumGroup {
    double value = 0.0; // group representative (mean)
    Index multiplicity = 0;
};

// Eigenvalues of one Laplacian, ascending, clustered at the effective
// tolerance. kernel_dim is the multiplicity of the group containing 0, or 0
// when no group does.
struct SpectrumReport {
    std::vector<double> eigenvalues;
    std::vector<SpectrumGroup> groups;
    Index kernel_dim = 0;
    double tolerance = 0.0; // effective absolute tolerance used for grouping
};

struct EigenDecomposition {
    Eigen::VectorXd values;  // ascending
    Eigen::MatrixXd vectors; // orthonormal columns, standard coordinates
};

/// Full eigendecomposition of a symmetrized Laplacian. Throws NotSymmetric
/// when the residual asymmetry is above round-off scale, NoConvergence when
/// the solver fails.
EigenDecomposition eigen_decompose(const SymmetrizedOperator& op);

/// Cluster ascending eigenvalues into groups separated by more than tol.
std::vector<SpectrumGroup> group_eigenvalues(const Eigen::VectorXd& values, double tol);

/// Eigenvalues plus multiplicity grouping. The grouping tolerance is
/// tol * max(1, max-norm of the matrix), so unit-scale graphs group at tol.
SpectrumReport spectrum(const SymmetrizedOperator& op, double tol);

/// Eigenvector column k pulled back to the weighted space (divide by W^{1/2}).
VertexFunction eigenvector_vertex(const SymmetrizedOperator& op, const EigenDecomposition& d,
                                  Index k);
EdgeForm eigenvector_edge(const SymmetrizedOperator& op, const EigenDecomposition& d, Index k);

/// Number of eigenvalues with |lambda| <= effective tol. Throws
/// ToleranceAmbiguity when an eigenvalue falls in (tol, 10 tol], or when the
/// exact rational kernel rank (computed automatically for attached graphs
/// with at most kExactCrossCheckEdges edges) disagrees with the float count.
Index kernel_dim(const SymmetrizedOperator& op, double tol);

inline constexpr Index kExactCrossCheckEdges = 12;

struct CoincidencePair {
    double value0 = 0.0;
    double value1 = 0.0;
    Index mult0 = 0;
    Index mult1 = 0;
};

// Comparison of the two Laplacian spectra away from zero, plus the kernel
// bookkeeping: dim ker Delta0 vs component count and, for connected graphs,
// dim ker Delta1 vs circuit rank.
struct CoincidenceReport {
    std::vector<CoincidencePair> matched;
    Index zero_mult0 = 0;
    Index zero_mult1 = 0;
    bool verdict = false;
    Index circuit_rank = 0;
    Index component_count = 0;
    double tolerance = 0.0;
    std::vector<std::string> notes;
};

/// Computes both spectra, pairs the nonzero groups in ascending order and
/// checks value agreement (within the effective tolerance) with exact
/// multiplicity equality, dim ker Delta0 == #components, and for connected
/// graphs dim ker Delta1 == circuit rank.
CoincidenceReport verify_coincidence(const WeightedGraph& g, double tol);

/// The 1-form with phi(e) = sign(e)/c(e) on the cycle and 0 elsewhere; it is
/// harmonic by telescoping. Throws InvalidCycle for a broken cycle.
EdgeForm harmonic_cycle_form(const WeightedGraph& g, const SignedCycle& cycle);

struct IntertwineReport {
    double eigen_residual = 0.0;       // |(Lap - mu) mapped| / |mapped|, weighted norms
    double norm_identity_error = 0.0;  // relative error in |df|^2 = mu |f|^2
    bool pass = false;
};

/// For an eigenpair (mu, f) of Delta0 with mu != 0: checks that df is a
/// Delta1 eigenvector for mu and that |df|_E^2 = mu |f|_V^2. Throws
/// ZeroEigenvalueRejected when |mu| <= tol.
IntertwineReport intertwine_check(const WeightedGraph& g, double mu, const VertexFunction& f,
                                  double tol);

/// Mirror image: for an eigenpair (lambda, phi) of Delta1, checks that
/// delta phi is a Delta0 eigenvector for lambda.
IntertwineReport intertwine_check_edge(const WeightedGraph& g, double lambda, const EdgeForm& phi,
                                       double tol);

} // namespace sgt
