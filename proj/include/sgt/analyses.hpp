#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sgt/family.hpp"
#include "sgt/forms.hpp"

namespace sgt {

/// Smallest Rayleigh quotient of the family's 0-form Laplacian over functions
/// supported in the window {-N..N}. Edges leaving the window contribute their
/// full Dirichlet energy, so any lower bound valid for compactly supported
/// functions on the infinite graph applies to the returned value exactly.
/// Chord-free families use bisection on the tridiagonal form (robust to huge
/// weight ranges); chord families fall back to a dense eigensolve.
double dirichlet_gap(const LineFamily& fam, long long radius, double rel_tol = 1e-13);

// A verified spectral-gap witness on a window: A(n)^2 equals the edge
// conductance c(n, n+1) and the increments A(n) - A(n-1) stay >= a, which
// pushes the whole Dirichlet spectrum above a^2/4.
struct GapCertificate {
    double a = 0.0;
    double bound = 0.0; // a^2 / 4
    long long radius = 0;
};

/// Checks the two witness conditions at every |n| <= N and returns the
/// largest constant the window supports. Throws WitnessMismatch when
/// A(n)^2 != c(n, n+1) anywhere (relative 1e-12), NoPositiveGap when the
/// increment infimum is not positive, UnitMassRequired for families with
/// non-unit vertex masses (the bound is stated for m = 1).
GapCertificate gap_certificate(const LineFamily& fam,
                               const std::function<double(long long)>& witness,
                               long long radius);

/// The witness A(n) = alpha^{n/2} for n >= 0 and -alpha^{-n/2} for n <= -1,
/// which certifies a = sqrt(alpha) - 1 for the exponential family.
std::function<double(long long)> exponential_witness(double alpha);

/// Piecewise-linear cutoff: 1 on [-(n+1), n+1], sloping to 0 at 2(n+1).
double chi_cutoff(long long n, long long x);

// Energy certificate for the cutoff family: per-n suprema of the weighted
// gradient energy (1/m(x)) sum over incident edges of c (d chi_n)^2, and the
// overall supremum C. Bounded C across all n certifies chi-completeness on
// the checked range.
struct ChiCertificate {
    double supremum = 0.0;
    std::vector<double> per_n;      // index i holds the sup for n = i + 1
    long long n_max = 0;
    bool cutoff_range_ok = false;   // 0 <= chi <= 1 and chi = 1 on the inner ball
};

/// Evaluates the cutoff energies for n in [1, n_max] over |x| <= 4(n+1).
/// Chord edges never contribute: the cutoff depends on |x| only.
ChiCertificate chi_certificate(const LineFamily& fam, long long n_max);

/// Sphere-based completeness series: partial sum over n in [2, N] of
/// 1 / sqrt(a_n^+ + a_{n+1}^-), where a_n^+/- are the per-sphere suprema of
/// forward/backward weighted degrees on S_n = {n, -n}. Divergence is the
/// completeness criterion for chord families.
double bgj_partial_sum(const LineFamily& fam, long long n);

enum class ConvergenceVerdict { Convergent, Divergent, Inconclusive };

// Partial sums of sum over edges of 1/c(e) plus a heuristic tail
// classification. The verdict decides whether the line family carries a
// square-summable harmonic 1-form, i.e. whether 0 is an eigenvalue of the
// 1-form Laplacian.
struct KerDeltaReport {
    ConvergenceVerdict verdict = ConvergenceVerdict::Inconclusive;
    std::vector<std::pair<long long, double>> partial_sums; // snapshots at decades + N
    double max_tail_ratio = 0.0;
    double tail_exponent = 0.0; // log-log slope of the tail terms
    bool kernel_nontrivial = false;
};

/// Accumulates S_N = sum over window-N edges of 1/c(e) with compensated
/// summation and classifies the tail over the last ratio_window terms:
/// geometric decay (ratios <= 0.99) or a log-log slope >= 1.1 reads
/// convergent, a slope <= 0.95 reads divergent, anything else is
/// inconclusive. Underflowed tails (partial sums stationary) read convergent.
/// Throws ChordsUnsupported for chord families.
KerDeltaReport ker_delta_criterion(const LineFamily& fam, long long n_max,
                                   long long ratio_window = 64);

// The solution of c(n, n+1) phi(n, n+1) = const on a window: phi(e) = a/c(e)
// with a = c(0, 1) phi0. Interior vertices cancel exactly, so the residual
// measures only floating-point noise.
struct HarmonicLineForm {
    long long radius = 0;
    std::vector<double> values;      // edge (n, n+1) at index n + radius
    double partial_norm_sq = 0.0;    // sum over window edges of c phi^2
    double max_interior_residual = 0.0; // max |delta phi(x)|, |x| < N, relative to |a|
};

/// Throws ChordsUnsupported for chord families, BadParameter when phi0 = 0.
HarmonicLineForm harmonic_line_form(const LineFamily& fam, long long radius, double phi0);

/// The harmonic form materialized on a truncation of the same radius.
EdgeForm harmonic_form_on(const HarmonicLineForm& form, const Truncation& window);

/// Disjointly supported exact kernel elements of the window 1-form Laplacian
/// for the chord family: one cycle form per odd k <= N, built from the cycle
/// through the chords at k and k-1 (k = 1 uses the two line edges at the
/// origin). Throws WindowTooSmall for N < 2, ChordsUnsupported without
/// chords.
std::vector<EdgeForm> g2_harmonic_basis(const Truncation& window);

/// ||(Delta0 - lambda) f|| / ||f|| in the weighted norms, for f supported
/// at distance >= 2 from the window boundary (throws
/// SupportTooCloseToBoundary otherwise). A decaying residual sequence is
/// evidence consistent with lambda in the spectrum.
double weyl_residual0(const Truncation& window, double lambda, const VertexFunction& f);

/// Same for the 1-form Laplacian and an edge form on the window.
double weyl_residual1(const Truncation& window, double lambda, const EdgeForm& phi);

/// Probe for weyl_residual0: cos(theta k) under a tent taper vanishing at
/// |k| = N - 2. For constant weights, lambda = 2 - 2 cos(theta) is the
/// matching spectral point.
VertexFunction cosine_probe(const Truncation& window, double theta);

/// Probe for weyl_residual1: the harmonic line form under the same taper.
EdgeForm tapered_harmonic_probe(const LineFamily& fam, const Truncation& window, double phi0);

} // namespace sgt
