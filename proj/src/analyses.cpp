#include "sgt/analyses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "sgt/errors.hpp"
#include "sgt/operators.hpp"

namespace sgt {

namespace {

// Kahan compensated accumulator; summation order is fixed, so results are
// bit-reproducible.
struct Accumulator {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Count of eigenvalues below sigma for a symmetric tridiagonal matrix, via
// the inertia of the LDL^T recurrence. Tolerates the huge entry ranges of
// exponential weight rules (only ratios enter).
int eigenvalues_below(const std::vector<double>& diag, const std::vector<double>& off,
                      double sigma) {
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        const double e2 = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
        double denom = q;
        if (denom == 0.0) denom = std::numeric_limits<double>::min();
        q = (diag[i] - sigma) - e2 / denom;
        if (q < 0.0) ++count;
    }
    return count;
}

double smallest_tridiagonal_eigenvalue(const std::vector<double>& diag,
                                       const std::vector<double>& off, double rel_tol) {
    double hi = 0.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        double r = diag[i];
        if (i > 0) r += std::abs(off[i - 1]);
        if (i + 1 < diag.size()) r += std::abs(off[i]);
        hi = std::max(hi, r);
    }
    double lo = 0.0;
    // Invariant: count(lo) == 0 <= smallest eigenvalue <= hi.
    for (int iter = 0; iter < 2000 && hi - lo > rel_tol * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (eigenvalues_below(diag, off, mid) >= 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

double dirichlet_gap(const LineFamily& fam, long long radius, double rel_tol) {
    if (radius < 2) {
        throw Error::input("BadParameter", "dirichlet_gap needs a window radius >= 2");
    }

    if (!fam.has_chords) {
        // Tridiagonal Dirichlet form on the window. The diagonal carries the
        // full weighted degree in the infinite graph, including the two edges
        // that leave the window.
        const std::size_t n = static_cast<std::size_t>(2 * radius + 1);
        std::vector<double> diag(n);
        std::vector<double> off(n - 1);
        for (long long k = -radius; k <= radius; ++k) {
            const std::size_t i = static_cast<std::size_t>(k + radius);
            diag[i] = (fam.line_c(k - 1) + fam.line_c(k)) / fam.mass(k);
            if (k < radius) {
                off[i] = -fam.line_c(k) / std::sqrt(fam.mass(k) * fam.mass(k + 1));
            }
        }
        return smallest_tridiagonal_eigenvalue(diag, off, rel_tol);
    }

    // Chord families: dense symmetrized Dirichlet matrix on the window.
    const Truncation window = truncate(fam, radius);
    const WeightedGraph& g = window.graph;
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(g.vertex_count(), g.vertex_count());
    for (Index e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        const double c = edge.conductance;
        mat(edge.tail, edge.tail) += c / g.mass(edge.tail);
        mat(edge.head, edge.head) += c / g.mass(edge.head);
        const double coupling = -c / std::sqrt(g.mass(edge.tail) * g.mass(edge.head));
        mat(edge.tail, edge.head) += coupling;
        mat(edge.head, edge.tail) += coupling;
    }
    // Boundary corrections from the two line edges leaving the window.
    mat(window.vertex_of(radius), window.vertex_of(radius)) +=
        fam.line_c(radius) / fam.mass(radius);
    mat(window.vertex_of(-radius), window.vertex_of(-radius)) +=
        fam.line_c(-radius - 1) / fam.mass(-radius);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
    if (solver.info() != Eigen::Success) {
        throw Error::numerical("NoConvergence", "dense Dirichlet eigensolve failed");
    }
    return solver.eigenvalues().minCoeff();
}

GapCertificate gap_certificate(const LineFamily& fam,
                               const std::function<double(long long)>& witness,
                               long long radius) {
    if (radius < 1) {
        throw Error::input("BadParameter", "gap_certificate needs a window radius >= 1");
    }
    for (long long n = -radius; n <= radius; ++n) {
        if (fam.mass(n) != 1.0) {
            throw Error::precondition("UnitMassRequired",
                                      "the a^2/4 bound is stated for unit vertex masses; m(" +
                                          std::to_string(n) + ") != 1");
        }
    }
    for (long long n = -radius - 1; n <= radius; ++n) {
        const double a_val = witness(n);
        const double c = fam.line_c(n);
        if (!std::isfinite(a_val) || std::abs(a_val * a_val - c) > 1e-12 * std::max(1.0, c)) {
            throw Error::precondition("WitnessMismatch",
                                      "A(n)^2 != c(n, n+1) at n = " + std::to_string(n));
        }
    }
    double a = std::numeric_limits<double>::infinity();
    for (long long n = -radius; n <= radius; ++n) {
        a = std::min(a, witness(n) - witness(n - 1));
    }
    if (!(a > 0.0)) {
        throw Error::precondition("NoPositiveGap",
                                  "witness increments reach " + std::to_string(a) +
                                      " on the window; no positive gap is certified");
    }
    return {a, a * a / 4.0, radius};
}

std::function<double(long long)> exponential_witness(double alpha) {
    if (!(alpha > 1.0)) {
        throw Error::input("BadParameter", "exponential witness needs alpha > 1");
    }
    return [alpha](long long n) {
        if (n >= 0) return std::pow(alpha, static_cast<double>(n) / 2.0);
        return -std::pow(alpha, -static_cast<double>(n) / 2.0);
    };
}

double chi_cutoff(long long n, long long x) {
    const double ramp = 2.0 - static_cast<double>(std::llabs(x)) / static_cast<double>(n + 1);
    return std::min(1.0, std::max(0.0, ramp));
}

ChiCertificate chi_certificate(const LineFamily& fam, long long n_max) {
    if (n_max < 1) {
        throw Error::input("BadParameter", "chi_certificate needs n_max >= 1");
    }
    ChiCertificate cert;
    cert.n_max = n_max;
    cert.cutoff_range_ok = true;
    cert.per_n.reserve(static_cast<std::size_t>(n_max));

    for (long long n = 1; n <= n_max; ++n) {
        const long long x_limit = 4 * (n + 1);
        double sup = 0.0;
        for (long long x = -x_limit; x <= x_limit; ++x) {
            const double chi = chi_cutoff(n, x);
            if (chi < 0.0 || chi > 1.0) cert.cutoff_range_ok = false;
            if (std::llabs(x) <= n + 1 && chi != 1.0) cert.cutoff_range_ok = false;

            // Weighted gradient energy at x over the incident edges. Chords
            // join x to -x and the cutoff is even, so they drop out.
            const double d_left = chi - chi_cutoff(n, x - 1);
            const double d_right = chi_cutoff(n, x + 1) - chi;
            const double energy =
                (fam.line_c(x - 1) * d_left * d_left + fam.line_c(x) * d_right * d_right) /
                fam.mass(x);
            sup = std::max(sup, energy);
        }
        cert.per_n.push_back(sup);
        cert.supremum = std::max(cert.supremum, sup);
    }
    return cert;
}

double bgj_partial_sum(const LineFamily& fam, long long n) {
    Accumulator acc;
    for (long long k = 2; k <= n; ++k) {
        // Forward/backward weighted-degree suprema on the sphere {k, -k}.
        const double a_plus = std::max(fam.line_c(k) / fam.mass(k),
                                       fam.line_c(-k - 1) / fam.mass(-k));
        const long long j = k + 1;
        const double a_minus = std::max(fam.line_c(j - 1) / fam.mass(j),
                                        fam.line_c(-j) / fam.mass(-j));
        acc.add(1.0 / std::sqrt(a_plus + a_minus));
    }
    return acc.sum;
}

KerDeltaReport ker_delta_criterion(const LineFamily& fam, long long n_max,
                                   long long ratio_window) {
    if (fam.has_chords) {
        throw Error::precondition("ChordsUnsupported",
                                  "the 1/c summability criterion is stated for the pure line");
    }
    if (n_max < 10 || ratio_window < 4) {
        throw Error::input("BadParameter", "need n_max >= 10 and ratio_window >= 4");
    }
    ratio_window = std::min(ratio_window, n_max / 2);

    KerDeltaReport report;
    Accumulator acc;
    std::vector<double> tail_terms;
    tail_terms.reserve(static_cast<std::size_t>(ratio_window + 1));
    long long next_snapshot = 10;

    for (long long k = 1; k <= n_max; ++k) {
        // The two edges at combinatorial distance k from the origin.
        const double term = 1.0 / fam.line_c(k - 1) + 1.0 / fam.line_c(-k);
        acc.add(term);
        if (k > n_max - ratio_window - 1) tail_terms.push_back(term);
        if (k == next_snapshot || k == n_max) {
            report.partial_sums.emplace_back(k, acc.sum);
            if (k == next_snapshot) next_snapshot *= 10;
        }
    }

    // Tail classification. Geometric decay or a super-linear power law reads
    // convergent; a clearly sub-linear power law reads divergent; the band in
    // between stays inconclusive -- no finite computation decides it.
    bool underflowed = false;
    double max_ratio = 0.0;
    for (std::size_t i = 0; i + 1 < tail_terms.size(); ++i) {
        if (tail_terms[i] < std::numeric_limits<double>::min()) {
            underflowed = true;
            break;
        }
        max_ratio = std::max(max_ratio, tail_terms[i + 1] / tail_terms[i]);
    }
    report.max_tail_ratio = max_ratio;

    if (underflowed) {
        // Terms fell below the representable range: the partial sums are
        // numerically stationary.
        report.verdict = ConvergenceVerdict::Convergent;
    } else if (max_ratio <= 0.99) {
        report.verdict = ConvergenceVerdict::Convergent;
    } else {
        // Least-squares slope of log t against log k over the tail window.
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        const long long k0 = n_max - static_cast<long long>(tail_terms.size()) + 1;
        for (std::size_t i = 0; i < tail_terms.size(); ++i) {
            const double x = std::log(static_cast<double>(k0 + static_cast<long long>(i)));
            const double y = std::log(tail_terms[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double m = static_cast<double>(tail_terms.size());
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        report.tail_exponent = -slope;
        if (report.tail_exponent >= 1.1) {
            report.verdict = ConvergenceVerdict::Convergent;
        } else if (report.tail_exponent <= 0.95) {
            report.verdict = ConvergenceVerdict::Divergent;
        } else {
            report.verdict = ConvergenceVerdict::Inconclusive;
        }
    }
    report.kernel_nontrivial = report.verdict == ConvergenceVerdict::Convergent;
    return report;
}

HarmonicLineForm harmonic_line_form(const LineFamily& fam, long long radius, double phi0) {
    if (fam.has_chords) {
        throw Error::precondition("ChordsUnsupported",
                                  "the line recursion does not extend across chords");
    }
    if (radius < 1) {
        throw Error::input("BadParameter", "window radius must be >= 1");
    }
    if (phi0 == 0.0) {
        throw Error::input("BadParameter", "phi0 must be nonzero");
    }

    HarmonicLineForm form;
    form.radius = radius;
    form.values.resize(static_cast<std::size_t>(2 * radius));
    const double a = fam.line_c(0) * phi0; // c phi is constant along the line

    Accumulator norm;
    for (long long n = -radius; n < radius; ++n) {
        const double c = fam.line_c(n);
        const double v = a / c;
        form.values[static_cast<std::size_t>(n + radius)] = v;
        norm.add(c * v * v); // = a^2 / c
    }
    form.partial_norm_sq = norm.sum;

    double max_res = 0.0;
    for (long long x = -radius + 1; x < radius; ++x) {
        const double left = fam.line_c(x - 1) * form.values[static_cast<std::size_t>(x - 1 + radius)];
        const double right = fam.line_c(x) * form.values[static_cast<std::size_t>(x + radius)];
        max_res = std::max(max_res, std::abs(left - right));
    }
    form.max_interior_residual = max_res / std::abs(a);
    return form;
}

EdgeForm harmonic_form_on(const HarmonicLineForm& form, const Truncation& window) {
    if (window.radius != form.radius || window.graph.edge_count() != window.line_edge_count()) {
        throw Error::precondition("WindowTooSmall",
                                  "window does not match the form (radius or chord mismatch)");
    }
    EdgeForm phi = zero_edge_form(window.graph);
    for (Index e = 0; e < window.line_edge_count(); ++e) {
        phi.values[e] = form.values[static_cast<std::size_t>(e)];
    }
    return phi;
}

std::vector<EdgeForm> g2_harmonic_basis(const Truncation& window) {
    const long long radius = window.radius;
    if (window.graph.edge_count() <= window.line_edge_count()) {
        throw Error::precondition("ChordsUnsupported",
                                  "the cycle family needs the chord edges (k, -k)");
    }
    if (radius < 2) {
        throw Error::precondition("WindowTooSmall",
                                  "window radius must be >= 2 to hold the first cycle");
    }

    std::vector<EdgeForm> basis;
    const WeightedGraph& g = window.graph;
    auto value = [&](Index e) { return 1.0 / g.conductance(e); };

    for (long long k = 1; k <= radius; k += 2) {
        EdgeForm phi = zero_edge_form(g);
        if (k == 1) {
            // Triangle through the origin: (0,1), (1,-1), (-1,0).
            const Index e01 = window.line_edge_of(0);
            const Index chord1 = window.chord_edge_of(1);
            const Index em10 = window.line_edge_of(-1);
            phi.values[e01] = value(e01);
            phi.values[chord1] = value(chord1);
            phi.values[em10] = value(em10);
        } else {
            // Quadrilateral (k-1,k), (k,-k), (-k,-k+1), (-k+1,k-1); the last
            // step runs against the stored chord (k-1, -(k-1)).
            const Index line_up = window.line_edge_of(k - 1);
            const Index chord_k = window.chord_edge_of(k);
            const Index line_down = window.line_edge_of(-k);
            const Index chord_km1 = window.chord_edge_of(k - 1);
            phi.values[line_up] = value(line_up);
            phi.values[chord_k] = value(chord_k);
            phi.values[line_down] = value(line_down);
            phi.values[chord_km1] = -value(chord_km1);
        }
        basis.push_back(std::move(phi));
    }
    return basis;
}

namespace {

long long vertex_support_radius(const Truncation& window, const Eigen::VectorXd& values) {
    long long r = 0;
    for (Index v = 0; v < static_cast<Index>(values.size()); ++v) {
        if (values[v] != 0.0) r = std::max(r, std::llabs(window.label_of(v)));
    }
    return r;
}

void require_interior_support(const Truncation& window, long long support_radius) {
    if (support_radius + 2 > window.radius) {
        throw Error::precondition("SupportTooCloseToBoundary",
                                  "support radius " + std::to_string(support_radius) +
                                      " needs window radius >= " +
                                      std::to_string(support_radius + 2));
    }
}

} // namespace

double weyl_residual0(const Truncation& window, double lambda, const VertexFunction& f) {
    require_interior_support(window, vertex_support_radius(window, f.values));
    VertexFunction residual = laplacian0_apply(f);
    residual.values -= lambda * f.values;
    return norm_vertex(residual) / norm_vertex(f);
}

double weyl_residual1(const Truncation& window, double lambda, const EdgeForm& phi) {
    const WeightedGraph& g = window.graph;
    long long r = 0;
    for (Index e = 0; e < g.edge_count(); ++e) {
        if (phi.values[e] != 0.0) {
            r = std::max({r, std::llabs(window.label_of(g.edge(e).tail)),
                          std::llabs(window.label_of(g.edge(e).head))});
        }
    }
    require_interior_support(window, r);
    EdgeForm residual = laplacian1_apply(phi);
    residual.values -= lambda * phi.values;
    return norm_edge(residual) / norm_edge(phi);
}

namespace {

double tent(long long k, long long half_width) {
    const double t = 1.0 - static_cast<double>(std::llabs(k)) / static_cast<double>(half_width);
    return std::max(0.0, t);
}

} // namespace

VertexFunction cosine_probe(const Truncation& window, double theta) {
    if (window.radius < 4) {
        throw Error::input("BadParameter", "cosine probe needs a window radius >= 4");
    }
    VertexFunction f = zero_vertex_function(window.graph);
    const long long half = window.radius - 2;
    for (long long k = -half; k <= half; ++k) {
        f.values[window.vertex_of(k)] = std::cos(theta * static_cast<double>(k)) * tent(k, half);
    }
    return f;
}

EdgeForm tapered_harmonic_probe(const LineFamily& fam, const Truncation& window, double phi0) {
    if (window.radius < 4) {
        throw Error::input("BadParameter", "tapered probe needs a window radius >= 4");
    }
    const HarmonicLineForm line = harmonic_line_form(fam, window.radius, phi0);
    EdgeForm phi = harmonic_form_on(line, window);
    const long long half = window.radius - 2;
    for (long long n = -window.radius; n < window.radius; ++n) {
        const long long reach = std::max(std::llabs(n), std::llabs(n + 1));
        phi.values[window.line_edge_of(n)] *= tent(reach, half);
    }
    return phi;
}

} // namespace sgt
