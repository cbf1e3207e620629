#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgt/graph.hpp"
#include "sgt/operators.hpp"

namespace sgt {

// Exact arithmetic backing for the anti-roundoff cross-checks: kernel ranks,
// cycle independence and harmonic-form residuals are recomputed over Q.
using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact rational value of a finite double (mantissa times a power of two).
Rational to_rational(double x);

/// Row rank by exact Gaussian elimination. Destroys its argument.
Index rational_rank(RationalMatrix m);

RationalMatrix rational_laplacian0(const WeightedGraph& g);
RationalMatrix rational_laplacian1(const WeightedGraph& g);

/// dim ker of the chosen Laplacian, computed exactly from the unsymmetrized
/// operator with weights taken as exact rationals.
Index rational_kernel_dim(const WeightedGraph& g, Space space);

/// Exact coboundary of a rational 1-form.
std::vector<Rational> rational_coboundary(const WeightedGraph& g,
                                          const std::vector<Rational>& phi);

/// The cycle form phi(e) = sign(e)/c(e), evaluated exactly.
std::vector<Rational> rational_cycle_form(const WeightedGraph& g, const SignedCycle& cycle);

/// True iff the cycle form is exactly harmonic: delta phi == 0 in Q.
bool cycle_form_exactly_harmonic(const WeightedGraph& g, const SignedCycle& cycle);

/// Rank over Q of the signed edge-incidence vectors of the given cycles.
Index cycle_incidence_rank(const WeightedGraph& g, const std::vector<SignedCycle>& cycles);

} // namespace sgt
