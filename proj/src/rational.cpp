#include "sgt/rational.hpp"

#include <cmath>
#include <cstdint>

#include "sgt/errors.hpp"

namespace sgt {

using boost::multiprecision::cpp_int;

Rational to_rational(double x) {
    if (!std::isfinite(x)) {
        throw Error::input("NonpositiveWeight", "cannot convert non-finite value to a rational");
    }
    if (x == 0.0) return Rational(0);
    int exp = 0;
    const double mant = std::frexp(x, &exp); // x = mant * 2^exp, 0.5 <= |mant| < 1
    const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(scaled);
    if (exp > 0) {
        r *= Rational(cpp_int(1) << exp);
    } else if (exp < 0) {
        r /= Rational(cpp_int(1) << -exp);
    }
    return r;
}

Index rational_rank(RationalMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    Index rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            const Rational factor = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) {
                m[r][c] -= factor * m[row][c];
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

RationalMatrix rational_laplacian0(const WeightedGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    RationalMatrix l(n, std::vector<Rational>(n, Rational(0)));
    for (Index v = 0; v < g.vertex_count(); ++v) {
        const Rational inv_m = Rational(1) / to_rational(g.mass(v));
        for (const auto& inc : g.incident(v)) {
            const Edge& e = g.edge(inc.edge);
            const Index y = e.tail == v ? e.head : e.tail;
            const Rational c = to_rational(e.conductance);
            l[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] += c * inv_m;
            l[static_cast<std::size_t>(v)][static_cast<std::size_t>(y)] -= c * inv_m;
        }
    }
    return l;
}

RationalMatrix rational_laplacian1(const WeightedGraph& g) {
    const auto n = static_cast<std::size_t>(g.edge_count());
    RationalMatrix l(n, std::vector<Rational>(n, Rational(0)));
    for (Index v = 0; v < g.vertex_count(); ++v) {
        const Rational inv_m = Rational(1) / to_rational(g.mass(v));
        const auto& star = g.incident(v);
        for (const auto& a : star) {
            for (const auto& b : star) {
                l[static_cast<std::size_t>(a.edge)][static_cast<std::size_t>(b.edge)] +=
                    Rational(a.sign * b.sign) * to_rational(g.conductance(b.edge)) * inv_m;
            }
        }
    }
    return l;
}

Index rational_kernel_dim(const WeightedGraph& g, Space space) {
    if (space == Space::Vertex) {
        return g.vertex_count() - rational_rank(rational_laplacian0(g));
    }
    return g.edge_count() - rational_rank(rational_laplacian1(g));
}

std::vector<Rational> rational_coboundary(const WeightedGraph& g,
                                          const std::vector<Rational>& phi) {
    std::vector<Rational> out(static_cast<std::size_t>(g.vertex_count()), Rational(0));
    for (Index v = 0; v < g.vertex_count(); ++v) {
        Rational s(0);
        for (const auto& inc : g.incident(v)) {
            s += Rational(inc.sign) * to_rational(g.conductance(inc.edge)) *
                 phi[static_cast<std::size_t>(inc.edge)];
        }
        out[static_cast<std::size_t>(v)] = s / to_rational(g.mass(v));
    }
    return out;
}

std::vector<Rational> rational_cycle_form(const WeightedGraph& g, const SignedCycle& cycle) {
    std::vector<Rational> phi(static_cast<std::size_t>(g.edge_count()), Rational(0));
    for (const auto& step : cycle.steps) {
        phi[static_cast<std::size_t>(step.edge)] =
            Rational(step.sign) / to_rational(g.conductance(step.edge));
    }
    return phi;
}

bool cycle_form_exactly_harmonic(const WeightedGraph& g, const SignedCycle& cycle) {
    const auto delta = rational_coboundary(g, rational_cycle_form(g, cycle));
    for (const Rational& v : delta) {
        if (v != 0) return false;
    }
    return true;
}

Index cycle_incidence_rank(const WeightedGraph& g, const std::vector<SignedCycle>& cycles) {
    RationalMatrix m;
    m.reserve(cycles.size());
    for (const SignedCycle& c : cycles) {
        std::vector<Rational> row(static_cast<std::size_t>(g.edge_count()), Rational(0));
        for (const auto& step : c.steps) {
            row[static_cast<std::size_t>(step.edge)] = Rational(step.sign);
        }
        m.push_back(std::move(row));
    }
    return rational_rank(std::move(m));
}

} // namespace sgt
