#pragma once

// Test-only reference arithmetic. Deliberately naive: a dense coefficient grid,
// schoolbook products and composition by expanded powers, sharing no code with
// the library beyond reading and writing term maps.

#include <algorithm>
#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "shearscope/poly.hpp"

namespace oracle {

struct Dense {
    // c[i][j] is the coefficient of x^i y^j.
    std::vector<std::vector<mpq_class>> c;

    static Dense zero() { return {}; }
    static Dense constant(const mpq_class& v) {
        Dense d;
        d.at(0, 0) = v;
        return d;
    }
    static Dense x() {
        Dense d;
        d.at(1, 0) = 1;
        return d;
    }
    static Dense y() {
        Dense d;
        d.at(0, 1) = 1;
        return d;
    }

    mpq_class& at(std::size_t i, std::size_t j) {
        if (c.size() <= i) c.resize(i + 1);
        for (auto& row : c)
            if (row.size() <= j) row.resize(j + 1);
        if (c[i].size() <= j) c[i].resize(j + 1);
        return c[i][j];
    }
    mpq_class get(std::size_t i, std::size_t j) const {
        if (i >= c.size() || j >= c[i].size()) return 0;
        return c[i][j];
    }
    std::size_t rows() const { return c.size(); }
    std::size_t cols() const {
        std::size_t n = 0;
        for (const auto& row : c) n = std::max(n, row.size());
        return n;
    }
};

inline Dense operator+(const Dense& a, const Dense& b) {
    Dense r;
    const std::size_t n = std::max(a.rows(), b.rows()), m = std::max(a.cols(), b.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const mpq_class v = a.get(i, j) + b.get(i, j);
            if (v != 0) r.at(i, j) = v;
        }
    return r;
}

inline Dense scale(const Dense& a, const mpq_class& s) {
    Dense r;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.c[i].size(); ++j)
            if (a.c[i][j] != 0 && s != 0) r.at(i, j) = a.c[i][j] * s;
    return r;
}

inline Dense operator-(const Dense& a, const Dense& b) { return a + scale(b, -1); }

inline Dense operator*(const Dense& a, const Dense& b) {
    Dense r;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.c[i].size(); ++j) {
            if (a.c[i][j] == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.c[k].size(); ++l) {
                    if (b.c[k][l] == 0) continue;
                    r.at(i + k, j + l) += a.c[i][j] * b.c[k][l];
                }
        }
    return r;
}

inline Dense power(const Dense& a, unsigned e) {
    Dense r = Dense::constant(1);
    for (unsigned k = 0; k < e; ++k) r = r * a;
    return r;
}

inline Dense dx(const Dense& a) {
    Dense r;
    for (std::size_t i = 1; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.c[i].size(); ++j)
            if (a.c[i][j] != 0) r.at(i - 1, j) = a.c[i][j] * static_cast<long>(i);
    return r;
}

inline Dense dy(const Dense& a) {
    Dense r;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 1; j < a.c[i].size(); ++j)
            if (a.c[i][j] != 0) r.at(i, j - 1) = a.c[i][j] * static_cast<long>(j);
    return r;
}

// f(P, Q) by summing c_ij P^i Q^j with freshly expanded powers.
inline Dense substitute(const Dense& f, const Dense& P, const Dense& Q) {
    Dense r;
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.c[i].size(); ++j)
            if (f.c[i][j] != 0) r = r + scale(power(P, i) * power(Q, j), f.c[i][j]);
    return r;
}

inline mpq_class eval(const Dense& a, const mpq_class& x, const mpq_class& y) {
    mpq_class sum = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.c[i].size(); ++j) {
            mpq_class term = a.c[i][j];
            for (std::size_t k = 0; k < i; ++k) term *= x;
            for (std::size_t k = 0; k < j; ++k) term *= y;
            sum += term;
        }
    return sum;
}

inline Dense from(const shearscope::Poly& p) {
    Dense d;
    for (const auto& [m, coef] : p.terms()) d.at(m.ex, m.ey) = coef.raw();
    return d;
}

inline shearscope::Poly to(const Dense& d) {
    shearscope::Poly p;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.c[i].size(); ++j)
            if (d.c[i][j] != 0)
                p.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)},
                           shearscope::Rational(d.c[i][j]));
    return p;
}

struct DenseMap {
    Dense P, Q;
};

inline DenseMap from(const shearscope::PolyMap& m) { return {from(m.P), from(m.Q)}; }
inline shearscope::PolyMap to(const DenseMap& m) { return {to(m.P), to(m.Q)}; }

inline DenseMap compose(const DenseMap& outer, const DenseMap& inner) {
    return {substitute(outer.P, inner.P, inner.Q), substitute(outer.Q, inner.P, inner.Q)};
}

inline Dense jacobian(const DenseMap& m) { return dx(m.P) * dy(m.Q) - dy(m.P) * dx(m.Q); }

// Expands (x + sum eps_i alpha L^i, y + sum eps_i beta L^i) with L = beta x - alpha y.
inline DenseMap shear_map(long alpha, long beta, const std::vector<std::pair<unsigned, mpq_class>>& eps) {
    const Dense L = scale(Dense::x(), beta) - scale(Dense::y(), alpha);
    DenseMap m{Dense::x(), Dense::y()};
    for (const auto& [i, e] : eps) {
        const Dense Li = power(L, i);
        m.P = m.P + scale(Li, e * alpha);
        m.Q = m.Q + scale(Li, e * beta);
    }
    return m;
}

}  // namespace oracle
