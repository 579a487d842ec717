#pragma once

// Truncated Taylor-series ("jet") arithmetic. Used to evaluate exact
// derivatives of the analytic bump profiles at arbitrary points, in one
// and two dimensions, without hand-coded derivative formulas.

#include <cassert>
#include <cmath>
#include <vector>

#include "distprod/common.hpp"

namespace distprod {

// Univariate jet: f(t) = sum c[k] t^k + O(t^{len}).
struct Jet1 {
    std::vector<double> c;

    explicit Jet1(int len = 1) : c(static_cast<size_t>(len), 0.0) {}
    static Jet1 constant(double v, int len) {
        Jet1 j(len);
        j.c[0] = v;
        return j;
    }
    // The identity t -> x0 + t.
    static Jet1 variable(double x0, int len) {
        Jet1 j(len);
        j.c[0] = x0;
        if (len > 1) j.c[1] = 1.0;
        return j;
    }
    int len() const { return static_cast<int>(c.size()); }

    friend Jet1 operator+(Jet1 a, const Jet1& b) {
        for (int k = 0; k < a.len(); ++k) a.c[k] += b.c[k];
        return a;
    }
    friend Jet1 operator-(Jet1 a, const Jet1& b) {
        for (int k = 0; k < a.len(); ++k) a.c[k] -= b.c[k];
        return a;
    }
    friend Jet1 operator*(double s, Jet1 a) {
        for (auto& x : a.c) x *= s;
        return a;
    }
    friend Jet1 operator*(const Jet1& a, const Jet1& b) {
        Jet1 r(a.len());
        for (int i = 0; i < a.len(); ++i)
            for (int j = 0; i + j < a.len(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        return r;
    }

    Jet1 reciprocal() const {
        Jet1 r(len());
        double inv = 1.0 / c[0];
        r.c[0] = inv;
        for (int k = 1; k < len(); ++k) {
            double s = 0.0;
            for (int j = 1; j <= k; ++j) s += c[j] * r.c[k - j];
            r.c[k] = -inv * s;
        }
        return r;
    }

    // exp via the E' = E u' recurrence.
    Jet1 exp() const {
        Jet1 e(len());
        e.c[0] = std::exp(c[0]);
        for (int k = 1; k < len(); ++k) {
            double s = 0.0;
            for (int j = 1; j <= k; ++j) s += j * c[j] * e.c[k - j];
            e.c[k] = s / k;
        }
        return e;
    }

    // k-th derivative value encoded by this jet.
    double deriv(int k) const { return c[static_cast<size_t>(k)] * factorial(k); }
};

// Bivariate jet truncated at total degree `deg`: f(s,t) = sum c[i][j] s^i t^j.
struct Jet2 {
    int deg;
    std::vector<double> c;  // row i holds j = 0..deg-i, packed

    explicit Jet2(int degree = 0)
        : deg(degree),
          c(static_cast<size_t>((degree + 1) * (degree + 2) / 2), 0.0) {}

    static int index(int deg, int i, int j) {
        // offset of row i = sum_{r<i} (deg+1-r)
        int off = i * (deg + 1) - i * (i - 1) / 2;
        return off + j;
    }
    double at(int i, int j) const {
        return c[static_cast<size_t>(index(deg, i, j))];
    }
    double& at(int i, int j) { return c[static_cast<size_t>(index(deg, i, j))]; }

    static Jet2 constant(double v, int deg) {
        Jet2 j(deg);
        j.at(0, 0) = v;
        return j;
    }
    // (x0 + s) or (y0 + t) depending on axis.
    static Jet2 variable(double v0, int axis, int deg) {
        Jet2 j(deg);
        j.at(0, 0) = v0;
        if (deg >= 1) {
            if (axis == 0)
                j.at(1, 0) = 1.0;
            else
                j.at(0, 1) = 1.0;
        }
        return j;
    }

    friend Jet2 operator+(Jet2 a, const Jet2& b) {
        for (size_t k = 0; k < a.c.size(); ++k) a.c[k] += b.c[k];
        return a;
    }
    friend Jet2 operator-(Jet2 a, const Jet2& b) {
        for (size_t k = 0; k < a.c.size(); ++k) a.c[k] -= b.c[k];
        return a;
    }
    friend Jet2 operator*(double s, Jet2 a) {
        for (auto& x : a.c) x *= s;
        return a;
    }
    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        Jet2 r(a.deg);
        for (int i = 0; i <= a.deg; ++i)
            for (int j = 0; i + j <= a.deg; ++j) {
                double av = a.at(i, j);
                if (av == 0.0) continue;
                for (int p = 0; i + p <= a.deg; ++p)
                    for (int q = 0; i + j + p + q <= a.deg; ++q) {
                        double bv = b.at(p, q);
                        if (bv != 0.0) r.at(i + p, j + q) += av * bv;
                    }
            }
        return r;
    }

    // g(w) where g is a univariate series in (u - u0) and w = this has
    // vanishing constant term. Horner in w.
    static Jet2 compose(const Jet1& g, const Jet2& w) {
        assert(std::abs(w.at(0, 0)) < 1e-300);
        Jet2 acc = Jet2::constant(g.c[static_cast<size_t>(g.len() - 1)], w.deg);
        for (int k = g.len() - 2; k >= 0; --k) {
            acc = acc * w;
            acc.at(0, 0) += g.c[static_cast<size_t>(k)];
        }
        return acc;
    }

    double deriv(int i, int j) const {
        return at(i, j) * factorial(i) * factorial(j);
    }
};

}  // namespace distprod
