#pragma once

// Basic geometric value types shared across the library: points in R^d
// (d = 1 or 2), derivative multi-indices, and regions of the working
// domain [-1,1)^d.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace distprod {

inline constexpr double kPi = 3.14159265358979323846;

struct Point {
    int dim = 1;
    std::array<double, 2> v{0.0, 0.0};

    Point() = default;
    explicit Point(double x) : dim(1), v{x, 0.0} {}
    Point(double x, double y) : dim(2), v{x, y} {}

    double operator[](int i) const { return v[static_cast<size_t>(i)]; }
    double& operator[](int i) { return v[static_cast<size_t>(i)]; }

    double norm() const {
        return dim == 1 ? std::abs(v[0]) : std::hypot(v[0], v[1]);
    }

    friend Point operator+(Point a, const Point& b) {
        for (int i = 0; i < a.dim; ++i) a[i] += b[i];
        return a;
    }
    friend Point operator-(Point a, const Point& b) {
        for (int i = 0; i < a.dim; ++i) a[i] -= b[i];
        return a;
    }
    friend Point operator*(double s, Point a) {
        for (int i = 0; i < a.dim; ++i) a[i] *= s;
        return a;
    }
    friend bool operator==(const Point& a, const Point& b) {
        return a.dim == b.dim && a.v == b.v;
    }
};

inline double dist(const Point& a, const Point& b) { return (a - b).norm(); }

// Derivative multi-index; order() is |k|.
struct MIdx {
    int dim = 1;
    std::array<int, 2> k{0, 0};

    static MIdx zero(int dim) {
        MIdx m;
        m.dim = dim;
        return m;
    }
    static MIdx of(int k0) {
        MIdx m;
        m.dim = 1;
        m.k = {k0, 0};
        return m;
    }
    static MIdx of(int k0, int k1) {
        MIdx m;
        m.dim = 2;
        m.k = {k0, k1};
        return m;
    }

    int operator[](int i) const { return k[static_cast<size_t>(i)]; }
    int& operator[](int i) { return k[static_cast<size_t>(i)]; }
    int order() const { return k[0] + k[1]; }

    friend bool operator==(const MIdx& a, const MIdx& b) {
        return a.dim == b.dim && a.k == b.k;
    }
    friend bool operator<(const MIdx& a, const MIdx& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.k < b.k;
    }
};

// All multi-indices with |k| <= max_order, graded order.
inline std::vector<MIdx> multi_indices_up_to(int dim, int max_order) {
    std::vector<MIdx> out;
    for (int n = 0; n <= max_order; ++n) {
        if (dim == 1) {
            out.push_back(MIdx::of(n));
        } else {
            for (int i = n; i >= 0; --i) out.push_back(MIdx::of(i, n - i));
        }
    }
    return out;
}

inline double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline double midx_factorial(const MIdx& k) {
    return factorial(k[0]) * (k.dim == 2 ? factorial(k[1]) : 1.0);
}

inline double binom(int n, int j) {
    return factorial(n) / (factorial(j) * factorial(n - j));
}

// pow with integer exponent, exact for small powers.
inline double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

inline double pow_point(const Point& p, const MIdx& k) {
    double r = ipow(p[0], k[0]);
    if (p.dim == 2) r *= ipow(p[1], k[1]);
    return r;
}

// The paper-style strict floor: max{n in Z : n < a}. Differs from
// std::floor at integers (floor_strict(1.0) == 0).
inline int floor_strict(double a) {
    int n = static_cast<int>(std::floor(a));
    if (static_cast<double>(n) == a) --n;
    return n;
}

inline int parse_env_int(const char* name, int fallback) {
    if (const char* s = std::getenv(name)) return std::atoi(s);
    return fallback;
}

}  // namespace distprod
