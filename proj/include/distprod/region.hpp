#pragma once

// Regions of the working domain: axis-aligned boxes, optionally punctured
// at finitely many points. The whole domain is the box [-1,1)^d.

#include <optional>

#include "distprod/common.hpp"

namespace distprod {

struct Region {
    Point lower;
    Point upper;
    std::vector<Point> removed;  // punctured points, empty for a plain box

    Region() = default;
    Region(Point lo, Point hi) : lower(lo), upper(hi) {}

    int dim() const { return lower.dim; }

    static Region box1(double lo, double hi) {
        return Region(Point(lo), Point(hi));
    }
    static Region box2(double lo, double hi) {
        return Region(Point(lo, lo), Point(hi, hi));
    }
    static Region domain(int dim) {
        return dim == 1 ? box1(-1.0, 1.0) : box2(-1.0, 1.0);
    }

    Region punctured(const Point& p) const {
        Region r = *this;
        r.removed.push_back(p);
        return r;
    }

    bool contains(const Point& p, double tol = 0.0) const {
        for (int i = 0; i < dim(); ++i)
            if (p[i] < lower[i] - tol || p[i] > upper[i] + tol) return false;
        return true;
    }

    // R-enlargement: all points within distance R of the region (the
    // paper's K-bar_R). Punctures are not enlarged away.
    Region enlargement(double r) const {
        Region e = *this;
        for (int i = 0; i < dim(); ++i) {
            e.lower[i] -= r;
            e.upper[i] += r;
        }
        return e;
    }

    double extent(int axis) const { return upper[axis] - lower[axis]; }
    double max_extent() const {
        double m = extent(0);
        if (dim() == 2) m = std::max(m, extent(1));
        return m;
    }

    Point center() const {
        Point c = lower;
        for (int i = 0; i < dim(); ++i) c[i] = 0.5 * (lower[i] + upper[i]);
        return c;
    }

    // Uniform sample grid, n points per axis, endpoints included.
    std::vector<Point> grid(int n) const {
        std::vector<Point> pts;
        if (dim() == 1) {
            for (int i = 0; i < n; ++i) {
                double t = n == 1 ? 0.5 : static_cast<double>(i) / (n - 1);
                pts.push_back(Point(lower[0] + t * extent(0)));
            }
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double s = n == 1 ? 0.5 : static_cast<double>(i) / (n - 1);
                    double t = n == 1 ? 0.5 : static_cast<double>(j) / (n - 1);
                    pts.push_back(Point(lower[0] + s * extent(0),
                                        lower[1] + t * extent(1)));
                }
        }
        return pts;
    }
};

}  // namespace distprod
