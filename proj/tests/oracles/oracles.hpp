#pragma once

// Test-only reference computations. Nothing here calls into the simplex
// solver or the library's fractional/linearization code.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "dblfgp/model.hpp"

namespace oracle {

using dblfgp::LinearConstraint;
using dblfgp::Relation;

/// Solves the square system M x = r by Gaussian elimination with partial
/// pivoting. Empty result when singular.
inline std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> m,
                                                       std::vector<double> r) {
    const std::size_t n = r.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        for (std::size_t i = col + 1; i < n; ++i) {
            if (std::abs(m[i][col]) > std::abs(m[best][col])) best = i;
        }
        if (std::abs(m[best][col]) < 1e-12) return std::nullopt;
        std::swap(m[col], m[best]);
        std::swap(r[col], r[best]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            const double f = m[i][col] / m[col][col];
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
            r[i] -= f * r[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = r[i] / m[i][i];
    return x;
}

inline bool inside(const std::vector<LinearConstraint>& cons, const std::vector<double>& x,
                   double tol = 1e-9) {
    for (double v : x) {
        if (v < -tol) return false;
    }
    for (const auto& c : cons) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coeffs[j] * x[j];
        const double scale = 1.0 + std::abs(c.rhs);
        if (c.relation == Relation::LE && lhs > c.rhs + tol * scale) return false;
        if (c.relation == Relation::GE && lhs < c.rhs - tol * scale) return false;
        if (c.relation == Relation::EQ && std::abs(lhs - c.rhs) > tol * scale) return false;
    }
    return true;
}

/// All vertices of {x >= 0 : cons} in dimension n, by trying every choice of
/// n active rows. Equality rows need not be among them; inside() enforces
/// them.
inline std::vector<std::vector<double>> vertices(const std::vector<LinearConstraint>& cons,
                                                 std::size_t n) {
    // Rows: constraints first, then x_j = 0.
    struct Row {
        std::vector<double> a;
        double b;
    };
    std::vector<Row> rows;
    for (const auto& c : cons) rows.push_back({c.coeffs, c.rhs});
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> e(n, 0.0);
        e[j] = 1.0;
        rows.push_back({e, 0.0});
    }
    std::vector<std::vector<double>> out;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (pick.size() == n) {
            std::vector<std::vector<double>> m;
            std::vector<double> r;
            for (std::size_t i : pick) {
                m.push_back(rows[i].a);
                r.push_back(rows[i].b);
            }
            auto x = solve_square(m, r);
            if (!x || !inside(cons, *x, 1e-9)) return;
            for (const auto& v : out) {
                double d = 0.0;
                for (std::size_t j = 0; j < n; ++j) d = std::max(d, std::abs(v[j] - (*x)[j]));
                if (d < 1e-9) return;
            }
            out.push_back(*x);
            return;
        }
        for (std::size_t i = start; i < rows.size(); ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

template <typename F>
double max_over(const std::vector<std::vector<double>>& points, F f) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& p : points) best = std::max(best, f(p));
    return best;
}

template <typename F>
double min_over(const std::vector<std::vector<double>>& points, F f) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : points) best = std::min(best, f(p));
    return best;
}

inline double affine_at(const std::vector<double>& c, double k, const std::vector<double>& x) {
    double v = k;
    for (std::size_t j = 0; j < x.size(); ++j) v += c[j] * x[j];
    return v;
}

inline double ratio_at(const dblfgp::FractionalFunction& f, const std::vector<double>& x) {
    return affine_at(f.numerator.coeffs, f.numerator.constant, x) /
           affine_at(f.denominator.coeffs, f.denominator.constant, x);
}

struct GridExtremes {
    double min = std::numeric_limits<double>::infinity();
    double max = -std::numeric_limits<double>::infinity();
    std::size_t points = 0;
};

/// Evaluates f on every feasible lattice point (spacing `step`) of the box
/// [0, upper]^3. Lattice points outside `box` are infeasible and skipped.
inline GridExtremes grid_extremes_3d(const std::vector<LinearConstraint>& cons,
                                     const dblfgp::FractionalFunction& f, double step,
                                     double upper, const std::vector<double>& box) {
    GridExtremes g;
    const auto count = [&](double hi) {
        return static_cast<long>(std::floor(std::min(hi, upper) / step + 1e-9));
    };
    const long n0 = count(box[0]), n1 = count(box[1]), n2 = count(box[2]);
    std::vector<double> x(3);
    for (long i = 0; i <= n0; ++i) {
        x[0] = static_cast<double>(i) * step;
        for (long j = 0; j <= n1; ++j) {
            x[1] = static_cast<double>(j) * step;
            for (long k = 0; k <= n2; ++k) {
                x[2] = static_cast<double>(k) * step;
                if (!inside(cons, x, 1e-12)) continue;
                const double v = ratio_at(f, x);
                g.min = std::min(g.min, v);
                g.max = std::max(g.max, v);
                ++g.points;
            }
        }
    }
    return g;
}

/// Central finite-difference gradient.
template <typename F>
std::vector<double> fd_gradient(F f, std::vector<double> x, double h = 1e-5) {
    std::vector<double> g(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double keep = x[j];
        x[j] = keep + h;
        const double up = f(x);
        x[j] = keep - h;
        const double down = f(x);
        x[j] = keep;
        g[j] = (up - down) / (2.0 * h);
    }
    return g;
}

/// Uniform samples from the polytope by rejection inside its bounding box.
inline std::vector<std::vector<double>> sample_feasible(const std::vector<LinearConstraint>& cons,
                                                        const std::vector<double>& box,
                                                        std::size_t count, std::mt19937_64& rng) {
    std::vector<std::vector<double>> out;
    std::vector<std::uniform_real_distribution<double>> dists;
    for (double hi : box) dists.emplace_back(0.0, hi);
    std::vector<double> x(box.size());
    while (out.size() < count) {
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = dists[j](rng);
        if (inside(cons, x, 0.0)) out.push_back(x);
    }
    return out;
}

}  // namespace oracle
