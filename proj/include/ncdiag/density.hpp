#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "ncdiag/measures.hpp"

namespace ncdiag {

// Spectral density samples of a compound free Poisson law, recovered by
// inverting K(g) = 1/g + R(g) at x + i*eta along a grid.
struct DensityCurve {
    std::vector<double> grid;
    std::vector<double> values;
    double eta = 0.0;
    std::vector<int> failed_points;  // indices where no admissible root was found

    bool all_ok() const { return failed_points.empty(); }
};

namespace detail {

using Cplx = std::complex<double>;
using CplxPoly = std::vector<Cplx>;  // coefficients, ascending degree

inline CplxPoly poly_mul(const CplxPoly& a, const CplxPoly& b) {
    CplxPoly out(a.size() + b.size() - 1, Cplx(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline void poly_add(CplxPoly& a, const CplxPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Cplx(0.0, 0.0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

// Roots via the companion matrix of the monic polynomial.
inline std::vector<Cplx> poly_roots(CplxPoly p) {
    while (p.size() > 1 && std::abs(p.back()) < 1e-300) p.pop_back();
    const int deg = static_cast<int>(p.size()) - 1;
    if (deg < 1) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -p[i] / p[deg];
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = Cplx(1.0, 0.0);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<Cplx> roots(deg);
    for (int i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()(i);
    return roots;
}

// K(g) = w cleared of denominators:
//   prod(1 - g z_i) + g sum_i c_i z_i prod_{j != i}(1 - g z_j)
//   - w g prod(1 - g z_i) = 0 .
inline CplxPoly k_equation(const std::vector<double>& z, const std::vector<double>& c, Cplx w) {
    CplxPoly prod{Cplx(1.0, 0.0)};
    for (double zi : z) prod = poly_mul(prod, CplxPoly{Cplx(1.0, 0.0), Cplx(-zi, 0.0)});
    CplxPoly acc = prod;
    for (std::size_t i = 0; i < z.size(); ++i) {
        CplxPoly partial{Cplx(z[i] * c[i], 0.0)};
        for (std::size_t j = 0; j < z.size(); ++j)
            if (j != i) partial = poly_mul(partial, CplxPoly{Cplx(1.0, 0.0), Cplx(-z[j], 0.0)});
        partial.insert(partial.begin(), Cplx(0.0, 0.0));  // times g
        poly_add(acc, partial);
    }
    CplxPoly last = prod;
    for (auto& coef : last) coef *= -w;
    last.insert(last.begin(), Cplx(0.0, 0.0));  // times g
    poly_add(acc, last);
    return acc;
}

inline std::optional<Cplx> pick_root(const std::vector<Cplx>& roots,
                                     const std::optional<Cplx>& previous, Cplx w) {
    std::optional<Cplx> best;
    double best_dist = 0.0;
    for (const Cplx& r : roots) {
        if (r.imag() > 1e-9) continue;  // the physical branch has Im g <= 0 for Im w > 0
        const double d = previous ? std::abs(r - *previous) : std::abs(r - 1.0 / w);
        if (!best || d < best_dist) {
            best = r;
            best_dist = d;
        }
    }
    return best;
}

}  // namespace detail

// Evaluate the density of the compound free Poisson law of rho on the given
// grid. Root selection is by continuation: the branch is locked far to the
// left of the grid, where g ~ 1/w identifies the Cauchy transform, and each
// grid point warm-starts from its neighbor.
inline DensityCurve density_from_measure(const DiscreteMeasure& rho,
                                         const std::vector<double>& grid, double eta = 1e-6) {
    if (!rho.is_real()) throw std::invalid_argument("density_from_measure: real measure required");
    if (eta < 1e-8 || eta > 1e-2)
        throw std::invalid_argument("density_from_measure: eta outside [1e-8, 1e-2]");
    if (grid.size() < 2 || !std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("density_from_measure: grid must be increasing");

    std::vector<double> z, c;
    double reach = 1.0;
    for (const auto& a : rho.atoms()) {
        if (std::abs(a.position.real()) < 1e-14) continue;  // zero atoms do not move the law
        z.push_back(a.position.real());
        c.push_back(a.weight);
        reach = std::max(reach, std::abs(a.position.real()));
    }

    DensityCurve curve;
    curve.grid = grid;
    curve.eta = eta;
    curve.values.assign(grid.size(), 0.0);

    const double span = std::max(grid.back() - grid.front(), 1.0);
    const double far_left = grid.front() - 10.0 * std::max(span, 4.0 * reach);
    std::optional<detail::Cplx> g;
    // bridge from the asymptotic regime to the first grid point
    const int bridge_steps = 64;
    for (int t = 0; t <= bridge_steps; ++t) {
        const double x = far_left + (grid.front() - far_left) * t / bridge_steps;
        const detail::Cplx w(x, eta);
        g = detail::pick_root(detail::poly_roots(detail::k_equation(z, c, w)), g, w);
        if (!g) break;
    }
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        const detail::Cplx w(grid[idx], eta);
        g = detail::pick_root(detail::poly_roots(detail::k_equation(z, c, w)), g, w);
        if (!g) {
            curve.failed_points.push_back(static_cast<int>(idx));
            continue;
        }
        curve.values[idx] = std::max(-g->imag() / M_PI, 0.0);
    }
    return curve;
}

inline double curve_mass(const DensityCurve& curve) {
    double acc = 0.0;
    for (std::size_t i = 1; i < curve.grid.size(); ++i)
        acc += 0.5 * (curve.values[i] + curve.values[i - 1]) *
               (curve.grid[i] - curve.grid[i - 1]);
    return acc;
}

inline double curve_moment(const DensityCurve& curve, int r) {
    double acc = 0.0;
    for (std::size_t i = 1; i < curve.grid.size(); ++i) {
        const double fa = curve.values[i - 1] * std::pow(curve.grid[i - 1], r);
        const double fb = curve.values[i] * std::pow(curve.grid[i], r);
        acc += 0.5 * (fa + fb) * (curve.grid[i] - curve.grid[i - 1]);
    }
    return acc;
}

// Grid helpers: uniform spacing, and geometric refinement toward an edge,
// which resolves square-root and atomic features without huge grids.
inline std::vector<double> linear_grid(double lo, double hi, int points) {
    std::vector<double> out;
    out.reserve(points);
    for (int i = 0; i < points; ++i) out.push_back(lo + (hi - lo) * i / (points - 1));
    return out;
}

// Points approaching `edge` from inside [edge - far, edge - near] (direction
// < 0) or [edge + near, edge + far] (direction > 0), geometrically spaced.
inline std::vector<double> geometric_edge_grid(double edge, double near, double far,
                                               double ratio, int direction) {
    if (near <= 0 || far <= near || ratio <= 1.0)
        throw std::invalid_argument("geometric_edge_grid: bad parameters");
    std::vector<double> out;
    for (double d = near; d < far * (1.0 + 1e-12); d *= ratio)
        out.push_back(edge + (direction > 0 ? d : -d));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<double> merge_grids(std::vector<std::vector<double>> parts) {
    std::vector<double> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-15; }),
              out.end());
    return out;
}

}  // namespace ncdiag
