// Writes the Marchenko-Pastur density recovered by Stieltjes inversion to
// stdout as CSV, together with its first quadrature moments.

#include <iostream>

#include "ncdiag/density.hpp"

int main() {
    using namespace ncdiag;
    const auto grid = merge_grids({
        geometric_edge_grid(0.0, 1e-8, 0.5, 1.05, +1),
        linear_grid(0.5, 3.5, 300),
        geometric_edge_grid(4.0, 1e-8, 0.5, 1.05, -1),
    });
    const auto curve = density_from_measure(DiscreteMeasure::dirac(1.0), grid, 1e-8);
    std::cerr << "mass " << curve_mass(curve);
    for (int r = 1; r <= 4; ++r) std::cerr << "  m" << r << " " << curve_moment(curve, r);
    std::cerr << "\n";
    std::cout << "x,density\n";
    for (std::size_t i = 0; i < curve.grid.size(); ++i)
        std::cout << curve.grid[i] << "," << curve.values[i] << "\n";
    return 0;
}
