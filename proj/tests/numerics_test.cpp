#include <catch2/catch.hpp>

#include <cmath>

#include "ncdiag/cumulants.hpp"
#include "ncdiag/density.hpp"
#include "ncdiag/measures.hpp"
#include "ncdiag/wishart.hpp"

using namespace ncdiag;

namespace {

// grid resolving both square-root edges of the Marchenko-Pastur support
std::vector<double> mp_grid() {
    return merge_grids({
        geometric_edge_grid(0.0, 1e-8, 0.5, 1.05, +1),
        linear_grid(0.5, 3.5, 600),
        geometric_edge_grid(4.0, 1e-8, 0.5, 1.05, -1),
    });
}

}  // namespace

TEST_CASE("free Poisson(1) density reproduces the Marchenko-Pastur law") {
    const auto curve = density_from_measure(DiscreteMeasure::dirac(1.0), mp_grid(), 1e-8);
    CHECK(curve.all_ok());
    for (double v : curve.values) CHECK(v >= -1e-9);
    CHECK(curve_mass(curve) == Approx(1.0).margin(1e-3));
    const double catalans[] = {1.0, 2.0, 5.0, 14.0};
    for (int r = 1; r <= 4; ++r)
        CHECK(curve_moment(curve, r) == Approx(catalans[r - 1]).margin(1e-2));
    // pointwise check against the closed-form density in the bulk
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        const double x = curve.grid[i];
        if (x < 0.5 || x > 3.5) continue;
        const double mp = std::sqrt((4.0 - x) * x) / (2.0 * M_PI * x);
        CHECK(curve.values[i] == Approx(mp).margin(1e-6));
    }
}

TEST_CASE("s = 5 spectral density matches the exact moments") {
    const auto rho = scale_measure(project_real(uniform_roots(5)), 0.5);
    const auto grid = merge_grids({
        geometric_edge_grid(0.0, 1e-10, 0.1, 1.05, +1),
        geometric_edge_grid(0.0, 1e-10, 0.1, 1.05, -1),
        linear_grid(-2.5, 2.5, 1200),
    });
    const auto curve = density_from_measure(rho, grid, 1e-6);
    CHECK(curve.all_ok());
    const auto exact = moments_from_free_cumulants(character_free_cumulants<Rat>(5, 4), 4);
    for (int r = 1; r <= 4; ++r) {
        const double want = to_double(exact[r - 1]) / std::pow(2.0, r);
        CHECK(curve_moment(curve, r) == Approx(want).margin(1e-2));
    }
    // including the atom at 0, everything integrates to one
    CHECK(curve_mass(curve) == Approx(1.0).margin(1e-3));
}

TEST_CASE("mixed-sign atoms: quadrature moments match the cumulant engine") {
    DiscreteMeasure rho;
    rho.add_atom(-1.0, 0.4);
    rho.add_atom(1.5, 0.6);
    const auto grid = merge_grids({
        geometric_edge_grid(0.0, 1e-9, 0.3, 1.05, +1),
        geometric_edge_grid(0.0, 1e-9, 0.3, 1.05, -1),
        linear_grid(-4.0, 5.0, 1800),
    });
    const auto curve = density_from_measure(rho, grid, 1e-8);
    CHECK(curve.all_ok());
    CHECK(curve_mass(curve) == Approx(1.0).margin(1e-3));
    const auto kappas = compound_free_poisson_cumulants(rho, 4);
    const auto exact = moments_from_free_cumulants(kappas, 4);
    for (int r = 1; r <= 4; ++r)
        CHECK(curve_moment(curve, r) == Approx(exact[r - 1]).margin(1e-2));
}

TEST_CASE("vanishing atom weight leaves almost no continuous mass") {
    const double w = 1e-3;
    const auto rho = DiscreteMeasure::dirac(1.0, w);
    // the continuous part lives near 1; stay away from the atom at 0
    const auto curve =
        density_from_measure(rho, linear_grid(0.5, 1.5, 2000), 1e-8);
    const double cont = curve_mass(curve);
    CHECK(cont < w * (1.0 + 1e-2));
    CHECK(cont > w * 0.9);
}

TEST_CASE("empty measure is the point mass at zero") {
    const auto grid = merge_grids({
        geometric_edge_grid(0.0, 1e-9, 0.5, 1.05, +1),
        geometric_edge_grid(0.0, 1e-9, 0.5, 1.05, -1),
    });
    const auto curve = density_from_measure(DiscreteMeasure(), grid, 1e-6);
    CHECK(curve.all_ok());
    CHECK(curve_mass(curve) == Approx(1.0).margin(1e-3));
    CHECK(std::abs(curve_moment(curve, 2)) < 1e-3);
}

TEST_CASE("density input validation") {
    DiscreteMeasure complex_m;
    complex_m.add_atom({0.0, 1.0}, 1.0);
    CHECK_THROWS_AS(density_from_measure(complex_m, linear_grid(0, 1, 10), 1e-6),
                    std::invalid_argument);
    CHECK_THROWS_AS(density_from_measure(DiscreteMeasure::dirac(1.0), {1.0, 0.0}, 1e-6),
                    std::invalid_argument);
    CHECK_THROWS_AS(density_from_measure(DiscreteMeasure::dirac(1.0), linear_grid(0, 1, 10), 1.0),
                    std::invalid_argument);
}

TEST_CASE("empirical moments of constant spectra") {
    EmpiricalSpectrum ones;
    ones.eigenvalues.assign(50, 1.0);
    for (double m : empirical_moments(ones, 4)) CHECK(m == Approx(1.0));
    EmpiricalSpectrum zeros;
    zeros.eigenvalues.assign(50, 0.0);
    for (double m : empirical_moments(zeros, 4)) CHECK(m == 0.0);
}

TEST_CASE("zero trials give an empty spectrum") {
    const auto spec = sample_spectrum(DiscreteMeasure::dirac(1.0), 50, 0, 7);
    CHECK(spec.eigenvalues.empty());
    for (double m : empirical_moments(spec, 4)) CHECK(m == 0.0);
}

TEST_CASE("fixed seed reproduces the spectrum bit for bit") {
    const auto rho = scale_measure(project_real(uniform_roots(5)), 0.5);
    const auto a = sample_spectrum(rho, 60, 2, 12345);
    const auto b = sample_spectrum(rho, 60, 2, 12345);
    REQUIRE(a.eigenvalues.size() == b.eigenvalues.size());
    for (std::size_t i = 0; i < a.eigenvalues.size(); ++i)
        CHECK(a.eigenvalues[i] == b.eigenvalues[i]);
    const auto c = sample_spectrum(rho, 60, 2, 54321);
    CHECK(a.eigenvalues != c.eigenvalues);
}

TEST_CASE("wishart sampling approaches the free Poisson moments") {
    const auto spec = sample_spectrum(DiscreteMeasure::dirac(1.0), 400, 2, 2024);
    const auto m = empirical_moments(spec, 4);
    const double catalans[] = {1.0, 2.0, 5.0, 14.0};
    for (int r = 1; r <= 4; ++r)
        CHECK(m[r - 1] == Approx(catalans[r - 1]).epsilon(0.10));
}

TEST_CASE("wishart sampling at N = 2000 lands within 3 percent") {
    const auto spec = sample_spectrum(DiscreteMeasure::dirac(1.0), 2000, 1, 424242);
    const auto m = empirical_moments(spec, 4);
    const double catalans[] = {1.0, 2.0, 5.0, 14.0};
    for (int r = 1; r <= 4; ++r)
        CHECK(m[r - 1] == Approx(catalans[r - 1]).epsilon(0.03));
}

TEST_CASE("doubling the matrix size tightens the moments") {
    const auto rho = scale_measure(project_real(uniform_roots(5)), 0.5);
    const auto exact_rat = moments_from_free_cumulants(character_free_cumulants<Rat>(5, 4), 4);
    const auto small = empirical_moments(sample_spectrum(rho, 300, 4, 99), 4);
    const auto large = empirical_moments(sample_spectrum(rho, 600, 4, 99), 4);
    int improved = 0;
    for (int r = 1; r <= 4; ++r) {
        const double want = to_double(exact_rat[r - 1]) / std::pow(2.0, r);
        if (std::abs(large[r - 1] - want) <= std::abs(small[r - 1] - want)) ++improved;
    }
    CHECK(improved >= 3);
}

TEST_CASE("sampling input validation") {
    DiscreteMeasure complex_m;
    complex_m.add_atom({0.0, 1.0}, 1.0);
    CHECK_THROWS_AS(sample_spectrum(complex_m, 50, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_spectrum(DiscreteMeasure::dirac(1.0), 4001, 1, 1),
                    std::invalid_argument);
}
