#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "ncdiag/cumulants.hpp"
#include "ncdiag/measures.hpp"

namespace ncdiag {

inline constexpr double kVerifyTolerance = 1e-9;

struct VerifyReport {
    std::string claim;
    std::string s_label;
    int R = 0;
    double max_abs_err = 0.0;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline void track(VerifyReport& rep, double err) {
    rep.max_abs_err = std::max(rep.max_abs_err, std::abs(err));
}

}  // namespace detail

// law(chi/2) equals the compound free Poisson law of the projected,
// half-mass root-of-unity measure. Compares the cumulant sequences and the
// full moment sequences of the two sides.
inline VerifyReport verify_thm52(int s, int R, double perturb = 0.0) {
    VerifyReport rep{"thm52", std::to_string(s), R, 0.0, false, ""};
    // exact side: character cumulants dilated by 1/2
    auto exact = character_free_cumulants<Rat>(s, R);
    const auto half_exact = dilate_cumulants(exact, Rat(1, 2));
    // measure side: rho = projected uniform roots, mass halved
    const DiscreteMeasure rho = scale_measure(project_real(uniform_roots(s)), 0.5);
    auto measure_side = compound_free_poisson_cumulants(rho, R);
    if (perturb != 0.0 && R >= 2) measure_side.values[1] += perturb;
    for (int r = 1; r <= R; ++r)
        detail::track(rep, to_double(half_exact.kappa(r)) - measure_side.kappa(r));
    // moment sequences must agree as well
    const auto exact_moments = moments_from_free_cumulants(half_exact, R);
    const auto measure_moments = moments_from_free_cumulants(measure_side, R);
    for (int r = 1; r <= R; ++r)
        detail::track(rep, to_double(exact_moments[r - 1]) - measure_moments[r - 1]);
    rep.pass = rep.max_abs_err < kVerifyTolerance;
    return rep;
}

// The character decomposes as sum_k 2 cos(2 pi k / s) alpha_k with the
// alpha_k free Poisson of parameter 1/(2s), free: build that sum by
// dilation and free convolution and compare with the character cumulants.
inline VerifyReport verify_prop53(int s, int R) {
    VerifyReport rep{"prop53", std::to_string(s), R, 0.0, false, ""};
    const CumulantSequence<double> alpha =
        compound_free_poisson_cumulants(DiscreteMeasure::dirac(1.0, 1.0 / (2.0 * s)), R);
    CumulantSequence<double> sum;
    sum.kind = CumulantKind::free_kind;
    sum.origin = "prop53 sum";
    sum.values.assign(R, 0.0);
    for (int k = 1; k <= s; ++k) {
        const double scale = 2.0 * std::cos(2.0 * M_PI * k / s);
        sum = free_convolve(sum, dilate_cumulants(alpha, scale));
    }
    const auto exact = character_free_cumulants<Rat>(s, R);
    for (int r = 1; r <= R; ++r)
        detail::track(rep, to_double(exact.kappa(r)) - sum.kappa(r));
    rep.pass = rep.max_abs_err < kVerifyTolerance;
    return rep;
}

// s = infinity: character cumulants C(r, r/2)/2 (even r), halved by
// dilation, against the moments of the half-mass projected circle measure,
// via both the closed form and the finite-s trigonometric sums (exact once
// s exceeds r).
inline VerifyReport verify_thm65(int R) {
    VerifyReport rep{"thm65", "inf", R, 0.0, false, ""};
    const auto exact = character_free_cumulants<Rat>(std::nullopt, R);
    const auto half = dilate_cumulants(exact, Rat(1, 2));
    const int big_s = std::max(64, R + 1);
    for (int r = 1; r <= R; ++r) {
        double closed = 0.0;
        if (r % 2 == 0) closed = 0.5 * std::pow(2.0, -r) * to_double(binomial(r, r / 2));
        double trig = 0.0;
        for (int k = 1; k <= big_s; ++k)
            trig += std::pow(std::cos(2.0 * M_PI * k / big_s), r) / (2.0 * big_s);
        detail::track(rep, to_double(half.kappa(r)) - closed);
        detail::track(rep, to_double(half.kappa(r)) - trig);
    }
    rep.pass = rep.max_abs_err < kVerifyTolerance;
    return rep;
}

}  // namespace ncdiag
