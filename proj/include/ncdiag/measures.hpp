#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncdiag/cumulants.hpp"
#include "ncdiag/series.hpp"

namespace ncdiag {

// Finitely many weighted atoms on the real line or complex plane. Atoms
// closer than the merge tolerance are combined by weight addition.
class DiscreteMeasure {
public:
    struct Atom {
        std::complex<double> position;
        double weight;
    };

    static constexpr double kMergeTolerance = 1e-12;

    DiscreteMeasure() = default;

    explicit DiscreteMeasure(std::vector<Atom> atoms) {
        for (const auto& a : atoms) add_atom(a.position, a.weight);
    }

    static DiscreteMeasure dirac(double position, double weight = 1.0) {
        DiscreteMeasure m;
        m.add_atom(position, weight);
        return m;
    }

    void add_atom(std::complex<double> position, double weight) {
        if (weight <= 0.0) throw std::invalid_argument("atom weight must be positive");
        for (auto& a : atoms_) {
            if (std::abs(a.position - position) < kMergeTolerance) {
                a.weight += weight;
                return;
            }
        }
        atoms_.push_back({position, weight});
    }

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }

    double total_mass() const {
        double c = 0.0;
        for (const auto& a : atoms_) c += a.weight;
        return c;
    }

    bool is_real() const {
        for (const auto& a : atoms_)
            if (std::abs(a.position.imag()) >= kMergeTolerance) return false;
        return true;
    }

private:
    std::vector<Atom> atoms_;
};

// Uniform measure on the s-th roots of unity.
inline DiscreteMeasure uniform_roots(int s) {
    if (s < 1) throw std::invalid_argument("uniform_roots: s must be >= 1");
    DiscreteMeasure m;
    for (int k = 1; k <= s; ++k)
        m.add_atom(std::polar(1.0, 2.0 * M_PI * k / s), 1.0 / s);
    return m;
}

// Pushforward under z -> Re(z); coincident images merge.
inline DiscreteMeasure project_real(const DiscreteMeasure& m) {
    DiscreteMeasure out;
    for (const auto& a : m.atoms()) out.add_atom(a.position.real(), a.weight);
    return out;
}

// Multiply all weights by t; positions unchanged. This is the meaning of
// rho/2 in the compound laws here: half the mass, not half the positions.
inline DiscreteMeasure scale_measure(const DiscreteMeasure& m, double t) {
    if (t <= 0.0) throw std::invalid_argument("scale_measure: t must be positive");
    DiscreteMeasure out;
    for (const auto& a : m.atoms()) out.add_atom(a.position, a.weight * t);
    return out;
}

// Free cumulants of the compound free Poisson law of rho:
// kappa_r = sum_i c_i z_i^r, from the geometric expansion of
// R(y) = sum_i c_i z_i / (1 - y z_i). Complex atoms are rejected; the free
// complex-supported case has no agreed interpretation.
inline CumulantSequence<double> compound_free_poisson_cumulants(const DiscreteMeasure& rho,
                                                                int R) {
    if (!rho.is_real())
        throw std::invalid_argument("compound_free_poisson_cumulants: complex atoms rejected");
    CumulantSequence<double> out;
    out.kind = CumulantKind::free_kind;
    out.origin = "compound free Poisson";
    out.values.assign(R, 0.0);
    for (int r = 1; r <= R; ++r) {
        double acc = 0.0;
        for (const auto& a : rho.atoms()) acc += a.weight * std::pow(a.position.real(), r);
        out.values[r - 1] = acc;
    }
    return out;
}

// Classical compound Poisson cumulants carry the same numbers, read off the
// log of the Fourier transform exp(sum_i c_i (e^{-iyz_i} - 1)); only the
// moment formulas downstream differ.
inline CumulantSequence<double> compound_classical_poisson_cumulants(const DiscreteMeasure& rho,
                                                                     int R) {
    auto out = compound_free_poisson_cumulants(rho, R);
    out.kind = CumulantKind::classical_kind;
    out.origin = "compound classical Poisson";
    return out;
}

// kappa_r -> a^r kappa_r, the cumulant shadow of x -> a x.
template <typename S>
CumulantSequence<S> dilate_cumulants(const CumulantSequence<S>& kappas, const S& a) {
    CumulantSequence<S> out = kappas;
    S power(1);
    for (int r = 1; r <= out.order(); ++r) {
        power = power * a;
        out.values[r - 1] = out.values[r - 1] * power;
    }
    return out;
}

// Free convolution adds free cumulants coefficientwise.
template <typename S>
CumulantSequence<S> free_convolve(const CumulantSequence<S>& k1, const CumulantSequence<S>& k2) {
    if (k1.kind != CumulantKind::free_kind || k2.kind != CumulantKind::free_kind)
        throw std::invalid_argument("free_convolve: free cumulants required");
    const int R = std::min(k1.order(), k2.order());
    CumulantSequence<S> out;
    out.kind = CumulantKind::free_kind;
    out.origin = k1.origin + " boxplus " + k2.origin;
    out.values.reserve(R);
    for (int r = 1; r <= R; ++r) out.values.push_back(k1.values[r - 1] + k2.values[r - 1]);
    return out;
}

// Laurent coefficients of the Cauchy transform G(xi) = xi^{-1} f(xi^{-1}):
// coefficient j holds the xi^{-j-1} term, i.e. the j-th moment (m_0 = 1).
template <typename S>
FormalSeries<S> cauchy_series(const std::vector<S>& moments, int N) {
    FormalSeries<S> out(N);
    out[0] = S(1);
    for (int j = 1; j <= N && j <= static_cast<int>(moments.size()); ++j)
        out[j] = moments[j - 1];
    return out;
}

}  // namespace ncdiag
