#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "ncdiag/measures.hpp"

namespace ncdiag {

struct EmpiricalSpectrum {
    std::vector<double> eigenvalues;  // pooled over trials
    int matrix_size = 0;
    int trials = 0;
    std::uint64_t seed = 0;
};

namespace detail {

// Box-Muller on top of mt19937_64 keeps the stream independent of the
// standard library's normal_distribution implementation.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v;
        do {
            u = uniform();
        } while (u <= 0.0);
        v = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u));
        spare_ = radius * std::sin(2.0 * M_PI * v);
        have_spare_ = true;
        return radius * std::cos(2.0 * M_PI * v);
    }

private:
    double uniform() {
        return (rng_() >> 11) * (1.0 / 9007199254740992.0);  // 53-bit mantissa
    }
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace detail

// Realize the compound free Poisson law of rho as A = sum_i z_i W_i with
// independent Wisharts W_i = (1/N) X X^T, X of shape N x round(c_i N);
// orthogonal invariance makes the summands asymptotically free. Streams are
// split per trial from the master seed, so results are seed-deterministic.
inline EmpiricalSpectrum sample_spectrum(const DiscreteMeasure& rho, int N, int trials,
                                         std::uint64_t seed) {
    if (!rho.is_real()) throw std::invalid_argument("sample_spectrum: real measure required");
    if (N < 1 || N > 4000) throw std::invalid_argument("sample_spectrum: N out of range");
    if (trials < 0) throw std::invalid_argument("sample_spectrum: negative trials");

    EmpiricalSpectrum spec;
    spec.matrix_size = N;
    spec.trials = trials;
    spec.seed = seed;
    spec.eigenvalues.reserve(static_cast<std::size_t>(N) * trials);

    for (int t = 0; t < trials; ++t) {
        detail::GaussianStream gauss(seed + 0x9e3779b97f4a7c15ULL * (t + 1));
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(N, N);
        for (const auto& atom : rho.atoms()) {
            const int cols = static_cast<int>(std::lround(atom.weight * N));
            if (cols < 1)
                throw std::invalid_argument(
                    "sample_spectrum: N too small to resolve an atom of weight " +
                    std::to_string(atom.weight));
            Eigen::MatrixXd x(N, cols);
            for (int j = 0; j < cols; ++j)
                for (int i = 0; i < N; ++i) x(i, j) = gauss.next();
            a.noalias() += (atom.position.real() / N) * (x * x.transpose());
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
        for (int i = 0; i < N; ++i) spec.eigenvalues.push_back(solver.eigenvalues()(i));
    }
    return spec;
}

inline std::vector<double> empirical_moments(const EmpiricalSpectrum& spec, int R) {
    std::vector<double> out(R, 0.0);
    if (spec.eigenvalues.empty()) return out;
    for (double lambda : spec.eigenvalues) {
        double power = 1.0;
        for (int r = 1; r <= R; ++r) {
            power *= lambda;
            out[r - 1] += power;
        }
    }
    for (double& v : out) v /= static_cast<double>(spec.eigenvalues.size());
    return out;
}

}  // namespace ncdiag
