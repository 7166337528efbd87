#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncdiag/colored.hpp"
#include "ncdiag/exact.hpp"
#include "ncdiag/partition.hpp"

namespace ncdiag {

enum class CumulantKind { free_kind, classical_kind };

// kappa_1..kappa_R of some variable, free or classical, over an exact or
// floating scalar.
template <typename S>
struct CumulantSequence {
    std::vector<S> values;  // values[r-1] carries kappa_r
    CumulantKind kind = CumulantKind::free_kind;
    std::string origin;

    int order() const { return static_cast<int>(values.size()); }
    const S& kappa(int r) const {
        if (r < 1 || r > order()) throw std::invalid_argument("kappa index out of range");
        return values[r - 1];
    }
};

// Number of admissible color classes of an r-block: half the sum of C(r, p)
// over splits p + q = r with p = q mod s. s = nullopt means infinity, where
// the congruence becomes equality.
inline Int kappa_binomial(int r, const std::optional<int>& s) {
    if (r < 1) throw std::invalid_argument("kappa: r must be >= 1");
    Int acc = 0;
    for (int p = 0; p <= r; ++p) {
        const int diff = p - (r - p);
        const bool ok = s ? ((diff % *s) + *s) % *s == 0 : diff == 0;
        if (ok) acc += binomial(r, p);
    }
    return acc / 2;
}

// Oracle route: enumerate all 2^r colorings of an all-lower r-block, filter
// the block congruence of the category definition, count swap orbits.
inline Int kappa_bruteforce(int r, const std::optional<int>& s) {
    if (r < 1) throw std::invalid_argument("kappa: r must be >= 1");
    if (r > 20) throw std::invalid_argument("kappa_bruteforce: r > 20 rejected");
    const ColoredPartition block(Partition::single_block(0, r), std::string(r, 'b'));
    const auto& legs = block.base().blocks().front();
    long count = 0;
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        std::vector<Color> colors(r);
        for (int i = 0; i < r; ++i)
            colors[i] = (mask >> i) & 1 ? Color::white : Color::black;
        const ColoredPartition cp(block.base(), colors);
        auto [b, w] = signed_color_counts(cp, legs);
        const int diff = b - w;
        const bool ok = s ? ((diff % *s) + *s) % *s == 0 : diff == 0;
        if (ok) ++count;
    }
    return Int(count / 2);  // a coloring never equals its own swap
}

// Root-of-unity route, float only: (1/2s) sum_k (w^k + w^-k)^r.
inline double kappa_roots(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("kappa_roots: bad arguments");
    double acc = 0.0;
    for (int k = 1; k <= s; ++k)
        acc += std::pow(2.0 * std::cos(2.0 * M_PI * k / s), r);
    return acc / (2.0 * s);
}

template <typename S>
CumulantSequence<S> character_free_cumulants(const std::optional<int>& s, int R) {
    CumulantSequence<S> out;
    out.kind = CumulantKind::free_kind;
    out.origin = s ? "character s=" + std::to_string(*s) : "character s=inf";
    out.values.reserve(R);
    for (int r = 1; r <= R; ++r) out.values.push_back(scalar_cast<S>(kappa_binomial(r, s)));
    return out;
}

namespace detail {

// sum over compositions i_1 + ... + i_parts = total of products of moments;
// iteratively convolved power of the moment vector (m[0] = 1).
template <typename S>
std::vector<S> convolution_power(const std::vector<S>& m, int parts, int max_order) {
    std::vector<S> conv(max_order + 1, S(0));
    conv[0] = S(1);
    for (int t = 0; t < parts; ++t) {
        std::vector<S> next(max_order + 1, S(0));
        for (int i = 0; i <= max_order; ++i) {
            if (conv[i] == S(0)) continue;
            for (int j = 0; i + j <= max_order; ++j) next[i + j] += conv[i] * m[j];
        }
        conv.swap(next);
    }
    return conv;
}

}  // namespace detail

// m_1..m_R from free cumulants via the first-block recursion
//   m_n = sum_s kappa_s * sum_{i_1+...+i_s = n-s} m_{i_1} ... m_{i_s}.
template <typename S>
std::vector<S> moments_from_free_cumulants(const CumulantSequence<S>& kappas, int R) {
    if (kappas.kind != CumulantKind::free_kind)
        throw std::invalid_argument("moments_from_free_cumulants: free cumulants required");
    if (R > kappas.order())
        throw std::invalid_argument("moments_from_free_cumulants: insufficient cumulants");
    std::vector<S> m(R + 1, S(0));
    m[0] = S(1);
    for (int n = 1; n <= R; ++n) {
        S acc(0);
        for (int blk = 1; blk <= n; ++blk) {
            const auto conv = detail::convolution_power(m, blk, n - blk);
            acc += kappas.values[blk - 1] * conv[n - blk];
        }
        m[n] = acc;
    }
    return std::vector<S>(m.begin() + 1, m.end());
}

// Literal route: m_r = sum over noncrossing partitions of r points of the
// product of kappa_{block size}. Kept independent of the recursion above.
template <typename S>
std::vector<S> moments_by_nc_enumeration(const CumulantSequence<S>& kappas, int R) {
    if (R > 10) throw std::invalid_argument("moments_by_nc_enumeration: r capped at 10");
    if (R > kappas.order())
        throw std::invalid_argument("moments_by_nc_enumeration: insufficient cumulants");
    std::vector<S> out;
    out.reserve(R);
    for (int r = 1; r <= R; ++r) {
        S acc(0);
        for (const Partition& p : enumerate_noncrossing(0, r)) {
            S prod(1);
            for (const auto& blk : p.blocks())
                prod = prod * kappas.values[blk.size() - 1];
            acc += prod;
        }
        out.push_back(acc);
    }
    return out;
}

// Inverse of the recursion: kappa_n enters m_n linearly with coefficient 1.
template <typename S>
CumulantSequence<S> free_cumulants_from_moments(const std::vector<S>& moments, int R) {
    if (R > static_cast<int>(moments.size()))
        throw std::invalid_argument("free_cumulants_from_moments: insufficient moments");
    std::vector<S> m(R + 1, S(0));
    m[0] = S(1);
    for (int i = 1; i <= R; ++i) m[i] = moments[i - 1];
    CumulantSequence<S> out;
    out.kind = CumulantKind::free_kind;
    out.origin = "inverted from moments";
    out.values.assign(R, S(0));
    for (int n = 1; n <= R; ++n) {
        S acc = m[n];
        for (int blk = 1; blk < n; ++blk) {
            const auto conv = detail::convolution_power(m, blk, n - blk);
            acc -= out.values[blk - 1] * conv[n - blk];
        }
        out.values[n - 1] = acc;
    }
    return out;
}

// Classical analogue over all set partitions:
//   m_n = sum_j C(n-1, j) c_{j+1} m_{n-1-j}.
template <typename S>
std::vector<S> classical_moments_from_cumulants(const CumulantSequence<S>& cumulants, int R) {
    if (R > cumulants.order())
        throw std::invalid_argument("classical_moments_from_cumulants: insufficient cumulants");
    std::vector<S> m(R + 1, S(0));
    m[0] = S(1);
    for (int n = 1; n <= R; ++n) {
        S acc(0);
        for (int j = 0; j <= n - 1; ++j)
            acc += scalar_cast<S>(binomial(n - 1, j)) * cumulants.values[j] * m[n - 1 - j];
        m[n] = acc;
    }
    return std::vector<S>(m.begin() + 1, m.end());
}

// Moments of the main character at parameter s: the free moment formula
// applied to the block-coloring counts. These count the diagrams of
// D_s(0, r), which is asserted in the tests rather than assumed here.
inline std::vector<Int> character_moments(const std::optional<int>& s, int R) {
    const auto kappas = character_free_cumulants<Rat>(s, R);
    const auto m = moments_from_free_cumulants(kappas, R);
    std::vector<Int> out;
    out.reserve(R);
    for (const Rat& v : m) {
        if (!is_integral(v)) throw std::logic_error("character moment is not integral");
        out.push_back(v.get_num());
    }
    return out;
}

}  // namespace ncdiag
