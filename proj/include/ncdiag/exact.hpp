#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncdiag {

// Arbitrary-precision integers and rationals back every exact computation.
using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
    Int out;
    if (k > n) return 0;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline Int pow_int(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline Rat pow_rat(const Rat& base, unsigned long exp) {
    Rat out = 1;
    Rat b = base;
    unsigned long e = exp;
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

inline Int catalan(unsigned long r) {
    return binomial(2 * r, r) / Int(static_cast<unsigned long>(r + 1));
}

inline double to_double(const Rat& x) { return x.get_d(); }
inline double to_double(const Int& x) { return x.get_d(); }
inline constexpr double to_double(double x) { return x; }

// Exact-to-scalar conversion for code templated over Rat or double.
template <typename S>
S scalar_cast(const Int& v);
template <>
inline Rat scalar_cast<Rat>(const Int& v) {
    return Rat(v);
}
template <>
inline double scalar_cast<double>(const Int& v) {
    return v.get_d();
}

inline bool is_integral(const Rat& x) { return x.get_den() == 1; }

}  // namespace ncdiag
