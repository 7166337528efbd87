#pragma once

#include <stdexcept>
#include <vector>

namespace ncdiag {

// Truncated power series over an exact or floating scalar. Arithmetic never
// reads or writes coefficients beyond the truncation order.
template <typename S>
class FormalSeries {
public:
    explicit FormalSeries(int order) : coeff_(order + 1, S(0)) {}
    FormalSeries(std::vector<S> coeff) : coeff_(std::move(coeff)) {
        if (coeff_.empty()) throw std::invalid_argument("FormalSeries: empty coefficients");
    }

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    const S& operator[](int i) const { return coeff_[i]; }
    S& operator[](int i) { return coeff_[i]; }
    const std::vector<S>& coefficients() const { return coeff_; }

    FormalSeries truncated(int order) const {
        FormalSeries out(order);
        for (int i = 0; i <= order && i <= this->order(); ++i) out[i] = coeff_[i];
        return out;
    }

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
        FormalSeries out(std::min(a.order(), b.order()));
        for (int i = 0; i <= out.order(); ++i) out[i] = a[i] + b[i];
        return out;
    }
    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
        FormalSeries out(std::min(a.order(), b.order()));
        for (int i = 0; i <= out.order(); ++i) out[i] = a[i] - b[i];
        return out;
    }
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
        FormalSeries out(std::min(a.order(), b.order()));
        for (int i = 0; i <= out.order(); ++i)
            for (int j = 0; i + j <= out.order(); ++j) out[i + j] += a[i] * b[j];
        return out;
    }
    FormalSeries scaled(const S& c) const {
        FormalSeries out(order());
        for (int i = 0; i <= order(); ++i) out[i] = coeff_[i] * c;
        return out;
    }

    // Substitution a(b(y)); requires b(0) = 0 so truncation is stable.
    FormalSeries compose(const FormalSeries& b) const {
        if (!(b[0] == S(0)))
            throw std::invalid_argument("FormalSeries::compose: inner constant term nonzero");
        const int n = std::min(order(), b.order());
        FormalSeries out(n);
        out[0] = coeff_[0];
        FormalSeries power = FormalSeries(n);
        power[0] = S(1);
        for (int i = 1; i <= n; ++i) {
            power = power * b.truncated(n);
            for (int j = 0; j <= n; ++j) out[j] += coeff_[i] * power[j];
        }
        return out;
    }

private:
    std::vector<S> coeff_;
};

}  // namespace ncdiag
