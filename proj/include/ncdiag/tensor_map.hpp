#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncdiag/colored.hpp"
#include "ncdiag/exact.hpp"

namespace ncdiag {

// One tensor-leg index: a letter from the 2n-element set {(i,a)}, encoded as
// 2*i + a with i in [0, n) and a in {0, 1}. The bar flips a.
struct IndexLetter {
    int i = 0;  // 0-based
    int a = 0;  // 0 or 1

    int encoded() const { return 2 * i + a; }
    IndexLetter bar() const { return {i, 1 - a}; }
    static IndexLetter decode(int code) { return {code / 2, code % 2}; }
};

inline int bar_letter(int code) { return code ^ 1; }

// A sparse integer linear map between tensor powers of the 2n-dimensional
// index space, keyed by (input word, output word). Words store raw letter
// codes; no explicit zero entries are kept.
class TensorMap {
public:
    using Word = std::string;
    using Key = std::pair<Word, Word>;
    using Entries = std::map<Key, Int>;

    TensorMap(int n, int in_arity, int out_arity)
        : n_(n), in_(in_arity), out_(out_arity) {
        if (n < 1) throw std::invalid_argument("TensorMap: n must be >= 1");
    }

    int n() const { return n_; }
    int in_arity() const { return in_; }
    int out_arity() const { return out_; }
    const Entries& entries() const { return entries_; }
    std::size_t entry_count() const { return entries_.size(); }

    void add(const Word& in, const Word& out, const Int& coeff) {
        if (static_cast<int>(in.size()) != in_ || static_cast<int>(out.size()) != out_)
            throw std::invalid_argument("TensorMap: word arity mismatch");
        auto it = entries_.find({in, out});
        if (it == entries_.end()) {
            if (coeff != 0) entries_.emplace(Key{in, out}, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) entries_.erase(it);
        }
    }

    Int coeff(const Word& in, const Word& out) const {
        auto it = entries_.find({in, out});
        return it == entries_.end() ? Int(0) : it->second;
    }

    bool is_zero() const { return entries_.empty(); }

    TensorMap scaled(const Int& c) const {
        TensorMap out(n_, in_, out_);
        if (c == 0) return out;
        for (const auto& [key, v] : entries_) out.entries_.emplace(key, v * c);
        return out;
    }

    friend bool operator==(const TensorMap& a, const TensorMap& b) {
        return a.n_ == b.n_ && a.in_ == b.in_ && a.out_ == b.out_ && a.entries_ == b.entries_;
    }

private:
    int n_;
    int in_;
    int out_;
    Entries entries_;
};

// The map of a colored diagram: entries are 1 exactly on the index
// assignments where each block carries one letter I on its black legs and
// the barred letter on its white legs. One free letter per block, so the
// map has (2n)^(#blocks) unit entries.
inline TensorMap build_t(const ColoredPartition& cp, int n) {
    const int k = cp.upper_count(), l = cp.lower_count();
    TensorMap out(n, k, l);
    const auto& blocks = cp.base().blocks();
    const std::size_t nblocks = blocks.size();
    std::string in(k, '\0'), outw(l, '\0');
    std::vector<int> choice(nblocks, 0);
    const int letters = 2 * n;
    for (;;) {
        for (std::size_t b = 0; b < nblocks; ++b) {
            const int code = choice[b];
            for (int leg : blocks[b]) {
                const int c = cp.color(leg) == Color::black ? code : bar_letter(code);
                if (leg <= k)
                    in[leg - 1] = static_cast<char>(c);
                else
                    outw[leg - k - 1] = static_cast<char>(c);
            }
        }
        out.add(in, outw, 1);
        std::size_t b = 0;
        while (b < nblocks && ++choice[b] == letters) choice[b++] = 0;
        if (b == nblocks) break;
    }
    return out;
}

inline TensorMap map_tensor(const TensorMap& t1, const TensorMap& t2) {
    if (t1.n() != t2.n()) throw std::invalid_argument("map_tensor: dimension mismatch");
    TensorMap out(t1.n(), t1.in_arity() + t2.in_arity(), t1.out_arity() + t2.out_arity());
    for (const auto& [k1, v1] : t1.entries())
        for (const auto& [k2, v2] : t2.entries())
            out.add(k1.first + k2.first, k1.second + k2.second, v1 * v2);
    return out;
}

// t2 after t1 (t1 maps k -> l, t2 maps l -> m).
inline TensorMap map_compose(const TensorMap& t2, const TensorMap& t1) {
    if (t1.n() != t2.n()) throw std::invalid_argument("map_compose: dimension mismatch");
    if (t1.out_arity() != t2.in_arity())
        throw std::invalid_argument("map_compose: arity mismatch");
    // group t1 by output word
    std::map<TensorMap::Word, std::vector<std::pair<TensorMap::Word, Int>>> by_mid;
    for (const auto& [key, v] : t1.entries()) by_mid[key.second].emplace_back(key.first, v);
    TensorMap out(t1.n(), t1.in_arity(), t2.out_arity());
    for (const auto& [key, v2] : t2.entries()) {
        auto it = by_mid.find(key.first);
        if (it == by_mid.end()) continue;
        for (const auto& [in, v1] : it->second) out.add(in, key.second, v1 * v2);
    }
    return out;
}

inline TensorMap map_adjoint(const TensorMap& t) {
    TensorMap out(t.n(), t.out_arity(), t.in_arity());
    for (const auto& [key, v] : t.entries()) out.add(key.second, key.first, v);
    return out;
}

// Full bilinear contraction <t1, t2>: real integer coefficients, so no
// conjugation. Sorted-key merge over the two sparse entry maps.
inline Int map_inner(const TensorMap& t1, const TensorMap& t2) {
    if (t1.in_arity() != t2.in_arity() || t1.out_arity() != t2.out_arity() || t1.n() != t2.n())
        throw std::invalid_argument("map_inner: shape mismatch");
    Int acc = 0;
    auto a = t1.entries().begin(), ae = t1.entries().end();
    auto b = t2.entries().begin(), be = t2.entries().end();
    while (a != ae && b != be) {
        if (a->first < b->first)
            ++a;
        else if (b->first < a->first)
            ++b;
        else {
            acc += a->second * b->second;
            ++a;
            ++b;
        }
    }
    return acc;
}

struct FunctorReport {
    bool pass = true;
    std::string detail;
};

// Checks the two functor laws on a pair of diagrams: the tensor law always,
// and for arity-composable pairs the composition law with the (2n)^circles
// factor; pairs whose colors cannot be matched must multiply to zero.
inline FunctorReport functor_check(const ColoredPartition& cp1, const ColoredPartition& cp2,
                                   int n) {
    FunctorReport rep;
    const TensorMap t1 = build_t(cp1, n);
    const TensorMap t2 = build_t(cp2, n);
    if (!(build_t(cp1.tensor(cp2), n) == map_tensor(t1, t2))) {
        rep.pass = false;
        rep.detail = "tensor law failed for " + cp1.encode() + " x " + cp2.encode();
        return rep;
    }
    if (cp1.lower_count() == cp2.upper_count()) {
        const TensorMap product = map_compose(t2, t1);
        if (auto glued = compose_colored(cp2, cp1)) {
            const Int factor = pow_int(Int(2 * n), glued->second);
            if (!(product == build_t(glued->first, n).scaled(factor))) {
                rep.pass = false;
                rep.detail = "circle law failed for " + cp2.encode() + " o " + cp1.encode();
            }
        } else if (!product.is_zero()) {
            rep.pass = false;
            rep.detail = "color-incompatible pair has nonzero product: " + cp2.encode() +
                         " o " + cp1.encode();
        }
    }
    return rep;
}

using IntMatrix = std::vector<std::vector<Int>>;

// Gram matrix of pairwise contractions; all diagrams must share (k, l).
inline IntMatrix gram_matrix(const std::vector<ColoredPartition>& diagrams, int n) {
    for (const auto& d : diagrams)
        if (d.upper_count() != diagrams.front().upper_count() ||
            d.lower_count() != diagrams.front().lower_count())
            throw std::invalid_argument("gram_matrix: mixed arities");
    std::vector<TensorMap> maps;
    maps.reserve(diagrams.size());
    for (const auto& d : diagrams) maps.push_back(build_t(d, n));
    const std::size_t m = diagrams.size();
    IntMatrix g(m, std::vector<Int>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            Int v = map_inner(maps[i], maps[j]);
            g[i][j] = v;
            g[j][i] = v;
        }
    return g;
}

struct EliminationResult {
    int rank = 0;
    Int det = 1;  // empty-product convention; 0 when rank < size
};

// Fraction-free Bareiss elimination with full pivoting; divisions are exact,
// everything stays in integers.
inline EliminationResult fraction_free_eliminate(IntMatrix m) {
    EliminationResult res;
    const std::size_t nrows = m.size();
    if (nrows == 0) return res;
    const std::size_t ncols = m[0].size();
    Int prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t step = 0; r < nrows && step < ncols; ++step) {
        // find a pivot anywhere in the remaining submatrix
        std::size_t pi = nrows, pj = ncols;
        for (std::size_t i = r; i < nrows && pi == nrows; ++i)
            for (std::size_t j = r; j < ncols; ++j)
                if (m[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == nrows) break;
        if (pi != r) {
            std::swap(m[pi], m[r]);
            sign = -sign;
        }
        if (pj != r) {
            for (auto& row : m) std::swap(row[pj], row[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = r + 1; j < ncols; ++j)
                m[i][j] = (m[r][r] * m[i][j] - m[i][r] * m[r][j]) / prev;
            m[i][r] = 0;
        }
        prev = m[r][r];
        ++r;
    }
    res.rank = static_cast<int>(r);
    if (nrows == ncols && r == nrows)
        res.det = sign * m[nrows - 1][nrows - 1];
    else if (nrows == ncols)
        res.det = 0;
    return res;
}

inline int gram_rank(const std::vector<ColoredPartition>& diagrams, int n) {
    return fraction_free_eliminate(gram_matrix(diagrams, n)).rank;
}

inline Int gram_det(const std::vector<ColoredPartition>& diagrams, int n) {
    return fraction_free_eliminate(gram_matrix(diagrams, n)).det;
}

}  // namespace ncdiag
