#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncdiag/exact.hpp"
#include "ncdiag/partition.hpp"

namespace ncdiag {

enum class Color : std::uint8_t { black = 0, white = 1 };

inline Color flip(Color c) { return c == Color::black ? Color::white : Color::black; }

inline char color_char(Color c) { return c == Color::black ? 'b' : 'w'; }

// Category labels: D_s for s in {1,2,3,...} or s = infinity, and the
// alternating-pattern category written here as DbarInfinity.
class Category {
public:
    enum class Kind { mod_s, bar_infinity };

    static Category d(int s) {
        if (s < 1) throw std::invalid_argument("Category: s must be >= 1");
        return Category(Kind::mod_s, s);
    }
    static Category d_infinity() { return Category(Kind::mod_s, std::nullopt); }
    static Category d_bar_infinity() { return Category(Kind::bar_infinity, std::nullopt); }

    Kind kind() const { return kind_; }
    bool is_mod_s() const { return kind_ == Kind::mod_s; }
    bool is_bar_infinity() const { return kind_ == Kind::bar_infinity; }
    // meaningful only for mod_s labels; nullopt encodes s = infinity
    const std::optional<int>& s() const { return s_; }

    std::string name() const {
        if (kind_ == Kind::bar_infinity) return "Dbar_inf";
        return s_ ? "D_" + std::to_string(*s_) : "D_inf";
    }

    friend bool operator==(const Category&, const Category&) = default;

private:
    Category(Kind kind, std::optional<int> s) : kind_(kind), s_(std::move(s)) {}
    Kind kind_;
    std::optional<int> s_;
};

// A noncrossing partition with a black/white color per leg. Blocks are
// regarded modulo the simultaneous swap of colors inside a block; the
// canonical representative colors each block's minimum leg black.
class ColoredPartition {
public:
    ColoredPartition() = default;

    ColoredPartition(Partition base, std::vector<Color> colors)
        : base_(std::move(base)), colors_(std::move(colors)) {
        if (static_cast<int>(colors_.size()) != base_.total_legs())
            throw std::invalid_argument("color count != leg count");
    }

    ColoredPartition(Partition base, const std::string& colors)
        : ColoredPartition(std::move(base), parse_colors(colors)) {}

    const Partition& base() const { return base_; }
    const std::vector<Color>& colors() const { return colors_; }
    Color color(int leg) const { return colors_[leg - 1]; }
    int upper_count() const { return base_.upper_count(); }
    int lower_count() const { return base_.lower_count(); }
    int total_legs() const { return base_.total_legs(); }

    std::string color_string() const {
        std::string s;
        s.reserve(colors_.size());
        for (Color c : colors_) s += color_char(c);
        return s;
    }

    bool is_canonical() const {
        for (const auto& blk : base_.blocks())
            if (colors_[blk.front() - 1] != Color::black) return false;
        return true;
    }

    ColoredPartition canonical() const {
        std::vector<Color> out = colors_;
        for (const auto& blk : base_.blocks())
            if (out[blk.front() - 1] == Color::white)
                for (int leg : blk) out[leg - 1] = flip(out[leg - 1]);
        return ColoredPartition(base_, std::move(out));
    }

    // Swap the colors of block b only (stays in the same class).
    ColoredPartition block_swapped(std::size_t b) const {
        std::vector<Color> out = colors_;
        for (int leg : base_.blocks()[b]) out[leg - 1] = flip(out[leg - 1]);
        return ColoredPartition(base_, std::move(out));
    }

    ColoredPartition tensor(const ColoredPartition& q) const {
        Partition nb = base_.tensor(q.base_);
        const int ku = upper_count(), kl = lower_count(), qu = q.upper_count();
        std::vector<Color> colors(nb.total_legs());
        for (int leg = 1; leg <= total_legs(); ++leg)
            colors[(leg <= ku ? leg : leg + qu) - 1] = colors_[leg - 1];
        for (int leg = 1; leg <= q.total_legs(); ++leg)
            colors[(leg <= qu ? ku + leg : ku + kl + leg) - 1] = q.colors_[leg - 1];
        return ColoredPartition(std::move(nb), std::move(colors)).canonical();
    }

    ColoredPartition adjoint() const {
        Partition nb = base_.adjoint();
        const int k = upper_count(), l = lower_count();
        std::vector<Color> colors(total_legs());
        for (int leg = 1; leg <= total_legs(); ++leg) {
            const int target = leg <= k ? l + leg : leg - k;
            colors[target - 1] = colors_[leg - 1];
        }
        return ColoredPartition(std::move(nb), std::move(colors)).canonical();
    }

    // All four Frobenius rotations flip the color of the moved leg.
    ColoredPartition rotate_left() const {
        const int k = upper_count();
        return rotated(base_.rotate_left(), 1, [&](int leg) {
            if (leg == 1) return k;
            if (leg <= k) return leg - 1;
            return leg;
        });
    }
    ColoredPartition unrotate_left() const {
        const int k = upper_count();
        return rotated(base_.unrotate_left(), k + 1, [&](int leg) {
            if (leg == k + 1) return 1;
            if (leg <= k) return leg + 1;
            return leg;
        });
    }
    ColoredPartition rotate_right() const {
        const int k = upper_count(), l = lower_count();
        return rotated(base_.rotate_right(), k, [&](int leg) {
            if (leg == k) return k + l;
            if (leg < k) return leg;
            return leg - 1;
        });
    }
    ColoredPartition unrotate_right() const {
        const int k = upper_count(), l = lower_count();
        return rotated(base_.unrotate_right(), k + l, [&](int leg) {
            if (leg == k + l) return k + 1;
            if (leg <= k) return leg;
            return leg + 1;
        });
    }

    std::string encode() const { return base_.encode() + "#" + color_string(); }

    friend bool operator==(const ColoredPartition& a, const ColoredPartition& b) {
        return a.base_ == b.base_ && a.colors_ == b.colors_;
    }
    friend auto operator<=>(const ColoredPartition& a, const ColoredPartition& b) {
        if (auto c = a.base_ <=> b.base_; c != 0) return c;
        return a.colors_ <=> b.colors_;
    }

private:
    template <typename F>
    ColoredPartition rotated(Partition nb, int moved_leg, F&& map_leg) const {
        std::vector<Color> colors(total_legs());
        for (int leg = 1; leg <= total_legs(); ++leg) {
            Color c = colors_[leg - 1];
            if (leg == moved_leg) c = flip(c);
            colors[map_leg(leg) - 1] = c;
        }
        return ColoredPartition(std::move(nb), std::move(colors)).canonical();
    }

    static std::vector<Color> parse_colors(const std::string& s) {
        std::vector<Color> out;
        out.reserve(s.size());
        for (char ch : s) {
            if (ch == 'b')
                out.push_back(Color::black);
            else if (ch == 'w')
                out.push_back(Color::white);
            else
                throw std::invalid_argument("color string must be over {b,w}");
        }
        return out;
    }

    Partition base_;
    std::vector<Color> colors_;
};

// Signed color counts of one block: sign + for upper legs, - for lower legs.
inline std::pair<int, int> signed_color_counts(const ColoredPartition& cp,
                                               const std::vector<int>& block) {
    int b_signed = 0, w_signed = 0;
    const int k = cp.upper_count();
    for (int leg : block) {
        const int sign = leg <= k ? 1 : -1;
        if (cp.color(leg) == Color::black)
            b_signed += sign;
        else
            w_signed += sign;
    }
    return {b_signed, w_signed};
}

namespace detail {

inline bool block_ok_mod_s(const ColoredPartition& cp, const std::vector<int>& block,
                           const std::optional<int>& s) {
    auto [b, w] = signed_color_counts(cp, block);
    if (!s) return b == w;
    const int diff = b - w;
    return ((diff % *s) + *s) % *s == 0;
}

inline bool block_ok_bar_infinity(const ColoredPartition& cp, const std::vector<int>& block) {
    if (block.size() % 2 != 0) return false;
    const int k = cp.upper_count();
    std::optional<Color> upper_start, lower_start;
    std::optional<Color> prev_upper, prev_lower;
    for (int leg : block) {  // legs are sorted: uppers first, each row left to right
        const Color c = cp.color(leg);
        if (leg <= k) {
            if (!upper_start) upper_start = c;
            if (prev_upper && *prev_upper == c) return false;
            prev_upper = c;
        } else {
            if (!lower_start) lower_start = c;
            if (prev_lower && *prev_lower == c) return false;
            prev_lower = c;
        }
    }
    if (upper_start && lower_start && *upper_start != *lower_start) return false;
    return true;
}

}  // namespace detail

// Block-wise membership predicate; invariant under per-block color swaps,
// so any representative of the class may be tested.
inline bool is_member(const ColoredPartition& cp, const Category& cat) {
    if (!cp.base().is_noncrossing()) return false;
    for (const auto& block : cp.base().blocks()) {
        const bool ok = cat.is_bar_infinity()
                            ? detail::block_ok_bar_infinity(cp, block)
                            : detail::block_ok_mod_s(cp, block, cat.s());
        if (!ok) return false;
    }
    return true;
}

// All admissible canonical colorings of one block, as color masks over the
// block's legs (bit i colors block[i]; 0 = black). The minimum leg is pinned
// black, which picks one representative per swap class.
namespace detail {
inline std::vector<std::uint32_t> block_color_classes(const ColoredPartition& proto,
                                                      std::size_t block_index,
                                                      const Category& cat) {
    const auto& block = proto.base().blocks()[block_index];
    const std::size_t sz = block.size();
    std::vector<std::uint32_t> out;
    ColoredPartition work = proto;
    for (std::uint32_t mask = 0; mask < (1u << sz); mask += 2) {  // bit 0 fixed black
        std::vector<Color> colors = work.colors();
        for (std::size_t i = 0; i < sz; ++i)
            colors[block[i] - 1] = (mask >> i) & 1 ? Color::white : Color::black;
        work = ColoredPartition(work.base(), std::move(colors));
        const bool ok = cat.is_bar_infinity() ? block_ok_bar_infinity(work, block)
                                              : block_ok_mod_s(work, block, cat.s());
        if (ok) out.push_back(mask);
    }
    return out;
}
}  // namespace detail

// All canonical members of cat with (k, l) legs, deterministically ordered.
// Generated per noncrossing partition by combining per-block admissible
// coloring classes, never by filtering 2^(k+l) global colorings.
inline std::vector<ColoredPartition> enumerate_category(int k, int l, const Category& cat,
                                                        int max_legs = kDefaultMaxLegs) {
    // balanced or even-block categories live inside NC_even
    const bool even_only = cat.is_bar_infinity() || (cat.is_mod_s() && !cat.s());
    std::vector<ColoredPartition> out;
    for (const Partition& p : enumerate_noncrossing(k, l, even_only, max_legs)) {
        const std::size_t nblocks = p.block_count();
        std::vector<Color> base_colors(p.total_legs(), Color::black);
        ColoredPartition proto(p, base_colors);
        std::vector<std::vector<std::uint32_t>> classes(nblocks);
        bool feasible = true;
        for (std::size_t b = 0; b < nblocks && feasible; ++b) {
            classes[b] = detail::block_color_classes(proto, b, cat);
            feasible = !classes[b].empty();
        }
        if (!feasible) continue;
        std::vector<std::size_t> pick(nblocks, 0);
        for (;;) {
            std::vector<Color> colors(p.total_legs());
            for (std::size_t b = 0; b < nblocks; ++b) {
                const auto& block = p.blocks()[b];
                const std::uint32_t mask = classes[b][pick[b]];
                for (std::size_t i = 0; i < block.size(); ++i)
                    colors[block[i] - 1] = (mask >> i) & 1 ? Color::white : Color::black;
            }
            out.emplace_back(p, std::move(colors));
            std::size_t b = 0;
            while (b < nblocks && ++pick[b] == classes[b].size()) pick[b++] = 0;
            if (b == nblocks) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Int count_category(int k, int l, const Category& cat,
                          int max_legs = kDefaultMaxLegs) {
    return Int(static_cast<unsigned long>(enumerate_category(k, l, cat, max_legs).size()));
}

// Independent counting route for k = 0: all signs are uniform, so the number
// of admissible classes of an r-block depends on r alone and the total is a
// product formula over noncrossing partitions.
inline Int count_category_formula(int r, const Category& cat,
                                  int max_legs = kDefaultMaxLegs) {
    std::vector<Int> classes_by_size(r + 1, 0);
    for (int sz = 1; sz <= r; ++sz) {
        if (cat.is_bar_infinity()) {
            classes_by_size[sz] = sz % 2 == 0 ? 1 : 0;
            continue;
        }
        // count swap orbits of colorings with #black = #white mod s
        Int acc = 0;
        for (int p = 0; p <= sz; ++p) {
            const int diff = p - (sz - p);
            const bool ok = cat.s() ? ((diff % *cat.s()) + *cat.s()) % *cat.s() == 0 : diff == 0;
            if (ok) acc += binomial(sz, p);
        }
        classes_by_size[sz] = acc / 2;
    }
    Int total = 0;
    for (const Partition& p : enumerate_noncrossing(0, r, false, max_legs)) {
        Int prod = 1;
        for (const auto& blk : p.blocks()) prod *= classes_by_size[blk.size()];
        total += prod;
    }
    return total;
}

// Colored vertical composition. Defined only when the two color classes can
// be matched along the glued row by per-block swaps; the matching is a
// parity constraint between p-blocks and q-blocks, inconsistent exactly when
// the corresponding product of tensor maps vanishes.
inline std::optional<std::pair<ColoredPartition, int>> compose_colored(
    const ColoredPartition& q, const ColoredPartition& p) {
    if (p.lower_count() != q.upper_count()) throw std::invalid_argument("compose: arity mismatch");
    const int k = p.upper_count();
    const int l = p.lower_count();

    const std::size_t np = p.base().block_count(), nq = q.base().block_count();
    std::vector<int> p_block_of(p.total_legs() + 1), q_block_of(q.total_legs() + 1);
    for (std::size_t b = 0; b < np; ++b)
        for (int leg : p.base().blocks()[b]) p_block_of[leg] = static_cast<int>(b);
    for (std::size_t b = 0; b < nq; ++b)
        for (int leg : q.base().blocks()[b]) q_block_of[leg] = static_cast<int>(b);

    // union-find with parity over p-blocks (0..np-1) and q-blocks (np..np+nq-1)
    std::vector<int> parent(np + nq);
    std::vector<std::uint8_t> rel(np + nq, 0);  // parity relative to parent
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::pair<int, std::uint8_t>(int)> find = [&](int x) {
        if (parent[x] == x) return std::make_pair(x, std::uint8_t{0});
        auto [root, par] = find(parent[x]);
        parent[x] = root;
        rel[x] ^= par;
        return std::make_pair(root, rel[x]);
    };
    bool consistent = true;
    auto unite = [&](int a, int b, std::uint8_t parity) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa ^ pb) != parity) consistent = false;
            return;
        }
        parent[ra] = rb;
        rel[ra] = pa ^ pb ^ parity;
    };
    for (int t = 1; t <= l; ++t) {
        const int p_leg = k + t;
        const int q_leg = t;
        // glued colors must agree after flips: flip_p xor flip_q = (colors differ)
        const std::uint8_t need = p.color(p_leg) != q.color(q_leg) ? 1 : 0;
        unite(p_block_of[p_leg], static_cast<int>(np) + q_block_of[q_leg], need);
    }
    if (!consistent) return std::nullopt;

    std::vector<std::uint8_t> flip_p(np), flip_q(nq);
    for (std::size_t b = 0; b < np; ++b) flip_p[b] = find(static_cast<int>(b)).second;
    for (std::size_t b = 0; b < nq; ++b) flip_q[b] = find(static_cast<int>(np + b)).second;

    auto [base, circles] = compose(q.base(), p.base());
    std::vector<Color> colors(base.total_legs());
    for (int leg = 1; leg <= k; ++leg) {
        Color c = p.color(leg);
        if (flip_p[p_block_of[leg]]) c = flip(c);
        colors[leg - 1] = c;
    }
    for (int j = 1; j <= q.lower_count(); ++j) {
        const int q_leg = l + j;
        Color c = q.color(q_leg);
        if (flip_q[q_block_of[q_leg]]) c = flip(c);
        colors[k + j - 1] = c;
    }
    return std::make_pair(ColoredPartition(std::move(base), std::move(colors)).canonical(),
                          circles);
}

// Common small diagrams.
inline ColoredPartition colored_cap() { return ColoredPartition(Partition::cap(), "bw"); }
inline ColoredPartition colored_cup() { return ColoredPartition(Partition::cup(), "bw"); }
inline ColoredPartition colored_identity() { return ColoredPartition(Partition::identity(1), "bb"); }

// The 1-block partition with s lower legs, all black.
inline ColoredPartition one_block_all_black(int s) {
    return ColoredPartition(Partition::single_block(0, s), std::string(s, 'b'));
}

// (2,2) one-block with rows colored bw / bw.
inline ColoredPartition half_liberation_block() {
    return ColoredPartition(Partition::single_block(2, 2), "bwbw");
}

// (0,4) one-block colored bbww.
inline ColoredPartition four_block_bbww() {
    return ColoredPartition(Partition::single_block(0, 4), "bbww");
}

}  // namespace ncdiag
