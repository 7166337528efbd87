#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncdiag {

// Hard default on k+l; enumeration beyond this is Catalan-infeasible anyway.
inline constexpr int kDefaultMaxLegs = 16;

class bound_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A set partition of k upper and l lower legs. Upper legs are numbered
// 1..k left to right, lower legs k+1..k+l left to right. Blocks are kept
// canonical: legs sorted within each block, blocks sorted by minimum leg.
class Partition {
public:
    Partition() = default;

    Partition(int upper, int lower, std::vector<std::vector<int>> blocks)
        : upper_(upper), lower_(lower), blocks_(std::move(blocks)) {
        if (upper_ < 0 || lower_ < 0) throw std::invalid_argument("negative leg count");
        canonicalize_blocks();
        validate();
    }

    static Partition empty() { return Partition(0, 0, {}); }

    static Partition identity(int m) {
        std::vector<std::vector<int>> blocks;
        blocks.reserve(m);
        for (int i = 1; i <= m; ++i) blocks.push_back({i, m + i});
        return Partition(m, m, std::move(blocks));
    }

    // One block covering all k+l legs.
    static Partition single_block(int upper, int lower) {
        std::vector<int> all(upper + lower);
        std::iota(all.begin(), all.end(), 1);
        return Partition(upper, lower, {all});
    }

    static Partition cap() { return single_block(0, 2); }
    static Partition cup() { return single_block(2, 0); }

    int upper_count() const { return upper_; }
    int lower_count() const { return lower_; }
    int total_legs() const { return upper_ + lower_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }

    int block_index_of(int leg) const {
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            for (int x : blocks_[b])
                if (x == leg) return static_cast<int>(b);
        throw std::invalid_argument("leg out of range");
    }

    // Circular reading order: upper 1..k left to right, then lower legs
    // right to left. Index of a leg along that circle.
    int circular_position(int leg) const {
        if (leg <= upper_) return leg - 1;
        return upper_ + lower_ - (leg - upper_);
    }

    bool is_noncrossing() const {
        const int m = total_legs();
        if (m == 0) return true;
        std::vector<int> block_at(m, -1);
        std::vector<int> remaining(blocks_.size(), 0);
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            remaining[b] = static_cast<int>(blocks_[b].size());
            for (int leg : blocks_[b]) block_at[circular_position(leg)] = static_cast<int>(b);
        }
        // Scan the circle once with a stack of open blocks. A block seen
        // while open but not on top witnesses an interleave.
        std::vector<int> stack;
        std::vector<char> open(blocks_.size(), 0), closed(blocks_.size(), 0);
        for (int pos = 0; pos < m; ++pos) {
            const int b = block_at[pos];
            if (closed[b]) return false;
            if (!open[b]) {
                stack.push_back(b);
                open[b] = 1;
            } else if (stack.back() != b) {
                return false;
            }
            if (--remaining[b] == 0) {
                stack.pop_back();
                open[b] = 0;
                closed[b] = 1;
            }
        }
        return true;
    }

    bool has_even_blocks() const {
        for (const auto& b : blocks_)
            if (b.size() % 2 != 0) return false;
        return true;
    }

    // Horizontal concatenation: q placed to the right of *this.
    Partition tensor(const Partition& q) const {
        const int ku = upper_, kl = lower_;
        const int qu = q.upper_, ql = q.lower_;
        auto renumber_p = [&](int leg) { return leg <= ku ? leg : leg + qu; };
        auto renumber_q = [&](int leg) {
            return leg <= qu ? ku + leg : ku + kl + leg;
        };
        std::vector<std::vector<int>> blocks;
        blocks.reserve(blocks_.size() + q.blocks_.size());
        for (const auto& blk : blocks_) {
            std::vector<int> nb;
            nb.reserve(blk.size());
            for (int leg : blk) nb.push_back(renumber_p(leg));
            blocks.push_back(std::move(nb));
        }
        for (const auto& blk : q.blocks_) {
            std::vector<int> nb;
            nb.reserve(blk.size());
            for (int leg : blk) nb.push_back(renumber_q(leg));
            blocks.push_back(std::move(nb));
        }
        return Partition(ku + qu, kl + ql, std::move(blocks));
    }

    // Upper and lower rows exchanged, each keeping left-to-right order.
    Partition adjoint() const {
        std::vector<std::vector<int>> blocks;
        blocks.reserve(blocks_.size());
        for (const auto& blk : blocks_) {
            std::vector<int> nb;
            nb.reserve(blk.size());
            for (int leg : blk)
                nb.push_back(leg <= upper_ ? lower_ + leg : leg - upper_);
            blocks.push_back(std::move(nb));
        }
        return Partition(lower_, upper_, std::move(blocks));
    }

    // Leftmost upper leg becomes leftmost lower leg.
    Partition rotate_left() const {
        if (upper_ == 0) throw std::invalid_argument("rotate_left: no upper legs");
        return relabeled(upper_ - 1, lower_ + 1, [&](int leg) {
            if (leg == 1) return upper_;        // moved leg: new lower position 1
            if (leg <= upper_) return leg - 1;  // remaining upper legs shift left
            return leg;                         // lower legs keep their numbers
        });
    }

    // Inverse of rotate_left: leftmost lower leg becomes leftmost upper leg.
    Partition unrotate_left() const {
        if (lower_ == 0) throw std::invalid_argument("unrotate_left: no lower legs");
        return relabeled(upper_ + 1, lower_ - 1, [&](int leg) {
            if (leg == upper_ + 1) return 1;
            if (leg <= upper_) return leg + 1;
            return leg;
        });
    }

    // Rightmost upper leg becomes rightmost lower leg.
    Partition rotate_right() const {
        if (upper_ == 0) throw std::invalid_argument("rotate_right: no upper legs");
        return relabeled(upper_ - 1, lower_ + 1, [&](int leg) {
            if (leg == upper_) return upper_ + lower_;  // new rightmost lower
            if (leg < upper_) return leg;
            return leg - 1;
        });
    }

    // Rightmost lower leg becomes rightmost upper leg.
    Partition unrotate_right() const {
        if (lower_ == 0) throw std::invalid_argument("unrotate_right: no lower legs");
        return relabeled(upper_ + 1, lower_ - 1, [&](int leg) {
            if (leg == upper_ + lower_) return upper_ + 1;
            if (leg <= upper_) return leg;
            return leg + 1;
        });
    }

    std::vector<std::size_t> block_size_multiset() const {
        std::vector<std::size_t> sizes;
        sizes.reserve(blocks_.size());
        for (const auto& b : blocks_) sizes.push_back(b.size());
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    }

    std::string encode() const {
        std::string out = std::to_string(upper_) + "," + std::to_string(lower_);
        for (const auto& blk : blocks_) {
            out += "|";
            for (std::size_t i = 0; i < blk.size(); ++i) {
                if (i) out += ".";
                out += std::to_string(blk[i]);
            }
        }
        return out;
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.upper_ == b.upper_ && a.lower_ == b.lower_ && a.blocks_ == b.blocks_;
    }
    friend auto operator<=>(const Partition& a, const Partition& b) {
        if (auto c = a.upper_ <=> b.upper_; c != 0) return c;
        if (auto c = a.lower_ <=> b.lower_; c != 0) return c;
        return a.blocks_ <=> b.blocks_;
    }

private:
    template <typename F>
    Partition relabeled(int new_upper, int new_lower, F&& map_leg) const {
        std::vector<std::vector<int>> blocks;
        blocks.reserve(blocks_.size());
        for (const auto& blk : blocks_) {
            std::vector<int> nb;
            nb.reserve(blk.size());
            for (int leg : blk) nb.push_back(map_leg(leg));
            blocks.push_back(std::move(nb));
        }
        return Partition(new_upper, new_lower, std::move(blocks));
    }

    void canonicalize_blocks() {
        for (auto& blk : blocks_) std::sort(blk.begin(), blk.end());
        std::sort(blocks_.begin(), blocks_.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
    }

    void validate() const {
        const int m = total_legs();
        std::vector<char> seen(m + 1, 0);
        int covered = 0;
        for (const auto& blk : blocks_) {
            if (blk.empty()) throw std::invalid_argument("empty block");
            for (int leg : blk) {
                if (leg < 1 || leg > m) throw std::invalid_argument("leg out of range");
                if (seen[leg]) throw std::invalid_argument("blocks not disjoint");
                seen[leg] = 1;
                ++covered;
            }
        }
        if (covered != m) throw std::invalid_argument("blocks do not cover all legs");
    }

    int upper_ = 0;
    int lower_ = 0;
    std::vector<std::vector<int>> blocks_;
};

namespace detail {

// Noncrossing partitions of the contiguous position range [lo, hi] (0-based),
// emitted as block lists of positions. The block of lo is grown left to
// right; the gaps between consecutive chosen positions are independent.
inline void nc_segment(int lo, int hi, std::vector<std::vector<int>>& acc,
                       const std::function<void()>& emit) {
    if (lo > hi) {
        emit();
        return;
    }
    std::vector<int> block{lo};
    // grow(next, prev): choose the next block element from [next, hi];
    // prev is the last chosen one.
    std::function<void(int, int)> grow = [&](int next, int prev) {
        // close the block here: the tail [prev+1, hi] is partitioned freely
        acc.push_back(block);
        nc_segment(prev + 1, hi, acc, emit);
        acc.pop_back();
        for (int j = next; j <= hi; ++j) {
            block.push_back(j);
            // positions strictly between prev and j form an inner segment
            nc_segment(prev + 1, j - 1, acc, [&] { grow(j + 1, j); });
            block.pop_back();
        }
    };
    grow(lo + 1, lo);
}

}  // namespace detail

// All noncrossing partitions of (k, l) legs in deterministic canonical order.
inline std::vector<Partition> enumerate_noncrossing(int k, int l, bool even_only = false,
                                                    int max_legs = kDefaultMaxLegs) {
    if (k < 0 || l < 0) throw std::invalid_argument("negative leg count");
    const int m = k + l;
    if (m > max_legs)
        throw bound_exceeded("enumerate_noncrossing: k+l = " + std::to_string(m) +
                             " exceeds bound " + std::to_string(max_legs));
    std::vector<Partition> out;
    std::vector<std::vector<int>> acc;
    auto emit = [&] {
        if (even_only)
            for (const auto& blk : acc)
                if (blk.size() % 2 != 0) return;
        std::vector<std::vector<int>> blocks;
        blocks.reserve(acc.size());
        for (const auto& blk : acc) {
            std::vector<int> legs;
            legs.reserve(blk.size());
            for (int pos : blk)
                legs.push_back(pos < k ? pos + 1 : 2 * k + l - pos);
            blocks.push_back(std::move(legs));
        }
        out.emplace_back(k, l, std::move(blocks));
    };
    detail::nc_segment(0, m - 1, acc, emit);
    std::sort(out.begin(), out.end());
    return out;
}

// Vertical composition: glue p's lower row to q's upper row. Returns the
// induced partition on p's upper and q's lower legs together with the
// number of closed middle components (circles).
inline std::pair<Partition, int> compose(const Partition& q, const Partition& p) {
    if (p.lower_count() != q.upper_count())
        throw std::invalid_argument("compose: arity mismatch");
    const int k = p.upper_count();
    const int l = p.lower_count();
    const int m = q.lower_count();
    // union-find nodes: 0..k-1 p-upper, k..k+l-1 middle, k+l.. q-lower
    const int n = k + l + m;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    auto p_node = [&](int leg) { return leg - 1; };      // p legs occupy 0..k+l-1
    auto q_node = [&](int leg) { return k + leg - 1; };  // q legs occupy k..n-1
    for (const auto& blk : p.blocks())
        for (std::size_t i = 1; i < blk.size(); ++i) unite(p_node(blk[i - 1]), p_node(blk[i]));
    for (const auto& blk : q.blocks())
        for (std::size_t i = 1; i < blk.size(); ++i) unite(q_node(blk[i - 1]), q_node(blk[i]));

    std::vector<std::vector<int>> result_blocks;
    std::vector<int> root_to_block(n, -1);
    auto outer_leg = [&](int node) {
        // new numbering: p-upper keep 1..k, q-lower become k+1..k+m
        return node < k ? node + 1 : node - (k + l) + k + 1;
    };
    for (int node = 0; node < n; ++node) {
        if (node >= k && node < k + l) continue;  // middle
        const int r = find(node);
        if (root_to_block[r] < 0) {
            root_to_block[r] = static_cast<int>(result_blocks.size());
            result_blocks.emplace_back();
        }
        result_blocks[root_to_block[r]].push_back(outer_leg(node));
    }
    int circles = 0;
    std::vector<char> counted(n, 0);
    for (int node = k; node < k + l; ++node) {
        const int r = find(node);
        if (root_to_block[r] < 0 && !counted[r]) {
            counted[r] = 1;
            ++circles;
        }
    }
    return {Partition(k, m, std::move(result_blocks)), circles};
}

}  // namespace ncdiag
