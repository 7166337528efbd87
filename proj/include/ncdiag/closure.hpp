#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncdiag/colored.hpp"

namespace ncdiag {

class closure_limit_error : public std::runtime_error {
public:
    closure_limit_error(const std::string& what, std::size_t frontier)
        : std::runtime_error(what + " (frontier size " + std::to_string(frontier) + ")"),
          frontier_size(frontier) {}
    std::size_t frontier_size;
};

struct ClosureOptions {
    int max_legs = 6;
    // Working diagrams may be larger than the reported ones; the proofs cap
    // oversized tensor products back down. With rotations in the operation
    // set, max_legs + 2 is enough for every capping used here.
    int intermediate_legs = -1;  // defaults to max_legs + 2
    int max_iterations = 64;
    std::size_t max_set_size = 4'000'000;
};

// Breadth-first saturation of the generated category: seeds are the given
// generators plus the empty diagram, identity, cap and cup; the set is closed
// under tensor, (color-compatible) composition, adjoint and the four
// rotations, keeping diagrams with at most intermediate_legs legs. Returns
// the members with at most max_legs legs, canonically ordered.
inline std::vector<ColoredPartition> closure(const std::vector<ColoredPartition>& generators,
                                             const ClosureOptions& opt = {}) {
    const int cap = opt.intermediate_legs > 0 ? opt.intermediate_legs : opt.max_legs + 2;

    std::set<ColoredPartition> seen;
    std::vector<ColoredPartition> all;
    auto add = [&](const ColoredPartition& cp, std::vector<ColoredPartition>& frontier) {
        if (cp.total_legs() > cap) return;
        if (seen.insert(cp).second) {
            all.push_back(cp);
            frontier.push_back(cp);
        }
    };

    std::vector<ColoredPartition> frontier;
    add(ColoredPartition(Partition::empty(), ""), frontier);
    add(colored_identity(), frontier);
    add(colored_cap(), frontier);
    add(colored_cup(), frontier);
    for (const auto& g : generators) {
        if (!g.base().is_noncrossing()) throw std::invalid_argument("closure: crossing generator");
        add(g.canonical(), frontier);
    }

    std::vector<ColoredPartition> next;
    for (int iter = 0; !frontier.empty(); ++iter) {
        if (iter >= opt.max_iterations)
            throw closure_limit_error("closure: iteration limit reached", frontier.size());
        next.clear();
        const std::size_t known = all.size();  // everything discovered so far
        for (const auto& x : frontier) {
            add(x.adjoint(), next);
            if (x.upper_count() > 0) {
                add(x.rotate_left(), next);
                add(x.rotate_right(), next);
            }
            if (x.lower_count() > 0) {
                add(x.unrotate_left(), next);
                add(x.unrotate_right(), next);
            }
            for (std::size_t j = 0; j < known; ++j) {
                const ColoredPartition y = all[j];  // copy: all may reallocate
                if (x.total_legs() + y.total_legs() <= cap) {
                    add(x.tensor(y), next);
                    add(y.tensor(x), next);
                }
                if (x.upper_count() == y.lower_count())
                    if (auto r = compose_colored(x, y)) add(r->first, next);
                if (y.upper_count() == x.lower_count())
                    if (auto r = compose_colored(y, x)) add(r->first, next);
            }
            if (all.size() > opt.max_set_size)
                throw closure_limit_error("closure: set size limit reached", next.size());
        }
        frontier.swap(next);
    }

    std::vector<ColoredPartition> out;
    for (const auto& cp : all)
        if (cp.total_legs() <= opt.max_legs) out.push_back(cp);
    std::sort(out.begin(), out.end());
    return out;
}

// Generators used for the category of the alternating-pattern diagrams: the
// bw pair partitions in their orientations plus the (2,2) one-block bw/bw.
inline std::vector<ColoredPartition> dbar_infinity_generators() {
    return {colored_cap(), colored_cup(), colored_identity(), half_liberation_block()};
}

}  // namespace ncdiag
