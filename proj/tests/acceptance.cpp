// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Each criterion carries its runtime budget; exceeding it is a failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ncdiag/ncdiag.hpp"

using namespace ncdiag;

namespace {

struct Criterion {
    int id;
    std::string label;
    double budget_seconds;
    bool pass = false;
    double elapsed = 0.0;
    std::string note;
};

bool g_all_pass = true;

template <typename F>
void run(std::vector<Criterion>& out, int id, const std::string& label, double budget, F&& body) {
    Criterion c{id, label, budget};
    const auto start = std::chrono::steady_clock::now();
    try {
        c.pass = body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.note = std::string("exception: ") + e.what();
    }
    c.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.elapsed > c.budget_seconds) {
        c.pass = false;
        c.note += " [over budget]";
    }
    g_all_pass = g_all_pass && c.pass;
    std::printf("%s criterion %2d: %-38s (%7.2fs / %gs)%s%s\n", c.pass ? "PASS" : "FAIL", c.id,
                c.label.c_str(), c.elapsed, c.budget_seconds, c.note.empty() ? "" : " -- ",
                c.note.c_str());
    std::fflush(stdout);
    out.push_back(c);
}

bool criterion1(Criterion&) {
    const std::vector<int> svals{1, 2, 3, 5, 6, 7, 8, 12};
    for (int s : svals)
        for (int r = 1; r <= 14; ++r) {
            if (kappa_binomial(r, s) != kappa_bruteforce(r, s)) return false;
            if (std::abs(kappa_roots(r, s) - to_double(kappa_binomial(r, s))) >= 1e-9)
                return false;
        }
    return true;
}

bool criterion2(Criterion&) {
    const std::vector<std::optional<int>> svals{3, 5, 7, std::nullopt};
    for (const auto& s : svals) {
        const Category cat = s ? Category::d(*s) : Category::d_infinity();
        const auto moments = character_moments(s, 10);
        for (int r = 1; r <= 10; ++r)
            if (count_category(0, r, cat) != moments[r - 1]) return false;
    }
    return true;
}

bool criterion3(Criterion& c) {
    for (int s : {3, 5, 6, 7, 8, 10}) {
        const auto rep = verify_thm52(s, 12);
        if (!rep.pass || rep.max_abs_err >= 1e-9) {
            c.note = "thm52 failed at s=" + std::to_string(s);
            return false;
        }
    }
    const auto kappas = character_free_cumulants<Rat>(5, 5);
    const Rat expected[] = {Rat(0), Rat(1), Rat(0), Rat(3), Rat(1)};
    for (int r = 1; r <= 5; ++r)
        if (kappas.kappa(r) != expected[r - 1]) return false;
    const auto m = moments_from_free_cumulants(kappas, 4);
    return m[3] == 5;
}

bool criterion4(Criterion&) {
    for (int s : {5, 6}) {
        const auto rep = verify_prop53(s, 12);
        if (!rep.pass || rep.max_abs_err >= 1e-9) return false;
    }
    return true;
}

bool criterion5(Criterion&) {
    const auto rep = verify_thm65(12);
    if (!rep.pass || rep.max_abs_err >= 1e-9) return false;
    for (int r = 1; r <= 12; ++r) {
        const Int want = r % 2 == 0 ? binomial(r, r / 2) / 2 : Int(0);
        if (kappa_binomial(r, std::nullopt) != want) return false;
    }
    return true;
}

bool criterion6(Criterion& c) {
    std::vector<ColoredPartition> all;
    for (int k = 0; k <= 6; ++k)
        for (int l = 0; k + l <= 6; ++l)
            for (const auto& cp : enumerate_category(k, l, Category::d(5))) all.push_back(cp);
    long pairs = 0;
    for (const auto& a : all)
        for (const auto& b : all) {
            if (a.lower_count() != b.upper_count()) continue;
            ++pairs;
            if (!functor_check(a, b, 2).pass) {
                c.note = "failed on " + a.encode() + " / " + b.encode();
                return false;
            }
        }
    c.note = std::to_string(pairs) + " composable pairs";
    // the cup-after-cap circle gives the scalar 2n
    const auto product = map_compose(build_t(colored_cup(), 2), build_t(colored_cap(), 2));
    return product.coeff("", "") == 4;
}

bool criterion7(Criterion& c) {
    for (int r = 0; r <= 5; ++r)
        for (const auto& cat : {Category::d(3), Category::d(5), Category::d_infinity()}) {
            const auto diagrams = enumerate_category(0, r, cat);
            if (gram_rank(diagrams, 2) != static_cast<int>(diagrams.size())) {
                c.note = "rank drop at r=" + std::to_string(r) + " in " + cat.name();
                return false;
            }
        }
    const auto d1 = enumerate_category(0, 2, Category::d(1));
    return gram_det(d1, 1) == 0 && gram_det(d1, 2) == 128;
}

bool closure_matches(const std::vector<ColoredPartition>& generators, const Category& cat,
                     int max_legs, std::string& note) {
    ClosureOptions opt;
    opt.max_legs = max_legs;
    const auto generated = closure(generators, opt);
    std::set<ColoredPartition> got(generated.begin(), generated.end());
    std::set<ColoredPartition> want;
    for (int k = 0; k <= max_legs; ++k)
        for (int l = 0; k + l <= max_legs; ++l)
            for (const auto& cp : enumerate_category(k, l, cat)) want.insert(cp);
    if (got == want) return true;
    note = cat.name() + ": generated " + std::to_string(got.size()) + ", enumerated " +
           std::to_string(want.size());
    return false;
}

bool criterion8(Criterion& c) {
    auto gens5 = dbar_infinity_generators();
    gens5.push_back(one_block_all_black(5));
    if (!closure_matches(gens5, Category::d(5), 6, c.note)) return false;
    auto gens_inf = dbar_infinity_generators();
    gens_inf.push_back(four_block_bbww());
    return closure_matches(gens_inf, Category::d_infinity(), 6, c.note);
}

bool criterion9(Criterion& c) {
    // density oracle at rho = delta_1
    const auto grid = merge_grids({
        geometric_edge_grid(0.0, 1e-8, 0.5, 1.05, +1),
        linear_grid(0.5, 3.5, 600),
        geometric_edge_grid(4.0, 1e-8, 0.5, 1.05, -1),
    });
    const auto curve = density_from_measure(DiscreteMeasure::dirac(1.0), grid, 1e-8);
    if (!curve.all_ok()) {
        c.note = "root selection failures";
        return false;
    }
    if (std::abs(curve_mass(curve) - 1.0) > 1e-3) {
        c.note = "mass " + std::to_string(curve_mass(curve));
        return false;
    }
    const double catalans[] = {1.0, 2.0, 5.0, 14.0};
    for (int r = 1; r <= 4; ++r)
        if (std::abs(curve_moment(curve, r) - catalans[r - 1]) > 1e-2) {
            c.note = "moment r=" + std::to_string(r);
            return false;
        }

    // Wishart oracle at s = 5, N = 2000, 10 trials, fixed seed
    const auto rho = scale_measure(project_real(uniform_roots(5)), 0.5);
    const auto spec = sample_spectrum(rho, 2000, 10, 20240515);
    const auto emp = empirical_moments(spec, 6);
    const auto exact = moments_from_free_cumulants(character_free_cumulants<Rat>(5, 6), 6);
    for (int r = 1; r <= 6; ++r) {
        const double want = to_double(exact[r - 1]) / std::pow(2.0, r);
        // 5% relative, floored for the vanishing odd moments
        const double tol = std::max(0.05 * std::abs(want), 0.01);
        const double err = std::abs(emp[r - 1] - want);
        if (err > tol) {
            std::ostringstream os;
            os << "wishart r=" << r << " emp=" << emp[r - 1] << " want=" << want;
            c.note = os.str();
            return false;
        }
    }
    return true;
}

bool criterion10(Criterion& c, const std::string& cli) {
    if (cli.empty()) {
        c.note = "no CLI path given";
        return false;
    }
    const std::string quiet = " > /dev/null 2>&1";
    const int ok = std::system((cli + " verify --s-list 5 --R 8" + quiet).c_str());
    if (!WIFEXITED(ok) || WEXITSTATUS(ok) != 0) {
        c.note = "clean verify did not exit 0";
        return false;
    }
    const int bad = std::system((cli + " verify --s-list 5 --R 8 --perturb" + quiet).c_str());
    if (!WIFEXITED(bad) || WEXITSTATUS(bad) != 1) {
        c.note = "perturbed verify did not exit 1";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    std::vector<Criterion> results;

    run(results, 1, "cumulant triple agreement", 10, criterion1);
    run(results, 2, "diagram count / moment identity", 60, criterion2);
    run(results, 3, "character law end to end (thm52)", 5, criterion3);
    run(results, 4, "free Poisson decomposition (prop53)", 1, criterion4);
    run(results, 5, "infinite-modulus law (thm65)", 1, criterion5);
    run(results, 6, "functoriality with circle factor", 60, criterion6);
    run(results, 7, "linear independence via Gram rank", 120, criterion7);
    run(results, 8, "generation by closure", 600, criterion8);
    run(results, 9, "numerics oracle", 300, criterion9);
    run(results, 10, "negative control exit code", 60,
        [&](Criterion& c) { return criterion10(c, cli); });

    std::printf("%s\n", g_all_pass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
    return g_all_pass ? 0 : 1;
}
