// Prints the free cumulants and moments of the main character for a few
// moduli, with the diagram counts they reproduce.

#include <iostream>

#include "ncdiag/colored.hpp"
#include "ncdiag/cumulants.hpp"

int main() {
    using namespace ncdiag;
    for (const std::optional<int>& s : std::vector<std::optional<int>>{3, 5, std::nullopt}) {
        const Category cat = s ? Category::d(*s) : Category::d_infinity();
        std::cout << "=== " << cat.name() << " ===\n";
        std::cout << "r  kappa_r  m_r  |D(0,r)|\n";
        const int R = 8;
        const auto kappas = character_free_cumulants<Rat>(s, R);
        const auto moments = character_moments(s, R);
        for (int r = 1; r <= R; ++r)
            std::cout << r << "  " << kappas.kappa(r) << "  " << moments[r - 1] << "  "
                      << count_category(0, r, cat) << "\n";
        std::cout << "\n";
    }
    return 0;
}
