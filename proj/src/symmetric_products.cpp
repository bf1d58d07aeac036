#include "secant_hodge/symmetric_products.hpp"

#include "secant_hodge/hodge_structure.hpp"

#include <stdexcept>
#include <vector>

namespace secant_hodge {

namespace {

// even_sym: true for the symmetric power (Sym on even degrees).
CohomologyTable graded_power(const CohomologyTable& t, int k, bool even_sym) {
    if (!t.is_pure()) throw std::invalid_argument("graded powers need a pure table");
    if (k < 0) return {};
    std::vector<CohomologyTable> partial(k + 1);
    partial[0].add(0, HodgeStructure::tate(0));
    for (const auto& [j, h] : t.entries()) {
        const bool symmetric = (j % 2 == 0) == even_sym;
        for (const auto& [bd, m] : h.classes()) {
            std::vector<CohomologyTable> next(k + 1);
            for (int s = 0; s <= k; ++s) {
                if (partial[s].empty()) continue;
                for (int c = 0; s + c <= k; ++c) {
                    const Count ways = symmetric ? multichoose(m, c) : binomial(m, c);
                    if (ways == 0) break;
                    for (const auto& [deg, x] : partial[s].entries()) {
                        HodgeStructure moved;
                        for (const auto& [y, n] : x.classes())
                            moved.add(y.first + c * bd.first, y.second + c * bd.second, checked_mul(n, ways));
                        next[s + c].add(deg + c * j, moved);
                    }
                }
            }
            partial = std::move(next);
        }
    }
    return partial[k];
}

} // namespace

CohomologyTable super_sym_power(const CohomologyTable& t, int k) {
    CohomologyTable out = graded_power(t, k, true);
    out.set_label("super Sym^" + std::to_string(k));
    return out;
}

CohomologyTable super_wedge_power(const CohomologyTable& t, int m) {
    CohomologyTable out = graded_power(t, m, false);
    out.set_label("super wedge^" + std::to_string(m));
    return out;
}

CohomologyTable macdonald_sym_curve(int g, int k) {
    CohomologyTable out("C^(" + std::to_string(k) + "), g=" + std::to_string(g));
    const HodgeStructure h1 = h1_curve(g);
    for (int j = 0; j <= 2 * k; ++j)
        for (int i = std::max(0, j - k); 2 * i <= j; ++i) out.add(j, tate_twist(wedge_power(h1, j - 2 * i), -i));
    return out;
}

std::map<int, HodgeStructure> super_wedge_curve(int g, int m) {
    // H^0 and H^2 are one-dimensional and even, so each enters at most once;
    // H^1 is odd, so its super exterior powers are ordinary symmetric powers.
    const HodgeStructure h1 = h1_curve(g);
    std::map<int, HodgeStructure> out;
    auto put = [&](int w, const HodgeStructure& h) {
        if (!h.empty()) out[w] += h;
    };
    put(m - 1, sym_power(h1, m - 1));
    if (m >= 2) put(m, tate_twist(sym_power(h1, m - 2), -1));
    put(m, sym_power(h1, m));
    put(m + 1, tate_twist(sym_power(h1, m - 1), -1));
    return out;
}

} // namespace secant_hodge
