#include "secant_hodge/schur.hpp"

#include <stdexcept>
#include <vector>

namespace secant_hodge {

Count hook_dimension(const HookPartition& hook, Count n) {
    if (!hook.valid()) throw std::invalid_argument("hook needs arm >= 1 and leg >= 0");
    return checked_mul(binomial(n + hook.arm - 1, hook.size()), binomial(hook.size() - 1, hook.leg));
}

HodgeStructure schur_hook(const HookPartition& hook, int g) {
    if (!hook.valid()) throw std::invalid_argument("hook needs arm >= 1 and leg >= 0");
    HodgeStructure out;
    if (g <= 0) return out;
    const int a = hook.arm, b = hook.leg;
    // corner is a large letter: the whole hook is large
    out.add(0, hook.size(), hook_dimension(hook, g));
    for (int c = 1; c <= a; ++c)
        for (int d = 0; d <= b; ++d) {
            const Count small = hook_dimension({c, d}, g);
            const Count row = multichoose(g, a - c);
            const Count col = binomial(g, b - d);
            const Count n = checked_mul(checked_mul(small, row), col);
            out.add(c + d, hook.size() - c - d, n);
        }
    return out;
}

namespace {

struct Lister {
    int a, b, g;
    std::vector<int> row, col;
    HodgeStructure out;

    void emit() {
        int p = 0;
        for (int x : row) p += x <= g;
        for (int x : col) p += x <= g;
        out.add(p, a + b - p, 1);
    }
    void fill_col(int i) {
        if (i == b) { emit(); return; }
        const int above = i == 0 ? row[0] : col[i - 1];
        for (int x = above + 1; x <= 2 * g; ++x) {
            col[i] = x;
            fill_col(i + 1);
        }
    }
    void fill_row(int i) {
        if (i == a) { fill_col(0); return; }
        const int left = i == 0 ? 1 : row[i - 1];
        for (int x = left; x <= 2 * g; ++x) {
            row[i] = x;
            fill_row(i + 1);
        }
    }
};

} // namespace

HodgeStructure schur_hook_by_listing(const HookPartition& hook, int g) {
    if (!hook.valid()) throw std::invalid_argument("hook needs arm >= 1 and leg >= 0");
    if (g <= 0) return {};
    Lister l{hook.arm, hook.leg, g, std::vector<int>(hook.arm), std::vector<int>(hook.leg), {}};
    l.fill_row(0);
    return l.out;
}

} // namespace secant_hodge
