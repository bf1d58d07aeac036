#include "secant_hodge/hodge_diamond.hpp"

namespace secant_hodge {

namespace {

std::string at(int p, int q) { return "h[" + std::to_string(p) + "][" + std::to_string(q) + "]"; }

} // namespace

HodgeDiamond::HodgeDiamond(int dim, std::vector<std::vector<Count>> h) : n_(dim), h_(std::move(h)) {
    if (n_ < 0) throw DiamondError("shape", "dimension must be non-negative");
    if (static_cast<int>(h_.size()) != n_ + 1)
        throw DiamondError("shape", "expected " + std::to_string(n_ + 1) + " rows");
    for (const auto& row : h_)
        if (static_cast<int>(row.size()) != n_ + 1)
            throw DiamondError("shape", "expected " + std::to_string(n_ + 1) + " columns in every row");
    for (int p = 0; p <= n_; ++p)
        for (int q = 0; q <= n_; ++q)
            if (h_[p][q] < 0) throw DiamondError("non-negativity", at(p, q) + " is negative");
    for (int p = 0; p <= n_; ++p)
        for (int q = 0; q <= n_; ++q)
            if (h_[p][q] != h_[q][p])
                throw DiamondError("conjugation symmetry", at(p, q) + " != " + at(q, p));
    for (int p = 0; p <= n_; ++p)
        for (int q = 0; q <= n_; ++q)
            if (h_[p][q] != h_[n_ - p][n_ - q])
                throw DiamondError("Serre symmetry", at(p, q) + " != " + at(n_ - p, n_ - q));
    if (h_[0][0] != 1) throw DiamondError("connectedness", "h[0][0] must be 1");
    for (int p = 0; p < n_; ++p)
        for (int q = 0; q < n_; ++q)
            if (p + q < n_ && h_[p][q] > h_[p + 1][q + 1])
                throw DiamondError("Lefschetz monotonicity", at(p, q) + " > " + at(p + 1, q + 1));
}

Count HodgeDiamond::h(int p, int q) const {
    if (p < 0 || q < 0 || p > n_ || q > n_) return 0;
    return h_[p][q];
}

Count HodgeDiamond::betti(int j) const {
    Count b = 0;
    for (int p = 0; p <= j; ++p) b += h(p, j - p);
    return b;
}

HodgeDiamond HodgeDiamond::point() { return HodgeDiamond(0, {{1}}); }

HodgeDiamond HodgeDiamond::projective_space(int n) {
    std::vector<std::vector<Count>> h(n + 1, std::vector<Count>(n + 1, 0));
    for (int i = 0; i <= n; ++i) h[i][i] = 1;
    return HodgeDiamond(n, h);
}

HodgeDiamond HodgeDiamond::curve(int g) { return HodgeDiamond(1, {{1, g}, {g, 1}}); }

HodgeDiamond HodgeDiamond::k3() { return HodgeDiamond(2, {{1, 0, 1}, {0, 20, 0}, {1, 0, 1}}); }

HodgeDiamond HodgeDiamond::abelian_surface() { return HodgeDiamond(2, {{1, 2, 1}, {2, 4, 2}, {1, 2, 1}}); }

std::vector<HodgeStructure> primitive_decomposition(const HodgeDiamond& d) {
    const int n = d.dim();
    std::vector<HodgeStructure> prims(n + 1);
    for (int l = 0; l <= n; ++l)
        for (int p = 0; p <= l; ++p) {
            const int q = l - p;
            prims[l].add(p, q, d.h(p, q) - d.h(p - 1, q - 1));
        }
    return prims;
}

HodgeStructure primitive_part(const HodgeDiamond& d, int l) {
    if (l < 0 || l > d.dim()) return {};
    return primitive_decomposition(d)[l];
}

ExtInt mu_prim(const HodgeDiamond& d, int l) {
    const HodgeStructure pl = primitive_part(d, l);
    if (pl.empty()) return ExtInt::inf();
    // classes are ordered by p first
    return ExtInt(pl.classes().begin()->first.first);
}

CohomologyTable lefschetz_reassembly(const std::vector<HodgeStructure>& prims, int n) {
    CohomologyTable t("lefschetz reassembly");
    for (int l = 0; l < static_cast<int>(prims.size()); ++l)
        for (int i = 0; l + 2 * i <= 2 * n - l; ++i) t.add(l + 2 * i, tate_twist(prims[l], -i));
    return t;
}

} // namespace secant_hodge
