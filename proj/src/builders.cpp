#include "secant_hodge/builders.hpp"

#include "secant_hodge/symmetric_products.hpp"

#include <stdexcept>

namespace secant_hodge {

CohomologyTable point_table() {
    CohomologyTable t("point");
    t.add(0, HodgeStructure::tate(0));
    return t;
}

CohomologyTable curve(int g) {
    if (g < 0) throw std::invalid_argument("genus must be non-negative");
    CohomologyTable t("curve g=" + std::to_string(g));
    t.add(0, HodgeStructure::tate(0));
    t.add(1, h1_curve(g));
    t.add(2, HodgeStructure::tate(1));
    return t;
}

CohomologyTable projective_space(int n) {
    if (n < 0) throw std::invalid_argument("dimension must be non-negative");
    CohomologyTable t("P^" + std::to_string(n));
    for (int i = 0; i <= n; ++i) t.add(2 * i, HodgeStructure::tate(i));
    return t;
}

CohomologyTable from_diamond(const HodgeDiamond& d) {
    CohomologyTable t("diamond");
    for (int p = 0; p <= d.dim(); ++p)
        for (int q = 0; q <= d.dim(); ++q) {
            HodgeStructure h;
            h.add(p, q, d.h(p, q));
            t.add(p + q, h);
        }
    return t;
}

int table_dimension(const CohomologyTable& y) {
    const int top = y.max_degree();
    if (top < 0 || top % 2 != 0) throw std::invalid_argument("table has no even top degree");
    return top / 2;
}

CohomologyTable blowup_point(const CohomologyTable& y) {
    const int n = table_dimension(y);
    CohomologyTable out = y;
    out.set_label("Bl_pt " + y.label());
    for (int k = 2; k <= 2 * n - 2; k += 2) out.add(k, HodgeStructure::tate(k / 2));
    return out;
}

HodgeStructure blowup_primitive(const HodgeDiamond& y, int l) {
    if (l < 0 || l > y.dim()) throw std::invalid_argument("primitive degree out of range");
    HodgeStructure p = primitive_part(y, l);
    if (l == 2 && y.dim() >= 2) p.add(1, 1, 1);
    return p;
}

CohomologyTable sym2_variety(const CohomologyTable& y) {
    CohomologyTable out = super_sym_power(y, 2);
    out.set_label("Sym^2 " + y.label());
    return out;
}

CohomologyTable diagonal_exceptional_sum(const CohomologyTable& y) {
    const int n = table_dimension(y);
    CohomologyTable out;
    for (int i = 1; i <= n - 1; ++i) out = direct_sum(out, shift_twist(y, 2 * i, i));
    return out;
}

CohomologyTable hilb2(const CohomologyTable& y) {
    CohomologyTable out = direct_sum(sym2_variety(y), diagonal_exceptional_sum(y));
    out.set_label("Hilb^2 " + y.label());
    return out;
}

CohomologyTable phi(const CohomologyTable& y) {
    CohomologyTable out = direct_sum(tensor(y, y), diagonal_exceptional_sum(y));
    out.set_label("Bl_diag(Y x Y) " + y.label());
    return out;
}

CohomologyTable total_space_P(const CohomologyTable& y) {
    const CohomologyTable h = hilb2(y);
    CohomologyTable out = direct_sum(h, shift_twist(h, 2, 1));
    out.set_label("P over Hilb^2 " + y.label());
    return out;
}

CohomologyTable proj_bundle(const CohomologyTable& base, int r) {
    if (r < 1) throw std::invalid_argument("projective bundle rank must be >= 1");
    CohomologyTable out;
    for (int i = 0; i < r; ++i) out = direct_sum(out, shift_twist(base, 2 * i, i));
    out.set_label("P^" + std::to_string(r - 1) + "-bundle over " + base.label());
    return out;
}

CohomologyTable bk_space(int g, int k) {
    CohomologyTable out = proj_bundle(macdonald_sym_curve(g, k), k);
    out.set_label("B^" + std::to_string(k) + ", g=" + std::to_string(g));
    return out;
}

} // namespace secant_hodge
