#include "secant_hodge/cohomology_table.hpp"

#include <sstream>

namespace secant_hodge {

void CohomologyTable::add(int j, const HodgeStructure& h) {
    if (h.empty()) return;
    entries_[j] += h;
}

const HodgeStructure& CohomologyTable::at(int j) const {
    static const HodgeStructure zero;
    auto it = entries_.find(j);
    return it == entries_.end() ? zero : it->second;
}

int CohomologyTable::max_degree() const { return entries_.empty() ? -1 : entries_.rbegin()->first; }

bool CohomologyTable::is_pure() const {
    for (const auto& [j, h] : entries_)
        if (!h.is_pure_of_weight(j)) return false;
    return true;
}

Count CohomologyTable::euler_characteristic() const {
    Count chi = 0;
    for (const auto& [j, h] : entries_) chi += (j % 2 == 0 ? 1 : -1) * h.dim();
    return chi;
}

CohomologyTable shift_twist(const CohomologyTable& t, int shift, int twist) {
    CohomologyTable out(t.label());
    for (const auto& [j, h] : t.entries()) out.add(j + shift, tate_twist(h, -twist));
    return out;
}

CohomologyTable direct_sum(const CohomologyTable& a, const CohomologyTable& b) {
    CohomologyTable out(a.label());
    for (const auto& [j, h] : a.entries()) out.add(j, h);
    for (const auto& [j, h] : b.entries()) out.add(j, h);
    return out;
}

CohomologyTable tensor(const CohomologyTable& a, const CohomologyTable& b) {
    CohomologyTable out;
    for (const auto& [i, x] : a.entries())
        for (const auto& [j, y] : b.entries()) out.add(i + j, tensor(x, y));
    return out;
}

void EPolynomial::add(int p, int q, Count c) {
    if (c == 0) return;
    auto& slot = coeffs_[{p, q}];
    slot = checked_add(slot, c);
    if (slot == 0) coeffs_.erase({p, q});
}

Count EPolynomial::at(int p, int q) const {
    auto it = coeffs_.find({p, q});
    return it == coeffs_.end() ? 0 : it->second;
}

std::string EPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [bd, c] : coeffs_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Count a = c < 0 ? -c : c;
        bool unit = bd.first == 0 && bd.second == 0;
        if (a != 1 || unit) os << a;
        if (bd.first != 0) os << "u" << (bd.first != 1 ? "^" + std::to_string(bd.first) : "");
        if (bd.second != 0) os << "v" << (bd.second != 1 ? "^" + std::to_string(bd.second) : "");
    }
    return os.str();
}

EPolynomial operator+(const EPolynomial& a, const EPolynomial& b) {
    EPolynomial out = a;
    for (const auto& [bd, c] : b.coeffs_) out.add(bd.first, bd.second, c);
    return out;
}

EPolynomial operator-(const EPolynomial& a, const EPolynomial& b) {
    EPolynomial out = a;
    for (const auto& [bd, c] : b.coeffs_) out.add(bd.first, bd.second, -c);
    return out;
}

EPolynomial operator*(const EPolynomial& a, const EPolynomial& b) {
    EPolynomial out;
    for (const auto& [x, c] : a.coeffs_)
        for (const auto& [y, d] : b.coeffs_) out.add(x.first + y.first, x.second + y.second, checked_mul(c, d));
    return out;
}

EPolynomial e_polynomial(const CohomologyTable& t) {
    EPolynomial e;
    for (const auto& [j, h] : t.entries()) {
        const Count sign = (j % 2 == 0) ? 1 : -1;
        for (const auto& [bd, m] : h.classes()) e.add(bd.first, bd.second, sign * m);
    }
    return e;
}

} // namespace secant_hodge
