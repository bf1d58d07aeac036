#include "secant_hodge/hodge_structure.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace secant_hodge {

HodgeStructure::HodgeStructure(std::initializer_list<std::pair<const Bidegree, Count>> init) {
    for (const auto& [bd, m] : init) add(bd.first, bd.second, m);
}

HodgeStructure HodgeStructure::tate(int a) {
    HodgeStructure h;
    h.add(a, a, 1);
    return h;
}

void HodgeStructure::add(int p, int q, Count m) {
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    if (m == 0) return;
    auto& slot = classes_[{p, q}];
    slot = checked_add(slot, m);
}

void HodgeStructure::remove(int p, int q, Count m) {
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    if (m == 0) return;
    auto it = classes_.find({p, q});
    if (it == classes_.end() || it->second < m)
        throw std::invalid_argument("removing classes that are not present");
    it->second -= m;
    if (it->second == 0) classes_.erase(it);
}

Count HodgeStructure::at(int p, int q) const {
    auto it = classes_.find({p, q});
    return it == classes_.end() ? 0 : it->second;
}

Count HodgeStructure::dim() const {
    Count d = 0;
    for (const auto& [bd, m] : classes_) d = checked_add(d, m);
    return d;
}

std::set<int> HodgeStructure::weights() const {
    std::set<int> w;
    for (const auto& [bd, m] : classes_) w.insert(bd.first + bd.second);
    return w;
}

HodgeStructure HodgeStructure::weight_part(int w) const {
    HodgeStructure out;
    for (const auto& [bd, m] : classes_)
        if (bd.first + bd.second == w) out.add(bd.first, bd.second, m);
    return out;
}

bool HodgeStructure::is_pure_of_weight(int w) const {
    for (const auto& [bd, m] : classes_)
        if (bd.first + bd.second != w) return false;
    return true;
}

bool HodgeStructure::is_symmetric() const {
    for (const auto& [bd, m] : classes_)
        if (at(bd.second, bd.first) != m) return false;
    return true;
}

std::string HodgeStructure::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [bd, m] : classes_) {
        if (!first) os << ", ";
        first = false;
        os << "(" << bd.first << "," << bd.second << "):" << m;
    }
    os << "}";
    return os.str();
}

HodgeStructure tate_twist(const HodgeStructure& h, int a) {
    HodgeStructure out;
    for (const auto& [bd, m] : h.classes()) out.add(bd.first - a, bd.second - a, m);
    return out;
}

HodgeStructure direct_sum(const HodgeStructure& a, const HodgeStructure& b) {
    HodgeStructure out = a;
    for (const auto& [bd, m] : b.classes()) out.add(bd.first, bd.second, m);
    return out;
}

HodgeStructure tensor(const HodgeStructure& a, const HodgeStructure& b) {
    HodgeStructure out;
    for (const auto& [x, m] : a.classes())
        for (const auto& [y, n] : b.classes())
            out.add(x.first + y.first, x.second + y.second, checked_mul(m, n));
    return out;
}

HodgeStructure dual(const HodgeStructure& h) {
    HodgeStructure out;
    for (const auto& [bd, m] : h.classes()) out.add(-bd.first, -bd.second, m);
    return out;
}

HodgeStructure scale(const HodgeStructure& h, Count m) {
    HodgeStructure out;
    for (const auto& [bd, n] : h.classes()) out.add(bd.first, bd.second, checked_mul(m, n));
    return out;
}

HodgeStructure operator+(const HodgeStructure& a, const HodgeStructure& b) { return direct_sum(a, b); }

HodgeStructure& operator+=(HodgeStructure& a, const HodgeStructure& b) {
    for (const auto& [bd, m] : b.classes()) a.add(bd.first, bd.second, m);
    return a;
}

HodgeStructure operator*(const HodgeStructure& a, const HodgeStructure& b) { return tensor(a, b); }

namespace {

// Power of a structure: pick c_i copies from the i-th bidegree block,
// weighted by ways(m_i, c_i).
template <class Ways>
HodgeStructure graded_power(const HodgeStructure& h, int k, Ways ways) {
    if (k < 0) return {};
    // partial[j] = structure of all choices of total size j among processed blocks
    std::vector<HodgeStructure> partial(k + 1);
    partial[0].add(0, 0, 1);
    for (const auto& [bd, m] : h.classes()) {
        std::vector<HodgeStructure> next(k + 1);
        for (int j = 0; j <= k; ++j) {
            if (partial[j].empty()) continue;
            for (int c = 0; j + c <= k; ++c) {
                Count w = ways(m, c);
                if (w == 0) break;
                for (const auto& [x, n] : partial[j].classes())
                    next[j + c].add(x.first + c * bd.first, x.second + c * bd.second, checked_mul(n, w));
            }
        }
        partial = std::move(next);
    }
    return partial[k];
}

} // namespace

HodgeStructure sym_power(const HodgeStructure& h, int k) {
    return graded_power(h, k, [](Count m, int c) { return multichoose(m, c); });
}

HodgeStructure wedge_power(const HodgeStructure& h, int k) {
    return graded_power(h, k, [](Count m, int c) { return binomial(m, c); });
}

// Square powers straight from a basis: unordered pairs of basis vectors.
HodgeStructure sym2(const HodgeStructure& h) {
    HodgeStructure out;
    const auto& t = h.classes();
    for (auto i = t.begin(); i != t.end(); ++i) {
        const auto [p, q] = i->first;
        const Count n = i->second;
        out.add(2 * p, 2 * q, checked_mul(n, n + 1) / 2);
        for (auto j = std::next(i); j != t.end(); ++j)
            out.add(p + j->first.first, q + j->first.second, checked_mul(n, j->second));
    }
    return out;
}

HodgeStructure wedge2(const HodgeStructure& h) {
    HodgeStructure out;
    const auto& t = h.classes();
    for (auto i = t.begin(); i != t.end(); ++i) {
        const auto [p, q] = i->first;
        const Count n = i->second;
        out.add(2 * p, 2 * q, checked_mul(n, n - 1) / 2);
        for (auto j = std::next(i); j != t.end(); ++j)
            out.add(p + j->first.first, q + j->first.second, checked_mul(n, j->second));
    }
    return out;
}

HodgeStructure h1_curve(int g) {
    HodgeStructure h;
    h.add(1, 0, g);
    h.add(0, 1, g);
    return h;
}

} // namespace secant_hodge
