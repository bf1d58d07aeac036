#ifndef SECANT_HODGE_HODGE_STRUCTURE_HPP
#define SECANT_HODGE_HODGE_STRUCTURE_HPP

#include "secant_hodge/combinatorics.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace secant_hodge {

using Bidegree = std::pair<int, int>;

/*
 * Bigraded dimension table of a (mixed) Hodge structure: (p, q) -> multiplicity.
 * Only strictly positive multiplicities are stored, so two structures are
 * equal exactly when their tables agree. The weight of a class is p + q.
 *
 * Tate convention: Q(-1) is the single class at (1, 1).
 */
class HodgeStructure {
public:
    using Table = std::map<Bidegree, Count>;

    HodgeStructure() = default;
    HodgeStructure(std::initializer_list<std::pair<const Bidegree, Count>> init);

    // Q(-a), i.e. one class at (a, a).
    static HodgeStructure tate(int a);

    // Adds m >= 0 classes at (p, q).
    void add(int p, int q, Count m);
    // Removes m classes; throws std::invalid_argument if fewer are present.
    void remove(int p, int q, Count m);

    Count at(int p, int q) const;
    Count dim() const;
    bool empty() const { return classes_.empty(); }
    const Table& classes() const { return classes_; }

    std::set<int> weights() const;
    // Classes of weight w only.
    HodgeStructure weight_part(int w) const;
    // True when every class has weight w (vacuously for the zero structure).
    bool is_pure_of_weight(int w) const;
    bool is_symmetric() const;

    std::string to_string() const;

    friend bool operator==(const HodgeStructure&, const HodgeStructure&) = default;

private:
    Table classes_;
};

HodgeStructure tate_twist(const HodgeStructure& h, int a);
HodgeStructure direct_sum(const HodgeStructure& a, const HodgeStructure& b);
HodgeStructure tensor(const HodgeStructure& a, const HodgeStructure& b);
HodgeStructure dual(const HodgeStructure& h);
HodgeStructure scale(const HodgeStructure& h, Count m);

HodgeStructure operator+(const HodgeStructure& a, const HodgeStructure& b);
HodgeStructure& operator+=(HodgeStructure& a, const HodgeStructure& b);
HodgeStructure operator*(const HodgeStructure& a, const HodgeStructure& b);

// Ordinary symmetric and exterior powers of a Hodge structure.
HodgeStructure sym_power(const HodgeStructure& h, int k);
HodgeStructure wedge_power(const HodgeStructure& h, int k);
HodgeStructure sym2(const HodgeStructure& h);
HodgeStructure wedge2(const HodgeStructure& h);

// Pure weight-1 structure of a genus-g curve: g classes at (1,0) and g at (0,1).
HodgeStructure h1_curve(int g);

} // namespace secant_hodge

#endif
