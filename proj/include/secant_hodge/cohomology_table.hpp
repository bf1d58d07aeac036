#ifndef SECANT_HODGE_COHOMOLOGY_TABLE_HPP
#define SECANT_HODGE_COHOMOLOGY_TABLE_HPP

#include "secant_hodge/hodge_structure.hpp"

#include <map>
#include <string>

namespace secant_hodge {

/*
 * Degree j -> Hodge structure of H^j. Entries may be mixed. Zero entries are
 * never stored, so equality is equality of the graded tables; the label is
 * provenance only and is ignored by operator==.
 */
class CohomologyTable {
public:
    CohomologyTable() = default;
    explicit CohomologyTable(std::string label) : label_(std::move(label)) {}

    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    // Adds h to degree j (degree may be any integer; negative degrees are kept
    // so intermediate shifts stay lossless).
    void add(int j, const HodgeStructure& h);
    const HodgeStructure& at(int j) const;
    const std::map<int, HodgeStructure>& entries() const { return entries_; }

    bool empty() const { return entries_.empty(); }
    int max_degree() const; // -1 when empty
    // True when every class in degree j has weight j.
    bool is_pure() const;
    Count betti(int j) const { return at(j).dim(); }
    Count euler_characteristic() const;

    friend bool operator==(const CohomologyTable& a, const CohomologyTable& b) { return a.entries_ == b.entries_; }

private:
    std::map<int, HodgeStructure> entries_;
    std::string label_;
};

// Degree shift and Tate twist: out^j = T^{j - shift}(-twist).
CohomologyTable shift_twist(const CohomologyTable& t, int shift, int twist);
CohomologyTable direct_sum(const CohomologyTable& a, const CohomologyTable& b);
// Kunneth product.
CohomologyTable tensor(const CohomologyTable& a, const CohomologyTable& b);

// Signed two-variable table sum_{p,q} e_{p,q} u^p v^q.
class EPolynomial {
public:
    using Table = std::map<Bidegree, Count>;
    EPolynomial() = default;
    void add(int p, int q, Count c);
    Count at(int p, int q) const;
    const Table& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::string to_string() const;

    friend bool operator==(const EPolynomial&, const EPolynomial&) = default;
    friend EPolynomial operator+(const EPolynomial& a, const EPolynomial& b);
    friend EPolynomial operator-(const EPolynomial& a, const EPolynomial& b);
    friend EPolynomial operator*(const EPolynomial& a, const EPolynomial& b);

private:
    Table coeffs_;
};

EPolynomial e_polynomial(const CohomologyTable& t);

} // namespace secant_hodge

#endif
