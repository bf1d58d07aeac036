#ifndef SECANT_HODGE_HODGE_DIAMOND_HPP
#define SECANT_HODGE_HODGE_DIAMOND_HPP

#include "secant_hodge/cohomology_table.hpp"
#include "secant_hodge/extended_int.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace secant_hodge {

// Raised for diamonds that violate one of the validity conditions; what()
// names the violated condition.
class DiamondError : public std::invalid_argument {
public:
    DiamondError(std::string invariant, const std::string& detail)
        : std::invalid_argument(invariant + ": " + detail), invariant_(std::move(invariant)) {}
    const std::string& invariant() const { return invariant_; }

private:
    std::string invariant_;
};

/*
 * Hodge numbers h[p][q] of a smooth projective connected variety of
 * dimension n. Construction validates:
 *   shape, non-negativity, conjugation symmetry h[p][q] = h[q][p],
 *   Serre symmetry h[p][q] = h[n-p][n-q], connectedness h[0][0] = 1,
 *   Lefschetz monotonicity h[p][q] <= h[p+1][q+1] for p + q < n.
 */
class HodgeDiamond {
public:
    HodgeDiamond(int dim, std::vector<std::vector<Count>> h);

    int dim() const { return n_; }
    // Zero outside 0..n.
    Count h(int p, int q) const;
    Count betti(int j) const;
    const std::vector<std::vector<Count>>& rows() const { return h_; }

    bool is_projective_line() const { return n_ == 1 && h_[1][0] == 0; }
    bool operator==(const HodgeDiamond& o) const { return n_ == o.n_ && h_ == o.h_; }

    // Common examples.
    static HodgeDiamond point();
    static HodgeDiamond projective_space(int n);
    static HodgeDiamond curve(int g);
    static HodgeDiamond k3();
    static HodgeDiamond abelian_surface();

private:
    int n_;
    std::vector<std::vector<Count>> h_;
};

// P_0 .. P_n; P_l has the classes h[p][q] - h[p-1][q-1] with p + q = l.
std::vector<HodgeStructure> primitive_decomposition(const HodgeDiamond& d);
// P_l, zero for l < 0 or l > n.
HodgeStructure primitive_part(const HodgeDiamond& d, int l);
// Minimal p with P_l nonzero at (p, l - p); +inf when P_l = 0.
ExtInt mu_prim(const HodgeDiamond& d, int l);

// Rebuild the diamond from its primitive parts: sum over l, i >= 0 with
// l + 2i <= 2n - l of P_l(-i) placed in degree l + 2i.
CohomologyTable lefschetz_reassembly(const std::vector<HodgeStructure>& prims, int n);

} // namespace secant_hodge

#endif
