#ifndef SECANT_HODGE_SYMMETRIC_PRODUCTS_HPP
#define SECANT_HODGE_SYMMETRIC_PRODUCTS_HPP

#include "secant_hodge/cohomology_table.hpp"

#include <map>

namespace secant_hodge {

/*
 * Graded (super) powers of a pure cohomology table, graded by total degree.
 * Symmetric power: Sym on even-degree classes, exterior on odd-degree ones.
 * Exterior power: the other way round.
 * Both throw std::invalid_argument on a table that is not pure.
 */
CohomologyTable super_sym_power(const CohomologyTable& t, int k);
CohomologyTable super_wedge_power(const CohomologyTable& t, int m);

// H^j(C^(k)) = sum over max(0, j-k) <= i <= j/2 of wedge^{j-2i} H^1(C) (-i).
CohomologyTable macdonald_sym_curve(int g, int k);

// Weight-graded pieces of the super exterior power wedge^m H^*(C):
// weight m-1: H^0 ^ Sym^{m-1} H^1; weight m: H^0 ^ H^2 ^ Sym^{m-2} H^1 plus
// Sym^m H^1; weight m+1: H^2 ^ Sym^{m-1} H^1.
std::map<int, HodgeStructure> super_wedge_curve(int g, int m);

} // namespace secant_hodge

#endif
