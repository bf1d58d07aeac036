#ifndef SECANT_HODGE_BUILDERS_HPP
#define SECANT_HODGE_BUILDERS_HPP

#include "secant_hodge/cohomology_table.hpp"
#include "secant_hodge/hodge_diamond.hpp"

namespace secant_hodge {

// Pure cohomology tables of the spaces around a secant variety. All inputs
// and outputs are pure tables (degree = weight).

CohomologyTable point_table();
CohomologyTable curve(int g);
CohomologyTable projective_space(int n);
CohomologyTable from_diamond(const HodgeDiamond& d);

// Complex dimension of a smooth projective variety from its table (top degree / 2).
int table_dimension(const CohomologyTable& y);

// Blow-up at a point: one extra Q(-k/2) in each even degree k in [2, 2n-2].
CohomologyTable blowup_point(const CohomologyTable& y);

// Primitive part of H^l of the blow-up at a point: P_l(Y), plus one (1,1)
// class when l = 2 and n >= 2. Returns Q for l = 0.
HodgeStructure blowup_primitive(const HodgeDiamond& y, int l);

// Super Sym^2 of the full cohomology, graded by degree.
CohomologyTable sym2_variety(const CohomologyTable& y);
// sum_{i=1}^{n-1} H^{j-2i}(Y)(-i), the contribution of the exceptional divisor
// over the diagonal.
CohomologyTable diagonal_exceptional_sum(const CohomologyTable& y);
CohomologyTable hilb2(const CohomologyTable& y);
// Blow-up of Y x Y along the diagonal.
CohomologyTable phi(const CohomologyTable& y);
// P^1-bundle over Hilb^2: Hilb^2 plus Hilb^2 shifted by 2 and twisted by (-1).
CohomologyTable total_space_P(const CohomologyTable& y);
// P^{r-1}-bundle: sum_{i=0}^{r-1} H^{j-2i}(base)(-i).
CohomologyTable proj_bundle(const CohomologyTable& base, int r);
// P^{k-1}-bundle over C^(k).
CohomologyTable bk_space(int g, int k);

} // namespace secant_hodge

#endif
