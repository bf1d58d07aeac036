#ifndef SECANT_HODGE_ORACLES_HPP
#define SECANT_HODGE_ORACLES_HPP

#include "secant_hodge/cohomology_table.hpp"
#include "secant_hodge/hodge_diamond.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace secant_hodge {

// Dense integer matrix, row-major. Differentials act on column vectors, so a
// map from a space of dim s to one of dim t is a t x s matrix.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
    std::int64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    bool is_zero() const;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Exact rank by fraction-free (Bareiss) elimination over arbitrary-precision
// integers.
std::size_t exact_rank(const IntMatrix& m);

struct BasisVector {
    std::string label;
    Bidegree tag;   // Hodge bidegree including the Tate twist
    int tate = 0;   // Tate index of the wedge summand the vector lives in
};

struct BasedSpace {
    std::string label;
    std::vector<BasisVector> basis;
    std::size_t dim() const { return basis.size(); }
};

struct BasedComplex {
    std::vector<BasedSpace> terms;
    std::vector<IntMatrix> differentials; // differentials[l]: terms[l] -> terms[l+1]
};

/*
 * The E_1 row of the weight spectral sequence of sigma_k in weight w:
 *
 *   IH^w(sigma_k) -> H^1 (x) IH^{w-1}(sigma_{k-1}) -> ... -> Sym^{k-1} H^1 (x) H^{w-k+1}(C)
 *
 * Each IH factor is split into wedge summands wedge^b H^1 (-T); d_1 is the
 * Koszul map between summands with equal T, except that on a factor of
 * degree p = 2m-1+t above the middle the summand with T = t maps by zero.
 * H^1 has basis gamma_1..gamma_2g, the first g of type (1,0).
 */
BasedComplex build_wss_complex(int g, int k, int w);

// Bigraded cohomology of the complex at each position l = 0..k-1; position l
// is Gr^W_w H^{w+l}(sigma_k).
std::vector<std::pair<int, HodgeStructure>> complex_cohomology(const BasedComplex& c);
std::vector<std::pair<int, HodgeStructure>> wss_cohomology(int g, int k, int w);

bool differentials_square_to_zero(const BasedComplex& c);
// Every nonzero matrix entry joins basis vectors with equal bidegree and Tate index.
bool differentials_preserve_tags(const BasedComplex& c);

struct ScissorResult {
    bool ok = false;
    EPolynomial residual;
    EPolynomial secondary_residual; // curves only: difference to the pure recursion
    std::string detail;
};

// E(Sigma) - (E(Y) + E(P) - E(Phi)) for the secant variety of lines.
ScissorResult scissor_check_lines(const HodgeDiamond& y);
// Checks E(sigma_k) against the stratification recursion
//   E(sigma_k) = E(B^k) - E(Z^k_{k-1}) + E(sigma_{k-1}),
//   E(Z^k_{k-1}) = sum_{i <= k-1} E(C^(k-i)) E(U_i),  E(U_i) = E(sigma_i) - E(sigma_{i-1}),
// once with the closed forms at every level and once against the sequence
// generated purely by the recursion from E(sigma_1) = E(C).
ScissorResult scissor_check_curves(int g, int k);

struct IdentityResult {
    bool ok = true;
    std::vector<std::string> mismatches;
};

// H^j(B^k) = sum_{l=1}^{k} IH^{j-2(k-l)}(sigma_l)(l-k), with sigma_1 = C.
IdentityResult semismall_check(int g, int k);
// H^j(P) = IH^j(Sigma) + sum_{l=0}^{n-1} H^{n+1+l}(Bl_y Y) (x) H^{j-n-1-l}(Y)
//          + sum_{l=0}^{n-2} H^l(Bl_y Y) (x) H^{j-2-l}(Y)(-1).
IdentityResult decomposition_check_lines(const HodgeDiamond& y);

struct DualityOffense {
    int j = 0;
    int p = 0;
    int q = 0;
    std::string kind; // "poincare" or "lefschetz"
};

struct DualityResult {
    bool ok = true;
    std::vector<DualityOffense> offenses;
};

// Poincare duality T^{d+j} = T^{d-j}(-j) and hard Lefschetz injectivity
// T^{j}(-1) <= T^{j+2} bidegreewise for j < d, on a pure table of a
// d-dimensional object.
DualityResult duality_lefschetz_check(const CohomologyTable& t, int d);

} // namespace secant_hodge

#endif
