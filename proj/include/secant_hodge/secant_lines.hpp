#ifndef SECANT_HODGE_SECANT_LINES_HPP
#define SECANT_HODGE_SECANT_LINES_HPP

#include "secant_hodge/cohomology_table.hpp"
#include "secant_hodge/extended_int.hpp"
#include "secant_hodge/hodge_diamond.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace secant_hodge {

// A computation needs an input that was not supplied (h11_rational).
class MissingInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Out-of-contract parameters (N too small, degree out of range, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/*
 * Secant variety of lines Sigma of a smooth projective Y of dimension n >= 1
 * under a 3-very ample embedding with Sigma != P^N; dim Sigma = 2n + 1.
 *
 * N (ambient dimension) is optional; without it every twist involving the
 * codimension q = N - 2n - 1 is reported symbolically. Positivity properties
 * cannot be read off a diamond and are taken on trust:
 *   qprime = p  means L has the Q'_p property (0 <= p <= n - 1),
 *   u2          means L has the U_2 property.
 */
struct SecantLinesContext {
    HodgeDiamond diamond;
    std::optional<int> ambient_dim;
    std::optional<Count> h11_rational;
    std::optional<int> qprime;
    bool u2 = false;

    explicit SecantLinesContext(HodgeDiamond d, std::optional<int> N = std::nullopt,
                                std::optional<Count> h11q = std::nullopt, std::optional<int> qprime_p = std::nullopt,
                                bool u2_flag = false);

    int n() const { return diamond.dim(); }
    int dim_sigma() const { return 2 * n() + 1; }
    std::optional<int> codim() const;
};

// A Hodge structure twisted by (-(q_coeff * q + const_part)), q symbolic when
// N is unknown; `resolved` holds the twisted structure when N is known.
struct TwistedStructure {
    HodgeStructure intrinsic;
    int q_coeff = 0;
    int const_part = 0;
    std::optional<HodgeStructure> resolved;
    bool operator==(const TwistedStructure&) const = default;
};

struct LocalCohomologySlice {
    std::string role;       // "local_system" or "IC"
    int weight_q_coeff = 0; // weight = N + weight_q_coeff * q + weight_const (j = 0 only)
    int weight_const = 0;
    std::optional<int> weight; // resolved weight when N is known
    TwistedStructure fiber;    // empty for the IC marker
    bool trivial_monodromy = true;
    bool operator==(const LocalCohomologySlice&) const = default;
};

struct LocalCohomologyRecord {
    int j = 0;
    std::vector<LocalCohomologySlice> slices; // empty above lcdef
    std::string note;
    bool operator==(const LocalCohomologyRecord&) const = default;
};

struct InvariantReport {
    ExtInt lcdef;
    ExtInt c;
    ExtInt hrh;
    ExtInt w;
    std::optional<ExtInt> sigma_defect;
    std::optional<ExtInt> sigma_an_bound;
    std::vector<std::string> branch_notes;
    bool operator==(const InvariantReport&) const = default;
};

struct HLEntry {
    int r = 0;
    std::optional<int> s; // absent for intersection numbers
    int u = 0;
    int v = 0;
    Count value = 0;
    bool operator==(const HLEntry&) const = default;
};

struct HLTable {
    std::vector<HLEntry> entries; // nonzero entries only, sorted by (r, s, u, v)
    bool rationally_smooth = false;
    Count at(int r, std::optional<int> s, int u, int v) const;
    bool operator==(const HLTable&) const = default;
};

struct GenerationLevels {
    std::vector<std::pair<int, ExtInt>> higher;  // gl(H^{q+j}) for 0 < j <= lcdef
    ExtInt top_weight_slice;                     // gl(Gr^W_{N+q+1} H^q)
    int hq_upper_bound = 0;                      // gl(H^q) <= n
    std::optional<ExtInt> ic_upper_bound;        // with Q'_p
    std::optional<ExtInt> ic_exact;              // with Q'_{n-1}
    std::optional<ExtInt> hq_exact;              // with Q'_{n-1}
    std::vector<std::string> branch_notes;
    bool operator==(const GenerationLevels&) const = default;
};

struct QFactorialityRecord {
    ExtInt sigma;
    bool q_factorial = false;
    bool factorial = false;
    std::optional<ExtInt> sigma_an_bound;
    std::optional<bool> sigma_an_bound_attained;
    std::vector<std::string> branch_notes;
    bool operator==(const QFactorialityRecord&) const = default;
};

ExtInt lcdef_sigma(const SecantLinesContext& ctx);
LocalCohomologyRecord local_cohomology_weights(const SecantLinesContext& ctx, int j);
std::vector<std::pair<int, HodgeStructure>> rhm_defect_object(const SecantLinesContext& ctx);
InvariantReport singularity_invariants(const SecantLinesContext& ctx);
// (Hodge-Lyubeznik numbers, intersection Hodge-Lyubeznik numbers) at a point of Y.
std::pair<HLTable, HLTable> hl_numbers(const SecantLinesContext& ctx);
GenerationLevels generation_levels(const SecantLinesContext& ctx);
// IH^j(Sigma) for j <= dim Sigma is
//   sum_{l=1}^{m} H^{j-2l}(Y)(-l) + sum_{ceil(j/2) < l <= min(j,n)} P_l (x) H^{j-l}(Y) + Q_j,
// m = n for n >= 2 and m = 0 for curves; Q_j by j mod 4. Above dim Sigma by
// Poincare duality. The l = n Tate term (nonzero only for j in {2n, 2n+1})
// comes from the exceptional divisor of Hilb^2(Y), which is a P^{n-1}-bundle;
// without it the decomposition theorem for P -> Sigma does not balance.
HodgeStructure ih_secant(const SecantLinesContext& ctx, int j);
// The same sum with l running only to n - 1; kept for comparison.
HodgeStructure ih_secant_as_displayed(const SecantLinesContext& ctx, int j);
CohomologyTable ih_secant_table(const SecantLinesContext& ctx);
CohomologyTable sing_cohomology_secant(const SecantLinesContext& ctx);
// Throws MissingInputError when h11_rational is needed and absent.
QFactorialityRecord q_factoriality(const SecantLinesContext& ctx);

} // namespace secant_hodge

#endif
