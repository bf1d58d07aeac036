#ifndef SECANT_HODGE_SECANT_CURVES_HPP
#define SECANT_HODGE_SECANT_CURVES_HPP

#include "secant_hodge/cohomology_table.hpp"
#include "secant_hodge/extended_int.hpp"
#include "secant_hodge/schur.hpp"
#include "secant_hodge/secant_lines.hpp"

#include <optional>
#include <string>
#include <vector>

namespace secant_hodge {

/*
 * Higher secant variety sigma_k of a smooth projective curve C of genus g
 * under a (2k-1)-very ample embedding with sigma_k != P^N; dim sigma_k = 2k-1.
 * q_k = N - (2k-1) is the codimension when N is known.
 */
struct SecantCurveContext {
    int g = 0;
    int k = 2;
    std::optional<int> ambient_dim;

    SecantCurveContext(int genus, int order, std::optional<int> N = std::nullopt);

    int dim_sigma() const { return 2 * k - 1; }
    std::optional<int> codim() const;
};

struct ICWeightPiece {
    int l = 0;                 // Gr^W_{2k-1-l}
    HodgeStructure fiber;      // Sym^l H^1(C), ordinary symmetric power
    int support_order = 0;     // supported on sigma_{k-l}
    std::optional<int> twist;  // -(q_k + l) on the dual local cohomology slice, when N is known
    bool operator==(const ICWeightPiece&) const = default;
};

struct ICWeightReport {
    std::vector<ICWeightPiece> pieces; // zero pieces omitted
    int lcdef = 0;
    bool perverse = true;
    bool rational_homology_manifold = false;
    bool operator==(const ICWeightReport&) const = default;
};

// Summand of the singular cohomology in position (j, w), with its source.
struct CurveSummand {
    int j = 0;
    int w = 0;
    std::string branch;
    std::optional<HookPartition> hook; // absent for Tate classes and Sym^k
    int twist = 0;                     // S(twist) = tate_twist(S, twist)
    HodgeStructure value;
    bool operator==(const CurveSummand&) const = default;
};

struct VanishingReport {
    int gl_bound = 0;
    int q_k = 0;
    int i_min = 0; // R^{q_k - 1 + i} f_* Omega^{N - i}(log E) = 0 for i >= i_min
    int N = 0;
    std::string statement;
    bool operator==(const VanishingReport&) const = default;
};

struct CurveQFactoriality {
    bool rational_homology_manifold = false;
    ExtInt sigma;       // Q-factoriality defect, assuming sigma_k normal
    bool q_factorial = false;
    bool locally_analytically_q_factorial = false;
    bool operator==(const CurveQFactoriality&) const = default;
};

struct SupportPoint {
    int k = 0;
    int j = 0;
    int w = 0;
    Count dim = 0;
    auto operator<=>(const SupportPoint&) const = default;
};

ICWeightReport ic_weight_graded(const SecantCurveContext& ctx);
HodgeStructure ih_higher_secant(const SecantCurveContext& ctx, int p);
CohomologyTable ih_higher_secant_table(const SecantCurveContext& ctx);
// Every nonzero summand of the closed form, sorted by (j, w, branch).
std::vector<CurveSummand> sing_cohomology_summands(const SecantCurveContext& ctx);
CohomologyTable sing_cohomology_higher(const SecantCurveContext& ctx);
// Intersection Hodge-Lyubeznik numbers at a point of sigma_a minus sigma_{a-1}.
// Throws ParameterError for g = 0 (sigma_k is then rationally smooth) or a
// outside [1, k-1].
HLTable ihl_numbers(const SecantCurveContext& ctx, int a);
int gl_bound(const SecantCurveContext& ctx);
// Needs N; throws MissingInputError otherwise.
VanishingReport vanishing_report(const SecantCurveContext& ctx);
CurveQFactoriality q_factoriality_curve(const SecantCurveContext& ctx);
// (k, j, w, dim Gr^W_w H^j(sigma_k)) for 2 <= k <= k_max, sorted.
std::vector<SupportPoint> support_plot(int g, int k_max);

} // namespace secant_hodge

#endif
