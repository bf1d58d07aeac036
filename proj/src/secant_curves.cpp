#include "secant_hodge/secant_curves.hpp"

#include "secant_hodge/symmetric_products.hpp"

#include <algorithm>
#include <tuple>

namespace secant_hodge {

SecantCurveContext::SecantCurveContext(int genus, int order, std::optional<int> N)
    : g(genus), k(order), ambient_dim(N) {
    if (g < 0) throw ParameterError("genus must be non-negative");
    if (k < 2) throw ParameterError("secant order k must be at least 2");
    if (N && *N < 2 * k) throw ParameterError("N must be at least 2k so that sigma_k is a proper subvariety");
}

std::optional<int> SecantCurveContext::codim() const {
    if (!ambient_dim) return std::nullopt;
    return *ambient_dim - dim_sigma();
}

ICWeightReport ic_weight_graded(const SecantCurveContext& ctx) {
    ICWeightReport r;
    const HodgeStructure h1 = h1_curve(ctx.g);
    for (int l = 0; l <= ctx.k - 1; ++l) {
        HodgeStructure s = sym_power(h1, l);
        if (s.empty()) continue;
        ICWeightPiece piece{l, std::move(s), ctx.k - l, std::nullopt};
        if (auto q = ctx.codim()) piece.twist = -(*q + l);
        r.pieces.push_back(std::move(piece));
    }
    r.rational_homology_manifold = ctx.g == 0;
    return r;
}

HodgeStructure ih_higher_secant(const SecantCurveContext& ctx, int p) {
    const int d = ctx.dim_sigma();
    if (p < 0 || p > 2 * d) throw ParameterError("intersection cohomology degree out of range");
    if (p > d) return tate_twist(ih_higher_secant(ctx, 2 * d - p), -(p - d));
    const HodgeStructure h1 = h1_curve(ctx.g);
    HodgeStructure out;
    for (int i = 0; 2 * i <= p; ++i)
        if (2 * i >= p - ctx.k) out += tate_twist(wedge_power(h1, p - 2 * i), -i);
    return out;
}

CohomologyTable ih_higher_secant_table(const SecantCurveContext& ctx) {
    CohomologyTable t("IH(sigma_" + std::to_string(ctx.k) + ")");
    for (int p = 0; p <= 2 * ctx.dim_sigma(); ++p) t.add(p, ih_higher_secant(ctx, p));
    return t;
}

std::vector<CurveSummand> sing_cohomology_summands(const SecantCurveContext& ctx) {
    const int k = ctx.k;
    const int g = ctx.g;
    std::vector<CurveSummand> out;
    auto push = [&](int j, int w, std::string branch, std::optional<HookPartition> hook, int twist, HodgeStructure v) {
        if (!v.empty()) out.push_back({j, w, std::move(branch), hook, twist, std::move(v)});
    };
    auto schur_twisted = [&](HookPartition h, int twist) { return tate_twist(schur_hook(h, g), twist); };

    for (int j = 0; j <= 4 * k - 2; ++j)
        for (int w = 0; w <= j; ++w) {
            const int twist = 2 * k - j - 1;
            const bool in_band = 3 * k - 2 <= w && w <= 4 * k - 3;
            if (w <= k) {
                if (j == w && j % 2 == 0) push(j, w, "tate", std::nullopt, 0, HodgeStructure::tate(w / 2));
                if (w == k && j == 2 * k - 1) push(j, w, "sym_k", std::nullopt, 0, sym_power(h1_curve(g), k));
                continue;
            }
            if (j == w && j % 2 == 0) push(j, w, "tate", std::nullopt, 0, HodgeStructure::tate(w / 2));
            if (j == w && in_band) {
                const HookPartition h{1, 4 * k - w - 3};
                push(j, w, "wedge", h, twist, schur_twisted(h, twist));
            }
            // 3j/2 - 2k + 3/2 <= w, compared after doubling so no rounding occurs.
            if (j > w && 2 * w >= 3 * j - 4 * k + 3 && w <= 2 * j - 3 * k + 2) {
                const HookPartition h{j - w + 1, 2 * w + 4 * k - 3 * j - 3};
                push(j, w, "hook", h, twist, schur_twisted(h, twist));
            }
        }
    return out;
}

CohomologyTable sing_cohomology_higher(const SecantCurveContext& ctx) {
    CohomologyTable t("H(sigma_" + std::to_string(ctx.k) + ")");
    for (const auto& s : sing_cohomology_summands(ctx)) t.add(s.j, s.value);
    return t;
}

HLTable ihl_numbers(const SecantCurveContext& ctx, int a) {
    if (ctx.g == 0) throw ParameterError("g = 0: sigma_k is a rational homology manifold, no IHL numbers");
    if (a < 1 || a > ctx.k - 1) throw ParameterError("stratum index a must lie in [1, k-1]");
    HLTable t;
    const int top = ctx.dim_sigma();
    for (int r = ctx.k + a - 1; r <= top; ++r) {
        const int m = top - r;
        for (int p = -m; p <= 0; ++p) {
            const int q = -m - p;
            const Count v = checked_mul(binomial(ctx.g, -p), binomial(ctx.g, -q));
            if (v != 0) t.entries.push_back({r, std::nullopt, p, q, v});
        }
    }
    return t;
}

int gl_bound(const SecantCurveContext& ctx) { return ctx.k - 1; }

VanishingReport vanishing_report(const SecantCurveContext& ctx) {
    if (!ctx.ambient_dim) throw MissingInputError("the vanishing statement needs the ambient dimension N");
    VanishingReport r;
    r.gl_bound = gl_bound(ctx);
    r.q_k = *ctx.codim();
    r.i_min = ctx.k;
    r.N = *ctx.ambient_dim;
    r.statement = "R^{" + std::to_string(r.q_k - 1) + "+i} f_* Omega^{" + std::to_string(r.N) +
                  "-i}(log E) = 0 for i >= " + std::to_string(r.i_min);
    return r;
}

CurveQFactoriality q_factoriality_curve(const SecantCurveContext& ctx) {
    CurveQFactoriality r;
    const bool rational = ctx.g == 0;
    r.rational_homology_manifold = rational;
    r.sigma = rational ? ExtInt(0) : ExtInt::inf();
    r.q_factorial = rational;
    r.locally_analytically_q_factorial = rational;
    return r;
}

std::vector<SupportPoint> support_plot(int g, int k_max) {
    if (g < 0) throw ParameterError("genus must be non-negative");
    if (k_max < 2) throw ParameterError("k_max must be at least 2");
    std::vector<SupportPoint> pts;
    for (int k = 2; k <= k_max; ++k) {
        const CohomologyTable t = sing_cohomology_higher(SecantCurveContext(g, k));
        for (const auto& [j, h] : t.entries())
            for (int w : h.weights()) pts.push_back({k, j, w, h.weight_part(w).dim()});
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

} // namespace secant_hodge
