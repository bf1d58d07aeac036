#include "secant_hodge/secant_lines.hpp"

#include "secant_hodge/builders.hpp"

#include <algorithm>
#include <tuple>

namespace secant_hodge {

SecantLinesContext::SecantLinesContext(HodgeDiamond d, std::optional<int> N, std::optional<Count> h11q,
                                       std::optional<int> qprime_p, bool u2_flag)
    : diamond(std::move(d)), ambient_dim(N), h11_rational(h11q), qprime(qprime_p), u2(u2_flag) {
    if (diamond.dim() < 1) throw ParameterError("secant varieties of lines need dim Y >= 1");
    if (N && *N < 2 * diamond.dim() + 2)
        throw ParameterError("N must be at least 2 dim Y + 2 so that Sigma is a proper subvariety");
    if (h11q && *h11q < 0) throw ParameterError("h11_rational must be non-negative");
    if (qprime && (*qprime < 0 || *qprime > diamond.dim() - 1))
        throw ParameterError("qprime must lie in [0, dim Y - 1]");
}

std::optional<int> SecantLinesContext::codim() const {
    if (!ambient_dim) return std::nullopt;
    return *ambient_dim - dim_sigma();
}

namespace {

bool h0i_vanish(const HodgeDiamond& d, int from, int to) {
    for (int i = from; i <= to; ++i)
        if (d.h(0, i) != 0) return false;
    return true;
}

TwistedStructure twisted(const SecantLinesContext& ctx, HodgeStructure h, int q_coeff, int const_part) {
    TwistedStructure t{std::move(h), q_coeff, const_part, std::nullopt};
    if (auto q = ctx.codim()) t.resolved = tate_twist(t.intrinsic, -(q_coeff * *q + const_part));
    return t;
}

} // namespace

ExtInt lcdef_sigma(const SecantLinesContext& ctx) {
    const int n = ctx.n();
    if (n == 1) return 0;
    return ctx.diamond.h(0, 1) != 0 ? n - 1 : n - 2;
}

LocalCohomologyRecord local_cohomology_weights(const SecantLinesContext& ctx, int j) {
    if (j < 0) throw ParameterError("local cohomology index j must be non-negative");
    const int n = ctx.n();
    LocalCohomologyRecord rec{j, {}, {}};
    if (ExtInt(j) > lcdef_sigma(ctx)) {
        rec.note = "j > lcdef: the local cohomology module vanishes";
        return rec;
    }
    if (j > 0) {
        LocalCohomologySlice s;
        s.role = "local_system";
        s.fiber = twisted(ctx, blowup_primitive(ctx.diamond, n - j), 1, j + 1);
        rec.slices.push_back(std::move(s));
        return rec;
    }
    LocalCohomologySlice top;
    top.role = "local_system";
    top.weight_q_coeff = 1;
    top.weight_const = 1;
    top.fiber = twisted(ctx, blowup_primitive(ctx.diamond, n), 1, 1);
    LocalCohomologySlice ic;
    ic.role = "IC";
    ic.weight_q_coeff = 1;
    ic.weight_const = 0;
    ic.trivial_monodromy = false;
    if (auto q = ctx.codim()) {
        top.weight = *ctx.ambient_dim + *q + 1;
        ic.weight = *ctx.ambient_dim + *q;
    }
    rec.slices.push_back(std::move(top));
    rec.slices.push_back(std::move(ic));
    return rec;
}

std::vector<std::pair<int, HodgeStructure>> rhm_defect_object(const SecantLinesContext& ctx) {
    const int n = ctx.n();
    std::vector<std::pair<int, HodgeStructure>> out;
    bool all_zero = true;
    for (int l = 0; l <= n - 1; ++l) {
        HodgeStructure v = blowup_primitive(ctx.diamond, n - l);
        all_zero = all_zero && v.empty();
        out.emplace_back(l, std::move(v));
    }
    if (all_zero) out.clear(); // only for Y = P^1
    return out;
}

InvariantReport singularity_invariants(const SecantLinesContext& ctx) {
    const HodgeDiamond& d = ctx.diamond;
    const int n = ctx.n();
    InvariantReport r;
    r.lcdef = lcdef_sigma(ctx);
    r.branch_notes.push_back(n == 1 ? "lcdef: dim Y = 1" : (d.h(0, 1) != 0 ? "lcdef: h01 != 0" : "lcdef: h01 = 0"));

    if (n == 1 || (n == 2 && d.h(0, 1) == 0)) {
        r.c = ExtInt::inf();
        r.branch_notes.push_back(n == 1 ? "c: dim Y = 1" : "c: dim Y = 2 and h01 = 0");
    } else if (n >= 3 && h0i_vanish(d, 1, n - 1)) {
        r.c = 0;
        r.branch_notes.push_back("c: dim Y >= 3 and h0i = 0 for 0 < i < n");
    } else {
        r.c = -1;
        r.branch_notes.push_back("c: otherwise");
    }

    if (d.is_projective_line()) {
        r.hrh = ExtInt::inf();
        r.branch_notes.push_back("HRH: Y = P^1");
    } else if (n >= 2 && h0i_vanish(d, 1, n)) {
        r.hrh = 0;
        r.branch_notes.push_back("HRH: dim Y >= 2 and h0i = 0 for i > 0");
    } else {
        r.hrh = -1;
        r.branch_notes.push_back("HRH: otherwise");
    }

    const HodgeStructure pn = primitive_part(d, n);
    if (!pn.empty()) {
        // n - 1 - (largest p with P_n nonzero at (p, n-p)); by Hodge symmetry
        // this is mu^n_prim - 1, negative exactly when H^n(O_Y) != 0.
        r.w = mu_prim(d, n) - 1;
        r.branch_notes.push_back("w: top primitive part nonzero");
    } else if (n != 2) {
        r.w = ExtInt::inf();
        r.branch_notes.push_back("w: top primitive part zero, dim Y != 2");
    } else {
        r.w = 0;
        r.branch_notes.push_back("w: top primitive part zero, dim Y = 2");
    }

    try {
        QFactorialityRecord qf = q_factoriality(ctx);
        r.sigma_defect = qf.sigma;
        r.sigma_an_bound = qf.sigma_an_bound;
    } catch (const MissingInputError&) {
        r.branch_notes.push_back("sigma: needs h11_rational");
    }
    return r;
}

Count HLTable::at(int r, std::optional<int> s, int u, int v) const {
    for (const auto& e : entries)
        if (e.r == r && e.s == s && e.u == u && e.v == v) return e.value;
    return 0;
}

std::pair<HLTable, HLTable> hl_numbers(const SecantLinesContext& ctx) {
    const HodgeDiamond& d = ctx.diamond;
    const int n = ctx.n();
    const int ds = ctx.dim_sigma();
    HLTable lam, ilam;
    if (d.is_projective_line()) {
        lam.rationally_smooth = ilam.rationally_smooth = true;
        return {lam, ilam};
    }
    // Entries come from the primitive cohomology of the blow-up of Y at a
    // point: value at (u,v) is its (-v,-u) Hodge number in degree -u-v.
    auto prim_entries = [&](int m, auto&& emit) {
        const HodgeStructure p = blowup_primitive(d, m);
        for (const auto& [bd, c] : p.classes()) emit(-bd.second, -bd.first, c);
    };
    if (n >= 2) {
        for (int s = n + 2; s < ds; ++s) {
            const int m = s - n - 1; // u + v = -m
            prim_entries(m, [&](int u, int v, Count c) { lam.entries.push_back({ds, s, u, v, c}); });
        }
        for (int r = n + 2; r <= ds; ++r) {
            const int m = ds - r;
            prim_entries(m, [&](int u, int v, Count c) { lam.entries.push_back({r, ds, u, v, c}); });
        }
        for (int r = n + 1; r <= ds; ++r) {
            const int m = ds - r;
            prim_entries(m, [&](int u, int v, Count c) { ilam.entries.push_back({r, std::nullopt, u, v, c}); });
        }
    } else {
        const Count g = d.h(0, 1);
        lam.entries.push_back({3, 3, 0, 0, 1});
        if (g != 0) {
            ilam.entries.push_back({2, std::nullopt, -1, 0, g});
            ilam.entries.push_back({2, std::nullopt, 0, -1, g});
        }
        ilam.entries.push_back({3, std::nullopt, 0, 0, 1});
    }
    auto key = [](const HLEntry& e) { return std::make_tuple(e.r, e.s.value_or(-1), e.u, e.v); };
    for (HLTable* t : {&lam, &ilam})
        std::sort(t->entries.begin(), t->entries.end(), [&](const HLEntry& a, const HLEntry& b) { return key(a) < key(b); });
    return {lam, ilam};
}

GenerationLevels generation_levels(const SecantLinesContext& ctx) {
    const HodgeDiamond& d = ctx.diamond;
    const int n = ctx.n();
    GenerationLevels gl;
    const ExtInt lc = lcdef_sigma(ctx);
    if (n >= 2) {
        for (int j = 1; ExtInt(j) <= lc; ++j) {
            ExtInt v;
            if (j != n - 2) {
                v = (n - j) - mu_prim(d, n - j);
            } else {
                v = d.h(0, 2) != 0 ? 2 : 1;
            }
            gl.higher.emplace_back(j, v);
        }
    }
    if (n >= 3) {
        gl.top_weight_slice = n - mu_prim(d, n);
        gl.branch_notes.push_back("top slice: dim Y >= 3");
    } else if (n == 2) {
        gl.top_weight_slice = d.h(0, 2) != 0 ? 2 : 1;
        gl.branch_notes.push_back(d.h(0, 2) != 0 ? "top slice: dim Y = 2, h02 != 0" : "top slice: dim Y = 2, h02 = 0");
    } else if (d.h(0, 1) != 0) {
        gl.top_weight_slice = 1;
        gl.branch_notes.push_back("top slice: dim Y = 1, g > 0");
    } else {
        gl.top_weight_slice = ExtInt::neg_inf();
        gl.branch_notes.push_back("top slice: Y = P^1, zero module");
    }
    gl.hq_upper_bound = n;
    if (ctx.qprime) {
        const int p = *ctx.qprime;
        gl.ic_upper_bound = ExtInt(n - p - 1);
        gl.branch_notes.push_back("Q'_" + std::to_string(p) + " assumed");
        if (p == n - 1) {
            gl.ic_exact = ExtInt(0);
            if (n >= 3) gl.hq_exact = max(ExtInt(0), n - mu_prim(d, n));
            else if (n == 2) gl.hq_exact = ExtInt(d.h(0, 2) != 0 ? 2 : 1);
            else if (d.h(0, 1) != 0) gl.hq_exact = ExtInt(1);
            else gl.hq_exact = ExtInt(0);
        }
    }
    return gl;
}

namespace {

HodgeStructure ih_lower_half(const SecantLinesContext& ctx, int j, bool with_top_tate) {
    const int n = ctx.n();
    const HodgeDiamond& d = ctx.diamond;
    const CohomologyTable y = from_diamond(d);
    const std::vector<HodgeStructure> prims = primitive_decomposition(d);
    HodgeStructure out;
    const int top = with_top_tate && n >= 2 ? n : n - 1;
    for (int l = 1; l <= top; ++l) out += tate_twist(y.at(j - 2 * l), -l);
    for (int l = (j + 1) / 2 + 1; l <= std::min(j, n); ++l) out += tensor(prims[l], y.at(j - l));
    if (j % 2 == 1) {
        const int k = (j - 1) / 2;
        out += tensor(y.at(k), y.at(k + 1));
    } else if (j % 4 == 0) {
        const int k = j / 4;
        out += tate_twist(wedge2(y.at(2 * k - 1)), -1);
        out += sym2(y.at(2 * k));
    } else {
        const int k = j / 2; // odd
        out += tate_twist(sym2(y.at(k - 1)), -1);
        out += wedge2(y.at(k));
    }
    return out;
}

HodgeStructure ih_with_duality(const SecantLinesContext& ctx, int j, bool with_top_tate) {
    const int ds = ctx.dim_sigma();
    if (j < 0 || j > 2 * ds) throw ParameterError("intersection cohomology degree out of range");
    if (j > ds) return tate_twist(ih_lower_half(ctx, 2 * ds - j, with_top_tate), -(j - ds));
    return ih_lower_half(ctx, j, with_top_tate);
}

} // namespace

HodgeStructure ih_secant(const SecantLinesContext& ctx, int j) { return ih_with_duality(ctx, j, true); }

HodgeStructure ih_secant_as_displayed(const SecantLinesContext& ctx, int j) { return ih_with_duality(ctx, j, false); }

CohomologyTable ih_secant_table(const SecantLinesContext& ctx) {
    CohomologyTable t("IH(Sigma)");
    for (int j = 0; j <= 2 * ctx.dim_sigma(); ++j) t.add(j, ih_secant(ctx, j));
    return t;
}

CohomologyTable sing_cohomology_secant(const SecantLinesContext& ctx) {
    const int n = ctx.n();
    const HodgeDiamond& d = ctx.diamond;
    const CohomologyTable y = from_diamond(d);
    const std::vector<HodgeStructure> P = primitive_decomposition(d);
    CohomologyTable t("H(Sigma)");

    // Place a pure summand of weight w into degree w + 1 (lower) or w (top).
    auto lower = [&](const HodgeStructure& h) {
        for (int w : h.weights()) t.add(w + 1, h.weight_part(w));
    };
    auto top = [&](const HodgeStructure& h) {
        for (int w : h.weights()) t.add(w, h.weight_part(w));
    };

    // Gr^W_{j-1} H^j
    for (int l = 1; l <= n; ++l)
        for (int a = 0; a <= n - l; ++a) {
            if (l % 2 == 1) lower(tate_twist(sym2(P[l]), -a));
            else lower(tate_twist(wedge2(P[l]), -a));
        }
    for (int l1 = 1; l1 <= n; ++l1)
        for (int l2 = l1 + 1; l2 <= n; ++l2)
            for (int a = 0; a <= n - l2; ++a) lower(tate_twist(tensor(P[l1], P[l2]), -a));

    // Gr^W_j H^j
    for (int k = 1; k <= n - 1; ++k)
        for (const auto& [i, h] : y.entries()) top(tate_twist(h, -(k + 1))); // degree i + 2 + 2k
    for (int a = 0; a <= 2 * n + 1; ++a) top(HodgeStructure::tate(a));
    for (int l1 = 0; l1 <= n; ++l1)
        for (int l2 = l1 + 1; l2 <= n; ++l2)
            for (int a = 0; a <= n - l2; ++a) top(tate_twist(tensor(P[l1], P[l2]), l1 - n - a - 1));
    for (int l = 1; l <= n; ++l)
        for (int a = n - l + 1; a <= 2 * (n - l) + 1; ++a) {
            if (l % 2 == 0) top(tate_twist(sym2(P[l]), -a));
            else top(tate_twist(wedge2(P[l]), -a));
        }
    return t;
}

QFactorialityRecord q_factoriality(const SecantLinesContext& ctx) {
    const HodgeDiamond& d = ctx.diamond;
    const int n = ctx.n();
    QFactorialityRecord r;
    if (d.h(0, 1) != 0) {
        r.sigma = ExtInt::inf();
        r.branch_notes.push_back("sigma: h01 != 0");
    } else if (n >= 2) {
        if (!ctx.h11_rational)
            throw MissingInputError("h11_rational is required when dim Y >= 2 and h01 = 0");
        r.sigma = ExtInt(*ctx.h11_rational);
        r.branch_notes.push_back("sigma: dim Y >= 2, h01 = 0, equals h11_rational");
    } else {
        r.sigma = 0;
        r.branch_notes.push_back("sigma: Y = P^1");
    }
    r.q_factorial = d.is_projective_line();
    r.factorial = false;
    if (ctx.u2 && n >= 2 && d.h(0, 1) == 0) {
        r.sigma_an_bound = ExtInt(2 * d.h(0, 2) + d.h(1, 1));
        r.sigma_an_bound_attained = d.h(0, 2) == 0;
        r.branch_notes.push_back("sigma_an: bounded by h2 under U_2");
    }
    return r;
}

} // namespace secant_hodge
