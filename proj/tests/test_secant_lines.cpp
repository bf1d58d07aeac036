#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "secant_hodge/builders.hpp"
#include "secant_hodge/oracles.hpp"
#include "secant_hodge/secant_lines.hpp"

using namespace secant_hodge;

namespace {

// E x P^2, the simplest threefold with h01 != 0.
HodgeDiamond elliptic_times_plane() {
    return HodgeDiamond(3, {{1, 1, 0, 0}, {1, 2, 1, 0}, {0, 1, 2, 1}, {0, 0, 1, 1}});
}

std::vector<HodgeDiamond> diamonds() {
    return {HodgeDiamond::projective_space(1), HodgeDiamond::projective_space(2), HodgeDiamond::projective_space(3),
            HodgeDiamond::k3(),                HodgeDiamond::abelian_surface(),   HodgeDiamond::curve(1),
            HodgeDiamond::curve(2),            HodgeDiamond::curve(3),            elliptic_times_plane()};
}

std::vector<Count> dims(const CohomologyTable& t, int from, int to) {
    std::vector<Count> v;
    for (int j = from; j <= to; ++j) v.push_back(t.betti(j));
    return v;
}

} // namespace

TEST_CASE("context validation") {
    CHECK_THROWS_AS(SecantLinesContext(HodgeDiamond::point()), ParameterError);
    CHECK_THROWS_AS(SecantLinesContext(HodgeDiamond::projective_space(2), 5), ParameterError);
    CHECK_NOTHROW(SecantLinesContext(HodgeDiamond::projective_space(2), 6));
    CHECK_THROWS_AS(SecantLinesContext(HodgeDiamond::projective_space(2), std::nullopt, std::nullopt, 2), ParameterError);
    CHECK(SecantLinesContext(HodgeDiamond::projective_space(2), 9).codim() == 4);
}

TEST_CASE("lcdef") {
    CHECK(lcdef_sigma(SecantLinesContext(HodgeDiamond::projective_space(2))) == ExtInt(0));
    CHECK(lcdef_sigma(SecantLinesContext(elliptic_times_plane())) == ExtInt(2));
    CHECK(lcdef_sigma(SecantLinesContext(HodgeDiamond::projective_space(3))) == ExtInt(1));
    for (int g = 0; g <= 4; ++g) CHECK(lcdef_sigma(SecantLinesContext(HodgeDiamond::curve(g))) == ExtInt(0));
}

TEST_CASE("local cohomology slices") {
    for (int g = 0; g <= 3; ++g) {
        const SecantLinesContext ctx(HodgeDiamond::curve(g), 8);
        const LocalCohomologyRecord r = local_cohomology_weights(ctx, 0);
        REQUIRE(r.slices.size() == 2);
        CHECK(r.slices[0].fiber.intrinsic == h1_curve(g));
        CHECK(r.slices[0].fiber.intrinsic.dim() == 2 * g);
        const int q = 8 - 3;
        CHECK(r.slices[0].fiber.resolved == tate_twist(h1_curve(g), -(q + 1)));
        CHECK(r.slices[0].weight == 8 + q + 1);
        CHECK(r.slices[1].role == "IC");
        CHECK(r.slices[1].weight == 8 + q);
    }
    const SecantLinesContext three(elliptic_times_plane(), 10);
    const LocalCohomologyRecord r2 = local_cohomology_weights(three, 2);
    REQUIRE(r2.slices.size() == 1);
    CHECK(r2.slices[0].fiber.intrinsic == h1_curve(1));
    CHECK(r2.slices[0].fiber.resolved == tate_twist(h1_curve(1), -((10 - 7) + 3)));
    CHECK(r2.slices[0].trivial_monodromy);
    // above lcdef: the zero module, with a note
    const LocalCohomologyRecord r3 = local_cohomology_weights(three, 3);
    CHECK(r3.slices.empty());
    CHECK_FALSE(r3.note.empty());
    CHECK_THROWS_AS(local_cohomology_weights(three, -1), ParameterError);
    // symbolic q without N
    const LocalCohomologyRecord sym = local_cohomology_weights(SecantLinesContext(elliptic_times_plane()), 1);
    CHECK(sym.slices[0].fiber.q_coeff == 1);
    CHECK(sym.slices[0].fiber.const_part == 2);
    CHECK_FALSE(sym.slices[0].fiber.resolved.has_value());
}

TEST_CASE("RHM defect object") {
    CHECK(rhm_defect_object(SecantLinesContext(HodgeDiamond::projective_space(1))).empty());
    const auto p2 = rhm_defect_object(SecantLinesContext(HodgeDiamond::projective_space(2)));
    REQUIRE(p2.size() == 2);
    CHECK(p2[0] == std::pair<int, HodgeStructure>{0, HodgeStructure{{{1, 1}, 1}}});
    CHECK(p2[1].first == 1);
    CHECK(p2[1].second.empty());
    for (int g = 1; g <= 3; ++g) {
        const auto c = rhm_defect_object(SecantLinesContext(HodgeDiamond::curve(g)));
        REQUIRE(c.size() == 1);
        CHECK(c[0].second.dim() == 2 * g);
    }
}

TEST_CASE("singularity invariants") {
    const InvariantReport p2 = singularity_invariants(SecantLinesContext(HodgeDiamond::projective_space(2)));
    CHECK(p2.c == ExtInt::inf());
    CHECK(p2.hrh == ExtInt(0));
    CHECK(p2.w == ExtInt(0));
    CHECK(singularity_invariants(SecantLinesContext(HodgeDiamond::projective_space(1))).hrh == ExtInt::inf());
    const InvariantReport k3 = singularity_invariants(SecantLinesContext(HodgeDiamond::k3()));
    CHECK(k3.c == ExtInt::inf());
    CHECK(k3.hrh == ExtInt(-1));
    // w = mu^n_prim - 1 = -1; the only value compatible with HRH = min(c, w)
    CHECK(k3.w == ExtInt(-1));
    CHECK(singularity_invariants(SecantLinesContext(HodgeDiamond::projective_space(3))).c == ExtInt(0));
    CHECK(singularity_invariants(SecantLinesContext(elliptic_times_plane())).c == ExtInt(-1));
    for (const auto& d : diamonds()) {
        const InvariantReport r = singularity_invariants(SecantLinesContext(d, std::nullopt, 1));
        CAPTURE(d.dim());
        CHECK(r.hrh <= r.c);
        CHECK((r.hrh >= ExtInt(0)) == (min(r.c, r.w) >= ExtInt(0)));
        CHECK(r.hrh == min(r.c, r.w));
        CHECK_FALSE(r.branch_notes.empty());
    }
}

TEST_CASE("Hodge-Lyubeznik numbers") {
    const auto [p1l, p1i] = hl_numbers(SecantLinesContext(HodgeDiamond::projective_space(1)));
    CHECK(p1l.entries.empty());
    CHECK(p1i.entries.empty());
    CHECK(p1l.rationally_smooth);

    const auto [p2l, p2i] = hl_numbers(SecantLinesContext(HodgeDiamond::projective_space(2)));
    CHECK(p2i.at(3, std::nullopt, -1, -1) == 1);
    for (const auto& e : p2l.entries) CHECK(e.u + e.v == e.r - 5);

    for (int g = 1; g <= 4; ++g) {
        const auto [l, i] = hl_numbers(SecantLinesContext(HodgeDiamond::curve(g)));
        CHECK(i.at(2, std::nullopt, -1, 0) == g);
        CHECK(i.at(2, std::nullopt, 0, -1) == g);
        CHECK(i.at(3, std::nullopt, 0, 0) == 1);
        CHECK(l.at(3, 3, 0, 0) == 1);
    }

    // K3: s = n + 3 = dim Sigma, so the (-1,-1) value 1 + 19 sits at r = dim Sigma - 2
    const auto [kl, ki] = hl_numbers(SecantLinesContext(HodgeDiamond::k3()));
    CHECK(ki.at(3, std::nullopt, -1, -1) == 20);
    CHECK(kl.at(5, 5, -1, -1) == 0);
    CHECK(kl.at(4, 5, 0, -1) == 0);
    CHECK(ki.at(3, std::nullopt, -2, 0) == 1);
    CHECK(ki.at(3, std::nullopt, 0, -2) == 1);
    CHECK(ki.at(5, std::nullopt, 0, 0) == 1);
    CHECK(kl.entries.size() == 1);
    CHECK(kl.at(5, 5, 0, 0) == 1);

    // entries are sorted and nonzero
    for (const auto& d : diamonds()) {
        const auto [l, i] = hl_numbers(SecantLinesContext(d));
        for (const auto* t : {&l, &i}) {
            for (const auto& e : t->entries) CHECK(e.value > 0);
            for (std::size_t k = 1; k < t->entries.size(); ++k) {
                const auto& a = t->entries[k - 1];
                const auto& b = t->entries[k];
                CHECK(std::tuple(a.r, a.s.value_or(-1), a.u, a.v) < std::tuple(b.r, b.s.value_or(-1), b.u, b.v));
            }
        }
    }
}

TEST_CASE("generation levels") {
    const GenerationLevels p2 =
        generation_levels(SecantLinesContext(HodgeDiamond::projective_space(2), std::nullopt, std::nullopt, 1));
    CHECK(p2.ic_exact == ExtInt(0));
    CHECK(p2.hq_exact == ExtInt(1));
    CHECK(p2.hq_upper_bound == 2);
    CHECK(generation_levels(SecantLinesContext(HodgeDiamond::projective_space(1))).top_weight_slice == ExtInt::neg_inf());
    CHECK(generation_levels(SecantLinesContext(HodgeDiamond::k3())).top_weight_slice == ExtInt(2));
    CHECK(generation_levels(SecantLinesContext(HodgeDiamond::abelian_surface())).top_weight_slice == ExtInt(2));
    const GenerationLevels none = generation_levels(SecantLinesContext(HodgeDiamond::k3()));
    CHECK_FALSE(none.ic_exact.has_value());
    CHECK_FALSE(none.ic_upper_bound.has_value());
    const GenerationLevels e3 = generation_levels(SecantLinesContext(elliptic_times_plane()));
    REQUIRE(e3.higher.size() == 2);
    CHECK(e3.higher[0] == std::pair<int, ExtInt>{1, ExtInt(1)});
    CHECK(e3.higher[1] == std::pair<int, ExtInt>{2, ExtInt(1)});
}

TEST_CASE("intersection cohomology") {
    const SecantLinesContext p2(HodgeDiamond::projective_space(2));
    CHECK(ih_secant(p2, 0) == HodgeStructure{{{0, 0}, 1}});
    CHECK(ih_secant(p2, 2) == HodgeStructure{{{1, 1}, 2}});
    for (int g = 0; g <= 4; ++g) {
        const SecantLinesContext c(HodgeDiamond::curve(g));
        CHECK(ih_secant(c, 2) == direct_sum(HodgeStructure::tate(1), wedge2(h1_curve(g))));
        CHECK(ih_secant(c, 2).dim() == 1 + g * (2 * g - 1));
        CHECK(ih_secant(c, 3) == tate_twist(h1_curve(g), -1));
    }
    for (const auto& d : diamonds()) {
        const SecantLinesContext ctx(d);
        CAPTURE(d.dim());
        CHECK(duality_lefschetz_check(ih_secant_table(ctx), ctx.dim_sigma()).ok);
        CHECK_THROWS(ih_secant(ctx, -1));
        CHECK_THROWS(ih_secant(ctx, 2 * ctx.dim_sigma() + 1));
        // the two forms differ only by the l = n Tate term, in degrees 2n and 2n + 1
        for (int j = 0; j <= ctx.dim_sigma(); ++j) {
            HodgeStructure extra;
            if (d.dim() >= 2 && (j == 2 * d.dim() || j == 2 * d.dim() + 1))
                extra = tate_twist(from_diamond(d).at(j - 2 * d.dim()), -d.dim());
            CHECK(ih_secant(ctx, j) == direct_sum(ih_secant_as_displayed(ctx, j), extra));
        }
    }
}

TEST_CASE("singular cohomology") {
    for (const auto& d : diamonds()) {
        const SecantLinesContext ctx(d);
        const CohomologyTable t = sing_cohomology_secant(ctx);
        CAPTURE(d.dim());
        for (const auto& [j, h] : t.entries())
            for (int w : h.weights()) CHECK((j == 0 ? w == 0 : (w == j || w == j - 1)));
        CHECK(t.at(0) == HodgeStructure{{{0, 0}, 1}});
        const int top = 2 * ctx.dim_sigma();
        CHECK(t.at(top) == HodgeStructure::tate(ctx.dim_sigma()));
        CHECK(t.max_degree() == top);
    }
    // the dimension-one table
    for (int g = 0; g <= 3; ++g) {
        const CohomologyTable t = sing_cohomology_secant(SecantLinesContext(HodgeDiamond::curve(g)));
        const HodgeStructure h1 = h1_curve(g);
        CHECK(t.at(0) == HodgeStructure::tate(0));
        CHECK(t.at(1).empty());
        CHECK(t.at(2) == HodgeStructure::tate(1));
        CHECK(t.at(3) == sym2(h1));
        CHECK(t.at(3).dim() == g * (2 * g + 1));
        CHECK(t.at(4) == direct_sum(HodgeStructure::tate(2), tate_twist(wedge2(h1), -1)));
        CHECK(t.at(5) == tate_twist(h1, -2));
        CHECK(t.at(6) == HodgeStructure::tate(3));
    }
    // surfaces: Gr^W_3 H^4 = H^1 (x) P_2
    const HodgeDiamond ab = HodgeDiamond::abelian_surface();
    const CohomologyTable ta = sing_cohomology_secant(SecantLinesContext(ab));
    CHECK(ta.at(4).weight_part(3) == tensor(from_diamond(ab).at(1), primitive_part(ab, 2)));
    // P^2: pure Tate, Euler characteristic 18 - 12 + 3 = 9 from the stratification
    const CohomologyTable tp = sing_cohomology_secant(SecantLinesContext(HodgeDiamond::projective_space(2)));
    CHECK(dims(tp, 0, 10) == std::vector<Count>{1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 1});
    CHECK(tp.euler_characteristic() == 9);
}

TEST_CASE("Q-factoriality") {
    const QFactorialityRecord p2 =
        q_factoriality(SecantLinesContext(HodgeDiamond::projective_space(2), std::nullopt, 1, std::nullopt, true));
    CHECK(p2.sigma == ExtInt(1));
    CHECK(p2.sigma_an_bound == ExtInt(1));
    CHECK(p2.sigma_an_bound_attained == true);
    CHECK_FALSE(p2.q_factorial);
    const QFactorialityRecord p1 = q_factoriality(SecantLinesContext(HodgeDiamond::projective_space(1)));
    CHECK(p1.sigma == ExtInt(0));
    CHECK(p1.q_factorial);
    for (int g = 1; g <= 3; ++g) CHECK(q_factoriality(SecantLinesContext(HodgeDiamond::curve(g))).sigma == ExtInt::inf());
    CHECK_THROWS_AS(q_factoriality(SecantLinesContext(HodgeDiamond::k3())), MissingInputError);
    const QFactorialityRecord k3 =
        q_factoriality(SecantLinesContext(HodgeDiamond::k3(), std::nullopt, 20, std::nullopt, true));
    CHECK(k3.sigma == ExtInt(20));
    CHECK(k3.sigma_an_bound == ExtInt(22));
    CHECK(k3.sigma_an_bound_attained == false);
    // U_2 bound only where h01 = 0
    CHECK_FALSE(q_factoriality(SecantLinesContext(HodgeDiamond::abelian_surface(), std::nullopt, std::nullopt,
                                                  std::nullopt, true))
                    .sigma_an_bound.has_value());
}
