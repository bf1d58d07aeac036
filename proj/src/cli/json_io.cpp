#include "secant_hodge/cli/json_io.hpp"

#include <set>

namespace secant_hodge::cli {

namespace {

template <class T>
Json opt(const std::optional<T>& v) {
    if (!v) return nullptr;
    return to_json(*v);
}

Json opt_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }
std::optional<int> opt_int_from(const Json& j) { return j.is_null() ? std::nullopt : std::optional<int>(j.get<int>()); }

std::optional<ExtInt> opt_ext_from(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return ext_int_from_json(j);
}

TwistedStructure twisted_from_json(const Json& j) {
    TwistedStructure t;
    t.intrinsic = hodge_structure_from_json(j.at("intrinsic"));
    t.q_coeff = j.at("q_coeff").get<int>();
    t.const_part = j.at("const_twist").get<int>();
    if (!j.at("resolved").is_null()) t.resolved = hodge_structure_from_json(j.at("resolved"));
    return t;
}

Json twisted_to_json(const TwistedStructure& t) {
    return Json{{"intrinsic", to_json(t.intrinsic)},
                {"q_coeff", t.q_coeff},
                {"const_twist", t.const_part},
                {"resolved", opt(t.resolved)}};
}

} // namespace

Json to_json(const ExtInt& x) {
    if (x.is_finite()) return x.value();
    return x.to_string();
}

ExtInt ext_int_from_json(const Json& j) {
    if (j.is_number_integer()) return ExtInt(j.get<std::int64_t>());
    if (j.is_string()) {
        if (auto v = ExtInt::parse(j.get<std::string>())) return *v;
    }
    throw SchemaError("extended integer", "expected an integer, \"inf\" or \"-inf\"");
}

Json to_json(const HodgeStructure& h) {
    Json a = Json::array();
    for (const auto& [b, m] : h.classes()) a.push_back(Json::array({b.first, b.second, m}));
    return a;
}

HodgeStructure hodge_structure_from_json(const Json& j) {
    HodgeStructure h;
    for (const auto& c : j) h.add(c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<Count>());
    return h;
}

Json to_json(const CohomologyTable& t) {
    Json a = Json::array();
    for (const auto& [deg, h] : t.entries()) a.push_back(Json{{"degree", deg}, {"classes", to_json(h)}});
    return a;
}

CohomologyTable cohomology_table_from_json(const Json& j) {
    CohomologyTable t;
    for (const auto& e : j) t.add(e.at("degree").get<int>(), hodge_structure_from_json(e.at("classes")));
    return t;
}

Json to_json(const HLTable& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries) {
        Json x{{"r", e.r}, {"u", e.u}, {"v", e.v}, {"value", e.value}};
        if (e.s) x["s"] = *e.s;
        entries.push_back(std::move(x));
    }
    return Json{{"entries", entries}, {"rationally_smooth", t.rationally_smooth}};
}

HLTable hl_table_from_json(const Json& j) {
    HLTable t;
    t.rationally_smooth = j.at("rationally_smooth").get<bool>();
    for (const auto& e : j.at("entries")) {
        HLEntry x{e.at("r").get<int>(), std::nullopt, e.at("u").get<int>(), e.at("v").get<int>(), e.at("value").get<Count>()};
        if (e.contains("s")) x.s = e.at("s").get<int>();
        t.entries.push_back(x);
    }
    return t;
}

Json to_json(const InvariantReport& r) {
    return Json{{"lcdef", to_json(r.lcdef)},
                {"c", to_json(r.c)},
                {"hrh", to_json(r.hrh)},
                {"w", to_json(r.w)},
                {"sigma_defect", opt(r.sigma_defect)},
                {"sigma_an_bound", opt(r.sigma_an_bound)},
                {"branch_notes", r.branch_notes}};
}

InvariantReport invariant_report_from_json(const Json& j) {
    InvariantReport r;
    r.lcdef = ext_int_from_json(j.at("lcdef"));
    r.c = ext_int_from_json(j.at("c"));
    r.hrh = ext_int_from_json(j.at("hrh"));
    r.w = ext_int_from_json(j.at("w"));
    r.sigma_defect = opt_ext_from(j.at("sigma_defect"));
    r.sigma_an_bound = opt_ext_from(j.at("sigma_an_bound"));
    r.branch_notes = j.at("branch_notes").get<std::vector<std::string>>();
    return r;
}

Json to_json(const GenerationLevels& g) {
    Json higher = Json::array();
    for (const auto& [j, v] : g.higher) higher.push_back(Json{{"j", j}, {"gl", to_json(v)}});
    return Json{{"higher", higher},
                {"top_weight_slice", to_json(g.top_weight_slice)},
                {"hq_upper_bound", g.hq_upper_bound},
                {"ic_upper_bound", opt(g.ic_upper_bound)},
                {"ic_exact", opt(g.ic_exact)},
                {"hq_exact", opt(g.hq_exact)},
                {"branch_notes", g.branch_notes}};
}

GenerationLevels generation_levels_from_json(const Json& j) {
    GenerationLevels g;
    for (const auto& e : j.at("higher")) g.higher.emplace_back(e.at("j").get<int>(), ext_int_from_json(e.at("gl")));
    g.top_weight_slice = ext_int_from_json(j.at("top_weight_slice"));
    g.hq_upper_bound = j.at("hq_upper_bound").get<int>();
    g.ic_upper_bound = opt_ext_from(j.at("ic_upper_bound"));
    g.ic_exact = opt_ext_from(j.at("ic_exact"));
    g.hq_exact = opt_ext_from(j.at("hq_exact"));
    g.branch_notes = j.at("branch_notes").get<std::vector<std::string>>();
    return g;
}

Json to_json(const QFactorialityRecord& q) {
    return Json{{"sigma", to_json(q.sigma)},
                {"q_factorial", q.q_factorial},
                {"factorial", q.factorial},
                {"sigma_an_bound", opt(q.sigma_an_bound)},
                {"sigma_an_bound_attained", q.sigma_an_bound_attained ? Json(*q.sigma_an_bound_attained) : Json(nullptr)},
                {"branch_notes", q.branch_notes}};
}

QFactorialityRecord q_factoriality_from_json(const Json& j) {
    QFactorialityRecord q;
    q.sigma = ext_int_from_json(j.at("sigma"));
    q.q_factorial = j.at("q_factorial").get<bool>();
    q.factorial = j.at("factorial").get<bool>();
    q.sigma_an_bound = opt_ext_from(j.at("sigma_an_bound"));
    if (!j.at("sigma_an_bound_attained").is_null()) q.sigma_an_bound_attained = j.at("sigma_an_bound_attained").get<bool>();
    q.branch_notes = j.at("branch_notes").get<std::vector<std::string>>();
    return q;
}

Json to_json(const LocalCohomologyRecord& r) {
    Json slices = Json::array();
    for (const auto& s : r.slices)
        slices.push_back(Json{{"role", s.role},
                              {"weight_q_coeff", s.weight_q_coeff},
                              {"weight_const", s.weight_const},
                              {"weight", opt_int(s.weight)},
                              {"fiber", twisted_to_json(s.fiber)},
                              {"trivial_monodromy", s.trivial_monodromy}});
    return Json{{"j", r.j}, {"slices", slices}, {"note", r.note}};
}

LocalCohomologyRecord local_cohomology_from_json(const Json& j) {
    LocalCohomologyRecord r;
    r.j = j.at("j").get<int>();
    r.note = j.at("note").get<std::string>();
    for (const auto& s : j.at("slices")) {
        LocalCohomologySlice x;
        x.role = s.at("role").get<std::string>();
        x.weight_q_coeff = s.at("weight_q_coeff").get<int>();
        x.weight_const = s.at("weight_const").get<int>();
        x.weight = opt_int_from(s.at("weight"));
        x.fiber = twisted_from_json(s.at("fiber"));
        x.trivial_monodromy = s.at("trivial_monodromy").get<bool>();
        r.slices.push_back(std::move(x));
    }
    return r;
}

Json to_json(const ICWeightReport& r) {
    Json pieces = Json::array();
    for (const auto& p : r.pieces)
        pieces.push_back(Json{{"l", p.l}, {"fiber", to_json(p.fiber)}, {"support_order", p.support_order}, {"twist", opt_int(p.twist)}});
    return Json{{"pieces", pieces},
                {"lcdef", r.lcdef},
                {"perverse", r.perverse},
                {"rational_homology_manifold", r.rational_homology_manifold}};
}

ICWeightReport ic_weight_report_from_json(const Json& j) {
    ICWeightReport r;
    for (const auto& p : j.at("pieces"))
        r.pieces.push_back({p.at("l").get<int>(), hodge_structure_from_json(p.at("fiber")), p.at("support_order").get<int>(),
                            opt_int_from(p.at("twist"))});
    r.lcdef = j.at("lcdef").get<int>();
    r.perverse = j.at("perverse").get<bool>();
    r.rational_homology_manifold = j.at("rational_homology_manifold").get<bool>();
    return r;
}

Json to_json(const CurveQFactoriality& q) {
    return Json{{"rational_homology_manifold", q.rational_homology_manifold},
                {"sigma", to_json(q.sigma)},
                {"q_factorial", q.q_factorial},
                {"locally_analytically_q_factorial", q.locally_analytically_q_factorial}};
}

CurveQFactoriality curve_q_factoriality_from_json(const Json& j) {
    CurveQFactoriality q;
    q.rational_homology_manifold = j.at("rational_homology_manifold").get<bool>();
    q.sigma = ext_int_from_json(j.at("sigma"));
    q.q_factorial = j.at("q_factorial").get<bool>();
    q.locally_analytically_q_factorial = j.at("locally_analytically_q_factorial").get<bool>();
    return q;
}

Json to_json(const CurveSummand& s) {
    Json hook = nullptr;
    if (s.hook) hook = Json{{"arm", s.hook->arm}, {"leg", s.hook->leg}};
    return Json{{"j", s.j}, {"w", s.w}, {"branch", s.branch}, {"hook", hook}, {"twist", s.twist}, {"value", to_json(s.value)}};
}

CurveSummand curve_summand_from_json(const Json& j) {
    CurveSummand s;
    s.j = j.at("j").get<int>();
    s.w = j.at("w").get<int>();
    s.branch = j.at("branch").get<std::string>();
    if (!j.at("hook").is_null()) s.hook = HookPartition{j.at("hook").at("arm").get<int>(), j.at("hook").at("leg").get<int>()};
    s.twist = j.at("twist").get<int>();
    s.value = hodge_structure_from_json(j.at("value"));
    return s;
}

Json to_json(const VanishingReport& v) {
    return Json{{"gl_bound", v.gl_bound}, {"q_k", v.q_k}, {"i_min", v.i_min}, {"N", v.N}, {"statement", v.statement}};
}

VanishingReport vanishing_report_from_json(const Json& j) {
    return {j.at("gl_bound").get<int>(), j.at("q_k").get<int>(), j.at("i_min").get<int>(), j.at("N").get<int>(),
            j.at("statement").get<std::string>()};
}

SecantLinesContext lines_context_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("schema", "diamond document must be a JSON object");
    static const std::set<std::string> known{"dim", "h", "N", "h11_rational", "flags"};
    for (const auto& [key, unused] : j.items())
        if (!known.count(key)) throw SchemaError("schema", "unknown key \"" + key + "\"");

    if (!j.contains("dim") || !j["dim"].is_number_integer()) throw SchemaError("schema", "\"dim\" must be an integer");
    const auto dim = j["dim"].get<std::int64_t>();
    if (dim < 1 || dim > 64) throw SchemaError("dimension", "\"dim\" must lie in [1, 64]");
    if (!j.contains("h") || !j["h"].is_array()) throw SchemaError("schema", "\"h\" must be an array of rows");
    std::vector<std::vector<Count>> rows;
    for (const auto& row : j["h"]) {
        if (!row.is_array()) throw SchemaError("schema", "each row of \"h\" must be an array");
        std::vector<Count> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw SchemaError("schema", "Hodge numbers must be integers");
            r.push_back(x.get<Count>());
        }
        rows.push_back(std::move(r));
    }

    std::optional<int> N;
    if (j.contains("N") && !j["N"].is_null()) {
        if (!j["N"].is_number_integer()) throw SchemaError("schema", "\"N\" must be an integer");
        N = j["N"].get<int>();
    }
    std::optional<Count> h11q;
    if (j.contains("h11_rational") && !j["h11_rational"].is_null()) {
        if (!j["h11_rational"].is_number_integer()) throw SchemaError("schema", "\"h11_rational\" must be an integer");
        h11q = j["h11_rational"].get<Count>();
    }
    std::optional<int> qprime;
    bool u2 = false;
    if (j.contains("flags")) {
        const Json& f = j["flags"];
        if (!f.is_object()) throw SchemaError("schema", "\"flags\" must be an object");
        for (const auto& [key, unused] : f.items())
            if (key != "qprime" && key != "u2") throw SchemaError("schema", "unknown flag \"" + key + "\"");
        if (f.contains("qprime") && !f["qprime"].is_null()) {
            if (!f["qprime"].is_number_integer()) throw SchemaError("schema", "\"flags.qprime\" must be an integer or null");
            qprime = f["qprime"].get<int>();
        }
        if (f.contains("u2")) {
            if (!f["u2"].is_boolean()) throw SchemaError("schema", "\"flags.u2\" must be a boolean");
            u2 = f["u2"].get<bool>();
        }
    }
    return SecantLinesContext(HodgeDiamond(static_cast<int>(dim), std::move(rows)), N, h11q, qprime, u2);
}

Json to_json(const SecantLinesContext& ctx) {
    Json j{{"dim", ctx.n()}, {"h", ctx.diamond.rows()}};
    if (ctx.ambient_dim) j["N"] = *ctx.ambient_dim;
    if (ctx.h11_rational) j["h11_rational"] = *ctx.h11_rational;
    j["flags"] = Json{{"qprime", opt_int(ctx.qprime)}, {"u2", ctx.u2}};
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace secant_hodge::cli
