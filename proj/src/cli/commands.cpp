#include "secant_hodge/cli/commands.hpp"

#include "secant_hodge/builders.hpp"
#include "secant_hodge/oracles.hpp"
#include "secant_hodge/schur.hpp"
#include "secant_hodge/symmetric_products.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace secant_hodge::cli {

namespace {

Json hs_pairs(const std::vector<std::pair<int, HodgeStructure>>& v) {
    Json a = Json::array();
    for (const auto& [j, h] : v) a.push_back(Json{{"degree", j}, {"classes", to_json(h)}});
    return a;
}

std::string table_diff(const CohomologyTable& got, const CohomologyTable& want, const std::string& what) {
    std::set<int> degrees;
    for (const auto& [j, h] : got.entries()) degrees.insert(j);
    for (const auto& [j, h] : want.entries()) degrees.insert(j);
    for (int j : degrees)
        if (!(got.at(j) == want.at(j)))
            return what + " differs in degree " + std::to_string(j) + ": " + got.at(j).to_string() + " vs " +
                   want.at(j).to_string();
    return {};
}

// Closed form of H^*(sigma_k); the perturbation adds a weight-0 class to H^1.
CohomologyTable closed_form_curve(int g, int k, bool perturb) {
    CohomologyTable t = sing_cohomology_higher(SecantCurveContext(g, k));
    if (perturb) t.add(1, HodgeStructure::tate(0));
    return t;
}

std::vector<std::pair<std::string, HodgeDiamond>> lines_diamonds(int g_max) {
    std::vector<std::pair<std::string, HodgeDiamond>> v{
        {"P1", HodgeDiamond::projective_space(1)}, {"P2", HodgeDiamond::projective_space(2)},
        {"P3", HodgeDiamond::projective_space(3)}, {"K3", HodgeDiamond::k3()},
        {"abelian_surface", HodgeDiamond::abelian_surface()}};
    for (int g = 0; g <= std::max(g_max, 3); ++g) v.emplace_back("curve_g" + std::to_string(g), HodgeDiamond::curve(g));
    return v;
}

void add_duality(CheckOutcome& c, const CohomologyTable& t, int d) {
    for (const auto& o : duality_lefschetz_check(t, d).offenses)
        c.failures.push_back(o.kind + " fails in degree " + std::to_string(o.j) + " at (" + std::to_string(o.p) + "," +
                             std::to_string(o.q) + ")");
}

CheckOutcome wss_cell(int g, int k, bool perturb) {
    CheckOutcome c{"koszul_oracle", Json{{"g", g}, {"k", k}}, {}};
    const CohomologyTable closed = closed_form_curve(g, k, perturb);
    for (int w = 0; w <= 2 * (2 * k - 1); ++w) {
        const BasedComplex cx = build_wss_complex(g, k, w);
        if (!differentials_square_to_zero(cx)) c.failures.push_back("d1 o d1 != 0 in weight " + std::to_string(w));
        if (!differentials_preserve_tags(cx)) c.failures.push_back("d1 mixes bidegrees in weight " + std::to_string(w));
        for (const auto& [l, h] : complex_cohomology(cx)) {
            const HodgeStructure want = closed.at(w + l).weight_part(w);
            if (!(h == want))
                c.failures.push_back("Gr^W_" + std::to_string(w) + " H^" + std::to_string(w + l) + ": oracle " +
                                     h.to_string() + " vs closed form " + want.to_string());
        }
    }
    // Weights the complexes never reach must be empty in the closed form.
    for (const auto& [j, h] : closed.entries())
        for (int w : h.weights())
            if (w < 0 || w > 2 * (2 * k - 1) || j - w < 0 || j - w > k - 1)
                c.failures.push_back("closed form has Gr^W_" + std::to_string(w) + " H^" + std::to_string(j) +
                                     " outside the spectral sequence range");
    return c;
}

CheckOutcome curve_identities_cell(int g, int k) {
    CheckOutcome c{"curve_identities", Json{{"g", g}, {"k", k}}, {}};
    const ScissorResult s = scissor_check_curves(g, k);
    if (!s.ok) c.failures.push_back("scissor: " + s.detail);
    const IdentityResult ss = semismall_check(g, k);
    for (const auto& m : ss.mismatches) c.failures.push_back("semismall: " + m);
    return c;
}

CheckOutcome cross_module_cell(int g) {
    CheckOutcome c{"cross_module_k2", Json{{"g", g}}, {}};
    const SecantLinesContext lines(HodgeDiamond::curve(g));
    const SecantCurveContext curves(g, 2);
    if (auto d = table_diff(sing_cohomology_higher(curves), sing_cohomology_secant(lines), "mixed table"); !d.empty())
        c.failures.push_back(d);
    if (auto d = table_diff(ih_higher_secant_table(curves), ih_secant_table(lines), "IH table"); !d.empty())
        c.failures.push_back(d);
    return c;
}

CheckOutcome lines_identities_cell(const std::string& name, const HodgeDiamond& y) {
    CheckOutcome c{"lines_identities", Json{{"diamond", name}}, {}};
    const ScissorResult s = scissor_check_lines(y);
    if (!s.ok) c.failures.push_back("scissor: " + s.detail);
    for (const auto& m : decomposition_check_lines(y).mismatches) c.failures.push_back("decomposition: " + m);
    return c;
}

CheckOutcome lines_properties_cell(const std::string& name, const HodgeDiamond& y) {
    CheckOutcome c{"lines_properties", Json{{"diamond", name}}, {}};
    const SecantLinesContext ctx(y);
    add_duality(c, ih_secant_table(ctx), ctx.dim_sigma());
    const CohomologyTable sing = sing_cohomology_secant(ctx);
    for (const auto& [j, h] : sing.entries()) {
        if (j == 0) continue;
        for (int w : h.weights())
            if (w != j && w != j - 1)
                c.failures.push_back("H^" + std::to_string(j) + " has weight " + std::to_string(w));
    }
    const InvariantReport inv = singularity_invariants(ctx);
    if (inv.hrh > inv.c) c.failures.push_back("HRH = " + inv.hrh.to_string() + " exceeds c = " + inv.c.to_string());
    if (!(lefschetz_reassembly(primitive_decomposition(y), y.dim()) == from_diamond(y)))
        c.failures.push_back("Lefschetz decomposition does not reassemble the diamond");
    return c;
}

CheckOutcome curve_properties_cell(int g, int k) {
    CheckOutcome c{"curve_properties", Json{{"g", g}, {"k", k}}, {}};
    const SecantCurveContext ctx(g, k);
    add_duality(c, ih_higher_secant_table(ctx), ctx.dim_sigma());
    if (!(macdonald_sym_curve(g, k) == super_sym_power(curve(g), k)))
        c.failures.push_back("Macdonald formula disagrees with the super symmetric power");
    if (g >= 1) {
        const HodgeStructure h1 = h1_curve(g);
        for (int a = 1; a <= k - 1; ++a) {
            const HLTable t = ihl_numbers(ctx, a);
            for (int r = 0; r <= ctx.dim_sigma(); ++r) {
                const int m = ctx.dim_sigma() - r;
                const HodgeStructure wedge = r >= k + a - 1 ? wedge_power(h1, m) : HodgeStructure{};
                HodgeStructure got;
                for (const auto& e : t.entries)
                    if (e.r == r) got.add(-e.u, -e.v, e.value);
                if (!(got == wedge))
                    c.failures.push_back("IHL stratum " + std::to_string(a) + " r = " + std::to_string(r) + ": " +
                                         got.to_string() + " vs " + wedge.to_string());
            }
        }
    }
    return c;
}

CheckOutcome schur_cell(int g) {
    CheckOutcome c{"schur_hook", Json{{"g", g}}, {}};
    for (int arm = 1; arm <= 4; ++arm)
        for (int leg = 0; leg <= 4; ++leg) {
            const HookPartition h{arm, leg};
            const HodgeStructure counted = schur_hook(h, g);
            if (!(counted == schur_hook_by_listing(h, g)))
                c.failures.push_back("hook (" + std::to_string(arm) + ",1^" + std::to_string(leg) +
                                     ") counting disagrees with listing");
            if (counted.dim() != hook_dimension(h, 2 * g))
                c.failures.push_back("hook (" + std::to_string(arm) + ",1^" + std::to_string(leg) +
                                     ") dimension formula disagrees");
        }
    return c;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char ch : s) {
        if (ch == '"') r += '"';
        r += ch;
    }
    return r + "\"";
}

std::string md_field(const std::string& s) {
    std::string r;
    for (char ch : s) {
        if (ch == '|') r += '\\';
        r += ch;
    }
    return r;
}

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        if (j.empty()) rows.emplace_back(path, "{}");
        for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
    } else if (j.is_array()) {
        if (j.empty()) rows.emplace_back(path, "[]");
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
    } else if (j.is_string()) {
        rows.emplace_back(path, j.get<std::string>());
    } else {
        rows.emplace_back(path, j.dump());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("input", "cannot open diamond file " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError("json", e.what());
    }
}

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "markdown") return Format::Markdown;
    return Format::Json;
}

} // namespace

Json cmd_lines(const SecantLinesContext& ctx) {
    Json doc;
    doc["input"] = to_json(ctx);
    doc["dim_sigma"] = ctx.dim_sigma();
    const InvariantReport inv = singularity_invariants(ctx);
    doc["invariants"] = to_json(inv);
    Json lc = Json::array();
    if (inv.lcdef.is_finite())
        for (int j = 0; j <= inv.lcdef.value(); ++j) lc.push_back(to_json(local_cohomology_weights(ctx, j)));
    doc["local_cohomology"] = lc;
    doc["rhm_defect"] = hs_pairs(rhm_defect_object(ctx));
    const auto [hl, ihl] = hl_numbers(ctx);
    doc["hl"] = Json{{"lambda", to_json(hl)}, {"intersection", to_json(ihl)}};
    doc["generation_levels"] = to_json(generation_levels(ctx));
    doc["ih"] = to_json(ih_secant_table(ctx));
    doc["cohomology"] = to_json(sing_cohomology_secant(ctx));
    doc["q_factoriality"] = to_json(q_factoriality(ctx));
    return doc;
}

Json cmd_curve(const SecantCurveContext& ctx) {
    Json doc;
    doc["input"] = Json{{"g", ctx.g}, {"k", ctx.k}, {"N", ctx.ambient_dim ? Json(*ctx.ambient_dim) : Json(nullptr)}};
    doc["dim_sigma"] = ctx.dim_sigma();
    const ICWeightReport ic = ic_weight_graded(ctx);
    doc["ic_weights"] = to_json(ic);
    doc["ih"] = to_json(ih_higher_secant_table(ctx));
    doc["cohomology"] = to_json(sing_cohomology_higher(ctx));
    Json summands = Json::array();
    for (const auto& s : sing_cohomology_summands(ctx)) summands.push_back(to_json(s));
    doc["summands"] = summands;
    Json ihl = Json::array();
    if (ctx.g >= 1)
        for (int a = 1; a <= ctx.k - 1; ++a) ihl.push_back(Json{{"stratum", a}, {"table", to_json(ihl_numbers(ctx, a))}});
    doc["ihl"] = ihl;
    doc["gl_bound"] = gl_bound(ctx);
    doc["vanishing"] = ctx.ambient_dim ? to_json(vanishing_report(ctx)) : Json(nullptr);
    doc["q_factoriality"] = to_json(q_factoriality_curve(ctx));
    doc["rational_homology_manifold"] = ic.rational_homology_manifold;
    return doc;
}

std::vector<CheckOutcome> run_parallel(const std::vector<std::function<CheckOutcome()>>& tasks, unsigned threads) {
    std::vector<CheckOutcome> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            try {
                out[i] = tasks[i]();
            } catch (const std::exception& e) {
                out[i].name = "exception";
                out[i].failures.push_back(e.what());
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    return out;
}

std::vector<CheckOutcome> run_verify(const VerifyConfig& cfg) {
    std::vector<std::function<CheckOutcome()>> tasks;
    const bool perturb = cfg.inject_perturbation;
    for (int g = 0; g <= cfg.g_max; ++g)
        for (int k = 2; k <= cfg.k_max; ++k) tasks.emplace_back([=] { return wss_cell(g, k, perturb); });
    if (cfg.depth >= 2) {
        for (int g = 0; g <= cfg.g_max; ++g)
            for (int k = 2; k <= cfg.k_max; ++k) tasks.emplace_back([=] { return curve_identities_cell(g, k); });
        for (int g = 0; g <= cfg.g_max; ++g) tasks.emplace_back([=] { return cross_module_cell(g); });
        for (const auto& [name, d] : lines_diamonds(cfg.g_max))
            tasks.emplace_back([name, d] { return lines_identities_cell(name, d); });
    }
    if (cfg.depth >= 3) {
        for (int g = 0; g <= cfg.g_max; ++g)
            for (int k = 2; k <= cfg.k_max; ++k) tasks.emplace_back([=] { return curve_properties_cell(g, k); });
        for (const auto& [name, d] : lines_diamonds(cfg.g_max))
            tasks.emplace_back([name, d] { return lines_properties_cell(name, d); });
        for (int g = 0; g <= std::min(cfg.g_max, 3); ++g) tasks.emplace_back([=] { return schur_cell(g); });
    }
    return run_parallel(tasks, cfg.threads);
}

Json verify_report(const std::vector<CheckOutcome>& outcomes) {
    Json checks = Json::array();
    std::size_t failed = 0;
    for (const auto& c : outcomes) {
        if (!c.ok()) ++failed;
        checks.push_back(Json{{"name", c.name}, {"params", c.params}, {"ok", c.ok()}, {"failures", c.failures}});
    }
    return Json{{"checks", checks}, {"ok", failed == 0}, {"total", outcomes.size()}, {"failed", failed}};
}

std::string cmd_plot(int g, int k_max) {
    std::ostringstream os;
    for (const auto& p : support_plot(g, k_max)) os << p.k << '\t' << p.j << '\t' << p.w << '\t' << p.dim << '\n';
    return os.str();
}

std::string render(const Json& doc, Format f) {
    if (f == Format::Json) return dump(doc);
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    std::string s;
    if (f == Format::Csv) {
        s = "path,value\n";
        for (const auto& [p, v] : rows) s += csv_field(p) + "," + csv_field(v) + "\n";
    } else {
        s = "| path | value |\n|---|---|\n";
        for (const auto& [p, v] : rows) s += "| " + md_field(p) + " | " + md_field(v) + " |\n";
    }
    return s;
}

unsigned thread_budget() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SECANT_HODGE_THREADS")) {
        std::size_t pos = 0;
        long cap = 0;
        try {
            cap = std::stol(env, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || env[pos] != '\0' || cap < 1)
            throw std::invalid_argument("SECANT_HODGE_THREADS must be a positive integer");
        n = std::min<unsigned long>(n, static_cast<unsigned long>(cap));
    }
    return n;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hodge-theoretic invariants of secant varieties"};
    app.require_subcommand(1);

    std::string diamond_path, format = "json";
    auto* lines = app.add_subcommand("lines", "secant variety of lines of a smooth projective variety");
    lines->add_option("--diamond", diamond_path, "Hodge diamond JSON file")->required();
    lines->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "markdown"}));

    int genus = 0, order = 2;
    std::optional<int> ambient;
    auto* curve_cmd = app.add_subcommand("curve", "higher secant variety of a curve");
    curve_cmd->add_option("--genus", genus)->required();
    curve_cmd->add_option("--k", order)->required();
    curve_cmd->add_option("--N", ambient);
    curve_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "markdown"}));

    VerifyConfig vcfg;
    auto* verify = app.add_subcommand("verify", "run the oracle suite");
    verify->add_option("--g-max", vcfg.g_max);
    verify->add_option("--k-max", vcfg.k_max);
    verify->add_option("--depth", vcfg.depth);
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "markdown"}));
    verify->add_flag("--inject-perturbation", vcfg.inject_perturbation)->group("");

    int plot_g = 0, plot_k = 2;
    auto* plot = app.add_subcommand("plot", "support of the weight-graded cohomology, as TSV");
    plot->add_option("--g", plot_g)->required();
    plot->add_option("--k-max", plot_k)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        if (lines->parsed()) {
            const SecantLinesContext ctx = lines_context_from_json(read_json_file(diamond_path));
            out << render(cmd_lines(ctx), parse_format(format));
        } else if (curve_cmd->parsed()) {
            out << render(cmd_curve(SecantCurveContext(genus, order, ambient)), parse_format(format));
        } else if (verify->parsed()) {
            if (vcfg.g_max < 0 || vcfg.k_max < 2 || vcfg.depth < 1 || vcfg.depth > 3)
                throw ParameterError("verify needs g-max >= 0, k-max >= 2 and depth in [1, 3]");
            vcfg.threads = thread_budget();
            const auto outcomes = run_verify(vcfg);
            out << render(verify_report(outcomes), parse_format(format));
            bool ok = true;
            for (const auto& c : outcomes)
                for (const auto& f : c.failures) {
                    ok = false;
                    err << "FAILED " << c.name << ' ' << c.params.dump() << ": " << f << '\n';
                }
            return ok ? kOk : kCheckFailed;
        } else if (plot->parsed()) {
            if (plot_g < 0 || plot_k < 2) throw ParameterError("plot needs g >= 0 and k-max >= 2");
            out << cmd_plot(plot_g, plot_k);
        }
    } catch (const SchemaError& e) {
        err << "error: schema violation (" << e.invariant() << "): " << e.what() << '\n';
        return kInvalidInput;
    } catch (const DiamondError& e) {
        err << "error: invalid Hodge diamond: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const MissingInputError& e) {
        err << "error: missing input: " << e.what() << '\n';
        return kMissingInput;
    } catch (const std::invalid_argument& e) {
        // ParameterError and malformed thread caps
        err << "error: invalid parameters: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kOk;
}

} // namespace secant_hodge::cli
