#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "secant_hodge/cli/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace secant_hodge;
using namespace secant_hodge::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "secant-hodge");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("secant_hodge_cli_" + name + ".json");
    std::ofstream(path) << text;
    return path.string();
}

const char* kP2 = R"({"dim": 2, "h": [[1,0,0],[0,1,0],[0,0,1]], "h11_rational": 1, "flags": {"qprime": 1, "u2": true}})";

} // namespace

TEST_CASE("lines report on P^2") {
    const std::string path = write_temp("p2", kP2);
    const Run r = run({"lines", "--diamond", path});
    REQUIRE(r.code == kOk);
    const Json doc = Json::parse(r.out);
    CHECK(doc["invariants"]["c"] == "inf");
    CHECK(doc["invariants"]["hrh"] == 0);
    CHECK(doc["q_factoriality"]["sigma"] == 1);
    CHECK(doc["generation_levels"]["ic_exact"] == 0);
    CHECK(doc["generation_levels"]["hq_exact"] == 1);
    CHECK(doc["cohomology"][0] == Json::parse(R"({"degree": 0, "classes": [[0,0,1]]})"));
    // byte determinism
    CHECK(run({"lines", "--diamond", path}).out == r.out);
    CHECK(r.out.back() == '\n');
}

TEST_CASE("lines report round-trips into the same records") {
    for (const auto& [name, text] : std::vector<std::pair<std::string, std::string>>{
             {"p2", kP2},
             {"curve3", R"({"dim": 1, "h": [[1,3],[3,1]], "N": 7})"},
             {"p1", R"({"dim": 1, "h": [[1,0],[0,1]]})"},
             {"k3", R"({"dim": 2, "h": [[1,0,1],[0,20,0],[1,0,1]], "h11_rational": 20, "N": 12, "flags": {"qprime": null, "u2": true}})"}}) {
        const Run r = run({"lines", "--diamond", write_temp(name, text)});
        REQUIRE(r.code == kOk);
        const Json doc = Json::parse(r.out);
        const SecantLinesContext ctx = lines_context_from_json(doc["input"]);
        CAPTURE(name);
        CHECK(lines_context_from_json(Json::parse(text)).diamond == ctx.diamond);
        CHECK(invariant_report_from_json(doc["invariants"]) == singularity_invariants(ctx));
        CHECK(generation_levels_from_json(doc["generation_levels"]) == generation_levels(ctx));
        CHECK(q_factoriality_from_json(doc["q_factoriality"]) == q_factoriality(ctx));
        CHECK(cohomology_table_from_json(doc["cohomology"]) == sing_cohomology_secant(ctx));
        CHECK(cohomology_table_from_json(doc["ih"]) == ih_secant_table(ctx));
        const auto [hl, ihl] = hl_numbers(ctx);
        CHECK(hl_table_from_json(doc["hl"]["lambda"]) == hl);
        CHECK(hl_table_from_json(doc["hl"]["intersection"]) == ihl);
        for (const auto& lc : doc["local_cohomology"]) {
            const LocalCohomologyRecord rec = local_cohomology_from_json(lc);
            CHECK(rec == local_cohomology_weights(ctx, rec.j));
        }
        CHECK(dump(doc) == r.out);
    }
}

TEST_CASE("lines report on a genus 3 curve") {
    const Run r = run({"lines", "--diamond", write_temp("g3", R"({"dim": 1, "h": [[1,3],[3,1]]})")});
    REQUIRE(r.code == kOk);
    const CohomologyTable t = cohomology_table_from_json(Json::parse(r.out)["cohomology"]);
    CHECK(t.betti(3) == 21);
    CHECK(Json::parse(r.out)["q_factoriality"]["sigma"] == "inf");
}

TEST_CASE("lines input errors") {
    Run r = run({"lines", "--diamond", write_temp("bad_sym", R"({"dim": 1, "h": [[1,1],[0,1]]})")});
    CHECK(r.code == kInvalidInput);
    CHECK(r.err.find("conjugation symmetry") != std::string::npos);
    r = run({"lines", "--diamond", write_temp("bad_key", R"({"dim": 1, "h": [[1,0],[0,1]], "colour": 3})")});
    CHECK(r.code == kInvalidInput);
    CHECK(r.err.find("schema") != std::string::npos);
    r = run({"lines", "--diamond", write_temp("bad_json", R"({"dim": 1, )")});
    CHECK(r.code == kInvalidInput);
    r = run({"lines", "--diamond", write_temp("bad_flag", R"({"dim": 2, "h": [[1,0,0],[0,1,0],[0,0,1]], "flags": {"u2": 1}})")});
    CHECK(r.code == kInvalidInput);
    r = run({"lines", "--diamond", "/nonexistent/diamond.json"});
    CHECK(r.code == kInvalidInput);
    r = run({"lines", "--diamond", write_temp("point", R"({"dim": 0, "h": [[1]]})")});
    CHECK(r.code == kInvalidInput);
    r = run({"lines", "--diamond", write_temp("small_n", R"({"dim": 2, "h": [[1,0,0],[0,1,0],[0,0,1]], "h11_rational": 1, "N": 5})")});
    CHECK(r.code == kInvalidInput);
    // sigma needs h11_rational for a surface with h01 = 0
    r = run({"lines", "--diamond", write_temp("k3_no_h11", R"({"dim": 2, "h": [[1,0,1],[0,20,0],[1,0,1]]})")});
    CHECK(r.code == kMissingInput);
    CHECK(r.err.find("h11_rational") != std::string::npos);
    CHECK(run({"lines"}).code == kInvalidInput);
    CHECK(run({}).code == kInvalidInput);
    CHECK(run({"lines", "--diamond", write_temp("p2f", kP2), "--format", "yaml"}).code == kInvalidInput);
}

TEST_CASE("curve report") {
    Run r = run({"curve", "--genus", "0", "--k", "4"});
    REQUIRE(r.code == kOk);
    CHECK(Json::parse(r.out)["rational_homology_manifold"] == true);
    CHECK(Json::parse(r.out)["ihl"].empty());

    r = run({"curve", "--genus", "1", "--k", "3", "--N", "10"});
    REQUIRE(r.code == kOk);
    const Json doc = Json::parse(r.out);
    const CohomologyTable t = cohomology_table_from_json(doc["cohomology"]);
    CHECK(t.at(5).weight_part(3) == sym_power(h1_curve(1), 3));
    CHECK(t.at(5).weight_part(3).dim() == 4);
    const SecantCurveContext ctx(1, 3, 10);
    CHECK(ic_weight_report_from_json(doc["ic_weights"]) == ic_weight_graded(ctx));
    CHECK(vanishing_report_from_json(doc["vanishing"]) == vanishing_report(ctx));
    CHECK(curve_q_factoriality_from_json(doc["q_factoriality"]) == q_factoriality_curve(ctx));
    CHECK(cohomology_table_from_json(doc["ih"]) == ih_higher_secant_table(ctx));
    std::vector<CurveSummand> summands;
    for (const auto& s : doc["summands"]) summands.push_back(curve_summand_from_json(s));
    CHECK(summands == sing_cohomology_summands(ctx));
    REQUIRE(doc["ihl"].size() == 2);
    CHECK(hl_table_from_json(doc["ihl"][1]["table"]) == ihl_numbers(ctx, 2));
    CHECK(doc["gl_bound"] == 2);
    CHECK(doc["q_factoriality"]["sigma"] == "inf");

    CHECK(run({"curve", "--genus", "1", "--k", "1"}).code == kInvalidInput);
    CHECK(run({"curve", "--genus", "-1", "--k", "3"}).code == kInvalidInput);
    CHECK(run({"curve", "--genus", "1", "--k", "3", "--N", "4"}).code == kInvalidInput);
    CHECK(run({"curve", "--genus", "x", "--k", "3"}).code == kInvalidInput);
}

TEST_CASE("verify") {
    Run r = run({"verify", "--g-max", "2", "--k-max", "4"});
    CHECK(r.code == kOk);
    const Json doc = Json::parse(r.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["failed"] == 0);
    CHECK(doc["total"].get<int>() > 0);

    r = run({"verify", "--g-max", "1", "--k-max", "3", "--inject-perturbation"});
    CHECK(r.code == kCheckFailed);
    CHECK(Json::parse(r.out)["ok"] == false);
    CHECK(r.err.find("FAILED koszul_oracle") != std::string::npos);

    CHECK(run({"verify", "--depth", "9"}).code == kInvalidInput);
    CHECK(run({"verify", "--k-max", "1"}).code == kInvalidInput);
}

TEST_CASE("thread cap") {
    ::setenv("SECANT_HODGE_THREADS", "1", 1);
    CHECK(thread_budget() == 1);
    const Run one = run({"verify", "--g-max", "2", "--k-max", "3"});
    ::setenv("SECANT_HODGE_THREADS", "8", 1);
    const Run many = run({"verify", "--g-max", "2", "--k-max", "3"});
    CHECK(one.code == kOk);
    CHECK(one.out == many.out);
    ::setenv("SECANT_HODGE_THREADS", "zero", 1);
    CHECK_THROWS_AS(thread_budget(), std::invalid_argument);
    CHECK(run({"verify", "--g-max", "1", "--k-max", "2"}).code == kInvalidInput);
    ::setenv("SECANT_HODGE_THREADS", "0", 1);
    CHECK(run({"verify", "--g-max", "1", "--k-max", "2"}).code == kInvalidInput);
    ::unsetenv("SECANT_HODGE_THREADS");
    CHECK(thread_budget() >= 1);
}

TEST_CASE("plot") {
    const Run r = run({"plot", "--g", "10", "--k-max", "3"});
    REQUIRE(r.code == kOk);
    CHECK(r.out.find("3\t5\t3\t") != std::string::npos);
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) CHECK(std::count(line.begin(), line.end(), '\t') == 3);
    CHECK(run({"plot", "--g", "1", "--k-max", "1"}).code == kInvalidInput);
    CHECK(run({"plot", "--g", "1"}).code == kInvalidInput);
}

TEST_CASE("csv and markdown renderings") {
    const Run csv = run({"curve", "--genus", "1", "--k", "2", "--format", "csv"});
    REQUIRE(csv.code == kOk);
    CHECK(csv.out.rfind("path,value\n", 0) == 0);
    CHECK(csv.out.find("\ngl_bound,1\n") != std::string::npos);
    const Run md = run({"curve", "--genus", "1", "--k", "2", "--format", "markdown"});
    REQUIRE(md.code == kOk);
    CHECK(md.out.rfind("| path | value |\n|---|---|\n", 0) == 0);
    CHECK(md.out.find("| gl_bound | 1 |") != std::string::npos);
    CHECK(render(Json{{"a", "x,y"}}, Format::Csv) == "path,value\na,\"x,y\"\n");
    CHECK(render(Json{{"a", Json::array()}}, Format::Markdown) == "| path | value |\n|---|---|\n| a | [] |\n");
}

TEST_CASE("extended integers serialize as inf") {
    CHECK(to_json(ExtInt::inf()) == "inf");
    CHECK(to_json(ExtInt::neg_inf()) == "-inf");
    CHECK(to_json(ExtInt(-3)) == -3);
    CHECK(ext_int_from_json(Json("-inf")) == ExtInt::neg_inf());
    CHECK_THROWS_AS(ext_int_from_json(Json("infinity")), SchemaError);
    CHECK_THROWS_AS(ext_int_from_json(Json(1.5)), SchemaError);
}
