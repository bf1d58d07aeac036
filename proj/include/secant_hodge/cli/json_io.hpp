#ifndef SECANT_HODGE_CLI_JSON_IO_HPP
#define SECANT_HODGE_CLI_JSON_IO_HPP

#include "secant_hodge/secant_curves.hpp"
#include "secant_hodge/secant_lines.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace secant_hodge::cli {

using Json = nlohmann::json; // std::map objects: keys always come out sorted

// Input that does not match the diamond schema; what() names the violated
// invariant.
class SchemaError : public std::invalid_argument {
public:
    SchemaError(std::string invariant, const std::string& detail)
        : std::invalid_argument(invariant + ": " + detail), invariant_(std::move(invariant)) {}
    const std::string& invariant() const { return invariant_; }

private:
    std::string invariant_;
};

Json to_json(const ExtInt& x);
ExtInt ext_int_from_json(const Json& j);

// Sorted [[p, q, mult], ...].
Json to_json(const HodgeStructure& h);
HodgeStructure hodge_structure_from_json(const Json& j);

// [{"degree": j, "classes": [...]}, ...] by increasing degree.
Json to_json(const CohomologyTable& t);
CohomologyTable cohomology_table_from_json(const Json& j);

Json to_json(const HLTable& t);
HLTable hl_table_from_json(const Json& j);

Json to_json(const InvariantReport& r);
InvariantReport invariant_report_from_json(const Json& j);

Json to_json(const GenerationLevels& g);
GenerationLevels generation_levels_from_json(const Json& j);

Json to_json(const QFactorialityRecord& q);
QFactorialityRecord q_factoriality_from_json(const Json& j);

Json to_json(const LocalCohomologyRecord& r);
LocalCohomologyRecord local_cohomology_from_json(const Json& j);

Json to_json(const ICWeightReport& r);
ICWeightReport ic_weight_report_from_json(const Json& j);

Json to_json(const CurveQFactoriality& q);
CurveQFactoriality curve_q_factoriality_from_json(const Json& j);

Json to_json(const CurveSummand& s);
CurveSummand curve_summand_from_json(const Json& j);

Json to_json(const VanishingReport& v);
VanishingReport vanishing_report_from_json(const Json& j);

// {"dim": n, "h": [[...]], optional "N", "h11_rational",
//  "flags": {"qprime": p or null, "u2": bool}}. Throws SchemaError, or
// DiamondError for a well-formed table that is not a Hodge diamond.
SecantLinesContext lines_context_from_json(const Json& j);
Json to_json(const SecantLinesContext& ctx);

// Canonical text: two-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);

} // namespace secant_hodge::cli

#endif
