#pragma once

#include <json.hpp>
#include <utility>

#include "matsolve/fixtures.hpp"
#include "matsolve/instances.hpp"
#include "matsolve/riccati.hpp"

namespace matsolve {

// Insertion-ordered so that emitted files are deterministic.
using Json = nlohmann::ordered_json;

Json rat_matrix_to_json(const RatMatrix& m);  // rows of "p/q" strings
RatMatrix rat_matrix_from_json(const Json& j);

Json complex_to_json(const Complex& z);  // {"re": .., "im": ..}
Json cmatrix_to_json(const CMatrix& m);

Json equation_to_json(const EquationSpec& spec);
EquationSpec equation_from_json(const Json& j);

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

// Any problem file: {"type": "equation"} parses directly, a shape name goes
// through the instance layer.
EquationSpec load_equation(const Json& j);

// {"vars": [...], "polys": ["..."]} with the requested order.
std::pair<RingPtr, std::vector<MultiPoly>> ideal_from_json(const Json& j, MonomialOrder order);

Json solution_set_to_json(const SolutionSet& sols);
Json verify_report_to_json(const VerifyReport& rep);
Json count_result_to_json(const CountResult& res);
Json jacobian_report_to_json(const JacobianReport& rep);
Json trace_evenness_to_json(const TraceEvennessReport& rep);
Json fixture_outcome_to_json(const FixtureOutcome& out);

// FNV-1a 64-bit over the raw bytes, as 16 hex digits; input digest for reports.
std::string digest_hex(const std::string& bytes);

std::string read_text_file(const std::string& path);     // throws Parse when unreadable
Json load_json_file(const std::string& path);            // throws Parse on bad JSON
void write_json_file(const std::string& path, const Json& j);

}  // namespace matsolve
