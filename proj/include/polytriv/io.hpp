#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polytriv/impossibility.hpp"
#include "polytriv/polymorphism.hpp"
#include "polytriv/symmetric.hpp"
#include "polytriv/triviality.hpp"

namespace polytriv {

using json = nlohmann::json;

// Function tables serialize as {"k", "n", "table"}; tuples as {"tables":
// [...]}; predicates as {"m", "sizes", "tuples"} with a {"symmetric":
// {"m", "weights"}} shorthand accepted on input. All loaders raise
// input_error on malformed or out-of-range data.

json table_to_json(const FunctionTable& f);
FunctionTable table_from_json(const json& j);

json tuple_to_json(const PolymorphismTuple& fs);
/// Accepts {"tables": [...]} or a bare array of tables.
PolymorphismTuple tuple_from_json(const json& j);

json predicate_to_json(const Predicate& p);
Predicate predicate_from_json(const json& j);

json phi_to_json(const PhiFamily& phi);
/// Accepts {"members": [...]} where each member is an array of m unary
/// tables, or {"phi": "<name>"} for the named families (binary alphabets).
PhiFamily phi_from_json(const json& j, const Signature& sig);

json certificate_to_json(const Certificate& rho);
json matrix_to_json(const InputMatrix& matrix);

json census_to_json(const VerdictCensus& census);
json type_verdict_to_json(const TypeVerdict& verdict);
json triviality_report_to_json(const TrivialityReport& report);
json reduction_report_to_json(const ReductionReport& report);

json classification_to_json(const SymmetricClassification& c);
json structure_to_json(const StructureDescriptor& d);
json atlas_row_to_json(const AtlasRow& row);
json atlas_to_json(const std::vector<AtlasRow>& rows);

json unanimity_verdict_to_json(const UnanimityVerdict& verdict);

std::string family_tag_name(FamilyTag tag);
std::string structure_kind_name(StructureKind kind);
std::string witness_source_name(WitnessSource source);
std::string shape_name(OneAryShape shape);

/// Parses a file into JSON; missing files and parse errors raise
/// input_error.
json load_json_file(const std::string& path);

Predicate load_predicate(const std::string& path);
PolymorphismTuple load_tuple(const std::string& path);

/// Two-space-indented dump with a trailing newline; object keys are emitted
/// in sorted order, so equal values always produce identical bytes.
std::string dump_canonical(const json& j);

}  // namespace polytriv
