#include "polytriv/io.hpp"

#include <fstream>

#include "polytriv/errors.hpp"

namespace polytriv {

namespace {

[[noreturn]] void bad_input(const std::string& what) { throw input_error(what); }

std::int64_t integer_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    bad_input(std::string("missing or non-integer field \"") + key + "\"");
  return j[key].get<std::int64_t>();
}

std::size_t size_field(const json& j, const char* key) {
  const std::int64_t v = integer_field(j, key);
  if (v < 0) bad_input(std::string("field \"") + key + "\" must be non-negative");
  return static_cast<std::size_t>(v);
}

Value value_from_json(const json& j) {
  if (!j.is_number_integer()) bad_input("table entries must be integers");
  const std::int64_t v = j.get<std::int64_t>();
  if (v < 0 || v > 255) bad_input("value " + std::to_string(v) + " out of range");
  return static_cast<Value>(v);
}

std::vector<Value> values_from_json(const json& j, const char* what) {
  if (!j.is_array()) bad_input(std::string(what) + " must be an array");
  std::vector<Value> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(value_from_json(e));
  return out;
}

json values_to_json(const std::vector<Value>& values) {
  json out = json::array();
  for (Value v : values) out.push_back(static_cast<int>(v));
  return out;
}

}  // namespace

json table_to_json(const FunctionTable& f) {
  json j;
  j["k"] = f.alphabet_size();
  j["n"] = f.arity();
  j["table"] = values_to_json(f.table());
  return j;
}

FunctionTable table_from_json(const json& j) {
  if (!j.is_object()) bad_input("a function table must be an object");
  if (!j.contains("table")) bad_input("missing field \"table\"");
  return FunctionTable(size_field(j, "k"), size_field(j, "n"),
                       values_from_json(j["table"], "\"table\""));
}

json tuple_to_json(const PolymorphismTuple& fs) {
  json tables = json::array();
  for (const FunctionTable& f : fs.components) tables.push_back(table_to_json(f));
  json j;
  j["tables"] = std::move(tables);
  return j;
}

PolymorphismTuple tuple_from_json(const json& j) {
  const json* tables = &j;
  if (j.is_object()) {
    if (!j.contains("tables")) bad_input("missing field \"tables\"");
    tables = &j["tables"];
  }
  if (!tables->is_array() || tables->empty())
    bad_input("\"tables\" must be a non-empty array");
  PolymorphismTuple fs;
  for (const json& e : *tables) fs.components.push_back(table_from_json(e));
  return fs;
}

json predicate_to_json(const Predicate& p) {
  json j;
  j["m"] = p.signature().arity();
  json sizes = json::array();
  for (std::size_t i = 0; i < p.signature().arity(); ++i)
    sizes.push_back(p.signature().size(i));
  j["sizes"] = std::move(sizes);
  json tuples = json::array();
  for (const Tuple& t : p.tuples()) tuples.push_back(values_to_json(t));
  j["tuples"] = std::move(tuples);
  return j;
}

Predicate predicate_from_json(const json& j) {
  if (!j.is_object()) bad_input("a predicate must be an object");
  if (j.contains("symmetric")) {
    const json& s = j["symmetric"];
    if (!s.is_object() || !s.contains("weights"))
      bad_input("\"symmetric\" needs fields \"m\" and \"weights\"");
    const std::size_t m = size_field(s, "m");
    if (!s["weights"].is_array()) bad_input("\"weights\" must be an array");
    std::vector<std::size_t> weights;
    for (const json& w : s["weights"]) {
      if (!w.is_number_integer() || w.get<std::int64_t>() < 0)
        bad_input("weights must be non-negative integers");
      weights.push_back(w.get<std::size_t>());
    }
    return WeightSet(m, std::move(weights)).predicate();
  }
  const std::size_t m = size_field(j, "m");
  if (!j.contains("sizes") || !j["sizes"].is_array() || j["sizes"].size() != m)
    bad_input("\"sizes\" must be an array of length m");
  std::vector<std::size_t> sizes;
  for (const json& s : j["sizes"]) {
    if (!s.is_number_integer() || s.get<std::int64_t>() < 0)
      bad_input("alphabet sizes must be non-negative integers");
    sizes.push_back(s.get<std::size_t>());
  }
  if (!j.contains("tuples") || !j["tuples"].is_array())
    bad_input("\"tuples\" must be an array");
  std::vector<Tuple> tuples;
  for (const json& t : j["tuples"])
    tuples.push_back(values_from_json(t, "each tuple"));
  return Predicate::from_tuples(Signature(std::move(sizes)), std::move(tuples));
}

json phi_to_json(const PhiFamily& phi) {
  json j;
  j["phi"] = phi.name();
  if (phi.kind() == PhiFamily::Kind::custom) {
    json members = json::array();
    phi.for_each_member([&](const std::vector<FunctionTable>& member) {
      json tables = json::array();
      for (const FunctionTable& f : member) tables.push_back(table_to_json(f));
      members.push_back(std::move(tables));
      return true;
    });
    j["members"] = std::move(members);
  }
  return j;
}

PhiFamily phi_from_json(const json& j, const Signature& sig) {
  if (j.is_object() && j.contains("members")) {
    const json& members = j["members"];
    if (!members.is_array() || members.empty())
      bad_input("\"members\" must be a non-empty array");
    std::vector<std::vector<FunctionTable>> parsed;
    for (const json& member : members) {
      if (!member.is_array()) bad_input("each member must be an array of tables");
      std::vector<FunctionTable> tables;
      for (const json& t : member) tables.push_back(table_from_json(t));
      parsed.push_back(std::move(tables));
    }
    return PhiFamily::custom(sig, std::move(parsed));
  }
  if (j.is_object() && j.contains("phi") && j["phi"].is_string()) {
    const std::string name = j["phi"].get<std::string>();
    if (name == "id") return PhiFamily::identity(sig);
    if (name == "neg") return PhiFamily::all_id_negation(sig);
    if (name == "idneg-uniform") return PhiFamily::uniform_id_negation(sig);
    if (name == "const-id-neg") return PhiFamily::all_const_id_negation(sig);
    if (name == "all-permutations") return PhiFamily::all_permutations(sig);
    bad_input("unknown pattern family \"" + name + "\"");
  }
  bad_input("a pattern family needs either \"phi\" or \"members\"");
}

json certificate_to_json(const Certificate& rho) {
  json entries = json::array();
  for (const auto& [coordinate, value] : rho.entries()) {
    json e;
    e["coordinate"] = coordinate;
    e["value"] = static_cast<int>(value);
    entries.push_back(std::move(e));
  }
  return entries;
}

json matrix_to_json(const InputMatrix& matrix) {
  json columns = json::array();
  for (const Tuple& c : matrix.columns()) columns.push_back(values_to_json(c));
  json j;
  j["columns"] = std::move(columns);
  return j;
}

json census_to_json(const VerdictCensus& census) {
  json j;
  j["total"] = census.total;
  j["dictatorial_only"] = census.dictatorial_only;
  j["certificate_only"] = census.certificate_only;
  j["both"] = census.both;
  return j;
}

json type_verdict_to_json(const TypeVerdict& verdict) {
  json dict = json::array();
  for (const DictatorWitness& w : verdict.dictatorial) {
    json e;
    e["argument"] = w.argument;
    json patterns = json::array();
    for (const FunctionTable& f : w.phi) patterns.push_back(table_to_json(f));
    e["patterns"] = std::move(patterns);
    dict.push_back(std::move(e));
  }
  json certs = json::array();
  for (const Certificate& rho : verdict.certificates)
    certs.push_back(certificate_to_json(rho));
  json j;
  j["dictatorial"] = std::move(dict);
  j["certificates"] = std::move(certs);
  j["neither"] = verdict.neither();
  return j;
}

json triviality_report_to_json(const TrivialityReport& report) {
  json j;
  j["trivial"] = report.trivial;
  j["arity"] = report.arity;
  if (report.witness) j["witness"] = tuple_to_json(*report.witness);
  if (report.census) j["census"] = census_to_json(*report.census);
  return j;
}

std::string shape_name(OneAryShape shape) {
  switch (shape) {
    case OneAryShape::none: return "none";
    case OneAryShape::const_or_identity: return "const-or-identity";
    case OneAryShape::identity_or_negation: return "identity-or-negation";
  }
  return "none";
}

json reduction_report_to_json(const ReductionReport& report) {
  json j;
  j["trivial_at_1"] = report.trivial_at_1;
  if (report.witness_at_1) j["witness_at_1"] = tuple_to_json(*report.witness_at_1);
  if (report.normalized_witness)
    j["normalized_witness"] = tuple_to_json(*report.normalized_witness);
  j["shape"] = shape_name(report.shape);
  json closed = json::array();
  for (const ClosureFlag& flag : report.closed_under) {
    json e;
    e["coordinate"] = flag.coordinate;
    e["value"] = static_cast<int>(flag.value);
    closed.push_back(std::move(e));
  }
  j["closed_under"] = std::move(closed);
  if (report.and_or) j["and_or"] = tuple_to_json(*report.and_or);
  if (report.latin_square) j["latin_square"] = tuple_to_json(*report.latin_square);
  return j;
}

std::string family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::even_parity: return "even-parity";
    case FamilyTag::odd_parity: return "odd-parity";
    case FamilyTag::at_least: return "at-least";
    case FamilyTag::at_least_plus_zero: return "at-least-plus-zero";
    case FamilyTag::at_most: return "at-most";
    case FamilyTag::at_most_plus_one: return "at-most-plus-one";
  }
  return "none";
}

json classification_to_json(const SymmetricClassification& c) {
  json families = json::array();
  for (const SymmetricFamily& f : c.families) {
    json e;
    e["family"] = family_tag_name(f.tag);
    if (f.tag != FamilyTag::even_parity && f.tag != FamilyTag::odd_parity)
      e["w"] = f.w;
    families.push_back(std::move(e));
  }
  json j;
  j["families"] = std::move(families);
  j["complement_closed"] = c.complement_closed;
  j["phi_neg_trivial"] = c.phi_neg_trivial;
  j["phi_id_trivial"] = c.phi_id_trivial;
  return j;
}

std::string structure_kind_name(StructureKind kind) {
  switch (kind) {
    case StructureKind::complement_pair: return "complement-pair";
    case StructureKind::shared_function: return "shared-function";
    case StructureKind::parity_affine: return "parity-affine";
    case StructureKind::threshold_intersecting: return "threshold-intersecting";
    case StructureKind::threshold_plus_corner: return "threshold-plus-corner";
    case StructureKind::dictator_or_certificate: return "dictator-or-certificate";
  }
  return "none";
}

json structure_to_json(const StructureDescriptor& d) {
  json j;
  j["kind"] = structure_kind_name(d.kind);
  switch (d.kind) {
    case StructureKind::parity_affine:
      j["parity"] = static_cast<int>(d.parity);
      break;
    case StructureKind::threshold_intersecting:
    case StructureKind::threshold_plus_corner:
      j["variant"] = d.variant == StructureDescriptor::Variant::at_most
                         ? "at-most"
                         : "at-least";
      j["w"] = d.w;
      break;
    case StructureKind::dictator_or_certificate:
      j["complement_closed"] = d.complement_closed;
      break;
    default:
      break;
  }
  return j;
}

json atlas_row_to_json(const AtlasRow& row) {
  json j;
  j["m"] = row.m;
  json weights = json::array();
  for (std::size_t w : row.weights) weights.push_back(w);
  j["weights"] = std::move(weights);
  j["classification"] = classification_to_json(row.classification);
  j["structure"] = structure_to_json(row.structure);
  j["brute_neg_trivial"] = row.brute_neg_trivial;
  j["brute_id_trivial"] = row.brute_id_trivial;
  if (row.count_n1) j["count_n1"] = *row.count_n1;
  if (row.count_n2) j["count_n2"] = *row.count_n2;
  j["agree"] = row.agree;
  return j;
}

json atlas_to_json(const std::vector<AtlasRow>& rows) {
  json array = json::array();
  for (const AtlasRow& row : rows) array.push_back(atlas_row_to_json(row));
  json j;
  j["rows"] = std::move(array);
  bool agree = true;
  for (const AtlasRow& row : rows) agree = agree && row.agree;
  j["all_agree"] = agree;
  return j;
}

std::string witness_source_name(WitnessSource source) {
  switch (source) {
    case WitnessSource::none: return "none";
    case WitnessSource::search: return "search";
    case WitnessSource::closure: return "closure";
    case WitnessSource::and_or: return "and-or";
    case WitnessSource::latin_power: return "latin-power";
  }
  return "none";
}

json unanimity_verdict_to_json(const UnanimityVerdict& verdict) {
  json j;
  j["impossibility_domain"] = verdict.is_impossibility_domain;
  j["arity_checked"] = verdict.arity_checked;
  if (verdict.witness) {
    j["witness"] = tuple_to_json(*verdict.witness);
    j["witness_verified"] = verdict.witness_verified;
  }
  j["source"] = witness_source_name(verdict.source);
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad_input("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    bad_input("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

Predicate load_predicate(const std::string& path) {
  return predicate_from_json(load_json_file(path));
}

PolymorphismTuple load_tuple(const std::string& path) {
  return tuple_from_json(load_json_file(path));
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace polytriv
