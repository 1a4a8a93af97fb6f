#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polytriv/errors.hpp"
#include "polytriv/impossibility.hpp"
#include "polytriv/io.hpp"
#include "polytriv/polymorphism.hpp"
#include "polytriv/symmetric.hpp"
#include "polytriv/triviality.hpp"

namespace {

using namespace polytriv;

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct CommonConfig {
  std::string predicate_path;
  std::string symmetric_shorthand;
  std::string phi_name = "neg";
  std::string phi_file;
  std::uint64_t budget = 1'000'000'000;
  unsigned workers = 1;
  bool json_output = false;
  std::size_t latin_k_max = 4;
  std::size_t and_or_b_max = 20;
  std::size_t witness_arity_max = 17;
  bool tight_exponent = false;
};

// "m:w1,w2,..." -> the symmetric predicate with those allowed weights.
Predicate parse_symmetric_shorthand(const std::string& shorthand) {
  const auto colon = shorthand.find(':');
  if (colon == std::string::npos)
    throw input_error("symmetric shorthand must look like \"m:w1,w2\"");
  std::size_t m = 0;
  std::vector<std::size_t> weights;
  try {
    m = std::stoul(shorthand.substr(0, colon));
    std::size_t pos = colon + 1;
    while (pos < shorthand.size()) {
      std::size_t used = 0;
      weights.push_back(std::stoul(shorthand.substr(pos), &used));
      pos += used;
      if (pos < shorthand.size()) {
        if (shorthand[pos] != ',') throw input_error("weights must be comma-separated");
        ++pos;
      }
    }
  } catch (const std::logic_error&) {
    throw input_error("cannot parse symmetric shorthand \"" + shorthand + "\"");
  }
  if (weights.empty()) throw input_error("symmetric shorthand lists no weights");
  return WeightSet(m, std::move(weights)).predicate();
}

Predicate resolve_predicate(const CommonConfig& config) {
  if (config.predicate_path.empty() == config.symmetric_shorthand.empty())
    throw input_error("exactly one of --predicate and --symmetric is required");
  if (!config.predicate_path.empty()) return load_predicate(config.predicate_path);
  return parse_symmetric_shorthand(config.symmetric_shorthand);
}

PhiFamily resolve_phi(const CommonConfig& config, const Signature& sig) {
  if (!config.phi_file.empty())
    return phi_from_json(load_json_file(config.phi_file), sig);
  json named;
  named["phi"] = config.phi_name;
  return phi_from_json(named, sig);
}

EnumerationOptions enumeration_options(const CommonConfig& config) {
  EnumerationOptions options;
  options.budget = config.budget;
  options.workers = config.workers;
  return options;
}

DetectorLimits detector_limits(const CommonConfig& config) {
  DetectorLimits limits;
  limits.latin_alphabet_max = config.latin_k_max;
  limits.max_binary_coordinates = config.and_or_b_max;
  return limits;
}

void emit(const CommonConfig& config, const json& structured,
          const std::string& human) {
  if (config.json_output)
    std::cout << dump_canonical(structured);
  else
    std::cout << human << "\n";
}

void add_common(CLI::App* sub, CommonConfig& config, bool with_phi) {
  sub->add_option("-p,--predicate", config.predicate_path,
                  "Predicate file (JSON)")
      ->envname("POLYTRIV_PREDICATE");
  sub->add_option("-s,--symmetric", config.symmetric_shorthand,
                  "Inline symmetric predicate, e.g. \"3:1,2\"")
      ->envname("POLYTRIV_SYMMETRIC");
  sub->add_option("--budget", config.budget,
                  "Enumeration budget in table-entry assignments")
      ->envname("POLYTRIV_BUDGET");
  sub->add_option("--workers", config.workers, "Worker threads")
      ->envname("POLYTRIV_WORKERS");
  sub->add_flag("--json", config.json_output, "Structured output");
  if (with_phi) {
    sub->add_option("--phi", config.phi_name,
                    "Pattern family: id | neg | idneg-uniform | const-id-neg")
        ->envname("POLYTRIV_PHI");
    sub->add_option("--phi-file", config.phi_file,
                    "Custom pattern family file (JSON)")
        ->envname("POLYTRIV_PHI_FILE");
  }
}

int run_check(const CommonConfig& config, const std::string& functions_path) {
  const Predicate p = resolve_predicate(config);
  const PolymorphismTuple fs = load_tuple(functions_path);
  require_matches(p.signature(), fs);
  const std::optional<InputMatrix> violation = find_violation(p, fs);
  json report;
  report["polymorphism"] = !violation.has_value();
  if (violation) report["violation"] = matrix_to_json(*violation);
  if (!violation) {
    emit(config, report, "polymorphism: yes");
    return kAffirmative;
  }
  std::string human = "polymorphism: no; violating columns:";
  for (const Tuple& c : violation->columns()) {
    human += " (";
    for (std::size_t i = 0; i < c.size(); ++i)
      human += (i ? "," : "") + std::to_string(int(c[i]));
    human += ")";
  }
  emit(config, report, human);
  return kNegative;
}

int run_enumerate(const CommonConfig& config, std::size_t arity) {
  const Predicate p = resolve_predicate(config);
  json list = json::array();
  std::uint64_t count = 0;
  std::string human;
  enumerate_polymorphisms(p, arity, enumeration_options(config),
                          [&](const PolymorphismTuple& fs) {
                            ++count;
                            if (config.json_output)
                              list.push_back(tuple_to_json(fs));
                            else
                              human += tuple_to_json(fs).dump() + "\n";
                            return true;
                          });
  json report;
  report["arity"] = arity;
  report["count"] = count;
  report["polymorphisms"] = std::move(list);
  emit(config, report, human + "count: " + std::to_string(count));
  return kAffirmative;
}

int run_trivial(const CommonConfig& config, std::size_t arity) {
  const Predicate p = resolve_predicate(config);
  const PhiFamily phi = resolve_phi(config, p.signature());
  const TrivialityReport report =
      arity == 0 ? decide_trivial(p, phi, enumeration_options(config))
                 : check_trivial_for_n(p, phi, arity, enumeration_options(config));
  json j = triviality_report_to_json(report);
  j["phi"] = phi.name();
  std::string human = std::string("trivial: ") + (report.trivial ? "yes" : "no") +
                      " (arity " + std::to_string(report.arity) + ", phi " +
                      phi.name() + ")";
  if (report.witness)
    human += "\nwitness: " + tuple_to_json(*report.witness).dump();
  emit(config, j, human);
  return report.trivial ? kAffirmative : kNegative;
}

int run_reduce(const CommonConfig& config) {
  const Predicate p = resolve_predicate(config);
  const PhiFamily phi = resolve_phi(config, p.signature());
  const ReductionReport report = reduction_report(
      p, phi, enumeration_options(config), detector_limits(config));
  json j = reduction_report_to_json(report);
  j["phi"] = phi.name();
  std::string human = std::string("trivial at arity 1: ") +
                      (report.trivial_at_1 ? "yes" : "no");
  if (report.normalized_witness)
    human += "\nnormalized witness (" + shape_name(report.shape) +
             "): " + tuple_to_json(*report.normalized_witness).dump();
  human += "\nclosed-under flags: " + std::to_string(report.closed_under.size());
  human += std::string("\nand/or polymorphism: ") + (report.and_or ? "yes" : "no");
  human += std::string("\nlatin-square polymorphism: ") +
           (report.latin_square ? "yes" : "no");
  emit(config, j, human);
  return report.trivial_at_1 ? kAffirmative : kNegative;
}

int run_atlas(const CommonConfig& config, std::size_t max_m, bool counts) {
  const std::vector<AtlasRow> rows =
      atlas_sweep(max_m, counts, enumeration_options(config));
  const json j = atlas_to_json(rows);
  bool agree = true;
  std::string human;
  for (const AtlasRow& row : rows) {
    agree = agree && row.agree;
    human += "m=" + std::to_string(row.m) + " weights={";
    for (std::size_t i = 0; i < row.weights.size(); ++i)
      human += (i ? "," : "") + std::to_string(row.weights[i]);
    human += "} kind=" + structure_kind_name(row.structure.kind) +
             " neg-trivial=" + (row.classification.phi_neg_trivial ? "yes" : "no") +
             " id-trivial=" + (row.classification.phi_id_trivial ? "yes" : "no") +
             std::string(" agree=") + (row.agree ? "yes" : "no") + "\n";
  }
  human += std::string("all agree: ") + (agree ? "yes" : "no");
  emit(config, j, human);
  return agree ? kAffirmative : kNegative;
}

int run_impossibility(const CommonConfig& config, std::size_t arity) {
  const Predicate p = resolve_predicate(config);
  ImpossibilityOptions options;
  options.enumeration = enumeration_options(config);
  options.detectors = detector_limits(config);
  options.tight_exponent = config.tight_exponent;
  options.max_witness_arity = config.witness_arity_max;
  const UnanimityVerdict verdict = check_impossibility_unanimity(p, arity, options);
  const json j = unanimity_verdict_to_json(verdict);
  std::string human = std::string("impossibility domain: ") +
                      (verdict.is_impossibility_domain ? "yes" : "no") +
                      " (arity " + std::to_string(arity) + ")";
  if (verdict.witness)
    human += "\nwitness (" + witness_source_name(verdict.source) +
             ", verified " + (verdict.witness_verified ? "exhaustively" : "structurally") +
             "): " + tuple_to_json(*verdict.witness).dump();
  emit(config, j, human);
  return verdict.is_impossibility_domain ? kAffirmative : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polymorphism triviality toolkit"};
  app.require_subcommand(1);

  CommonConfig config;
  std::string functions_path;
  std::size_t arity = 2;
  std::size_t trivial_arity = 0;  // 0 = decide via the arity-2 reduction
  std::size_t max_m = 3;
  bool counts = true;
  int result = kAffirmative;

  CLI::App* check = app.add_subcommand(
      "check", "Is a tuple of function tables a polymorphism?");
  add_common(check, config, false);
  check->add_option("-f,--functions", functions_path, "Function tuple file (JSON)")
      ->required()
      ->envname("POLYTRIV_FUNCTIONS");
  check->callback([&] { result = run_check(config, functions_path); });

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "List every polymorphism at an arity, in canonical order");
  add_common(enumerate, config, false);
  enumerate->add_option("-n,--arity", arity, "Arity to enumerate")
      ->envname("POLYTRIV_ARITY");
  enumerate->callback([&] { result = run_enumerate(config, arity); });

  CLI::App* trivial = app.add_subcommand(
      "trivial", "Classify every polymorphism as dictatorial or certificate-type");
  add_common(trivial, config, true);
  trivial
      ->add_option("-n,--arity", trivial_arity,
                   "Check one arity instead of deciding via arity 2")
      ->envname("POLYTRIV_ARITY");
  trivial->callback([&] { result = run_trivial(config, trivial_arity); });

  CLI::App* reduce = app.add_subcommand(
      "reduce", "Arity-1 verdict plus the three structural escape detectors");
  add_common(reduce, config, true);
  reduce
      ->add_option("--latin-k-max", config.latin_k_max,
                   "Largest alphabet for latin-square enumeration")
      ->envname("POLYTRIV_LATIN_K_MAX");
  reduce
      ->add_option("--and-or-b-max", config.and_or_b_max,
                   "Cap on binary coordinates scanned by the AND/OR detector")
      ->envname("POLYTRIV_AND_OR_B_MAX");
  reduce->callback([&] { result = run_reduce(config); });

  CLI::App* atlas = app.add_subcommand(
      "atlas", "Sweep all non-degenerate symmetric weight sets");
  add_common(atlas, config, false);
  atlas->add_option("--max-m", max_m, "Largest number of coordinates")
      ->envname("POLYTRIV_MAX_M");
  atlas->add_flag("--counts,!--no-counts", counts,
                  "Include full arity-1/2 polymorphism counts");
  atlas->callback([&] { result = run_atlas(config, max_m, counts); });

  CLI::App* impossibility = app.add_subcommand(
      "impossibility", "Is every unanimous polymorphism a common projection?");
  add_common(impossibility, config, false);
  impossibility->add_option("-n,--arity", arity, "Arity to scan")
      ->envname("POLYTRIV_ARITY");
  impossibility
      ->add_flag("--tight-exponent", config.tight_exponent,
                 "Use the lcm of row-permutation orders as the power exponent")
      ->envname("POLYTRIV_TIGHT_EXPONENT");
  impossibility
      ->add_option("--witness-arity-max", config.witness_arity_max,
                   "Largest witness arity the power construction may emit")
      ->envname("POLYTRIV_WITNESS_ARITY_MAX");
  impossibility
      ->add_option("--latin-k-max", config.latin_k_max,
                   "Largest alphabet for latin-square enumeration")
      ->envname("POLYTRIV_LATIN_K_MAX");
  impossibility
      ->add_option("--and-or-b-max", config.and_or_b_max,
                   "Cap on binary coordinates scanned by the AND/OR detector")
      ->envname("POLYTRIV_AND_OR_B_MAX");
  impossibility->callback([&] { result = run_impossibility(config, arity); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const budget_error& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kResource;
  } catch (const capability_error& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kResource;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return result;
}
