#pragma once

#include <optional>
#include <string>
#include <vector>

#include "assignalg/extend.hpp"
#include "assignalg/gkm.hpp"
#include "assignalg/kirwan.hpp"
#include "assignalg/strata.hpp"

namespace assignalg {

inline constexpr const char* kSchemaTag = "assignalg/1";

enum class ModelKind { kGkm, kStrata, kExtension };

// One input document. Exactly one of the bodies is populated, matching
// `kind`. Rationals travel as "num/den" strings, polynomials in the
// canonical u1..uN text form, subalgebras as {"span": ...} or
// {"kernel": ...}.
struct ModelDocument {
  ModelKind kind;
  std::optional<GkmPresentation> gkm;
  std::optional<StratifiedSpace> strata;
  std::optional<ExtensionProblem> extension;
  // Optional circle direction for quotient computations (gkm kind).
  std::optional<Subalgebra> circle;
  // True when a strata document's order pairs needed transitive closing.
  bool strata_input_needed_closure = false;
};

// Throws ParseError with a description of the offending field.
ModelDocument parse_model(const std::string& text);
std::string print_model(const ModelDocument& doc);

ModelDocument load_model_file(const std::string& path);

// Deterministic rendering of the library reports, as human-readable text
// or as a schema-tagged structured document.
enum class OutputFormat { kText, kMachine };

std::string render_module_report(const GradedModuleReport& report,
                                 OutputFormat format);
std::string render_membership(const MembershipResult& result, OutputFormat format);
std::string render_surjectivity(const SurjectivityReport& report,
                                OutputFormat format);
std::string render_kernel_report(const KernelReport& report, OutputFormat format);
std::string render_quotient_report(const QuotientReport& report,
                                   OutputFormat format);
std::string render_extend_result(const ExtendSolveResult& result, int nvars,
                                 OutputFormat format);

struct OracleComparison {
  std::vector<int> gkm_dims;
  std::vector<int> strata_dims;
  bool equal = true;
};

OracleComparison oracle_compare(const GkmPresentation& gkm,
                                const StratifiedSpace& strata, int degree_bound);
std::string render_oracle_comparison(const OracleComparison& cmp,
                                     OutputFormat format);

std::string tuple_to_string(const AssignmentTuple& tuple);

}  // namespace assignalg
