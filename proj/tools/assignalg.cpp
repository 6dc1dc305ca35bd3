#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "assignalg/corpus.hpp"
#include "assignalg/extend.hpp"
#include "assignalg/gkm.hpp"
#include "assignalg/kirwan.hpp"
#include "assignalg/model_io.hpp"
#include "assignalg/strata.hpp"

namespace {

using namespace assignalg;

constexpr int kExitNegative = 1;
constexpr int kExitMalformed = 2;

OutputFormat parse_format(const std::string& name) {
  if (name == "machine") return OutputFormat::kMachine;
  return OutputFormat::kText;
}

int default_bound(const ModelDocument& doc) {
  switch (doc.kind) {
    case ModelKind::kGkm:
      return doc.gkm->component_count();
    case ModelKind::kStrata:
      return std::max(1, doc.strata->stratum_count());
    case ModelKind::kExtension:
      return doc.extension->ambient_dim;
  }
  return 1;
}

Subalgebra parse_circle_flag(const std::string& text, int ambient_dim) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (static_cast<int>(v.size()) != ambient_dim) {
    throw ParseError("circle vector length does not match the torus dimension");
  }
  return Subalgebra::from_span({v}, ambient_dim);
}

AssignmentTuple parse_tuple_flag(const std::string& text, int nvars, int n) {
  AssignmentTuple tuple;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    tuple.polys.push_back(Polynomial::parse(item, nvars));
  }
  if (static_cast<int>(tuple.polys.size()) != n) {
    throw ParseError("tuple needs one polynomial per component, ';'-separated");
  }
  return tuple;
}

int run_validate(const std::string& file, OutputFormat format) {
  ModelDocument doc = load_model_file(file);
  if (format == OutputFormat::kMachine) {
    std::cout << "{\n  \"schema\": \"" << kSchemaTag
              << "\",\n  \"report\": \"validate\",\n  \"valid\": true\n}\n";
  } else {
    std::cout << "valid\n";
    if (doc.strata_input_needed_closure) {
      std::cerr << "note: the order relation was not transitively closed; "
                   "closure was applied\n";
    }
  }
  return 0;
}

int run_basis(const std::string& file, int bound, OutputFormat format) {
  ModelDocument doc = load_model_file(file);
  std::vector<int> dims;
  if (doc.kind == ModelKind::kGkm) {
    // Dimensions plus the minimal-generator degree table.
    std::cout << render_module_report(module_report(*doc.gkm, bound), format);
    return 0;
  } else if (doc.kind == ModelKind::kStrata) {
    for (int d = 0; d <= bound; ++d) {
      dims.push_back(static_cast<int>(graded_basis_oracle(*doc.strata, d).size()));
    }
  } else {
    throw ParseError("'basis' expects a gkm or strata document");
  }
  if (format == OutputFormat::kMachine) {
    std::cout << "{\n  \"schema\": \"" << kSchemaTag
              << "\",\n  \"report\": \"basis\",\n  \"dims\": [";
    for (size_t i = 0; i < dims.size(); ++i) {
      std::cout << (i ? ", " : "") << dims[i];
    }
    std::cout << "]\n}\n";
  } else {
    for (int d = 0; d <= bound; ++d) {
      std::cout << "degree " << d << ": dim " << dims[d] << "\n";
    }
  }
  return 0;
}

int run_members(const std::string& file, const std::string& tuple_text,
                OutputFormat format) {
  ModelDocument doc = load_model_file(file);
  if (doc.kind != ModelKind::kGkm) {
    throw ParseError("'members' expects a gkm document");
  }
  AssignmentTuple tuple = parse_tuple_flag(tuple_text, doc.gkm->torus_dim(),
                                           doc.gkm->component_count());
  MembershipResult result = is_member(*doc.gkm, tuple);
  std::cout << render_membership(result, format);
  return result.ok ? 0 : kExitNegative;
}

int run_report(const std::string& file, int bound, OutputFormat format) {
  ModelDocument doc = load_model_file(file);
  if (doc.kind == ModelKind::kGkm) {
    std::cout << render_module_report(module_report(*doc.gkm, bound), format);
    return 0;
  }
  if (doc.kind == ModelKind::kStrata) {
    const auto& s = *doc.strata;
    std::vector<int> dims;
    for (int d = 0; d <= bound; ++d) {
      dims.push_back(static_cast<int>(graded_basis_oracle(s, d).size()));
    }
    SkeletonCheck cs = chang_skjelbred_check(s, bound);
    auto orphans = strata_without_fixed_below(s);
    if (format == OutputFormat::kMachine) {
      std::cout << "{\n  \"schema\": \"" << kSchemaTag
                << "\",\n  \"report\": \"strata\",\n  \"dims\": [";
      for (size_t i = 0; i < dims.size(); ++i) {
        std::cout << (i ? ", " : "") << dims[i];
      }
      std::cout << "],\n  \"skeleton_images_equal\": "
                << (cs.equal ? "true" : "false") << "\n}\n";
    } else {
      for (int d = 0; d <= bound; ++d) {
        std::cout << "degree " << d << ": dim " << dims[d] << "\n";
      }
      std::cout << "one-skeleton image matches full image: "
                << (cs.equal ? "yes" : "no") << "\n";
      for (int i : orphans) {
        std::cerr << "lint: stratum '" << s.stratum(i).id
                  << "' has no fixed stratum below it\n";
      }
    }
    return 0;
  }
  throw ParseError("'report' expects a gkm or strata document");
}

int run_kirwan(const std::string& file, int bound, const std::string& circle_flag,
               OutputFormat format) {
  ModelDocument doc = load_model_file(file);
  if (doc.kind != ModelKind::kGkm) {
    throw ParseError("'kirwan' expects a gkm document");
  }
  const auto& p = *doc.gkm;
  bool has_weights = true;
  for (const auto& c : p.components()) {
    if (c.weights.empty()) has_weights = false;
  }
  if (has_weights) {
    std::cout << render_surjectivity(check_surjectivity_hypothesis(p), format);
  }
  std::cout << render_kernel_report(kernel_generators(p, bound), format);
  std::optional<Subalgebra> circle = doc.circle;
  if (!circle_flag.empty()) circle = parse_circle_flag(circle_flag, p.torus_dim());
  if (circle) {
    std::cout << render_quotient_report(quotient_report(p, *circle, bound), format);
  }
  return 0;
}

int run_extend(const std::string& file, int bound, OutputFormat format) {
  ModelDocument doc = load_model_file(file);
  if (doc.kind != ModelKind::kExtension) {
    throw ParseError("'extend' expects an extension document");
  }
  ExtendSolveResult result = extend_solve(*doc.extension, bound);
  std::cout << render_extend_result(result, doc.extension->ambient_dim, format);
  return std::holds_alternative<Polynomial>(result) ? 0 : kExitNegative;
}

int run_quotient_circle(const std::string& file, int bound,
                        const std::string& circle_flag, OutputFormat format) {
  ModelDocument doc = load_model_file(file);
  if (doc.kind != ModelKind::kStrata) {
    throw ParseError("'quotient-circle' expects a strata document");
  }
  const auto& s = *doc.strata;
  std::optional<Subalgebra> circle = doc.circle;
  if (!circle_flag.empty()) circle = parse_circle_flag(circle_flag, s.torus_dim());
  if (!circle) throw ParseError("no circle direction given (document or --circle)");

  CircleQuotient q = quotient_by_circle(s, *circle);
  std::vector<int> up_dims;
  std::vector<int> down_dims;
  for (int d = 0; d <= bound; ++d) {
    up_dims.push_back(static_cast<int>(graded_basis_oracle(s, d).size()));
    down_dims.push_back(static_cast<int>(graded_basis_oracle(q.space, d).size()));
  }
  bool equal = up_dims == down_dims;
  if (format == OutputFormat::kMachine) {
    std::cout << "{\n  \"schema\": \"" << kSchemaTag
              << "\",\n  \"report\": \"quotient_circle\",\n  \"dims\": [";
    for (size_t i = 0; i < down_dims.size(); ++i) {
      std::cout << (i ? ", " : "") << down_dims[i];
    }
    std::cout << "],\n  \"dims_preserved\": " << (equal ? "true" : "false")
              << "\n}\n";
  } else {
    for (int d = 0; d <= bound; ++d) {
      std::cout << "degree " << d << ": dim " << up_dims[d] << " -> "
                << down_dims[d] << "\n";
    }
    std::cout << "dimensions preserved: " << (equal ? "yes" : "no") << "\n";
  }
  return equal ? 0 : kExitNegative;
}

int run_oracle_compare(const std::string& gkm_file, const std::string& strata_file,
                       int bound, OutputFormat format) {
  ModelDocument gdoc = load_model_file(gkm_file);
  ModelDocument sdoc = load_model_file(strata_file);
  if (gdoc.kind != ModelKind::kGkm || sdoc.kind != ModelKind::kStrata) {
    throw ParseError("'oracle-compare' expects a gkm document then a strata document");
  }
  OracleComparison cmp = oracle_compare(*gdoc.gkm, *sdoc.strata, bound);
  std::cout << render_oracle_comparison(cmp, format);
  return cmp.equal ? 0 : kExitNegative;
}

struct ClaimLog {
  bool all_pass = true;
  void check(const std::string& name, bool ok) {
    std::cout << (ok ? "pass" : "FAIL") << "  " << name << "\n";
    if (!ok) all_pass = false;
  }
};

std::vector<int> generator_degrees(const std::vector<Generator>& gens) {
  std::vector<int> out;
  for (const auto& g : gens) out.push_back(g.degree);
  return out;
}

int run_examples() {
  ClaimLog log;

  auto gkm_of = [](const std::string& name) {
    return *parse_model(corpus_entry(name).document).gkm;
  };
  auto strata_of = [](const std::string& name) {
    return *parse_model(corpus_entry(name).document).strata;
  };

  {
    OracleComparison cmp = oracle_compare(gkm_of("weighted-projective-gkm"),
                                          strata_of("weighted-projective-strata"), 5);
    log.check("weighted projective line: gkm and strata dimensions agree",
              cmp.equal && cmp.gkm_dims == std::vector<int>({1, 2, 2, 2, 2, 2}));
  }
  {
    OracleComparison cmp = oracle_compare(gkm_of("roots-of-unity-gkm"),
                                          strata_of("roots-of-unity-strata"), 5);
    log.check("three fixed points: gkm and strata dimensions agree",
              cmp.equal && cmp.gkm_dims == std::vector<int>({1, 3, 3, 3, 3, 3}));
  }
  {
    StratifiedSpace s = strata_of("three-sphere-strata");
    std::vector<int> dims;
    for (int d = 0; d <= 5; ++d) {
      dims.push_back(static_cast<int>(graded_basis_oracle(s, d).size()));
    }
    bool ok = dims == std::vector<int>({1, 2, 2, 2, 2, 2});
    CircleQuotient q = quotient_by_circle(
        s, *parse_model(corpus_entry("three-sphere-strata").document).circle);
    for (int d = 0; d <= 5 && ok; ++d) {
      ok = static_cast<int>(graded_basis_oracle(q.space, d).size()) == dims[d];
    }
    log.check("three-sphere: dimensions and diagonal-circle quotient", ok);
  }
  {
    GradedModuleReport r = module_report(gkm_of("suspension-torus-gkm"), 4);
    log.check("torus suspension: rank 2, not free, generators (0,1,1)",
              r.rank == 2 && r.freeness == Freeness::kNotFree &&
                  generator_degrees(r.generators) == std::vector<int>({0, 1, 1}));
  }
  {
    GkmPresentation p = gkm_of("sphere-product-gkm");
    GradedModuleReport r = module_report(p, 4);
    log.check("sphere product: rank 8, free, generators (0,1,1,1,1,2,2,2)",
              r.rank == 8 && r.freeness == Freeness::kFree &&
                  generator_degrees(r.generators) ==
                      std::vector<int>({0, 1, 1, 1, 1, 2, 2, 2}));
    KernelReport kr = kernel_generators(p, 4);
    log.check("sphere product: kernel halves have generators (1,2,2,2)",
              kr.direct_sum &&
                  generator_degrees(kr.plus_generators) ==
                      std::vector<int>({1, 2, 2, 2}) &&
                  generator_degrees(kr.minus_generators) ==
                      std::vector<int>({1, 2, 2, 2}));
    Subalgebra diag = Subalgebra::from_span({{Rational(1), Rational(1)}}, 2);
    QuotientReport qr = quotient_report(p, diag, 4);
    GkmPresentation reduced = gkm_of("reduced-four-points-gkm");
    bool dims_ok = qr.dims == std::vector<int>({1, 4, 4, 4, 4});
    for (int d = 0; d <= 4 && dims_ok; ++d) {
      dims_ok = static_cast<int>(graded_basis(reduced, d).size()) == qr.dims[d];
    }
    log.check("sphere product: quotient dims (1,4,4,4,4) match the reduced model",
              dims_ok && qr.surjectivity_hypothesis_holds &&
                  generator_degrees(qr.generators) ==
                      std::vector<int>({0, 1, 1, 1}));
  }
  {
    ExtendSolveResult r =
        extend_solve(*parse_model(corpus_entry("nonsurjective-extension").document)
                          .extension,
                     3);
    const auto* inf = std::get_if<Infeasible>(&r);
    log.check("dependent forms: extension infeasible with a degree-1 obstruction",
              inf != nullptr && inf->obstruction_degree == 1);
  }
  {
    SurjectivityReport r = check_surjectivity_hypothesis(gkm_of("cp3-weights-gkm"));
    log.check("projective 3-space weights: dependent at z0, independent at z1",
              !r.all_pass && !r.verdicts[0].independent &&
                  r.verdicts[1].independent && r.verdicts[2].independent &&
                  r.verdicts[3].independent);
  }

  return log.all_pass ? 0 : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation of polynomial assignment algebras"};
  app.require_subcommand(1);

  std::string output = "text";
  app.add_option("--output", output, "output format: text or machine")
      ->check(CLI::IsMember({"text", "machine"}));

  int bound = -1;
  std::string file;
  std::string second_file;
  std::string tuple_text;
  std::string circle_flag;
  unsigned seed = 0;

  auto add_common = [&](CLI::App* cmd, bool with_file = true) {
    if (with_file) cmd->add_option("file", file, "model document")->required();
    cmd->add_option("--degree-bound", bound, "degree bound (default: model size)");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a model document");
  validate->add_option("file", file)->required();

  add_common(app.add_subcommand("basis", "per-degree dimensions"));
  CLI::App* members =
      app.add_subcommand("members", "membership test for a tuple");
  members->add_option("file", file)->required();
  members->add_option("--tuple", tuple_text, "';'-separated polynomials")
      ->required();
  add_common(app.add_subcommand("report", "graded module report"));
  CLI::App* kirwan = app.add_subcommand("kirwan", "moment-map kernel pipeline");
  add_common(kirwan);
  kirwan->add_option("--circle", circle_flag, "circle direction, comma-separated");
  add_common(app.add_subcommand("extend", "solve an extension problem"));
  CLI::App* qc = app.add_subcommand("quotient-circle", "quotient a strata model");
  add_common(qc);
  qc->add_option("--circle", circle_flag, "circle direction, comma-separated");
  CLI::App* oc = app.add_subcommand("oracle-compare",
                                    "compare gkm and strata dimensions");
  oc->add_option("gkm_file", file)->required();
  oc->add_option("strata_file", second_file)->required();
  oc->add_option("--degree-bound", bound);
  CLI::App* examples = app.add_subcommand("examples", "run the bundled models");
  examples->add_option("--seed", seed, "unused; accepted for compatibility");

  // Global flags like --output may appear after the subcommand name.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  OutputFormat format = parse_format(output);
  try {
    std::string cmd = app.get_subcommands().front()->get_name();
    if (bound < 0 && cmd != "validate" && cmd != "examples") {
      if (cmd == "extend") {
        ModelDocument doc = load_model_file(file);
        bound = default_bound(doc);
      } else if (cmd == "oracle-compare") {
        bound = default_bound(load_model_file(file));
      } else {
        bound = default_bound(load_model_file(file));
      }
    }
    if (cmd == "validate") return run_validate(file, format);
    if (cmd == "basis") return run_basis(file, bound, format);
    if (cmd == "members") return run_members(file, tuple_text, format);
    if (cmd == "report") return run_report(file, bound, format);
    if (cmd == "kirwan") return run_kirwan(file, bound, circle_flag, format);
    if (cmd == "extend") return run_extend(file, bound, format);
    if (cmd == "quotient-circle") {
      return run_quotient_circle(file, bound, circle_flag, format);
    }
    if (cmd == "oracle-compare") {
      return run_oracle_compare(file, second_file, bound, format);
    }
    if (cmd == "examples") return run_examples();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const DimensionMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
