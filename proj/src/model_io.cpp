#include "assignalg/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace assignalg {

namespace {

using Json = nlohmann::ordered_json;

Rational json_rational(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("field '" + field + "' must be a rational string");
}

std::vector<Rational> json_vector(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("field '" + field + "' must be an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(json_rational(e, field));
  return out;
}

std::vector<std::vector<Rational>> json_vectors(const Json& j,
                                                const std::string& field) {
  if (!j.is_array()) throw ParseError("field '" + field + "' must be an array");
  std::vector<std::vector<Rational>> out;
  for (const auto& e : j) out.push_back(json_vector(e, field));
  return out;
}

Subalgebra json_subalgebra(const Json& j, int ambient_dim,
                           const std::string& field) {
  if (!j.is_object()) {
    throw ParseError("field '" + field + "' must be {\"span\": ...} or {\"kernel\": ...}");
  }
  if (j.contains("span")) {
    return Subalgebra::from_span(json_vectors(j.at("span"), field), ambient_dim);
  }
  if (j.contains("kernel")) {
    std::vector<LinearForm> forms;
    for (auto& v : json_vectors(j.at("kernel"), field)) forms.push_back(std::move(v));
    return Subalgebra::from_kernel(forms, ambient_dim);
  }
  throw ParseError("field '" + field + "' needs a 'span' or 'kernel' key");
}

Json rational_json(const Rational& r) { return Json(rational_to_string(r)); }

Json vector_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rational_json(r));
  return out;
}

Json subalgebra_json(const Subalgebra& h) {
  Json rows = Json::array();
  for (int i = 0; i < h.dim(); ++i) rows.push_back(vector_json(h.basis().row(i)));
  return Json{{"span", rows}};
}

GkmPresentation parse_gkm(const Json& j, int torus_dim) {
  if (!j.contains("components")) throw ParseError("gkm document needs 'components'");
  std::vector<GkmComponent> components;
  std::vector<std::string> names;
  for (const auto& cj : j.at("components")) {
    GkmComponent c;
    if (!cj.contains("name") || !cj.at("name").is_string()) {
      throw ParseError("component needs a string 'name'");
    }
    c.name = cj.at("name").get<std::string>();
    if (cj.contains("moment")) c.moment = json_rational(cj.at("moment"), "moment");
    if (cj.contains("weights")) {
      for (auto& w : json_vectors(cj.at("weights"), "weights")) {
        if (static_cast<int>(w.size()) != torus_dim) {
          throw ParseError("weight length does not match torus_dim");
        }
        c.weights.push_back(std::move(w));
      }
    }
    names.push_back(c.name);
    components.push_back(std::move(c));
  }
  auto index_of = [&](const std::string& name) {
    for (size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return static_cast<int>(i);
    }
    throw ParseError("unknown component name '" + name + "'");
  };

  std::vector<GkmPiece> pieces;
  if (j.contains("pieces")) {
    for (const auto& pj : j.at("pieces")) {
      GkmPiece piece{json_subalgebra(pj.at("g"), torus_dim, "g"), {}};
      if (!pj.contains("members")) throw ParseError("piece needs 'members'");
      for (const auto& mj : pj.at("members")) {
        if (!mj.is_string()) throw ParseError("piece members are component names");
        piece.members.push_back(index_of(mj.get<std::string>()));
      }
      pieces.push_back(std::move(piece));
    }
  }
  return GkmPresentation(torus_dim, std::move(components), std::move(pieces));
}

StratifiedSpace parse_strata(const Json& j, int torus_dim, bool* needed_closure) {
  if (!j.contains("strata")) throw ParseError("strata document needs 'strata'");
  std::vector<Stratum> strata;
  std::vector<std::string> ids;
  for (const auto& sj : j.at("strata")) {
    if (!sj.contains("id") || !sj.at("id").is_string()) {
      throw ParseError("stratum needs a string 'id'");
    }
    std::string id = sj.at("id").get<std::string>();
    if (!sj.contains("isotropy")) throw ParseError("stratum needs 'isotropy'");
    strata.push_back(
        Stratum{id, json_subalgebra(sj.at("isotropy"), torus_dim, "isotropy")});
    ids.push_back(std::move(id));
  }
  auto index_of = [&](const std::string& id) {
    for (size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] == id) return static_cast<int>(i);
    }
    throw ParseError("unknown stratum id '" + id + "'");
  };
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("order")) {
    for (const auto& pj : j.at("order")) {
      if (!pj.is_array() || pj.size() != 2) {
        throw ParseError("order entries are pairs of stratum ids");
      }
      pairs.emplace_back(index_of(pj.at(0).get<std::string>()),
                         index_of(pj.at(1).get<std::string>()));
    }
  }
  StratifiedSpace space(torus_dim, std::move(strata), pairs);
  if (needed_closure) *needed_closure = !space.input_was_closed();
  return space;
}

ExtensionProblem parse_extension(const Json& j, int ambient_dim) {
  ExtensionProblem prob;
  prob.ambient_dim = ambient_dim;
  if (!j.contains("forms")) throw ParseError("extension document needs 'forms'");
  for (auto& f : json_vectors(j.at("forms"), "forms")) {
    if (static_cast<int>(f.size()) != ambient_dim) {
      throw ParseError("form length does not match ambient dimension");
    }
    prob.forms.push_back(std::move(f));
  }
  if (!j.contains("constraints")) throw ParseError("extension document needs 'constraints'");
  for (const auto& cj : j.at("constraints")) {
    ExtensionConstraint con;
    if (!cj.contains("forms")) throw ParseError("constraint needs 'forms'");
    for (const auto& fi : cj.at("forms")) {
      if (!fi.is_number_integer()) throw ParseError("constraint form indices are integers");
      con.form_indices.push_back(fi.get<int>());
    }
    if (!cj.contains("target") || !cj.at("target").is_string()) {
      throw ParseError("constraint needs a polynomial 'target'");
    }
    con.target = Polynomial::parse(cj.at("target").get<std::string>(), ambient_dim);
    prob.constraints.push_back(std::move(con));
  }
  return prob;
}

}  // namespace

ModelDocument parse_model(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ParseError("document needs a 'kind' field");
  }
  std::string kind = j.at("kind").get<std::string>();
  auto get_dim = [&](const char* field) {
    if (!j.contains(field) || !j.at(field).is_number_integer()) {
      throw ParseError(std::string("document needs an integer '") + field + "'");
    }
    return j.at(field).get<int>();
  };

  ModelDocument doc;
  if (kind == "gkm") {
    doc.kind = ModelKind::kGkm;
    int torus_dim = get_dim("torus_dim");
    doc.gkm = parse_gkm(j, torus_dim);
    if (j.contains("circle")) {
      doc.circle = json_subalgebra(j.at("circle"), torus_dim, "circle");
    }
  } else if (kind == "strata") {
    doc.kind = ModelKind::kStrata;
    int torus_dim = get_dim("torus_dim");
    doc.strata = parse_strata(j, torus_dim, &doc.strata_input_needed_closure);
    if (j.contains("circle")) {
      doc.circle = json_subalgebra(j.at("circle"), torus_dim, "circle");
    }
  } else if (kind == "extension") {
    doc.kind = ModelKind::kExtension;
    doc.extension = parse_extension(j, get_dim("ambient_dim"));
  } else {
    throw ParseError("unknown document kind '" + kind + "'");
  }
  return doc;
}

std::string print_model(const ModelDocument& doc) {
  Json j;
  j["schema"] = kSchemaTag;
  switch (doc.kind) {
    case ModelKind::kGkm: {
      const auto& p = *doc.gkm;
      j["kind"] = "gkm";
      j["torus_dim"] = p.torus_dim();
      Json comps = Json::array();
      for (const auto& c : p.components()) {
        Json cj{{"name", c.name}};
        if (c.moment) cj["moment"] = rational_json(*c.moment);
        if (!c.weights.empty()) {
          Json ws = Json::array();
          for (const auto& w : c.weights) ws.push_back(vector_json(w));
          cj["weights"] = ws;
        }
        comps.push_back(std::move(cj));
      }
      j["components"] = comps;
      Json pieces = Json::array();
      for (const auto& piece : p.pieces()) {
        Json members = Json::array();
        for (int m : piece.members) members.push_back(p.components()[m].name);
        pieces.push_back(Json{{"g", subalgebra_json(piece.g)}, {"members", members}});
      }
      j["pieces"] = pieces;
      break;
    }
    case ModelKind::kStrata: {
      const auto& s = *doc.strata;
      j["kind"] = "strata";
      j["torus_dim"] = s.torus_dim();
      Json strata = Json::array();
      for (const auto& st : s.strata()) {
        strata.push_back(
            Json{{"id", st.id}, {"isotropy", subalgebra_json(st.isotropy)}});
      }
      j["strata"] = strata;
      Json order = Json::array();
      for (const auto& [y, z] : s.strict_relations()) {
        order.push_back(Json::array({s.stratum(y).id, s.stratum(z).id}));
      }
      j["order"] = order;
      break;
    }
    case ModelKind::kExtension: {
      const auto& prob = *doc.extension;
      j["kind"] = "extension";
      j["ambient_dim"] = prob.ambient_dim;
      Json forms = Json::array();
      for (const auto& f : prob.forms) forms.push_back(vector_json(f));
      j["forms"] = forms;
      Json cons = Json::array();
      for (const auto& c : prob.constraints) {
        cons.push_back(Json{{"forms", c.form_indices},
                            {"target", c.target.to_string()}});
      }
      j["constraints"] = cons;
      break;
    }
  }
  if (doc.circle) j["circle"] = subalgebra_json(*doc.circle);
  return j.dump(2) + "\n";
}

ModelDocument load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

std::string tuple_to_string(const AssignmentTuple& tuple) {
  std::string out = "(";
  for (size_t i = 0; i < tuple.polys.size(); ++i) {
    if (i > 0) out += ", ";
    out += tuple.polys[i].to_string();
  }
  out += ")";
  return out;
}

namespace {

Json generators_json(const std::vector<Generator>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) {
    Json polys = Json::array();
    for (const auto& p : g.tuple.polys) polys.push_back(p.to_string());
    out.push_back(Json{{"degree", g.degree}, {"tuple", polys}});
  }
  return out;
}

std::string generators_text(const std::vector<Generator>& gens) {
  std::string out;
  for (const auto& g : gens) {
    out += "  degree " + std::to_string(g.degree) + ": " +
           tuple_to_string(g.tuple) + "\n";
  }
  return out;
}

std::string dims_text(const std::vector<int>& dims) {
  std::string out = "(";
  for (size_t d = 0; d < dims.size(); ++d) {
    if (d > 0) out += ", ";
    out += std::to_string(dims[d]);
  }
  return out + ")";
}

Json machine_wrapper(const char* report_kind) {
  Json j;
  j["schema"] = kSchemaTag;
  j["report"] = report_kind;
  return j;
}

std::string finish_machine(Json j) { return j.dump(2) + "\n"; }

const char* freeness_text(Freeness f) {
  switch (f) {
    case Freeness::kFree:
      return "free";
    case Freeness::kNotFree:
      return "not_free";
    default:
      return "undetermined_at_bound";
  }
}

}  // namespace

std::string render_module_report(const GradedModuleReport& report,
                                 OutputFormat format) {
  if (format == OutputFormat::kMachine) {
    Json j = machine_wrapper("module");
    j["degree_bound"] = report.degree_bound;
    j["dims"] = report.dims;
    j["rank"] = report.rank;
    j["freeness"] = freeness_text(report.freeness);
    j["generators"] = generators_json(report.generators);
    if (!report.caveat.empty()) j["caveat"] = report.caveat;
    return finish_machine(std::move(j));
  }
  std::string out;
  out += "degree bound: " + std::to_string(report.degree_bound) + "\n";
  out += "dims by degree: " + dims_text(report.dims) + "\n";
  out += "rank: " + std::to_string(report.rank) + "\n";
  out += std::string("freeness: ") + freeness_text(report.freeness) + "\n";
  out += "generators (" + std::to_string(report.generators.size()) + "):\n";
  out += generators_text(report.generators);
  if (!report.caveat.empty()) out += "caveat: " + report.caveat + "\n";
  return out;
}

std::string render_membership(const MembershipResult& result, OutputFormat format) {
  if (format == OutputFormat::kMachine) {
    Json j = machine_wrapper("membership");
    j["member"] = result.ok;
    Json fails = Json::array();
    for (const auto& f : result.failures) {
      fails.push_back(Json{{"piece", f.piece_index},
                           {"components", Json::array({f.member_r, f.member_s})},
                           {"residue", f.residue.to_string()}});
    }
    j["failures"] = fails;
    return finish_machine(std::move(j));
  }
  std::string out = result.ok ? "member: yes\n" : "member: no\n";
  for (const auto& f : result.failures) {
    out += "  piece " + std::to_string(f.piece_index) + ", components " +
           std::to_string(f.member_r) + " vs " + std::to_string(f.member_s) +
           ": residue " + f.residue.to_string() + "\n";
  }
  return out;
}

std::string render_surjectivity(const SurjectivityReport& report,
                                OutputFormat format) {
  if (format == OutputFormat::kMachine) {
    Json j = machine_wrapper("surjectivity");
    j["all_pass"] = report.all_pass;
    Json verdicts = Json::array();
    for (const auto& v : report.verdicts) {
      verdicts.push_back(Json{{"component", v.component},
                              {"classes", v.class_count},
                              {"independent", v.independent}});
    }
    j["verdicts"] = verdicts;
    return finish_machine(std::move(j));
  }
  std::string out = std::string("surjectivity hypothesis: ") +
                    (report.all_pass ? "holds" : "fails") + "\n";
  for (const auto& v : report.verdicts) {
    out += "  component " + std::to_string(v.component) + ": " +
           std::to_string(v.class_count) + " weight classes, " +
           (v.independent ? "independent" : "dependent") + "\n";
  }
  return out;
}

std::string render_kernel_report(const KernelReport& report, OutputFormat format) {
  if (format == OutputFormat::kMachine) {
    Json j = machine_wrapper("kernel");
    j["plus_dims"] = report.plus_dims;
    j["minus_dims"] = report.minus_dims;
    j["direct_sum"] = report.direct_sum;
    j["plus_generators"] = generators_json(report.plus_generators);
    j["minus_generators"] = generators_json(report.minus_generators);
    return finish_machine(std::move(j));
  }
  std::string out;
  out += "K+ dims by degree: " + dims_text(report.plus_dims) + "\n";
  out += "K- dims by degree: " + dims_text(report.minus_dims) + "\n";
  out += std::string("direct sum: ") + (report.direct_sum ? "yes" : "no") + "\n";
  out += "K+ generators:\n" + generators_text(report.plus_generators);
  out += "K- generators:\n" + generators_text(report.minus_generators);
  return out;
}

std::string render_quotient_report(const QuotientReport& report,
                                   OutputFormat format) {
  if (format == OutputFormat::kMachine) {
    Json j = machine_wrapper("quotient");
    j["dims"] = report.dims;
    j["generators"] = generators_json(report.generators);
    j["surjectivity_hypothesis_holds"] = report.surjectivity_hypothesis_holds;
    if (!report.caveat.empty()) j["caveat"] = report.caveat;
    return finish_machine(std::move(j));
  }
  std::string out;
  out += "quotient dims by degree: " + dims_text(report.dims) + "\n";
  out += "generators over the reduced subring:\n" +
         generators_text(report.generators);
  out += report.surjectivity_hypothesis_holds
             ? "identification with the reduced-space algebra: justified\n"
             : "identification with the reduced-space algebra: not claimed\n";
  if (!report.caveat.empty()) out += "caveat: " + report.caveat + "\n";
  return out;
}

std::string render_extend_result(const ExtendSolveResult& result, int nvars,
                                 OutputFormat format) {
  if (format == OutputFormat::kMachine) {
    Json j = machine_wrapper("extend");
    if (const auto* witness = std::get_if<Polynomial>(&result)) {
      j["feasible"] = true;
      j["witness"] = witness->to_string();
    } else {
      const auto& inf = std::get<Infeasible>(result);
      j["feasible"] = false;
      j["obstruction_degree"] = inf.obstruction_degree;
      j["certificate_row"] = vector_json(inf.certificate_row);
    }
    return finish_machine(std::move(j));
  }
  (void)nvars;
  if (const auto* witness = std::get_if<Polynomial>(&result)) {
    return "feasible: yes\nwitness: " + witness->to_string() + "\n";
  }
  const auto& inf = std::get<Infeasible>(result);
  std::string out = "feasible: no\nobstruction degree: " +
                    std::to_string(inf.obstruction_degree) + "\ncertificate row:";
  for (const auto& r : inf.certificate_row) out += " " + rational_to_string(r);
  out += "\n";
  return out;
}

OracleComparison oracle_compare(const GkmPresentation& gkm,
                                const StratifiedSpace& strata, int degree_bound) {
  OracleComparison cmp;
  for (int d = 0; d <= degree_bound; ++d) {
    cmp.gkm_dims.push_back(static_cast<int>(graded_basis(gkm, d).size()));
    cmp.strata_dims.push_back(
        static_cast<int>(graded_basis_oracle(strata, d).size()));
  }
  cmp.equal = cmp.gkm_dims == cmp.strata_dims;
  return cmp;
}

std::string render_oracle_comparison(const OracleComparison& cmp,
                                     OutputFormat format) {
  if (format == OutputFormat::kMachine) {
    Json j = machine_wrapper("oracle_compare");
    j["gkm_dims"] = cmp.gkm_dims;
    j["strata_dims"] = cmp.strata_dims;
    j["equal"] = cmp.equal;
    return finish_machine(std::move(j));
  }
  std::string out;
  out += "gkm dims:    " + dims_text(cmp.gkm_dims) + "\n";
  out += "strata dims: " + dims_text(cmp.strata_dims) + "\n";
  out += std::string("equal: ") + (cmp.equal ? "yes" : "no") + "\n";
  return out;
}

}  // namespace assignalg
