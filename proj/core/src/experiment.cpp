#include "dml/experiment.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dml/parser.hpp"

namespace dml {

namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& key, const std::string& what) {
  throw Error("schema violation in '" + key + "': " + what);
}

std::vector<std::string> string_list(const Json& doc, const std::string& key) {
  if (!doc.contains(key)) schema_error(key, "missing");
  const Json& v = doc.at(key);
  if (!v.is_array()) schema_error(key, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) schema_error(key, "expected an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::size_t count_value(const Json& v, const std::string& key) {
  if (!v.is_number_unsigned()) {
    if (v.is_number_integer()) schema_error(key, "must be non-negative");
    schema_error(key, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

MultiPoly parse_in(const std::string& what, std::size_t index, const std::string& src, const ExperimentSpec& spec) {
  try {
    return parse_polynomial_expr(src, spec.vars, spec.field);
  } catch (const Error& e) {
    throw Error(what + "[" + std::to_string(index) + "] \"" + src + "\": " + e.what());
  }
}

// Runs one pipeline stage, prefixing any failure with the stage name.
template <typename F>
auto stage(const char* name, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const InvariantViolation& e) {
    throw InvariantViolation(std::string(name) + ": " + e.what());
  } catch (const Error& e) {
    throw Error(std::string(name) + ": " + e.what());
  }
}

OrderedJson strings(const std::vector<std::string>& v) {
  OrderedJson a = OrderedJson::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

OrderedJson render_all(std::span<const MultiPoly> polys, const ExperimentSpec& spec, const MonomialOrder& order) {
  OrderedJson a = OrderedJson::array();
  for (const auto& p : polys) a.push_back(render(p, spec.vars, order));
  return a;
}

OrderedJson render_ideal(const ReducedGroebnerBasis& gb, const ExperimentSpec& spec) {
  return render_all(gb.generators(), spec, gb.order());
}

OrderedJson spec_json(const ExperimentSpec& spec) {
  OrderedJson j;
  j["field"] = spec.field.to_string();
  j["vars"] = strings(spec.vars);
  j["phi"] = strings(spec.phi);
  j["alpha"] = strings(spec.alpha);
  j["V"] = strings(spec.variety);
  j["N"] = spec.horizon;
  OrderedJson a;
  a["a_max"] = spec.analysis.a_max;
  a["m_min"] = spec.analysis.m_min;
  a["tail_start"] = spec.analysis.tail_start;
  a["degree_cap"] = spec.analysis.degree_cap;
  a["initial_samples"] = spec.analysis.initial_samples;
  a["sample_budget"] = spec.analysis.sample_budget;
  a["depth_limit"] = spec.analysis.depth_limit;
  j["analysis"] = a;
  return j;
}

OrderedJson return_set_json(const ReturnSet& s) {
  OrderedJson j;
  j["horizon"] = s.horizon();
  j["size"] = s.size();
  j["indices"] = s.indices();
  return j;
}

OrderedJson profile_json(const DensityProfile& p) {
  OrderedJson a = OrderedJson::array();
  for (const auto& e : p.entries) {
    OrderedJson j;
    j["L"] = e.window;
    j["max_count"] = e.max_count;
    j["max_ratio"] = ratio_to_string(e.max_ratio);
    a.push_back(j);
  }
  return a;
}

OrderedJson progression_json(const Progression& p) {
  OrderedJson j;
  j["modulus"] = p.modulus;
  j["offset"] = p.offset;
  return j;
}

OrderedJson progressions_json(const std::vector<Progression>& ps) {
  OrderedJson a = OrderedJson::array();
  for (const auto& p : ps) a.push_back(progression_json(p));
  return a;
}

OrderedJson closure_json(const ClosureIdeal& c, const ExperimentSpec& spec) {
  OrderedJson j;
  j["ideal"] = render_ideal(c.ideal, spec);
  j["kind"] = "degree-capped closure";
  j["degree_cap"] = c.degree_cap;
  j["stabilized"] = c.stabilized;
  j["sample_size"] = c.sample_size;
  return j;
}

OrderedJson chain_json(const ClosureChain& chain, const ExperimentSpec& spec) {
  OrderedJson j;
  j["modulus"] = chain.modulus;
  j["base"] = chain.base;
  OrderedJson links = OrderedJson::array();
  for (const auto& l : chain.links) {
    OrderedJson lj;
    lj["offset"] = l.offset;
    lj["dimension"] = l.dimension;
    lj["closure"] = closure_json(l.closure, spec);
    links.push_back(lj);
  }
  j["links"] = links;
  j["dimensions_nonincreasing"] = chain.dimensions_nonincreasing;
  j["diagnostics"] = strings(chain.diagnostics);
  return j;
}

OrderedJson certificate_json(const PeriodicityCertificate& c, const ExperimentSpec& spec) {
  OrderedJson j;
  j["ideal"] = render_ideal(c.ideal, spec);
  j["modulus"] = c.modulus;
  j["invariant"] = c.invariant;
  OrderedJson w = OrderedJson::array();
  for (const auto& x : c.witnesses) {
    OrderedJson xj;
    xj["generator"] = render(x.generator, spec.vars, c.ideal.order());
    xj["normal_form"] = render(x.normal_form, spec.vars, c.ideal.order());
    w.push_back(xj);
  }
  j["witnesses"] = w;
  return j;
}

OrderedJson case_split_json(const CaseSplitReport& r) {
  OrderedJson j;
  j["progression"] = progression_json(r.progression);
  j["level"] = r.level;
  j["variety_dimension"] = r.variety_dimension;
  j["base_closure_dimension"] = r.base_closure_dimension;
  j["lower_dimensional"] = r.lower_dimensional;
  OrderedJson offs = OrderedJson::array();
  for (const auto& o : r.offsets) {
    OrderedJson oj;
    oj["offset"] = o.offset;
    oj["outcome"] = to_string(o.outcome);
    oj["intersection_dimension"] = o.intersection_dimension;
    oj["resolved"] = progressions_json(o.resolved);
    oj["algebraic"] = o.algebraic;
    if (o.outcome == OffsetCase::Recursed) {
      oj["sub_horizon"] = o.sub_horizon;
      OrderedJson nested = OrderedJson::array();
      for (const auto& n : o.nested) nested.push_back(case_split_json(n));
      oj["nested"] = nested;
    }
    offs.push_back(oj);
  }
  j["offsets"] = offs;
  j["resolved"] = progressions_json(r.resolved);
  j["algebraic"] = r.algebraic;
  j["flags"] = strings(r.flags);
  return j;
}

std::string dump(const OrderedJson& j) { return j.dump(2) + "\n"; }

std::string return_set_csv(const ReturnSet& s) {
  std::string out = "n,in_V\n";
  const auto ind = s.indicator();
  for (std::size_t n = 0; n < ind.size(); ++n) {
    out += std::to_string(n);
    out += ind[n] ? ",1\n" : ",0\n";
  }
  return out;
}

std::string profile_csv(const DensityProfile& p) {
  std::string out = "L,max_ratio\n";
  for (const auto& e : p.entries) out += std::to_string(e.window) + "," + ratio_to_string(e.max_ratio) + "\n";
  return out;
}

std::string progression_label(const Progression& p) {
  return "(" + std::to_string(p.modulus) + ", " + std::to_string(p.offset) + ")";
}

ClosureParams closure_params(const AnalysisParams& a) {
  return {a.initial_samples, a.sample_budget, a.degree_cap};
}

}  // namespace

ExperimentModel build_model(const ExperimentSpec& spec) {
  const std::size_t n = spec.vars.size();
  if (n == 0) schema_error("vars", "at least one variable is required");
  std::set<std::string> seen;
  for (const auto& v : spec.vars) {
    if (v == "t") schema_error("vars", "reserved identifier 't'");
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_') ||
        !std::all_of(v.begin(), v.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; })) {
      schema_error("vars", "invalid identifier '" + v + "'");
    }
    if (!seen.insert(v).second) schema_error("vars", "duplicate identifier '" + v + "'");
  }
  if (spec.phi.size() != n) schema_error("phi", "expected " + std::to_string(n) + " components");
  if (spec.alpha.size() != n) schema_error("alpha", "expected " + std::to_string(n) + " coordinates");
  if (spec.horizon == 0) schema_error("N", "must be at least 1");

  std::vector<MultiPoly> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(parse_in("phi", i, spec.phi[i], spec));
  std::vector<FieldValue> coords;
  for (std::size_t i = 0; i < n; ++i) {
    const MultiPoly c = parse_in("alpha", i, spec.alpha[i], spec);
    if (!c.is_constant()) schema_error("alpha", "coordinate " + std::to_string(i) + " is not constant");
    coords.push_back(c.coefficient(Monomial(n)));
  }
  std::vector<MultiPoly> variety;
  for (std::size_t i = 0; i < spec.variety.size(); ++i) variety.push_back(parse_in("V", i, spec.variety[i], spec));

  MonomialOrder order = MonomialOrder::grevlex(n);
  ReducedGroebnerBasis basis = buchberger(variety, order, spec.field);
  return {order, Morphism(std::move(comps)), RationalPoint(std::move(coords)), std::move(variety), std::move(basis)};
}

ExperimentSpec parse_experiment(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("invalid JSON: expected an object");
  static const std::set<std::string> known = {"field", "vars", "phi", "alpha", "V", "N", "analysis"};
  for (const auto& [k, _] : doc.items()) {
    if (!known.contains(k)) schema_error(k, "unknown key");
  }

  ExperimentSpec spec;
  if (!doc.contains("field") || !doc.at("field").is_string()) schema_error("field", "expected a string");
  try {
    spec.field = FieldDescriptor::parse(doc.at("field").get<std::string>());
  } catch (const Error& e) {
    schema_error("field", e.what());
  }
  spec.vars = string_list(doc, "vars");
  spec.phi = string_list(doc, "phi");
  spec.alpha = string_list(doc, "alpha");
  spec.variety = string_list(doc, "V");
  if (!doc.contains("N")) schema_error("N", "missing");
  spec.horizon = count_value(doc.at("N"), "N");

  if (doc.contains("analysis")) {
    const Json& a = doc.at("analysis");
    if (!a.is_object()) schema_error("analysis", "expected an object");
    for (const auto& [k, v] : a.items()) {
      const std::string key = "analysis." + k;
      if (k == "a_max") {
        spec.analysis.a_max = count_value(v, key);
      } else if (k == "m_min") {
        spec.analysis.m_min = count_value(v, key);
      } else if (k == "tail_start") {
        spec.analysis.tail_start = count_value(v, key);
      } else if (k == "degree_cap") {
        spec.analysis.degree_cap = static_cast<unsigned>(count_value(v, key));
      } else if (k == "initial_samples") {
        spec.analysis.initial_samples = count_value(v, key);
      } else if (k == "sample_budget") {
        spec.analysis.sample_budget = count_value(v, key);
      } else if (k == "depth_limit") {
        spec.analysis.depth_limit = count_value(v, key);
      } else {
        schema_error(key, "unknown key");
      }
    }
  }
  if (spec.analysis.a_max == 0 && spec.horizon > 0) spec.analysis.a_max = default_a_max(spec.horizon);

  build_model(spec);
  return spec;
}

ExperimentSpec load_experiment(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("I/O error reading " + path.string());
  return parse_experiment(buf.str());
}

ReportDocument run_experiment(const ExperimentSpec& spec) {
  const ExperimentModel model = stage("load", [&] { return build_model(spec); });
  const AnalysisParams& an = spec.analysis;
  const std::size_t a_max = an.a_max ? an.a_max : default_a_max(spec.horizon);

  ReportDocument report;
  report.spec = spec;
  report.spec.analysis.a_max = a_max;
  report.return_set =
      stage("return_set", [&] { return return_set(model.phi, model.alpha, model.variety, spec.horizon); });
  report.profile = stage("density_profile", [&] { return density_profile(report.return_set); });
  const std::vector<Progression> progs = stage("detect_progressions", [&] {
    if (report.return_set.empty()) return std::vector<Progression>{};
    return detect_progressions(report.return_set, a_max, an.m_min, an.tail_start);
  });

  const ClosureParams cp = closure_params(an);
  CaseSplitContext ctx{spec.horizon, an.a_max, an.m_min, cp};
  for (const auto& p : progs) {
    ProgressionReport pr;
    pr.progression = p;
    pr.chain = stage("closure_chain",
                     [&] { return closure_chain(model.phi, model.alpha, p.modulus, p.offset, cp, model.order); });
    const ReducedGroebnerBasis& base = pr.chain.at(p.offset).closure.ideal;
    pr.certificate = stage("certify_invariant", [&] { return certify_invariant(base, model.phi, p.modulus); });
    pr.closure_in_variety = ideal_contains(base, model.variety_basis);
    pr.case_split = stage("refine_case_split", [&] {
      return refine_case_split(model.variety_basis, pr.chain, model.phi, model.alpha, an.depth_limit, ctx);
    });

    const std::string label = progression_label(p);
    if (!pr.certificate.invariant) report.flags.push_back(label + ": sampled closure is not invariant under phi^a");
    if (!pr.closure_in_variety) report.flags.push_back(label + ": sampled closure is not contained in V");
    for (const auto& d : pr.chain.diagnostics) report.flags.push_back(label + ": " + d);
    for (const auto& f : pr.case_split.flags) {
      const std::string line = label + ": " + f;
      if (std::find(report.flags.begin(), report.flags.end(), line) == report.flags.end()) {
        report.flags.push_back(line);
      }
    }
    report.progressions.push_back(std::move(pr));
  }

  report.decomposition = stage("decompose_return_set", [&] { return decompose_return_set(report.return_set, progs); });
  for (const auto& p : report.decomposition.progressions) {
    if (!progression_contained(report.return_set, p)) {
      throw InvariantViolation("report: progression " + progression_label(p) + " is not contained in S");
    }
  }

  if (progs.empty()) {
    report.flags.push_back("no progression detected; the decomposition is pure residual");
  } else {
    report.flags.push_back("progressions certified at horizon N=" + std::to_string(spec.horizon));
  }
  report.flags.push_back("closures are degree-capped (cap " + std::to_string(an.degree_cap) + "), not exact");
  return report;
}

DensityReport run_density(const ExperimentSpec& spec) {
  const ExperimentModel model = stage("load", [&] { return build_model(spec); });
  DensityReport r;
  r.spec = spec;
  r.return_set = stage("return_set", [&] { return return_set(model.phi, model.alpha, model.variety, spec.horizon); });
  r.profile = stage("density_profile", [&] { return density_profile(r.return_set); });
  return r;
}

CertifyReport run_certify(const ExperimentSpec& spec, std::size_t a, std::size_t b) {
  if (a < 1) throw Error("modulus must be at least 1");
  const ExperimentModel model = stage("load", [&] { return build_model(spec); });
  CertifyReport r;
  r.spec = spec;
  r.progression = {a, b};
  const ReturnSet s =
      stage("return_set", [&] { return return_set(model.phi, model.alpha, model.variety, spec.horizon); });
  r.contained_at_horizon = b < spec.horizon && progression_contained(s, r.progression);
  r.closure = stage("orbit_closure_ideal", [&] {
    return orbit_closure_ideal(model.phi, model.alpha, a, b, closure_params(spec.analysis), model.order);
  });
  r.certificate = stage("certify_invariant", [&] { return certify_invariant(r.closure.ideal, model.phi, a); });
  r.closure_in_variety = ideal_contains(r.closure.ideal, model.variety_basis);
  return r;
}

std::string to_json(const ReportDocument& r) {
  OrderedJson j;
  j["spec"] = spec_json(r.spec);
  j["return_set"] = return_set_json(r.return_set);
  j["density_profile"] = profile_json(r.profile);
  OrderedJson progs = OrderedJson::array();
  for (const auto& p : r.progressions) {
    OrderedJson pj = progression_json(p.progression);
    pj["closure_chain"] = chain_json(p.chain, r.spec);
    pj["certificate"] = certificate_json(p.certificate, r.spec);
    pj["closure_in_variety"] = p.closure_in_variety;
    pj["case_split"] = case_split_json(p.case_split);
    progs.push_back(pj);
  }
  j["progressions"] = progs;
  OrderedJson d;
  d["A"] = progressions_json(r.decomposition.progressions);
  d["B"] = r.decomposition.residual.indices();
  d["residual_profile"] = profile_json(r.decomposition.residual_profile);
  j["decomposition"] = d;
  j["flags"] = strings(r.flags);
  return dump(j);
}

std::string to_json(const DensityReport& r) {
  OrderedJson j;
  j["spec"] = spec_json(r.spec);
  j["return_set"] = return_set_json(r.return_set);
  j["density_profile"] = profile_json(r.profile);
  return dump(j);
}

std::string to_json(const CertifyReport& r) {
  OrderedJson j;
  j["spec"] = spec_json(r.spec);
  j["progression"] = progression_json(r.progression);
  j["contained_at_horizon"] = r.contained_at_horizon;
  j["closure"] = closure_json(r.closure, r.spec);
  j["certificate"] = certificate_json(r.certificate, r.spec);
  j["closure_in_variety"] = r.closure_in_variety;
  return dump(j);
}

std::string to_csv(const ReportDocument& r) {
  return return_set_csv(r.return_set) + "\n" + profile_csv(r.profile);
}

std::string to_csv(const DensityReport& r) {
  return return_set_csv(r.return_set) + "\n" + profile_csv(r.profile);
}

}  // namespace dml
