#include "bsgw/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "bsgw/errors.hpp"

namespace bsgw {

namespace {

template <class V>
json coords_json(const V& v) {
  return json(v.coords);
}

json strings(const std::vector<Rational>& v) { return json(to_strings(v)); }

json int_strings(const IntVec& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(to_string(z));
  return out;
}

Rational rational_field(const json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational as string \"p/q\" or integer, got " + j.dump());
}

std::string rational_text(const json& j) {
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_string()) return j.get<std::string>();
  throw InputError("expected a rational as string \"p/q\" or integer, got " + j.dump());
}

}  // namespace

JobSpec JobSpec::from_json(const json& j) {
  if (!j.is_object()) throw InputError("job spec must be a JSON object");
  JobSpec s;
  try {
    s.type = j.at("type").get<std::string>();
    s.word = j.at("word").get<std::vector<int>>();
    for (const auto& q : j.at("m")) s.m.push_back(rational_text(q));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed job spec: ") + e.what());
  }
  return s;
}

json JobSpec::to_json() const { return {{"type", type}, {"word", word}, {"m", m}}; }

BSInput JobSpec::to_input() const {
  std::vector<Rational> weights;
  for (const auto& q : m) weights.push_back(parse_rational(q));
  return BSInput::make(RootSystem::parse(type), Word(word), std::move(weights));
}

JobSpec JobSpec::from_input(const BSInput& in) {
  return {in.rs.type().to_string(), in.word.letters, to_strings(in.m)};
}

json chain_json(const GKChain& c) {
  json forms = json::array();
  for (std::size_t k = 1; k <= c.r; ++k) {
    const auto& f = c.A(k);
    json coeffs = json::object();
    for (std::size_t v = k + 1; v <= c.r; ++v)
      if (sgn(f.coeff(v)) != 0) coeffs[std::to_string(v)] = to_string(f.coeff(v));
    forms.push_back({{"k", k}, {"constant", to_string(f.constant)}, {"coeffs", coeffs}});
  }
  return {{"r", c.r}, {"forms", forms}};
}

json condition_p_json(const ConditionPReport& rep) {
  json per_k = json::array();
  for (std::size_t k = 1; k <= rep.per_k.size(); ++k) {
    const auto& mk = rep.per_k[k - 1];
    if (mk) per_k.push_back({{"k", k}, {"min", to_string(mk->value)}, {"point", strings(mk->point)}});
    else per_k.push_back({{"k", k}, {"min", nullptr}, {"point", nullptr}});
  }
  json out = {{"holds", rep.holds}, {"per_k", per_k}};
  out["failing_k"] = rep.failing_k ? json(*rep.failing_k) : json(nullptr);
  out["witness"] = rep.witness ? strings(*rep.witness) : json(nullptr);
  return out;
}

json curve_json(const CurveReport& rep) {
  return {{"deg", rep.deg},
          {"areas", strings(rep.areas)},
          {"antican", rep.antican},
          {"minimal_set", rep.minimal_set},
          {"line_set", rep.line_set},
          {"width", to_string(rep.width)},
          {"witness", rep.witness},
          {"minimal_min", to_string(rep.minimal_min)},
          {"minimal_witness", rep.minimal_witness}};
}

json fan_json(const BottFan& f) {
  json rays = json::array();
  for (const auto& u : f.rays) rays.push_back(int_strings(u));
  return {{"dim", f.dim}, {"rays", rays}, {"cones", f.max_cones}};
}

json collection_json(const BottCollection& c) {
  json a = json::object();
  for (const auto& [key, value] : c.twists) {
    if (value == 0) continue;
    auto [j, l, k] = key;
    a[std::to_string(j) + "," + std::to_string(l) + "," + std::to_string(k)] = value.get_si();
  }
  return {{"dims", c.dims}, {"a", a}};
}

BottCollection collection_from_json(const json& j) {
  BottCollection c;
  try {
    c.dims = j.at("dims").get<std::vector<int>>();
    if (j.contains("a")) {
      for (const auto& [key, value] : j.at("a").items()) {
        int jj = 0, l = 0, k = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(key);
        if (!(in >> jj >> c1 >> l >> c2 >> k) || c1 != ',' || c2 != ',' || !in.eof())
          throw InputError("twist key \"" + key + "\" is not \"j,l,k\"");
        c.twists[{jj, l, k}] = Integer(value.is_string() ? value.get<std::string>()
                                                          : std::to_string(value.get<long long>()));
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed Bott collection: ") + e.what());
  }
  c.validate();
  return c;
}

DivisorClass divisor_from_json(const json& j, const BottCollection& c) {
  DivisorClass d;
  if (!j.is_array()) throw InputError("divisor must be a flat list of rationals");
  for (const auto& q : j) d.coeffs.push_back(rational_field(q));
  if (d.coeffs.size() != static_cast<std::size_t>(c.ray_count()))
    throw InputError("divisor has " + std::to_string(d.coeffs.size()) + " coefficients, expected " +
                     std::to_string(c.ray_count()));
  return d;
}

json bott_json(const BottCollection& c, const DivisorClass& d) {
  const BottFan fan = build_fan(c);
  const bool smooth = check_smooth(fan);
  if (!smooth) throw InvariantViolation("Bott fan is not smooth");
  json rels = json::array();
  json warnings = json::array();
  for (const auto& rel : primitive_relations(c, d)) {
    json cone = json::array();
    for (const auto& [ray, a] : rel.cone_coeffs) cone.push_back({{"ray", ray}, {"coeff", to_string(a)}});
    json jr = {{"stage", rel.stage},
               {"members", rel.members},
               {"u_sum", int_strings(rel.u_sum)},
               {"lambda_sum", to_string(rel.lambda_sum)},
               {"cone_coeffs", cone},
               {"degree", to_string(rel.degree)},
               {"zero_sum", rel.zero_sum()}};
    if (rel.zero_sum()) jr["pairing"] = to_string(relation_pairing(d, rel));
    if (sgn(rel.lambda_sum) <= 0)
      warnings.push_back("lambda(" + std::to_string(rel.stage) + ") = " + to_string(rel.lambda_sum) +
                         " <= 0: the class is not Kaehler");
    rels.push_back(std::move(jr));
  }
  auto hw = hls_width(c, d);
  return {{"collection", collection_json(c)},
          {"divisor", strings(d.coeffs)},
          {"fan", fan_json(fan)},
          {"smooth", smooth},
          {"relations", rels},
          {"toric_width", to_string(hw.width)},
          {"toric_width_stage", hw.stage},
          {"warnings", warnings}};
}

json tower_json(const DegenerateTower& t) {
  json out = bott_json(t.collection, t.divisor);
  out["a"] = strings(t.a);
  out["label"] = t.hypothesis_violated ? json("hypothesis (P) violated") : json(nullptr);
  return out;
}

json check_p_json(const BSInput& in) {
  auto chain = build_chain(in);
  return {{"schema", kSchema},
          {"command", "check-p"},
          {"input", JobSpec::from_input(in).to_json()},
          {"chain", chain_json(chain)},
          {"condition_p", condition_p_json(check_condition_p(chain))}};
}

json report_json(const BSInput& in, bool force_degeneration) {
  json out = {{"schema", kSchema}, {"command", "report"}, {"input", JobSpec::from_input(in).to_json()}};

  auto b = betas(in.rs, in.word);
  json roots = json::array(), coroots = json::array();
  for (const auto& v : b.roots) roots.push_back(coords_json(v));
  for (const auto& v : b.coroots) coroots.push_back(coords_json(v));
  out["betas"] = {{"roots", roots}, {"coroots", coroots}};
  out["reduced"] = static_cast<bool>(is_reduced(in.rs, in.word));

  const CurveReport curves = gromov_width(in);
  out["curves"] = curve_json(curves);
  out["width"] = to_string(curves.width);

  IndexSet antican2;
  for (std::size_t j = 0; j < curves.antican.size(); ++j)
    if (curves.antican[j] == 2) antican2.push_back(j + 1);
  const bool minimal_ok = antican2 == curves.minimal_set;
  if (!minimal_ok) throw InvariantViolation("minimal curves differ from anticanonical-degree-2 curves");
  bool lines_in_minimal = true;
  for (auto j : curves.line_set)
    lines_in_minimal &= std::find(curves.minimal_set.begin(), curves.minimal_set.end(), j) !=
                        curves.minimal_set.end();

  const GKChain chain = build_chain(in);
  const ConditionPReport cp = check_condition_p(chain);
  out["chain"] = chain_json(chain);
  out["condition_p"] = condition_p_json(cp);

  auto [caseline, caseline_index] = caseline_min(in);
  out["caseline"] = to_string(caseline);
  out["caseline_index"] = caseline_index;
  if (caseline < curves.width)
    throw InvariantViolation("caseline minimum " + to_string(caseline) + " below Gromov width " +
                             to_string(curves.width));

  json checks = {{"min_minimal_equals_min_all", curves.minimal_min == curves.width},
                 {"minimal_iff_antican2", minimal_ok},
                 {"lines_subset_minimal", lines_in_minimal},
                 {"caseline_ge_width", true}};

  out["tower"] = nullptr;
  out["toric_width"] = nullptr;
  checks["caseline_chain"] = nullptr;
  if (cp.holds || force_degeneration) {
    auto tower = degenerate_bott_tower(in, force_degeneration);
    json tj = tower_json(tower);
    out["toric_width"] = tj["toric_width"];
    out["tower"] = std::move(tj);
  }
  if (cp.holds) {
    caseline_width(in);  // throws InvariantViolation on a broken chain of equalities
    checks["caseline_chain"] = true;
  }
  out["checks"] = checks;
  return out;
}

namespace {

std::string join(const json& arr, const char* sep = ",") {
  std::string s;
  for (const auto& v : arr) {
    if (!s.empty()) s += sep;
    s += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return s;
}

std::string verdict(const json& v) { return v.is_null() ? "n/a" : v.get<bool>() ? "ok" : "FAIL"; }

void render_chain(std::ostringstream& os, const json& chain) {
  for (const auto& f : chain["forms"]) {
    os << "  A_" << f["k"].get<std::size_t>() << " = " << f["constant"].get<std::string>();
    for (const auto& [var, c] : f["coeffs"].items()) {
      std::string q = c.get<std::string>();
      if (q.front() == '-') os << " - " << q.substr(1) << "*x_" << var;
      else os << " + " << q << "*x_" << var;
    }
    os << '\n';
  }
}

void render_condition_p(std::ostringstream& os, const json& cp) {
  if (cp["holds"].get<bool>()) {
    os << "condition (P): holds\n";
  } else {
    os << "condition (P): fails at k=" << cp["failing_k"].get<std::size_t>() << ", witness ("
       << join(cp["witness"]) << ")\n";
  }
  for (const auto& e : cp["per_k"]) {
    os << "  min A_" << e["k"].get<std::size_t>() << " = ";
    if (e["min"].is_null()) os << "(region not certified)\n";
    else os << e["min"].get<std::string>() << " at (" << join(e["point"]) << ")\n";
  }
}

void render_bott(std::ostringstream& os, const json& b) {
  os << "fan: dim " << b["fan"]["dim"] << ", " << b["fan"]["rays"].size() << " rays, "
     << b["fan"]["cones"].size() << " maximal cones, smooth " << (b["smooth"].get<bool>() ? "yes" : "no")
     << '\n';
  for (const auto& r : b["relations"]) {
    os << "  stage " << r["stage"] << ": u(l) = (" << join(r["u_sum"]) << "), lambda(l) = "
       << r["lambda_sum"].get<std::string>() << ", degree " << r["degree"].get<std::string>() << '\n';
  }
  os << "toric width: " << b["toric_width"].get<std::string>() << " (stage " << b["toric_width_stage"]
     << ")\n";
  for (const auto& w : b["warnings"]) os << "warning: " << w.get<std::string>() << '\n';
  if (b.contains("label") && !b["label"].is_null()) os << "label: " << b["label"].get<std::string>() << '\n';
}

}  // namespace

std::string render_text(const json& rep) {
  std::ostringstream os;
  const std::string cmd = rep.value("command", "");
  if (rep.contains("input")) {
    const auto& in = rep["input"];
    os << "type " << in["type"].get<std::string>() << "  word (" << join(in["word"]) << ")  m ("
       << join(in["m"]) << ")\n";
  }
  if (cmd == "report") {
    const auto& c = rep["curves"];
    const auto& deg = c["deg"];
    const std::size_t r = deg.size();
    os << "deg (row k: L_k . C_j)\n      ";
    for (std::size_t j = 1; j <= r; ++j) os << std::setw(4) << ("C" + std::to_string(j));
    os << '\n';
    for (std::size_t k = 0; k < r; ++k) {
      os << "  " << std::setw(4) << std::left << ("L" + std::to_string(k + 1)) << std::right;
      for (std::size_t j = 0; j < r; ++j) os << std::setw(4) << deg[k][j].get<int>();
      os << '\n';
    }
    os << "areas: " << join(c["areas"], " ") << '\n';
    os << "anticanonical degrees: " << join(c["antican"], " ") << '\n';
    os << "minimal curves: {" << join(c["minimal_set"]) << "}\n";
    os << "lines: {" << join(c["line_set"]) << "}\n";
    os << "Gromov width: " << rep["width"].get<std::string>() << " (j=" << c["witness"] << ")\n";
    render_chain(os, rep["chain"]);
    render_condition_p(os, rep["condition_p"]);
    os << "caseline width: " << rep["caseline"].get<std::string>() << " (j=" << rep["caseline_index"] << ")\n";
    if (!rep["tower"].is_null()) render_bott(os, rep["tower"]);
    os << "checks:";
    for (const auto& [name, v] : rep["checks"].items()) os << ' ' << name << '=' << verdict(v);
    os << '\n';
  } else if (cmd == "check-p") {
    render_chain(os, rep["chain"]);
    render_condition_p(os, rep["condition_p"]);
  } else if (cmd == "bott") {
    render_bott(os, rep["bott"]);
  } else if (cmd == "lattice") {
    os << "lattice points: " << rep["count"] << '\n';
  } else if (cmd == "selftest") {
    for (const auto& s : rep["suites"]) {
      os << (s["passed"].get<bool>() ? "PASS " : "FAIL ") << s["name"].get<std::string>() << ": "
         << s["trials"] << " trials, " << s["failures"] << " failures";
      if (s.contains("note")) os << " (" << s["note"].get<std::string>() << ")";
      os << '\n';
      if (!s["repro"].is_null()) os << "  repro: " << s["repro"].dump() << '\n';
    }
    for (const auto& w : rep["warnings"]) os << "warning: " << w.get<std::string>() << '\n';
  } else {
    os << rep.dump(2) << '\n';
  }
  return os.str();
}

}  // namespace bsgw
