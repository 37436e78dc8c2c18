#include "hq/scenario.hpp"

#include <cstdlib>
#include <sstream>

namespace hq {

namespace {

[[noreturn]] void schema(const std::string& what) { throw SchemaError("scenario: " + what); }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object()) schema(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing key '") + key + "'");
  return *it;
}

std::string need_string(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_string()) schema(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

int need_int(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer()) schema(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

Rat json_rat(const Json& j) {
  if (j.is_number_integer()) return rat(j.get<long>());
  if (j.is_string()) {
    try {
      return rat_parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      schema(e.what());
    }
  }
  schema("rationals must be integers or \"p/q\" strings");
}

FiniteGroup parse_group(const Json& j) {
  std::string type = need_string(j, "type");
  if (type == "cyclic") return cyclic_group(need_int(j, "n"));
  if (type == "dihedral") return dihedral_group(need_int(j, "n"));
  if (type == "symmetric") return symmetric_group(need_int(j, "n"));
  if (type == "explicit") {
    const Json& t = need(j, "table");
    if (!t.is_array()) schema("'table' must be an array of rows");
    std::vector<std::vector<int>> table;
    for (const Json& row : t) {
      if (!row.is_array()) schema("'table' rows must be arrays");
      table.push_back(row.get<std::vector<int>>());
    }
    return explicit_group(table);
  }
  schema("unknown group type '" + type + "'");
}

GroupGradedModule parse_module(const Json& j, const FiniteGroup& g) {
  GroupGradedModule m;
  m.group = g;
  std::string side = need_string(j, "side");
  if (side == "kofG")
    m.left_action = true;
  else if (side == "kG")
    m.left_action = false;
  else
    schema("module 'side' must be \"kofG\" or \"kG\"");
  const Json& deg = need(j, "degree");
  if (!deg.is_array()) schema("module 'degree' must be an array");
  for (const Json& d : deg) {
    if (!d.is_number_integer()) schema("module degrees must be integers");
    m.degree.push_back(d.get<int>());
  }
  int dim = static_cast<int>(m.degree.size());
  const Json& gens = need(j, "generators");
  if (!gens.is_object()) schema("module 'generators' must map element indices to matrices");
  std::vector<std::pair<int, Mat>> pairs;
  for (auto it = gens.begin(); it != gens.end(); ++it) {
    int elt = 0;
    try {
      size_t pos = 0;
      elt = std::stoi(it.key(), &pos);
      if (pos != it.key().size()) throw std::invalid_argument(it.key());
    } catch (const std::exception&) {
      schema("generator keys must be element indices, got '" + it.key() + "'");
    }
    pairs.emplace_back(elt, json_mat(it.value()));
  }
  m.action = complete_action(g, pairs, dim, m.left_action);
  if (j.contains("labels")) {
    const Json& lab = j.at("labels");
    if (!lab.is_array() || static_cast<int>(lab.size()) != dim)
      schema("module 'labels' must be an array matching the dimension");
    for (const Json& l : lab) {
      if (!l.is_string()) schema("module labels must be strings");
      m.labels.push_back(l.get<std::string>());
    }
  } else {
    for (int i = 0; i < dim; ++i) m.labels.push_back("v" + std::to_string(i));
  }
  return m;
}

Flavor parse_flavor(const std::string& s) {
  if (s == "tensor") return Flavor::tensor;
  if (s == "shuffle") return Flavor::shuffle;
  if (s == "nichols") return Flavor::nichols;
  if (s == "quadratic") return Flavor::quadratic;
  if (s == "universal_theta") return Flavor::universal_theta;
  if (s == "subshuffle_theta") return Flavor::subshuffle_theta;
  schema("unknown extension flavor '" + s + "'");
}

// Everything below the group: module, calculus, extension, codifferential.
void fill_body(Scenario& s, const Json& j) {
  s.module = parse_module(need(j, "module"), s.group);
  if (j.contains("calculus") && !j.at("calculus").is_null()) {
    s.calculus = j.at("calculus");
    std::string ctor = need_string(s.calculus, "constructor");
    if (ctor != "class_data" && ctor != "cocycle" && ctor != "explicit")
      schema("unknown calculus constructor '" + ctor + "'");
    need(s.calculus, ctor == "explicit" ? "omega" : "data");
  }
  const Json& ext = need(j, "extension");
  s.flavor = parse_flavor(need_string(ext, "flavor"));
  if (ext.contains("degree_cap")) {
    if (!ext.at("degree_cap").is_number_integer() || ext.at("degree_cap").get<int>() < 1)
      schema("'degree_cap' must be a positive integer");
    s.degree_cap = ext.at("degree_cap").get<int>();
  }
  if (j.contains("codifferential") && !j.at("codifferential").is_null()) {
    const Json& cod = j.at("codifferential");
    bool has_ts = cod.contains("theta_star");
    bool has_i1 = cod.contains("i1");
    if (has_ts == has_i1)
      schema("codifferential needs exactly one of 'theta_star' or 'i1'");
    if (has_ts) s.theta_star = json_vec(cod.at("theta_star"));
    if (has_i1) s.i1 = json_mat(cod.at("i1"));
  }
  if (j.contains("duality_partner") && !j.at("duality_partner").is_null()) {
    const Json& p = j.at("duality_partner");
    need(p, "module");
    need(p, "extension");
    s.duality_partner = p;
  }
}

// i(eta) = <theta*, eta_0> eta_1 - <theta*, eta> 1, on the canonical A+ basis.
Mat coinner_i1(const HopfPtr& a, const CrossedModule& v, const Vec& ts) {
  Mat contracted = kron(Mat::row(ts), Mat::identity(a->dim)) * v.coact;  // dimA x dimV
  return a->aug.pi * (contracted - Mat::col(a->unit) * Mat::row(ts));
}

}  // namespace

Json vec_json(const Vec& v) {
  Json j = Json::array();
  for (const Rat& x : v) j.push_back(rat_str(x));
  return j;
}

Json mat_json(const Mat& m) {
  Json j = Json::array();
  for (int i = 0; i < m.rows; ++i) j.push_back(vec_json(m.rowvec(i)));
  return j;
}

Vec json_vec(const Json& j) {
  if (!j.is_array()) schema("vector must be a JSON array");
  Vec v;
  for (const Json& x : j) v.push_back(json_rat(x));
  return v;
}

Mat json_mat(const Json& j) {
  if (!j.is_array()) schema("matrix must be an array of rows");
  std::vector<Vec> rows;
  size_t cols = 0;
  for (const Json& row : j) {
    rows.push_back(json_vec(row));
    if (rows.size() == 1)
      cols = rows.back().size();
    else if (rows.back().size() != cols)
      schema("matrix rows have unequal lengths");
  }
  if (rows.empty()) schema("matrix needs at least one row");
  return Mat::from_rows(rows, static_cast<int>(cols));
}

Scenario parse_scenario(const Json& j) {
  if (!j.is_object()) schema("document must be a JSON object");
  Scenario s;
  s.name = need_string(j, "name");
  s.group = parse_group(need(j, "group"));
  fill_body(s, j);
  return s;
}

BuiltScenario build_scenario(const Scenario& s, int cap_arg) {
  BuiltScenario b;
  b.cap = cap_arg > 0 ? cap_arg : (s.degree_cap > 0 ? s.degree_cap : 4);
  b.algebra = s.module.left_action ? function_algebra(s.group) : group_algebra(s.group);
  b.module = crossed_from_graded(s.module);

  if (!s.calculus.is_null()) {
    std::string ctor = s.calculus.at("constructor").get<std::string>();
    if (ctor == "class_data") {
      std::vector<std::pair<int, Vec>> data;
      for (const Json& item : s.calculus.at("data"))
        data.emplace_back(need_int(item, "rep"), json_vec(need(item, "omega")));
      b.calculus = first_order_kofG(s.module, data);
    } else if (ctor == "cocycle") {
      std::vector<Vec> rows;
      for (const Json& row : s.calculus.at("data")) rows.push_back(json_vec(row));
      b.calculus = first_order_kG(s.module, rows);
    } else {
      b.calculus = first_order(b.algebra, b.module, json_mat(s.calculus.at("omega")));
    }
  }

  auto no_codiff_for = [&](const char* flavor) {
    if (s.theta_star || s.i1)
      throw std::invalid_argument(std::string("scenario: a codifferential cannot be attached to the ") +
                                  flavor + " extension");
  };

  switch (s.flavor) {
    case Flavor::nichols:
    case Flavor::quadratic: {
      no_codiff_for(s.flavor == Flavor::nichols ? "nichols" : "quadratic");
      if (b.calculus)
        b.omega = inner_exterior(*b.calculus, s.flavor, b.cap);
      else
        b.omega = bosonise(b.algebra, nichols(b.module, b.cap, s.flavor == Flavor::quadratic));
      break;
    }
    case Flavor::universal_theta: {
      if (!b.calculus)
        throw std::invalid_argument("scenario: the universal_theta extension requires a calculus");
      b.omega = inner_exterior(*b.calculus, Flavor::universal_theta, b.cap);
      if (s.theta_star || s.i1) {
        Mat i1 = s.i1 ? *s.i1 : coinner_i1(b.algebra, b.module, *s.theta_star);
        b.omega = augment_universal(b.omega, i1);
      }
      break;
    }
    case Flavor::shuffle: {
      no_codiff_for("shuffle");
      if (b.calculus)
        b.omega = shuffle_exterior(*b.calculus, b.cap);
      else
        b.omega = bosonise(b.algebra, shuffle_hopf(b.module, b.cap));
      break;
    }
    case Flavor::tensor: {
      if (s.theta_star || s.i1) {
        Mat i1 = s.i1 ? *s.i1 : coinner_i1(b.algebra, b.module, *s.theta_star);
        b.omega = extend_codiff_tensor(first_order_codiff(b.algebra, b.module, i1), b.cap);
      } else {
        b.omega = bosonise(b.algebra, tensor_hopf(b.module, b.cap));
      }
      break;
    }
    case Flavor::subshuffle_theta: {
      if (!s.theta_star)
        throw std::invalid_argument("scenario: the subshuffle_theta extension requires theta_star");
      if (s.i1)
        throw std::invalid_argument("scenario: subshuffle_theta derives i from theta_star; drop i1");
      std::optional<Mat> omega;
      if (b.calculus) omega = b.calculus->omega;
      b.omega = coinner_subshuffle(b.algebra, b.module, *s.theta_star, omega, b.cap);
      break;
    }
  }
  return b;
}

Report verify_built(const BuiltScenario& b) {
  Report rep;
  rep.merge(verify_graded_super(b.omega), "super.");
  if (b.omega.has_d()) rep.merge(verify_strong_bicovariance(b.omega), "d.");
  if (b.omega.has_i()) rep.merge(verify_codifferential(b.omega), "i.");
  if (b.omega.has_d() && b.omega.has_i()) rep.merge(verify_augmentation(b.omega).report, "aug.");
  for (int n = 0; n <= b.cap; ++n) rep.dims[n] = b.omega.dims[n];
  return rep;
}

Report verify_pairing(const Scenario& s, int cap_arg) {
  if (!s.duality_partner) schema("pairing requested but no duality_partner given");
  Scenario partner;
  partner.name = s.name + "-partner";
  partner.group = s.group;
  fill_body(partner, *s.duality_partner);
  if (partner.module.left_action == s.module.left_action)
    throw std::invalid_argument("scenario: duality partner must live over the dual algebra");
  int cap = cap_arg > 0 ? cap_arg : (s.degree_cap > 0 ? s.degree_cap : 4);
  BuiltScenario main = build_scenario(s, cap);
  BuiltScenario dual = build_scenario(partner, cap);
  const BuiltScenario& left = s.module.left_action ? main : dual;
  const BuiltScenario& right = s.module.left_action ? dual : main;
  Report rep;
  try {
    DualityPairing p = braided_pairing(left.omega, right.omega, canonical_group_pairing(s.group));
    rep.add("pair.construct", true);
    rep.merge(verify_mutual_duality(p), "pair.");
  } catch (const std::invalid_argument& e) {
    rep.add("pair.construct", false, e.what());
  }
  for (int n = 0; n <= cap; ++n) rep.dims[n] = left.omega.dims[n];
  return rep;
}

Json report_json(const std::string& name, const Report& rep, const std::vector<int>& dims) {
  Json doc = Json::object();
  doc["name"] = name;
  doc["pass"] = rep.all_pass();
  Json checks = Json::array();
  for (const Check& c : rep.checks) {
    Json e = Json::object();
    e["id"] = c.id;
    e["pass"] = c.pass;
    if (!c.pass) e["witness"] = c.witness;
    checks.push_back(e);
  }
  doc["checks"] = checks;
  Json d = Json::object();
  for (size_t n = 0; n < dims.size(); ++n) d[std::to_string(n)] = dims[n];
  doc["dims"] = d;
  return doc;
}

Json export_json(const std::string& name, const BuiltScenario& b) {
  Json doc = Json::object();
  doc["name"] = name;
  doc["degree_cap"] = b.cap;
  doc["algebra_labels"] = b.algebra->labels;
  doc["module_labels"] = b.module.labels;
  doc["dims"] = b.omega.dims;
  Json product = Json::array();
  for (int p = 0; p <= b.cap; ++p) {
    Json row = Json::array();
    for (int q = 0; p + q <= b.cap; ++q) row.push_back(mat_json(b.omega.product[p][q]));
    product.push_back(row);
  }
  doc["product"] = product;
  Json coproduct = Json::array();
  for (int n = 0; n <= b.cap; ++n) {
    Json row = Json::array();
    for (int r = 0; r <= n; ++r) row.push_back(mat_json(b.omega.coproduct[n][r]));
    coproduct.push_back(row);
  }
  doc["coproduct"] = coproduct;
  if (b.omega.has_d()) {
    Json d = Json::array();
    for (const Mat& m : b.omega.d) d.push_back(mat_json(m));
    doc["d"] = d;
  }
  if (b.omega.has_i()) {
    Json i = Json::array();
    for (const Mat& m : b.omega.i) i.push_back(mat_json(m));
    doc["i"] = i;
  }
  if (b.omega.theta) doc["theta"] = vec_json(*b.omega.theta);
  if (b.omega.theta_star) doc["theta_star"] = vec_json(*b.omega.theta_star);
  return doc;
}

Json fixture_scenario(const std::string& name) {
  if (name == "z2-minimal" || name == "z2-universal") {
    Json j = Json::object();
    j["name"] = name;
    j["group"] = {{"type", "cyclic"}, {"n", 2}};
    Json id2 = Json::array({Json::array({"1", "0"}), Json::array({"0", "1"})});
    j["module"] = {{"side", "kofG"},
                   {"degree", {1, 1}},
                   {"generators", {{"1", id2}}},
                   {"labels", {"e1", "e2"}}};
    j["calculus"] = {{"constructor", "class_data"},
                     {"data", Json::array({{{"rep", 1}, {"omega", {"1", "0"}}}})}};
    j["extension"] = {{"flavor", name == "z2-minimal" ? "nichols" : "universal_theta"},
                      {"degree_cap", 4}};
    return j;
  }
  if (name == "z2-subshuffle") {
    Json j = Json::object();
    j["name"] = name;
    j["group"] = {{"type", "cyclic"}, {"n", 2}};
    j["module"] = {{"side", "kG"},
                   {"degree", {0, 1, 1}},
                   {"generators",
                    {{"1", {{"-1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "-1"}}}}},
                   {"labels", {"gamma", "alpha1", "alpha2"}}};
    j["calculus"] = {{"constructor", "cocycle"},
                     {"data", {{"0", "0", "0"}, {"-2", "0", "0"}}}};
    j["extension"] = {{"flavor", "subshuffle_theta"}, {"degree_cap", 4}};
    j["codifferential"] = {{"theta_star", {"0", "1", "0"}}};
    return j;
  }
  schema("unknown fixture '" + name + "'");
}

int run_command(const std::string& command, const Json& scenario, int degree_cap,
                std::string& out) {
  auto emit = [&out](const Json& doc) { out = doc.dump(2) + "\n"; };
  try {
    Scenario s = parse_scenario(scenario);
    if (command == "build") {
      BuiltScenario b = build_scenario(s, degree_cap);
      Report rep;
      rep.add("build", true);
      std::vector<int> dims = b.omega.dims;
      emit(report_json(s.name, rep, dims));
      return 0;
    }
    if (command == "dims") {
      BuiltScenario b = build_scenario(s, degree_cap);
      emit(report_json(s.name, Report{}, b.omega.dims));
      return 0;
    }
    if (command == "verify") {
      BuiltScenario b = build_scenario(s, degree_cap);
      Report rep = verify_built(b);
      emit(report_json(s.name, rep, b.omega.dims));
      return rep.all_pass() ? 0 : 3;
    }
    if (command == "export") {
      BuiltScenario b = build_scenario(s, degree_cap);
      emit(export_json(s.name, b));
      return 0;
    }
    if (command == "pair") {
      Report rep = verify_pairing(s, degree_cap);
      std::vector<int> dims;
      for (const auto& [n, dn] : rep.dims) {
        (void)n;
        dims.push_back(dn);
      }
      emit(report_json(s.name, rep, dims));
      return rep.all_pass() ? 0 : 3;
    }
    schema("unknown command '" + command + "'");
  } catch (const SchemaError& e) {
    emit(Json{{"error", e.what()}, {"kind", "schema"}});
    return 1;
  } catch (const std::invalid_argument& e) {
    emit(Json{{"error", e.what()}, {"kind", "construction"}});
    return 2;
  }
}

}  // namespace hq
