#include "orbitcc/scenario_io.hpp"

#include <fstream>
#include <json.hpp>

#include "orbitcc/errors.hpp"

namespace orbitcc {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw ParseError(origin + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& origin) {
  auto it = j.find(key);
  if (it == j.end()) fail(origin, std::string("missing `") + key + "` block");
  return *it;
}

Rat rational_from(const json& j, const std::string& origin) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(origin, "rational entries must be integers or \"p/q\" strings");
}

RatVec ratvec_from(const json& j, const std::string& origin) {
  if (!j.is_array()) fail(origin, "expected an array of rationals");
  RatVec v;
  for (const auto& e : j) v.push_back(rational_from(e, origin));
  return v;
}

long long int_from(const json& j, const std::string& origin, const char* what) {
  if (!j.is_number_integer())
    fail(origin, std::string(what) + " must be an integer");
  return j.get<long long>();
}

std::string str_from(const json& j, const std::string& origin, const char* what) {
  if (!j.is_string()) fail(origin, std::string(what) + " must be a string");
  return j.get<std::string>();
}

RootDatum datum_from(const json& j, const std::string& origin) {
  if (j.is_string()) return RootDatum::builtin(j.get<std::string>());
  if (j.is_object() && j.contains("cartan")) {
    std::vector<std::vector<long long>> cartan;
    for (const auto& row : j.at("cartan")) {
      std::vector<long long> r;
      for (const auto& e : row) r.push_back(int_from(e, origin, "cartan entry"));
      cartan.push_back(std::move(r));
    }
    return RootDatum::from_cartan(std::move(cartan));
  }
  fail(origin, "root_system must be a builtin name or {\"cartan\": [[...]]}");
}

json datum_to(const RootDatum& d) {
  const auto& names = RootDatum::builtin_names();
  for (const auto& n : names)
    if (d.name() == n) return json(n);
  json rows = json::array();
  for (int i = 0; i < d.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < d.rank(); ++j) row.push_back(d.cartan(i, j));
    rows.push_back(row);
  }
  return json{{"cartan", rows}};
}

json ratvec_to(const RatVec& v) {
  json out = json::array();
  for (const auto& r : v) {
    if (is_integer(r))
      out.push_back(r.numerator());
    else
      out.push_back(rat_to_string(r));
  }
  return out;
}

}  // namespace

GeometricScenario scenario_from_json_text(const std::string& text,
                                          const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, e.what());
  }
  if (!j.is_object()) fail(origin, "top level must be an object");

  GeometricScenario s;
  s.name = str_from(field(j, "name", origin), origin, "name");
  s.datum = datum_from(field(j, "root_system", origin), origin);
  s.lambda = ratvec_from(field(j, "lambda", origin), origin);
  s.dim_X = static_cast<int>(int_from(field(j, "dim_X", origin), origin, "dim_X"));

  for (const auto& jo : field(j, "orbits", origin)) {
    Orbit o;
    o.id = str_from(field(jo, "id", origin), origin, "orbit id");
    o.dim = static_cast<int>(int_from(field(jo, "dim", origin), origin, "orbit dim"));
    for (const auto& b : field(jo, "closure_below", origin))
      o.closure_below.push_back(str_from(b, origin, "closure_below entry"));
    if (jo.contains("smooth_closure")) {
      if (!jo.at("smooth_closure").is_boolean())
        fail(origin, "smooth_closure must be a boolean");
      o.smooth_closure = jo.at("smooth_closure").get<bool>();
    }
    s.orbits.push_back(std::move(o));
  }

  const auto& jf = field(j, "fibers", origin);
  if (!jf.is_array()) fail(origin, "`fibers` must be an array indexed by simple root");
  for (const auto& per_root : jf) {
    std::vector<FiberClass> classes;
    for (const auto& jc : per_root) {
      FiberClass c;
      for (const auto& m : field(jc, "members", origin))
        c.members.push_back(str_from(m, origin, "fiber member"));
      c.dense = str_from(field(jc, "dense", origin), origin, "dense member");
      classes.push_back(std::move(c));
    }
    s.fibers.push_back(std::move(classes));
  }

  for (const auto& jp : field(j, "parameters", origin)) {
    GeometricParameter p;
    p.id = str_from(field(jp, "id", origin), origin, "parameter id");
    p.orbit = str_from(field(jp, "orbit", origin), origin, "parameter orbit");
    p.local_system =
        str_from(field(jp, "local_system", origin), origin, "local_system");
    if (jp.contains("pure_form"))
      p.pure_form = str_from(jp.at("pure_form"), origin, "pure_form");
    if (jp.contains("generic_expected")) {
      if (!jp.at("generic_expected").is_boolean())
        fail(origin, "generic_expected must be a boolean");
      p.generic_expected = jp.at("generic_expected").get<bool>();
    }
    s.parameters.push_back(std::move(p));
  }

  const auto& jm = field(j, "continuation", origin);
  if (!jm.is_array())
    fail(origin, "`continuation` must be an array of matrices indexed by simple root");
  const int np = static_cast<int>(s.parameters.size());
  for (const auto& jmat : jm) {
    IntMatrix m;
    m.n = np;
    if (!jmat.is_array() || static_cast<int>(jmat.size()) != np)
      fail(origin, "continuation matrix must have one row per parameter");
    for (const auto& row : jmat) {
      if (!row.is_array() || static_cast<int>(row.size()) != np)
        fail(origin, "continuation matrix row has wrong length");
      for (const auto& e : row) m.a.push_back(int_from(e, origin, "matrix entry"));
    }
    s.continuation.push_back(std::move(m));
  }

  if (j.contains("automorphisms")) {
    for (const auto& jg : j.at("automorphisms")) {
      Automorphism g;
      if (jg.contains("name")) g.name = str_from(jg.at("name"), origin, "automorphism name");
      for (const auto& [k, v] : field(jg, "orbit_map", origin).items())
        g.orbit_map[k] = str_from(v, origin, "orbit_map value");
      for (const auto& [k, v] : field(jg, "parameter_map", origin).items())
        g.parameter_map[k] = str_from(v, origin, "parameter_map value");
      s.automorphisms.push_back(std::move(g));
    }
  }

  if (j.contains("a_parameters")) {
    for (const auto& ja : j.at("a_parameters")) {
      AParameterInstance a;
      a.id = str_from(field(ja, "id", origin), origin, "a_parameter id");
      a.orbit = str_from(field(ja, "orbit", origin), origin, "a_parameter orbit");
      const auto& je = field(ja, "e_is_zero", origin);
      if (!je.is_boolean()) fail(origin, "e_is_zero must be a boolean");
      a.e_is_zero = je.get<bool>();
      a.conormal_fiber_dim = static_cast<int>(int_from(
          field(ja, "conormal_fiber_dim", origin), origin, "conormal_fiber_dim"));
      s.a_parameters.push_back(std::move(a));
    }
  }

  index_scenario(s);  // best effort; validate() reports problems
  return s;
}

GeometricScenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return scenario_from_json_text(text, path);
}

std::string scenario_to_json_text(const GeometricScenario& s) {
  json j;
  j["name"] = s.name;
  j["root_system"] = datum_to(s.datum);
  j["lambda"] = ratvec_to(s.lambda);
  j["dim_X"] = s.dim_X;

  json orbits = json::array();
  for (const auto& o : s.orbits) {
    json jo;
    jo["id"] = o.id;
    jo["dim"] = o.dim;
    jo["closure_below"] = o.closure_below;
    jo["smooth_closure"] = o.smooth_closure;
    orbits.push_back(jo);
  }
  j["orbits"] = orbits;

  json fibers = json::array();
  for (const auto& per_root : s.fibers) {
    json classes = json::array();
    for (const auto& c : per_root)
      classes.push_back(json{{"members", c.members}, {"dense", c.dense}});
    fibers.push_back(classes);
  }
  j["fibers"] = fibers;

  json params = json::array();
  for (const auto& p : s.parameters) {
    json jp;
    jp["id"] = p.id;
    jp["orbit"] = p.orbit;
    jp["local_system"] = p.local_system;
    if (p.pure_form) jp["pure_form"] = *p.pure_form;
    if (p.generic_expected) jp["generic_expected"] = *p.generic_expected;
    params.push_back(jp);
  }
  j["parameters"] = params;

  json mats = json::array();
  for (const auto& m : s.continuation) {
    json rows = json::array();
    for (int r = 0; r < m.n; ++r) {
      json row = json::array();
      for (int c = 0; c < m.n; ++c) row.push_back(m.at(r, c));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  j["continuation"] = mats;

  if (!s.automorphisms.empty()) {
    json autos = json::array();
    for (const auto& g : s.automorphisms) {
      json jg;
      if (!g.name.empty()) jg["name"] = g.name;
      jg["orbit_map"] = g.orbit_map;
      jg["parameter_map"] = g.parameter_map;
      autos.push_back(jg);
    }
    j["automorphisms"] = autos;
  }

  if (!s.a_parameters.empty()) {
    json insts = json::array();
    for (const auto& a : s.a_parameters)
      insts.push_back(json{{"id", a.id},
                           {"orbit", a.orbit},
                           {"e_is_zero", a.e_is_zero},
                           {"conormal_fiber_dim", a.conormal_fiber_dim}});
    j["a_parameters"] = insts;
  }

  return j.dump(2) + "\n";
}

void save_scenario(const GeometricScenario& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open file for writing");
  out << scenario_to_json_text(s);
}

}  // namespace orbitcc
