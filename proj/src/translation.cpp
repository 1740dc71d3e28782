#include "orbitcc/translation.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>

#include "orbitcc/errors.hpp"

namespace orbitcc {

using json = nlohmann::ordered_json;

TranslationDatum analyze_datum(const RootDatum& d, RatVec lambda_singular,
                               RatVec lambda_regular) {
  if (static_cast<int>(lambda_singular.size()) != d.rank() ||
      static_cast<int>(lambda_regular.size()) != d.rank())
    throw InputError("translation datum lambdas must match the datum rank");
  for (int i = 0; i < d.num_roots(); ++i)
    if (d.pairing(i, lambda_regular) == Rat(0))
      throw InputError("translation target lambda' is singular");

  TranslationDatum t;
  t.chi_singular = analyze_character(d, std::move(lambda_singular));
  t.chi_regular = analyze_character(d, std::move(lambda_regular));

  t.lattice_check = true;
  for (int i = 0; i < d.rank(); ++i)
    if (!is_integer(t.chi_singular.lambda[i] - t.chi_regular.lambda[i]))
      t.lattice_check = false;

  t.positivity_check = true;
  for (int i = 0; i < d.num_roots(); ++i) {
    Rat v = d.pairing(i, t.chi_singular.lambda);
    if (is_integer(v) && v > Rat(0)) {
      Rat w = d.pairing(i, t.chi_regular.lambda);
      if (!(is_integer(w) && w > Rat(0))) t.positivity_check = false;
    }
  }
  return t;
}

bool validate_datum(const TranslationDatum& datum) {
  return datum.lattice_check && datum.positivity_check;
}

TranslationPairing load_pairing(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  auto need = [&](const char* key) -> const json& {
    auto it = j.find(key);
    if (it == j.end())
      throw ParseError(path + ": missing `" + std::string(key) + "` block");
    return *it;
  };
  TranslationPairing p;
  p.singular_scenario = need("singular").get<std::string>();
  p.regular_scenario = need("regular").get<std::string>();
  const auto& datum = need("datum");
  auto ratvec = [&](const json& arr) {
    RatVec v;
    for (const auto& e : arr) {
      if (e.is_number_integer())
        v.push_back(Rat(e.get<long long>()));
      else
        v.push_back(parse_rational(e.get<std::string>()));
    }
    return v;
  };
  p.lambda_singular = ratvec(datum.at("lambda_singular"));
  p.lambda_regular = ratvec(datum.at("lambda_regular"));
  for (const auto& [key, val] : need("orbit_preimages").items()) {
    OrbitPreimage pre;
    for (const auto& m : val.at("members")) pre.members.push_back(m.get<std::string>());
    pre.open_member = val.at("open").get<std::string>();
    p.orbit_preimages[key] = std::move(pre);
  }
  for (const auto& [key, val] : need("parameter_map").items())
    p.parameter_map[key] = val.get<std::string>();
  p.fiber_dim = static_cast<int>(need("fiber_dim").get<long long>());
  return p;
}

std::string pairing_to_json_text(const TranslationPairing& p) {
  auto ratvec = [](const RatVec& v) {
    json out = json::array();
    for (const auto& r : v) {
      if (is_integer(r))
        out.push_back(r.numerator());
      else
        out.push_back(rat_to_string(r));
    }
    return out;
  };
  json j;
  j["singular"] = p.singular_scenario;
  j["regular"] = p.regular_scenario;
  j["datum"] = json{{"lambda_singular", ratvec(p.lambda_singular)},
                    {"lambda_regular", ratvec(p.lambda_regular)}};
  json pre;
  for (const auto& [key, val] : p.orbit_preimages)
    pre[key] = json{{"members", val.members}, {"open", val.open_member}};
  j["orbit_preimages"] = pre;
  j["parameter_map"] = p.parameter_map;
  j["fiber_dim"] = p.fiber_dim;
  return j.dump(2) + "\n";
}

void save_pairing(const TranslationPairing& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open file for writing");
  out << pairing_to_json_text(p);
}

ValidationReport validate_pairing(const TranslationPairing& p,
                                  const GeometricScenario& sing,
                                  const GeometricScenario& reg) {
  ValidationReport rep;
  auto issue = [&](const std::string& code, const std::string& msg) {
    rep.issues.push_back({code, msg});
  };
  if (!(sing.datum == reg.datum)) {
    issue("pairing.datum", "scenarios live on different root data");
    return rep;
  }
  if (p.lambda_singular != sing.lambda || p.lambda_regular != reg.lambda)
    issue("pairing.lambda", "datum lambdas do not match the scenarios");
  try {
    auto datum = analyze_datum(sing.datum, p.lambda_singular, p.lambda_regular);
    if (!validate_datum(datum))
      issue("pairing.datum", "translation datum fails its checks");
  } catch (const InputError& e) {
    issue("pairing.datum", e.what());
  }
  if (!reg.chi.regular) issue("pairing.regular", "regular side is not regular");

  if (p.fiber_dim != reg.dim_X - sing.dim_X)
    issue("pairing.fiber_dim", "fiber_dim must equal dim X(lambda') - dim X(lambda)");

  std::map<std::string, int> covered;
  for (const auto& o : sing.orbits) {
    auto it = p.orbit_preimages.find(o.id);
    if (it == p.orbit_preimages.end()) {
      issue("pairing.preimages", "missing preimage for singular orbit " + o.id);
      continue;
    }
    const auto& pre = it->second;
    bool open_found = false;
    int expected_dim = o.dim + p.fiber_dim;
    for (const auto& m : pre.members) {
      if (!reg.orbit_index.count(m)) {
        issue("pairing.preimages", "preimage of " + o.id + " lists unknown orbit " + m);
        continue;
      }
      covered[m]++;
      if (m == pre.open_member) open_found = true;
      int dim = reg.orbits[reg.orbit_idx(m)].dim;
      if (m == pre.open_member && dim != expected_dim)
        issue("pairing.preimages",
              "designated member of " + o.id + " must have dim " +
                  std::to_string(expected_dim));
      if (m != pre.open_member && dim >= expected_dim)
        issue("pairing.preimages",
              "designated member of " + o.id + " is not the unique top orbit");
    }
    if (!open_found)
      issue("pairing.preimages", "designated member of " + o.id + " not in its preimage");
  }
  for (const auto& [id, count] : covered)
    if (count > 1) issue("pairing.partition", "regular orbit " + id + " covered twice");
  if (static_cast<int>(covered.size()) != static_cast<int>(reg.orbits.size()))
    issue("pairing.partition", "preimages do not cover the regular orbit set");
  if (!p.orbit_preimages.empty() && sing.indexed() && reg.indexed()) {
    auto it = p.orbit_preimages.find(sing.orbits[sing.open_orbit()].id);
    if (it != p.orbit_preimages.end() &&
        it->second.open_member != reg.orbits[reg.open_orbit()].id)
      issue("pairing.open", "open singular orbit must pull to the open regular orbit");
  }

  std::set<std::string> images;
  for (const auto& sp : sing.parameters) {
    auto it = p.parameter_map.find(sp.id);
    if (it == p.parameter_map.end()) {
      issue("pairing.parameters", "parameter map misses " + sp.id);
      continue;
    }
    if (!reg.param_index.count(it->second)) {
      issue("pairing.parameters", "parameter map targets unknown " + it->second);
      continue;
    }
    if (!images.insert(it->second).second)
      issue("pairing.parameters", "parameter map is not injective at " + it->second);
    const auto& rp = reg.parameters[reg.param_idx(it->second)];
    auto pre = p.orbit_preimages.find(sp.orbit);
    if (pre != p.orbit_preimages.end() && rp.orbit != pre->second.open_member)
      issue("pairing.parameters",
            "translate of " + sp.id + " is not supported on the designated member");
  }
  return rep;
}

std::string pull_orbit(const TranslationPairing& p, const std::string& singular_orbit) {
  auto it = p.orbit_preimages.find(singular_orbit);
  if (it == p.orbit_preimages.end())
    throw InputError("unknown singular orbit id: " + singular_orbit);
  return it->second.open_member;
}

namespace {

const std::string& pull_param(const TranslationPairing& p, const std::string& xi) {
  auto it = p.parameter_map.find(xi);
  if (it == p.parameter_map.end())
    throw InputError("parameter map misses singular parameter " + xi);
  return it->second;
}

}  // namespace

CCTable transport_cc(const TranslationPairing& p, const GeometricScenario& sing,
                     const GeometricScenario& reg, const CCTable& regular_table) {
  if (regular_table.status != SolveStatus::Unique)
    throw StateError("transport requires a unique regular table");
  CCTable out;
  out.status = SolveStatus::Unique;
  out.description = "transported from " + p.regular_scenario;
  for (const auto& sp : sing.parameters) {
    const auto& reg_id = pull_param(p, sp.id);
    const auto& reg_cycle = regular_table.entries.at(reg_id);
    ConormalCycle cycle;
    for (const auto& o : sing.orbits)
      cycle.set(o.id, reg_cycle.coeff(pull_orbit(p, o.id)));
    out.entries[sp.id] = std::move(cycle);
  }
  (void)reg;
  return out;
}

std::map<std::string, bool> transport_genericity(
    const TranslationPairing& p, const GeometricScenario& sing,
    const std::map<std::string, bool>& regular_flags) {
  std::map<std::string, bool> out;
  for (const auto& sp : sing.parameters) {
    const auto& reg_id = pull_param(p, sp.id);
    auto it = regular_flags.find(reg_id);
    if (it == regular_flags.end())
      throw InputError("regular genericity flags miss parameter " + reg_id);
    out[sp.id] = it->second;
  }
  return out;
}

std::set<std::string> transport_packet(const TranslationPairing& p,
                                       const GeometricScenario& sing,
                                       const std::set<std::string>& regular_packet) {
  std::set<std::string> out;
  for (const auto& sp : sing.parameters)
    if (regular_packet.count(pull_param(p, sp.id))) out.insert(sp.id);
  return out;
}

}  // namespace orbitcc
