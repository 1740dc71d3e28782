// Command-line surface for the orbit-cycle engine.
//
// Exit codes: 0 success (and Unique solver status), 1 parse/validation/data
// failure, 2 internal invariant breach, 3 Ambiguous, 4 Infeasible.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <set>
#include <string>

#include "orbitcc/ccsolver.hpp"
#include "orbitcc/cycles.hpp"
#include "orbitcc/errors.hpp"
#include "orbitcc/kgroup.hpp"
#include "orbitcc/packets.hpp"
#include "orbitcc/scenario_io.hpp"
#include "orbitcc/translation.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace orbitcc;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;
constexpr int kExitAmbiguous = 3;
constexpr int kExitInfeasible = 4;

struct Options {
  bool json = false;
  bool quiet = false;
  long long bound = 4;
};

void emit(const Options& opt, const std::string& line) {
  if (!opt.quiet) std::cout << line << "\n";
}

GeometricScenario load_validated(const std::string& path, const Options& opt) {
  auto s = load_scenario(path);
  auto report = validate(s);
  if (!report.ok()) {
    if (!opt.quiet) std::cerr << path << ": validation failed\n" << report.to_string();
    throw ParseError(path + ": validation failed");
  }
  return s;
}

int status_exit(SolveStatus st) {
  switch (st) {
    case SolveStatus::Unique: return kExitOk;
    case SolveStatus::Ambiguous: return kExitAmbiguous;
    case SolveStatus::Infeasible: return kExitInfeasible;
  }
  return kExitInternal;
}

json cycle_to_json(const ConormalCycle& c) {
  json out = json::object();
  for (const auto& [orbit, mult] : c.coefficients()) out[orbit] = mult;
  return out;
}

json table_to_json(const GeometricScenario& s, const CCTable& t) {
  json out = json::object();
  for (const auto& p : s.parameters) out[p.id] = cycle_to_json(t.entries.at(p.id));
  return out;
}

json n_values_to_json(const SolveResult& res) {
  json out = json::array();
  for (const auto& [key, value] : res.n_values) {
    const auto& [root, h, v] = key;
    out.push_back(json{
        {"root", root}, {"horizontal", h}, {"vertical", v}, {"n", value}});
  }
  return out;
}

int cmd_validate(const std::string& path, const Options& opt) {
  auto s = load_scenario(path);
  auto report = validate(s);
  if (opt.json) {
    json out;
    out["scenario"] = s.name;
    out["ok"] = report.ok();
    json issues = json::array();
    for (const auto& i : report.issues)
      issues.push_back(json{{"code", i.code}, {"message", i.message}});
    out["issues"] = issues;
    std::cout << out.dump(2) << "\n";
  } else {
    if (report.ok())
      emit(opt, "ok: " + s.name + " passes validation");
    else if (!opt.quiet)
      std::cout << report.to_string();
  }
  return report.ok() ? kExitOk : kExitInput;
}

int cmd_orbits(const std::string& path, const Options& opt) {
  auto s = load_validated(path, opt);
  if (opt.json) {
    json rows = json::array();
    for (const auto& o : s.orbits) {
      json row;
      row["id"] = o.id;
      row["dim"] = o.dim;
      row["closure_below"] = o.closure_below;
      row["smooth_closure"] = o.smooth_closure;
      json tags = json::array();
      for (int r = 0; r < s.datum.rank(); ++r)
        tags.push_back(classify(s, o.id, r) == OrbitClass::Vertical ? "V" : "H");
      row["root_tags"] = tags;
      rows.push_back(row);
    }
    std::cout << json{{"scenario", s.name}, {"dim_X", s.dim_X}, {"orbits", rows}}
                     .dump(2)
              << "\n";
    return kExitOk;
  }
  emit(opt, "scenario " + s.name + " (dim X = " + std::to_string(s.dim_X) + ")");
  for (const auto& o : s.orbits) {
    std::string below;
    for (const auto& b : o.closure_below) below += (below.empty() ? "" : ",") + b;
    std::string tags;
    for (int r = 0; r < s.datum.rank(); ++r) {
      if (r) tags += " ";
      tags += "s" + std::to_string(r) + ":";
      tags += classify(s, o.id, r) == OrbitClass::Vertical ? "V" : "H";
    }
    emit(opt, o.id + "  dim " + std::to_string(o.dim) + "  [" + tags + "]" +
                  (below.empty() ? "" : "  closure > " + below));
  }
  return kExitOk;
}

int cmd_waction(const std::string& path, const Options& opt) {
  auto s = load_validated(path, opt);
  auto res = solve(s, opt.bound);
  if (res.table.status != SolveStatus::Unique) {
    emit(opt, "status: " + to_string(res.table.status) + ": " +
                  res.table.description);
    return status_exit(res.table.status);
  }
  if (opt.json) {
    json ops = json::array();
    for (const auto& op : res.operators) {
      json rows = json::array();
      for (const auto& row : op.matrix()) rows.push_back(row);
      ops.push_back(json{{"root", op.root()}, {"matrix", rows}});
    }
    json out;
    out["scenario"] = s.name;
    out["status"] = to_string(res.table.status);
    json basis = json::array();
    for (const auto& o : s.orbits) basis.push_back(o.id);
    out["orbit_basis"] = basis;
    out["operators"] = ops;
    out["n_values"] = n_values_to_json(res);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  emit(opt, "scenario " + s.name + ": resolved reflection operators");
  std::string basis;
  for (const auto& o : s.orbits) basis += (basis.empty() ? "" : ", ") + o.id;
  emit(opt, "orbit basis: " + basis);
  for (const auto& op : res.operators) {
    emit(opt, "s" + std::to_string(op.root()) + ":");
    for (const auto& row : op.matrix()) {
      std::string line = "  ";
      for (std::size_t c = 0; c < row.size(); ++c)
        line += (c ? " " : "") + std::to_string(row[c]);
      emit(opt, line);
    }
  }
  for (const auto& [key, value] : res.n_values) {
    const auto& [root, h, v] = key;
    emit(opt, "n_s" + std::to_string(root) + "(" + h + "," + v +
                  ") = " + std::to_string(value));
  }
  return kExitOk;
}

int cmd_cc(const std::string& path, const Options& opt) {
  auto s = load_validated(path, opt);
  auto res = solve(s, opt.bound);
  if (opt.json) {
    json out;
    out["scenario"] = s.name;
    out["status"] = to_string(res.table.status);
    out["description"] = res.table.description;
    if (res.table.status == SolveStatus::Unique) {
      out["table"] = table_to_json(s, res.table);
      out["n_values"] = n_values_to_json(res);
    }
    std::cout << out.dump(2) << "\n";
    return status_exit(res.table.status);
  }
  emit(opt, "scenario " + s.name + ": status " + to_string(res.table.status));
  if (res.table.status != SolveStatus::Unique) {
    emit(opt, res.table.description);
    return status_exit(res.table.status);
  }
  // Orbit-by-parameter integer matrix.
  std::string header = "orbit \\ parameter";
  for (const auto& p : s.parameters) header += "  " + p.id;
  emit(opt, header);
  for (const auto& o : s.orbits) {
    std::string line = o.id;
    for (const auto& p : s.parameters)
      line += "  " + std::to_string(res.table.entries.at(p.id).coeff(o.id));
    emit(opt, line);
  }
  for (const auto& p : s.parameters)
    emit(opt, "CC(" + p.id + ") = " + res.table.entries.at(p.id).to_string());
  for (const auto& [key, value] : res.n_values) {
    const auto& [root, h, v] = key;
    emit(opt, "n_s" + std::to_string(root) + "(" + h + "," + v +
                  ") = " + std::to_string(value));
  }
  return kExitOk;
}

int cmd_packets(const std::string& path, const std::string& orbit_filter,
                const Options& opt) {
  auto s = load_validated(path, opt);
  auto res = solve(s, opt.bound);
  if (res.table.status != SolveStatus::Unique) {
    emit(opt, "status: " + to_string(res.table.status) + ": " +
                  res.table.description);
    return status_exit(res.table.status);
  }
  json rows = json::array();
  for (const auto& o : s.orbits) {
    if (!orbit_filter.empty() && o.id != orbit_filter) continue;
    auto lp = l_packet(s, o.id);
    auto mp = micro_packet(s, res.table, o.id);
    std::set<std::string> generics;
    for (const auto& id : mp)
      if (is_generic(s, id)) generics.insert(id);
    if (opt.json) {
      json row;
      row["orbit"] = o.id;
      row["l_packet"] = lp;
      row["micro_packet"] = mp;
      row["generic_members"] = generics;
      rows.push_back(row);
    } else {
      auto join = [](const std::set<std::string>& xs) {
        std::string out;
        for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
        return "{" + out + "}";
      };
      emit(opt, "orbit " + o.id + ": L-packet " + join(lp) + ", micro-packet " +
                    join(mp) + ", generic " + join(generics));
    }
  }
  if (!orbit_filter.empty() && !s.orbit_index.count(orbit_filter)) {
    if (!opt.quiet) std::cerr << "unknown orbit id: " << orbit_filter << "\n";
    return kExitInput;
  }
  if (opt.json)
    std::cout << json{{"scenario", s.name}, {"packets", rows}}.dump(2) << "\n";
  return kExitOk;
}

int cmd_shahidi(const std::string& path, const Options& opt) {
  auto s = load_validated(path, opt);
  auto res = solve(s, opt.bound);
  if (res.table.status != SolveStatus::Unique) {
    emit(opt, "status: " + to_string(res.table.status) + ": " +
                  res.table.description);
    return status_exit(res.table.status);
  }
  auto verdicts = shahidi_check_all(s, res.table);
  bool all_pass = true;
  json rows = json::array();
  for (const auto& [id, v] : verdicts) {
    all_pass = all_pass && v.pass;
    if (opt.json)
      rows.push_back(json{{"id", id}, {"pass", v.pass}, {"explanation", v.explanation}});
    else
      emit(opt, std::string(v.pass ? "pass" : "FAIL") + " " + id + ": " +
                    v.explanation);
  }
  if (opt.json)
    std::cout << json{{"scenario", s.name}, {"instances", rows}, {"all_pass", all_pass}}
                     .dump(2)
              << "\n";
  return all_pass ? kExitOk : kExitInput;
}

int cmd_translate(const std::string& singular_path, const std::string& regular_path,
                  const std::string& pairing_path, const Options& opt) {
  auto sing = load_validated(singular_path, opt);
  auto reg = load_validated(regular_path, opt);
  auto pairing = load_pairing(pairing_path);
  auto report = validate_pairing(pairing, sing, reg);
  if (!report.ok()) {
    if (!opt.quiet)
      std::cerr << pairing_path << ": pairing validation failed\n"
                << report.to_string();
    return kExitInput;
  }
  auto res = solve(reg, opt.bound);
  if (res.table.status != SolveStatus::Unique) {
    emit(opt, "regular status: " + to_string(res.table.status) + ": " +
                  res.table.description);
    return status_exit(res.table.status);
  }

  auto transported = transport_cc(pairing, sing, reg, res.table);
  std::map<std::string, bool> reg_flags;
  for (const auto& p : reg.parameters) reg_flags[p.id] = is_generic(reg, p.id);
  auto sing_flags = transport_genericity(pairing, sing, reg_flags);

  // Recomputation identity: every transported value is a regular lookup.
  for (const auto& sp : sing.parameters)
    for (const auto& o : sing.orbits) {
      long long got = transported.entries.at(sp.id).coeff(o.id);
      long long want = res.table.entries.at(pairing.parameter_map.at(sp.id))
                           .coeff(pull_orbit(pairing, o.id));
      if (got != want) {
        if (!opt.quiet) std::cerr << "internal transport mismatch\n";
        return kExitInternal;
      }
    }

  json packets = json::array();
  for (const auto& o : sing.orbits) {
    auto reg_packet = micro_packet(reg, res.table, pull_orbit(pairing, o.id));
    auto sing_packet = transport_packet(pairing, sing, reg_packet);
    packets.push_back(json{{"orbit", o.id},
                           {"regular_micro_packet", reg_packet},
                           {"micro_packet", sing_packet}});
  }

  if (opt.json) {
    json out;
    out["singular"] = sing.name;
    out["regular"] = reg.name;
    out["table"] = table_to_json(sing, transported);
    json flags = json::object();
    for (const auto& [id, flag] : sing_flags) flags[id] = flag;
    out["generic"] = flags;
    out["packets"] = packets;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  emit(opt, "transported table for " + sing.name + " (from " + reg.name + "):");
  for (const auto& sp : sing.parameters)
    emit(opt, "CC(" + sp.id + ") = " + transported.entries.at(sp.id).to_string() +
                  (sing_flags.at(sp.id) ? "  [generic]" : ""));
  for (const auto& row : packets)
    emit(opt, "micro-packet of " + row.at("orbit").get<std::string>() + ": " +
                  row.at("micro_packet").dump());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitcc: orbit geometry, cycle lattices and packet checks"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_flag("--quiet", opt.quiet, "suppress non-essential output");
  app.add_option("--bound", opt.bound, "solver search bound per unknown (>= 1)")
      ->check(CLI::PositiveNumber);

  std::string path, orbit_filter, regular_path, pairing_path;

  auto* validate_cmd = app.add_subcommand("validate", "check scenario invariants");
  validate_cmd->add_option("scenario", path)->required();
  auto* orbits_cmd = app.add_subcommand("orbits", "orbit table with V/H tags");
  orbits_cmd->add_option("scenario", path)->required();
  auto* waction_cmd =
      app.add_subcommand("waction", "resolved reflection operators on the cycle lattice");
  waction_cmd->add_option("scenario", path)->required();
  auto* cc_cmd = app.add_subcommand("cc", "solve the characteristic-cycle table");
  cc_cmd->add_option("scenario", path)->required();
  auto* packets_cmd = app.add_subcommand("packets", "L-packets and micro-packets");
  packets_cmd->add_option("scenario", path)->required();
  packets_cmd->add_option("--orbit", orbit_filter, "restrict to one orbit");
  auto* shahidi_cmd = app.add_subcommand("shahidi", "open-orbit criterion on A-parameter instances");
  shahidi_cmd->add_option("scenario", path)->required();
  auto* translate_cmd =
      app.add_subcommand("translate", "transport a regular table to a singular scenario");
  translate_cmd->add_option("singular", path)->required();
  translate_cmd->add_option("regular", regular_path)->required();
  translate_cmd->add_option("--pairing", pairing_path, "pairing file")->required();

  // Let --json/--quiet/--bound appear after the subcommand name too.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) return cmd_validate(path, opt);
    if (orbits_cmd->parsed()) return cmd_orbits(path, opt);
    if (waction_cmd->parsed()) return cmd_waction(path, opt);
    if (cc_cmd->parsed()) return cmd_cc(path, opt);
    if (packets_cmd->parsed()) return cmd_packets(path, orbit_filter, opt);
    if (shahidi_cmd->parsed()) return cmd_shahidi(path, opt);
    if (translate_cmd->parsed())
      return cmd_translate(path, regular_path, pairing_path, opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return kExitInput;
  } catch (const StateError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
