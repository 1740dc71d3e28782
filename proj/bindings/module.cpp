#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "orbitcc/ccsolver.hpp"
#include "orbitcc/cycles.hpp"
#include "orbitcc/errors.hpp"
#include "orbitcc/infinitesimal.hpp"
#include "orbitcc/kgroup.hpp"
#include "orbitcc/packets.hpp"
#include "orbitcc/scenario_io.hpp"
#include "orbitcc/translation.hpp"
#include "orbitcc/weyl.hpp"

namespace py = pybind11;
using namespace orbitcc;

namespace {

RatVec ratvec_from_py(const std::vector<std::string>& entries) {
  RatVec v;
  for (const auto& e : entries) v.push_back(parse_rational(e));
  return v;
}

std::vector<std::string> ratvec_to_py(const RatVec& v) {
  std::vector<std::string> out;
  for (const auto& r : v) out.push_back(rat_to_string(r));
  return out;
}

struct PyScenario {
  GeometricScenario s;
};

struct PyTable {
  CCTable t;
};

// Self-contained solution: the result is computed against the embedded
// scenario copy, so the resolved operators never dangle.
struct PySolution {
  GeometricScenario scenario;
  SolveResult result;
};

std::unique_ptr<PySolution> solve_py(const PyScenario& s, long long bound) {
  auto out = std::make_unique<PySolution>();
  out->scenario = s.s;
  out->result = solve(out->scenario, bound);
  return out;
}

py::dict table_to_dict(const CCTable& t) {
  py::dict out;
  for (const auto& [pid, cycle] : t.entries) {
    py::dict row;
    for (const auto& [orbit, mult] : cycle.coefficients())
      row[py::str(orbit)] = mult;
    out[py::str(pid)] = row;
  }
  return out;
}

std::vector<std::string> validate_py(PyScenario& s) {
  auto rep = validate(s.s);
  std::vector<std::string> out;
  for (const auto& i : rep.issues) out.push_back("[" + i.code + "] " + i.message);
  return out;
}

void ensure_valid(PyScenario& s) {
  auto issues = validate_py(s);
  if (!issues.empty()) throw IntegrityError("scenario invalid: " + issues.front());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact engine for K-orbit scenarios: Weyl actions on conormal-cycle "
            "lattices, characteristic-cycle solving, micro-packets";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<StateError>(m, "StateError", PyExc_RuntimeError);
  py::register_exception<IntegrityError>(m, "IntegrityError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<PyScenario>(m, "Scenario")
      .def_property_readonly("name", [](const PyScenario& s) { return s.s.name; })
      .def_property_readonly("dim_X", [](const PyScenario& s) { return s.s.dim_X; })
      .def_property_readonly("rank",
                             [](const PyScenario& s) { return s.s.datum.rank(); })
      .def_property_readonly("root_system",
                             [](const PyScenario& s) { return s.s.datum.name(); })
      .def_property_readonly(
          "lam", [](const PyScenario& s) { return ratvec_to_py(s.s.lambda); })
      .def_property_readonly(
          "regular", [](const PyScenario& s) { return s.s.chi.regular; })
      .def_property_readonly("orbits",
                             [](const PyScenario& s) {
                               py::list out;
                               for (const auto& o : s.s.orbits) {
                                 py::dict row;
                                 row["id"] = o.id;
                                 row["dim"] = o.dim;
                                 row["closure_below"] = o.closure_below;
                                 row["smooth_closure"] = o.smooth_closure;
                                 out.append(row);
                               }
                               return out;
                             })
      .def_property_readonly("parameters",
                             [](const PyScenario& s) {
                               py::list out;
                               for (const auto& p : s.s.parameters) {
                                 py::dict row;
                                 row["id"] = p.id;
                                 row["orbit"] = p.orbit;
                                 row["local_system"] = p.local_system;
                                 if (p.pure_form) row["pure_form"] = *p.pure_form;
                                 if (p.generic_expected)
                                   row["generic_expected"] = *p.generic_expected;
                                 out.append(row);
                               }
                               return out;
                             })
      .def_property_readonly("open_orbit",
                             [](const PyScenario& s) {
                               return s.s.orbits[s.s.open_orbit()].id;
                             })
      .def("__repr__", [](const PyScenario& s) {
        return "<Scenario " + s.s.name + ": " + std::to_string(s.s.orbits.size()) +
               " orbits, " + std::to_string(s.s.parameters.size()) + " parameters>";
      });

  py::class_<PyTable>(m, "Table")
      .def_property_readonly("status",
                             [](const PyTable& t) { return to_string(t.t.status); })
      .def_property_readonly("description",
                             [](const PyTable& t) { return t.t.description; })
      .def_property_readonly("entries",
                             [](const PyTable& t) { return table_to_dict(t.t); })
      .def("chi", [](const PyTable& t, const std::string& orbit,
                     const std::string& param) { return chi_mic(t.t, orbit, param); });

  py::class_<PySolution>(m, "Solution")
      .def_property_readonly(
          "status", [](const PySolution& r) { return to_string(r.result.table.status); })
      .def_property_readonly(
          "description", [](const PySolution& r) { return r.result.table.description; })
      .def_property_readonly(
          "entries", [](const PySolution& r) { return table_to_dict(r.result.table); })
      .def_property_readonly("table",
                             [](const PySolution& r) { return PyTable{r.result.table}; })
      .def_property_readonly("n_values",
                             [](const PySolution& r) {
                               py::dict out;
                               for (const auto& [key, v] : r.result.n_values) {
                                 const auto& [root, h, vert] = key;
                                 out[py::make_tuple(root, h, vert)] = v;
                               }
                               return out;
                             })
      .def("chi",
           [](const PySolution& r, const std::string& orbit, const std::string& param) {
             return chi_mic(r.result.table, orbit, param);
           })
      .def("audit", [](const PySolution& r) {
        auto rep = equivariance_audit(r.scenario, r.result.table, r.result.operators);
        std::vector<std::string> out;
        for (const auto& e : rep.mismatches)
          out.push_back(e.param + " / root " + std::to_string(e.root) + ": " +
                        e.lhs.to_string() + " != " + e.rhs.to_string());
        return out;
      });

  m.def("load_scenario", [](const std::string& path) {
    return PyScenario{load_scenario(path)};
  });
  m.def("scenario_to_json",
        [](const PyScenario& s) { return scenario_to_json_text(s.s); });
  m.def("save_scenario", [](const PyScenario& s, const std::string& path) {
    save_scenario(s.s, path);
  });
  m.def("validate", &validate_py, "validation issues; empty when the scenario is accepted");
  m.def("generate_rank_one", [](const std::string& kind) {
    RankOneKind k;
    if (kind == "torus")
      k = RankOneKind::Torus;
    else if (kind == "normalizer")
      k = RankOneKind::Normalizer;
    else
      throw InputError("kind must be 'torus' or 'normalizer'");
    auto g = generate_rank_one(k);
    py::dict oracle;
    for (const auto& [pid, cc] : g.oracle_cc) {
      py::dict row;
      for (const auto& [orbit, mult] : cc) row[py::str(orbit)] = mult;
      oracle[py::str(pid)] = row;
    }
    py::dict oracle_n;
    for (const auto& [slot, n] : g.oracle_n)
      oracle_n[py::make_tuple(slot.first, slot.second)] = n;
    return py::make_tuple(PyScenario{g.scenario}, oracle, oracle_n);
  });
  m.def("product", [](PyScenario& a, PyScenario& b) {
    ensure_valid(a);
    ensure_valid(b);
    return PyScenario{product(a.s, b.s)};
  });

  m.def("classify", [](PyScenario& s, const std::string& orbit, int root) {
    ensure_valid(s);
    return classify(s.s, orbit, root) == OrbitClass::Vertical
               ? std::string("vertical")
               : std::string("horizontal");
  });
  m.def("horizontal_witness", [](PyScenario& s, const std::string& orbit) {
    ensure_valid(s);
    return horizontal_witness(s.s, orbit);
  });

  m.def("tau_invariant", [](PyScenario& s, const std::string& param) {
    ensure_valid(s);
    auto tau = tau_invariant(s.s, param);
    return py::make_tuple(tau.dmodule_tau, tau.rep_tau);
  });
  m.def("is_generic", [](PyScenario& s, const std::string& param) {
    ensure_valid(s);
    return is_generic(s.s, param);
  });

  m.def(
      "solve",
      [](PyScenario& s, long long bound) {
        ensure_valid(s);
        return solve_py(s, bound);
      },
      py::arg("scenario"), py::arg("bound") = 4);

  m.def("l_packet", [](PyScenario& s, const std::string& orbit) {
    ensure_valid(s);
    return l_packet(s.s, orbit);
  });
  m.def("micro_packet", [](PyScenario& s, const PySolution& sol,
                           const std::string& orbit) {
    return micro_packet(s.s, sol.result.table, orbit);
  });
  m.def("micro_packet", [](PyScenario& s, const PyTable& t, const std::string& orbit) {
    return micro_packet(s.s, t.t, orbit);
  });
  m.def("micro_packet_for_form",
        [](PyScenario& s, const PySolution& sol, const std::string& orbit,
           const std::string& delta) {
          return micro_packet_for_form(s.s, sol.result.table, orbit, delta);
        });
  m.def("verify_generic_membership", [](PyScenario& s, const PySolution& sol) {
    return verify_generic_membership(s.s, sol.result.table).violations;
  });
  m.def("shahidi_check", [](PyScenario& s, const PySolution& sol) {
    py::list out;
    for (const auto& [id, verdict] : shahidi_check_all(s.s, sol.result.table)) {
      py::dict row;
      row["id"] = id;
      row["pass"] = verdict.pass;
      row["explanation"] = verdict.explanation;
      out.append(row);
    }
    return out;
  });

  py::class_<TranslationPairing>(m, "Pairing")
      .def_property_readonly("singular",
                             [](const TranslationPairing& p) {
                               return p.singular_scenario;
                             })
      .def_property_readonly("regular",
                             [](const TranslationPairing& p) {
                               return p.regular_scenario;
                             })
      .def_property_readonly("fiber_dim",
                             [](const TranslationPairing& p) { return p.fiber_dim; });
  m.def("load_pairing", &load_pairing);
  m.def("validate_pairing",
        [](const TranslationPairing& p, PyScenario& sing, PyScenario& reg) {
          ensure_valid(sing);
          ensure_valid(reg);
          auto rep = validate_pairing(p, sing.s, reg.s);
          std::vector<std::string> out;
          for (const auto& i : rep.issues)
            out.push_back("[" + i.code + "] " + i.message);
          return out;
        });
  m.def("pull_orbit", &pull_orbit);
  m.def("transport_cc", [](const TranslationPairing& p, PyScenario& sing,
                           PyScenario& reg, const PySolution& sol) {
    return PyTable{transport_cc(p, sing.s, reg.s, sol.result.table)};
  });
  m.def("transport_genericity",
        [](const TranslationPairing& p, PyScenario& sing,
           const std::map<std::string, bool>& flags) {
          return transport_genericity(p, sing.s, flags);
        });
  m.def("transport_packet", [](const TranslationPairing& p, PyScenario& sing,
                               const std::set<std::string>& packet) {
    return transport_packet(p, sing.s, packet);
  });

  // Root-datum utilities in the fixed fundamental-coweight coordinates.
  m.def("root_pairing",
        [](const std::string& system, int root, const std::vector<std::string>& lam) {
          auto d = RootDatum::builtin(system);
          return rat_to_string(d.pairing(root, ratvec_from_py(lam)));
        });
  m.def("weyl_act", [](const std::string& system, const std::vector<int>& word,
                       const std::vector<std::string>& lam) {
    auto d = RootDatum::builtin(system);
    return ratvec_to_py(weyl_act(d, WeylElement{word}, ratvec_from_py(lam)));
  });
  m.def("is_regular_lambda",
        [](const std::string& system, const std::vector<std::string>& lam) {
          auto d = RootDatum::builtin(system);
          return analyze_character(d, ratvec_from_py(lam)).regular;
        });
  m.def("parabolic", [](const std::string& system,
                        const std::vector<std::string>& lam) {
    auto d = RootDatum::builtin(system);
    auto chi = analyze_character(d, ratvec_from_py(lam));
    auto p = parabolic_data(d, chi);
    py::dict out;
    out["levi_roots"] = p.levi_roots;
    out["nilradical_roots"] = p.nilradical_roots;
    out["integral_roots"] = p.group_lambda_roots;
    out["regular"] = chi.regular;
    return out;
  });
}
