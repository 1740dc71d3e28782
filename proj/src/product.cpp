#include "orbitcc/errors.hpp"
#include "orbitcc/scenario.hpp"

namespace orbitcc {

std::string product_id(const std::string& a, const std::string& b) {
  return a + "." + b;
}

namespace {

std::vector<std::vector<long long>> block_cartan(const RootDatum& a,
                                                 const RootDatum& b) {
  int n = a.rank() + b.rank();
  std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) c[i][j] = a.cartan(i, j);
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j) c[a.rank() + i][a.rank() + j] = b.cartan(i, j);
  return c;
}

}  // namespace

GeometricScenario product(const GeometricScenario& a, const GeometricScenario& b) {
  if (!a.indexed() || !b.indexed())
    throw StateError("product factors must be indexed scenarios");
  GeometricScenario s;
  s.name = a.name + "x" + b.name;
  std::string dname = a.datum.name() + "x" + b.datum.name();
  if (a.datum.name() == "A1" && b.datum.name() == "A1")
    s.datum = RootDatum::builtin("A1xA1");
  else
    s.datum = RootDatum::from_cartan(block_cartan(a.datum, b.datum), dname);
  s.lambda = a.lambda;
  s.lambda.insert(s.lambda.end(), b.lambda.begin(), b.lambda.end());
  s.dim_X = a.dim_X + b.dim_X;

  for (const auto& oa : a.orbits)
    for (const auto& ob : b.orbits) {
      Orbit o;
      o.id = product_id(oa.id, ob.id);
      o.dim = oa.dim + ob.dim;
      o.smooth_closure = oa.smooth_closure && ob.smooth_closure;
      for (int ia : a.closure_set(a.orbit_idx(oa.id)))
        for (int ib : b.closure_set(b.orbit_idx(ob.id))) {
          std::string id = product_id(a.orbits[ia].id, b.orbits[ib].id);
          if (id != o.id) o.closure_below.push_back(id);
        }
      s.orbits.push_back(std::move(o));
    }

  // Fiber classes for a factor-one root fix the second coordinate, and
  // symmetrically for factor-two roots.
  for (int r = 0; r < a.datum.rank(); ++r) {
    std::vector<FiberClass> classes;
    for (const auto& cls : a.fibers[r])
      for (const auto& ob : b.orbits) {
        FiberClass c;
        for (const auto& m : cls.members) c.members.push_back(product_id(m, ob.id));
        c.dense = product_id(cls.dense, ob.id);
        classes.push_back(std::move(c));
      }
    s.fibers.push_back(std::move(classes));
  }
  for (int r = 0; r < b.datum.rank(); ++r) {
    std::vector<FiberClass> classes;
    for (const auto& cls : b.fibers[r])
      for (const auto& oa : a.orbits) {
        FiberClass c;
        for (const auto& m : cls.members) c.members.push_back(product_id(oa.id, m));
        c.dense = product_id(oa.id, cls.dense);
        classes.push_back(std::move(c));
      }
    s.fibers.push_back(std::move(classes));
  }

  for (const auto& pa : a.parameters)
    for (const auto& pb : b.parameters) {
      GeometricParameter p;
      p.id = product_id(pa.id, pb.id);
      p.orbit = product_id(pa.orbit, pb.orbit);
      bool both_trivial = pa.local_system == "triv" && pb.local_system == "triv";
      p.local_system = both_trivial
                           ? "triv"
                           : "(" + pa.local_system + "," + pb.local_system + ")";
      if (pa.generic_expected && pb.generic_expected)
        p.generic_expected = *pa.generic_expected && *pb.generic_expected;
      s.parameters.push_back(std::move(p));
    }

  const int na = static_cast<int>(a.parameters.size());
  const int nb = static_cast<int>(b.parameters.size());
  const int np = na * nb;
  auto pidx = [&](int ia, int ib) { return ia * nb + ib; };
  for (int r = 0; r < a.datum.rank(); ++r) {
    IntMatrix m;
    m.n = np;
    m.a.assign(static_cast<std::size_t>(np) * np, 0);
    for (int ia = 0; ia < na; ++ia)
      for (int ja = 0; ja < na; ++ja) {
        long long v = a.continuation[r].at(ia, ja);
        if (v == 0) continue;
        for (int ib = 0; ib < nb; ++ib) m.at(pidx(ia, ib), pidx(ja, ib)) = v;
      }
    s.continuation.push_back(std::move(m));
  }
  for (int r = 0; r < b.datum.rank(); ++r) {
    IntMatrix m;
    m.n = np;
    m.a.assign(static_cast<std::size_t>(np) * np, 0);
    for (int ib = 0; ib < nb; ++ib)
      for (int jb = 0; jb < nb; ++jb) {
        long long v = b.continuation[r].at(ib, jb);
        if (v == 0) continue;
        for (int ia = 0; ia < na; ++ia) m.at(pidx(ia, ib), pidx(ia, jb)) = v;
      }
    s.continuation.push_back(std::move(m));
  }

  for (const auto& g : a.automorphisms) {
    Automorphism h;
    h.name = g.name.empty() ? "left" : g.name + ".left";
    for (const auto& oa : a.orbits)
      for (const auto& ob : b.orbits)
        h.orbit_map[product_id(oa.id, ob.id)] =
            product_id(g.orbit_map.at(oa.id), ob.id);
    for (const auto& pa : a.parameters)
      for (const auto& pb : b.parameters)
        h.parameter_map[product_id(pa.id, pb.id)] =
            product_id(g.parameter_map.at(pa.id), pb.id);
    s.automorphisms.push_back(std::move(h));
  }
  for (const auto& g : b.automorphisms) {
    Automorphism h;
    h.name = g.name.empty() ? "right" : g.name + ".right";
    for (const auto& oa : a.orbits)
      for (const auto& ob : b.orbits)
        h.orbit_map[product_id(oa.id, ob.id)] =
            product_id(oa.id, g.orbit_map.at(ob.id));
    for (const auto& pa : a.parameters)
      for (const auto& pb : b.parameters)
        h.parameter_map[product_id(pa.id, pb.id)] =
            product_id(pa.id, g.parameter_map.at(pb.id));
    s.automorphisms.push_back(std::move(h));
  }

  for (const auto& xa : a.a_parameters)
    for (const auto& xb : b.a_parameters) {
      AParameterInstance inst;
      inst.id = product_id(xa.id, xb.id);
      inst.orbit = product_id(xa.orbit, xb.orbit);
      inst.e_is_zero = xa.e_is_zero && xb.e_is_zero;
      inst.conormal_fiber_dim = xa.conormal_fiber_dim + xb.conormal_fiber_dim;
      s.a_parameters.push_back(std::move(inst));
    }

  if (auto err = index_scenario(s)) throw StateError("product: " + *err);
  return s;
}

}  // namespace orbitcc
