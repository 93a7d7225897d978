#pragma once

// Verification suites: exact identities checked over fixed families of
// groups, cocycles and complexes. Every failure carries a JSON dump of the
// offending instance.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tqft/cochains.hpp"
#include "tqft/euler.hpp"
#include "tqft/groups.hpp"
#include "tqft/io.hpp"
#include "tqft/pathintegral.hpp"
#include "tqft/presets.hpp"

namespace tqft::verify {

using io::Json;

struct Check {
  std::string name;
  bool pass = false;
  Json detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, Json detail = Json::object()) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  Json to_json() const {
    Json list = Json::array();
    for (const Check& c : checks) {
      Json j{{"name", c.name}, {"pass", c.pass}};
      if (!c.pass) j["instance"] = c.detail;
      list.push_back(j);
    }
    return {{"suite", suite}, {"pass", pass()}, {"checks", list}};
  }
};

struct NamedCocycle {
  std::string name;
  Cochain cocycle;
};

/// The trivial cocycle, plus w_p for p in [1, max_p] on cyclic presets.
inline std::vector<NamedCocycle> cocycles_for(const std::string& group_name, const FiniteGroup& g, int max_p) {
  std::vector<NamedCocycle> out{{"trivial", zero_cochain(3, g)}};
  if (group_name.starts_with("Z/"))
    for (int p = 1; p <= max_p; ++p)
      out.push_back({"cyclic:" + std::to_string(g.order()) + ":" + std::to_string(p), cyclic_cocycle(g.order(), p)});
  return out;
}

inline Json values_json(std::initializer_list<std::pair<const char*, const PhaseSum*>> values) {
  Json j = Json::object();
  for (const auto& [k, v] : values) j[k] = v->str();
  return j;
}

inline SuiteReport gluing_suite() {
  SuiteReport r{"gluing", {}};
  const GluingInstance balls = ball_pair(), tori = solid_torus_pair();
  const Manifold t3 = preset_manifold("T3_6tet");
  for (const std::string gn : {"Z/2", "Z/3", "S3"}) {
    const FiniteGroup g = preset_group(gn);
    for (const auto& [wn, w] : cocycles_for(gn, g, g.order() - 1)) {
      const std::string tag = gn + " " + wn;
      for (const auto& [name, inst] : {std::pair{"Ball u Ball", &balls}, std::pair{"SolidTorus u SolidTorus", &tori}}) {
        const GlueReport rep = glue_identity_check(inst->first, inst->second, inst->matching, g, w);
        r.add(std::string(name) + " " + tag, rep.equal,
              values_json({{"glued", &rep.glued}, {"summed", &rep.summed}, {"paired", &rep.paired}}));
      }
      const TraceReport rep = cut_glue_check(t3.complex, t3.surfaces.at("torus_z"), g, w);
      r.add("T3_6tet cut along torus_z " + tag, rep.equal,
            values_json({{"original", &rep.original}, {"reglued", &rep.reglued}, {"trace", &rep.trace}}));
    }
  }
  return r;
}

inline SuiteReport coboundary_suite(std::uint64_t seed, int samples = 50) {
  SuiteReport r{"coboundary", {}};
  std::mt19937_64 rng(seed);
  for (const std::string gn : {"Z/4", "S3"}) {
    const FiniteGroup g = preset_group(gn);
    const auto cocycles = cocycles_for(gn, g, g.order() - 1);
    std::vector<std::pair<std::string, StateSum>> sums;
    for (const std::string m : {"S3_2tet", "L(2,1)", "T3_6tet"}) sums.emplace_back(m, StateSum(preset_manifold(m).complex, g));
    std::vector<std::vector<PhaseSum>> base(sums.size());
    for (std::size_t m = 0; m < sums.size(); ++m)
      for (const auto& nc : cocycles) base[m].push_back(sums[m].second.evaluate(nc.cocycle));
    std::vector<std::vector<bool>> ok(sums.size(), std::vector<bool>(cocycles.size(), true));
    std::vector<std::vector<Json>> witness(sums.size(), std::vector<Json>(cocycles.size()));
    for (int i = 0; i < samples; ++i) {
      const Cochain beta = random_cochain(2, g, 12, rng);
      const Cochain db = coboundary(beta, g);
      for (std::size_t m = 0; m < sums.size(); ++m)
        for (std::size_t c = 0; c < cocycles.size(); ++c) {
          if (!ok[m][c]) continue;
          const PhaseSum z = sums[m].second.evaluate(cocycles[c].cocycle + db);
          if (z != base[m][c]) {
            ok[m][c] = false;
            witness[m][c] = {{"sample", i}, {"beta", io::cocycle_to_json(beta)}, {"z", z.str()}, {"expected", base[m][c].str()}};
          }
        }
    }
    for (std::size_t m = 0; m < sums.size(); ++m)
      for (std::size_t c = 0; c < cocycles.size(); ++c)
        r.add(sums[m].first + " " + gn + " " + cocycles[c].name + " over " + std::to_string(samples) + " beta", ok[m][c],
              witness[m][c]);
  }
  return r;
}

inline SuiteReport triangulation_suite() {
  SuiteReport r{"triangulation", {}};
  const DeltaComplex3 a = preset_manifold("S3_2tet").complex, b = preset_manifold("S3_bd4simplex").complex,
                      c = ball_union_ball();
  for (const std::string& gn : preset_group_names()) {
    const FiniteGroup g = preset_group(gn);
    const StateSum sa(a, g), sb(b, g), sc(c, g);
    for (const auto& [wn, w] : cocycles_for(gn, g, g.order() - 1)) {
      const PhaseSum za = sa.evaluate(w), zb = sb.evaluate(w), zc = sc.evaluate(w);
      r.add("S3 presentations " + gn + " " + wn, za == zb && zb == zc && za == PhaseSum(Rational(1, g.order())),
            values_json({{"S3_2tet", &za}, {"S3_bd4simplex", &zb}, {"Ball u Ball", &zc}}));
    }
  }
  return r;
}

inline SuiteReport verlinde_suite() {
  SuiteReport r{"verlinde", {}};
  const auto record = [&](const std::string& name, const VerlindeReport& v) {
    r.add(name, v.equal, {{"dim", v.dim}, {"z", v.z.str()}, {"route", v.route}});
  };
  for (const std::string gn : {"Z/2", "Z/3", "Z/4", "S3", "Q8"}) {
    const FiniteGroup g = preset_group(gn);
    const int max_p = gn.starts_with("Z/") ? g.order() * g.order() - 1 : 0;
    for (const auto& [wn, w] : cocycles_for(gn, g, max_p)) record("T2 " + gn + " " + wn, verlinde_check(1, g, w));
  }
  for (const std::string& gn : preset_group_names()) {
    const FiniteGroup g = preset_group(gn);
    record("S2 " + gn + " trivial", verlinde_check(0, g, zero_cochain(3, g)));
  }
  const FiniteGroup z2 = preset_group("Z/2");
  const VerlindeReport s2 = verlinde_check(2, z2, zero_cochain(3, z2), true);
  r.add("genus 2 Z/2 trivial", s2.equal && s2.dim == 16, {{"dim", s2.dim}, {"z", s2.z.str()}, {"route", s2.route}});
  return r;
}

/// Matches each boundary circle of `a` with a circle of `b` of opposite direction.
inline EdgeMatching annulus_matching(const DeltaComplex2& a, const DeltaComplex2& b) {
  EdgeMatching m;
  const auto& ca = a.boundary_circles();
  const auto& cb = b.boundary_circles();
  std::vector<bool> used(cb.size(), false);
  for (const auto& circle : ca)
    for (std::size_t j = 0; j < cb.size(); ++j)
      if (!used[j] && cb[j].edges.size() == 1 && circle.edges.size() == 1 &&
          cb[j].directions[0] == -circle.directions[0]) {
        used[j] = true;
        m.push_back({circle.edges[0], cb[j].edges[0]});
        break;
      }
  return m;
}

/// Two random bundles over annuli that glue to a torus.
template <class Rng>
std::pair<LineBundleConn, LineBundleConn> random_annulus_pair(Rng& rng, std::int64_t den = 12) {
  const DeltaComplex2 a = annulus_surface();
  const EdgeMatching m = annulus_matching(a, a);
  LineBundleConn first = random_bundle(a, rng, den);
  std::map<int, PhaseQ> fixed;
  for (const auto& [e1, e2] : m) fixed[e2] = first.holonomy[e1];
  return {first, random_bundle(a, rng, den, fixed)};
}

inline SuiteReport euler_suite(std::uint64_t seed, int instances = 100) {
  SuiteReport r{"euler", {}};
  std::mt19937_64 rng(seed);
  const DeltaComplex2 sphere = sphere_surface();
  for (int d = -2; d <= 2; ++d) {
    const LineBundleConn l = clutched_sphere(sphere, d);
    const BigInt e = euler_closed(l), er = euler_closed(reversed(l));
    r.add("clutched sphere d=" + std::to_string(d), e == d && er == -d, {{"euler", e.str()}, {"reversed", er.str()}});
  }

  // Difference law on random disks and annuli.
  bool diff_ok = true;
  Json diff_witness;
  for (int i = 0; i < instances && diff_ok; ++i) {
    const LineBundleConn l = random_bundle(i % 2 ? annulus_surface() : disk_surface(), rng, 12);
    const BoundaryTorsor t = boundary_torsor(l);
    std::vector<Rational> f = t.reference(), f2 = f;
    Rational shift(0);
    for (Rational& x : f2) {
      const std::int64_t k = static_cast<std::int64_t>(rng() % 7) - 3;
      x += k;
      shift += k;
    }
    const BigInt e1 = relative_euler_at(l, f), e2 = relative_euler_at(l, f2);
    if (Rational(e2 - e1) != -shift) {
      diff_ok = false;
      diff_witness = {{"instance", i}, {"e_ref", e1.str()}, {"e_shifted", e2.str()}, {"lift_shift", to_string(shift)}};
    }
  }
  r.add("difference law over " + std::to_string(instances) + " random lifts", diff_ok, diff_witness);

  bool glue_ok = true, reverse_ok = true, gauge_ok = true;
  Json glue_witness, reverse_witness, gauge_witness;
  const EdgeMatching m = annulus_matching(annulus_surface(), annulus_surface());
  for (int i = 0; i < instances; ++i) {
    const auto [a, b] = random_annulus_pair(rng);
    const EulerGlueReport rep = euler_glue(a, b, m);
    if (!rep.equal && glue_ok) {
      glue_ok = false;
      glue_witness = {{"instance", i}, {"glued", rep.glued.str()}, {"paired", rep.paired.str()}};
    }
    const LineBundleConn torus = glue_bundles(a, b, m);
    const BigInt e = euler_closed(torus), er = euler_closed(reversed(torus));
    if (er != -e && reverse_ok) {
      reverse_ok = false;
      reverse_witness = {{"instance", i}, {"euler", e.str()}, {"reversed", er.str()}};
    }
    const int edge = static_cast<int>(rng() % static_cast<std::uint64_t>(torus.base.num_edges()));
    const Rational delta = make_rational(static_cast<std::int64_t>(rng() % 25) - 12, 12);
    const BigInt eg = euler_closed(gauge_move(torus, edge, delta));
    // Interior moves on a piece keep its torsor element.
    int interior = -1;
    for (int k = 0; k < a.base.num_edges(); ++k)
      if (!a.base.is_boundary_edge(k)) interior = k;
    const ZTorsorElem ra = relative_euler(a), rg = relative_euler(gauge_move(a, interior, delta));
    if ((eg != e || rg.offset != ra.offset || !(rg.torsor == ra.torsor)) && gauge_ok) {
      gauge_ok = false;
      gauge_witness = {{"instance", i}, {"edge", edge}, {"delta", to_string(delta)}, {"euler", e.str()}, {"moved", eg.str()}};
    }
  }
  r.add("gluing law over " + std::to_string(instances) + " random annulus pairs", glue_ok, glue_witness);
  r.add("orientation reversal negates e", reverse_ok, reverse_witness);
  r.add("gauge moves preserve e", gauge_ok, gauge_witness);
  return r;
}

inline std::vector<std::string> suite_names() { return {"gluing", "coboundary", "triangulation", "verlinde", "euler"}; }

inline std::vector<SuiteReport> run(const std::string& suite, std::uint64_t seed) {
  if (suite == "all") {
    std::vector<SuiteReport> out;
    for (const std::string& s : suite_names()) out.push_back(run(s, seed).front());
    return out;
  }
  if (suite == "gluing") return {gluing_suite()};
  if (suite == "coboundary") return {coboundary_suite(seed)};
  if (suite == "triangulation") return {triangulation_suite()};
  if (suite == "verlinde") return {verlinde_suite()};
  if (suite == "euler") return {euler_suite(seed)};
  throw Error(Errc::UnknownName, "suite '" + suite + "'");
}

}  // namespace tqft::verify
