#pragma once

// JSON readers and writers for groups, cocycles, triangulations, bundles
// and results.

#include <complex>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tqft/cochains.hpp"
#include "tqft/dcomplex.hpp"
#include "tqft/errors.hpp"
#include "tqft/euler.hpp"
#include "tqft/groups.hpp"
#include "tqft/phase.hpp"
#include "tqft/presets.hpp"

namespace tqft::io {

using Json = nlohmann::json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadInput, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::BadInput, path + ": " + e.what());
  }
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::BadInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw Error(Errc::BadInput, std::string("field '") + key + "': " + e.what());
  }
}

// Groups: {"name": str?, "order": n, "table": [[int]]}

inline FiniteGroup group_from_json(const Json& j) {
  const auto table = field<std::vector<std::vector<int>>>(j, "table");
  if (field<int>(j, "order") != static_cast<int>(table.size())) throw Error(Errc::BadInput, "order does not match table");
  return FiniteGroup::from_table(table, j.value("name", std::string()));
}

inline Json group_to_json(const FiniteGroup& g) {
  Json j{{"order", g.order()}, {"table", g.table()}};
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

/// A preset name or a path to a group file.
inline FiniteGroup load_group(const std::string& source) {
  if (source.ends_with(".json")) return group_from_json(read_json_file(source));
  return preset_group(source);
}

// Cocycles: {"group": name-or-inline, "arity": 3, "entries": [[a,b,c,"p/q"], ...]}
// or {"cyclic": {"n": n, "p": p}}.

inline Cochain cocycle_from_json(const Json& j, const FiniteGroup& g) {
  if (j.contains("cyclic")) {
    const int n = field<int>(j["cyclic"], "n");
    if (n != g.order() || !(g == cyclic_group(n))) throw Error(Errc::BadInput, "cyclic cocycle needs the group Z/" + std::to_string(n));
    return cyclic_cocycle(n, field<std::int64_t>(j["cyclic"], "p"));
  }
  if (j.contains("group")) {
    const Json& gj = j["group"];
    const FiniteGroup named = gj.is_string() ? preset_group(gj.get<std::string>()) : group_from_json(gj);
    if (!(named == g)) throw Error(Errc::BadInput, "cocycle file names a different group");
  }
  const int arity = field<int>(j, "arity");
  Cochain c(arity, g.order());
  for (const Json& e : field<Json>(j, "entries")) {
    if (!e.is_array() || static_cast<int>(e.size()) != arity + 1) throw Error(Errc::BadInput, "cocycle entry " + e.dump());
    std::vector<Element> args;
    for (int i = 0; i < arity; ++i) {
      const int a = e[i].get<int>();
      if (a < 0 || a >= g.order()) throw Error(Errc::BadInput, "cocycle entry " + e.dump());
      args.push_back(a);
    }
    c.set(args, PhaseQ::parse(e[arity].get<std::string>()));
  }
  return c;
}

inline Json cocycle_to_json(const Cochain& c) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < c.values().size(); ++i)
    if (!c.values()[i].is_zero()) {
      Json e = c.tuple(i);
      e.push_back(c.values()[i].str());
      entries.push_back(e);
    }
  return {{"arity", c.arity()}, {"entries", entries}};
}

/// "trivial", "cyclic:n:p" or a path to a cocycle file.
inline Cochain load_cocycle(const std::string& source, const FiniteGroup& g) {
  if (source == "trivial" || source == "0") return zero_cochain(3, g);
  if (source.starts_with("cyclic:")) {
    std::istringstream in(source.substr(7));
    int n = 0;
    long long p = 0;
    char sep = 0;
    if (!(in >> n >> sep >> p) || sep != ':' || !in.eof()) throw Error(Errc::BadInput, "expected cyclic:n:p, got '" + source + "'");
    return cocycle_from_json(Json{{"cyclic", {{"n", n}, {"p", p}}}}, g);
  }
  const Cochain c = cocycle_from_json(read_json_file(source), g);
  if (c.arity() != 3) throw Error(Errc::BadInput, "expected a 3-cochain");
  if (const CocycleCheck check = is_cocycle(c, g); !check.holds) {
    std::string w;
    for (Element x : check.witness) w += (w.empty() ? "" : ",") + std::to_string(x);
    throw Error(Errc::NotCocycle, "coboundary nonzero at (" + w + ")");
  }
  return c;
}

// Triangulations: {"tets": n, "gluings": [[t, f, t', f', [p0, p1, p2]], ...], "orientation": [...]?}

inline GluingTable gluing_table_from_json(const Json& j) {
  GluingTable t;
  t.num_tets = field<int>(j, "tets");
  for (const Json& g : field<Json>(j, "gluings")) {
    if (!g.is_array() || g.size() != 5 || !g[4].is_array() || g[4].size() != 3)
      throw Error(Errc::BadInput, "gluing entry " + g.dump());
    t.gluings.push_back({g[0].get<int>(), g[1].get<int>(), g[2].get<int>(), g[3].get<int>(),
                         {g[4][0].get<int>(), g[4][1].get<int>(), g[4][2].get<int>()}});
  }
  if (j.contains("orientation")) t.orientation = j["orientation"].get<std::vector<int>>();
  return t;
}

inline Json complex_to_json(const DeltaComplex3& x) {
  Json gl = Json::array();
  const GluingTable t = x.gluing_table();
  for (const Gluing& g : t.gluings) gl.push_back({g.tet, g.face, g.other_tet, g.other_face, g.vertices});
  return {{"tets", t.num_tets}, {"gluings", gl}, {"orientation", *t.orientation}};
}

/// A preset name or a path to a triangulation file.
inline Manifold load_manifold(const std::string& source) {
  if (source.ends_with(".json"))
    return {source, DeltaComplex3::from_gluings(gluing_table_from_json(read_json_file(source))), std::nullopt, std::nullopt, {}};
  return preset_manifold(source);
}

// Surfaces: preset name or {"triangles": n, "gluings": [[t, e, t', e'], ...], "orientation": [...]?}

inline DeltaComplex2 surface_from_json(const Json& j) {
  if (j.is_string()) return preset_surface(j.get<std::string>());
  GluingTable2 t;
  t.num_triangles = field<int>(j, "triangles");
  for (const Json& g : field<Json>(j, "gluings")) {
    if (!g.is_array() || g.size() != 4) throw Error(Errc::BadInput, "edge gluing entry " + g.dump());
    t.gluings.push_back({g[0].get<int>(), g[1].get<int>(), g[2].get<int>(), g[3].get<int>()});
  }
  if (j.contains("orientation")) t.orientation = j["orientation"].get<std::vector<int>>();
  return DeltaComplex2::from_gluings(t);
}

// Bundles: {"surface": ref, "F": {triangle: "p/q"}, "hol": {edge: "p/q"}}; omitted entries are 0.

inline LineBundleConn bundle_from_json(const Json& j) {
  if (!j.contains("surface")) throw Error(Errc::BadInput, "missing field 'surface'");
  DeltaComplex2 base = surface_from_json(j["surface"]);
  std::vector<Rational> f(base.num_triangles(), Rational(0));
  std::vector<PhaseQ> hol(base.num_edges());
  const auto index = [](const std::string& key, int size, const char* what) {
    std::size_t used = 0;
    int i = -1;
    try {
      i = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || i < 0 || i >= size) throw Error(Errc::BadInput, std::string(what) + " id '" + key + "'");
    return i;
  };
  if (j.contains("F"))
    for (const auto& [k, v] : j["F"].items()) f[index(k, base.num_triangles(), "triangle")] = parse_rational(v.get<std::string>());
  if (j.contains("hol"))
    for (const auto& [k, v] : j["hol"].items()) hol[index(k, base.num_edges(), "edge")] = PhaseQ::parse(v.get<std::string>());
  return make_line_bundle(std::move(base), std::move(f), std::move(hol));
}

// Results: {"exact": [["p/q", "a/b"], ...], "approx": [re, im]}

inline std::string fraction(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline Json phase_sum_to_json(const PhaseSum& s) {
  Json exact = Json::array();
  const PhaseSum r = s.reduced();
  for (const auto& [phase, coeff] : r.terms()) exact.push_back({fraction(coeff), phase.str()});
  const std::complex<double> z = s.to_complex();
  return {{"exact", exact}, {"approx", {z.real(), z.imag()}}, {"value", s.str()}};
}

inline Json coloring_to_json(const std::vector<Element>& c) {
  Json j = Json::object();
  for (std::size_t e = 0; e < c.size(); ++e) j[std::to_string(e)] = c[e];
  return j;
}

}  // namespace tqft::io
