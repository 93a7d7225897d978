#pragma once

// Named triangulations. Most are products of semi-simplicial factors
// (circle, interval, surfaces) triangulated by shuffles, which keeps every
// gluing order-respecting for free.

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tqft/dcomplex.hpp"
#include "tqft/errors.hpp"
#include "tqft/groups.hpp"

namespace tqft {

/// A closed edge path: (edge class, +1 along its direction or -1 against).
struct NamedLoop {
  std::string name;
  std::vector<std::pair<int, int>> path;
};

struct Manifold {
  std::string name;
  DeltaComplex3 complex;
  std::optional<Presentation> pi1;
  std::optional<std::vector<NamedLoop>> loops;  // absent for complexes loaded from files
  std::map<std::string, std::vector<int>> surfaces;  // named triangle-class sets
};

namespace product {

/// A semi-simplicial factor of dimension <= 2: cells[s][mask] is the cell id
/// of the face of simplex s spanned by the vertex positions in `mask`.
struct Factor {
  int dim = 0;
  std::vector<std::vector<int>> cells;
};

inline Factor loop() { return {1, {{-1, 0, 0, 0}}}; }
inline Factor interval() { return {1, {{-1, 0, 1, 0}}}; }

inline Factor from_surface(const DeltaComplex2& s) {
  Factor f{2, {}};
  for (int t = 0; t < s.num_triangles(); ++t) {
    std::vector<int> c(8, -1);
    for (int v = 0; v < 3; ++v) c[1 << v] = s.vertex_class(t, v);
    for (int e = 0; e < 3; ++e) c[7 & ~(1 << e)] = s.edge_class(t, e);
    c[7] = t;
    f.cells.push_back(c);
  }
  return f;
}

struct CellKey {
  int dim_a = 0, id_a = 0;
  std::vector<int> pattern_a;
  int dim_b = 0, id_b = 0;
  std::vector<int> pattern_b;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

struct Product {
  const Factor* a = nullptr;
  const Factor* b = nullptr;
  int dim = 0;
  std::vector<std::pair<int, int>> factor_simplex;            // (sigma, eta)
  std::vector<std::vector<std::pair<int, int>>> vertices;     // lattice path

  /// Key of the face of simplex `s` spanned by path positions `pos` (ascending).
  CellKey key(int s, const std::vector<int>& pos) const {
    const auto side = [&](const Factor& f, int simplex, bool first, int& dim, int& id, std::vector<int>& pattern) {
      std::vector<int> coords;
      for (int p : pos) coords.push_back(first ? vertices[s][p].first : vertices[s][p].second);
      std::vector<int> distinct = coords;
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      int mask = 0;
      for (int c : distinct) mask |= 1 << c;
      dim = static_cast<int>(distinct.size()) - 1;
      id = f.cells[simplex][mask];
      for (int c : coords)
        pattern.push_back(static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin()));
    };
    CellKey k;
    side(*a, factor_simplex[s].first, true, k.dim_a, k.id_a, k.pattern_a);
    side(*b, factor_simplex[s].second, false, k.dim_b, k.id_b, k.pattern_b);
    return k;
  }

  std::vector<int> face_positions(int face) const {
    std::vector<int> pos;
    for (int v = 0; v <= dim; ++v)
      if (v != face) pos.push_back(v);
    return pos;
  }

  /// Codimension-one faces grouped by key, in (simplex, face) order.
  std::map<CellKey, std::vector<std::pair<int, int>>> faces() const {
    std::map<CellKey, std::vector<std::pair<int, int>>> out;
    for (int s = 0; s < static_cast<int>(vertices.size()); ++s)
      for (int f = 0; f <= dim; ++f) out[key(s, face_positions(f))].push_back({s, f});
    for (const auto& [k, reps] : out)
      if (reps.size() > 2) throw Error(Errc::NotASurface, "product face shared by more than two simplices");
    return out;
  }

  std::pair<int, int> find_face(const CellKey& k) const {
    const auto all = faces();
    const auto it = all.find(k);
    if (it == all.end()) throw Error(Errc::BadInput, "no product face with the requested key");
    return it->second.front();
  }

  /// (simplex, position u, position w) of an edge with the given key.
  std::array<int, 3> find_edge(const CellKey& k) const {
    for (int s = 0; s < static_cast<int>(vertices.size()); ++s)
      for (int u = 0; u <= dim; ++u)
        for (int w = u + 1; w <= dim; ++w)
          if (key(s, {u, w}) == k) return {s, u, w};
    throw Error(Errc::BadInput, "no product edge with the requested key");
  }
};

inline Product make(const Factor& a, const Factor& b) {
  Product p;
  p.a = &a;
  p.b = &b;
  p.dim = a.dim + b.dim;
  const int steps = p.dim;
  for (int s = 0; s < static_cast<int>(a.cells.size()); ++s)
    for (int t = 0; t < static_cast<int>(b.cells.size()); ++t)
      // Bit k set: step k moves in the first factor. Descending masks list
      // first-factor-first paths before the others.
      for (int mask = (1 << steps) - 1; mask >= 0; --mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != a.dim) continue;
        std::vector<std::pair<int, int>> path{{0, 0}};
        for (int k = steps - 1; k >= 0; --k) {
          auto [i, j] = path.back();
          path.push_back((mask >> k) & 1 ? std::pair{i + 1, j} : std::pair{i, j + 1});
        }
        p.factor_simplex.push_back({s, t});
        p.vertices.push_back(path);
      }
  return p;
}

inline GluingTable table3(const Product& p) {
  if (p.dim != 3) throw Error(Errc::BadInput, "product is not 3-dimensional");
  GluingTable t;
  t.num_tets = static_cast<int>(p.vertices.size());
  for (const auto& [k, reps] : p.faces())
    if (reps.size() == 2)
      t.gluings.push_back({reps[0].first, reps[0].second, reps[1].first, reps[1].second,
                           kTetFaceVertices[reps[1].second]});
  return t;
}

inline GluingTable2 table2(const Product& p) {
  if (p.dim != 2) throw Error(Errc::BadInput, "product is not 2-dimensional");
  GluingTable2 t;
  t.num_triangles = static_cast<int>(p.vertices.size());
  for (const auto& [k, reps] : p.faces())
    if (reps.size() == 2) t.gluings.push_back({reps[0].first, reps[0].second, reps[1].first, reps[1].second});
  return t;
}

inline CellKey vertex_edge(int vertex_a, int edge_b) { return {0, vertex_a, {0, 0}, 1, edge_b, {0, 1}}; }
inline CellKey edge_vertex(int edge_a, int vertex_b) { return {1, edge_a, {0, 1}, 0, vertex_b, {0, 0}}; }
inline CellKey triangle_vertex(int tri_a, int vertex_b) { return {2, tri_a, {0, 1, 2}, 0, vertex_b, {0, 0, 0}}; }

inline int edge_class3(const Product& p, const DeltaComplex3& x, const CellKey& k) {
  const auto [s, u, w] = p.find_edge(k);
  return x.edge_class(s, tet_edge_index(u, w));
}
inline int edge_class2(const Product& p, const DeltaComplex2& x, const CellKey& k) {
  const auto [s, u, w] = p.find_edge(k);
  return x.edge_class(s, 3 - u - w);
}

}  // namespace product

// ---------------------------------------------------------------------------
// Surfaces

/// Two triangles glued along all three edges.
inline DeltaComplex2 sphere_surface() {
  return DeltaComplex2::from_gluings({2, {{0, 0, 1, 0}, {0, 1, 1, 1}, {0, 2, 1, 2}}, std::nullopt});
}

inline DeltaComplex2 disk_surface() { return DeltaComplex2::from_gluings({1, {}, std::nullopt}); }

/// One triangle [u0, u1, c] with [u0, c] glued to [u1, c]; its boundary is the loop [u0, u1].
inline DeltaComplex2 folded_disk_surface() { return DeltaComplex2::from_gluings({1, {{0, 1, 0, 0}}, std::nullopt}); }

inline DeltaComplex2 torus_surface() {
  static const product::Factor l = product::loop();
  return DeltaComplex2::from_gluings(product::table2(product::make(l, l)));
}

inline DeltaComplex2 annulus_surface() {
  static const product::Factor l = product::loop(), i = product::interval();
  return DeltaComplex2::from_gluings(product::table2(product::make(l, i)));
}

inline DeltaComplex2 preset_surface(const std::string& name) {
  if (name == "S2") return sphere_surface();
  if (name == "T2") return torus_surface();
  if (name == "Disk") return disk_surface();
  if (name == "Annulus") return annulus_surface();
  throw Error(Errc::UnknownName, "surface '" + name + "'");
}

// ---------------------------------------------------------------------------
// 3-manifolds

namespace detail {

inline Presentation commuting_presentation(int generators) {
  Presentation p{generators, {}};
  for (int i = 1; i <= generators; ++i)
    for (int j = i + 1; j <= generators; ++j) p.relators.push_back({i, j, -i, -j});
  return p;
}

inline Manifold ball() { return {"Ball", DeltaComplex3::from_gluings({1, {}, std::nullopt}), Presentation{0, {}}, std::vector<NamedLoop>{}, {}}; }

// One vertex class; found as the gluing pattern with trivial fundamental group.
inline Manifold s3_two_tets() {
  GluingTable t{2, {}, std::nullopt};
  for (auto [a, f, b, g] : {std::array{0, 0, 0, 1}, {0, 2, 1, 0}, {0, 3, 1, 1}, {1, 2, 1, 3}})
    t.gluings.push_back({a, f, b, g, kTetFaceVertices[g]});
  return {"S3_2tet", DeltaComplex3::from_gluings(t), Presentation{0, {}}, std::vector<NamedLoop>{}, {}};
}

inline Manifold s3_boundary_simplex() {
  std::vector<std::array<int, 4>> tets;
  for (int omit = 4; omit >= 0; --omit) {
    std::array<int, 4> v{};
    for (int i = 0, k = 0; i < 5; ++i)
      if (i != omit) v[k++] = i;
    tets.push_back(v);
  }
  std::map<std::array<int, 3>, std::vector<std::pair<int, int>>> by_face;
  for (int t = 0; t < 5; ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& fv = kTetFaceVertices[f];
      by_face[{tets[t][fv[0]], tets[t][fv[1]], tets[t][fv[2]]}].push_back({t, f});
    }
  GluingTable table{5, {}, std::nullopt};
  for (const auto& [face, reps] : by_face)
    table.gluings.push_back({reps[0].first, reps[0].second, reps[1].first, reps[1].second,
                             kTetFaceVertices[reps[1].second]});
  return {"S3_bd4simplex", DeltaComplex3::from_gluings(table), Presentation{0, {}}, std::vector<NamedLoop>{}, {}};
}

// Quotient of the join of two k-cycles by the diagonal rotation; tetrahedron
// d is [a0, a1, b_d, b_{d+1}].
inline Manifold lens_space(int k) {
  GluingTable t{k, {}, std::nullopt};
  for (int d = 0; d < k; ++d) {
    t.gluings.push_back({d, 0, (d + k - 1) % k, 1, kTetFaceVertices[1]});
    t.gluings.push_back({d, 2, (d + 1) % k, 3, kTetFaceVertices[3]});
  }
  Manifold m{"L(" + std::to_string(k) + ",1)", DeltaComplex3::from_gluings(t), Presentation{1, {std::vector<int>(k, 1)}},
             std::nullopt, {}};
  m.loops = std::vector<NamedLoop>{{"x", {{m.complex.edge_class(0, 0), 1}}}};
  return m;
}

inline Manifold s2_times_s1() {
  static const product::Factor s = product::from_surface(sphere_surface()), l = product::loop();
  const product::Product p = product::make(s, l);
  Manifold m{"S2xS1", DeltaComplex3::from_gluings(product::table3(p)), Presentation{1, {}}, std::nullopt, {}};
  m.loops = std::vector<NamedLoop>{{"t", {{product::edge_class3(p, m.complex, product::vertex_edge(0, 0)), 1}}}};
  return m;
}

struct TorusEdges {
  int x, y;
};
inline TorusEdges torus_edges() {
  static const product::Factor l = product::loop();
  const product::Product p = product::make(l, l);
  const DeltaComplex2 t = torus_surface();
  return {product::edge_class2(p, t, product::edge_vertex(0, 0)), product::edge_class2(p, t, product::vertex_edge(0, 0))};
}

inline Manifold torus_times(const std::string& name, const product::Factor& second, bool interval) {
  static const product::Factor t2 = product::from_surface(torus_surface());
  const product::Product p = product::make(t2, second);
  Manifold m{name, DeltaComplex3::from_gluings(product::table3(p)), std::nullopt, std::nullopt, {}};
  const TorusEdges te = torus_edges();
  std::vector<NamedLoop> loops{{"x", {{product::edge_class3(p, m.complex, product::edge_vertex(te.x, 0)), 1}}},
                               {"y", {{product::edge_class3(p, m.complex, product::edge_vertex(te.y, 0)), 1}}}};
  const auto torus_at = [&](int vertex) {
    std::vector<int> classes;
    for (int tri = 0; tri < 2; ++tri) {
      const auto [s, f] = p.find_face(product::triangle_vertex(tri, vertex));
      classes.push_back(m.complex.triangle_class(s, f));
    }
    return classes;
  };
  if (interval) {
    m.pi1 = commuting_presentation(2);
    m.surfaces["bottom"] = torus_at(0);
    m.surfaces["top"] = torus_at(1);
  } else {
    m.pi1 = commuting_presentation(3);
    loops.push_back({"z", {{product::edge_class3(p, m.complex, product::vertex_edge(0, 0)), 1}}});
    m.surfaces["torus_z"] = torus_at(0);
  }
  m.loops = loops;
  return m;
}

inline Manifold three_torus() {
  static const product::Factor l = product::loop();
  return torus_times("T3_6tet", l, false);
}

inline Manifold torus_times_interval() {
  static const product::Factor i = product::interval();
  return torus_times("T2xI", i, true);
}

inline const product::Factor& folded_disk_factor() {
  static const product::Factor d = product::from_surface(folded_disk_surface());
  return d;
}

inline Manifold solid_torus() {
  static const product::Factor l = product::loop();
  const product::Product p = product::make(folded_disk_factor(), l);
  Manifold m{"SolidTorus", DeltaComplex3::from_gluings(product::table3(p)), Presentation{1, {}}, std::nullopt, {}};
  const DeltaComplex2 d = folded_disk_surface();
  const int rim = d.edge_class(0, 2);
  m.loops = std::vector<NamedLoop>{
      {"longitude", {{product::edge_class3(p, m.complex, product::vertex_edge(d.vertex_class(0, 0), 0)), 1}}},
      {"meridian", {{product::edge_class3(p, m.complex, product::edge_vertex(rim, 0)), 1}}}};
  return m;
}

}  // namespace detail

/// Ball glued to its mirror image along the identity of the boundary sphere.
inline DeltaComplex3 ball_union_ball() {
  const DeltaComplex3 b = detail::ball().complex;
  FaceMatching m;
  for (int f = 0; f < 4; ++f) m.push_back({{0, f}, {0, f}});
  return glue_along_boundary(b, b.mirrored(), m);
}

struct GluingInstance {
  DeltaComplex3 first;
  DeltaComplex3 second;
  FaceMatching matching;
};

inline GluingInstance ball_pair() {
  const DeltaComplex3 b = detail::ball().complex;
  FaceMatching m;
  for (int f = 0; f < 4; ++f) m.push_back({{0, f}, {0, f}});
  return {b, b.mirrored(), m};
}

/// D x S^1 and S^1 x D glued so that each meridian meets the other's longitude.
inline GluingInstance solid_torus_pair() {
  static const product::Factor l = product::loop();
  const product::Factor& d = detail::folded_disk_factor();
  const product::Product p1 = product::make(d, l), p2 = product::make(l, d);
  GluingInstance g{DeltaComplex3::from_gluings(product::table3(p1)), DeltaComplex3::from_gluings(product::table3(p2)), {}};
  const DeltaComplex2 disk = folded_disk_surface();
  const int rim = disk.edge_class(0, 2), rim_vertex = disk.vertex_class(0, 0);
  // Rim cells of the disk factor correspond to the cells of the circle factor.
  const auto disk_to_loop = [&](int dim, int id) { return (dim == 0 && id == rim_vertex) || (dim == 1 && id == rim) ? 0 : -1; };
  const auto loop_to_disk = [&](int dim) { return dim == 0 ? rim_vertex : rim; };
  const auto faces2 = p2.faces();
  for (const auto& [key, reps] : p1.faces()) {
    if (reps.size() != 1) continue;
    product::CellKey k = key;
    k.id_a = disk_to_loop(key.dim_a, key.id_a);
    k.id_b = loop_to_disk(key.dim_b);
    const auto it = faces2.find(k);
    if (k.id_a < 0 || it == faces2.end() || it->second.size() != 1)
      throw Error(Errc::IncompatibleMatching, "solid torus boundary faces do not correspond");
    g.matching.push_back({{reps[0].first, reps[0].second}, {it->second[0].first, it->second[0].second}});
  }
  const auto [a, b] = g.matching.front();
  if (g.first.sign(a.tet) * face_parity(a.face) == g.second.sign(b.tet) * face_parity(b.face))
    g.second = g.second.mirrored();
  return g;
}

inline std::vector<std::string> preset_manifold_names() {
  std::vector<std::string> names{"Ball", "S3_2tet", "S3_bd4simplex", "S2xS1", "T3_6tet"};
  for (int k = 2; k <= 8; ++k) names.push_back("L(" + std::to_string(k) + ",1)");
  names.insert(names.end(), {"SolidTorus", "T2xI", "BallUnionBall"});
  return names;
}

inline Manifold preset_manifold(const std::string& name) {
  if (name == "Ball") return detail::ball();
  if (name == "S3_2tet") return detail::s3_two_tets();
  if (name == "S3_bd4simplex") return detail::s3_boundary_simplex();
  if (name == "S2xS1") return detail::s2_times_s1();
  if (name == "T3_6tet") return detail::three_torus();
  if (name == "SolidTorus") return detail::solid_torus();
  if (name == "T2xI") return detail::torus_times_interval();
  if (name == "BallUnionBall") return {name, ball_union_ball(), Presentation{0, {}}, std::vector<NamedLoop>{}, {}};
  if (name.size() == 6 && name.starts_with("L(") && name.ends_with(",1)")) {
    const char c = name[2];
    if (c >= '2' && c <= '8') return detail::lens_space(c - '0');
  }
  throw Error(Errc::UnknownName, "manifold '" + name + "'");
}

}  // namespace tqft
