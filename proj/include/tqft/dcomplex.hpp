#pragma once

// Oriented Delta-complexes with order-respecting face identifications.
//
// Every simplex carries its vertex order v0 < v1 < ... and a gluing always
// sends the i-th vertex of one face to the i-th vertex of the other. Edge
// classes therefore inherit a well-defined direction, which the state sum
// relies on.

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tqft/errors.hpp"

namespace tqft {

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

/// Class ids numbered by lowest representative index.
inline std::vector<int> number_classes(UnionFind& uf, std::size_t n, int& count) {
  std::vector<int> id(n, -1), root_id(n, -1);
  count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = uf.find(i);
    if (root_id[r] < 0) root_id[r] = count++;
    id[i] = root_id[r];
  }
  return id;
}

}  // namespace detail

/// Vertices of face f (the face opposite vertex f), ascending.
inline constexpr std::array<std::array<int, 3>, 4> kTetFaceVertices{{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
/// Edge index -> endpoints: 01, 02, 03, 12, 13, 23.
inline constexpr std::array<std::array<int, 2>, 6> kTetEdgeVertices{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline constexpr int tet_edge_index(int i, int j) {
  if (i > j) std::swap(i, j);
  constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return table[i][j];
}

inline constexpr int face_parity(int f) { return f % 2 == 0 ? 1 : -1; }

struct FaceRef {
  int tet = 0;
  int face = 0;
  friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

struct Gluing {
  int tet = 0;
  int face = 0;
  int other_tet = 0;
  int other_face = 0;
  /// Images in other_tet of the ascending vertices of `face`.
  std::array<int, 3> vertices{};
};

struct GluingTable {
  int num_tets = 0;
  std::vector<Gluing> gluings;
  /// Optional per-tetrahedron orientation signs; derived when absent.
  std::optional<std::vector<int>> orientation;
};

class DeltaComplex3 {
 public:
  struct EdgeInfo {
    int src = 0;  // vertex classes, src -> dst
    int dst = 0;
    int rep_tet = 0;
    int rep_edge = 0;
    bool boundary = false;
  };
  struct TriangleInfo {
    FaceRef rep;
    std::optional<FaceRef> other;
    std::array<int, 3> edges{};  // edge classes at positions 01, 12, 02
  };

  DeltaComplex3() = default;

  static DeltaComplex3 from_gluings(const GluingTable& table) {
    DeltaComplex3 x;
    const int n = table.num_tets;
    if (n < 0) throw Error(Errc::DanglingFace, "negative tetrahedron count");
    x.partner_.assign(static_cast<std::size_t>(n) * 4, std::nullopt);
    for (const Gluing& g : table.gluings) {
      const auto in_range = [n](int t, int f) { return t >= 0 && t < n && f >= 0 && f < 4; };
      if (!in_range(g.tet, g.face) || !in_range(g.other_tet, g.other_face))
        throw Error(Errc::DanglingFace, "gluing " + describe(g));
      for (int v : g.vertices)
        if (v < 0 || v > 3) throw Error(Errc::DanglingFace, "vertex index in gluing " + describe(g));
      if (g.vertices != kTetFaceVertices[g.other_face])
        throw Error(Errc::NotOrderRespecting, "gluing " + describe(g));
      const FaceRef a{g.tet, g.face}, b{g.other_tet, g.other_face};
      if (a == b) throw Error(Errc::NotInvolution, "face glued to itself: " + describe(g));
      auto& pa = x.partner_[slot(a)];
      auto& pb = x.partner_[slot(b)];
      if ((pa && *pa != b) || (pb && *pb != a))
        throw Error(Errc::NotInvolution, "face glued twice: " + describe(g));
      pa = b;
      pb = a;
    }
    x.sign_ = x.derive_orientation(table.orientation);
    x.derive_classes();
    return x;
  }

  int num_tets() const { return static_cast<int>(sign_.size()); }
  int sign(int tet) const { return sign_[tet]; }
  const std::vector<int>& signs() const { return sign_; }
  std::optional<FaceRef> partner(FaceRef f) const { return partner_[slot(f)]; }
  bool is_boundary_face(FaceRef f) const { return !partner_[slot(f)].has_value(); }

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }

  int vertex_class(int tet, int v) const { return vertex_of_[tet * 4 + v]; }
  int edge_class(int tet, int e) const { return edge_of_[tet * 6 + e]; }
  int triangle_class(int tet, int f) const { return triangle_of_[tet * 4 + f]; }
  /// Edge classes of face f at positions 01, 12, 02 of its ascending vertices.
  std::array<int, 3> face_edges(FaceRef f) const {
    const auto& v = kTetFaceVertices[f.face];
    return {edge_class(f.tet, tet_edge_index(v[0], v[1])), edge_class(f.tet, tet_edge_index(v[1], v[2])),
            edge_class(f.tet, tet_edge_index(v[0], v[2]))};
  }
  std::array<int, 3> face_vertex_classes(FaceRef f) const {
    const auto& v = kTetFaceVertices[f.face];
    return {vertex_class(f.tet, v[0]), vertex_class(f.tet, v[1]), vertex_class(f.tet, v[2])};
  }

  const EdgeInfo& edge(int e) const { return edges_[e]; }
  const TriangleInfo& triangle(int t) const { return triangles_[t]; }
  bool vertex_on_boundary(int v) const { return vertex_boundary_[v]; }
  int num_interior_vertices() const {
    return static_cast<int>(std::count(vertex_boundary_.begin(), vertex_boundary_.end(), false));
  }
  int num_boundary_faces() const {
    return static_cast<int>(std::count(partner_.begin(), partner_.end(), std::nullopt));
  }
  bool is_closed() const { return num_boundary_faces() == 0; }
  std::vector<FaceRef> boundary_faces() const {
    std::vector<FaceRef> out;
    for (int t = 0; t < num_tets(); ++t)
      for (int f = 0; f < 4; ++f)
        if (is_boundary_face({t, f})) out.push_back({t, f});
    return out;
  }

  int euler_characteristic() const { return num_vertices() - num_edges() + num_triangles() - num_tets(); }

  /// Canonical table: each interior pair once, lower face first, with orientation.
  GluingTable gluing_table() const {
    GluingTable t;
    t.num_tets = num_tets();
    for (int tet = 0; tet < num_tets(); ++tet)
      for (int f = 0; f < 4; ++f) {
        const auto p = partner({tet, f});
        if (p && FaceRef{tet, f} < *p) t.gluings.push_back({tet, f, p->tet, p->face, kTetFaceVertices[p->face]});
      }
    t.orientation = sign_;
    return t;
  }

  /// The same complex with the opposite orientation.
  DeltaComplex3 mirrored() const {
    DeltaComplex3 m = *this;
    for (int& s : m.sign_) s = -s;
    return m;
  }

 private:
  static std::size_t slot(FaceRef f) { return static_cast<std::size_t>(f.tet) * 4 + f.face; }
  static std::string describe(const Gluing& g) {
    return "(" + std::to_string(g.tet) + "," + std::to_string(g.face) + ")<->(" + std::to_string(g.other_tet) +
           "," + std::to_string(g.other_face) + ")";
  }

  // Interior gluings must reverse the induced orientation of the shared face.
  std::vector<int> derive_orientation(const std::optional<std::vector<int>>& given) const {
    const int n = static_cast<int>(partner_.size() / 4);
    const auto required = [](int f, int s, const FaceRef& p) { return -s * face_parity(f) * face_parity(p.face); };
    if (given) {
      if (static_cast<int>(given->size()) != n) throw Error(Errc::BadInput, "orientation length mismatch");
      for (int t = 0; t < n; ++t) {
        const int s = (*given)[t];
        if (s != 1 && s != -1) throw Error(Errc::BadInput, "orientation signs must be +1 or -1");
        for (int f = 0; f < 4; ++f)
          if (const auto p = partner_[t * 4 + f]; p && (*given)[p->tet] != required(f, s, *p))
            throw Error(Errc::NonOrientable,
                        "given orientation not reversed across (" + std::to_string(t) + "," + std::to_string(f) + ")");
      }
      return *given;
    }
    std::vector<int> sign(n, 0);
    for (int start = 0; start < n; ++start) {
      if (sign[start] != 0) continue;
      sign[start] = 1;
      std::vector<int> stack{start};
      while (!stack.empty()) {
        const int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
          const auto p = partner_[t * 4 + f];
          if (!p) continue;
          const int want = required(f, sign[t], *p);
          if (sign[p->tet] == 0) {
            sign[p->tet] = want;
            stack.push_back(p->tet);
          } else if (sign[p->tet] != want) {
            throw Error(Errc::NonOrientable, "conflict across (" + std::to_string(t) + "," + std::to_string(f) + ")");
          }
        }
      }
    }
    return sign;
  }

  void derive_classes() {
    const int n = num_tets();
    detail::UnionFind vuf(static_cast<std::size_t>(n) * 4), euf(static_cast<std::size_t>(n) * 6);
    for (int t = 0; t < n; ++t)
      for (int f = 0; f < 4; ++f) {
        const auto p = partner_[t * 4 + f];
        if (!p) continue;
        const auto& a = kTetFaceVertices[f];
        const auto& b = kTetFaceVertices[p->face];
        for (int i = 0; i < 3; ++i) vuf.unite(t * 4 + a[i], p->tet * 4 + b[i]);
        for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}})
          euf.unite(t * 6 + tet_edge_index(a[i], a[j]), p->tet * 6 + tet_edge_index(b[i], b[j]));
      }
    int num_edges = 0;
    vertex_of_ = detail::number_classes(vuf, static_cast<std::size_t>(n) * 4, num_vertices_);
    edge_of_ = detail::number_classes(euf, static_cast<std::size_t>(n) * 6, num_edges);

    edges_.assign(num_edges, EdgeInfo{});
    std::vector<bool> seen(num_edges, false);
    for (int t = 0; t < n; ++t)
      for (int e = 0; e < 6; ++e) {
        const int c = edge_of_[t * 6 + e];
        if (seen[c]) continue;
        seen[c] = true;
        edges_[c] = {vertex_class(t, kTetEdgeVertices[e][0]), vertex_class(t, kTetEdgeVertices[e][1]), t, e, false};
      }

    triangle_of_.assign(static_cast<std::size_t>(n) * 4, -1);
    triangles_.clear();
    vertex_boundary_.assign(num_vertices_, false);
    for (int t = 0; t < n; ++t)
      for (int f = 0; f < 4; ++f) {
        if (triangle_of_[t * 4 + f] >= 0) continue;
        const int id = static_cast<int>(triangles_.size());
        TriangleInfo info{{t, f}, partner_[t * 4 + f], face_edges({t, f})};
        triangle_of_[t * 4 + f] = id;
        if (info.other) {
          triangle_of_[slot(*info.other)] = id;
        } else {
          for (int e : info.edges) edges_[e].boundary = true;
          for (int v : face_vertex_classes({t, f})) vertex_boundary_[v] = true;
        }
        triangles_.push_back(info);
      }
  }

  std::vector<std::optional<FaceRef>> partner_;
  std::vector<int> sign_;
  int num_vertices_ = 0;
  std::vector<int> vertex_of_, edge_of_, triangle_of_;
  std::vector<EdgeInfo> edges_;
  std::vector<TriangleInfo> triangles_;
  std::vector<bool> vertex_boundary_;
};

/// Tetrahedra of `b` are renumbered after those of `a`.
inline DeltaComplex3 disjoint_union(const DeltaComplex3& a, const DeltaComplex3& b) {
  GluingTable t = a.gluing_table();
  const int shift = a.num_tets();
  for (Gluing g : b.gluing_table().gluings) {
    g.tet += shift;
    g.other_tet += shift;
    t.gluings.push_back(g);
  }
  t.num_tets = a.num_tets() + b.num_tets();
  t.orientation->insert(t.orientation->end(), b.signs().begin(), b.signs().end());
  return DeltaComplex3::from_gluings(t);
}

using FaceMatching = std::vector<std::pair<FaceRef, FaceRef>>;

/// Glues pairs of boundary faces of a single complex. Each pair must reverse
/// the induced orientation, and the induced map on edge and vertex classes
/// must be a bijection between the two sides.
inline DeltaComplex3 glue_self(const DeltaComplex3& x, const FaceMatching& matching) {
  std::set<FaceRef> used;
  std::map<int, int> edge_map, edge_inv, vertex_map, vertex_inv;
  const auto bind = [](std::map<int, int>& fwd, std::map<int, int>& back, int a, int b) {
    const auto [it, fresh] = fwd.emplace(a, b);
    const auto [jt, fresh2] = back.emplace(b, a);
    return it->second == b && jt->second == a;
  };
  GluingTable t = x.gluing_table();
  for (const auto& [a, b] : matching) {
    for (const FaceRef& f : {a, b}) {
      if (f.tet < 0 || f.tet >= x.num_tets() || f.face < 0 || f.face > 3)
        throw Error(Errc::IncompatibleMatching, "face out of range");
      if (!x.is_boundary_face(f)) throw Error(Errc::IncompatibleMatching, "matched face is not on the boundary");
      if (!used.insert(f).second) throw Error(Errc::IncompatibleMatching, "face matched twice");
    }
    if (x.sign(a.tet) * face_parity(a.face) != -x.sign(b.tet) * face_parity(b.face))
      throw Error(Errc::OrientationClash, "matching preserves orientation at tet " + std::to_string(a.tet) +
                                              " face " + std::to_string(a.face));
    const auto ea = x.face_edges(a), eb = x.face_edges(b);
    const auto va = x.face_vertex_classes(a), vb = x.face_vertex_classes(b);
    for (int i = 0; i < 3; ++i)
      if (!bind(edge_map, edge_inv, ea[i], eb[i]) || !bind(vertex_map, vertex_inv, va[i], vb[i]))
        throw Error(Errc::IncompatibleMatching, "matching is inconsistent on shared edges or vertices");
    t.gluings.push_back({a.tet, a.face, b.tet, b.face, kTetFaceVertices[b.face]});
  }
  return DeltaComplex3::from_gluings(t);
}

/// X1 and X2 glued along matched boundary faces (faces of X2 use X2's own numbering).
inline DeltaComplex3 glue_along_boundary(const DeltaComplex3& x1, const DeltaComplex3& x2, const FaceMatching& matching) {
  FaceMatching shifted;
  for (const auto& [a, b] : matching) shifted.push_back({a, {b.tet + x1.num_tets(), b.face}});
  return glue_self(disjoint_union(x1, x2), shifted);
}

struct CutResult {
  DeltaComplex3 complex;
  FaceMatching matching;  // regluing these pairs restores the original
};

/// Cuts along a closed surface made of interior triangle classes.
inline CutResult cut_along(const DeltaComplex3& x, const std::vector<int>& triangle_classes) {
  std::set<int> chosen(triangle_classes.begin(), triangle_classes.end());
  std::map<int, int> edge_use;
  for (int c : chosen) {
    if (c < 0 || c >= x.num_triangles()) throw Error(Errc::NotASurface, "triangle class out of range");
    const auto& tri = x.triangle(c);
    if (!tri.other) throw Error(Errc::NotASurface, "triangle class " + std::to_string(c) + " is on the boundary");
    for (int e : tri.edges) ++edge_use[e];
  }
  for (const auto& [e, count] : edge_use)
    if (count != 2)
      throw Error(Errc::NotASurface, "edge class " + std::to_string(e) + " meets " + std::to_string(count) +
                                         " triangles of the surface");
  GluingTable t;
  t.num_tets = x.num_tets();
  t.orientation = x.signs();
  CutResult r;
  for (const Gluing& g : x.gluing_table().gluings) {
    if (chosen.count(x.triangle_class(g.tet, g.face)))
      r.matching.push_back({{g.tet, g.face}, {g.other_tet, g.other_face}});
    else
      t.gluings.push_back(g);
  }
  r.complex = DeltaComplex3::from_gluings(t);
  return r;
}

// ---------------------------------------------------------------------------
// Surfaces

inline constexpr std::array<std::array<int, 2>, 3> kTriFaceVertices{{{1, 2}, {0, 2}, {0, 1}}};

struct Gluing2 {
  int tri = 0;
  int edge = 0;  // face opposite vertex `edge`
  int other_tri = 0;
  int other_edge = 0;
};

struct GluingTable2 {
  int num_triangles = 0;
  std::vector<Gluing2> gluings;
  std::optional<std::vector<int>> orientation;
};

struct EdgeRef {
  int tri = 0;
  int edge = 0;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

class DeltaComplex2 {
 public:
  struct EdgeInfo {
    int src = 0;
    int dst = 0;
    EdgeRef rep;
    std::optional<EdgeRef> other;
  };
  /// A boundary circle traversed in its induced orientation.
  struct Circle {
    std::vector<int> edges;
    std::vector<int> directions;  // +1 when traversed src -> dst
  };

  DeltaComplex2() = default;

  static DeltaComplex2 from_gluings(const GluingTable2& table) {
    DeltaComplex2 s;
    const int n = table.num_triangles;
    if (n < 0) throw Error(Errc::DanglingFace, "negative triangle count");
    s.partner_.assign(static_cast<std::size_t>(n) * 3, std::nullopt);
    for (const Gluing2& g : table.gluings) {
      const auto ok = [n](int t, int e) { return t >= 0 && t < n && e >= 0 && e < 3; };
      if (!ok(g.tri, g.edge) || !ok(g.other_tri, g.other_edge))
        throw Error(Errc::DanglingFace, "edge gluing out of range");
      const EdgeRef a{g.tri, g.edge}, b{g.other_tri, g.other_edge};
      if (a == b) throw Error(Errc::NotInvolution, "edge glued to itself");
      auto& pa = s.partner_[a.tri * 3 + a.edge];
      auto& pb = s.partner_[b.tri * 3 + b.edge];
      if ((pa && *pa != b) || (pb && *pb != a)) throw Error(Errc::NotInvolution, "edge glued twice");
      pa = b;
      pb = a;
    }
    s.derive(table.orientation);
    return s;
  }

  int num_triangles() const { return static_cast<int>(sign_.size()); }
  int sign(int tri) const { return sign_[tri]; }
  const std::vector<int>& signs() const { return sign_; }
  std::optional<EdgeRef> partner(EdgeRef e) const { return partner_[e.tri * 3 + e.edge]; }
  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int vertex_class(int tri, int v) const { return vertex_of_[tri * 3 + v]; }
  int edge_class(int tri, int e) const { return edge_of_[tri * 3 + e]; }
  const EdgeInfo& edge(int e) const { return edges_[e]; }
  bool is_boundary_edge(int e) const { return !edges_[e].other.has_value(); }
  bool is_closed() const { return circles_.empty(); }
  const std::vector<Circle>& boundary_circles() const { return circles_; }
  int euler_characteristic() const { return num_vertices() - num_edges() + num_triangles(); }
  /// Edge classes at positions 01, 12, 02.
  std::array<int, 3> triangle_edges(int tri) const {
    return {edge_class(tri, 2), edge_class(tri, 0), edge_class(tri, 1)};
  }
  int num_components() const {
    detail::UnionFind uf(sign_.size());
    for (int t = 0; t < num_triangles(); ++t)
      for (int e = 0; e < 3; ++e)
        if (auto p = partner({t, e})) uf.unite(t, p->tri);
    int count = 0;
    detail::number_classes(uf, sign_.size(), count);
    return count;
  }

  GluingTable2 gluing_table() const {
    GluingTable2 t;
    t.num_triangles = num_triangles();
    for (int tri = 0; tri < num_triangles(); ++tri)
      for (int e = 0; e < 3; ++e)
        if (auto p = partner({tri, e}); p && EdgeRef{tri, e} < *p) t.gluings.push_back({tri, e, p->tri, p->edge});
    t.orientation = sign_;
    return t;
  }

  DeltaComplex2 mirrored() const {
    GluingTable2 t = gluing_table();
    for (int& s : *t.orientation) s = -s;
    return from_gluings(t);
  }

 private:
  void derive(const std::optional<std::vector<int>>& given) {
    const int n = static_cast<int>(partner_.size() / 3);
    const auto required = [](int s, int e, const EdgeRef& p) { return -s * face_parity(e) * face_parity(p.edge); };
    if (given) {
      if (static_cast<int>(given->size()) != n) throw Error(Errc::BadInput, "orientation length mismatch");
      sign_ = *given;
      for (int t = 0; t < n; ++t) {
        if (sign_[t] != 1 && sign_[t] != -1) throw Error(Errc::BadInput, "orientation signs must be +1 or -1");
        for (int e = 0; e < 3; ++e)
          if (auto p = partner_[t * 3 + e]; p && sign_[p->tri] != required(sign_[t], e, *p))
            throw Error(Errc::NonOrientable, "given orientation not reversed across triangle " + std::to_string(t));
      }
    } else {
      sign_.assign(n, 0);
      for (int start = 0; start < n; ++start) {
        if (sign_[start] != 0) continue;
        sign_[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
          const int t = stack.back();
          stack.pop_back();
          for (int e = 0; e < 3; ++e) {
            const auto p = partner_[t * 3 + e];
            if (!p) continue;
            const int want = required(sign_[t], e, *p);
            if (sign_[p->tri] == 0) {
              sign_[p->tri] = want;
              stack.push_back(p->tri);
            } else if (sign_[p->tri] != want) {
              throw Error(Errc::NonOrientable, "conflict across triangle " + std::to_string(t));
            }
          }
        }
      }
    }

    detail::UnionFind vuf(static_cast<std::size_t>(n) * 3), euf(static_cast<std::size_t>(n) * 3);
    for (int t = 0; t < n; ++t)
      for (int e = 0; e < 3; ++e) {
        const auto p = partner_[t * 3 + e];
        if (!p) continue;
        euf.unite(t * 3 + e, p->tri * 3 + p->edge);
        for (int i = 0; i < 2; ++i) vuf.unite(t * 3 + kTriFaceVertices[e][i], p->tri * 3 + kTriFaceVertices[p->edge][i]);
      }
    int num_edges = 0;
    vertex_of_ = detail::number_classes(vuf, static_cast<std::size_t>(n) * 3, num_vertices_);
    edge_of_ = detail::number_classes(euf, static_cast<std::size_t>(n) * 3, num_edges);
    edges_.assign(num_edges, EdgeInfo{});
    std::vector<bool> seen(num_edges, false);
    for (int t = 0; t < n; ++t)
      for (int e = 0; e < 3; ++e) {
        const int c = edge_of_[t * 3 + e];
        if (seen[c]) continue;
        seen[c] = true;
        edges_[c] = {vertex_class(t, kTriFaceVertices[e][0]), vertex_class(t, kTriFaceVertices[e][1]), {t, e},
                     partner_[t * 3 + e]};
      }

    // Boundary circles: each boundary vertex has one outgoing boundary edge.
    std::map<int, std::pair<int, int>> outgoing;  // vertex -> (edge, direction)
    for (int c = 0; c < num_edges; ++c) {
      if (edges_[c].other) continue;
      const EdgeRef r = edges_[c].rep;
      const int dir = sign_[r.tri] * face_parity(r.edge);
      const int from = dir > 0 ? edges_[c].src : edges_[c].dst;
      if (!outgoing.emplace(from, std::pair{c, dir}).second)
        throw Error(Errc::NotASurface, "boundary is not a disjoint union of circles at vertex " + std::to_string(from));
    }
    std::vector<bool> used(num_edges, false);
    circles_.clear();
    for (int c = 0; c < num_edges; ++c) {
      if (edges_[c].other || used[c]) continue;
      Circle circle;
      int cur = c;
      int dir = sign_[edges_[c].rep.tri] * face_parity(edges_[c].rep.edge);
      while (!used[cur]) {
        used[cur] = true;
        circle.edges.push_back(cur);
        circle.directions.push_back(dir);
        const int to = dir > 0 ? edges_[cur].dst : edges_[cur].src;
        const auto it = outgoing.find(to);
        if (it == outgoing.end()) throw Error(Errc::NotASurface, "open boundary path");
        std::tie(cur, dir) = it->second;
      }
      if (cur != c) throw Error(Errc::NotASurface, "boundary edges do not close up");
      circles_.push_back(std::move(circle));
    }
  }

  std::vector<std::optional<EdgeRef>> partner_;
  std::vector<int> sign_;
  int num_vertices_ = 0;
  std::vector<int> vertex_of_, edge_of_;
  std::vector<EdgeInfo> edges_;
  std::vector<Circle> circles_;
};

/// A complex together with a global orientation flag, used to form -Y.
template <class Complex>
struct Oriented {
  Complex complex;
  int orientation = 1;

  Oriented flipped() const { return {complex, -orientation}; }
  Complex resolve() const { return orientation > 0 ? complex : complex.mirrored(); }
};

/// The boundary of a 3-complex with the orientation induced by the outward normal.
struct BoundarySurface {
  DeltaComplex2 surface;
  std::vector<FaceRef> faces;           // triangle i of `surface` is faces[i]
  std::vector<int> edge_to_complex;     // surface edge class -> complex edge class
  std::vector<int> vertex_to_complex;   // surface vertex class -> complex vertex class
};

inline BoundarySurface boundary_surface(const DeltaComplex3& x) {
  BoundarySurface b;
  b.faces = x.boundary_faces();
  const int n = static_cast<int>(b.faces.size());
  GluingTable2 t;
  t.num_triangles = n;
  std::vector<int> sign(n);
  // Pair the triangle sides by their edge class in X; a manifold boundary
  // edge carries exactly two of them.
  std::map<int, std::vector<EdgeRef>> by_class;
  for (int i = 0; i < n; ++i) {
    const FaceRef f = b.faces[i];
    sign[i] = x.sign(f.tet) * face_parity(f.face);
    const auto edges = x.face_edges(f);  // positions 01, 12, 02
    by_class[edges[0]].push_back({i, 2});
    by_class[edges[1]].push_back({i, 0});
    by_class[edges[2]].push_back({i, 1});
  }
  for (const auto& [cls, sides] : by_class) {
    if (sides.size() != 2)
      throw Error(Errc::NotASurface, "boundary edge class " + std::to_string(cls) + " has " +
                                         std::to_string(sides.size()) + " sides");
    t.gluings.push_back({sides[0].tri, sides[0].edge, sides[1].tri, sides[1].edge});
  }
  t.orientation = sign;
  b.surface = DeltaComplex2::from_gluings(t);
  b.edge_to_complex.assign(b.surface.num_edges(), -1);
  b.vertex_to_complex.assign(b.surface.num_vertices(), -1);
  for (int i = 0; i < n; ++i) {
    const auto edges = x.face_edges(b.faces[i]);
    const auto verts = x.face_vertex_classes(b.faces[i]);
    b.edge_to_complex[b.surface.edge_class(i, 2)] = edges[0];
    b.edge_to_complex[b.surface.edge_class(i, 0)] = edges[1];
    b.edge_to_complex[b.surface.edge_class(i, 1)] = edges[2];
    for (int v = 0; v < 3; ++v) b.vertex_to_complex[b.surface.vertex_class(i, v)] = verts[v];
  }
  return b;
}

}  // namespace tqft
