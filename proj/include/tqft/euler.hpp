#pragma once

// Euler numbers of line bundles with connection over triangulated surfaces,
// in the discrete curvature/holonomy model: each triangle carries its
// integrated curvature F_t, each edge class a holonomy in Q/Z, and
// eps_t (h01 + h12 - h02) = F_t mod 1.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tqft/dcomplex.hpp"
#include "tqft/errors.hpp"
#include "tqft/phase.hpp"
#include "tqft/rational.hpp"

namespace tqft {

struct LineBundleConn {
  DeltaComplex2 base;
  std::vector<Rational> curvature;  // per triangle
  std::vector<PhaseQ> holonomy;     // per edge class, read src -> dst
};

inline PhaseQ boundary_holonomy(const DeltaComplex2& s, const std::vector<PhaseQ>& hol, int tri) {
  const auto [e01, e12, e02] = s.triangle_edges(tri);
  const PhaseQ h = hol[e01] + hol[e12] - hol[e02];
  return s.sign(tri) > 0 ? h : -h;
}

inline LineBundleConn make_line_bundle(DeltaComplex2 base, std::vector<Rational> curvature, std::vector<PhaseQ> holonomy) {
  if (static_cast<int>(curvature.size()) != base.num_triangles() || static_cast<int>(holonomy.size()) != base.num_edges())
    throw Error(Errc::BadInput, "curvature or holonomy table has the wrong size");
  for (int t = 0; t < base.num_triangles(); ++t)
    if (PhaseQ::from_rational(curvature[t]) != boundary_holonomy(base, holonomy, t))
      throw Error(Errc::IncompatibleBundle, "triangle " + std::to_string(t) + ": curvature " + to_string(curvature[t]) +
                                                " does not match boundary holonomy " +
                                                boundary_holonomy(base, holonomy, t).str());
  return {std::move(base), std::move(curvature), std::move(holonomy)};
}

inline Rational total_curvature(const LineBundleConn& l) {
  Rational s(0);
  for (const Rational& f : l.curvature) s += f;
  return s;
}

inline BigInt euler_closed(const LineBundleConn& l) {
  if (!l.base.is_closed()) throw Error(Errc::NotClosed, "base has boundary; use the relative Euler number");
  const Rational s = total_curvature(l);
  if (!is_integer(s)) throw Error(Errc::NonIntegerTotal, "total curvature " + to_string(s));
  return boost::multiprecision::numerator(s);
}

/// Holonomy around each boundary circle, in the order of boundary_circles().
struct BoundaryTorsor {
  std::vector<PhaseQ> holonomy;

  /// Least nonnegative lift per circle.
  std::vector<Rational> reference() const {
    std::vector<Rational> r;
    for (const PhaseQ& h : holonomy) r.push_back(h.value());
    return r;
  }
  bool is_lift(const std::vector<Rational>& f) const {
    if (f.size() != holonomy.size()) return false;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (PhaseQ::from_rational(f[i]) != holonomy[i]) return false;
    return true;
  }
  friend bool operator==(const BoundaryTorsor&, const BoundaryTorsor&) = default;
};

inline BoundaryTorsor boundary_torsor(const LineBundleConn& l) {
  BoundaryTorsor t;
  for (const DeltaComplex2::Circle& c : l.base.boundary_circles()) {
    PhaseQ h;
    for (std::size_t i = 0; i < c.edges.size(); ++i)
      h += c.directions[i] > 0 ? l.holonomy[c.edges[i]] : -l.holonomy[c.edges[i]];
    t.holonomy.push_back(h);
  }
  return t;
}

/// An element of the Z-torsor of lifts: the reference lift shifted by `offset`.
struct ZTorsorElem {
  BoundaryTorsor torsor;
  BigInt offset;
};

/// e(L, f) = sum F - sum f for a lift f of the boundary holonomies.
inline BigInt relative_euler_at(const LineBundleConn& l, const std::vector<Rational>& lift) {
  const BoundaryTorsor t = boundary_torsor(l);
  if (t.holonomy.empty()) throw Error(Errc::NotRelative, "base is closed; use euler_closed");
  if (!t.is_lift(lift)) throw Error(Errc::BadInput, "values are not lifts of the boundary holonomies");
  Rational s = total_curvature(l);
  for (const Rational& f : lift) s -= f;
  if (!is_integer(s)) throw Error(Errc::NonIntegerRelative, "sum F - sum f = " + to_string(s));
  return boost::multiprecision::numerator(s);
}

inline ZTorsorElem relative_euler(const LineBundleConn& l) {
  const BoundaryTorsor t = boundary_torsor(l);
  if (t.holonomy.empty()) throw Error(Errc::NotRelative, "base is closed; use euler_closed");
  return {t, relative_euler_at(l, t.reference())};
}

/// Pairs an element over Y with one over -Y (circles listed in matching order).
inline BigInt torsor_pair(const ZTorsorElem& a, const ZTorsorElem& b) {
  if (a.torsor.holonomy.size() != b.torsor.holonomy.size())
    throw Error(Errc::TorsorMismatch, "different numbers of boundary circles");
  for (std::size_t i = 0; i < a.torsor.holonomy.size(); ++i)
    if (b.torsor.holonomy[i] != -a.torsor.holonomy[i])
      throw Error(Errc::TorsorMismatch, "circle " + std::to_string(i) + " holonomies " + a.torsor.holonomy[i].str() +
                                            " and " + b.torsor.holonomy[i].str() + " are not opposite");
  Rational correction(0);
  const auto ra = a.torsor.reference(), rb = b.torsor.reference();
  for (std::size_t i = 0; i < ra.size(); ++i) correction += ra[i] + rb[i];
  return a.offset + b.offset + boost::multiprecision::numerator(correction);
}

/// The same bundle over the orientation-reversed base.
inline LineBundleConn reversed(const LineBundleConn& l) {
  LineBundleConn r{l.base.mirrored(), l.curvature, l.holonomy};
  for (Rational& f : r.curvature) f = -f;
  return r;
}

/// Shifts one edge holonomy by delta and compensates the adjacent curvatures.
inline LineBundleConn gauge_move(const LineBundleConn& l, int edge, const Rational& delta) {
  LineBundleConn r = l;
  r.holonomy[edge] += PhaseQ::from_rational(delta);
  for (int t = 0; t < l.base.num_triangles(); ++t) {
    const auto edges = l.base.triangle_edges(t);
    const int coeff[3] = {1, 1, -1};
    for (int i = 0; i < 3; ++i)
      if (edges[i] == edge) r.curvature[t] += l.base.sign(t) * coeff[i] * delta;
  }
  return r;
}

using EdgeMatching = std::vector<std::pair<int, int>>;  // boundary edge class of base 1 -> of base 2

struct EulerGlueReport {
  BigInt glued;   // euler_closed of the glued bundle
  BigInt paired;  // torsor_pair of the two relative Euler numbers
  bool equal = false;
};

/// Glues two bundles along matched boundary edges into a closed bundle.
inline LineBundleConn glue_bundles(const LineBundleConn& a, const LineBundleConn& b, const EdgeMatching& matching) {
  const DeltaComplex2 &s1 = a.base, &s2 = b.base;
  const int shift = s1.num_triangles();
  GluingTable2 t = s1.gluing_table();
  for (Gluing2 g : s2.gluing_table().gluings) {
    g.tri += shift;
    g.other_tri += shift;
    t.gluings.push_back(g);
  }
  t.num_triangles = shift + s2.num_triangles();
  t.orientation->insert(t.orientation->end(), s2.signs().begin(), s2.signs().end());
  for (const auto& [e1, e2] : matching) {
    if (e1 < 0 || e1 >= s1.num_edges() || e2 < 0 || e2 >= s2.num_edges() || !s1.is_boundary_edge(e1) ||
        !s2.is_boundary_edge(e2))
      throw Error(Errc::IncompatibleMatching, "matched edges must be boundary edges");
    const EdgeRef r1 = s1.edge(e1).rep, r2 = s2.edge(e2).rep;
    if (s1.sign(r1.tri) * face_parity(r1.edge) == s2.sign(r2.tri) * face_parity(r2.edge))
      throw Error(Errc::OrientationClash, "edge matching " + std::to_string(e1) + " -> " + std::to_string(e2) +
                                              " preserves orientation");
    if (a.holonomy[e1] != b.holonomy[e2])
      throw Error(Errc::IncompatibleBundle, "holonomies differ across matched edge " + std::to_string(e1));
    t.gluings.push_back({r1.tri, r1.edge, r2.tri + shift, r2.edge});
  }
  DeltaComplex2 glued = DeltaComplex2::from_gluings(t);
  std::vector<Rational> curvature = a.curvature;
  curvature.insert(curvature.end(), b.curvature.begin(), b.curvature.end());
  std::vector<PhaseQ> hol(glued.num_edges());
  for (int tri = 0; tri < glued.num_triangles(); ++tri)
    for (int e = 0; e < 3; ++e)
      hol[glued.edge_class(tri, e)] = tri < shift ? a.holonomy[s1.edge_class(tri, e)]
                                                  : b.holonomy[s2.edge_class(tri - shift, e)];
  return make_line_bundle(std::move(glued), std::move(curvature), std::move(hol));
}

inline EulerGlueReport euler_glue(const LineBundleConn& a, const LineBundleConn& b, const EdgeMatching& matching) {
  EulerGlueReport r;
  r.glued = euler_closed(glue_bundles(a, b, matching));
  // Order the circles of b to follow those of a.
  std::map<int, int> partner(matching.begin(), matching.end());
  const auto& ca = a.base.boundary_circles();
  const auto& cb = b.base.boundary_circles();
  const ZTorsorElem ea = relative_euler(a), eb = relative_euler(b);
  ZTorsorElem eb_sorted{{}, eb.offset};
  for (const auto& circle : ca) {
    const auto it = partner.find(circle.edges.front());
    if (it == partner.end()) throw Error(Errc::IncompatibleMatching, "boundary circle left unmatched");
    int found = -1;
    for (int j = 0; j < static_cast<int>(cb.size()); ++j)
      if (std::find(cb[j].edges.begin(), cb[j].edges.end(), it->second) != cb[j].edges.end()) found = j;
    eb_sorted.torsor.holonomy.push_back(eb.torsor.holonomy[found]);
  }
  r.paired = torsor_pair(ea, eb_sorted);
  r.equal = r.glued == r.paired;
  return r;
}

/// Random compatible data: holonomies with denominator `den` (those in
/// `fixed` kept), curvatures lifted by integers in [-spread, spread].
template <class Rng>
LineBundleConn random_bundle(const DeltaComplex2& base, Rng& rng, std::int64_t den, const std::map<int, PhaseQ>& fixed = {},
                             int spread = 3) {
  std::vector<PhaseQ> hol(base.num_edges());
  for (int e = 0; e < base.num_edges(); ++e) {
    const auto it = fixed.find(e);
    hol[e] = it != fixed.end() ? it->second : PhaseQ(static_cast<std::int64_t>(rng() % den), den);
  }
  std::vector<Rational> curvature;
  for (int t = 0; t < base.num_triangles(); ++t) {
    const std::int64_t shift = static_cast<std::int64_t>(rng() % (2 * spread + 1)) - spread;
    curvature.push_back(boundary_holonomy(base, hol, t).value() + shift);
  }
  return make_line_bundle(base, std::move(curvature), std::move(hol));
}

/// Two triangles glued along all edges with total curvature d, split evenly.
inline LineBundleConn clutched_sphere(const DeltaComplex2& sphere, std::int64_t d) {
  std::vector<PhaseQ> hol(sphere.num_edges());
  hol[sphere.edge_class(0, 2)] = PhaseQ(d, 2);
  return make_line_bundle(sphere, {make_rational(d, 2), make_rational(d, 2)}, std::move(hol));
}

}  // namespace tqft
