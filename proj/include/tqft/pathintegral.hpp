#pragma once

// State sums: closed partition functions, relative amplitudes, gluing
// checks and the Hilbert space of a surface as a sum of weighted lines.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tqft/cochains.hpp"
#include "tqft/dcomplex.hpp"
#include "tqft/errors.hpp"
#include "tqft/gauge.hpp"
#include "tqft/groups.hpp"
#include "tqft/phase.hpp"
#include "tqft/presets.hpp"

namespace tqft {

namespace detail {

inline void check_cocycle_shape(const Cochain& w, const FiniteGroup& g) {
  if (w.arity() != 3 || w.group_order() != g.order())
    throw Error(Errc::BadInput, "action needs a 3-cochain on a group of order " + std::to_string(g.order()));
}

inline Rational inverse_power(int base, int exponent) {
  Rational r(1);
  for (int i = 0; i < exponent; ++i) r /= base;
  return r;
}

/// Element triples (g01, g12, g23) and signs, one per tetrahedron.
struct TetFrames {
  std::vector<std::array<int, 3>> edges;
  std::vector<int> signs;
  explicit TetFrames(const DeltaComplex3& x) {
    for (int t = 0; t < x.num_tets(); ++t) {
      edges.push_back({x.edge_class(t, 0), x.edge_class(t, 3), x.edge_class(t, 5)});
      signs.push_back(x.sign(t));
    }
  }
  PhaseQ action(const Cochain& w, const FlatColoring& c) const {
    PhaseQ s;
    for (std::size_t t = 0; t < edges.size(); ++t) {
      const PhaseQ v = w(c[edges[t][0]], c[edges[t][1]], c[edges[t][2]]);
      s += signs[t] > 0 ? v : -v;
    }
    return s;
  }
};

}  // namespace detail

/// sum_t eps_t w(g01, g12, g23), without any closedness requirement.
inline PhaseQ tetrahedron_action(const DeltaComplex3& x, const Cochain& w, const FlatColoring& c) {
  return detail::TetFrames(x).action(w, c);
}

inline PhaseQ action_phase(const DeltaComplex3& x, const FiniteGroup& g, const Cochain& w, const FlatColoring& c) {
  if (!x.is_closed()) throw Error(Errc::NotClosed, "action of a complex with boundary");
  detail::check_cocycle_shape(w, g);
  if (static_cast<int>(c.size()) != x.num_edges() || !is_flat(flatness_problem(x), g, c))
    throw Error(Errc::NotFlat, "coloring is not flat");
  return tetrahedron_action(x, w, c);
}

/// Flat colorings of a closed complex enumerated once, evaluated against any cocycle.
class StateSum {
 public:
  StateSum(const DeltaComplex3& x, const FiniteGroup& g, std::uint64_t cap = kDefaultSearchCap)
      : frames_(x), order_(g.order()), vertices_(x.num_vertices()) {
    if (!x.is_closed()) throw Error(Errc::NotClosed, "partition function of a complex with boundary");
    colorings_ = enumerate_flat_colorings(x, g, {}, cap);
  }

  const std::vector<FlatColoring>& colorings() const { return colorings_; }
  int num_vertices() const { return vertices_; }

  PhaseQ action(const Cochain& w, const FlatColoring& c) const { return frames_.action(w, c); }

  /// |G|^-V sum over flat colorings of exp(2 pi i action).
  PhaseSum evaluate(const Cochain& w) const {
    if (w.arity() != 3 || w.group_order() != order_) throw Error(Errc::BadInput, "cocycle does not match the group");
    std::map<PhaseQ, std::int64_t> counts;
    for (const FlatColoring& c : colorings_) ++counts[frames_.action(w, c)];
    return PhaseSum::from_counts(counts, detail::inverse_power(order_, vertices_));
  }

 private:
  detail::TetFrames frames_;
  int order_;
  int vertices_;
  std::vector<FlatColoring> colorings_;
};

inline PhaseSum partition_closed(const DeltaComplex3& x, const FiniteGroup& g, const Cochain& w,
                                 std::uint64_t cap = kDefaultSearchCap) {
  detail::check_cocycle_shape(w, g);
  return StateSum(x, g, cap).evaluate(w);
}

struct ClosedSector {
  FlatColoring representative;
  std::int64_t orbit_size = 0;
  std::int64_t automorphisms = 0;
  PhaseQ action;
};

struct GroupoidSum {
  PhaseSum value;
  std::vector<ClosedSector> sectors;
};

/// sum over bundle classes of exp(2 pi i action) / #Aut.
inline GroupoidSum partition_groupoid(const DeltaComplex3& x, const FiniteGroup& g, const Cochain& w,
                                      std::uint64_t cap = kDefaultSearchCap) {
  detail::check_cocycle_shape(w, g);
  const StateSum s(x, g, cap);
  GroupoidSum out;
  for (const BundleClass& cls : gauge_orbits(x, g, s.colorings())) {
    const PhaseQ a = s.action(w, cls.representative);
    out.value += PhaseSum(a, Rational(1) / cls.stabilizer_size);
    out.sectors.push_back({cls.representative, cls.orbit_size, cls.stabilizer_size, a});
  }
  return out;
}

/// |Hom(pi, G)| / |G|.
inline Rational partition_counting_oracle(const Presentation& p, const FiniteGroup& g,
                                          std::uint64_t cap = kDefaultSearchCap) {
  return Rational(static_cast<std::int64_t>(enumerate_homs(p, g, cap).size()), g.order());
}

// ---------------------------------------------------------------------------
// Relative amplitudes

/// Boundary edge class of the complex -> element.
using BoundaryColoring = std::map<int, Element>;

struct RelativeAmplitude {
  BoundaryColoring boundary;
  PhaseSum value;
};

/// All flat colorings of the boundary surface, in deterministic order.
inline std::vector<BoundaryColoring> boundary_colorings(const DeltaComplex3& x, const FiniteGroup& g,
                                                        std::uint64_t cap = kDefaultSearchCap) {
  const BoundarySurface b = boundary_surface(x);
  std::vector<BoundaryColoring> out;
  for_each_flat_coloring(flatness_problem(b.surface), g, {}, cap, [&](const FlatColoring& c) {
    BoundaryColoring q;
    for (int e = 0; e < static_cast<int>(c.size()); ++e) q[b.edge_to_complex[e]] = c[e];
    out.push_back(std::move(q));
  });
  return out;
}

/// |G|^-(interior vertices) sum over flat extensions of Q of exp(2 pi i action).
inline RelativeAmplitude relative_partition(const DeltaComplex3& x, const FiniteGroup& g, const Cochain& w,
                                            const BoundaryColoring& q, std::uint64_t cap = kDefaultSearchCap) {
  detail::check_cocycle_shape(w, g);
  for (int e = 0; e < x.num_edges(); ++e)
    if (x.edge(e).boundary != (q.count(e) == 1))
      throw Error(Errc::NotFlatBoundary, "boundary coloring must cover exactly the boundary edges (edge " +
                                             std::to_string(e) + ")");
  for (const auto& [e, val] : q)
    if (val < 0 || val >= g.order()) throw Error(Errc::NotFlatBoundary, "element out of range on edge " + std::to_string(e));
  for (const FaceRef& f : x.boundary_faces()) {
    const auto [a, b, c] = x.face_edges(f);
    if (g.mul(q.at(a), q.at(b)) != q.at(c))
      throw Error(Errc::NotFlatBoundary,
                  "boundary triangle (" + std::to_string(f.tet) + "," + std::to_string(f.face) + ") is not flat");
  }
  const detail::TetFrames frames(x);
  std::vector<int> pin(x.num_edges(), -1);
  for (const auto& [e, val] : q) pin[e] = val;
  std::map<PhaseQ, std::int64_t> counts;
  for_each_flat_coloring(flatness_problem(x), g, pin, cap,
                         [&](const FlatColoring& c) { ++counts[frames.action(w, c)]; });
  return {q, PhaseSum::from_counts(counts, detail::inverse_power(g.order(), x.num_interior_vertices()))};
}

/// sum_Q mu v(Q) conj(w(Q)) for amplitudes listed over the same boundary colorings.
inline PhaseSum trace_pair(const Rational& measure, const std::vector<RelativeAmplitude>& v,
                           const std::vector<RelativeAmplitude>& w) {
  if (v.size() != w.size()) throw Error(Errc::SectorMismatch, "amplitude lists differ in length");
  PhaseSum s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].boundary != w[i].boundary) throw Error(Errc::SectorMismatch, "boundary colorings differ at " + std::to_string(i));
    s += v[i].value * w[i].value.conj();
  }
  return s * measure;
}

struct GlueReport {
  PhaseSum glued;    // Z of the glued closed complex
  PhaseSum summed;   // |G|^-V_Y sum_Q Z_1(Q) Z_2(Q')
  PhaseSum paired;   // same sum through trace_pair with the reversed second piece
  std::size_t boundary_colorings = 0;
  bool equal = false;
};

/// X = X1 u_Y X2 against the boundary sum of relative amplitudes.
inline GlueReport glue_identity_check(const DeltaComplex3& x1, const DeltaComplex3& x2, const FaceMatching& matching,
                                      const FiniteGroup& g, const Cochain& w, std::uint64_t cap = kDefaultSearchCap) {
  const DeltaComplex3 glued = glue_along_boundary(x1, x2, matching);
  if (!glued.is_closed()) throw Error(Errc::NotClosed, "matching leaves unmatched boundary faces");
  GlueReport r;
  r.glued = partition_closed(glued, g, w, cap);

  std::map<int, int> edge_map;
  for (const auto& [a, b] : matching) {
    const auto ea = x1.face_edges(a), eb = x2.face_edges(b);
    for (int i = 0; i < 3; ++i) edge_map[ea[i]] = eb[i];
  }
  const int boundary_vertices = glued.num_vertices() - x1.num_interior_vertices() - x2.num_interior_vertices();
  const Rational measure = detail::inverse_power(g.order(), boundary_vertices);
  const DeltaComplex3 reversed = x2.mirrored();
  std::vector<RelativeAmplitude> first, second_reversed;
  for (const BoundaryColoring& q : boundary_colorings(x1, g, cap)) {
    BoundaryColoring q2;
    for (const auto& [e, val] : q) q2[edge_map.at(e)] = val;
    const RelativeAmplitude z1 = relative_partition(x1, g, w, q, cap);
    const RelativeAmplitude z2 = relative_partition(x2, g, w, q2, cap);
    r.summed += z1.value * z2.value;
    first.push_back(z1);
    RelativeAmplitude zr = relative_partition(reversed, g, w, q2, cap);
    zr.boundary = q;
    second_reversed.push_back(zr);
  }
  r.summed = r.summed * measure;
  r.paired = trace_pair(measure, first, second_reversed);
  r.boundary_colorings = first.size();
  r.equal = r.glued == r.summed && r.summed == r.paired;
  return r;
}

struct TraceReport {
  PhaseSum original;  // Z of the uncut complex
  PhaseSum reglued;   // Z after cutting and regluing
  PhaseSum trace;     // |G|^-V_Y sum_Q Z_cut(Q, Q)
  std::size_t boundary_colorings = 0;
  bool equal = false;
};

/// Cuts X along a surface and compares Z(X) with the trace of the cut amplitude.
inline TraceReport cut_glue_check(const DeltaComplex3& x, const std::vector<int>& surface, const FiniteGroup& g,
                                  const Cochain& w, std::uint64_t cap = kDefaultSearchCap) {
  const CutResult cut = cut_along(x, surface);
  const DeltaComplex3 reglued = glue_self(cut.complex, cut.matching);
  TraceReport r;
  r.original = partition_closed(x, g, w, cap);
  r.reglued = partition_closed(reglued, g, w, cap);

  // Boundary edges of the cut complex, with the two copies of each edge of Y merged.
  const DeltaComplex3& xc = cut.complex;
  detail::UnionFind uf(xc.num_edges());
  for (const auto& [a, b] : cut.matching) {
    const auto ea = xc.face_edges(a), eb = xc.face_edges(b);
    for (int i = 0; i < 3; ++i) uf.unite(ea[i], eb[i]);
  }
  std::vector<int> boundary_edges;
  std::map<int, int> var_of_root;
  for (int e = 0; e < xc.num_edges(); ++e)
    if (xc.edge(e).boundary) {
      boundary_edges.push_back(e);
      var_of_root.emplace(static_cast<int>(uf.find(e)), static_cast<int>(var_of_root.size()));
    }
  const auto var = [&](int e) { return var_of_root.at(static_cast<int>(uf.find(e))); };
  FlatnessProblem p{static_cast<int>(var_of_root.size()), {}};
  for (const auto& [a, b] : cut.matching) {
    const auto ea = xc.face_edges(a);
    p.triangles.push_back({var(ea[0]), var(ea[1]), var(ea[2])});
  }
  const Rational measure =
      detail::inverse_power(g.order(), reglued.num_vertices() - xc.num_interior_vertices());
  for_each_flat_coloring(p, g, {}, cap, [&](const FlatColoring& c) {
    BoundaryColoring q;
    for (int e : boundary_edges) q[e] = c[var(e)];
    r.trace += relative_partition(xc, g, w, q, cap).value;
    ++r.boundary_colorings;
  });
  r.trace = r.trace * measure;
  r.equal = r.original == r.reglued && r.reglued == r.trace;
  return r;
}

// ---------------------------------------------------------------------------
// Hilbert spaces

struct Sector {
  std::vector<Element> label;  // generator images of a representative
  Rational weight;             // 1 / #Aut
  bool survives = true;
};

struct HilbertSum {
  int genus = 0;
  std::vector<Sector> sectors;

  int dim() const {
    return static_cast<int>(std::count_if(sectors.begin(), sectors.end(), [](const Sector& s) { return s.survives; }));
  }
};

/// For the torus with twist: (a, b) survives iff beta_a(b, c) = beta_a(c, b)
/// for every c centralizing both.
inline HilbertSum hilbert_space(int genus, const FiniteGroup& g, const Cochain& w,
                                std::uint64_t cap = kDefaultSearchCap) {
  if (genus < 0) throw Error(Errc::UnsupportedSurface, "negative genus");
  detail::check_cocycle_shape(w, g);
  if (!w.is_zero() && genus != 1)
    throw Error(Errc::TwistedGenusUnsupported, "twisted Hilbert space only for the torus");
  const HomClassTable table = hom_orbits(g, enumerate_homs(surface_group(genus), g, cap));
  HilbertSum h{genus, {}};
  std::map<Element, Transgression> transgressions;
  for (std::size_t o = 0; o < table.orbits.size(); ++o) {
    Sector s{table.homs[table.orbits[o].front()], Rational(1, table.stabilizer_sizes[o]), true};
    if (genus == 1 && !w.is_zero()) {
      const Element a = s.label[0], b = s.label[1];
      auto it = transgressions.find(a);
      if (it == transgressions.end()) it = transgressions.emplace(a, transgress_torus(w, g, a)).first;
      const Transgression& t = it->second;
      const int lb = t.centralizer.local(b);
      for (Element c : centralizer(g, {a, b}))
        if (t.beta(lb, t.centralizer.local(c)) != t.beta(t.centralizer.local(c), lb)) s.survives = false;
    }
    h.sectors.push_back(std::move(s));
  }
  return h;
}

struct VerlindeReport {
  std::string surface;
  std::string route;  // "state sum" or "counting"
  int dim = 0;
  PhaseSum z;
  bool equal = false;
};

/// dim E(Y) against Z(Y x S^1). Genus 0 and 1 use triangulated products;
/// other genera use the counting oracle and require w = 0.
inline VerlindeReport verlinde_check(int genus, const FiniteGroup& g, const Cochain& w, bool counting = false,
                                     std::uint64_t cap = kDefaultSearchCap) {
  VerlindeReport r;
  r.surface = genus == 0 ? "S2" : genus == 1 ? "T2" : "genus " + std::to_string(genus);
  r.dim = hilbert_space(genus, g, w, cap).dim();
  if (counting || genus > 1) {
    if (!w.is_zero()) throw Error(Errc::UnsupportedSurface, "counting route needs the trivial cocycle");
    r.route = "counting";
    r.z = PhaseSum(partition_counting_oracle(times_circle(surface_group(genus)), g, cap));
  } else {
    r.route = "state sum";
    r.z = partition_closed(preset_manifold(genus == 0 ? "S2xS1" : "T3_6tet").complex, g, w, cap);
  }
  r.equal = r.z == PhaseSum(Rational(r.dim));
  return r;
}

}  // namespace tqft
