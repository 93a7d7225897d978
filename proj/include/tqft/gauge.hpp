#pragma once

// Flat colorings, gauge orbits and bundle classes.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tqft/dcomplex.hpp"
#include "tqft/errors.hpp"
#include "tqft/groups.hpp"
#include "tqft/presets.hpp"

namespace tqft {

/// Element per edge class, read along the class direction.
using FlatColoring = std::vector<Element>;

/// Variables with composition constraints g[c] = g[a] * g[b] for (a, b, c).
struct FlatnessProblem {
  int num_vars = 0;
  std::vector<std::array<int, 3>> triangles;  // (e01, e12, e02)
};

inline FlatnessProblem flatness_problem(const DeltaComplex3& x) {
  FlatnessProblem p{x.num_edges(), {}};
  for (int t = 0; t < x.num_triangles(); ++t) p.triangles.push_back(x.triangle(t).edges);
  return p;
}

inline FlatnessProblem flatness_problem(const DeltaComplex2& s) {
  FlatnessProblem p{s.num_edges(), {}};
  for (int t = 0; t < s.num_triangles(); ++t) p.triangles.push_back(s.triangle_edges(t));
  return p;
}

inline bool is_flat(const FlatnessProblem& p, const FiniteGroup& g, const FlatColoring& c) {
  for (const auto& [a, b, ab] : p.triangles)
    if (g.mul(c[a], c[b]) != c[ab]) return false;
  return true;
}

/// Depth-first search with unit propagation: a triangle with one unknown
/// edge determines it. `fixed[v] >= 0` pins variable v. Visits colorings in
/// a deterministic order.
template <class Visit>
void for_each_flat_coloring(const FlatnessProblem& p, const FiniteGroup& g, const std::vector<int>& fixed,
                            std::uint64_t cap, Visit&& visit) {
  const int n = p.num_vars;
  std::vector<std::vector<int>> watch(n);
  for (int t = 0; t < static_cast<int>(p.triangles.size()); ++t)
    for (int v : p.triangles[t])
      if (watch[v].empty() || watch[v].back() != t) watch[v].push_back(t);
  std::vector<int> value(n, -1), trail;
  std::uint64_t nodes = 0;

  // Assigns and propagates; returns false on contradiction.
  const auto assign = [&](int var, int val) {
    std::vector<std::pair<int, int>> queue{{var, val}};
    while (!queue.empty()) {
      const auto [v, x] = queue.back();
      queue.pop_back();
      if (value[v] >= 0) {
        if (value[v] != x) return false;
        continue;
      }
      value[v] = x;
      trail.push_back(v);
      for (int t : watch[v]) {
        const auto [a, b, c] = p.triangles[t];
        const int va = value[a], vb = value[b], vc = value[c];
        if (va >= 0 && vb >= 0 && vc >= 0) {
          if (g.mul(va, vb) != vc) return false;
        } else if (va >= 0 && vb >= 0) {
          queue.push_back({c, g.mul(va, vb)});
        } else if (va >= 0 && vc >= 0 && b != c) {
          queue.push_back({b, g.mul(g.inv(va), vc)});
        } else if (vb >= 0 && vc >= 0 && a != c) {
          queue.push_back({a, g.mul(vc, g.inv(vb))});
        }
      }
    }
    return true;
  };
  const auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      value[trail.back()] = -1;
      trail.pop_back();
    }
  };

  for (int v = 0; v < n; ++v)
    if (v < static_cast<int>(fixed.size()) && fixed[v] >= 0 && !assign(v, fixed[v])) return;

  const auto recurse = [&](auto&& self, int from) -> void {
    int v = from;
    while (v < n && value[v] >= 0) ++v;
    if (v == n) {
      visit(static_cast<const FlatColoring&>(value));
      return;
    }
    for (Element x = 0; x < g.order(); ++x) {
      if (++nodes > cap) throw Error(Errc::SizeLimit, "flat coloring search exceeded " + std::to_string(cap) + " nodes");
      const std::size_t mark = trail.size();
      if (assign(v, x)) self(self, v + 1);
      undo(mark);
    }
  };
  recurse(recurse, 0);
}

template <class Complex>
std::vector<FlatColoring> enumerate_flat_colorings(const Complex& x, const FiniteGroup& g,
                                                   const std::map<int, Element>& fixed = {},
                                                   std::uint64_t cap = kDefaultSearchCap) {
  const FlatnessProblem p = flatness_problem(x);
  std::vector<int> pin(p.num_vars, -1);
  for (const auto& [e, val] : fixed) {
    if (e < 0 || e >= p.num_vars || val < 0 || val >= g.order()) throw Error(Errc::BadInput, "fixed edge out of range");
    pin[e] = val;
  }
  std::vector<FlatColoring> out;
  for_each_flat_coloring(p, g, pin, cap, [&](const FlatColoring& c) { out.push_back(c); });
  return out;
}

/// g(uv) -> h(u) g(uv) h(v)^-1 for each edge class u -> v.
template <class Complex>
FlatColoring gauge_transform(const Complex& x, const FiniteGroup& g, const FlatColoring& c, const std::vector<Element>& h) {
  FlatColoring out(c.size());
  for (int e = 0; e < static_cast<int>(c.size()); ++e)
    out[e] = g.mul(g.mul(h[x.edge(e).src], c[e]), g.inv(h[x.edge(e).dst]));
  return out;
}

struct BundleClass {
  FlatColoring representative;
  std::vector<int> members;  // indices into the input list
  std::int64_t orbit_size = 0;
  std::int64_t stabilizer_size = 0;  // #Aut
};

/// Orbits under gauge transformations that are trivial on `frozen` vertex
/// classes (the boundary, in the relative case).
template <class Complex>
std::vector<BundleClass> gauge_orbits(const Complex& x, const FiniteGroup& g, const std::vector<FlatColoring>& colorings,
                                      const std::vector<bool>& frozen = {}) {
  std::vector<int> free_vertices;
  for (int v = 0; v < x.num_vertices(); ++v)
    if (v >= static_cast<int>(frozen.size()) || !frozen[v]) free_vertices.push_back(v);
  std::int64_t group_size = 1;
  for (std::size_t i = 0; i < free_vertices.size(); ++i) {
    if (group_size > (std::int64_t{1} << 62) / g.order()) throw Error(Errc::SizeLimit, "gauge group too large");
    group_size *= g.order();
  }

  std::map<FlatColoring, int> index;
  for (int i = 0; i < static_cast<int>(colorings.size()); ++i) index.emplace(colorings[i], i);
  std::vector<bool> seen(colorings.size(), false);
  std::vector<BundleClass> classes;
  std::vector<Element> h(x.num_vertices(), 0);
  for (int i = 0; i < static_cast<int>(colorings.size()); ++i) {
    if (seen[i]) continue;
    BundleClass cls{colorings[i], {i}, 0, 0};
    seen[i] = true;
    // Single-vertex transformations generate the gauge group.
    for (std::size_t k = 0; k < cls.members.size(); ++k) {
      const FlatColoring& cur = colorings[cls.members[k]];
      for (int v : free_vertices)
        for (Element a = 1; a < g.order(); ++a) {
          h[v] = a;
          const FlatColoring next = gauge_transform(x, g, cur, h);
          h[v] = 0;
          const auto it = index.find(next);
          if (it == index.end()) throw Error(Errc::NotClosed, "gauge image of coloring " + std::to_string(cls.members[k]));
          if (!seen[it->second]) {
            seen[it->second] = true;
            cls.members.push_back(it->second);
          }
        }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.orbit_size = static_cast<std::int64_t>(cls.members.size());
    cls.stabilizer_size = group_size / cls.orbit_size;
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// Conjugacy-class index (in conjugacy_classes order) of the holonomy along each named loop.
inline std::vector<int> holonomy_class_invariants(const Manifold& m, const FiniteGroup& g, const FlatColoring& c) {
  if (!m.loops) throw Error(Errc::UnknownLoops, "complex '" + m.name + "' carries no named loops");
  const auto classes = conjugacy_classes(g);
  std::vector<int> class_of(g.order());
  for (int k = 0; k < static_cast<int>(classes.size()); ++k)
    for (Element e : classes[k]) class_of[e] = k;
  std::vector<int> out;
  for (const NamedLoop& loop : *m.loops) {
    Element h = 0;
    for (const auto& [edge, dir] : loop.path) h = g.mul(h, dir > 0 ? c[edge] : g.inv(c[edge]));
    out.push_back(class_of[h]);
  }
  return out;
}

}  // namespace tqft
