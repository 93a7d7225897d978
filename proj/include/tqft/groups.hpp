#pragma once

// Finite groups given by multiplication tables, group presentations and
// homomorphism enumeration.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tqft/errors.hpp"

namespace tqft {

using Element = int;

inline constexpr std::uint64_t kDefaultSearchCap = 100'000'000ULL;

class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Validates `table` and builds the group. Element 0 must be the identity.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table, std::string name = {}) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw Error(Errc::NoIdentity, "empty table");
    if (n > 64) throw Error(Errc::BadInput, "groups of order > 64 are not supported");
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(table[a].size()) != n)
        throw Error(Errc::BadInput, "row " + std::to_string(a) + " has wrong length");
      for (int b = 0; b < n; ++b)
        if (table[a][b] < 0 || table[a][b] >= n)
          throw Error(Errc::BadInput, "entry (" + std::to_string(a) + "," + std::to_string(b) +
                                          ") out of range");
    }
    FiniteGroup g;
    g.n_ = n;
    g.name_ = std::move(name);
    g.table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) g.table_[a * n + b] = table[a][b];

    for (int a = 0; a < n; ++a)
      if (g.mul(0, a) != a || g.mul(a, 0) != a)
        throw Error(Errc::NoIdentity, "element 0 is not a two-sided identity at element " +
                                          std::to_string(a));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw Error(Errc::NonAssociative, "(" + std::to_string(a) + "," + std::to_string(b) +
                                                  "," + std::to_string(c) + ")");
    g.inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
          g.inverse_[a] = b;
          break;
        }
      if (g.inverse_[a] < 0) throw Error(Errc::NoInverse, "element " + std::to_string(a));
    }
    for (int a = 0; a < n; ++a) {
      std::vector<bool> row(n, false), col(n, false);
      for (int b = 0; b < n; ++b) {
        if (row[g.mul(a, b)] || col[g.mul(b, a)])
          throw Error(Errc::NotLatinSquare, "row/column " + std::to_string(a));
        row[g.mul(a, b)] = col[g.mul(b, a)] = true;
      }
    }
    return g;
  }

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  Element mul(Element a, Element b) const { return table_[a * n_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }

  std::vector<std::vector<int>> table() const {
    std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
    return t;
  }

  int element_order(Element a) const {
    int k = 1;
    for (Element x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  bool operator==(const FiniteGroup& other) const { return n_ == other.n_ && table_ == other.table_; }

 private:
  int n_ = 0;
  std::string name_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
};

namespace detail {

inline FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& perms,
                                           std::string name) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const std::size_t n = perms.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // (a*b)(i) = a(b(i))
      std::vector<int> c(perms[a].size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = index.at(c);
    }
  return FiniteGroup::from_table(table, std::move(name));
}

inline std::vector<std::vector<int>> lexicographic_permutations(int degree) {
  std::vector<int> p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace detail

inline FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_table(t, "Z/" + std::to_string(n));
}

/// Names: Z/n (2 <= n <= 16), S3, S4, D4, Q8.
///
/// Element orderings: cyclic groups use residues; S3/S4 use one-line
/// permutations in lexicographic order with (pq)(i) = p(q(i)); D4 lists
/// rotations r^0..r^3 then reflections s r^0..s r^3; Q8 lists
/// 1, -1, i, -i, j, -j, k, -k.
inline FiniteGroup preset_group(const std::string& name) {
  if (name.rfind("Z/", 0) == 0) {
    const std::string digits = name.substr(2);
    if (!digits.empty() && digits.size() <= 2 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const int n = std::stoi(digits);
      if (n >= 2 && n <= 16 && std::to_string(n) == digits) return cyclic_group(n);
    }
    throw Error(Errc::UnknownName, name);
  }
  if (name == "S3") return detail::group_from_permutations(detail::lexicographic_permutations(3), name);
  if (name == "S4") return detail::group_from_permutations(detail::lexicographic_permutations(4), name);
  if (name == "D4") {
    // element (k, f) = s^f r^k at index 4f + k; s r = r^-1 s.
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        const int ka = a % 4, fa = a / 4, kb = b % 4, fb = b / 4;
        // s^fa r^ka s^fb r^kb = s^(fa+fb) r^(kb + (-1)^fb ka)
        const int k = ((fb ? -ka : ka) + kb + 8) % 4;
        t[a][b] = 4 * ((fa + fb) % 2) + k;
      }
    return FiniteGroup::from_table(t, name);
  }
  if (name == "Q8") {
    // index = 2*unit + sign, unit in {1, i, j, k}; unit products with signs.
    static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        const int ua = a / 2, ub = b / 2;
        const int sign = (a % 2) ^ (b % 2) ^ kSign[ua][ub];
        t[a][b] = 2 * kUnit[ua][ub] + sign;
      }
    return FiniteGroup::from_table(t, name);
  }
  throw Error(Errc::UnknownName, name);
}

inline std::vector<std::string> preset_group_names() {
  std::vector<std::string> names;
  for (int n = 2; n <= 16; ++n) names.push_back("Z/" + std::to_string(n));
  for (const char* s : {"S3", "S4", "D4", "Q8"}) names.emplace_back(s);
  return names;
}

/// Classes ordered by their smallest element; each class sorted.
inline std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<int> seen(g.order(), 0);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Element> cls;
    for (Element h = 0; h < g.order(); ++h) {
      const Element y = g.conj(h, x);
      if (!seen[y]) {
        seen[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline std::vector<Element> centralizer(const FiniteGroup& g, const std::vector<Element>& subset) {
  std::vector<Element> out;
  for (Element h = 0; h < g.order(); ++h)
    if (std::all_of(subset.begin(), subset.end(),
                    [&](Element x) { return g.mul(h, x) == g.mul(x, h); }))
      out.push_back(h);
  return out;
}

/// A subgroup re-indexed as a group in its own right; `elements[i]` is the
/// ambient index of local element i (ascending, so local 0 is the identity).
struct Subgroup {
  FiniteGroup group;
  std::vector<Element> elements;

  int local(Element ambient) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), ambient);
    if (it == elements.end() || *it != ambient) return -1;
    return static_cast<int>(it - elements.begin());
  }
};

inline Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  Subgroup s;
  s.elements = elements;
  const int m = static_cast<int>(elements.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int c = s.local(g.mul(elements[a], elements[b]));
      if (c < 0) throw Error(Errc::BadInput, "element set is not closed under multiplication");
      t[a][b] = c;
    }
  s.group = FiniteGroup::from_table(t, g.name().empty() ? std::string() : "subgroup of " + g.name());
  return s;
}

/// Relator letters are signed generator indices: +(i+1) for x_i, -(i+1) for x_i^-1.
struct Presentation {
  int num_generators = 0;
  std::vector<std::vector<int>> relators;

  void validate() const {
    if (num_generators < 0) throw Error(Errc::BadInput, "negative generator count");
    for (const auto& word : relators)
      for (int letter : word)
        if (letter == 0 || std::abs(letter) > num_generators)
          throw Error(Errc::BadInput, "relator letter " + std::to_string(letter) + " out of range");
  }
};

inline Element evaluate_word(const FiniteGroup& g, const std::vector<int>& word,
                             const std::vector<Element>& images) {
  Element x = 0;
  for (int letter : word) {
    const Element y = images[std::abs(letter) - 1];
    x = g.mul(x, letter > 0 ? y : g.inv(y));
  }
  return x;
}

/// pi_1 of the closed orientable surface of genus g: <a1,b1,...,ag,bg | [a1,b1]...[ag,bg]>.
inline Presentation surface_group(int genus) {
  Presentation p;
  p.num_generators = 2 * genus;
  if (genus > 0) {
    std::vector<int> rel;
    for (int i = 0; i < genus; ++i) {
      const int a = 2 * i + 1, b = 2 * i + 2;
      rel.insert(rel.end(), {a, b, -a, -b});
    }
    p.relators.push_back(rel);
  }
  return p;
}

/// Adds a central generator t commuting with every existing generator (pi_1 of M x S^1).
inline Presentation times_circle(const Presentation& p) {
  Presentation q = p;
  q.num_generators = p.num_generators + 1;
  const int t = q.num_generators;
  for (int i = 1; i < t; ++i) q.relators.push_back({i, t, -i, -t});
  return q;
}

/// All generator-image tuples satisfying every relator, in lexicographic order.
inline std::vector<std::vector<Element>> enumerate_homs(const Presentation& p, const FiniteGroup& g,
                                                        std::uint64_t cap = kDefaultSearchCap) {
  p.validate();
  double candidates = 1.0;
  for (int i = 0; i < p.num_generators; ++i) candidates *= g.order();
  if (candidates > static_cast<double>(cap))
    throw Error(Errc::SizeLimit, "|G|^generators = " + std::to_string(candidates) +
                                     " exceeds cap " + std::to_string(cap));

  // A relator is checked as soon as its highest generator is assigned.
  std::vector<std::vector<int>> check_at(p.num_generators + 1);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    int top = 0;
    for (int letter : p.relators[r]) top = std::max(top, std::abs(letter));
    check_at[top].push_back(static_cast<int>(r));
  }
  std::vector<std::vector<Element>> out;
  for (int r : check_at[0])
    if (evaluate_word(g, p.relators[r], {}) != 0) return out;

  const int n = p.num_generators;
  std::vector<Element> images(n, 0);
  if (n == 0) {
    out.push_back(images);
    return out;
  }
  auto ok_at = [&](int depth) {
    for (int r : check_at[depth + 1])
      if (evaluate_word(g, p.relators[r], images) != 0) return false;
    return true;
  };
  int depth = 0;
  images[0] = -1;
  while (depth >= 0) {
    if (++images[depth] >= g.order()) {
      --depth;
      continue;
    }
    if (!ok_at(depth)) continue;
    if (depth + 1 == n) {
      out.push_back(images);
    } else {
      ++depth;
      images[depth] = -1;
    }
  }
  return out;
}

struct HomClassTable {
  std::vector<std::vector<Element>> homs;
  std::vector<std::vector<int>> orbits;  // indices into homs
  std::vector<int> stabilizer_sizes;
};

/// Orbits of homomorphisms under simultaneous conjugation. Stabilizers are
/// centralizers of the image, i.e. #Aut of the corresponding bundle.
inline HomClassTable hom_orbits(const FiniteGroup& g, std::vector<std::vector<Element>> homs) {
  HomClassTable table;
  std::map<std::vector<Element>, int> index;
  for (std::size_t i = 0; i < homs.size(); ++i) index.emplace(homs[i], static_cast<int>(i));
  std::vector<int> seen(homs.size(), 0);
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (Element h = 0; h < g.order(); ++h) {
      std::vector<Element> c(homs[i].size());
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = g.conj(h, homs[i][k]);
      auto it = index.find(c);
      if (it == index.end()) throw Error(Errc::NotClosed, "conjugate of hom " + std::to_string(i));
      if (!seen[it->second]) {
        seen[it->second] = 1;
        orbit.push_back(it->second);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    const int stab = static_cast<int>(centralizer(g, homs[i]).size());
    table.orbits.push_back(std::move(orbit));
    table.stabilizer_sizes.push_back(stab);
  }
  table.homs = std::move(homs);
  return table;
}

}  // namespace tqft
