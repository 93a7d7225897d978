#pragma once

// Normalized inhomogeneous group cochains with values in Q/Z.

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tqft/errors.hpp"
#include "tqft/groups.hpp"
#include "tqft/phase.hpp"

namespace tqft {

/// A function G^k -> Q/Z that vanishes whenever an argument is the identity.
class Cochain {
 public:
  Cochain() = default;
  Cochain(int arity, int group_order) : arity_(arity), n_(group_order) {
    if (arity < 0 || arity > 4) throw Error(Errc::ArityTooHigh, "arity " + std::to_string(arity));
    std::size_t size = 1;
    for (int i = 0; i < arity; ++i) size *= static_cast<std::size_t>(group_order);
    values_.assign(size, PhaseQ());
  }

  int arity() const { return arity_; }
  int group_order() const { return n_; }
  const std::vector<PhaseQ>& values() const { return values_; }

  PhaseQ at(std::span<const Element> args) const { return values_[index(args)]; }
  PhaseQ operator()(Element a) const { return values_[a]; }
  PhaseQ operator()(Element a, Element b) const { return values_[a * n_ + b]; }
  PhaseQ operator()(Element a, Element b, Element c) const { return values_[(a * n_ + b) * n_ + c]; }

  void set(std::span<const Element> args, PhaseQ value) {
    if (!value.is_zero())
      for (Element x : args)
        if (x == 0) throw Error(Errc::BadInput, "normalized cochain must vanish on identity arguments");
    values_[index(args)] = value;
  }

  /// Tuple for flat index i (first argument most significant).
  std::vector<Element> tuple(std::size_t i) const {
    std::vector<Element> t(arity_);
    for (int k = arity_ - 1; k >= 0; --k) {
      t[k] = static_cast<Element>(i % n_);
      i /= n_;
    }
    return t;
  }

  bool is_zero() const {
    for (const auto& v : values_)
      if (!v.is_zero()) return false;
    return true;
  }

  Cochain operator-() const {
    Cochain c = *this;
    for (auto& v : c.values_) v = -v;
    return c;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) {
    a.check_compatible(b);
    for (std::size_t i = 0; i < a.values_.size(); ++i) a.values_[i] += b.values_[i];
    return a;
  }
  friend Cochain operator-(const Cochain& a, const Cochain& b) { return a + (-b); }
  friend bool operator==(const Cochain& a, const Cochain& b) = default;

 private:
  std::size_t index(std::span<const Element> args) const {
    if (static_cast<int>(args.size()) != arity_) throw Error(Errc::BadInput, "wrong number of arguments");
    std::size_t i = 0;
    for (Element x : args) i = i * n_ + static_cast<std::size_t>(x);
    return i;
  }
  void check_compatible(const Cochain& b) const {
    if (arity_ != b.arity_ || n_ != b.n_) throw Error(Errc::BadInput, "cochain shape mismatch");
  }

  int arity_ = 0;
  int n_ = 1;
  std::vector<PhaseQ> values_{PhaseQ()};
};

inline Cochain zero_cochain(int arity, const FiniteGroup& g) { return Cochain(arity, g.order()); }

/// Bar-complex coboundary with trivial coefficients:
/// (dc)(g1..g{k+1}) = c(g2..) + sum_i (-1)^i c(.., gi g{i+1}, ..) + (-1)^{k+1} c(g1..gk).
inline Cochain coboundary(const Cochain& c, const FiniteGroup& g) {
  const int k = c.arity();
  if (k > 3) throw Error(Errc::ArityTooHigh, "coboundary of arity " + std::to_string(k));
  if (c.group_order() != g.order()) throw Error(Errc::BadInput, "cochain/group order mismatch");
  Cochain out(k + 1, g.order());
  std::vector<Element> args(k);
  for (std::size_t idx = 0; idx < out.values().size(); ++idx) {
    const std::vector<Element> t = out.tuple(idx);
    PhaseQ v;
    std::copy(t.begin() + 1, t.end(), args.begin());
    v += c.at(args);
    for (int i = 1; i <= k; ++i) {
      // merge positions i-1 and i
      int w = 0;
      for (int j = 0; j <= k; ++j) {
        if (j == i) continue;
        args[w++] = (j == i - 1) ? g.mul(t[i - 1], t[i]) : t[j];
      }
      v = (i % 2 == 0) ? v + c.at(args) : v - c.at(args);
    }
    std::copy(t.begin(), t.end() - 1, args.begin());
    v = ((k + 1) % 2 == 0) ? v + c.at(args) : v - c.at(args);
    bool has_identity = false;
    for (Element x : t) has_identity = has_identity || x == 0;
    if (!has_identity) out.set(t, v);
  }
  return out;
}

struct CocycleCheck {
  bool holds = true;
  std::vector<Element> witness;  // first tuple where the coboundary is nonzero
  explicit operator bool() const { return holds; }
};

inline CocycleCheck is_cocycle(const Cochain& c, const FiniteGroup& g) {
  const Cochain d = coboundary(c, g);
  for (std::size_t i = 0; i < d.values().size(); ++i)
    if (!d.values()[i].is_zero()) return {false, d.tuple(i)};
  return {};
}

/// w_p(a,b,c) = p * a * (b + c - [(b + c) mod n]) / n^2 on Z/n, residues in 0..n-1.
inline Cochain cyclic_cocycle(int n, std::int64_t p) {
  if (n < 2) throw Error(Errc::BadInput, "cyclic cocycle needs n >= 2");
  Cochain w(3, n);
  const std::int64_t n2 = static_cast<std::int64_t>(n) * n;
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 1; c < n; ++c) {
        const std::int64_t carry = b + c - (b + c) % n;
        const std::int64_t num = ((p % n2) * a % n2) * carry % n2;
        const Element t[3] = {a, b, c};
        w.set(t, PhaseQ(num, n2));
      }
  return w;
}

/// Random normalized cochain with values in (1/den)Z/Z, drawn from `rng`.
template <class Rng>
Cochain random_cochain(int arity, const FiniteGroup& g, std::int64_t den, Rng& rng) {
  Cochain c(arity, g.order());
  for (std::size_t i = 0; i < c.values().size(); ++i) {
    const auto t = c.tuple(i);
    const std::uint64_t draw = rng();
    bool has_identity = false;
    for (Element x : t) has_identity = has_identity || x == 0;
    if (!has_identity) c.set(t, PhaseQ(static_cast<std::int64_t>(draw % static_cast<std::uint64_t>(den)), den));
  }
  return c;
}

namespace detail {

inline std::int64_t mod_pos(__int128 x, std::int64_t m) {
  __int128 r = x % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = mod_pos(a, m);
  while (a1 != 0) {
    const std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw Error(Errc::BadInput, "not invertible");
  return mod_pos(x, m);
}

inline int valuation(std::int64_t x, std::int64_t p) {
  int v = 0;
  while (x != 0 && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

/// Solves A x = b over Z/p^e by elimination with minimal-valuation pivoting.
inline std::optional<std::vector<std::int64_t>> solve_mod_prime_power(std::vector<std::vector<std::int64_t>> a,
                                                                      std::vector<std::int64_t> b,
                                                                      std::int64_t p, int e) {
  std::int64_t mod = 1;
  for (int i = 0; i < e; ++i) mod *= p;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (auto& row : a)
    for (auto& x : row) x = mod_pos(x, mod);
  for (auto& x : b) x = mod_pos(x, mod);
  std::vector<std::size_t> col_of(cols);
  std::iota(col_of.begin(), col_of.end(), 0);
  std::vector<int> pivot_val;
  std::size_t rank = 0;
  for (; rank < std::min(rows, cols); ++rank) {
    int best = e;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = rank; i < rows && best > 0; ++i)
      for (std::size_t j = rank; j < cols; ++j)
        if (a[i][j] != 0) {
          const int v = valuation(a[i][j], p);
          if (v < best) {
            best = v;
            bi = i;
            bj = j;
            if (v == 0) break;
          }
        }
    if (best == e) break;
    std::swap(a[rank], a[bi]);
    std::swap(b[rank], b[bi]);
    for (auto& row : a) std::swap(row[rank], row[bj]);
    std::swap(col_of[rank], col_of[bj]);
    std::int64_t pv = 1;
    for (int i = 0; i < best; ++i) pv *= p;
    const std::int64_t unit_inv = mod_inverse(a[rank][rank] / pv, mod);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][rank] == 0) continue;
      const std::int64_t f = mod_pos(static_cast<__int128>(a[i][rank] / pv) * unit_inv, mod);
      for (std::size_t j = rank; j < cols; ++j)
        a[i][j] = mod_pos(a[i][j] - static_cast<__int128>(f) * a[rank][j], mod);
      b[i] = mod_pos(b[i] - static_cast<__int128>(f) * b[rank], mod);
    }
    pivot_val.push_back(best);
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<std::int64_t> y(cols, 0);
  for (std::size_t r = rank; r-- > 0;) {
    __int128 s = b[r];
    for (std::size_t j = r + 1; j < cols; ++j) s -= static_cast<__int128>(a[r][j]) * y[j];
    const std::int64_t sm = mod_pos(s, mod);
    std::int64_t pv = 1;
    for (int i = 0; i < pivot_val[r]; ++i) pv *= p;
    if (sm % pv != 0) return std::nullopt;
    const std::int64_t reduced_mod = mod / pv;
    const std::int64_t unit = (a[r][r] / pv) % reduced_mod;
    y[r] = mod_pos(static_cast<__int128>(sm / pv) * mod_inverse(unit, reduced_mod), reduced_mod);
  }
  std::vector<std::int64_t> x(cols);
  for (std::size_t j = 0; j < cols; ++j) x[col_of[j]] = y[j];
  return x;
}

}  // namespace detail

/// Searches for a normalized 2-cochain beta with w1 - w2 = d(beta) whose values
/// have denominators dividing `denominator_bound` (default: lcm of the
/// denominators of w1 - w2, times |G|). The search is exhaustive for that
/// bound: it solves the linear system over Z/bound. nullopt means no witness
/// exists within the bound, which does not by itself prove non-cohomology.
inline std::optional<Cochain> cohomologous(const Cochain& w1, const Cochain& w2, const FiniteGroup& g,
                                           std::optional<std::int64_t> denominator_bound = std::nullopt) {
  if (w1.arity() != 3 || w2.arity() != 3) throw Error(Errc::NotCocycle, "arity must be 3");
  if (!is_cocycle(w1, g)) throw Error(Errc::NotCocycle, "first argument");
  if (!is_cocycle(w2, g)) throw Error(Errc::NotCocycle, "second argument");
  const Cochain diff = w1 - w2;
  const int n = g.order();
  std::int64_t den = 1;
  for (const auto& v : diff.values()) den = std::lcm(den, v.den());
  const std::int64_t bound = denominator_bound.value_or(den * n);
  if (bound % den != 0) return std::nullopt;
  if (n == 1 || diff.is_zero()) return Cochain(2, n);

  const auto unknown = [n](Element x, Element y) { return static_cast<std::size_t>((x - 1) * (n - 1) + (y - 1)); };
  const std::size_t num_unknowns = static_cast<std::size_t>(n - 1) * (n - 1);
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> rhs;
  for (Element a = 1; a < n; ++a)
    for (Element b = 1; b < n; ++b)
      for (Element c = 1; c < n; ++c) {
        // beta(b,c) - beta(ab,c) + beta(a,bc) - beta(a,b)
        std::vector<std::int64_t> row(num_unknowns, 0);
        row[unknown(b, c)] += 1;
        if (g.mul(a, b) != 0) row[unknown(g.mul(a, b), c)] -= 1;
        if (g.mul(b, c) != 0) row[unknown(a, g.mul(b, c))] += 1;
        row[unknown(a, b)] -= 1;
        rows.push_back(std::move(row));
        const PhaseQ v = diff(a, b, c);
        rhs.push_back(v.num() * (bound / v.den()));
      }

  // Factor the bound and combine prime-power solutions by CRT.
  std::vector<std::int64_t> solution(num_unknowns, 0);
  std::int64_t modulus = 1;
  std::int64_t rest = bound;
  for (std::int64_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    std::int64_t pe = 1;
    while (rest % p == 0) {
      rest /= p;
      pe *= p;
      ++e;
    }
    auto part = detail::solve_mod_prime_power(rows, rhs, p, e);
    if (!part) return std::nullopt;
    // x = solution mod modulus, x = part mod pe
    const std::int64_t inv = detail::mod_inverse(modulus % pe, pe);
    for (std::size_t i = 0; i < num_unknowns; ++i) {
      const std::int64_t t = detail::mod_pos(static_cast<__int128>((*part)[i] - solution[i]) * inv, pe);
      solution[i] = solution[i] + modulus * t;
    }
    modulus *= pe;
  }
  Cochain beta(2, n);
  for (Element a = 1; a < n; ++a)
    for (Element b = 1; b < n; ++b) {
      const Element t[2] = {a, b};
      beta.set(t, PhaseQ(solution[unknown(a, b)], bound));
    }
  if (coboundary(beta, g) != diff) throw Error(Errc::BadInput, "internal: witness failed verification");
  return beta;
}

/// beta_a(h,k) = w(a,h,k) + w(h,k,a) - w(h,a,k) on the centralizer of a.
struct Transgression {
  Subgroup centralizer;
  Cochain beta;  // indexed by local elements of `centralizer`
};

inline Transgression transgress_torus(const Cochain& w, const FiniteGroup& g, Element a) {
  if (w.arity() != 3 || !is_cocycle(w, g)) throw Error(Errc::NotCocycle, "transgression needs a 3-cocycle");
  Transgression t{make_subgroup(g, centralizer(g, {a})), Cochain()};
  const int m = t.centralizer.group.order();
  t.beta = Cochain(2, m);
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j) {
      const Element h = t.centralizer.elements[i], k = t.centralizer.elements[j];
      const Element args[2] = {i, j};
      t.beta.set(args, w(a, h, k) + w(h, k, a) - w(h, a, k));
    }
  return t;
}

}  // namespace tqft
