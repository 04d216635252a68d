#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's algorithms; only its table types are shared.

#include <algorithm>
#include <numeric>
#include <vector>

#include "doublelift/doublecat.hpp"
#include "doublelift/fincat.hpp"

namespace oracle {

using dlift::Id;

inline dlift::MonoidTable cyclic(std::size_t n) {
  dlift::MonoidTable t{n, 0, {}, {}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t.product.push_back(static_cast<Id>((x + y) % n));
  return t;
}

/// (n', m')(n, m) = (n' + phi_{m'}(n), m' m) on index m * |N| + n.
inline std::vector<Id> semidirect_product(const dlift::MonoidTable& n, const dlift::MonoidTable& m,
                                          const std::vector<std::vector<Id>>& phi) {
  const std::size_t nn = n.size, nm = m.size, size = nn * nm;
  std::vector<Id> out(size * size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      const Id n1 = static_cast<Id>(a % nn), m1 = static_cast<Id>(a / nn);
      const Id n0 = static_cast<Id>(b % nn), m0 = static_cast<Id>(b / nn);
      const Id nprod = n.product[n1 * nn + phi[m1][n0]];
      const Id mprod = m.product[m1 * nm + m0];
      out[a * size + b] = static_cast<Id>(mprod * nn + nprod);
    }
  return out;
}

/// Exhaustive search over all |a|! bijections.
inline bool isomorphic(const dlift::MonoidTable& a, const dlift::MonoidTable& b, std::size_t* tried = nullptr) {
  if (a.size != b.size) return false;
  std::vector<Id> perm(a.size);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  bool found = false;
  do {
    ++count;
    bool ok = perm[a.unit] == b.unit;
    for (std::size_t x = 0; ok && x < a.size; ++x)
      for (std::size_t y = 0; ok && y < a.size; ++y)
        ok = perm[a.product[x * a.size + y]] == b.product[perm[x] * b.size + perm[y]];
    found = found || ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (tried) *tried = count;
  return found;
}

inline bool commutative(const dlift::MonoidTable& t) {
  for (std::size_t x = 0; x < t.size; ++x)
    for (std::size_t y = 0; y < t.size; ++y)
      if (t.product[x * t.size + y] != t.product[y * t.size + x]) return false;
  return true;
}

inline std::size_t center_size(const dlift::MonoidTable& t) {
  std::size_t count = 0;
  for (std::size_t x = 0; x < t.size; ++x) {
    bool central = true;
    for (std::size_t y = 0; central && y < t.size; ++y)
      central = t.product[x * t.size + y] == t.product[y * t.size + x];
    count += central;
  }
  return count;
}

inline std::size_t euler_phi(std::size_t n) {
  std::size_t count = 0;
  for (std::size_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return n == 1 ? 1 : count;
}

/// Exact fractions over long long, enough for the small matrices in tests.
struct Fraction {
  long long num = 0, den = 1;
  Fraction(long long n = 0, long long d = 1) : num(n), den(d) {
    if (den < 0) num = -num, den = -den;
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
  }
  friend Fraction operator-(Fraction a, Fraction b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Fraction operator*(Fraction a, Fraction b) { return {a.num * b.num, a.den * b.den}; }
  friend Fraction operator/(Fraction a, Fraction b) { return {a.num * b.den, a.den * b.num}; }
  bool zero() const { return num == 0; }
};

/// Rank by textbook Gauss-Jordan elimination over fractions.
inline std::size_t rank(std::vector<std::vector<long long>> rows) {
  std::vector<std::vector<Fraction>> m;
  for (auto& r : rows) m.emplace_back(r.begin(), r.end());
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].zero()) continue;
      const Fraction factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] - factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Closure of a square set under both compositions, by naive fixpoint.
inline std::vector<char> closure(const dlift::DoubleCategory& c, std::vector<char> s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Id p = 0; p < c.square_count(); ++p)
      for (Id q = 0; q < c.square_count(); ++q) {
        if (!s[p] || !s[q]) continue;
        for (Id r : {c.vcomp(p, q), c.hcomp(p, q)})
          if (r != dlift::kNoId && !s[r]) s[r] = 1, changed = true;
      }
  }
  return s;
}

/// A commuting square a -> b -> d, a -> c -> d of vertical morphisms with
/// only identity horizontal 1-cells. Squares over a vertical morphism v form
/// a group Sq(v) under horizontal composition: trivial over id_a and id_d,
/// Z2 over id_b, id_c, f1, f2, g1, g2, and Z2 x Z2 over the diagonal h.
/// Vertically, globulars act by addition, the f-route lands in the first
/// summand of Sq(h) and the g-route in the second.
struct LengthTwo {
  dlift::DoubleCategoryTable table;
  std::vector<Id> over;   // square -> vertical morphism
  std::vector<Id> value;  // square -> element of Sq(over)
  Id square(Id v, Id x) const {
    for (Id p = 0; p < over.size(); ++p)
      if (over[p] == v && value[p] == x) return p;
    return dlift::kNoId;
  }
};

inline LengthTwo length_two() {
  enum : Id { a, b, c, d };
  enum : Id { ida, idb, idc, idd, f1, f2, g1, g2, h };
  const std::vector<dlift::Arrow> arrows = {{a, a}, {b, b}, {c, c}, {d, d}, {a, b},
                                            {b, d}, {a, c}, {c, d}, {a, d}};
  const std::vector<std::size_t> order = {1, 2, 2, 1, 2, 2, 2, 2, 4};

  LengthTwo out;
  for (Id v = 0; v < arrows.size(); ++v)
    for (Id x = 0; x < order[v]; ++x) out.over.push_back(v), out.value.push_back(x);
  const std::size_t ns = out.over.size(), nv = arrows.size();

  auto& t = out.table;
  t.objects.objects = 4;
  t.objects.morphisms = arrows;
  t.objects.identity = {ida, idb, idc, idd};
  t.objects.compose.assign(nv * nv, dlift::kNoId);
  for (Id g = 0; g < nv; ++g)
    for (Id f = 0; f < nv; ++f) {
      if (arrows[f].cod != arrows[g].dom) continue;
      Id r = g < 4 ? f : f < 4 ? g : h;
      t.objects.compose[g * nv + f] = r;
    }

  t.morphisms.objects = 4;
  for (Id p = 0; p < ns; ++p) t.morphisms.morphisms.push_back(arrows[out.over[p]]);
  t.morphisms.identity = {out.square(ida, 0), out.square(idb, 0), out.square(idc, 0), out.square(idd, 0)};
  t.morphisms.compose.assign(ns * ns, dlift::kNoId);
  for (Id q = 0; q < ns; ++q)
    for (Id p = 0; p < ns; ++p) {
      const Id vq = out.over[q], vp = out.over[p];
      if (arrows[vp].cod != arrows[vq].dom) continue;
      const Id x = out.value[p], y = out.value[q];
      Id r;
      if (vq < 4 || vp < 4) {
        const Id v = vq < 4 ? vp : vq;
        r = out.square(v, v == h ? (x ^ y) : (x + y) % 2);
      } else if (vp == f1) {
        r = out.square(h, (x + y) % 2);  // (x + y, 0)
      } else {
        r = out.square(h, ((x + y) % 2) << 1);  // (0, x + y)
      }
      t.morphisms.compose[q * ns + p] = r;
    }

  t.source = {{a, b, c, d}, out.over};
  t.target = t.source;
  t.identity.objects = {0, 1, 2, 3};
  for (Id v = 0; v < nv; ++v) t.identity.morphisms.push_back(out.square(v, 0));
  t.horizontal_cells.assign(16, dlift::kNoId);
  for (Id k = 0; k < 4; ++k) t.horizontal_cells[k * 4 + k] = k;
  t.horizontal_squares.assign(ns * ns, dlift::kNoId);
  for (Id p = 0; p < ns; ++p)
    for (Id q = 0; q < ns; ++q)
      if (out.over[p] == out.over[q])
        t.horizontal_squares[p * ns + q] = out.square(out.over[p], out.value[p] ^ out.value[q]);
  return out;
}

}  // namespace oracle
