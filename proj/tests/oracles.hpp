#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// library's group algorithms: groups are closed element by element and
// Nielsen classes are counted with a union-find over all tuples.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<std::uint32_t>;

inline Perm mul(Perm const &p, Perm const &q) // p then q
{
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[i] = q[p[i]];
  return r;
}

/// Order of <gens> by listing every element; 0 once past `cap`.
inline std::size_t closure_size(std::vector<Perm> const &gens, std::size_t cap = 100'000)
{
  Perm id(gens.front().size());
  std::iota(id.begin(), id.end(), 0u);
  std::set<Perm> seen{id};
  std::vector<Perm> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto const &g : gens) {
      Perm p = mul(queue[i], g);
      if (seen.insert(p).second) {
        if (seen.size() > cap)
          return 0;
        queue.push_back(p);
      }
    }
  return seen.size();
}

struct UnionFind
{
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n)
  { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x)
  {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b)
  { parent[find(a)] = find(b); }
};

/// A finite group given by an explicit element list and multiplication,
/// built independently of hmlab::GroupTable.
struct SmallGroup
{
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> mult;
  std::vector<bool> branch; // admissible involutions
  /// element maps to quotient by on top of conjugation (identity first)
  std::vector<std::vector<std::size_t>> extra_autos;

  std::size_t identity() const
  {
    for (std::size_t e = 0; e < order; ++e)
      if (mult[e][e] == e)
        return e;
    return 0;
  }
  std::size_t inverse(std::size_t a) const
  {
    for (std::size_t x = 0; x < order; ++x)
      if (mult[a][x] == identity())
        return x;
    return 0;
  }
  bool generates(std::vector<std::size_t> const &elems) const
  {
    std::vector<bool> seen(order, false);
    std::size_t const e = identity();
    seen[e] = true;
    std::vector<std::size_t> q{e};
    for (std::size_t i = 0; i < q.size(); ++i)
      for (auto x : elems)
        if (!seen[mult[q[i]][x]]) {
          seen[mult[q[i]][x]] = true;
          q.push_back(mult[q[i]][x]);
        }
    return q.size() == order;
  }
};

/// S_n on n points, with transpositions as branch cycles.
inline SmallGroup symmetric(std::size_t n)
{
  std::vector<Perm> els;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  do
    els.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  SmallGroup g;
  g.order = els.size();
  g.mult.assign(g.order, std::vector<std::size_t>(g.order));
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < g.order; ++b)
      g.mult[a][b] = std::find(els.begin(), els.end(), mul(els[a], els[b])) - els.begin();
  for (auto const &e : els) {
    std::size_t moved = 0;
    for (std::size_t i = 0; i < n; ++i)
      moved += e[i] != i;
    g.branch.push_back(moved == 2);
  }
  Perm id(g.order);
  std::iota(id.begin(), id.end(), 0u);
  g.extra_autos.push_back({id.begin(), id.end()});
  return g;
}

/// N^2:S3 realised as affine maps x -> x.s + v on zero-sum triples over
/// Z/N, i.e. as permutations of the N^2 triples; branch cycles are
/// involutions whose linear part is a transposition.
inline SmallGroup xn(std::uint32_t N)
{
  std::vector<std::array<std::uint32_t, 3>> pts;
  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = 0; b < N; ++b)
      pts.push_back({a, b, (2 * N - a - b) % N});
  auto index = [&](std::array<std::uint32_t, 3> const &x) {
    return static_cast<std::uint32_t>(std::find(pts.begin(), pts.end(), x) - pts.begin());
  };
  std::vector<std::array<std::uint32_t, 3>> s3;
  std::array<std::uint32_t, 3> s{0, 1, 2};
  do
    s3.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));

  std::vector<Perm> els;
  std::vector<bool> reflection;
  std::vector<std::pair<std::size_t, std::size_t>> parts; // (s3 index, translation index)
  for (std::size_t si = 0; si < s3.size(); ++si)
    for (std::size_t vi = 0; vi < pts.size(); ++vi) {
      Perm p(pts.size());
      for (std::size_t xi = 0; xi < pts.size(); ++xi) {
        std::array<std::uint32_t, 3> y{};
        for (int i = 0; i < 3; ++i)
          y[s3[si][i]] = pts[xi][i];
        for (int i = 0; i < 3; ++i)
          y[i] = (y[i] + pts[vi][i]) % N;
        p[xi] = index(y);
      }
      els.push_back(p);
      int fixed = 0;
      for (int i = 0; i < 3; ++i)
        fixed += s3[si][i] == static_cast<std::uint32_t>(i);
      reflection.push_back(fixed == 1);
      parts.emplace_back(si, vi);
    }
  SmallGroup g;
  g.order = els.size();
  std::map<Perm, std::size_t> where;
  for (std::size_t i = 0; i < els.size(); ++i)
    where[els[i]] = i;
  g.mult.assign(g.order, std::vector<std::size_t>(g.order));
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < g.order; ++b)
      g.mult[a][b] = where.at(mul(els[a], els[b]));
  std::size_t const e = g.identity();
  for (std::size_t a = 0; a < g.order; ++a)
    g.branch.push_back(reflection[a] && g.mult[a][a] == e);
  // unit scalars: conjugation of the affine map by x -> ux
  for (std::uint32_t u = 1; u < N; ++u) {
    if (std::gcd(u, N) != 1)
      continue;
    std::vector<std::size_t> m(g.order);
    for (std::size_t a = 0; a < g.order; ++a) {
      auto [si, vi] = parts[a];
      std::array<std::uint32_t, 3> v = pts[vi];
      for (auto &c : v)
        c = c * u % N;
      m[a] = si * pts.size() + index(v);
    }
    g.extra_autos.push_back(m);
  }
  return g;
}

/// Number of b-tuples of branch cycles with product 1 generating G, up to
/// simultaneous conjugation and the extra automorphisms.
inline std::size_t nielsen_count(SmallGroup const &g, std::size_t b, bool use_extra = true)
{
  std::vector<std::size_t> cls;
  for (std::size_t a = 0; a < g.order; ++a)
    if (g.branch[a])
      cls.push_back(a);
  std::size_t const e = g.identity();
  std::vector<std::size_t> inv(g.order);
  for (std::size_t a = 0; a < g.order; ++a)
    inv[a] = g.inverse(a);

  std::map<std::vector<std::size_t>, std::size_t> id;
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> t(b), digit(b - 1, 0);
  while (true) {
    std::size_t p = e;
    for (std::size_t i = 0; i + 1 < b; ++i) {
      t[i] = cls[digit[i]];
      p = g.mult[p][t[i]];
    }
    t[b - 1] = inv[p];
    if (g.branch[t[b - 1]] && g.generates(t)) {
      id.emplace(t, tuples.size());
      tuples.push_back(t);
    }
    std::size_t pos = b - 1;
    while (pos-- > 0) {
      if (++digit[pos] < cls.size())
        break;
      digit[pos] = 0;
    }
    if (pos == std::size_t(-1))
      break;
  }

  // joining along a generating set of conjugators is enough for the orbits
  std::vector<std::size_t> conjugators;
  for (std::size_t x = 0; x < g.order && conjugators.empty(); ++x)
    for (std::size_t y = 0; y < g.order; ++y)
      if (g.generates({x, y})) {
        conjugators = {x, y};
        break;
      }
  UnionFind uf(tuples.size());
  std::size_t const nautos = use_extra ? g.extra_autos.size() : 1;
  std::vector<std::size_t> c(b);
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    for (std::size_t x : conjugators) {
      for (std::size_t i = 0; i < b; ++i)
        c[i] = g.mult[g.mult[inv[x]][tuples[k][i]]][x];
      uf.unite(k, id.at(c));
    }
    for (std::size_t a = 1; a < nautos; ++a) {
      for (std::size_t i = 0; i < b; ++i)
        c[i] = g.extra_autos[a][tuples[k][i]];
      uf.unite(k, id.at(c));
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t k = 0; k < tuples.size(); ++k)
    roots.insert(uf.find(k));
  return roots.size();
}

/// |Sp(2n, Z/N)| by testing every matrix; only for tiny N^(4n^2).
inline std::size_t symplectic_count(std::size_t n, std::uint32_t N)
{
  std::size_t const d = 2 * n;
  std::vector<std::int64_t> J(d * d, 0);
  for (std::size_t i = 0; i < n; ++i) {
    J[i * d + n + i] = 1;
    J[(n + i) * d + i] = N - 1;
  }
  std::size_t count = 0;
  std::vector<std::int64_t> m(d * d, 0);
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < d && ok; ++r)
      for (std::size_t c = 0; c < d && ok; ++c) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            s += m[i * d + r] * J[i * d + j] * m[j * d + c];
        ok = s % N == J[r * d + c];
      }
    count += ok;
    std::size_t k = 0;
    for (; k < m.size(); ++k) {
      if (++m[k] < static_cast<std::int64_t>(N))
        break;
      m[k] = 0;
    }
    if (k == m.size())
      break;
  }
  return count;
}

/// Whether two multiplication tables are isomorphic; tries every image of
/// a two-element generating set.
inline bool isomorphic(SmallGroup const &a, SmallGroup const &b)
{
  if (a.order != b.order)
    return false;
  std::vector<std::size_t> gens;
  for (std::size_t x = 0; x < a.order && gens.empty(); ++x)
    for (std::size_t y = 0; y < a.order; ++y)
      if (a.generates({x, y})) {
        gens = {x, y};
        break;
      }
  for (std::size_t u = 0; u < b.order; ++u)
    for (std::size_t v = 0; v < b.order; ++v) {
      std::vector<long> phi(a.order, -1);
      phi[a.identity()] = static_cast<long>(b.identity());
      std::vector<std::size_t> q{a.identity()};
      bool ok = true;
      for (std::size_t i = 0; i < q.size() && ok; ++i)
        for (std::size_t k = 0; k < 2 && ok; ++k) {
          std::size_t x = a.mult[q[i]][gens[k]];
          std::size_t img = b.mult[phi[q[i]]][k == 0 ? u : v];
          if (phi[x] < 0) {
            phi[x] = static_cast<long>(img);
            q.push_back(x);
          } else {
            ok = phi[x] == static_cast<long>(img);
          }
        }
      if (!ok || q.size() != a.order)
        continue;
      std::set<long> image(phi.begin(), phi.end());
      if (image.size() != a.order)
        continue;
      bool hom = true;
      for (std::size_t x = 0; x < a.order && hom; ++x)
        for (std::size_t y = 0; y < a.order && hom; ++y)
          hom = phi[a.mult[x][y]] == static_cast<long>(b.mult[phi[x]][phi[y]]);
      if (hom)
        return true;
    }
  return false;
}

} // namespace oracle
