#include "hmlab/group_table.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hmlab/permutation.hpp"

namespace hmlab {

namespace {

std::vector<Permutation> all_permutations(std::size_t k)
{
  std::vector<Point> images(k);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Permutation> result;
  do {
    result.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

std::string cycle_label(Permutation const &p)
{
  auto cs = p.cycles();
  if (cs.empty())
    return "()";
  std::string s;
  for (auto const &c : cs) {
    s += '(';
    for (Point x : c)
      s += static_cast<char>('1' + x);
    s += ')';
  }
  return s;
}

std::size_t index_of(std::vector<Permutation> const &perms, Permutation const &p)
{
  return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), p) - perms.begin());
}

// S4 -> S3 through the action on the three pairings {{k,3}, rest}, k = 0,1,2
Permutation pairing_action(Permutation const &s)
{
  std::vector<Point> images(3);
  for (Point k = 0; k < 3; ++k) {
    Point a = s[k], b = s[3];
    Point target;
    if (a == 3)
      target = b;
    else if (b == 3)
      target = a;
    else
      target = 3 - a - b; // {0,1,2} minus {a,b}
    images[k] = target;
  }
  return Permutation(std::move(images));
}

} // namespace

std::string GroupSpec::str() const
{
  switch (kind) {
  case GroupKind::sym3:
    return "sym3";
  case GroupKind::sym4:
    return "sym4";
  case GroupKind::xn:
    return "xn" + std::to_string(n);
  }
  return "?";
}

GroupSpec GroupSpec::parse(std::string const &s)
{
  if (s == "sym3")
    return sym3();
  if (s == "sym4")
    return sym4();
  if (s.size() > 2 && s.compare(0, 2, "xn") == 0 &&
      std::all_of(s.begin() + 2, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    unsigned long n = std::stoul(s.substr(2));
    if (n < 2 || n > 64)
      throw std::invalid_argument("group kind xnN needs 2 <= N <= 64");
    return xn(static_cast<unsigned>(n));
  }
  throw std::invalid_argument("unknown group kind '" + s + "' (expected sym3, sym4 or xnN)");
}

GroupTable GroupTable::build(GroupSpec spec)
{
  GroupTable g;
  g.spec_ = spec;

  auto const s3 = all_permutations(3);

  if (spec.kind == GroupKind::sym3 || spec.kind == GroupKind::sym4) {
    auto const perms = all_permutations(spec.kind == GroupKind::sym3 ? 3 : 4);
    std::size_t const n = perms.size();
    g.mult_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        g.mult_[a * n + b] = static_cast<Element>(index_of(perms, compose(perms[a], perms[b])));
      g.labels_.push_back(cycle_label(perms[a]));
      Permutation image = spec.kind == GroupKind::sym3 ? perms[a] : pairing_action(perms[a]);
      g.to_s3_.push_back(static_cast<Element>(index_of(s3, image)));
    }
    for (auto const &t : s3) {
      std::vector<Point> images(t.images().begin(), t.images().end());
      if (spec.kind == GroupKind::sym4)
        images.push_back(3);
      g.section_.push_back(static_cast<Element>(index_of(perms, Permutation(images))));
    }
  } else {
    auto const N = spec.n;
    if (N < 2)
      throw std::invalid_argument("GroupTable: X_N needs N >= 2");
    std::size_t const m = static_cast<std::size_t>(N) * N;
    std::size_t const n = 6 * m;
    if (n > 65535)
      throw std::invalid_argument("GroupTable: X_N too large");

    auto coords = [&](std::size_t idx) {
      std::size_t t = idx / m, a = (idx % m) / N, b = idx % N;
      return std::array<std::size_t, 4>{t, a, b, (2 * N - a - b) % N};
    };
    g.mult_.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      auto [t, a, b, c] = coords(x);
      std::size_t v[3] = {a, b, c};
      for (std::size_t y = 0; y < n; ++y) {
        auto [s, a2, b2, c2] = coords(y);
        std::size_t w[3] = {a2, b2, c2};
        std::size_t r[3];
        for (std::size_t i = 0; i < 3; ++i)
          r[s3[s][static_cast<Point>(i)]] = v[i];
        for (std::size_t i = 0; i < 3; ++i)
          r[i] = (r[i] + w[i]) % N;
        std::size_t ts = index_of(s3, compose(s3[t], s3[s]));
        g.mult_[x * n + y] = static_cast<Element>(ts * m + r[0] * N + r[1]);
      }
      std::ostringstream label;
      label << '[' << a << ',' << b << ',' << c << ']' << cycle_label(s3[t]);
      g.labels_.push_back(label.str());
      g.to_s3_.push_back(static_cast<Element>(t));
    }
    for (std::size_t t = 0; t < 6; ++t)
      g.section_.push_back(static_cast<Element>(t * m));
    // u commutes with the S3 action, so (v, t) -> (uv, t) is an automorphism
    for (std::size_t u = 2; u < N; ++u) {
      if (std::gcd(u, std::size_t(N)) != 1)
        continue;
      std::vector<Element> map(n);
      for (std::size_t x = 0; x < n; ++x) {
        auto [t, a, b, c] = coords(x);
        map[x] = static_cast<Element>(t * m + (u * a % N) * N + u * b % N);
      }
      g.outer_.push_back(std::move(map));
    }
  }
  std::vector<Element> id(g.labels_.size());
  std::iota(id.begin(), id.end(), Element(0));
  g.outer_.insert(g.outer_.begin(), std::move(id));
  g.finish();
  return g;
}

void GroupTable::finish()
{
  std::size_t const n = labels_.size();
  inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (mult_[a] != a || mult_[a * n] != a)
      throw std::logic_error("GroupTable: index 0 is not the identity");
    for (std::size_t b = 0; b < n; ++b) {
      if (mult_[a * n + b] == 0)
        inv_[a] = static_cast<Element>(b);
    }
  }
  conj_.resize(n * n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t a = 0; a < n; ++a)
      conj_[t * n + a] = mult(mult(inv_[t], static_cast<Element>(a)), static_cast<Element>(t));
  }

  // branch cycles: involutions whose S3 image is a transposition
  auto const s3 = all_permutations(3);
  admissible_mask_.assign(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    bool involution = a != 0 && mult(static_cast<Element>(a), static_cast<Element>(a)) == 0;
    auto type = s3[to_s3_[a]].cycle_type();
    bool transposition = type.count(2) && type.at(2) == 1;
    if (involution && transposition) {
      admissible_mask_[a] = true;
      admissible_.push_back(static_cast<Element>(a));
    }
  }
}

Element GroupTable::find(std::string const &label) const
{
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw std::invalid_argument("GroupTable: no element labelled " + label);
  return static_cast<Element>(it - labels_.begin());
}

bool GroupTable::generates(std::span<Element const> elems) const
{
  std::size_t const n = order();
  std::vector<char> in(n, 0);
  std::vector<Element> members{0};
  in[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Element e : elems) {
      Element y = mult(members[head], e);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return members.size() == n;
}

} // namespace hmlab
