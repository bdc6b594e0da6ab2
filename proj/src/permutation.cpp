#include "hmlab/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hmlab {

Permutation::Permutation(std::vector<Point> images)
: images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles)
{
  std::vector<std::vector<Point>> cs;
  for (auto const &c : cycles)
    cs.emplace_back(c);
  return from_cycles(degree, cs);
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (auto const &c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || used[c[i]])
        throw std::invalid_argument("Permutation: cycles are not disjoint or out of range");
      used[c[i]] = true;
      images[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::pow(long long e) const
{
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Permutation result = identity(degree());
  while (k) {
    if (k & 1u)
      result = compose(result, base);
    base = compose(base, base);
    k >>= 1u;
  }
  return result;
}

std::uint64_t Permutation::order() const
{
  std::uint64_t result = 1;
  for (auto const &[len, mult] : cycle_type())
    result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

std::map<std::size_t, std::size_t> Permutation::cycle_type() const
{
  std::map<std::size_t, std::size_t> type;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    ++type[len];
  }
  return type;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    std::vector<Point> c;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    result.push_back(std::move(c));
  }
  return result;
}

std::string Permutation::str() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (auto const &c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = q.images_[p.images_[i]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation compose_all(std::span<Permutation const> perms, std::size_t degree)
{
  Permutation result = Permutation::identity(degree);
  for (auto const &p : perms)
    result = compose(result, p);
  return result;
}

Permutation commutator(Permutation const &a, Permutation const &b)
{
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

Permutation conjugate(Permutation const &p, Permutation const &t)
{
  return compose(compose(t.inverse(), p), t);
}

std::vector<Point> orbit(Point start, std::span<Permutation const> gens)
{
  std::size_t degree = gens.empty() ? start + 1u : gens.front().degree();
  if (start >= degree)
    throw std::invalid_argument("orbit: start point out of range");

  std::vector<Point> result{start};
  std::vector<bool> seen(degree, false);
  seen[start] = true;
  for (std::size_t head = 0; head < result.size(); ++head) {
    for (auto const &g : gens) {
      Point y = g[result[head]];
      if (!seen[y]) {
        seen[y] = true;
        result.push_back(y);
      }
    }
  }
  return result;
}

std::vector<std::vector<Point>> orbits(std::span<Permutation const> gens, std::size_t degree)
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(degree, false);
  for (Point x = 0; x < degree; ++x) {
    if (seen[x])
      continue;
    auto o = gens.empty() ? std::vector<Point>{x} : orbit(x, gens);
    for (Point y : o)
      seen[y] = true;
    result.push_back(std::move(o));
  }
  return result;
}

bool is_transitive(std::span<Permutation const> gens, std::size_t degree)
{
  if (degree <= 1)
    return true;
  if (gens.empty())
    return false;
  return orbit(0, gens).size() == degree;
}

} // namespace hmlab
