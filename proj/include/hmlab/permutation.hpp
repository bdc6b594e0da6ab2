#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hmlab {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as the image of each point.
///
/// Products are written left to right and act on the right: in
/// `compose(p, q)` the permutation `p` is applied first. Every module uses
/// this convention.
class Permutation
{
public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const
  { return images_.size(); }

  Point operator[](Point x) const
  { return images_[x]; }

  std::span<Point const> images() const
  { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long e) const;

  /// Order of the permutation as an element (lcm of cycle lengths).
  std::uint64_t order() const;

  /// cycle length -> multiplicity, fixed points included as length 1
  std::map<std::size_t, std::size_t> cycle_type() const;

  /// Nontrivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  std::string str() const;

  friend auto operator<=>(Permutation const &, Permutation const &) = default;
  friend bool operator==(Permutation const &, Permutation const &) = default;

private:
  friend Permutation compose(Permutation const &p, Permutation const &q);

  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked)
  : images_(std::move(images))
  {}

  std::vector<Point> images_;
};

/// The product "p then q": result[x] = q[p[x]]. Throws on degree mismatch.
Permutation compose(Permutation const &p, Permutation const &q);

/// Left-to-right product of a sequence; `degree` is used when it is empty.
Permutation compose_all(std::span<Permutation const> perms, std::size_t degree);

/// [a, b] = a^-1 b^-1 a b
Permutation commutator(Permutation const &a, Permutation const &b);

/// t^-1 p t
Permutation conjugate(Permutation const &p, Permutation const &t);

/// Orbit of `start` under `gens`, in breadth-first discovery order.
std::vector<Point> orbit(Point start, std::span<Permutation const> gens);

/// All orbits, each in BFS order, ordered by their least point.
std::vector<std::vector<Point>> orbits(std::span<Permutation const> gens, std::size_t degree);

bool is_transitive(std::span<Permutation const> gens, std::size_t degree);

} // namespace hmlab
