#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmlab/factored_integer.hpp"
#include "hmlab/permutation.hpp"

namespace hmlab {

/// Thrown when a computation runs past its deadline. Carries what had been
/// established so far.
class BudgetExceeded : public std::runtime_error
{
public:
  BudgetExceeded(std::string const &what, std::string partial)
  : std::runtime_error(what), partial_(std::move(partial))
  {}

  std::string const &partial() const
  { return partial_; }

private:
  std::string partial_;
};

using Clock = std::chrono::steady_clock;

struct SchreierSimsOptions
{
  enum class Variant { deterministic, randomized_verified };

  Variant variant = Variant::deterministic;
  std::optional<Clock::time_point> deadline;
  std::uint64_t seed = 0x5eed;
  /// Consecutive trivially-sifting random elements before the randomized
  /// phase hands over to verification.
  unsigned random_streak = 48;
};

std::string to_string(SchreierSimsOptions::Variant v);

/// A permutation group held as a base and strong generating set.
///
/// Built once by Schreier-Sims and immutable afterwards; order and
/// membership are exact. Each stabilizer-chain level stores explicit coset
/// representatives and their inverses.
class PermGroup
{
public:
  PermGroup() = default;

  static PermGroup trivial(std::size_t degree);

  /// Throws std::invalid_argument if a generator has the wrong degree.
  static PermGroup build(std::span<Permutation const> gens, std::size_t degree,
                         SchreierSimsOptions const &opts = {});

  /// The group generated by this one and `extra`.
  PermGroup with_generators(std::span<Permutation const> extra,
                            SchreierSimsOptions const &opts = {}) const;

  std::size_t degree() const
  { return degree_; }

  /// Non-identity generators the group was built from.
  std::vector<Permutation> const &generators() const
  { return generators_; }

  std::vector<Permutation> const &strong_generators() const
  { return strong_; }

  std::vector<Point> base() const;
  std::size_t base_length() const
  { return levels_.size(); }
  std::vector<Point> const &basic_orbit(std::size_t level) const
  { return levels_.at(level).orbit; }
  std::vector<std::size_t> basic_orbit_sizes() const;

  /// Coset representative at `level` mapping the base point to `point`.
  Permutation const &transversal(std::size_t level, Point point) const;

  /// Generators of the pointwise stabilizer of the first `level` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;

  BigInt order() const;
  FactoredInteger factored_order() const;

  bool is_trivial() const
  { return levels_.empty(); }

  bool contains(Permutation const &g) const;

  bool is_transitive() const;

  SchreierSimsOptions::Variant variant() const
  { return variant_; }

private:
  struct Level
  {
    Point base_point = 0;
    std::vector<std::size_t> gens;       // indices into strong_
    std::vector<Point> orbit;            // BFS order
    std::vector<std::int32_t> position;  // point -> index in orbit, or -1
    std::vector<Permutation> reps;       // base_point^reps[k] == orbit[k]
    std::vector<Permutation> inv_reps;
    std::vector<std::size_t> checked;    // per orbit index: gens already used
    std::vector<std::size_t> tree_parent;  // per orbit index: orbit index it was reached from
    std::vector<std::size_t> tree_gen;     // per orbit index: index into gens used to reach it
  };

  void add_level(Point base_point);
  void add_generator_to_level(std::size_t level, std::size_t gen_index);
  /// Adds `h` as a strong generator at levels first..stop, appending a base
  /// point when `stop` is past the end.
  void install(std::vector<Point> const &h, std::size_t first, std::size_t stop);
  /// Sifts `h` in place starting at `level`; returns the level where it stopped
  /// (levels_.size() if it passed through).
  std::size_t sift(std::vector<Point> &h, std::size_t level, std::vector<Point> &scratch) const;
  void run_schreier_sims(std::size_t start_level, SchreierSimsOptions const &opts);
  void run_random_phase(SchreierSimsOptions const &opts);
  [[noreturn]] void budget_exceeded() const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
  SchreierSimsOptions::Variant variant_ = SchreierSimsOptions::Variant::deterministic;
};

/// Smallest subgroup of `group` containing `seeds` that is normalized by
/// every generator of `group`.
PermGroup normal_closure(PermGroup const &group, std::span<Permutation const> seeds,
                         SchreierSimsOptions const &opts = {});

/// Normal closure of the commutators of all generator pairs.
PermGroup derived_subgroup(PermGroup const &group, SchreierSimsOptions const &opts = {});

struct PrimitivityResult
{
  bool primitive = true;
  /// A block system with the smallest nontrivial blocks, when imprimitive.
  std::optional<std::vector<std::vector<Point>>> blocks;
};

/// Throws std::invalid_argument if the group is not transitive.
PrimitivityResult is_primitive(PermGroup const &group);

} // namespace hmlab
