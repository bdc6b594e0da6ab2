#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hmlab/group_table.hpp"

namespace hmlab {

/// Entries of a Nielsen tuple, as element indices into a GroupTable.
using Tuple = std::vector<Element>;

enum class MoveDirection { forward, inverse };

/// Product of the entries, left to right.
Element tuple_product(GroupTable const &g, Tuple const &t);

/// Every entry a branch cycle, product 1, entries generate the group.
bool is_admissible(GroupTable const &g, Tuple const &t);

/// Simultaneous conjugation x^-1 t_i x.
Tuple conjugate_tuple(GroupTable const &g, Tuple const &t, Element x);

/// Hurwitz move at 1-based position i (1 <= i <= b-1). Forward replaces
/// (s_i, s_{i+1}) by (s_{i+1}, s_{i+1}^-1 s_i s_{i+1}); inverse undoes it.
Tuple hurwitz_move(GroupTable const &g, Tuple const &t, std::size_t i,
                   MoveDirection dir = MoveDirection::forward);

/// Lexicographically least image under simultaneous conjugation composed
/// with the table's outer automorphisms (unit scalars for X_N), i.e. one
/// representative per isomorphism class of covers. Throws on an
/// inadmissible tuple.
Tuple canonicalize(GroupTable const &g, Tuple const &t);

/// As canonicalize, without the admissibility check.
Tuple canonicalize_unchecked(GroupTable const &g, Tuple const &t);

/// Seed tuple with s_1 = s_2 = (12), s_3 = ... = s_b = (23) for S3; for S4
/// and X_N the first admissible entrywise lift of that tuple, lifts being
/// tried section-first (see GroupTable::section) and then by index.
Tuple seed_tuple(GroupTable const &g, std::size_t b);

std::string tuple_str(GroupTable const &g, Tuple const &t);

enum class EnumerationMethod { orbit_bfs, exhaustive };

/// The Nielsen classes of (group, b): canonical representatives in
/// lexicographic order, which is also the permutation-domain indexing.
class ClassSet
{
public:
  ClassSet(GroupTablePtr group, std::size_t b, std::vector<Tuple> representatives);

  GroupTablePtr const &group_ptr() const
  { return group_; }
  GroupTable const &group() const
  { return *group_; }
  std::size_t b() const
  { return b_; }
  std::size_t size() const
  { return reps_.size(); }
  Tuple const &representative(std::size_t i) const
  { return reps_[i]; }
  std::vector<Tuple> const &representatives() const
  { return reps_; }

  /// Index of a canonical tuple, if present.
  std::optional<std::size_t> find_canonical(Tuple const &canonical) const;
  /// Canonicalizes `t` first.
  std::optional<std::size_t> index_of(Tuple const &t) const;

  friend bool operator==(ClassSet const &a, ClassSet const &b)
  { return a.group_->spec() == b.group_->spec() && a.b_ == b.b_ && a.reps_ == b.reps_; }

private:
  GroupTablePtr group_;
  std::size_t b_;
  std::vector<Tuple> reps_;
  std::map<Tuple, std::size_t> index_;
};

/// Throws std::invalid_argument for odd b or b < 4, and std::runtime_error
/// when no admissible seed exists.
ClassSet enumerate_classes(GroupTablePtr group, std::size_t b, EnumerationMethod method);

/// Class index in `omega` (an S3 class set with the same b) of each class of
/// `cs`, through the entrywise quotient to S3.
std::vector<std::size_t> project_to_s3(ClassSet const &cs, ClassSet const &omega);

/// Cache file: header "nielsen-cache v1 <group-kind> <b> <count>", then one
/// canonical tuple per line as space-separated element indices.
void write_class_cache(std::ostream &os, ClassSet const &cs);
/// Throws std::runtime_error on malformed input or non-canonical entries.
ClassSet read_class_cache(std::istream &is);

/// Worker threads for exhaustive enumeration: HMLAB_THREADS if set, else 1.
unsigned configured_threads();

} // namespace hmlab
