#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hmlab {

using Element = std::uint16_t;

enum class GroupKind { sym3, sym4, xn };

/// Which finite group a table describes: S3, S4, or X_N = N^2:S3.
struct GroupSpec
{
  GroupKind kind = GroupKind::sym3;
  unsigned n = 0; // only for xn

  static GroupSpec sym3()
  { return {GroupKind::sym3, 0}; }
  static GroupSpec sym4()
  { return {GroupKind::sym4, 0}; }
  static GroupSpec xn(unsigned n)
  { return {GroupKind::xn, n}; }

  /// "sym3", "sym4", "xn5"
  std::string str() const;
  /// Inverse of str(); throws std::invalid_argument.
  static GroupSpec parse(std::string const &s);

  friend bool operator==(GroupSpec const &, GroupSpec const &) = default;
};

/// A small finite group as an indexed multiplication table, together with
/// the conjugacy class of branch cycles (the admissible involutions) and
/// the quotient map onto S3.
///
/// Element indexing: identity is 0. S3 and S4 elements are the permutations
/// of {0,1,2} resp. {0,1,2,3} in lexicographic order of their image lists.
/// X_N elements (v, t) with v = (a, b, -a-b) are indexed t * N^2 + a * N + b,
/// t being the S3 index.
///
/// Products follow the permutation convention: mult(x, y) is "x then y".
/// In X_N, (v, t)(w, s) = (v^s + w, ts) where S3 moves coordinate i of v to
/// position s(i).
class GroupTable
{
public:
  static GroupTable build(GroupSpec spec);

  GroupSpec spec() const
  { return spec_; }
  std::size_t order() const
  { return inv_.size(); }

  Element mult(Element a, Element b) const
  { return mult_[a * order() + b]; }
  Element inv(Element a) const
  { return inv_[a]; }
  /// t^-1 a t
  Element conj(Element a, Element t) const
  { return conj_[t * order() + a]; }

  std::string const &label(Element a) const
  { return labels_[a]; }
  /// Looks up an element by label; throws when absent.
  Element find(std::string const &label) const;

  bool is_admissible(Element a) const
  { return admissible_mask_[a]; }
  std::vector<Element> const &admissible_class() const
  { return admissible_; }

  /// Image in S3 under the quotient by the normal subgroup (V4 for S4, N^2
  /// for X_N); identity map for S3. Indices refer to the sym3 table.
  Element to_s3(Element a) const
  { return to_s3_[a]; }

  /// An element with the same S3 image that lies in the fixed complement
  /// (S3 itself inside S4 as the stabilizer of 3, or v = 0 in X_N).
  Element section(Element s3_element) const
  { return section_[s3_element]; }

  /// True when the elements generate the whole group.
  bool generates(std::span<Element const> elems) const;

  Element identity() const
  { return 0; }

  /// Automorphisms identifying isomorphic covers beyond inner conjugation,
  /// identity first: the unit scalars v -> uv of X_N, nothing else for S3
  /// and S4. Each is a full element map.
  std::vector<std::vector<Element>> const &outer_automorphisms() const
  { return outer_; }

private:
  void finish();

  GroupSpec spec_;
  std::vector<Element> mult_;
  std::vector<Element> inv_;
  std::vector<Element> conj_;
  std::vector<std::string> labels_;
  std::vector<bool> admissible_mask_;
  std::vector<Element> admissible_;
  std::vector<Element> to_s3_;
  std::vector<Element> section_;
  std::vector<std::vector<Element>> outer_;
};

using GroupTablePtr = std::shared_ptr<GroupTable const>;

inline GroupTablePtr make_group(GroupSpec spec)
{
  return std::make_shared<GroupTable const>(GroupTable::build(spec));
}

} // namespace hmlab
