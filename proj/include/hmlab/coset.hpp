#pragma once

#include <cstddef>
#include <vector>

#include "hmlab/braid.hpp"
#include "hmlab/monodromy.hpp"
#include "hmlab/perm_group.hpp"

namespace hmlab {

/// Membership test for H2*, the kernel of H2 -> S -> Z/2, where H2 is the
/// stabilizer of the seed Omega class w and S the group induced on the
/// fiber over w.
///
/// S is generated by the fiber restrictions of beta_1, beta_3..beta_{b-1}.
/// For g = 0, 1 it is S3 resp. S6, whose sign kernel is the derived
/// subgroup, so the Z/2 quotient is tested as "restriction lies outside
/// [S, S]". For g > 1 S is simple and there is no such quotient.
class H2StarContext
{
public:
  /// Requires Sigma over sym4 with b = 6 or 8. Throws std::invalid_argument
  /// otherwise.
  static H2StarContext build(HurwitzSetup const &setup);

  std::size_t genus() const
  { return genus_; }
  std::size_t omega_class() const
  { return omega_class_; }
  std::vector<Point> const &fiber() const
  { return fiber_; }
  /// S
  PermGroup const &fiber_group() const
  { return fiber_group_; }
  /// [S, S]
  PermGroup const &derived_group() const
  { return derived_; }

  /// Omega class the base class w is sent to by gamma.
  std::size_t omega_image(Permutation const &gamma) const;

  /// Restriction to the fiber over w; gamma must fix w.
  Permutation restriction(Permutation const &gamma) const;

  bool contains(Permutation const &gamma) const;

  /// gamma1 gamma2^-1 in H2*, i.e. H2* gamma1 = H2* gamma2.
  bool same_coset(Permutation const &gamma1, Permutation const &gamma2) const;

private:
  H2StarContext() = default;
  bool restriction_in_kernel(std::vector<Point> const &local_images) const;

  std::size_t genus_ = 0;
  std::size_t omega_class_ = 0;
  std::vector<std::size_t> projection_;
  std::vector<Point> fiber_;
  std::vector<std::int64_t> local_;  // Sigma point -> fiber position over w, or -1
  PermGroup fiber_group_;
  PermGroup derived_;
};

struct CosetRepresentation
{
  std::size_t genus = 0;
  std::size_t degree = 0;
  /// beta_1..beta_{b-1} acting on the cosets H2* gamma.
  std::vector<Permutation> generators;
  /// First-discovered braid word of each coset representative.
  std::vector<BraidWord> words;
  PermGroup image;
};

/// Breadth-first construction of the cosets of H2* in G2 (right cosets,
/// since permutations act on the right), with generators tried in index
/// order and both signs. Throws BudgetExceeded after `coset_budget` cosets.
CosetRepresentation coset_representation(HurwitzSetup const &setup,
                                         std::size_t coset_budget = 100'000,
                                         SchreierSimsOptions const &opts = {});

} // namespace hmlab
