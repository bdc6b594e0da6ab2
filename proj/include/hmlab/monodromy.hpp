#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hmlab/braid.hpp"
#include "hmlab/nielsen.hpp"
#include "hmlab/perm_group.hpp"
#include "hmlab/symplectic.hpp"

namespace hmlab {

/// The Nielsen class set of a group (Sigma for S4, the E_N fiber for X_N)
/// together with Omega, the S3 classes for the same b, the projection
/// between them and the braid generators acting on both.
struct HurwitzSetup
{
  ClassSet sigma;
  ClassSet omega;
  std::vector<std::size_t> projection;
  std::vector<Permutation> sigma_gens;
  std::vector<Permutation> omega_gens;
  /// Omega class of the S3 seed ((12),(12),(23),...,(23)).
  std::size_t seed_omega = 0;

  std::size_t b() const
  { return sigma.b(); }
};

/// Throws std::logic_error if the projection is not equivariant.
HurwitzSetup make_hurwitz_setup(GroupSpec spec, std::size_t b,
                                EnumerationMethod method = EnumerationMethod::orbit_bfs);

/// Permutations of the quotient induced through `projection`; throws
/// std::logic_error when a permutation does not respect the fibers.
std::vector<Permutation> induced_on_quotient(std::span<Permutation const> perms,
                                             std::vector<std::size_t> const &projection,
                                             std::size_t quotient_size);

/// Class indices of the fiber over `omega_class`, in increasing order.
std::vector<Point> fiber_points(std::vector<std::size_t> const &projection, std::size_t omega_class);

/// Restriction of each element to the fiber over `omega_class`, reindexed by
/// position in fiber_points(). Throws std::invalid_argument if an element
/// moves the fiber.
std::vector<Permutation> fiber_restrict(std::vector<std::size_t> const &projection,
                                        std::span<Permutation const> elements,
                                        std::size_t omega_class);

struct MonodromyReport
{
  std::string group;
  std::size_t b = 0;
  std::size_t degree = 0;
  std::size_t omega_degree = 0;
  bool transitive = false;
  bool omega_transitive = false;
  std::optional<bool> omega_primitive;
  FactoredInteger group_order;
  FactoredInteger omega_order;
  /// |image on classes| / |image on Omega|
  FactoredInteger kernel_order;
  /// fiber size -> number of Omega classes with that fiber size
  std::map<std::size_t, std::size_t> fiber_sizes;
  std::string variant;
  std::vector<std::string> notes;
};

MonodromyReport analyze(HurwitzSetup const &setup, SchreierSimsOptions const &opts = {});

struct OmegaCrosscheck
{
  std::size_t g = 0;
  std::size_t points = 0;
  FactoredInteger expected;       // |PSp(2g+4, 3)|
  FactoredInteger chain_order;    // transvections on projective points
  FactoredInteger nielsen_order;  // braid action on S3 classes
  std::vector<std::map<std::size_t, std::size_t>> chain_cycle_types;
  std::vector<std::map<std::size_t, std::size_t>> nielsen_cycle_types;

  bool orders_match() const
  { return chain_order == expected && nielsen_order == expected; }
  bool cycle_types_match() const
  { return chain_cycle_types == nielsen_cycle_types; }
  bool ok() const
  { return orders_match() && cycle_types_match(); }
};

/// Compares the chain-transvection model of Omega (projective points of
/// (Z/3)^{2g+4}) with the Nielsen model (S3 classes, b = 2g+6).
OmegaCrosscheck omega_transvection_crosscheck(std::size_t g);

/// Transvections in the chain vectors as permutations of a vector domain.
std::vector<Permutation> chain_transvection_perms(std::size_t dimension, std::uint64_t modulus,
                                                  VectorDomain::Kind domain);

struct CommutatorWitness
{
  std::size_t b = 0;
  bool nontrivial = false;
  bool in_omega_kernel = false;
  std::size_t moved_points = 0;
  /// Omega classes whose fiber the commutator fixes pointwise
  std::vector<std::size_t> fixed_fibers;

  bool ok() const
  { return nontrivial && in_omega_kernel && !fixed_fibers.empty(); }
};

/// c = [beta_1^3, beta_2^3] on Sigma.
CommutatorWitness commutator_witness(HurwitzSetup const &setup);

struct ChainRepCheck
{
  std::size_t g = 0;
  std::uint64_t modulus = 0;
  std::size_t domain_size = 0;
  FactoredInteger computed;
  FactoredInteger expected;

  bool ok() const
  { return computed == expected; }
};

/// Largest (Z/N)^{2g+2} the chain checks will enumerate.
inline constexpr std::size_t chain_domain_limit = 10'000;

/// Order of the group generated by the 2g+3 chain transvections in
/// Sp(2g+2, Z/N), acting on all vectors, against the order formula.
/// Throws std::invalid_argument when the domain exceeds chain_domain_limit.
ChainRepCheck chain_rep_check(std::size_t g, std::uint64_t modulus);

struct CubeClosureCheck
{
  std::size_t g = 0;
  std::uint64_t modulus = 0;
  FactoredInteger full_order;
  FactoredInteger closure_order;

  bool is_full() const
  { return closure_order == full_order; }
  bool expected_full() const
  { return modulus % 3 != 0; }
  bool ok() const
  { return is_full() == expected_full(); }
};

/// Normal closure, in the chain-transvection group, of the cube of the last
/// chain transvection.
CubeClosureCheck cube_closure_check(std::size_t g, std::uint64_t modulus);

} // namespace hmlab
