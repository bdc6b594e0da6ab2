#pragma once

#include <cstdint>
#include <vector>

#include "hmlab/factored_integer.hpp"
#include "hmlab/permutation.hpp"
#include "hmlab/residue.hpp"

namespace hmlab {

/// (Z/N)^{2n} with the standard form: hyperbolic pairs (e_i, f_i) with
/// <e_i, f_i> = 1, coordinates ordered e_1..e_n, f_1..f_n.
class SymplecticSpace
{
public:
  /// `dimension` must be even and positive, `modulus` at least 2.
  SymplecticSpace(Residue modulus, std::size_t dimension);

  Residue modulus() const
  { return modulus_; }
  std::size_t dimension() const
  { return 2 * pairs_; }
  std::size_t pairs() const
  { return pairs_; }

  /// 0-based: e(0) is e_1.
  ResidueVector e(std::size_t i) const;
  ResidueVector f(std::size_t i) const;

  ResidueMatrix gram() const;
  Residue pairing(ResidueVector const &x, ResidueVector const &y) const;
  bool is_symplectic(ResidueMatrix const &m) const;

private:
  Residue modulus_;
  std::size_t pairs_;
};

/// Matrix of x -> x + lambda <x, v> v (acting on row vectors).
ResidueMatrix transvection_matrix(SymplecticSpace const &space, ResidueVector const &v,
                                  Residue lambda = 1);

/// The chain e_1, f_1, e_1+e_2, f_2, ..., e_{n-1}+e_n, f_n, e_n: consecutive
/// pairings are +-1, all others vanish. Requires count == 2n + 1.
std::vector<ResidueVector> chain_vectors(SymplecticSpace const &space, std::size_t count);

enum class ClassicalKind { Sp, PSp };

/// |Sp(dimension, Z/N)| or |PSp(dimension, Z/N)|, PSp being the quotient by
/// the scalars u with u^2 = 1.
FactoredInteger classical_order(ClassicalKind kind, std::size_t dimension, std::uint64_t modulus);

/// All u in [1, N) with u^2 = 1 mod N.
std::vector<Residue> center_scalars(Residue modulus);

/// Units of Z/N in increasing order.
std::vector<Residue> units(Residue modulus);

/// |P^m(Z/N)| = |unimodular vectors in (Z/N)^{m+1}| / |units|, from the
/// prime-power formula.
BigInt projective_count(std::size_t m, std::uint64_t modulus);

/// One canonical representative (lexicographically least unit multiple) per
/// point of the projective space of (Z/N)^dim, in lexicographic order.
std::vector<ResidueVector> projective_points(std::size_t dim, Residue modulus);

/// An enumerated set of vectors of (Z/N)^dim on which matrices act by
/// permutations: either every vector (lexicographic order) or the
/// projective points.
class VectorDomain
{
public:
  enum class Kind { all_vectors, projective };

  VectorDomain(Kind kind, std::size_t dim, Residue modulus);

  Kind kind() const
  { return kind_; }
  std::size_t dim() const
  { return dim_; }
  Residue modulus() const
  { return modulus_; }
  std::size_t size() const
  { return points_.size(); }
  ResidueVector const &point(std::size_t i) const
  { return points_[i]; }

  /// Index of `v` (of its projective class for the projective domain), or -1.
  std::int64_t index_of(ResidueVector const &v) const;

  /// Throws std::invalid_argument when `m` does not permute the domain.
  Permutation action(ResidueMatrix const &m) const;

  /// Total number of vectors a domain of this shape enumerates internally.
  static BigInt raw_size(std::size_t dim, Residue modulus);

private:
  std::size_t code(Residue const *v) const;

  Kind kind_;
  std::size_t dim_;
  Residue modulus_;
  std::vector<ResidueVector> points_;
  std::vector<std::int64_t> index_by_code_;
};

Permutation matrix_action_perm(ResidueMatrix const &m, VectorDomain::Kind domain);

} // namespace hmlab
