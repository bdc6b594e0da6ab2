#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hmlab {

using Residue = std::int64_t;

/// Reduces `a` into [0, n).
inline Residue mod(Residue a, Residue n)
{
  Residue r = a % n;
  return r < 0 ? r + n : r;
}

/// An element of (Z/N)^d with entries normalized to [0, N).
class ResidueVector
{
public:
  ResidueVector(Residue modulus, std::vector<Residue> entries);
  static ResidueVector zero(Residue modulus, std::size_t dim);
  /// i-th standard basis vector
  static ResidueVector unit(Residue modulus, std::size_t dim, std::size_t i);

  Residue modulus() const
  { return modulus_; }
  std::size_t dim() const
  { return entries_.size(); }
  Residue operator[](std::size_t i) const
  { return entries_[i]; }
  std::vector<Residue> const &entries() const
  { return entries_; }

  bool is_zero() const;
  /// gcd of the entries and N is 1
  bool is_unimodular() const;

  ResidueVector operator+(ResidueVector const &o) const;
  ResidueVector operator-(ResidueVector const &o) const;
  ResidueVector scaled(Residue s) const;

  std::string str() const;

  friend auto operator<=>(ResidueVector const &, ResidueVector const &) = default;

private:
  Residue modulus_;
  std::vector<Residue> entries_;
};

/// A square matrix over Z/N acting on row vectors from the right, so that
/// the product A * B means "A then B".
class ResidueMatrix
{
public:
  ResidueMatrix(Residue modulus, std::size_t dim, std::vector<Residue> entries);
  static ResidueMatrix identity(Residue modulus, std::size_t dim);
  static ResidueMatrix scalar(Residue modulus, std::size_t dim, Residue s);

  Residue modulus() const
  { return modulus_; }
  std::size_t dim() const
  { return dim_; }
  Residue operator()(std::size_t r, std::size_t c) const
  { return entries_[r * dim_ + c]; }

  ResidueMatrix transpose() const;
  ResidueMatrix operator*(ResidueMatrix const &o) const;
  ResidueMatrix pow(unsigned e) const;
  bool is_identity() const;

  /// v * M
  ResidueVector apply(ResidueVector const &v) const;
  /// v * M on raw entries, written into `out`
  void apply(Residue const *v, Residue *out) const;

  std::string str() const;

  friend bool operator==(ResidueMatrix const &, ResidueMatrix const &) = default;

private:
  Residue modulus_;
  std::size_t dim_;
  std::vector<Residue> entries_;
};

} // namespace hmlab
