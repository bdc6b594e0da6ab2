#include "hmlab/symplectic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hmlab {

SymplecticSpace::SymplecticSpace(Residue modulus, std::size_t dimension)
: modulus_(modulus), pairs_(dimension / 2)
{
  if (modulus < 2)
    throw std::invalid_argument("SymplecticSpace: modulus must be at least 2");
  if (dimension == 0 || dimension % 2)
    throw std::invalid_argument("SymplecticSpace: dimension must be even and positive");
}

ResidueVector SymplecticSpace::e(std::size_t i) const
{
  return ResidueVector::unit(modulus_, dimension(), i);
}

ResidueVector SymplecticSpace::f(std::size_t i) const
{
  return ResidueVector::unit(modulus_, dimension(), pairs_ + i);
}

ResidueMatrix SymplecticSpace::gram() const
{
  std::size_t const d = dimension();
  std::vector<Residue> j(d * d, 0);
  for (std::size_t i = 0; i < pairs_; ++i) {
    j[i * d + pairs_ + i] = 1;
    j[(pairs_ + i) * d + i] = -1;
  }
  return ResidueMatrix(modulus_, d, std::move(j));
}

Residue SymplecticSpace::pairing(ResidueVector const &x, ResidueVector const &y) const
{
  if (x.dim() != dimension() || y.dim() != dimension() || x.modulus() != modulus_ ||
      y.modulus() != modulus_)
    throw std::invalid_argument("SymplecticSpace::pairing: dimension or modulus mismatch");
  Residue s = 0;
  for (std::size_t i = 0; i < pairs_; ++i)
    s += x[i] * y[pairs_ + i] - x[pairs_ + i] * y[i];
  return mod(s, modulus_);
}

bool SymplecticSpace::is_symplectic(ResidueMatrix const &m) const
{
  if (m.dim() != dimension() || m.modulus() != modulus_)
    return false;
  ResidueMatrix j = gram();
  return m.transpose() * j * m == j;
}

ResidueMatrix transvection_matrix(SymplecticSpace const &space, ResidueVector const &v,
                                  Residue lambda)
{
  std::size_t const d = space.dimension();
  Residue const n = space.modulus();
  if (v.dim() != d || v.modulus() != n)
    throw std::invalid_argument("transvection_matrix: vector does not belong to the space");

  // row r is the image of the r-th basis vector: b_r + lambda <b_r, v> v
  std::vector<Residue> m(d * d, 0);
  for (std::size_t r = 0; r < d; ++r) {
    Residue pr = space.pairing(ResidueVector::unit(n, d, r), v);
    for (std::size_t c = 0; c < d; ++c)
      m[r * d + c] = (r == c) + mod(lambda, n) * pr % n * v[c];
  }
  return ResidueMatrix(n, d, std::move(m));
}

std::vector<ResidueVector> chain_vectors(SymplecticSpace const &space, std::size_t count)
{
  std::size_t const n = space.pairs();
  if (count != 2 * n + 1)
    throw std::invalid_argument("chain_vectors: count must be dimension + 1");

  std::vector<ResidueVector> chain;
  chain.push_back(space.e(0));
  for (std::size_t k = 0; k < n; ++k) {
    chain.push_back(space.f(k));
    if (k + 1 < n)
      chain.push_back(space.e(k) + space.e(k + 1));
  }
  chain.push_back(space.e(n - 1));
  return chain;
}

FactoredInteger classical_order(ClassicalKind kind, std::size_t dimension, std::uint64_t modulus)
{
  if (modulus < 2)
    throw std::invalid_argument("classical_order: modulus must be at least 2");
  if (dimension == 0 || dimension % 2)
    throw std::invalid_argument("classical_order: dimension must be even and positive");
  std::uint64_t const n = dimension / 2;

  // |Sp(2n, Z/p^k)| = p^{(k-1) n (2n+1)} p^{n^2} prod_{i=1..n} (p^{2i} - 1), multiplied over p^k || N
  FactoredInteger result;
  auto const factored = FactoredInteger::of(modulus);
  for (auto const &[p, k] : factored.factors()) {
    result *= FactoredInteger::of(p).pow(static_cast<unsigned>((k - 1) * n * (2 * n + 1) + n * n));
    for (std::uint64_t i = 1; i <= n; ++i) {
      BigInt term = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(2 * i)) - 1;
      result *= FactoredInteger::of(term);
    }
  }
  if (kind == ClassicalKind::PSp)
    result = result.divided_by(FactoredInteger::of(center_scalars(static_cast<Residue>(modulus)).size()));
  return result;
}

std::vector<Residue> center_scalars(Residue modulus)
{
  if (modulus < 2)
    throw std::invalid_argument("center_scalars: modulus must be at least 2");
  std::vector<Residue> result;
  for (Residue u = 1; u < modulus; ++u) {
    if (u * u % modulus == 1)
      result.push_back(u);
  }
  return result;
}

std::vector<Residue> units(Residue modulus)
{
  std::vector<Residue> result;
  for (Residue u = 1; u < modulus; ++u) {
    if (std::gcd(u, modulus) == 1)
      result.push_back(u);
  }
  return result;
}

BigInt projective_count(std::size_t m, std::uint64_t modulus)
{
  // |P^m(Z/p^k)| = p^{(k-1)m} (p^{m+1} - 1) / (p - 1)
  BigInt result = 1;
  auto const factored = FactoredInteger::of(modulus);
  for (auto const &[p, k] : factored.factors()) {
    BigInt bp(p);
    result *= boost::multiprecision::pow(bp, static_cast<unsigned>((k - 1) * m));
    result *= (boost::multiprecision::pow(bp, static_cast<unsigned>(m + 1)) - 1) / (bp - 1);
  }
  return result;
}

std::vector<ResidueVector> projective_points(std::size_t dim, Residue modulus)
{
  VectorDomain domain(VectorDomain::Kind::projective, dim, modulus);
  std::vector<ResidueVector> result;
  result.reserve(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i)
    result.push_back(domain.point(i));
  return result;
}

BigInt VectorDomain::raw_size(std::size_t dim, Residue modulus)
{
  return boost::multiprecision::pow(BigInt(modulus), static_cast<unsigned>(dim));
}

VectorDomain::VectorDomain(Kind kind, std::size_t dim, Residue modulus)
: kind_(kind), dim_(dim), modulus_(modulus)
{
  if (modulus < 2)
    throw std::invalid_argument("VectorDomain: modulus must be at least 2");
  if (dim == 0)
    throw std::invalid_argument("VectorDomain: dimension must be positive");
  if (raw_size(dim, modulus) > 50'000'000)
    throw std::invalid_argument("VectorDomain: (Z/N)^dim too large to enumerate");

  std::size_t const total = static_cast<std::size_t>(raw_size(dim, modulus));
  index_by_code_.assign(total, -1);
  auto const us = units(modulus);

  std::vector<Residue> v(dim, 0), w(dim), best(dim);
  for (std::size_t c = 0; c < total; ++c) {
    // v is the c-th vector in lexicographic order
    std::size_t rest = c;
    for (std::size_t i = dim; i-- > 0;) {
      v[i] = static_cast<Residue>(rest % static_cast<std::size_t>(modulus));
      rest /= static_cast<std::size_t>(modulus);
    }
    ResidueVector rv(modulus, v);
    if (kind == Kind::all_vectors) {
      index_by_code_[c] = static_cast<std::int64_t>(points_.size());
      points_.push_back(std::move(rv));
      continue;
    }
    if (!rv.is_unimodular())
      continue;
    best = v;
    for (Residue u : us) {
      for (std::size_t i = 0; i < dim; ++i)
        w[i] = v[i] * u % modulus;
      if (w < best)
        best = w;
    }
    std::size_t bc = code(best.data());
    if (bc == c) {
      index_by_code_[c] = static_cast<std::int64_t>(points_.size());
      points_.push_back(std::move(rv));
    } else {
      // canonical representative has a smaller code, so it is already placed
      index_by_code_[c] = index_by_code_[bc];
    }
  }
}

std::size_t VectorDomain::code(Residue const *v) const
{
  std::size_t c = 0;
  for (std::size_t i = 0; i < dim_; ++i)
    c = c * static_cast<std::size_t>(modulus_) + static_cast<std::size_t>(v[i]);
  return c;
}

std::int64_t VectorDomain::index_of(ResidueVector const &v) const
{
  if (v.dim() != dim_ || v.modulus() != modulus_)
    return -1;
  return index_by_code_[code(v.entries().data())];
}

Permutation VectorDomain::action(ResidueMatrix const &m) const
{
  if (m.dim() != dim_ || m.modulus() != modulus_)
    throw std::invalid_argument("VectorDomain::action: matrix does not match the domain");
  std::vector<Point> images(points_.size());
  std::vector<Residue> out(dim_);
  std::vector<bool> hit(points_.size(), false);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    m.apply(points_[i].entries().data(), out.data());
    std::int64_t j = index_by_code_[code(out.data())];
    if (j < 0 || hit[static_cast<std::size_t>(j)])
      throw std::invalid_argument("VectorDomain::action: matrix is not invertible");
    hit[static_cast<std::size_t>(j)] = true;
    images[i] = static_cast<Point>(j);
  }
  return Permutation(std::move(images));
}

Permutation matrix_action_perm(ResidueMatrix const &m, VectorDomain::Kind domain)
{
  return VectorDomain(domain, m.dim(), m.modulus()).action(m);
}

} // namespace hmlab
