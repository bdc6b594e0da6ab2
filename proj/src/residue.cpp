#include "hmlab/residue.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hmlab {

ResidueVector::ResidueVector(Residue modulus, std::vector<Residue> entries)
: modulus_(modulus), entries_(std::move(entries))
{
  if (modulus_ < 2)
    throw std::invalid_argument("ResidueVector: modulus must be at least 2");
  for (auto &e : entries_)
    e = mod(e, modulus_);
}

ResidueVector ResidueVector::zero(Residue modulus, std::size_t dim)
{
  return ResidueVector(modulus, std::vector<Residue>(dim, 0));
}

ResidueVector ResidueVector::unit(Residue modulus, std::size_t dim, std::size_t i)
{
  std::vector<Residue> e(dim, 0);
  e.at(i) = 1;
  return ResidueVector(modulus, std::move(e));
}

bool ResidueVector::is_zero() const
{
  for (auto e : entries_) {
    if (e)
      return false;
  }
  return true;
}

bool ResidueVector::is_unimodular() const
{
  Residue g = modulus_;
  for (auto e : entries_)
    g = std::gcd(g, e);
  return g == 1;
}

ResidueVector ResidueVector::operator+(ResidueVector const &o) const
{
  if (o.modulus_ != modulus_ || o.dim() != dim())
    throw std::invalid_argument("ResidueVector: dimension or modulus mismatch");
  std::vector<Residue> e(dim());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = entries_[i] + o.entries_[i];
  return ResidueVector(modulus_, std::move(e));
}

ResidueVector ResidueVector::operator-(ResidueVector const &o) const
{
  return *this + o.scaled(-1);
}

ResidueVector ResidueVector::scaled(Residue s) const
{
  std::vector<Residue> e(entries_);
  for (auto &x : e)
    x = mod(x * mod(s, modulus_), modulus_);
  return ResidueVector(modulus_, std::move(e));
}

std::string ResidueVector::str() const
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i)
    os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

ResidueMatrix::ResidueMatrix(Residue modulus, std::size_t dim, std::vector<Residue> entries)
: modulus_(modulus), dim_(dim), entries_(std::move(entries))
{
  if (modulus_ < 2)
    throw std::invalid_argument("ResidueMatrix: modulus must be at least 2");
  if (entries_.size() != dim_ * dim_)
    throw std::invalid_argument("ResidueMatrix: entry count is not dim^2");
  for (auto &e : entries_)
    e = mod(e, modulus_);
}

ResidueMatrix ResidueMatrix::identity(Residue modulus, std::size_t dim)
{
  return scalar(modulus, dim, 1);
}

ResidueMatrix ResidueMatrix::scalar(Residue modulus, std::size_t dim, Residue s)
{
  std::vector<Residue> e(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i)
    e[i * dim + i] = s;
  return ResidueMatrix(modulus, dim, std::move(e));
}

ResidueMatrix ResidueMatrix::transpose() const
{
  std::vector<Residue> e(entries_.size());
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c)
      e[c * dim_ + r] = entries_[r * dim_ + c];
  }
  return ResidueMatrix(modulus_, dim_, std::move(e));
}

ResidueMatrix ResidueMatrix::operator*(ResidueMatrix const &o) const
{
  if (o.modulus_ != modulus_ || o.dim_ != dim_)
    throw std::invalid_argument("ResidueMatrix: dimension or modulus mismatch");
  std::vector<Residue> e(entries_.size(), 0);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      Residue a = entries_[r * dim_ + k];
      if (!a)
        continue;
      for (std::size_t c = 0; c < dim_; ++c)
        e[r * dim_ + c] = (e[r * dim_ + c] + a * o.entries_[k * dim_ + c]) % modulus_;
    }
  }
  return ResidueMatrix(modulus_, dim_, std::move(e));
}

ResidueMatrix ResidueMatrix::pow(unsigned e) const
{
  ResidueMatrix result = identity(modulus_, dim_);
  ResidueMatrix base = *this;
  while (e) {
    if (e & 1u)
      result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

bool ResidueMatrix::is_identity() const
{
  return *this == identity(modulus_, dim_);
}

ResidueVector ResidueMatrix::apply(ResidueVector const &v) const
{
  if (v.modulus() != modulus_ || v.dim() != dim_)
    throw std::invalid_argument("ResidueMatrix::apply: dimension or modulus mismatch");
  std::vector<Residue> out(dim_);
  apply(v.entries().data(), out.data());
  return ResidueVector(modulus_, std::move(out));
}

void ResidueMatrix::apply(Residue const *v, Residue *out) const
{
  for (std::size_t c = 0; c < dim_; ++c) {
    Residue s = 0;
    for (std::size_t r = 0; r < dim_; ++r)
      s += v[r] * entries_[r * dim_ + c];
    out[c] = s % modulus_;
  }
}

std::string ResidueMatrix::str() const
{
  std::ostringstream os;
  for (std::size_t r = 0; r < dim_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < dim_; ++c)
      os << (c ? " " : "") << entries_[r * dim_ + c];
    os << "]\n";
  }
  return os.str();
}

} // namespace hmlab
