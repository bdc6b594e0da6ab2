#include "hmlab/factored_integer.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hmlab {

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

FactoredInteger FactoredInteger::of(std::uint64_t n)
{
  if (n == 0)
    throw std::invalid_argument("FactoredInteger: zero has no factorization");

  FactoredInteger result;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++result.factors_[d];
      n /= d;
    }
  }
  if (n > 1)
    ++result.factors_[n];
  return result;
}

FactoredInteger FactoredInteger::of(BigInt const &n, std::uint64_t bound)
{
  if (n <= 0)
    throw std::invalid_argument("FactoredInteger: non-positive value");

  FactoredInteger result;
  BigInt rest = n;
  for (std::uint64_t d = 2; d < bound && rest > 1; ++d) {
    while (rest % d == 0) {
      ++result.factors_[d];
      rest /= d;
    }
  }
  if (rest != 1)
    throw std::domain_error("FactoredInteger: cofactor above trial bound");
  return result;
}

std::uint64_t FactoredInteger::exponent(std::uint64_t p) const
{
  auto it = factors_.find(p);
  return it == factors_.end() ? 0u : it->second;
}

BigInt FactoredInteger::value() const
{
  BigInt v = 1;
  for (auto const &[p, e] : factors_)
    v *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
  return v;
}

std::string FactoredInteger::decimal() const
{
  return value().str();
}

double FactoredInteger::decimal_digits() const
{
  double d = 0;
  for (auto const &[p, e] : factors_)
    d += static_cast<double>(e) * std::log10(static_cast<double>(p));
  return std::floor(d) + 1;
}

std::string FactoredInteger::str() const
{
  if (factors_.empty())
    return "1";
  std::ostringstream os;
  bool first = true;
  for (auto const &[p, e] : factors_) {
    if (!first)
      os << " * ";
    first = false;
    os << p;
    if (e > 1)
      os << '^' << e;
  }
  return os.str();
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> FactoredInteger::pairs() const
{
  return {factors_.begin(), factors_.end()};
}

FactoredInteger &FactoredInteger::operator*=(FactoredInteger const &other)
{
  for (auto const &[p, e] : other.factors_)
    factors_[p] += e;
  return *this;
}

FactoredInteger FactoredInteger::pow(std::uint64_t e) const
{
  FactoredInteger result;
  if (e == 0)
    return result;
  for (auto const &[p, k] : factors_)
    result.factors_[p] = k * e;
  return result;
}

bool FactoredInteger::divides(FactoredInteger const &other) const
{
  for (auto const &[p, e] : factors_) {
    if (other.exponent(p) < e)
      return false;
  }
  return true;
}

FactoredInteger FactoredInteger::divided_by(FactoredInteger const &d) const
{
  if (!d.divides(*this))
    throw std::domain_error("FactoredInteger: " + d.str() + " does not divide " + str());
  FactoredInteger result = *this;
  for (auto const &[p, e] : d.factors_) {
    auto it = result.factors_.find(p);
    it->second -= e;
    if (it->second == 0)
      result.factors_.erase(it);
  }
  return result;
}

} // namespace hmlab
