#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hmlab {

using BigInt = boost::multiprecision::cpp_int;

/// A positive integer held as its prime factorization. The empty map is 1.
class FactoredInteger
{
public:
  FactoredInteger() = default;

  /// Factors `n` by trial division. `n` must be positive.
  static FactoredInteger of(std::uint64_t n);

  /// Factors a big integer whose prime factors are all below `bound`;
  /// throws if a cofactor remains.
  static FactoredInteger of(BigInt const &n, std::uint64_t bound = 1u << 20);

  std::map<std::uint64_t, std::uint64_t> const &factors() const
  { return factors_; }

  std::uint64_t exponent(std::uint64_t p) const;

  BigInt value() const;
  std::string decimal() const;
  /// Approximate number of decimal digits, without expanding.
  double decimal_digits() const;
  /// e.g. "2^22 * 3^44 * 5"
  std::string str() const;
  /// [[p, e], ...] in increasing p
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs() const;

  bool is_one() const
  { return factors_.empty(); }

  FactoredInteger &operator*=(FactoredInteger const &other);
  friend FactoredInteger operator*(FactoredInteger a, FactoredInteger const &b)
  { return a *= b; }

  FactoredInteger pow(std::uint64_t e) const;
  bool divides(FactoredInteger const &other) const;
  /// Exact quotient; throws std::domain_error when `d` does not divide.
  FactoredInteger divided_by(FactoredInteger const &d) const;

  friend bool operator==(FactoredInteger const &, FactoredInteger const &) = default;

private:
  std::map<std::uint64_t, std::uint64_t> factors_;
};

bool is_prime(std::uint64_t n);

} // namespace hmlab
