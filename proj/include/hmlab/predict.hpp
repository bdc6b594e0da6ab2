#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "hmlab/factored_integer.hpp"

namespace hmlab {

enum class TheoremTag { thm1, thm1_exceptional_g0, thm1_exceptional_g1, thm2, thm3 };

std::string to_string(TheoremTag tag);
/// "thm1", "thm1-exceptional-g0", "thm1-exceptional-g1", "thm2", "thm3"
std::optional<TheoremTag> parse_theorem_tag(std::string const &s);

/// Parameters outside a theorem's hypotheses.
class HypothesisError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

struct PredictionParams
{
  std::optional<std::size_t> g;
  std::optional<std::size_t> b;
  std::optional<std::uint64_t> N;
};

/// 1 -> left -> G -> right -> 1, with left a product over Omega.
struct PredictedStructure
{
  TheoremTag tag = TheoremTag::thm1;
  std::size_t g = 0;
  std::size_t b = 0;
  std::uint64_t N = 2;
  std::uint64_t omega_size = 0;
  BigInt fiber_per_class;  // |P^{b-5}(Z/N)|
  BigInt fiber_size;       // omega_size * fiber_per_class
  std::string left_description;
  std::string right_description;
  FactoredInteger left;
  FactoredInteger right;
  FactoredInteger total;
};

/// Throws HypothesisError naming the violated condition.
PredictedStructure predict(TheoremTag tag, PredictionParams const &params);

} // namespace hmlab
