#include "hmlab/predict.hpp"

#include "hmlab/symplectic.hpp"

namespace hmlab {

namespace {

struct TagName
{
  TheoremTag tag;
  char const *name;
};

constexpr TagName tag_names[] = {
    {TheoremTag::thm1, "thm1"},
    {TheoremTag::thm1_exceptional_g0, "thm1-exceptional-g0"},
    {TheoremTag::thm1_exceptional_g1, "thm1-exceptional-g1"},
    {TheoremTag::thm2, "thm2"},
    {TheoremTag::thm3, "thm3"},
};

[[noreturn]] void violated(std::string const &what, std::string const &got)
{
  throw HypothesisError("hypothesis violated: " + what + "; got " + got);
}

std::uint64_t omega_count(std::size_t m)
{
  BigInt c = projective_count(m, 3);
  if (c > BigInt(std::uint64_t(1) << 40))
    throw HypothesisError("|Omega| = |P^" + std::to_string(m) + "(Z/3)| is too large to expand");
  return static_cast<std::uint64_t>(c);
}

std::string ring(std::uint64_t N)
{
  return "Z/" + std::to_string(N);
}

std::size_t genus_of_b(std::size_t b)
{
  if (b < 6 || b % 2)
    violated("b even and b >= 6", "b=" + std::to_string(b));
  return (b - 6) / 2;
}

std::size_t resolve_genus(PredictionParams const &p)
{
  if (p.g && p.b && *p.b != 2 * *p.g + 6)
    throw HypothesisError("inconsistent parameters: b must equal 2g+6");
  if (p.g)
    return *p.g;
  if (p.b)
    return genus_of_b(*p.b);
  throw HypothesisError("missing parameter: g or b");
}

} // namespace

std::string to_string(TheoremTag tag)
{
  for (auto const &t : tag_names)
    if (t.tag == tag)
      return t.name;
  return "?";
}

std::optional<TheoremTag> parse_theorem_tag(std::string const &s)
{
  for (auto const &t : tag_names)
    if (s == t.name)
      return t.tag;
  return std::nullopt;
}

PredictedStructure predict(TheoremTag tag, PredictionParams const &params)
{
  PredictedStructure r;
  r.tag = tag;

  switch (tag) {
  case TheoremTag::thm1:
  case TheoremTag::thm1_exceptional_g0:
  case TheoremTag::thm1_exceptional_g1: {
    if (params.N && *params.N != 2)
      violated("N = 2 (degree-4 covers)", "N=" + std::to_string(*params.N));
    std::size_t g;
    if (tag == TheoremTag::thm1) {
      g = resolve_genus(params);
      if (g <= 1)
        violated("g > 1 (use thm1-exceptional-g0 / -g1)", "g=" + std::to_string(g));
    } else {
      g = tag == TheoremTag::thm1_exceptional_g0 ? 0 : 1;
      if ((params.g || params.b) && resolve_genus(params) != g)
        violated("g = " + std::to_string(g), "g=" + std::to_string(resolve_genus(params)));
    }
    r.g = g;
    r.b = 2 * g + 6;
    r.N = 2;
    r.omega_size = omega_count(2 * g + 3);
    r.right = classical_order(ClassicalKind::PSp, 2 * g + 4, 3);
    r.right_description = "PSp(" + std::to_string(2 * g + 4) + ",Z/3)";
    std::string const n = std::to_string(r.omega_size);
    if (tag == TheoremTag::thm1) {
      r.left = classical_order(ClassicalKind::Sp, 2 * g + 2, 2).pow(r.omega_size);
      r.left_description = "Sp(" + std::to_string(2 * g + 2) + ",Z/2)^" + n;
    } else if (g == 0) {
      // 3^40:2^16 instead of S3^40
      r.left = FactoredInteger::of(3).pow(r.omega_size) * FactoredInteger::of(2).pow(16);
      r.left_description = "3^" + n + ":2^16";
    } else {
      // A6^364:2^168 rather than S6^364
      r.left = FactoredInteger::of(360).pow(r.omega_size) * FactoredInteger::of(2).pow(168);
      r.left_description = "A6^" + n + ":2^168";
    }
    break;
  }
  case TheoremTag::thm2: {
    if (!params.N)
      throw HypothesisError("missing parameter: N");
    std::uint64_t const N = *params.N;
    std::size_t const g = resolve_genus(params);
    if (N < 2 || N % 3 == 0)
      violated("3 does not divide N (N >= 2)", "N=" + std::to_string(N));
    if (N % 2 == 0 && g <= 1)
      violated("g > 1 if N is even", "g=" + std::to_string(g) + ", N=" + std::to_string(N));
    r.g = g;
    r.b = 2 * g + 6;
    r.N = N;
    r.omega_size = omega_count(2 * g + 3);
    r.left = classical_order(ClassicalKind::Sp, 2 * g + 2, N).pow(r.omega_size);
    r.left_description = "Sp(" + std::to_string(2 * g + 2) + "," + ring(N) + ")^" +
                         std::to_string(r.omega_size);
    r.right = classical_order(ClassicalKind::PSp, 2 * g + 4, 3);
    r.right_description = "PSp(" + std::to_string(2 * g + 4) + ",Z/3)";
    break;
  }
  case TheoremTag::thm3: {
    if (!params.N)
      throw HypothesisError("missing parameter: N");
    if (!params.b)
      throw HypothesisError("missing parameter: b");
    std::uint64_t const N = *params.N;
    std::size_t const b = *params.b;
    if (N < 2 || N % 3 == 0)
      violated("3 does not divide N (N >= 2)", "N=" + std::to_string(N));
    if (b <= 4 || (N % 2 == 0 && b <= 8))
      violated("b > 4 (b > 8 if N is even)", "b=" + std::to_string(b) + ", N=" + std::to_string(N));
    if (b % 2)
      violated("b even", "b=" + std::to_string(b));
    r.g = (b - 6) / 2;
    r.b = b;
    r.N = N;
    r.omega_size = omega_count(b - 3);
    r.left = classical_order(ClassicalKind::PSp, b - 4, N).pow(r.omega_size);
    r.left_description =
        "PSp(" + std::to_string(b - 4) + "," + ring(N) + ")^" + std::to_string(r.omega_size);
    r.right = classical_order(ClassicalKind::PSp, b - 2, 3);
    r.right_description = "PSp(" + std::to_string(b - 2) + ",Z/3)";
    break;
  }
  }

  r.total = r.left * r.right;
  r.fiber_per_class = projective_count(r.b - 5, r.N);
  r.fiber_size = r.fiber_per_class * r.omega_size;
  return r;
}

} // namespace hmlab
