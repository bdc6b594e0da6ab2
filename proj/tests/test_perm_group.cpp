#include <doctest.h>

#include <random>

#include "hmlab/perm_group.hpp"
#include "oracles.hpp"

using namespace hmlab;

namespace {

std::vector<oracle::Perm> raw(std::vector<Permutation> const &gens)
{
  std::vector<oracle::Perm> out;
  for (auto const &g : gens)
    out.emplace_back(g.images().begin(), g.images().end());
  return out;
}

Permutation random_perm(std::mt19937_64 &rng, std::size_t n)
{
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), 0u);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

/// Random small generating sets: products of a few random cycles, or
/// permutations with many fixed points, so that most groups stay small.
std::vector<Permutation> random_gens(std::mt19937_64 &rng)
{
  std::size_t const n = 4 + rng() % 6;
  std::vector<Permutation> gens;
  std::size_t const k = 1 + rng() % 3;
  for (std::size_t i = 0; i < k; ++i) {
    auto p = random_perm(rng, n);
    if (rng() % 2)
      p = p.pow(static_cast<long long>(p.order() / std::max<std::size_t>(1, rng() % 4 + 1)));
    gens.push_back(p);
  }
  return gens;
}

} // namespace

TEST_SUITE("perm_group")
{
  TEST_CASE("symmetric and alternating orders")
  {
    for (std::size_t n = 2; n <= 12; ++n) {
      std::vector<Permutation> sn{Permutation::from_cycles(n, {{0, 1}})};
      std::vector<Point> cyc(n);
      std::iota(cyc.begin(), cyc.end(), 0u);
      sn.push_back(Permutation::from_cycles(n, std::vector<std::vector<Point>>{cyc}));
      BigInt fact = 1;
      for (std::size_t i = 2; i <= n; ++i)
        fact *= i;
      auto g = PermGroup::build(sn, n);
      CHECK(g.order() == fact);
      CHECK(g.is_transitive());
      if (n >= 3) {
        auto d = derived_subgroup(g);
        CHECK(d.order() * 2 == fact);
      }
    }
  }

  TEST_CASE("BSGS order matches exhaustive closure, random groups")
  {
    std::mt19937_64 rng(2024);
    int compared = 0;
    for (int trial = 0; trial < 300; ++trial) {
      auto gens = random_gens(rng);
      std::size_t ex = oracle::closure_size(raw(gens), 5000);
      if (ex == 0)
        continue;
      ++compared;
      auto g = PermGroup::build(gens, gens.front().degree());
      CHECK(g.order() == ex);
      for (auto const &s : gens)
        CHECK(g.contains(s));
      auto r = PermGroup::build(gens, gens.front().degree(),
                                {.variant = SchreierSimsOptions::Variant::randomized_verified});
      CHECK(r.order() == ex);
    }
    CHECK(compared > 100);
  }

  TEST_CASE("membership agrees with element listing")
  {
    // <(0 1 2 3), (0 2)> is dihedral of order 8 in S4
    std::vector<Permutation> gens{Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                                  Permutation::from_cycles(4, {{0, 2}})};
    auto g = PermGroup::build(gens, 4);
    CHECK(g.order() == 8);
    std::vector<Point> v{0, 1, 2, 3};
    int members = 0;
    do
      members += g.contains(Permutation(v));
    while (std::next_permutation(v.begin(), v.end()));
    CHECK(members == 8);
  }

  TEST_CASE("normal closure")
  {
    std::vector<Permutation> s4{Permutation::from_cycles(4, {{0, 1}}),
                                Permutation::from_cycles(4, {{0, 1, 2, 3}})};
    auto g = PermGroup::build(s4, 4);
    std::vector<Permutation> v{Permutation::from_cycles(4, {{0, 1}, {2, 3}})};
    CHECK(normal_closure(g, v).order() == 4);
    std::vector<Permutation> t{Permutation::from_cycles(4, {{0, 1, 2}})};
    CHECK(normal_closure(g, t).order() == 12);
  }

  TEST_CASE("primitivity")
  {
    // S4 on 4 points is primitive, D8 on 4 points is not
    std::vector<Permutation> s4{Permutation::from_cycles(4, {{0, 1}}),
                                Permutation::from_cycles(4, {{0, 1, 2, 3}})};
    CHECK(is_primitive(PermGroup::build(s4, 4)).primitive);
    std::vector<Permutation> d8{Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                                Permutation::from_cycles(4, {{0, 2}})};
    auto r = is_primitive(PermGroup::build(d8, 4));
    CHECK_FALSE(r.primitive);
    REQUIRE(r.blocks);
    CHECK(r.blocks->size() == 2);
    std::vector<Permutation> two{Permutation::from_cycles(4, {{0, 1}})};
    CHECK_THROWS(is_primitive(PermGroup::build(two, 4)));
  }

  TEST_CASE("deadline")
  {
    std::vector<Permutation> gens{Permutation::from_cycles(200, {{0, 1}})};
    std::vector<Point> cyc(200);
    std::iota(cyc.begin(), cyc.end(), 0u);
    gens.push_back(Permutation::from_cycles(200, std::vector<std::vector<Point>>{cyc}));
    SchreierSimsOptions o;
    o.deadline = Clock::now();
    CHECK_THROWS_AS(PermGroup::build(gens, 200, o), BudgetExceeded);
  }
}
