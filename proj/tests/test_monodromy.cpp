#include <doctest.h>

#include <random>

#include "hmlab/coset.hpp"
#include "hmlab/monodromy.hpp"
#include "hmlab/predict.hpp"

using namespace hmlab;

namespace {

FactoredInteger fi(std::uint64_t n)
{
  return FactoredInteger::of(n);
}

HurwitzSetup const &g0()
{
  static HurwitzSetup s = make_hurwitz_setup(GroupSpec::sym4(), 6);
  return s;
}

HurwitzSetup const &g1()
{
  static HurwitzSetup s = make_hurwitz_setup(GroupSpec::sym4(), 8);
  return s;
}

bool braid_relations(std::vector<Permutation> const &g)
{
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      bool ok = j == i + 1 ? compose(compose(g[i], g[j]), g[i]) == compose(compose(g[j], g[i]), g[j])
                           : compose(g[i], g[j]) == compose(g[j], g[i]);
      if (!ok)
        return false;
    }
  return true;
}

} // namespace

TEST_SUITE("monodromy")
{
  TEST_CASE("braid and sphere relations on Sigma and Omega")
  {
    for (auto const *s : {&g0(), &g1()}) {
      CHECK(braid_relations(s->sigma_gens));
      CHECK(braid_relations(s->omega_gens));
      CHECK(full_twist_word(s->b()).evaluate(s->sigma_gens, s->sigma.size()).is_identity());
      CHECK(full_twist_word(s->b()).evaluate(s->omega_gens, s->omega.size()).is_identity());
    }
  }

  TEST_CASE("projection is equivariant")
  {
    for (auto const *s : {&g0(), &g1()})
      for (std::size_t i = 0; i < s->sigma_gens.size(); ++i)
        for (std::size_t x = 0; x < s->sigma.size(); ++x)
          CHECK(s->projection[s->sigma_gens[i][static_cast<Point>(x)]] ==
                s->omega_gens[i][static_cast<Point>(s->projection[x])]);
  }

  TEST_CASE("g=0 monodromy")
  {
    auto r = analyze(g0());
    CHECK(r.degree == 120);
    CHECK(r.transitive);
    CHECK(r.group_order == fi(3).pow(40) * fi(2).pow(16) * fi(25920));
    CHECK(r.omega_order == fi(25920));
    CHECK(r.kernel_order * r.omega_order == r.group_order);
    CHECK(r.omega_primitive == true);
    CHECK(r.fiber_sizes == std::map<std::size_t, std::size_t>{{3, 40}});
  }

  TEST_CASE("randomized variant gives the same order")
  {
    auto a = analyze(g0());
    auto b = analyze(g0(), {.variant = SchreierSimsOptions::Variant::randomized_verified});
    CHECK(a.group_order == b.group_order);
  }

  TEST_CASE("X_5 realises Theorem 3")
  {
    auto s = make_hurwitz_setup(GroupSpec::xn(5), 6);
    auto r = analyze(s);
    CHECK(r.degree == 240);
    CHECK(r.group_order == predict(TheoremTag::thm3, {.g = {}, .b = 6, .N = 5}).total);
    CHECK(r.kernel_order == classical_order(ClassicalKind::PSp, 2, 5).pow(40));
    CHECK(r.omega_order == fi(25920));
  }

  TEST_CASE("Omega models agree")
  {
    for (std::size_t g : {0, 1}) {
      auto c = omega_transvection_crosscheck(g);
      CHECK(c.orders_match());
      CHECK(c.cycle_types_match());
    }
  }

  TEST_CASE("fiber groups")
  {
    for (auto [s, order] : {std::pair{&g0(), 6u}, {&g1(), 720u}}) {
      std::vector<Permutation> gens{s->sigma_gens[0]};
      gens.insert(gens.end(), s->sigma_gens.begin() + 2, s->sigma_gens.end());
      auto r = fiber_restrict(s->projection, gens, s->seed_omega);
      CHECK(PermGroup::build(r, r.front().degree()).order() == order);
      // beta_2 moves the seed class, so it has no restriction
      std::vector<Permutation> b2{s->sigma_gens[1]};
      CHECK_THROWS(fiber_restrict(s->projection, b2, s->seed_omega));
    }
  }

  TEST_CASE("H2* membership")
  {
    auto ctx = H2StarContext::build(g0());
    CHECK(ctx.fiber_group().order() == 6);
    CHECK(ctx.derived_group().order() == 3);
    CHECK(ctx.contains(g0().sigma_gens[0]));
    CHECK(ctx.contains(Permutation::identity(120)));
    // beta_3 restricts to a transposition of the fiber: in H2, not in H2*
    CHECK_FALSE(ctx.contains(g0().sigma_gens[2]));
    CHECK_FALSE(ctx.contains(g0().sigma_gens[1]));

    // subgroup predicate on random words in the stabiliser generators
    std::mt19937_64 rng(3);
    std::vector<Permutation> h;
    for (std::size_t i : {0, 2, 3, 4})
      h.push_back(g0().sigma_gens[i]);
    auto word = [&] {
      Permutation p = Permutation::identity(120);
      for (int k = 0; k < 8; ++k)
        p = compose(p, h[rng() % h.size()]);
      return p;
    };
    int inside = 0;
    for (int k = 0; k < 200; ++k) {
      Permutation a = word(), b = word();
      if (!ctx.contains(a) || !ctx.contains(b))
        continue;
      ++inside;
      CHECK(ctx.contains(compose(a, b)));
      CHECK(ctx.contains(a.inverse()));
      CHECK(ctx.same_coset(compose(a, g0().sigma_gens[1]), g0().sigma_gens[1]));
    }
    CHECK(inside > 20);
    CHECK_THROWS(H2StarContext::build(make_hurwitz_setup(GroupSpec::xn(5), 6)));
  }

  TEST_CASE("coset representations")
  {
    auto c0 = coset_representation(g0());
    CHECK(c0.degree == 80);
    CHECK(c0.image.factored_order() == fi(2).pow(16) * fi(25920));
    CHECK(c0.generators[0][0] == 0);
    CHECK(braid_relations(c0.generators));
    CHECK(c0.words[0].empty());

    auto c1 = coset_representation(g1());
    CHECK(c1.degree == 728);
    CHECK(c1.image.factored_order() == fi(2).pow(168) * fi(4585351680ull));
    CHECK(braid_relations(c1.generators));

    CHECK_THROWS_AS(coset_representation(g0(), 50), BudgetExceeded);
  }

  TEST_CASE("commutator witness")
  {
    auto w1 = commutator_witness(g1());
    CHECK(w1.ok());
    // g=0 is recorded, not asserted
    auto w0 = commutator_witness(g0());
    MESSAGE("g=0 witness: nontrivial=" << w0.nontrivial << " fixed fibers=" << w0.fixed_fibers.size());
    CHECK(commutator(g1().sigma_gens[0].pow(3), g1().sigma_gens[0].pow(3)).is_identity());
  }

  TEST_CASE("chain representations")
  {
    for (auto [g, N, order] : {std::tuple<std::size_t, std::uint64_t, std::uint64_t>{0, 2, 6},
                               {0, 4, 48}, {0, 5, 120}, {1, 2, 720}, {1, 3, 51840}}) {
      auto r = chain_rep_check(g, N);
      CHECK(r.ok());
      CHECK(r.computed == fi(order));
    }
    CHECK_THROWS_AS(chain_rep_check(2, 5), std::invalid_argument);
  }

  TEST_CASE("cube closures")
  {
    CHECK(cube_closure_check(0, 2).is_full());
    CHECK(cube_closure_check(0, 4).is_full());
    auto five = cube_closure_check(0, 5);
    CHECK(five.is_full());
    CHECK(five.closure_order == fi(120));
    CHECK(cube_closure_check(1, 2).is_full());
    auto three = cube_closure_check(0, 3);
    CHECK(three.closure_order.is_one());
    CHECK(three.ok());
  }

  TEST_CASE("budget exhaustion reports partial progress")
  {
    SchreierSimsOptions o;
    o.deadline = Clock::now();
    try {
      analyze(g1(), o);
      FAIL("expected BudgetExceeded");
    } catch (BudgetExceeded const &e) {
      CHECK_FALSE(e.partial().empty());
    }
  }
}
