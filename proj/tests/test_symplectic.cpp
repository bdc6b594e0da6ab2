#include <doctest.h>

#include <random>

#include "hmlab/monodromy.hpp"
#include "hmlab/symplectic.hpp"
#include "oracles.hpp"

using namespace hmlab;

TEST_SUITE("symplectic")
{
  TEST_CASE("order formula against brute-force matrix counts")
  {
    // frozen from oracle::symplectic_count
    CHECK(oracle::symplectic_count(1, 2) == 6);
    CHECK(oracle::symplectic_count(1, 4) == 48);
    CHECK(oracle::symplectic_count(1, 5) == 120);
    CHECK(oracle::symplectic_count(1, 6) == 144);
    CHECK(oracle::symplectic_count(2, 2) == 720);
    for (auto [n, N] : {std::pair<std::size_t, std::uint32_t>{1, 2}, {1, 3}, {1, 4}, {1, 5},
                        {1, 6}, {1, 7}, {1, 8}, {2, 2}})
      CHECK(classical_order(ClassicalKind::Sp, 2 * n, N).value() == oracle::symplectic_count(n, N));
  }

  TEST_CASE("classical orders")
  {
    CHECK(classical_order(ClassicalKind::PSp, 4, 3).value() == 25920);
    CHECK(classical_order(ClassicalKind::PSp, 6, 3).value() == 4585351680ull);
    CHECK(classical_order(ClassicalKind::Sp, 4, 3).value() == 51840);
    CHECK(classical_order(ClassicalKind::PSp, 2, 5).value() == 60);
    // PSp = Sp over Z/2^k only when u^2 = 1 has one solution
    CHECK(classical_order(ClassicalKind::PSp, 2, 2) == classical_order(ClassicalKind::Sp, 2, 2));
    CHECK(classical_order(ClassicalKind::PSp, 2, 8).value() * 4 ==
          classical_order(ClassicalKind::Sp, 2, 8).value());
  }

  TEST_CASE("scalars and projective counts")
  {
    CHECK(center_scalars(8) == std::vector<Residue>{1, 3, 5, 7});
    CHECK(center_scalars(5) == std::vector<Residue>{1, 4});
    CHECK(units(6) == std::vector<Residue>{1, 5});
    CHECK(projective_count(1, 5) == 6);
    CHECK(projective_count(3, 3) == 40);
    CHECK(projective_count(5, 3) == 364);
    CHECK(projective_count(3, 2) == 15);
    for (auto [m, N] : {std::pair<std::size_t, Residue>{1, 4}, {1, 6}, {2, 4}, {3, 3}, {1, 9}})
      CHECK(BigInt(projective_points(m + 1, N).size()) == projective_count(m, N));
  }

  TEST_CASE("transvections and the chain")
  {
    SymplecticSpace sp(5, 4);
    auto chain = chain_vectors(sp, 5);
    for (std::size_t i = 0; i < chain.size(); ++i)
      for (std::size_t j = i + 1; j < chain.size(); ++j) {
        Residue p = sp.pairing(chain[i], chain[j]);
        if (j == i + 1)
          CHECK((p == 1 || p == 4));
        else
          CHECK(p == 0);
      }
    auto t = transvection_matrix(sp, chain[0]);
    auto x = ResidueVector(5, {0, 0, 1, 0});
    // x + <x,v> v with v = e1, <f1, e1> = -1
    CHECK(t.apply(x) == x + chain[0].scaled(sp.pairing(x, chain[0])));
    CHECK(t.pow(5).is_identity());
    CHECK_THROWS(chain_vectors(sp, 4));
  }

  TEST_CASE("products of transvections satisfy M^T J M = J")
  {
    std::mt19937_64 rng(99);
    for (auto [dim, N] : {std::pair<std::size_t, Residue>{2, 7}, {4, 5}, {6, 4}, {8, 3}}) {
      SymplecticSpace sp(N, dim);
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<Residue> v(dim);
        for (auto &c : v)
          c = static_cast<Residue>(rng() % N);
        auto m = transvection_matrix(sp, ResidueVector(N, v), static_cast<Residue>(rng() % N));
        CHECK(sp.is_symplectic(m));
        CHECK(sp.is_symplectic(m * m));
      }
    }
    SymplecticSpace sp(3, 2);
    CHECK_FALSE(sp.is_symplectic(ResidueMatrix(3, 2, {1, 0, 0, 2})));
  }

  TEST_CASE("projective action kills scalars")
  {
    auto p = matrix_action_perm(ResidueMatrix::scalar(3, 2, 2), VectorDomain::Kind::projective);
    CHECK(p.is_identity());
    auto q = matrix_action_perm(ResidueMatrix::scalar(3, 2, 2), VectorDomain::Kind::all_vectors);
    CHECK_FALSE(q.is_identity());
    CHECK_THROWS(matrix_action_perm(ResidueMatrix(4, 2, {2, 0, 0, 1}),
                                    VectorDomain::Kind::all_vectors));
  }

  TEST_CASE("chain transvection groups versus exhaustive closure")
  {
    for (auto [dim, N] : {std::pair<std::size_t, Residue>{2, 2}, {2, 3}, {2, 4}, {2, 5}, {4, 2}}) {
      auto gens = chain_transvection_perms(dim, N, VectorDomain::Kind::all_vectors);
      std::vector<oracle::Perm> raw;
      for (auto const &g : gens)
        raw.emplace_back(g.images().begin(), g.images().end());
      std::size_t ex = oracle::closure_size(raw);
      CHECK(BigInt(ex) == classical_order(ClassicalKind::Sp, dim, N).value());
    }
  }
}
