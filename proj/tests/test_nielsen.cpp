#include <doctest.h>

#include <random>
#include <sstream>

#include "hmlab/nielsen.hpp"
#include "oracles.hpp"

using namespace hmlab;

TEST_SUITE("nielsen")
{
  TEST_CASE("class counts against the union-find oracle")
  {
    struct Row
    {
      GroupSpec spec;
      std::size_t b;
      std::size_t frozen;
    };
    // frozen values were produced by oracle::nielsen_count
    for (auto [spec, b, frozen] :
         {Row{GroupSpec::sym3(), 4, 4}, Row{GroupSpec::sym3(), 6, 40}, Row{GroupSpec::sym4(), 6, 120},
          Row{GroupSpec::xn(5), 6, 240}, Row{GroupSpec::xn(2), 6, 120}, Row{GroupSpec::sym3(), 8, 364}}) {
      auto ref = spec.kind == GroupKind::xn ? oracle::xn(spec.n)
                                            : oracle::symmetric(spec.kind == GroupKind::sym3 ? 3 : 4);
      CHECK(oracle::nielsen_count(ref, b) == frozen);
      auto cs = enumerate_classes(make_group(spec), b, EnumerationMethod::orbit_bfs);
      CHECK(cs.size() == frozen);
    }
  }

  TEST_CASE("X_5 without the unit scalars has 960 classes")
  {
    // inner conjugation only: 40 * (5^2 - 1)
    CHECK(oracle::nielsen_count(oracle::xn(5), 6, false) == 960);
  }

  TEST_CASE("orbit-bfs and exhaustive enumeration agree")
  {
    for (auto [spec, b] : {std::pair{GroupSpec::sym3(), std::size_t(4)}, {GroupSpec::sym3(), 6},
                           {GroupSpec::sym4(), 6}, {GroupSpec::xn(5), 6}, {GroupSpec::sym4(), 8}}) {
      auto g = make_group(spec);
      CHECK(enumerate_classes(g, b, EnumerationMethod::orbit_bfs) ==
            enumerate_classes(g, b, EnumerationMethod::exhaustive));
    }
  }

  TEST_CASE("sym4 b=8 has 5460 classes")
  {
    auto cs = enumerate_classes(make_group(GroupSpec::sym4()), 8, EnumerationMethod::orbit_bfs);
    CHECK(cs.size() == 5460);
  }

  TEST_CASE("rejects odd or small b")
  {
    auto g = make_group(GroupSpec::sym3());
    CHECK_THROWS(enumerate_classes(g, 5, EnumerationMethod::orbit_bfs));
    CHECK_THROWS(enumerate_classes(g, 2, EnumerationMethod::orbit_bfs));
  }

  TEST_CASE("Hurwitz moves")
  {
    auto g = make_group(GroupSpec::sym4());
    Tuple t = seed_tuple(*g, 6);
    CHECK(is_admissible(*g, t));
    CHECK(g->generates(t));
    CHECK(tuple_product(*g, t) == g->identity());
    std::mt19937_64 rng(11);
    for (int k = 0; k < 500; ++k) {
      std::size_t i = 1 + rng() % 5;
      Tuple m = hurwitz_move(*g, t, i);
      CHECK(hurwitz_move(*g, m, i, MoveDirection::inverse) == t);
      CHECK(is_admissible(*g, m));
      CHECK(tuple_product(*g, m) == g->identity());
      // (a, b) -> (b, b^-1 a b)
      CHECK(m[i - 1] == t[i]);
      CHECK(m[i] == g->conj(t[i - 1], t[i]));
      t = m;
    }
    CHECK_THROWS_AS(hurwitz_move(*g, t, 0), std::out_of_range);
    CHECK_THROWS_AS(hurwitz_move(*g, t, 6), std::out_of_range);
  }

  TEST_CASE("canonical form is a class invariant")
  {
    for (auto spec : {GroupSpec::sym4(), GroupSpec::xn(5)}) {
      auto g = make_group(spec);
      auto cs = enumerate_classes(g, 6, EnumerationMethod::orbit_bfs);
      std::mt19937_64 rng(5);
      for (int k = 0; k < 300; ++k) {
        Tuple const &t = cs.representative(rng() % cs.size());
        CHECK(canonicalize(*g, t) == t);
        auto x = static_cast<Element>(rng() % g->order());
        Tuple c = conjugate_tuple(*g, t, x);
        CHECK(cs.index_of(c) == cs.index_of(t));
        auto const &autos = g->outer_automorphisms();
        auto const &alpha = autos[rng() % autos.size()];
        for (auto &e : c)
          e = alpha[e];
        CHECK(canonicalize(*g, c) == t);
      }
      Tuple bad(6, g->identity());
      CHECK_THROWS(canonicalize(*g, bad));
    }
  }

  TEST_CASE("fibers of the projection to S3")
  {
    auto s4 = enumerate_classes(make_group(GroupSpec::sym4()), 6, EnumerationMethod::orbit_bfs);
    auto x5 = enumerate_classes(make_group(GroupSpec::xn(5)), 6, EnumerationMethod::orbit_bfs);
    auto omega = enumerate_classes(make_group(GroupSpec::sym3()), 6, EnumerationMethod::orbit_bfs);
    for (auto [cs, fiber] : {std::pair{&s4, std::size_t(3)}, {&x5, 6}}) {
      std::map<std::size_t, std::size_t> count;
      for (auto w : project_to_s3(*cs, omega))
        ++count[w];
      CHECK(count.size() == 40);
      for (auto [w, n] : count)
        CHECK(n == fiber);
    }
  }

  TEST_CASE("class cache round trip")
  {
    auto cs = enumerate_classes(make_group(GroupSpec::xn(5)), 6, EnumerationMethod::orbit_bfs);
    std::stringstream ss;
    write_class_cache(ss, cs);
    std::string const text = ss.str();
    CHECK(text.starts_with("nielsen-cache v1 xn5 6 240\n"));
    ClassSet back = read_class_cache(ss);
    CHECK(back == cs);
    std::stringstream again;
    write_class_cache(again, back);
    CHECK(again.str() == text);
  }

  TEST_CASE("class cache rejects bad input")
  {
    auto cs = enumerate_classes(make_group(GroupSpec::sym3()), 4, EnumerationMethod::orbit_bfs);
    std::stringstream ss;
    write_class_cache(ss, cs);
    std::string text = ss.str();

    std::stringstream wrong_count(std::string(text).replace(text.find(" 4\n"), 3, " 5\n"));
    CHECK_THROWS(read_class_cache(wrong_count));
    std::stringstream bad_header("nielsen-cache v2 sym3 4 4\n");
    CHECK_THROWS(read_class_cache(bad_header));
    // (12)(12)(12)(12) is admissible-looking but does not generate
    std::stringstream not_generating("nielsen-cache v1 sym3 4 1\n1 1 1 1\n");
    CHECK_THROWS(read_class_cache(not_generating));
  }
}
