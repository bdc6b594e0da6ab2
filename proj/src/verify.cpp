#include "hmlab/verify.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "hmlab/coset.hpp"
#include "hmlab/monodromy.hpp"
#include "hmlab/predict.hpp"

namespace hmlab {

namespace {

FactoredInteger fi(std::uint64_t n)
{
  return FactoredInteger::of(n);
}

std::string yes(bool b)
{
  return b ? "yes" : "no";
}

/// Collects failure descriptions; ok() when none.
struct Checker
{
  std::vector<std::string> failures;
  std::vector<std::string> facts;

  void expect(bool cond, std::string const &what)
  {
    if (!cond)
      failures.push_back(what);
  }
  void note(std::string s)
  { facts.push_back(std::move(s)); }

  bool ok() const
  { return failures.empty(); }
  std::string detail() const
  {
    std::string s;
    for (auto const &f : failures)
      s += (s.empty() ? "FAILED: " : "; ") + f;
    for (auto const &f : facts)
      s += (s.empty() ? "" : "; ") + f;
    return s;
  }
};

bool braid_relations_hold(std::vector<Permutation> const &g)
{
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (j == i + 1) {
        if (compose(compose(g[i], g[j]), g[i]) != compose(compose(g[j], g[i]), g[j]))
          return false;
      } else if (compose(g[i], g[j]) != compose(g[j], g[i])) {
        return false;
      }
    }
  }
  return true;
}

bool sphere_relations_hold(std::vector<Permutation> const &g, std::size_t b)
{
  std::size_t const n = g.front().degree();
  if (!full_twist_word(b).evaluate(g, n).is_identity())
    return false;
  std::vector<int> delta;
  for (std::size_t i = 1; i < b; ++i)
    delta.push_back(static_cast<int>(i));
  return BraidWord(delta).pow(static_cast<unsigned>(b)).evaluate(g, n).is_identity();
}

/// Every element, by closing under right multiplication; empty if the
/// group has more than `cap` elements.
std::size_t exhaustive_order(std::vector<Permutation> const &gens, std::size_t cap)
{
  std::size_t const n = gens.front().degree();
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> queue{Permutation::identity(n)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const &g : gens) {
      Permutation p = compose(queue[i], g);
      if (seen.insert(p).second) {
        if (seen.size() > cap)
          return 0;
        queue.push_back(std::move(p));
      }
    }
  }
  return seen.size();
}

std::vector<Permutation> regular_representation(GroupTable const &g,
                                                std::vector<Element> const &elems)
{
  std::vector<Permutation> out;
  for (Element e : elems) {
    std::vector<Point> images(g.order());
    for (std::size_t x = 0; x < g.order(); ++x)
      images[x] = g.mult(static_cast<Element>(x), e);
    out.emplace_back(std::move(images));
  }
  return out;
}

void criterion_1(Checker &c)
{
  struct Case
  {
    GroupSpec spec;
    std::size_t b;
    std::size_t expected;
  };
  for (auto [spec, b, expected] : {Case{GroupSpec::sym3(), 4, 4}, Case{GroupSpec::sym3(), 6, 40},
                                   Case{GroupSpec::sym4(), 6, 120}, Case{GroupSpec::xn(5), 6, 240}}) {
    auto g = make_group(spec);
    ClassSet bfs = enumerate_classes(g, b, EnumerationMethod::orbit_bfs);
    ClassSet scan = enumerate_classes(g, b, EnumerationMethod::exhaustive);
    std::string const name = "(" + spec.str() + ", b=" + std::to_string(b) + ")";
    c.expect(bfs.size() == expected, name + " orbit-bfs gave " + std::to_string(bfs.size()));
    c.expect(bfs == scan, name + " orbit-bfs and exhaustive disagree");
    c.note(name + " " + std::to_string(bfs.size()));
  }
}

void criterion_2(Checker &c)
{
  auto setup = make_hurwitz_setup(GroupSpec::sym4(), 6);
  auto r = analyze(setup);
  FactoredInteger const psp43 = fi(25920);
  FactoredInteger const kernel = fi(3).pow(40) * fi(2).pow(16);
  c.expect(r.degree == 120, "degree " + std::to_string(r.degree));
  c.expect(r.transitive, "not transitive");
  c.expect(r.group_order == kernel * psp43, "|G2| = " + r.group_order.str());
  c.expect(r.omega_order == psp43, "Omega image " + r.omega_order.str());
  c.expect(r.kernel_order == kernel, "kernel " + r.kernel_order.str());
  c.note("|G2| = " + r.group_order.str());
}

void criterion_3(Checker &c)
{
  auto setup = make_hurwitz_setup(GroupSpec::sym4(), 6);
  PermGroup omega = PermGroup::build(setup.omega_gens, setup.omega.size());
  auto prim = is_primitive(omega);
  c.expect(setup.omega.size() == 40, "|Omega| = " + std::to_string(setup.omega.size()));
  c.expect(prim.primitive, "Omega image is imprimitive");
  c.note("primitive on " + std::to_string(setup.omega.size()) + " points: " + yes(prim.primitive));
}

void criterion_4(Checker &c)
{
  for (std::size_t b : {6, 8}) {
    std::string const tag = "b=" + std::to_string(b);
    auto setup = make_hurwitz_setup(GroupSpec::sym4(), b);
    std::size_t const n = setup.sigma.size();
    auto fiber = fiber_points(setup.projection, setup.seed_omega);
    auto fixes_fiber = [&](Permutation const &p) {
      for (Point x : fiber)
        if (p[x] != x)
          return false;
      return true;
    };
    Permutation b1 = BraidWord({1, 1, 1}).evaluate(setup.sigma_gens, n);
    int const last = static_cast<int>(b - 1);
    Permutation bl = BraidWord({last, last, last}).evaluate(setup.sigma_gens, n);
    c.expect(fixes_fiber(b1), tag + ": beta_1^3 moves the seed fiber");
    c.expect(!fixes_fiber(bl), tag + ": beta_{b-1}^3 fixes the seed fiber");

    std::vector<Permutation> gens(setup.sigma_gens.begin() + 2, setup.sigma_gens.end());
    auto restricted = fiber_restrict(setup.projection, gens, setup.seed_omega);
    PermGroup s = PermGroup::build(restricted, fiber.size());
    std::uint64_t const expected = b == 6 ? 6 : 720;
    c.expect(s.factored_order() == fi(expected),
             tag + ": fiber group order " + s.factored_order().decimal());
    c.note(tag + " fiber group order " + s.factored_order().decimal() + " on " +
           std::to_string(fiber.size()) + " points");
  }
}

void criterion_5(Checker &c)
{
  auto const start = std::chrono::steady_clock::now();
  auto g0 = coset_representation(make_hurwitz_setup(GroupSpec::sym4(), 6));
  double const g0_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(g0_seconds < 60, "g=0 took " + std::to_string(g0_seconds) + " s (limit 60)");
  c.expect(g0.degree == 80, "g=0 degree " + std::to_string(g0.degree));
  c.expect(g0.image.factored_order() == fi(2).pow(16) * fi(25920),
           "g=0 image " + g0.image.factored_order().str());
  auto g1 = coset_representation(make_hurwitz_setup(GroupSpec::sym4(), 8));
  c.expect(g1.degree == 728, "g=1 degree " + std::to_string(g1.degree));
  c.expect(g1.image.factored_order() == fi(2).pow(168) * fi(4585351680ull),
           "g=1 image " + g1.image.factored_order().str());
  c.note("g=0: 80 cosets, " + g0.image.factored_order().str());
  c.note("g=1: 728 cosets, " + g1.image.factored_order().str());
}

void criterion_6(Checker &c)
{
  auto w = commutator_witness(make_hurwitz_setup(GroupSpec::sym4(), 8));
  c.expect(w.nontrivial, "commutator is trivial");
  c.expect(w.in_omega_kernel, "commutator moves Omega");
  c.expect(!w.fixed_fibers.empty(), "no fiber fixed pointwise");
  c.note("moves " + std::to_string(w.moved_points) + " classes, fixes " +
         std::to_string(w.fixed_fibers.size()) + " fibers pointwise");
}

void criterion_7(Checker &c)
{
  for (auto [g, N] : {std::pair<std::size_t, std::uint64_t>{0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 3}}) {
    auto r = chain_rep_check(g, N);
    std::string const tag = "(g=" + std::to_string(g) + ", N=" + std::to_string(N) + ")";
    c.expect(r.ok(), tag + " computed " + r.computed.decimal() + ", expected " +
                         r.expected.decimal());
    c.note(tag + " " + r.computed.decimal());
  }
}

void criterion_8(Checker &c)
{
  for (auto [g, N] : {std::pair<std::size_t, std::uint64_t>{0, 2}, {0, 4}, {0, 5}, {1, 2}, {0, 3}}) {
    auto r = cube_closure_check(g, N);
    std::string const tag = "(g=" + std::to_string(g) + ", N=" + std::to_string(N) + ")";
    if (N % 3 == 0)
      c.expect(r.closure_order.is_one(), tag + " closure not trivial");
    else
      c.expect(r.is_full(), tag + " closure order " + r.closure_order.decimal());
    c.note(tag + " " + (r.is_full() ? "full" : r.closure_order.is_one() ? "trivial" : "proper"));
  }
}

void criterion_9(Checker &c)
{
  auto r = analyze(make_hurwitz_setup(GroupSpec::xn(5), 6));
  auto p = predict(TheoremTag::thm3, {.g = {}, .b = 6, .N = 5});
  FactoredInteger const expected = fi(60).pow(40) * fi(25920);
  c.expect(p.total == expected, "predict(thm3) = " + p.total.str());
  c.expect(r.degree == 240, "degree " + std::to_string(r.degree));
  c.expect(r.group_order == p.total, "computed " + r.group_order.str());
  c.expect(r.kernel_order == classical_order(ClassicalKind::PSp, 2, 5).pow(40),
           "kernel " + r.kernel_order.str());
  c.note("|G| = " + r.group_order.str());
}

void criterion_10(Checker &c)
{
  // braid relations, sphere relations, move admissibility, equivariance
  for (auto [spec, b] : {std::pair{GroupSpec::xn(2), std::size_t(6)}, {GroupSpec::sym4(), 6},
                         {GroupSpec::xn(5), 6}, {GroupSpec::sym4(), 8}}) {
    std::string const tag = spec.str() + " b=" + std::to_string(b);
    auto setup = make_hurwitz_setup(spec, b);
    c.expect(braid_relations_hold(setup.sigma_gens), tag + ": braid relations fail on classes");
    c.expect(braid_relations_hold(setup.omega_gens), tag + ": braid relations fail on Omega");
    c.expect(sphere_relations_hold(setup.sigma_gens, b), tag + ": full twist acts nontrivially");
    c.expect(sphere_relations_hold(setup.omega_gens, b),
             tag + ": full twist acts nontrivially on Omega");
    GroupTable const &g = setup.sigma.group();
    bool admissible = true;
    for (auto const &t : setup.sigma.representatives())
      for (std::size_t i = 1; i < b; ++i)
        for (auto dir : {MoveDirection::forward, MoveDirection::inverse}) {
          Tuple m = hurwitz_move(g, t, i, dir);
          admissible = admissible && is_admissible(g, m) && tuple_product(g, m) == g.identity();
        }
    c.expect(admissible, tag + ": a move leaves the admissible tuples");
    bool equivariant = true;
    for (std::size_t i = 0; i + 1 < b; ++i)
      for (std::size_t x = 0; x < setup.sigma.size(); ++x)
        equivariant = equivariant && setup.projection[setup.sigma_gens[i][static_cast<Point>(x)]] ==
                                         setup.omega_gens[i][static_cast<Point>(setup.projection[x])];
    c.expect(equivariant, tag + ": projection not equivariant");
  }

  // M^T J M = J on random words in chain transvections
  std::mt19937_64 rng(20260415);
  std::size_t words = 0;
  for (auto [dim, N] : {std::pair<std::size_t, std::uint64_t>{2, 5}, {4, 3}, {4, 4}, {6, 7}, {8, 10}}) {
    SymplecticSpace space(N, dim);
    std::vector<ResidueMatrix> gens;
    for (auto const &v : chain_vectors(space, dim + 1))
      gens.push_back(transvection_matrix(space, v));
    for (int trial = 0; trial < 40; ++trial, ++words) {
      ResidueMatrix m = ResidueMatrix::identity(N, dim);
      for (int k = 0; k < 12; ++k)
        m = m * gens[rng() % gens.size()];
      c.expect(space.is_symplectic(m), "non-symplectic product over Z/" + std::to_string(N));
    }
  }

  // BSGS against exhaustive closure
  std::vector<std::pair<std::string, std::vector<Permutation>>> groups;
  for (auto spec : {GroupSpec::sym3(), GroupSpec::sym4(), GroupSpec::xn(2), GroupSpec::xn(4),
                    GroupSpec::xn(5), GroupSpec::xn(7)}) {
    auto g = make_group(spec);
    groups.emplace_back(spec.str() + " regular", regular_representation(*g, g->admissible_class()));
  }
  for (auto [dim, N] : {std::pair<std::size_t, std::uint64_t>{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 7},
                        {4, 2}, {4, 3}}) {
    groups.emplace_back("Sp chain dim " + std::to_string(dim) + " mod " + std::to_string(N),
                        chain_transvection_perms(dim, N, VectorDomain::Kind::all_vectors));
    groups.emplace_back("PSp chain dim " + std::to_string(dim) + " mod " + std::to_string(N),
                        chain_transvection_perms(dim, N, VectorDomain::Kind::projective));
  }
  for (std::size_t b : {6, 8}) {
    auto setup = make_hurwitz_setup(GroupSpec::sym4(), b);
    std::vector<Permutation> gens{setup.sigma_gens[0]};
    gens.insert(gens.end(), setup.sigma_gens.begin() + 2, setup.sigma_gens.end());
    groups.emplace_back("fiber group b=" + std::to_string(b),
                        fiber_restrict(setup.projection, gens, setup.seed_omega));
  }
  for (std::size_t b : {4, 6})
    groups.emplace_back("S3 classes b=" + std::to_string(b),
                        braid_perms(enumerate_classes(make_group(GroupSpec::sym3()), b,
                                                      EnumerationMethod::orbit_bfs)));

  std::size_t compared = 0;
  for (auto const &[name, gens] : groups) {
    std::size_t ex = exhaustive_order(gens, 5000);
    if (ex == 0)
      continue;
    ++compared;
    auto bsgs = PermGroup::build(gens, gens.front().degree()).order();
    c.expect(bsgs == ex, name + ": BSGS " + bsgs.str() + " vs exhaustive " + std::to_string(ex));
  }
  c.note(std::to_string(words) + " symplectic words, " + std::to_string(compared) +
         " groups compared with exhaustive closure");
}

struct Criterion
{
  int id;
  char const *title;
  double limit;
  std::function<void(Checker &)> run;
};

} // namespace

std::string CriterionResult::line() const
{
  std::ostringstream os;
  os << (passed() ? "PASS" : "FAIL") << "  " << std::setw(2) << id << "  " << title << "  ("
     << std::fixed << std::setprecision(2) << seconds << " s, limit " << std::setprecision(0)
     << limit_seconds << " s)";
  if (ok && !passed())
    os << "  over time limit;";
  if (!detail.empty())
    os << "  " << detail;
  return os.str();
}

std::vector<CriterionResult> run_desk_suite(DeskSuiteOptions const &opts)
{
  std::vector<Criterion> const criteria{
      {1, "Nielsen class counts", 30, criterion_1},
      {2, "g=0 monodromy orders", 120, criterion_2},
      {3, "g=0 Omega image primitive", 10, criterion_3},
      {4, "beta cube fiber witnesses", 60, criterion_4},
      {5, "coset representations", 30 * 60, criterion_5},
      {6, "g=1 commutator witness", 300, criterion_6},
      {7, "chain representation orders", 120, criterion_7},
      {8, "cube closures", 120, criterion_8},
      {9, "Theorem 3 at b=6, N=5", 1200, criterion_9},
      {10, "property suites", 120, criterion_10},
  };

  std::vector<CriterionResult> results;
  for (auto const &cr : criteria) {
    if (!opts.only.empty() && !opts.only.contains(cr.id))
      continue;
    CriterionResult r;
    r.id = cr.id;
    r.title = cr.title;
    r.limit_seconds = cr.limit;
    Checker c;
    auto const start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
      r.ok = c.ok();
      r.detail = c.detail();
    } catch (std::exception const &e) {
      r.ok = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opts.progress)
      *opts.progress << r.line() << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

} // namespace hmlab
