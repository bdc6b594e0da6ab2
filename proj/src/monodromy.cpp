#include "hmlab/monodromy.hpp"

#include <stdexcept>

#include "hmlab/symplectic.hpp"

namespace hmlab {

std::vector<Permutation> induced_on_quotient(std::span<Permutation const> perms,
                                             std::vector<std::size_t> const &projection,
                                             std::size_t quotient_size)
{
  std::vector<Permutation> result;
  for (std::size_t gi = 0; gi < perms.size(); ++gi) {
    auto const &p = perms[gi];
    std::vector<std::int64_t> images(quotient_size, -1);
    for (std::size_t x = 0; x < p.degree(); ++x) {
      std::size_t from = projection[x], to = projection[p[static_cast<Point>(x)]];
      if (images[from] < 0)
        images[from] = static_cast<std::int64_t>(to);
      else if (images[from] != static_cast<std::int64_t>(to))
        throw std::logic_error("induced_on_quotient: generator " + std::to_string(gi + 1) +
                               " does not respect the fibers");
    }
    std::vector<Point> img(quotient_size);
    for (std::size_t q = 0; q < quotient_size; ++q) {
      if (images[q] < 0)
        throw std::logic_error("induced_on_quotient: projection is not surjective");
      img[q] = static_cast<Point>(images[q]);
    }
    result.emplace_back(std::move(img));
  }
  return result;
}

HurwitzSetup make_hurwitz_setup(GroupSpec spec, std::size_t b, EnumerationMethod method)
{
  if (spec.kind == GroupKind::sym3)
    throw std::invalid_argument("make_hurwitz_setup: Sigma needs sym4 or xnN, not sym3");
  auto s3 = make_group(GroupSpec::sym3());
  ClassSet omega = enumerate_classes(s3, b, method);
  ClassSet sigma = enumerate_classes(make_group(spec), b, method);
  auto projection = project_to_s3(sigma, omega);
  auto sigma_gens = braid_perms(sigma);
  auto omega_gens = braid_perms(omega);

  // equivariance: project(beta . x) = beta . project(x)
  auto induced = induced_on_quotient(sigma_gens, projection, omega.size());
  if (induced != omega_gens)
    throw std::logic_error("make_hurwitz_setup: projection Sigma -> Omega is not equivariant");

  auto seed = omega.index_of(seed_tuple(*s3, b));
  if (!seed)
    throw std::logic_error("make_hurwitz_setup: S3 seed class missing from Omega");

  HurwitzSetup setup{std::move(sigma), std::move(omega), std::move(projection),
                     std::move(sigma_gens), std::move(omega_gens), *seed};
  return setup;
}

std::vector<Point> fiber_points(std::vector<std::size_t> const &projection, std::size_t omega_class)
{
  std::vector<Point> pts;
  for (std::size_t x = 0; x < projection.size(); ++x) {
    if (projection[x] == omega_class)
      pts.push_back(static_cast<Point>(x));
  }
  return pts;
}

std::vector<Permutation> fiber_restrict(std::vector<std::size_t> const &projection,
                                        std::span<Permutation const> elements,
                                        std::size_t omega_class)
{
  auto const pts = fiber_points(projection, omega_class);
  std::vector<std::int64_t> local(projection.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i)
    local[pts[i]] = static_cast<std::int64_t>(i);

  std::vector<Permutation> result;
  for (auto const &e : elements) {
    std::vector<Point> images(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::int64_t y = local[e[pts[i]]];
      if (y < 0)
        throw std::invalid_argument("fiber_restrict: element moves Omega class " +
                                    std::to_string(omega_class));
      images[i] = static_cast<Point>(y);
    }
    result.emplace_back(std::move(images));
  }
  return result;
}

MonodromyReport analyze(HurwitzSetup const &setup, SchreierSimsOptions const &opts)
{
  MonodromyReport r;
  r.group = setup.sigma.group().spec().str();
  r.b = setup.b();
  r.degree = setup.sigma.size();
  r.omega_degree = setup.omega.size();
  r.transitive = is_transitive(setup.sigma_gens, r.degree);
  r.omega_transitive = is_transitive(setup.omega_gens, r.omega_degree);

  // re-check equivariance against the generators actually analyzed
  if (induced_on_quotient(setup.sigma_gens, setup.projection, r.omega_degree) != setup.omega_gens)
    throw std::logic_error("analyze: projection is not equivariant");

  PermGroup omega_group = PermGroup::build(setup.omega_gens, r.omega_degree, opts);
  r.omega_order = omega_group.factored_order();
  if (r.omega_transitive)
    r.omega_primitive = is_primitive(omega_group).primitive;

  PermGroup group = PermGroup::build(setup.sigma_gens, r.degree, opts);
  r.group_order = group.factored_order();
  r.kernel_order = r.group_order.divided_by(r.omega_order);
  r.variant = to_string(group.variant());

  for (std::size_t w = 0; w < r.omega_degree; ++w)
    ++r.fiber_sizes[fiber_points(setup.projection, w).size()];

  r.notes.push_back("base length " + std::to_string(group.base_length()) + ", " +
                    std::to_string(group.strong_generators().size()) + " strong generators");
  return r;
}

std::vector<Permutation> chain_transvection_perms(std::size_t dimension, std::uint64_t modulus,
                                                  VectorDomain::Kind domain)
{
  SymplecticSpace space(static_cast<Residue>(modulus), dimension);
  VectorDomain dom(domain, dimension, static_cast<Residue>(modulus));
  std::vector<Permutation> perms;
  for (auto const &v : chain_vectors(space, dimension + 1))
    perms.push_back(dom.action(transvection_matrix(space, v)));
  return perms;
}

OmegaCrosscheck omega_transvection_crosscheck(std::size_t g)
{
  std::size_t const dim = 2 * g + 4;
  if (VectorDomain::raw_size(dim, 3) > 200'000)
    throw std::invalid_argument("omega_transvection_crosscheck: P^" + std::to_string(dim - 1) +
                                "(Z/3) too large for this check");

  OmegaCrosscheck r;
  r.g = g;
  r.expected = classical_order(ClassicalKind::PSp, dim, 3);

  auto chain = chain_transvection_perms(dim, 3, VectorDomain::Kind::projective);
  r.points = chain.front().degree();
  r.chain_order = PermGroup::build(chain, r.points).factored_order();

  ClassSet omega = enumerate_classes(make_group(GroupSpec::sym3()), 2 * g + 6,
                                     EnumerationMethod::orbit_bfs);
  auto nielsen = braid_perms(omega);
  r.nielsen_order = PermGroup::build(nielsen, omega.size()).factored_order();

  for (auto const &p : chain)
    r.chain_cycle_types.push_back(p.cycle_type());
  for (auto const &p : nielsen)
    r.nielsen_cycle_types.push_back(p.cycle_type());
  return r;
}

CommutatorWitness commutator_witness(HurwitzSetup const &setup)
{
  CommutatorWitness r;
  r.b = setup.b();
  std::size_t const n = setup.sigma.size();
  // [beta_1^3, beta_2^3] = beta_1^-3 beta_2^-3 beta_1^3 beta_2^3
  BraidWord const word({-1, -1, -1, -2, -2, -2, 1, 1, 1, 2, 2, 2});
  Permutation comm = word.evaluate(setup.sigma_gens, n);

  r.nontrivial = !comm.is_identity();
  for (std::size_t x = 0; x < n; ++x)
    r.moved_points += comm[static_cast<Point>(x)] != x;

  r.in_omega_kernel = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (setup.projection[comm[static_cast<Point>(x)]] != setup.projection[x]) {
      r.in_omega_kernel = false;
      break;
    }
  }

  std::vector<bool> fixed(setup.omega.size(), true);
  for (std::size_t x = 0; x < n; ++x) {
    if (comm[static_cast<Point>(x)] != x)
      fixed[setup.projection[x]] = false;
  }
  for (std::size_t w = 0; w < fixed.size(); ++w) {
    if (fixed[w])
      r.fixed_fibers.push_back(w);
  }
  return r;
}

ChainRepCheck chain_rep_check(std::size_t g, std::uint64_t modulus)
{
  std::size_t const dim = 2 * g + 2;
  if (VectorDomain::raw_size(dim, static_cast<Residue>(modulus)) > chain_domain_limit)
    throw std::invalid_argument("chain_rep_check: (Z/" + std::to_string(modulus) + ")^" +
                                std::to_string(dim) + " has more than " +
                                std::to_string(chain_domain_limit) +
                                " vectors; choose a smaller g or N");
  ChainRepCheck r;
  r.g = g;
  r.modulus = modulus;
  auto perms = chain_transvection_perms(dim, modulus, VectorDomain::Kind::all_vectors);
  r.domain_size = perms.front().degree();
  r.computed = PermGroup::build(perms, r.domain_size).factored_order();
  r.expected = classical_order(ClassicalKind::Sp, dim, modulus);
  return r;
}

CubeClosureCheck cube_closure_check(std::size_t g, std::uint64_t modulus)
{
  std::size_t const dim = 2 * g + 2;
  if (VectorDomain::raw_size(dim, static_cast<Residue>(modulus)) > chain_domain_limit)
    throw std::invalid_argument("cube_closure_check: (Z/" + std::to_string(modulus) + ")^" +
                                std::to_string(dim) + " has more than " +
                                std::to_string(chain_domain_limit) +
                                " vectors; choose a smaller g or N");
  CubeClosureCheck r;
  r.g = g;
  r.modulus = modulus;
  auto perms = chain_transvection_perms(dim, modulus, VectorDomain::Kind::all_vectors);
  PermGroup full = PermGroup::build(perms, perms.front().degree());
  Permutation cube = perms.back().pow(3);
  r.full_order = full.factored_order();
  r.closure_order = normal_closure(full, std::span(&cube, 1)).factored_order();
  return r;
}

} // namespace hmlab
