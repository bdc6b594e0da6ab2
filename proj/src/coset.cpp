#include "hmlab/coset.hpp"

#include <map>
#include <stdexcept>

namespace hmlab {

H2StarContext H2StarContext::build(HurwitzSetup const &setup)
{
  std::size_t const b = setup.b();
  if (setup.sigma.group().spec().kind != GroupKind::sym4 || (b != 6 && b != 8))
    throw std::invalid_argument(
        "H2* membership needs Sigma over sym4 with g = 0 or 1 (b = 6 or 8): for g > 1 the fiber "
        "group is simple and has no Z/2 quotient");

  H2StarContext ctx;
  ctx.genus_ = (b - 6) / 2;
  ctx.omega_class_ = setup.seed_omega;
  ctx.projection_ = setup.projection;
  ctx.fiber_ = fiber_points(setup.projection, ctx.omega_class_);
  ctx.local_.assign(setup.sigma.size(), -1);
  for (std::size_t i = 0; i < ctx.fiber_.size(); ++i)
    ctx.local_[ctx.fiber_[i]] = static_cast<std::int64_t>(i);

  std::vector<Permutation> stabilizing{setup.sigma_gens[0]};
  for (std::size_t i = 3; i < b; ++i)
    stabilizing.push_back(setup.sigma_gens[i - 1]);
  auto restricted = fiber_restrict(setup.projection, stabilizing, ctx.omega_class_);
  ctx.fiber_group_ = PermGroup::build(restricted, ctx.fiber_.size());
  ctx.derived_ = derived_subgroup(ctx.fiber_group_);
  if (ctx.derived_.order() * 2 != ctx.fiber_group_.order())
    throw std::logic_error("H2StarContext: [S, S] does not have index 2 in S");
  return ctx;
}

std::size_t H2StarContext::omega_image(Permutation const &gamma) const
{
  return projection_[gamma[fiber_.front()]];
}

Permutation H2StarContext::restriction(Permutation const &gamma) const
{
  std::vector<Point> images(fiber_.size());
  for (std::size_t i = 0; i < fiber_.size(); ++i) {
    std::int64_t y = local_[gamma[fiber_[i]]];
    if (y < 0)
      throw std::invalid_argument("H2StarContext::restriction: element moves the base class");
    images[i] = static_cast<Point>(y);
  }
  return Permutation(std::move(images));
}

bool H2StarContext::restriction_in_kernel(std::vector<Point> const &local_images) const
{
  Permutation r(local_images);
  if (!fiber_group_.contains(r))
    throw std::logic_error("H2StarContext: fiber restriction lies outside S");
  return derived_.contains(r);
}

bool H2StarContext::contains(Permutation const &gamma) const
{
  if (omega_image(gamma) != omega_class_)
    return false;
  auto r = restriction(gamma);
  return restriction_in_kernel({r.images().begin(), r.images().end()});
}

bool H2StarContext::same_coset(Permutation const &gamma1, Permutation const &gamma2) const
{
  std::size_t const target = omega_image(gamma1);
  if (omega_image(gamma2) != target)
    return false;

  // gamma2^-1 restricted to the fiber over `target`, as Sigma point -> fiber position over w
  std::map<Point, Point> back;
  for (std::size_t i = 0; i < fiber_.size(); ++i)
    back.emplace(gamma2[fiber_[i]], static_cast<Point>(i));

  std::vector<Point> images(fiber_.size());
  for (std::size_t i = 0; i < fiber_.size(); ++i)
    images[i] = back.at(gamma1[fiber_[i]]);
  return restriction_in_kernel(images);
}

CosetRepresentation coset_representation(HurwitzSetup const &setup, std::size_t coset_budget,
                                         SchreierSimsOptions const &opts)
{
  H2StarContext const ctx = H2StarContext::build(setup);
  std::size_t const n = setup.sigma.size();
  std::size_t const ngen = setup.sigma_gens.size();

  std::vector<Permutation> inverses;
  for (auto const &g : setup.sigma_gens)
    inverses.push_back(g.inverse());

  std::vector<Permutation> reps{Permutation::identity(n)};
  std::vector<BraidWord> words{BraidWord()};
  std::map<std::size_t, std::vector<std::size_t>> by_omega{{ctx.omega_image(reps[0]), {0}}};
  std::vector<std::vector<Point>> action(ngen);

  for (std::size_t j = 0; j < reps.size(); ++j) {
    if (opts.deadline && Clock::now() > *opts.deadline)
      throw BudgetExceeded("coset enumeration exceeded its time budget",
                           std::to_string(reps.size()) + " cosets found");
    for (std::size_t i = 0; i < ngen; ++i) {
      for (int sign : {1, -1}) {
        Permutation cand = compose(reps[j], sign > 0 ? setup.sigma_gens[i] : inverses[i]);
        auto &bucket = by_omega[ctx.omega_image(cand)];
        std::size_t found = reps.size();
        for (std::size_t k : bucket) {
          if (ctx.same_coset(cand, reps[k])) {
            found = k;
            break;
          }
        }
        if (found == reps.size()) {
          if (reps.size() >= coset_budget)
            throw BudgetExceeded("coset enumeration exceeded its budget of " +
                                     std::to_string(coset_budget) + " cosets",
                                 std::to_string(reps.size()) + " cosets found");
          bucket.push_back(found);
          reps.push_back(std::move(cand));
          words.push_back(words[j] * BraidWord({sign * static_cast<int>(i + 1)}));
        }
        if (sign > 0)
          action[i].push_back(static_cast<Point>(found));
      }
    }
  }

  CosetRepresentation r;
  r.genus = ctx.genus();
  r.degree = reps.size();
  for (auto &a : action)
    r.generators.emplace_back(std::move(a));
  r.words = std::move(words);
  r.image = PermGroup::build(r.generators, r.degree, opts);
  return r;
}

} // namespace hmlab
