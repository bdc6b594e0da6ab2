#include "hmlab/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace hmlab {

namespace {

bool is_identity(std::vector<Point> const &h)
{
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] != i)
      return false;
  }
  return true;
}

// index of the first point moved by h
Point first_moved(std::vector<Point> const &h)
{
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] != i)
      return static_cast<Point>(i);
  }
  return 0;
}

std::vector<Point> to_vector(Permutation const &p)
{
  return {p.images().begin(), p.images().end()};
}

// union-find for block systems
struct Partition
{
  explicit Partition(std::size_t n)
  : parent(n)
  { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

  std::size_t find(std::size_t x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (b < a)
      std::swap(a, b);
    parent[b] = a;
    return true;
  }

  std::vector<std::size_t> parent;
};

} // namespace

std::string to_string(SchreierSimsOptions::Variant v)
{
  return v == SchreierSimsOptions::Variant::deterministic ? "deterministic"
                                                          : "randomized+verified";
}

PermGroup PermGroup::trivial(std::size_t degree)
{
  PermGroup g;
  g.degree_ = degree;
  return g;
}

PermGroup PermGroup::build(std::span<Permutation const> gens, std::size_t degree,
                           SchreierSimsOptions const &opts)
{
  PermGroup g = trivial(degree);
  return g.with_generators(gens, opts);
}

PermGroup PermGroup::with_generators(std::span<Permutation const> extra,
                                     SchreierSimsOptions const &opts) const
{
  PermGroup g = *this;
  g.variant_ = opts.variant;

  std::vector<Point> h, scratch;
  std::size_t deepest = 0;
  bool changed = false;
  for (auto const &x : extra) {
    if (x.degree() != degree_)
      throw std::invalid_argument("PermGroup: generator degree mismatch");
    if (x.is_identity())
      continue;
    if (std::find(g.generators_.begin(), g.generators_.end(), x) != g.generators_.end())
      continue;
    g.generators_.push_back(x);

    // A new group generator has to be a strong generator at every level it
    // fixes the earlier base points of, level 0 included.
    h = to_vector(x);
    std::size_t stop = 0;
    while (stop < g.levels_.size() && h[g.levels_[stop].base_point] == g.levels_[stop].base_point)
      ++stop;
    g.install(h, 0, stop);
    deepest = std::max(deepest, std::min(stop, g.levels_.size() - 1));
    changed = true;
  }
  if (!changed)
    return g;

  if (opts.variant == SchreierSimsOptions::Variant::randomized_verified) {
    g.run_random_phase(opts);
    deepest = g.levels_.size() - 1;
  }
  g.run_schreier_sims(deepest, opts);
  return g;
}

void PermGroup::add_level(Point base_point)
{
  Level L;
  L.base_point = base_point;
  L.position.assign(degree_, -1);
  L.position[base_point] = 0;
  L.orbit.push_back(base_point);
  L.reps.push_back(Permutation::identity(degree_));
  L.inv_reps.push_back(Permutation::identity(degree_));
  L.checked.push_back(0);
  L.tree_parent.push_back(static_cast<std::size_t>(-1));
  L.tree_gen.push_back(static_cast<std::size_t>(-1));
  levels_.push_back(std::move(L));
}

void PermGroup::add_generator_to_level(std::size_t level, std::size_t gen_index)
{
  Level &L = levels_[level];
  L.gens.push_back(gen_index);
  std::size_t const old_size = L.orbit.size();
  std::size_t const first_new_gen = L.gens.size() - 1;

  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    std::size_t gi = k < old_size ? first_new_gen : 0;
    for (; gi < L.gens.size(); ++gi) {
      Permutation const &s = strong_[L.gens[gi]];
      Point y = s[L.orbit[k]];
      if (L.position[y] >= 0)
        continue;
      L.position[y] = static_cast<std::int32_t>(L.orbit.size());
      L.orbit.push_back(y);
      Permutation rep = compose(L.reps[k], s);
      L.inv_reps.push_back(rep.inverse());
      L.reps.push_back(std::move(rep));
      L.checked.push_back(0);
      L.tree_parent.push_back(k);
      L.tree_gen.push_back(gi);
    }
  }
}

void PermGroup::install(std::vector<Point> const &h, std::size_t first, std::size_t stop)
{
  strong_.emplace_back(h);
  std::size_t const gi = strong_.size() - 1;
  if (stop >= levels_.size()) {
    stop = levels_.size();
    add_level(first_moved(h));
  }
  for (std::size_t l = first; l <= stop; ++l)
    add_generator_to_level(l, gi);
}

std::size_t PermGroup::sift(std::vector<Point> &h, std::size_t level,
                            std::vector<Point> &scratch) const
{
  scratch.resize(h.size());
  for (; level < levels_.size(); ++level) {
    Level const &L = levels_[level];
    Point gamma = h[L.base_point];
    if (gamma == L.base_point)
      continue;
    std::int32_t pos = L.position[gamma];
    if (pos < 0)
      return level;
    auto inv = L.inv_reps[static_cast<std::size_t>(pos)].images();
    for (std::size_t x = 0; x < h.size(); ++x)
      scratch[x] = inv[h[x]];
    h.swap(scratch);
  }
  return level;
}

void PermGroup::budget_exceeded() const
{
  std::ostringstream os;
  os << "base length " << levels_.size() << ", " << strong_.size()
     << " strong generators, order so far " << factored_order().str();
  throw BudgetExceeded("Schreier-Sims exceeded its time budget", os.str());
}

void PermGroup::run_schreier_sims(std::size_t start_level, SchreierSimsOptions const &opts)
{
  std::vector<Point> h(degree_), scratch(degree_);
  std::size_t tick = 0;

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start_level);
  while (i >= 0) {
    std::size_t const li = static_cast<std::size_t>(i);
    bool restart = false;
    for (std::size_t k = 0; k < levels_[li].orbit.size() && !restart; ++k) {
      while (levels_[li].checked[k] < levels_[li].gens.size()) {
        Level &L = levels_[li];
        std::size_t const gi = L.checked[k]++;
        Permutation const &s = strong_[L.gens[gi]];
        Point gamma = s[L.orbit[k]];
        auto const child = static_cast<std::size_t>(L.position[gamma]);
        // tree edges give trivial Schreier generators
        if (L.tree_parent[child] == k && L.tree_gen[child] == gi)
          continue;

        if (opts.deadline && (++tick & 63u) == 0 && Clock::now() > *opts.deadline)
          budget_exceeded();

        auto rep = L.reps[k].images();
        auto inv = L.inv_reps[child].images();
        bool trivial = true;
        for (std::size_t x = 0; x < degree_; ++x) {
          h[x] = inv[s[rep[x]]];
          trivial = trivial && h[x] == x;
        }
        if (trivial)
          continue;

        std::size_t stop = sift(h, li + 1, scratch);
        if (stop == levels_.size() && is_identity(h))
          continue;

        install(h, li + 1, stop);
        i = static_cast<std::ptrdiff_t>(std::min(stop, levels_.size() - 1));
        restart = true;
        break;
      }
    }
    if (!restart)
      --i;
  }
}

void PermGroup::run_random_phase(SchreierSimsOptions const &opts)
{
  // product replacement
  std::mt19937_64 rng(opts.seed);
  std::vector<Permutation> pool = generators_;
  while (pool.size() < 10)
    pool.push_back(pool[pool.size() % generators_.size()]);
  Permutation acc = Permutation::identity(degree_);
  auto next = [&]() {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::size_t a = pick(rng), b = pick(rng);
    while (b == a)
      b = pick(rng);
    bool right = rng() & 1u;
    Permutation const &x = (rng() & 1u) ? pool[b] : pool[b].inverse();
    pool[a] = right ? compose(pool[a], x) : compose(x, pool[a]);
    acc = compose(acc, pool[a]);
    return acc;
  };
  for (int warm = 0; warm < 50; ++warm)
    next();

  std::vector<Point> h, scratch;
  unsigned streak = 0;
  std::size_t tick = 0;
  while (streak < opts.random_streak) {
    if (opts.deadline && (++tick & 15u) == 0 && Clock::now() > *opts.deadline)
      budget_exceeded();
    h = to_vector(next());
    std::size_t stop = sift(h, 0, scratch);
    if (stop == levels_.size() && is_identity(h)) {
      ++streak;
      continue;
    }
    streak = 0;
    // the level-0 orbit is complete under the input generators, so stop >= 1
    install(h, 1, stop);
  }
}

std::vector<Point> PermGroup::base() const
{
  std::vector<Point> b;
  for (auto const &L : levels_)
    b.push_back(L.base_point);
  return b;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const
{
  std::vector<std::size_t> sizes;
  for (auto const &L : levels_)
    sizes.push_back(L.orbit.size());
  return sizes;
}

Permutation const &PermGroup::transversal(std::size_t level, Point point) const
{
  Level const &L = levels_.at(level);
  std::int32_t pos = L.position.at(point);
  if (pos < 0)
    throw std::invalid_argument("PermGroup::transversal: point not in basic orbit");
  return L.reps[static_cast<std::size_t>(pos)];
}

std::vector<Permutation> PermGroup::stabilizer_generators(std::size_t level) const
{
  std::vector<Permutation> result;
  if (level >= levels_.size())
    return result;
  for (std::size_t gi : levels_[level].gens)
    result.push_back(strong_[gi]);
  return result;
}

BigInt PermGroup::order() const
{
  BigInt n = 1;
  for (auto const &L : levels_)
    n *= L.orbit.size();
  return n;
}

FactoredInteger PermGroup::factored_order() const
{
  FactoredInteger f;
  for (auto const &L : levels_)
    f *= FactoredInteger::of(L.orbit.size());
  return f;
}

bool PermGroup::contains(Permutation const &g) const
{
  if (g.degree() != degree_)
    return false;
  std::vector<Point> h = to_vector(g), scratch;
  std::size_t stop = sift(h, 0, scratch);
  return stop == levels_.size() && is_identity(h);
}

bool PermGroup::is_transitive() const
{
  return hmlab::is_transitive(generators_, degree_);
}

PermGroup normal_closure(PermGroup const &group, std::span<Permutation const> seeds,
                         SchreierSimsOptions const &opts)
{
  PermGroup closure = PermGroup::trivial(group.degree());
  std::vector<Permutation> pending;
  for (auto const &s : seeds) {
    if (s.degree() != group.degree())
      throw std::invalid_argument("normal_closure: seed degree mismatch");
    if (!closure.contains(s)) {
      closure = closure.with_generators(std::span(&s, 1), opts);
      pending.push_back(s);
    }
  }
  while (!pending.empty()) {
    Permutation h = std::move(pending.back());
    pending.pop_back();
    for (auto const &g : group.generators()) {
      Permutation c = conjugate(h, g);
      if (!closure.contains(c)) {
        closure = closure.with_generators(std::span(&c, 1), opts);
        pending.push_back(std::move(c));
      }
    }
  }
  return closure;
}

PermGroup derived_subgroup(PermGroup const &group, SchreierSimsOptions const &opts)
{
  auto const &gens = group.generators();
  std::vector<Permutation> comms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  }
  return normal_closure(group, comms, opts);
}

PrimitivityResult is_primitive(PermGroup const &group)
{
  std::size_t const n = group.degree();
  if (!group.is_transitive())
    throw std::invalid_argument("is_primitive: group is not transitive");

  PrimitivityResult result;
  std::size_t best_block = n;
  std::vector<std::vector<Point>> best;
  auto const &gens = group.generators();

  for (Point beta = 1; beta < n; ++beta) {
    Partition part(n);
    std::vector<std::pair<Point, Point>> queue{{0, beta}};
    part.unite(0, beta);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto [a, b] = queue[q];
      for (auto const &g : gens) {
        if (part.unite(g[a], g[b]))
          queue.emplace_back(g[a], g[b]);
      }
    }
    std::size_t block = 0;
    for (std::size_t x = 0; x < n; ++x)
      block += part.find(x) == part.find(0);
    if (block < best_block) {
      best_block = block;
      std::vector<std::vector<Point>> blocks;
      std::vector<std::int64_t> id_of(n, -1);
      for (std::size_t x = 0; x < n; ++x) {
        std::size_t r = part.find(x);
        if (id_of[r] < 0) {
          id_of[r] = static_cast<std::int64_t>(blocks.size());
          blocks.emplace_back();
        }
        blocks[static_cast<std::size_t>(id_of[r])].push_back(static_cast<Point>(x));
      }
      best = std::move(blocks);
    }
  }
  if (best_block < n) {
    result.primitive = false;
    result.blocks = std::move(best);
  }
  return result;
}

} // namespace hmlab
