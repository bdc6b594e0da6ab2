#include "hmlab/nielsen.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hmlab {

namespace {

void check_b(std::size_t b)
{
  if (b < 4 || b % 2)
    throw std::invalid_argument("number of branch points b must be even and at least 4 (got " +
                                std::to_string(b) + ")");
}

} // namespace

Element tuple_product(GroupTable const &g, Tuple const &t)
{
  Element p = g.identity();
  for (Element e : t)
    p = g.mult(p, e);
  return p;
}

bool is_admissible(GroupTable const &g, Tuple const &t)
{
  for (Element e : t) {
    if (e >= g.order() || !g.is_admissible(e))
      return false;
  }
  return tuple_product(g, t) == g.identity() && g.generates(t);
}

Tuple conjugate_tuple(GroupTable const &g, Tuple const &t, Element x)
{
  Tuple r(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    r[i] = g.conj(t[i], x);
  return r;
}

Tuple hurwitz_move(GroupTable const &g, Tuple const &t, std::size_t i, MoveDirection dir)
{
  if (i < 1 || i + 1 > t.size())
    throw std::out_of_range("hurwitz_move: position " + std::to_string(i) + " outside 1.." +
                            std::to_string(t.size() - 1));
  Tuple r = t;
  Element a = t[i - 1], b = t[i];
  if (dir == MoveDirection::forward) {
    r[i - 1] = b;
    r[i] = g.conj(a, b);
  } else {
    r[i - 1] = g.conj(b, g.inv(a));
    r[i] = a;
  }
  return r;
}

Tuple canonicalize_unchecked(GroupTable const &g, Tuple const &t)
{
  Tuple best = t;
  Tuple base(t.size());
  Tuple cand(t.size());
  for (auto const &alpha : g.outer_automorphisms()) {
    for (std::size_t i = 0; i < t.size(); ++i)
      base[i] = alpha[t[i]];
    for (std::size_t x = 0; x < g.order(); ++x) {
      // compare lazily against the current best
      bool smaller = false;
      std::size_t i = 0;
      for (; i < t.size(); ++i) {
        cand[i] = g.conj(base[i], static_cast<Element>(x));
        if (cand[i] != best[i]) {
          smaller = cand[i] < best[i];
          break;
        }
      }
      if (!smaller)
        continue;
      for (++i; i < t.size(); ++i)
        cand[i] = g.conj(base[i], static_cast<Element>(x));
      best = cand;
    }
  }
  return best;
}

Tuple canonicalize(GroupTable const &g, Tuple const &t)
{
  if (!is_admissible(g, t))
    throw std::invalid_argument("canonicalize: tuple " + tuple_str(g, t) + " is not admissible");
  return canonicalize_unchecked(g, t);
}

Tuple seed_tuple(GroupTable const &g, std::size_t b)
{
  check_b(b);
  GroupTable const s3 = GroupTable::build(GroupSpec::sym3());
  Element const t12 = s3.find("(12)");
  Element const t23 = s3.find("(23)");

  Tuple s3_seed(b, t23);
  s3_seed[0] = s3_seed[1] = t12;
  if (g.spec().kind == GroupKind::sym3)
    return s3_seed;

  // candidate lifts of each S3 entry, section element first
  std::vector<std::vector<Element>> lifts(b);
  for (std::size_t i = 0; i < b; ++i) {
    Element sec = g.section(s3_seed[i]);
    lifts[i].push_back(sec);
    for (Element e : g.admissible_class()) {
      if (g.to_s3(e) == s3_seed[i] && e != sec)
        lifts[i].push_back(e);
    }
  }

  // odometer over the first b-1 entries; the last is forced by the product
  std::vector<std::size_t> digit(b - 1, 0);
  Tuple t(b);
  while (true) {
    Element p = g.identity();
    for (std::size_t i = 0; i + 1 < b; ++i) {
      t[i] = lifts[i][digit[i]];
      p = g.mult(p, t[i]);
    }
    t[b - 1] = g.inv(p);
    if (g.to_s3(t[b - 1]) == s3_seed[b - 1] && is_admissible(g, t))
      return t;

    std::size_t pos = b - 1;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < lifts[pos].size())
        break;
      digit[pos] = 0;
      if (pos == 0)
        throw std::runtime_error("seed_tuple: no admissible lift of the S3 seed exists for " +
                                 g.spec().str());
    }
  }
}

std::string tuple_str(GroupTable const &g, Tuple const &t)
{
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i)
      s += ", ";
    s += t[i] < g.order() ? g.label(t[i]) : "?";
  }
  return s + ")";
}

ClassSet::ClassSet(GroupTablePtr group, std::size_t b, std::vector<Tuple> representatives)
: group_(std::move(group)), b_(b), reps_(std::move(representatives))
{
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (reps_[i].size() != b_)
      throw std::invalid_argument("ClassSet: representative has the wrong length");
    if (!index_.emplace(reps_[i], i).second)
      throw std::invalid_argument("ClassSet: duplicate representative");
  }
}

std::optional<std::size_t> ClassSet::find_canonical(Tuple const &canonical) const
{
  auto it = index_.find(canonical);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ClassSet::index_of(Tuple const &t) const
{
  if (!is_admissible(*group_, t))
    return std::nullopt;
  return find_canonical(canonicalize_unchecked(*group_, t));
}

unsigned configured_threads()
{
  if (char const *env = std::getenv("HMLAB_THREADS")) {
    char *end = nullptr;
    unsigned long n = std::strtoul(env, &end, 10);
    if (end != env && n >= 1)
      return static_cast<unsigned>(std::min<unsigned long>(n, 256));
  }
  return 1;
}

namespace {

std::vector<Tuple> classes_by_orbit(GroupTable const &g, std::size_t b)
{
  Tuple seed = canonicalize(g, seed_tuple(g, b));
  std::set<Tuple> seen{seed};
  std::deque<Tuple> queue{seed};
  while (!queue.empty()) {
    Tuple t = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 1; i < b; ++i) {
      Tuple c = canonicalize_unchecked(g, hurwitz_move(g, t, i));
      if (seen.insert(c).second)
        queue.push_back(std::move(c));
    }
  }
  return {seen.begin(), seen.end()};
}

void scan_shard(GroupTable const &g, std::size_t b, std::size_t first_lo, std::size_t first_hi,
                std::set<Tuple> &out)
{
  auto const &cls = g.admissible_class();
  std::size_t const k = cls.size();
  std::vector<std::size_t> digit(b - 1, 0);
  Tuple t(b);
  for (std::size_t f = first_lo; f < first_hi; ++f) {
    std::fill(digit.begin(), digit.end(), 0);
    digit[0] = f;
    while (true) {
      Element p = g.identity();
      for (std::size_t i = 0; i + 1 < b; ++i) {
        t[i] = cls[digit[i]];
        p = g.mult(p, t[i]);
      }
      t[b - 1] = g.inv(p);
      if (g.is_admissible(t[b - 1]) && g.generates(t))
        out.insert(canonicalize_unchecked(g, t));

      std::size_t pos = b - 1;
      while (--pos > 0) {
        if (++digit[pos] < k)
          break;
        digit[pos] = 0;
      }
      if (pos == 0)
        break;
    }
  }
}

std::vector<Tuple> classes_by_scan(GroupTable const &g, std::size_t b)
{
  std::size_t const k = g.admissible_class().size();
  unsigned const threads = std::max(1u, std::min<unsigned>(configured_threads(), static_cast<unsigned>(k)));
  std::vector<std::set<Tuple>> parts(threads);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    std::size_t lo = k * w / threads, hi = k * (w + 1) / threads;
    if (threads == 1)
      scan_shard(g, b, lo, hi, parts[w]);
    else
      workers.emplace_back(scan_shard, std::cref(g), b, lo, hi, std::ref(parts[w]));
  }
  for (auto &w : workers)
    w.join();
  std::set<Tuple> all;
  for (auto &p : parts)
    all.merge(p);
  return {all.begin(), all.end()};
}

} // namespace

ClassSet enumerate_classes(GroupTablePtr group, std::size_t b, EnumerationMethod method)
{
  check_b(b);
  std::vector<Tuple> reps = method == EnumerationMethod::orbit_bfs ? classes_by_orbit(*group, b)
                                                                   : classes_by_scan(*group, b);
  if (reps.empty())
    throw std::runtime_error("enumerate_classes: no admissible tuple for " + group->spec().str());
  return ClassSet(std::move(group), b, std::move(reps));
}

std::vector<std::size_t> project_to_s3(ClassSet const &cs, ClassSet const &omega)
{
  if (omega.group().spec().kind != GroupKind::sym3 || omega.b() != cs.b())
    throw std::invalid_argument("project_to_s3: omega must be the S3 class set with the same b");
  GroupTable const &g = cs.group();
  GroupTable const &s3 = omega.group();
  std::vector<std::size_t> map(cs.size());
  Tuple image(cs.b());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    Tuple const &t = cs.representative(i);
    for (std::size_t j = 0; j < t.size(); ++j)
      image[j] = g.to_s3(t[j]);
    auto idx = omega.find_canonical(canonicalize_unchecked(s3, image));
    if (!idx)
      throw std::logic_error("project_to_s3: image of class " + std::to_string(i) +
                             " is not an S3 Nielsen class");
    map[i] = *idx;
  }
  return map;
}

} // namespace hmlab
