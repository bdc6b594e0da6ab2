#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hmlab/nielsen.hpp"

namespace hmlab {

void write_class_cache(std::ostream &os, ClassSet const &cs)
{
  os << "nielsen-cache v1 " << cs.group().spec().str() << ' ' << cs.b() << ' ' << cs.size()
     << '\n';
  for (auto const &t : cs.representatives()) {
    for (std::size_t i = 0; i < t.size(); ++i)
      os << (i ? " " : "") << t[i];
    os << '\n';
  }
}

ClassSet read_class_cache(std::istream &is)
{
  std::string line;
  if (!std::getline(is, line))
    throw std::runtime_error("class cache: empty input");

  std::istringstream header(line);
  std::string magic, version, kind;
  std::size_t b = 0, count = 0;
  if (!(header >> magic >> version >> kind >> b >> count) || magic != "nielsen-cache" ||
      version != "v1")
    throw std::runtime_error("class cache: bad header '" + line + "'");

  auto group = make_group(GroupSpec::parse(kind));
  std::vector<Tuple> reps;
  reps.reserve(count);
  while (reps.size() < count && std::getline(is, line)) {
    std::istringstream row(line);
    Tuple t;
    unsigned long e;
    while (row >> e) {
      if (e >= group->order())
        throw std::runtime_error("class cache: element index out of range");
      t.push_back(static_cast<Element>(e));
    }
    if (t.size() != b)
      throw std::runtime_error("class cache: tuple of wrong length on line " +
                               std::to_string(reps.size() + 2));
    if (!is_admissible(*group, t) || canonicalize_unchecked(*group, t) != t)
      throw std::runtime_error("class cache: line " + std::to_string(reps.size() + 2) +
                               " is not a canonical admissible tuple");
    if (!reps.empty() && !(reps.back() < t))
      throw std::runtime_error("class cache: tuples are not in increasing order");
    reps.push_back(std::move(t));
  }
  if (reps.size() != count)
    throw std::runtime_error("class cache: expected " + std::to_string(count) + " tuples, found " +
                             std::to_string(reps.size()));
  return ClassSet(std::move(group), b, std::move(reps));
}

} // namespace hmlab
