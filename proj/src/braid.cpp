#include "hmlab/braid.hpp"

#include <sstream>
#include <stdexcept>

namespace hmlab {

BraidWord::BraidWord(std::vector<int> letters)
: letters_(std::move(letters))
{
  for (int l : letters_) {
    if (l == 0)
      throw std::invalid_argument("BraidWord: letters must be nonzero");
  }
}

BraidWord BraidWord::parse(std::string const &text)
{
  std::istringstream is(text);
  std::vector<int> letters;
  int l;
  while (is >> l)
    letters.push_back(l);
  if (!is.eof())
    throw std::invalid_argument("BraidWord: cannot parse '" + text + "'");
  return BraidWord(std::move(letters));
}

BraidWord BraidWord::operator*(BraidWord const &o) const
{
  std::vector<int> l = letters_;
  l.insert(l.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(std::move(l));
}

BraidWord BraidWord::inverse() const
{
  std::vector<int> l(letters_.rbegin(), letters_.rend());
  for (int &x : l)
    x = -x;
  return BraidWord(std::move(l));
}

BraidWord BraidWord::pow(unsigned k) const
{
  BraidWord result;
  for (unsigned i = 0; i < k; ++i)
    result = result * *this;
  return result;
}

Permutation BraidWord::evaluate(std::span<Permutation const> gens, std::size_t degree) const
{
  std::vector<Permutation> inverses(gens.size());
  Permutation result = Permutation::identity(degree);
  for (int l : letters_) {
    std::size_t i = static_cast<std::size_t>(l < 0 ? -l : l);
    if (i > gens.size())
      throw std::out_of_range("BraidWord: letter " + std::to_string(l) + " has no generator");
    if (l > 0) {
      result = compose(result, gens[i - 1]);
    } else {
      if (inverses[i - 1].degree() == 0)
        inverses[i - 1] = gens[i - 1].inverse();
      result = compose(result, inverses[i - 1]);
    }
  }
  return result;
}

std::string BraidWord::str() const
{
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i)
    os << (i ? " " : "") << letters_[i];
  return os.str();
}

BraidWord full_twist_word(std::size_t b)
{
  std::vector<int> l;
  for (std::size_t i = 1; i < b; ++i)
    l.push_back(static_cast<int>(i));
  for (std::size_t i = b - 1; i >= 1; --i)
    l.push_back(static_cast<int>(i));
  return BraidWord(std::move(l));
}

std::vector<Permutation> braid_perms(ClassSet const &cs)
{
  std::vector<Permutation> result;
  GroupTable const &g = cs.group();
  for (std::size_t i = 1; i < cs.b(); ++i) {
    std::vector<Point> images(cs.size());
    for (std::size_t x = 0; x < cs.size(); ++x) {
      Tuple moved = canonicalize_unchecked(g, hurwitz_move(g, cs.representative(x), i));
      auto idx = cs.find_canonical(moved);
      if (!idx)
        throw std::logic_error("braid_perms: class set is not closed under beta_" +
                               std::to_string(i));
      images[x] = static_cast<Point>(*idx);
    }
    result.emplace_back(std::move(images));
  }
  return result;
}

} // namespace hmlab
