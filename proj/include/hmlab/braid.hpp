#pragma once

#include <span>
#include <string>
#include <vector>

#include "hmlab/nielsen.hpp"
#include "hmlab/permutation.hpp"

namespace hmlab {

/// A word in the braid generators: letter +i is beta_i, -i its inverse
/// (i is 1-based).
class BraidWord
{
public:
  BraidWord() = default;
  /// Throws std::invalid_argument on a zero letter.
  explicit BraidWord(std::vector<int> letters);

  /// Space-separated signed integers, e.g. "1 2 -1".
  static BraidWord parse(std::string const &text);

  std::vector<int> const &letters() const
  { return letters_; }
  bool empty() const
  { return letters_.empty(); }

  BraidWord operator*(BraidWord const &o) const;
  BraidWord inverse() const;
  BraidWord pow(unsigned k) const;

  /// Product of the letters left to right; gens[i-1] is beta_i.
  Permutation evaluate(std::span<Permutation const> gens, std::size_t degree) const;

  std::string str() const;

  friend bool operator==(BraidWord const &, BraidWord const &) = default;

private:
  std::vector<int> letters_;
};

/// beta_1 beta_2 ... beta_{b-1} beta_{b-1} ... beta_1; trivial in the
/// spherical braid group.
BraidWord full_twist_word(std::size_t b);

/// Permutations of class indices induced by the forward Hurwitz moves
/// beta_1..beta_{b-1}.
std::vector<Permutation> braid_perms(ClassSet const &cs);

} // namespace hmlab
