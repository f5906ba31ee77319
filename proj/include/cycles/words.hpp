#pragma once

#include <string>
#include <vector>

namespace cycles {

// A word in the surface group generators.  Letter +k (k >= 1) is generator
// k-1, letter -k its inverse.  Generator 2i is the a-side of handle i,
// generator 2i+1 the b-side.
using Word = std::vector<int>;

std::string word_str(const Word& w);

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse_word(const Word& w);

// Dehn word machinery for a one-relator surface-group presentation.  The
// relator must satisfy the metric small-cancellation condition that every
// piece has length 1; the constructor checks this.
class DehnSolver {
 public:
  explicit DehnSolver(Word relator);

  const Word& relator() const { return relator_; }

  // Greedy Dehn reduction of a linear word: freely reduce, then repeatedly
  // replace any subword longer than half a cyclic conjugate of the relator
  // (or its inverse) by the inverse of the complement.
  Word dehn_reduce(const Word& w) const;

  // Same, but subwords are searched cyclically, so the result has minimal
  // length in its conjugacy class.
  Word cyclic_dehn_reduce(const Word& w) const;

  bool is_trivial(const Word& w) const;

  // Conjugacy test for cyclically Dehn-reduced words: closure under
  // rotation and exact-half relator swaps.
  bool conjugate(const Word& u, const Word& v) const;

  // Lexicographically least word in the rotation/half-swap closure; equal
  // keys iff conjugate.  Used for isotopy-class hashing of curves.
  Word conjugacy_key(const Word& w) const;

 private:
  std::vector<Word> rotations_;  // all cyclic rotations of relator and inverse
  Word relator_;
  int half_;

  // Longest match of w[i..] against any rotation; returns (rotation, length).
  std::pair<int, int> best_match(const Word& w, size_t i) const;
  std::vector<Word> closure(const Word& w) const;
};

}  // namespace cycles
