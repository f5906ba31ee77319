#include "cycles/words.hpp"

#include <map>
#include <random>

#include "cycles/base.hpp"
#include "cycles/surface.hpp"
#include "doctest.h"

using namespace cycles;

TEST_CASE("free and cyclic reduction") {
  CHECK(free_reduce({1, -1}) == Word{});
  CHECK(free_reduce({1, 2, -2, -1}) == Word{});
  CHECK(free_reduce({1, 2, -2, 3}) == Word{1, 3});
  CHECK(cyclic_reduce({1, 2, -1}) == Word{2});
  CHECK(inverse_word({1, 2}) == Word{-2, -1});
}

TEST_CASE("link relator of the 4g-gon") {
  // Genus 2: tracing the vertex link of the standard octagon must visit all
  // eight sides once, reading each letter twice.
  PolygonSurface S(2);
  const Word& r = S.relator();
  CHECK(r.size() == 8);
  std::map<int, int> count;
  for (int x : r) count[std::abs(x)]++;
  for (auto [g, c] : count) {
    CHECK(g >= 1);
    CHECK(g <= 4);
    CHECK(c == 2);
  }
  // Each generator appears once positively and once negatively.
  std::map<int, int> net;
  for (int x : r) net[std::abs(x)] += (x > 0 ? 1 : -1);
  for (auto [g, n] : net) CHECK(n == 0);

  PolygonSurface S3(3);
  CHECK(S3.relator().size() == 12);
}

TEST_CASE("dehn algorithm: triviality") {
  PolygonSurface S(2);
  const DehnSolver& d = S.solver();
  CHECK(d.is_trivial({}));
  CHECK(d.is_trivial(S.relator()));
  CHECK(d.is_trivial(inverse_word(S.relator())));
  CHECK_FALSE(d.is_trivial({1}));
  CHECK_FALSE(d.is_trivial({1, 2}));
  // Commutator of the handle-one generators is a separating curve, not
  // trivial.
  CHECK_FALSE(d.is_trivial({1, 2, -1, -2}));
  // Conjugates of the relator are trivial.
  Word w{3, -2};
  Word conj = w;
  conj.insert(conj.end(), S.relator().begin(), S.relator().end());
  Word winv = inverse_word(w);
  conj.insert(conj.end(), winv.begin(), winv.end());
  CHECK(d.is_trivial(conj));
}

TEST_CASE("dehn algorithm: random trivial words") {
  PolygonSurface S(2);
  const DehnSolver& d = S.solver();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    // Build a product of conjugated relators; always trivial.
    Word w;
    int factors = 1 + static_cast<int>(rng() % 3);
    for (int f = 0; f < factors; ++f) {
      Word conj;
      int len = static_cast<int>(rng() % 5);
      for (int i = 0; i < len; ++i) {
        int g = 1 + static_cast<int>(rng() % 4);
        conj.push_back((rng() % 2) ? g : -g);
      }
      Word r = (rng() % 2) ? S.relator() : inverse_word(S.relator());
      Word piece = conj;
      piece.insert(piece.end(), r.begin(), r.end());
      Word ci = inverse_word(conj);
      piece.insert(piece.end(), ci.begin(), ci.end());
      w.insert(w.end(), piece.begin(), piece.end());
    }
    CHECK(d.is_trivial(w));
  }
}

TEST_CASE("dehn algorithm: random nontrivial words stay nontrivial") {
  PolygonSurface S(2);
  const DehnSolver& d = S.solver();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    // A single generator conjugated and multiplied by relators is never
    // trivial (it has nontrivial image either in homology or in the
    // abelianized quotient of its conjugacy class).
    int g = 1 + static_cast<int>(rng() % 4);
    Word w{g};
    Word conj;
    int len = static_cast<int>(rng() % 4);
    for (int i = 0; i < len; ++i) {
      int h = 1 + static_cast<int>(rng() % 4);
      conj.push_back((rng() % 2) ? h : -h);
    }
    Word full = conj;
    full.push_back(g);
    Word ci = inverse_word(conj);
    full.insert(full.end(), ci.begin(), ci.end());
    if (rng() % 2) {
      full.insert(full.end(), S.relator().begin(), S.relator().end());
    }
    CHECK_FALSE(d.is_trivial(full));
    (void)w;
  }
}

TEST_CASE("conjugacy") {
  PolygonSurface S(2);
  const DehnSolver& d = S.solver();
  Word w{1, 2, -3};
  CHECK(d.conjugate(w, w));
  // Rotations are conjugate.
  CHECK(d.conjugate(w, {2, -3, 1}));
  // Explicit conjugation.
  Word t{4, -2};
  Word conj = t;
  conj.insert(conj.end(), w.begin(), w.end());
  Word ti = inverse_word(t);
  conj.insert(conj.end(), ti.begin(), ti.end());
  CHECK(d.conjugate(w, conj));
  // A generator is not conjugate to its inverse in the surface group.
  CHECK_FALSE(d.conjugate({1}, {-1}));
  CHECK_FALSE(d.conjugate({1}, {2}));
  CHECK(d.conjugacy_key(w) == d.conjugacy_key(conj));
}
