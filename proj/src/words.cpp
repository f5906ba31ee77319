#include "cycles/words.hpp"

#include <algorithm>
#include <set>

#include "cycles/base.hpp"

namespace cycles {

std::string word_str(const Word& w) {
  std::string s;
  for (int x : w) {
    int g = std::abs(x) - 1;
    char c = static_cast<char>('a' + g % 26);
    if (x < 0) c = static_cast<char>(c - 'a' + 'A');
    s += c;
  }
  return s.empty() ? "1" : s;
}

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  while (r.size() >= 2 && r.front() == -r.back()) {
    r.erase(r.begin());
    r.pop_back();
  }
  return r;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

DehnSolver::DehnSolver(Word relator) : relator_(std::move(relator)) {
  require(!relator_.empty() && relator_.size() % 2 == 0, errc::internal, "bad relator");
  half_ = static_cast<int>(relator_.size()) / 2;
  Word inv = inverse_word(relator_);
  for (size_t s = 0; s < relator_.size(); ++s) {
    Word r1, r2;
    for (size_t i = 0; i < relator_.size(); ++i) {
      r1.push_back(relator_[(s + i) % relator_.size()]);
      r2.push_back(inv[(s + i) % inv.size()]);
    }
    rotations_.push_back(r1);
    rotations_.push_back(r2);
  }
  // Piece condition: every length-2 subword determines its rotation uniquely.
  std::set<std::pair<int, int>> pairs;
  for (const Word& r : rotations_) {
    auto key = std::make_pair(r[0], r[1]);
    require(!pairs.count(key), errc::internal, "relator is not C'(1/6); Dehn's algorithm invalid");
    pairs.insert(key);
  }
}

std::pair<int, int> DehnSolver::best_match(const Word& w, size_t i) const {
  int best_rot = -1, best_len = 0;
  for (size_t r = 0; r < rotations_.size(); ++r) {
    const Word& rot = rotations_[r];
    int len = 0;
    while (i + len < w.size() && len < static_cast<int>(rot.size()) &&
           w[i + len] == rot[len])
      ++len;
    if (len > best_len) {
      best_len = len;
      best_rot = static_cast<int>(r);
    }
  }
  return {best_rot, best_len};
}

Word DehnSolver::dehn_reduce(const Word& w) const {
  Word cur = free_reduce(w);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < cur.size(); ++i) {
      auto [r, len] = best_match(cur, i);
      if (len > half_) {
        const Word& rot = rotations_[r];
        Word repl = inverse_word(Word(rot.begin() + len, rot.end()));
        Word next(cur.begin(), cur.begin() + i);
        next.insert(next.end(), repl.begin(), repl.end());
        next.insert(next.end(), cur.begin() + i + len, cur.end());
        cur = free_reduce(next);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

Word DehnSolver::cyclic_dehn_reduce(const Word& w) const {
  Word cur = cyclic_reduce(dehn_reduce(w));
  bool changed = true;
  while (changed) {
    changed = false;
    size_t n = cur.size();
    if (n == 0) break;
    // Search for a long relator match in the doubled word.
    Word dbl = cur;
    dbl.insert(dbl.end(), cur.begin(), cur.end());
    for (size_t i = 0; i < n && !changed; ++i) {
      auto [r, len] = best_match(dbl, i);
      len = std::min<int>(len, static_cast<int>(n));
      if (len > half_) {
        const Word& rot = rotations_[r];
        Word repl = inverse_word(Word(rot.begin() + len, rot.end()));
        // Rotate so that the match is a prefix, then substitute.
        Word rotated;
        for (size_t k = 0; k < n; ++k) rotated.push_back(cur[(i + k) % n]);
        Word next = repl;
        next.insert(next.end(), rotated.begin() + len, rotated.end());
        cur = cyclic_reduce(free_reduce(next));
        changed = true;
      }
    }
  }
  return cur;
}

bool DehnSolver::is_trivial(const Word& w) const { return dehn_reduce(w).empty(); }

std::vector<Word> DehnSolver::closure(const Word& w) const {
  // All words reachable from w by rotations and exact-half relator swaps.
  std::set<Word> seen;
  std::vector<Word> queue{w};
  seen.insert(w);
  size_t safety = 0;
  while (!queue.empty()) {
    require(++safety < 200000, errc::too_large, "conjugacy closure exploded");
    Word cur = queue.back();
    queue.pop_back();
    size_t n = cur.size();
    std::vector<Word> nexts;
    for (size_t s = 1; s < n; ++s) {
      Word rot;
      for (size_t k = 0; k < n; ++k) rot.push_back(cur[(s + k) % n]);
      nexts.push_back(rot);
    }
    for (const Word& rot0 : rotations_) {
      // Replace a half-relator prefix by the inverse of the other half.
      if (n < static_cast<size_t>(half_)) break;
      bool match = true;
      for (int k = 0; k < half_; ++k)
        if (cur[k] != rot0[k]) {
          match = false;
          break;
        }
      if (!match) continue;
      Word repl = inverse_word(Word(rot0.begin() + half_, rot0.end()));
      Word next = repl;
      next.insert(next.end(), cur.begin() + half_, cur.end());
      next = cyclic_reduce(free_reduce(next));
      if (next.size() == n) nexts.push_back(next);
    }
    for (Word& nx : nexts) {
      if (!seen.count(nx)) {
        seen.insert(nx);
        queue.push_back(nx);
      }
    }
  }
  return std::vector<Word>(seen.begin(), seen.end());
}

bool DehnSolver::conjugate(const Word& u, const Word& v) const {
  Word cu = cyclic_dehn_reduce(u);
  Word cv = cyclic_dehn_reduce(v);
  if (cu.size() != cv.size()) return false;
  if (cu.empty()) return true;
  return conjugacy_key(cu) == conjugacy_key(cv);
}

Word DehnSolver::conjugacy_key(const Word& w) const {
  Word cw = cyclic_dehn_reduce(w);
  if (cw.empty()) return cw;
  auto cl = closure(cw);
  return *std::min_element(cl.begin(), cl.end());
}

}  // namespace cycles
