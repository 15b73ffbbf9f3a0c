#pragma once

#include <random>

#include "b4cat/braid.hpp"

namespace b4cat {

/// Deterministic word sampler.  Draws through mt19937 with plain modulo so
/// the sequence depends only on the seed, not on the standard library's
/// distribution internals.
class WordSampler {
 public:
  explicit WordSampler(unsigned seed) : rng_(seed) {}

  unsigned below(unsigned n) { return n ? rng_() % n : 0; }

  /// Word over the 12 signed letters, length uniform in [0, max_len].
  Word word(unsigned max_len) {
    Word w(below(max_len + 1));
    for (Letter& l : w) l = letter_at(static_cast<int>(below(kSignedLetterCount)));
    return w;
  }

  /// Artin word, length uniform in [0, max_len].
  ArtinWord artin_word(unsigned max_len) {
    ArtinWord w(below(max_len + 1));
    for (ArtinGen& g : w) {
      g.index = static_cast<std::uint8_t>(1 + below(3));
      g.sign = below(2) ? 1 : -1;
    }
    return w;
  }

  /// w with `count` trivial relator words spliced in at random positions;
  /// the result is equal to w in B4 but spelled differently.
  ArtinWord splice_relators(ArtinWord w, unsigned count) {
    // aba(bab)^-1, bcb(cbc)^-1, ac(ca)^-1 and a free cancellation.
    static const ArtinWord relators[4] = {
        {{1, 1}, {2, 1}, {1, 1}, {2, -1}, {1, -1}, {2, -1}},
        {{2, 1}, {3, 1}, {2, 1}, {3, -1}, {2, -1}, {3, -1}},
        {{1, 1}, {3, 1}, {1, -1}, {3, -1}},
        {{2, 1}, {2, -1}},
    };
    for (unsigned i = 0; i < count; ++i) {
      const ArtinWord& r = relators[below(4)];
      const auto at = w.begin() + below(static_cast<unsigned>(w.size()) + 1);
      w.insert(at, r.begin(), r.end());
    }
    return w;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace b4cat
