#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

/// Permutations of {1,2,3,4}, the index set for permutation braids in the
/// classical Garside structure on B4.

namespace b4cat {

struct Perm {
  // img[i-1] is the image of i, values in 1..4.
  std::array<std::uint8_t, 4> img{1, 2, 3, 4};

  static Perm identity() { return Perm{}; }
  static Perm transposition(int i);  // (i, i+1) for i in 1..3
  static Perm half_twist() { return Perm{{4, 3, 2, 1}}; }

  int apply(int x) const { return img[x - 1]; }

  /// Left-to-right product: (p * q)(x) = q(p(x)).
  friend Perm operator*(const Perm& p, const Perm& q) {
    Perm r;
    for (int j = 0; j < 4; ++j) r.img[j] = q.img[p.img[j] - 1];
    return r;
  }

  Perm inverse() const {
    Perm r;
    for (int j = 0; j < 4; ++j) r.img[img[j] - 1] = static_cast<std::uint8_t>(j + 1);
    return r;
  }

  /// Bit (i-1) set iff img has a descent at i (i in 1..3).
  unsigned descent_mask() const {
    unsigned m = 0;
    for (int i = 0; i < 3; ++i)
      if (img[i] > img[i + 1]) m |= 1u << i;
    return m;
  }

  int inversion_count() const {
    int n = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (img[i] > img[j]) ++n;
    return n;
  }

  bool is_identity() const { return img == std::array<std::uint8_t, 4>{1, 2, 3, 4}; }
  bool is_half_twist() const { return img == std::array<std::uint8_t, 4>{4, 3, 2, 1}; }

  std::string one_line() const {
    std::string s;
    for (int j = 0; j < 4; ++j) s.push_back(static_cast<char>('0' + img[j]));
    return s;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;
};

/// Starting set of the permutation braid for p: the descents of p.
inline unsigned start_mask(const Perm& p) { return p.descent_mask(); }

/// Finishing set: the descents of p^-1.
inline unsigned finish_mask(const Perm& p) { return p.inverse().descent_mask(); }

/// Conjugation by the half twist (sigma_i <-> sigma_{4-i}).
inline Perm flip(const Perm& p) {
  const Perm w0 = Perm::half_twist();
  return w0 * p * w0;
}

/// Canonical positive word of the permutation braid for p: repeatedly peel
/// the smallest descent.  Length equals the inversion count; the half twist
/// yields "abacba".
std::vector<std::uint8_t> perm_word(Perm p);

}  // namespace b4cat
