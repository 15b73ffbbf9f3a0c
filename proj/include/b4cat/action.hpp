#pragma once

#include <array>
#include <string>
#include <string_view>

#include "b4cat/complex.hpp"
#include "b4cat/maps.hpp"

/// The isometry group generated by left multiplications phi_g and the extra
/// isometry theta, modeled by canonical keys in the quotient of
/// B4 x| <tau> by the central subgroup <x^4>.

namespace b4cat {

/// (eps, g mod <x^4>): eps says whether theta acts first.  The stored
/// representative is the unique g x^{4k} with Artin exponent sum in 0..11.
/// Composition: (e1,g1)(e2,g2) = (e1+e2 mod 2, g1 * tau^{e1}(g2)).
struct IsometryKey {
  int eps = 0;
  NormalForm rep;

  std::string key() const { return std::to_string(eps) + ":" + rep.key(); }
  friend bool operator==(const IsometryKey&, const IsometryKey&) = default;
};

IsometryKey phi(const Word& g);
IsometryKey phi(const ArtinWord& g);
IsometryKey theta();
IsometryKey identity_isometry();

IsometryKey compose(const IsometryKey& i1, const IsometryKey& i2);

/// Vertex action: v_{h<x>} maps to v_{g tau^eps(h) <x>}; well defined on
/// cosets because tau(<x>) = <x> and x^4 is central.
CosetKey apply(const IsometryKey& iso, const CosetKey& v);

/// Left multiplication by a raw, uncanonicalized word.  Used by the
/// verification suites to confirm that the canonical keys act the same way
/// the group elements do.
CosetKey left_multiply(const Word& g, const CosetKey& v);
CosetKey left_multiply(const ArtinWord& g, const CosetKey& v);

/// Permutation of the 12 reaching letters of the link of a stabilized
/// vertex.
struct LetterPerm {
  std::array<std::uint8_t, kSignedLetterCount> img{0, 1, 2,  3,  4,  5,
                                                   6, 7, 8,  9, 10, 11};

  static LetterPerm identity() { return LetterPerm{}; }
  friend LetterPerm operator*(const LetterPerm& p, const LetterPerm& q) {
    LetterPerm r;
    for (int i = 0; i < kSignedLetterCount; ++i) r.img[i] = q.img[p.img[i]];
    return r;
  }
  LetterPerm power(int n) const;
  int order() const;
  bool is_identity() const { return *this == LetterPerm{}; }
  bool fixed_point_free() const;
  /// Cycle notation over the letters, fixed points omitted; "id" if trivial.
  std::string cycles() const;

  friend bool operator==(const LetterPerm&, const LetterPerm&) = default;
  friend auto operator<=>(const LetterPerm&, const LetterPerm&) = default;
};

/// Builds a LetterPerm from cycle notation like "(a e c f)(b d)".
LetterPerm letter_perm_from_cycles(std::string_view text);

/// Requires apply(iso, v) == v; throws std::invalid_argument otherwise.
LetterPerm link_permutation(const IsometryKey& iso, const CosetKey& v);

/// Order of the permutation group generated on the 12 letters.
int generated_group_order(const std::vector<LetterPerm>& generators);

SuiteReport verify_kernel(int radius);
SuiteReport verify_transitivity(const Ball& ball);
SuiteReport verify_stabilizer_order();
SuiteReport verify_action_homomorphism(int samples, int radius, unsigned seed);
SuiteReport verify_simplicial(const IsometryKey& iso, const Ball& ball,
                              const std::string& label);

}  // namespace b4cat
