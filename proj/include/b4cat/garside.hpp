#pragma once

#include <optional>
#include <string>
#include <vector>

#include "b4cat/braid.hpp"
#include "b4cat/perm.hpp"

/// Left-greedy Garside normal forms for B4 over the classical structure:
/// Delta is the half twist, pinned to the Artin word "abacba"; simple
/// elements are the permutation braids indexed by S4.
///
/// normal_form is canonical: two words are equal in B4 iff their normal
/// forms are identical.

namespace b4cat {

struct NormalForm {
  int inf = 0;                // power of the half twist Delta
  std::vector<Perm> factors;  // left-weighted, none identity or Delta

  bool is_identity() const { return inf == 0 && factors.empty(); }
  int exponent_sum() const;
  /// Compact encoding, usable as a hash/interning key ("1|" or "0|2134.3214").
  std::string key() const;
  /// Delta^inf followed by the canonical word of each factor.
  ArtinWord canonical_word() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const ArtinWord& w);
inline NormalForm normal_form(const Word& w) { return normal_form(expand(w)); }

bool is_trivial(const ArtinWord& w);
bool equals(const ArtinWord& u, const ArtinWord& v);
bool equals(const Word& u, const Word& v);

/// Returns k iff w = x^k in B4 (x = bac): the exponent sum picks the only
/// candidate k, which is then confirmed by the equality oracle.
std::optional<int> is_power_of_x(const Word& w);
std::optional<int> is_power_of_x(const ArtinWord& w);

/// Image of w under the homomorphism B4 -> S4 (sigma_i to (i,i+1)).
Perm total_permutation(const ArtinWord& w);

}  // namespace b4cat
