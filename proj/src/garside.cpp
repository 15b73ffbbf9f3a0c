#include "b4cat/garside.hpp"

#include <bit>
#include <cstdlib>

namespace b4cat {

namespace {

// s * sigma_i: one more crossing at the bottom of the braid.
Perm append_crossing(const Perm& s, int i) {
  Perm r = s;
  for (int j = 0; j < 4; ++j) {
    if (r.img[j] == i)
      r.img[j] = static_cast<std::uint8_t>(i + 1);
    else if (r.img[j] == i + 1)
      r.img[j] = static_cast<std::uint8_t>(i);
  }
  return r;
}

// t with the crossing sigma_i removed from the top; valid when i is in the
// starting set of t.
Perm remove_crossing(const Perm& t, int i) {
  Perm r = t;
  std::swap(r.img[i - 1], r.img[i]);
  return r;
}

// Slide crossings from the front of t into the back of s until the pair is
// left-weighted (starting set of t contained in finishing set of s).
bool absorb(Perm& s, Perm& t) {
  bool moved = false;
  for (;;) {
    const unsigned m = start_mask(t) & ~finish_mask(s);
    if (m == 0) break;
    const int i = std::countr_zero(m) + 1;
    s = append_crossing(s, i);
    t = remove_crossing(t, i);
    moved = true;
  }
  return moved;
}

// Local sliding to the unique left-weighted fixpoint; drops drained factors.
void normalize(std::vector<Perm>& fac) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 1; j < fac.size();) {
      if (absorb(fac[j - 1], fac[j])) changed = true;
      if (fac[j].is_identity())
        fac.erase(fac.begin() + static_cast<std::ptrdiff_t>(j));
      else
        ++j;
    }
  }
}

}  // namespace

NormalForm normal_form(const ArtinWord& w) {
  int inf = 0;
  std::vector<std::uint8_t> pos;  // positive Artin letters, values 1..3
  pos.reserve(w.size());
  for (const ArtinGen& g : w) {
    if (g.sign > 0) {
      pos.push_back(g.index);
      continue;
    }
    // sigma_i^-1 = X * Delta^-1 where sigma_i * X = Delta; pushing the
    // Delta^-1 through the accumulated positive prefix flips a <-> c.
    const Perm x = Perm::transposition(g.index) * Perm::half_twist();
    for (std::uint8_t l : perm_word(x)) pos.push_back(l);
    for (std::uint8_t& l : pos) l = static_cast<std::uint8_t>(4 - l);
    --inf;
  }

  std::vector<Perm> fac;
  fac.reserve(pos.size());
  for (std::uint8_t l : pos) fac.push_back(Perm::transposition(l));
  normalize(fac);

  // In a left-weighted sequence, Delta factors can only form a prefix.
  std::size_t lead = 0;
  while (lead < fac.size() && fac[lead].is_half_twist()) ++lead;
  inf += static_cast<int>(lead);
  fac.erase(fac.begin(), fac.begin() + static_cast<std::ptrdiff_t>(lead));
  return NormalForm{inf, std::move(fac)};
}

int NormalForm::exponent_sum() const {
  int s = 6 * inf;
  for (const Perm& p : factors) s += p.inversion_count();
  return s;
}

std::string NormalForm::key() const {
  std::string s = std::to_string(inf);
  s.push_back('|');
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s.push_back('.');
    s += factors[i].one_line();
  }
  return s;
}

ArtinWord NormalForm::canonical_word() const {
  static const ArtinWord delta = {{1, +1}, {2, +1}, {1, +1}, {3, +1}, {2, +1}, {1, +1}};
  static const ArtinWord delta_inv = invert(delta);
  ArtinWord out;
  const ArtinWord& block = inf >= 0 ? delta : delta_inv;
  for (int i = 0; i < std::abs(inf); ++i)
    out.insert(out.end(), block.begin(), block.end());
  for (const Perm& p : factors)
    for (std::uint8_t l : perm_word(p)) out.push_back(ArtinGen{l, +1});
  return out;
}

bool is_trivial(const ArtinWord& w) { return normal_form(w).is_identity(); }

bool equals(const ArtinWord& u, const ArtinWord& v) {
  return normal_form(u) == normal_form(v);
}

bool equals(const Word& u, const Word& v) {
  return normal_form(expand(u)) == normal_form(expand(v));
}

std::optional<int> is_power_of_x(const ArtinWord& w) {
  const int s = exponent_sum(w);
  if (s % 3 != 0) return std::nullopt;
  const int k = s / 3;
  if (equals(w, x_power(k))) return k;
  return std::nullopt;
}

std::optional<int> is_power_of_x(const Word& w) {
  return is_power_of_x(expand(w));
}

Perm total_permutation(const ArtinWord& w) {
  Perm p;
  for (const ArtinGen& g : w) p = p * Perm::transposition(g.index);
  return p;
}

}  // namespace b4cat
