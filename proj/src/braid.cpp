#include "b4cat/braid.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace b4cat {

namespace {

constexpr char kLowercase[] = "abcdef";
constexpr char kUppercase[] = "ABCDEF";

const std::array<ArtinWord, kSignedLetterCount>& letter_expansions() {
  static const auto table = [] {
    std::array<ArtinWord, kSignedLetterCount> t;
    // a, b, c are the Artin generators themselves.
    t[0] = {{1, +1}};
    t[1] = {{2, +1}};
    t[2] = {{3, +1}};
    // d = (ac)^-1 b (ac) = "CAbac", e = a^-1 b a = "Aba", f = c^-1 b c = "Cbc".
    t[3] = {{3, -1}, {1, -1}, {2, +1}, {1, +1}, {3, +1}};
    t[4] = {{1, -1}, {2, +1}, {1, +1}};
    t[5] = {{3, -1}, {2, +1}, {3, +1}};
    for (int i = 0; i < kAlphabetSize; ++i) t[i + kAlphabetSize] = invert(t[i]);
    return t;
  }();
  return table;
}

}  // namespace

Letter letter_at(int order_index) {
  assert(order_index >= 0 && order_index < kSignedLetterCount);
  if (order_index < kAlphabetSize)
    return Letter{static_cast<std::uint8_t>(order_index), +1};
  return Letter{static_cast<std::uint8_t>(order_index - kAlphabetSize), -1};
}

int order_index(const Letter& l) {
  return l.sign > 0 ? l.base : l.base + kAlphabetSize;
}

char to_char(const Letter& l) {
  return l.sign > 0 ? kLowercase[l.base] : kUppercase[l.base];
}

Letter inverse(const Letter& l) {
  return Letter{l.base, static_cast<std::int8_t>(-l.sign)};
}

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= 'a' && c <= 'f') {
      w.push_back(Letter{static_cast<std::uint8_t>(c - 'a'), +1});
    } else if (c >= 'A' && c <= 'F') {
      w.push_back(Letter{static_cast<std::uint8_t>(c - 'A'), -1});
    } else {
      throw ParseError("invalid character '" + std::string(1, c) +
                           "' at position " + std::to_string(i + 1),
                       i + 1);
    }
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (const Letter& l : w) s.push_back(to_char(l));
  return s;
}

std::string to_string(const ArtinWord& w) {
  std::string s;
  s.reserve(w.size());
  for (const ArtinGen& g : w)
    s.push_back(g.sign > 0 ? kLowercase[g.index - 1] : kUppercase[g.index - 1]);
  return s;
}

Word multiply(Word u, const Word& v) {
  u.insert(u.end(), v.begin(), v.end());
  return u;
}

Word invert(const Word& u) {
  Word r;
  r.reserve(u.size());
  for (auto it = u.rbegin(); it != u.rend(); ++it) r.push_back(inverse(*it));
  return r;
}

ArtinWord multiply(ArtinWord u, const ArtinWord& v) {
  u.insert(u.end(), v.begin(), v.end());
  return u;
}

ArtinWord invert(const ArtinWord& u) {
  ArtinWord r;
  r.reserve(u.size());
  for (auto it = u.rbegin(); it != u.rend(); ++it)
    r.push_back(ArtinGen{it->index, static_cast<std::int8_t>(-it->sign)});
  return r;
}

const ArtinWord& artin_letter(const Letter& l) {
  return letter_expansions()[order_index(l)];
}

ArtinWord expand(const Word& w) {
  ArtinWord out;
  out.reserve(w.size() * 3);
  for (const Letter& l : w) {
    const ArtinWord& e = artin_letter(l);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

Word to_word(const ArtinWord& w) {
  Word out;
  out.reserve(w.size());
  for (const ArtinGen& g : w)
    out.push_back(Letter{static_cast<std::uint8_t>(g.index - 1), g.sign});
  return out;
}

int exponent_sum(const ArtinWord& w) {
  int s = 0;
  for (const ArtinGen& g : w) s += g.sign;
  return s;
}

int exponent_sum(const Word& w) { return exponent_sum(expand(w)); }

ArtinWord x_power(int k) {
  static const ArtinWord x = {{2, +1}, {1, +1}, {3, +1}};
  static const ArtinWord xinv = invert(x);
  const ArtinWord& block = k >= 0 ? x : xinv;
  ArtinWord out;
  out.reserve(static_cast<std::size_t>(std::abs(k)) * 3);
  for (int i = 0; i < std::abs(k); ++i)
    out.insert(out.end(), block.begin(), block.end());
  return out;
}

const Word& x_word() {
  static const Word x = parse_word("bac");
  return x;
}

}  // namespace b4cat
