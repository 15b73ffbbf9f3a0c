#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

/// Words over the six-generator alphabet {a,b,c,d,e,f} of the braid group
/// B4, and their translation into the three Artin generators a,b,c.
///
/// Text encoding: lowercase = positive letter, uppercase = its inverse
/// ("A" is a^-1).  The empty string is the identity.  The extra generators
/// are the conjugates d = (ac)^-1 b (ac), e = a^-1 b a, f = c^-1 b c.

namespace b4cat {

inline constexpr int kAlphabetSize = 6;
inline constexpr int kSignedLetterCount = 12;

/// One signed letter of the six-generator alphabet.
struct Letter {
  std::uint8_t base = 0;  // 0..5 for a..f
  std::int8_t sign = 1;   // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// One signed Artin generator sigma_i (letters a,b,c as indices 1..3).
struct ArtinGen {
  std::uint8_t index = 1;  // 1..3
  std::int8_t sign = 1;    // +1 or -1
  friend bool operator==(const ArtinGen&, const ArtinGen&) = default;
};

using ArtinWord = std::vector<ArtinGen>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg), position_(position) {}
  /// 1-based position of the offending character.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Signed letters carry the fixed order a<b<c<d<e<f<A<B<C<D<E<F.
Letter letter_at(int order_index);
int order_index(const Letter& l);
char to_char(const Letter& l);
Letter inverse(const Letter& l);

/// Parses the grammar WORD := LETTER*, LETTER := [a-fA-F].
/// Throws ParseError (with 1-based position) on any other character.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);
std::string to_string(const ArtinWord& w);

Word multiply(Word u, const Word& v);
Word invert(const Word& u);
ArtinWord multiply(ArtinWord u, const ArtinWord& v);
ArtinWord invert(const ArtinWord& u);

/// Artin word of a single signed letter (d,e,f via their defining words).
const ArtinWord& artin_letter(const Letter& l);

/// Letterwise substitution of d,e,f by their defining Artin words.
ArtinWord expand(const Word& w);

/// Reinterprets sigma_1..sigma_3 as the letters a,b,c.
Word to_word(const ArtinWord& w);

/// Sum of signs after expansion to Artin letters; every one of the six
/// letters contributes +1, so x = bac has exponent sum 3.
int exponent_sum(const Word& w);
int exponent_sum(const ArtinWord& w);

/// (bac)^k as an Artin word; negative k gives (CAB)^|k|.
ArtinWord x_power(int k);
const Word& x_word();

}  // namespace b4cat
