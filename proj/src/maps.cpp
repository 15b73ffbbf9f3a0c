#include "b4cat/maps.hpp"

#include "b4cat/garside.hpp"

namespace b4cat {

namespace {

GeneratorMap map_from_images(const char* const (&images)[kAlphabetSize]) {
  GeneratorMap m;
  for (int i = 0; i < kAlphabetSize; ++i) m.images[i] = parse_word(images[i]);
  return m;
}

}  // namespace

Word apply_map(const GeneratorMap& m, const Word& w) {
  Word out;
  for (const Letter& l : w) {
    const Word& img = m.images[l.base];
    if (l.sign > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      const Word inv = invert(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return out;
}

const GeneratorMap& tau() {
  static const GeneratorMap m = map_from_images({"A", "D", "C", "B", "F", "E"});
  return m;
}

const GeneratorMap& inverting_map() {
  // Images of d,e,f are the letterwise-inverted defining words.
  static const GeneratorMap m =
      map_from_images({"A", "B", "C", "caBAC", "aBA", "cBC"});
  return m;
}

const GeneratorMap& identity_map() {
  static const GeneratorMap m = map_from_images({"a", "b", "c", "d", "e", "f"});
  return m;
}

std::pair<Presentation, Presentation> builtin_presentations() {
  const auto chain = [](std::initializer_list<const char*> words) {
    std::vector<Word> c;
    for (const char* w : words) c.push_back(parse_word(w));
    return c;
  };

  Presentation p1;
  p1.name = "presentation-1";
  p1.generators = parse_word("abc");
  p1.relations = {chain({"aba", "bab"}), chain({"bcb", "cbc"}),
                  chain({"ac", "ca"})};

  Presentation p2;
  p2.name = "presentation-2";
  p2.generators = parse_word("abcdef");
  p2.relations = {chain({"ba", "ae", "eb"}), chain({"de", "ec", "cd"}),
                  chain({"bc", "cf", "fb"}), chain({"df", "fa", "ad"}),
                  chain({"ca", "ac"}),       chain({"ef", "fe"})};

  return {p1, p2};
}

SuiteReport verify_homomorphism(const GeneratorMap& m, const Presentation& p) {
  SuiteReport r;
  r.suite = "homomorphism-" + p.name;
  for (const std::vector<Word>& chain : p.relations) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const Word lhs = apply_map(m, chain[i]);
      const Word rhs = apply_map(m, chain[i + 1]);
      const bool ok = equals(lhs, rhs);
      r.add("rel-" + to_string(chain[i]) + "-" + to_string(chain[i + 1]), ok,
            "image " + to_string(lhs) + " vs " + to_string(rhs));
    }
  }
  return r;
}

bool verify_involution(const GeneratorMap& m) {
  for (int i = 0; i < kAlphabetSize; ++i) {
    const Word l = {letter_at(i)};
    if (!equals(apply_map(m, apply_map(m, l)), l)) return false;
  }
  return true;
}

SuiteReport verify_tau_decomposition() {
  SuiteReport r;
  r.suite = "tau-decomposition";
  const Word ac = parse_word("ac");
  const Word ac_inv = invert(ac);
  for (int i = 0; i < kAlphabetSize; ++i) {
    const Word l = {letter_at(i)};
    const Word lhs = apply_map(tau(), l);
    const Word rhs =
        multiply(multiply(ac_inv, apply_map(inverting_map(), l)), ac);
    r.add(std::string("tau-decomposition-") + to_char(letter_at(i)),
          equals(lhs, rhs),
          to_string(lhs) + " = (ac)^-1 " +
              to_string(apply_map(inverting_map(), l)) + " (ac)");
  }
  return r;
}

}  // namespace b4cat
