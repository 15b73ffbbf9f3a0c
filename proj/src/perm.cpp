#include "b4cat/perm.hpp"

#include <utility>

namespace b4cat {

Perm Perm::transposition(int i) {
  Perm p;
  std::swap(p.img[i - 1], p.img[i]);
  return p;
}

std::vector<std::uint8_t> perm_word(Perm p) {
  std::vector<std::uint8_t> word;
  word.reserve(static_cast<std::size_t>(p.inversion_count()));
  while (!p.is_identity()) {
    for (int i = 0; i < 3; ++i) {
      if (p.img[i] > p.img[i + 1]) {
        word.push_back(static_cast<std::uint8_t>(i + 1));
        std::swap(p.img[i], p.img[i + 1]);
        break;
      }
    }
  }
  return word;
}

}  // namespace b4cat
