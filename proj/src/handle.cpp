#include "b4cat/handle.hpp"

#include <cstddef>
#include <stdexcept>

namespace b4cat {

// A sigma_i-handle is a subword sigma_i^e v sigma_i^-e whose interior v
// uses only generators of index > i.  Reducing it removes the two outer
// letters and rewrites each interior sigma_{i+1}^d as
// sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e.  A word with no handle is freely
// reduced and, if nonempty, sigma-positive or sigma-negative in its lowest
// generator, hence nontrivial.  We always reduce the handle with the
// leftmost closing letter.
bool handle_reduce_trivial(ArtinWord w) {
  constexpr long kMaxSteps = 4000000;
  constexpr std::size_t kMaxLength = 1000000;

  for (long step = 0;; ++step) {
    if (step > kMaxSteps || w.size() > kMaxLength)
      throw std::runtime_error("handle reduction exceeded resource limits");

    std::ptrdiff_t opener = -1;
    std::ptrdiff_t closer = -1;
    for (std::size_t j = 0; j < w.size() && closer < 0; ++j) {
      for (std::ptrdiff_t o = static_cast<std::ptrdiff_t>(j) - 1; o >= 0; --o) {
        if (w[o].index > w[j].index) continue;
        // Nearest letter of index <= index(j): a handle iff it is the same
        // generator with opposite sign; otherwise position j closes nothing.
        if (w[o].index == w[j].index && w[o].sign == -w[j].sign) {
          opener = o;
          closer = static_cast<std::ptrdiff_t>(j);
        }
        break;
      }
    }
    if (closer < 0) break;

    const std::uint8_t i = w[opener].index;
    const std::int8_t e = w[opener].sign;
    ArtinWord next;
    next.reserve(w.size() + 4);
    next.insert(next.end(), w.begin(), w.begin() + opener);
    for (auto it = w.begin() + opener + 1; it != w.begin() + closer; ++it) {
      if (it->index == i + 1) {
        next.push_back(ArtinGen{static_cast<std::uint8_t>(i + 1),
                                static_cast<std::int8_t>(-e)});
        next.push_back(ArtinGen{i, it->sign});
        next.push_back(ArtinGen{static_cast<std::uint8_t>(i + 1), e});
      } else {
        next.push_back(*it);
      }
    }
    next.insert(next.end(), w.begin() + closer + 1, w.end());
    w = std::move(next);
  }
  return w.empty();
}

}  // namespace b4cat
