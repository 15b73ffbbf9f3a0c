#pragma once

#include "b4cat/braid.hpp"

namespace b4cat {

/// Dehornoy handle reduction: returns true iff w represents the identity.
/// Algorithmically independent of the Garside machinery; serves as the
/// second word-problem oracle.  Throws std::runtime_error if the internal
/// step or length limit is exceeded (not expected at sane word lengths).
bool handle_reduce_trivial(ArtinWord w);

}  // namespace b4cat
