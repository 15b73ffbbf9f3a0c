#pragma once

#include <array>
#include <utility>
#include <vector>

#include "b4cat/braid.hpp"
#include "b4cat/report.hpp"

/// Presentations as data and endomorphisms of B4 given by generator images.

namespace b4cat {

/// A finite presentation fragment: generators plus equality chains, each a
/// sequence of words asserted pairwise equal (e.g. ba = ae = eb).
struct Presentation {
  std::string name;
  std::vector<Letter> generators;
  std::vector<std::vector<Word>> relations;
};

/// Total assignment of an image word to each of the six letters; extends
/// multiplicatively to words, with inverted images on negative letters.
struct GeneratorMap {
  std::array<Word, kAlphabetSize> images;
};

Word apply_map(const GeneratorMap& m, const Word& w);

/// tau: a,c,d,e,f,b to their listed inverses (a->A, b->D, c->C, d->B,
/// e->F, f->E); the representative of the outer automorphism class.
const GeneratorMap& tau();

/// The automorphism inverting a, b and c, extended to d,e,f through their
/// defining words.
const GeneratorMap& inverting_map();

const GeneratorMap& identity_map();

/// The standard three-generator presentation and the six-generator one.
std::pair<Presentation, Presentation> builtin_presentations();

/// Checks every consecutive pair of every relation chain under the image
/// of m; failures are data, not errors.
SuiteReport verify_homomorphism(const GeneratorMap& m, const Presentation& p);

/// True iff m(m(l)) = l in B4 for each of the six letters.
bool verify_involution(const GeneratorMap& m);

/// tau equals conjugation by ac after inverting a,b,c, letter by letter.
SuiteReport verify_tau_decomposition();

}  // namespace b4cat
