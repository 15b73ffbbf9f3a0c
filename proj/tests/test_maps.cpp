#include "b4cat/garside.hpp"
#include "b4cat/maps.hpp"
#include "doctest.h"

using namespace b4cat;

TEST_CASE("tau sends each letter to the stated inverse") {
  CHECK(to_string(apply_map(tau(), parse_word("a"))) == "A");
  CHECK(to_string(apply_map(tau(), parse_word("b"))) == "D");
  CHECK(to_string(apply_map(tau(), parse_word("c"))) == "C");
  CHECK(to_string(apply_map(tau(), parse_word("d"))) == "B");
  CHECK(to_string(apply_map(tau(), parse_word("e"))) == "F");
  CHECK(to_string(apply_map(tau(), parse_word("f"))) == "E");
  CHECK(apply_map(tau(), Word{}).empty());
}

TEST_CASE("apply_map respects inverses and concatenation") {
  CHECK(to_string(apply_map(tau(), parse_word("B"))) == "d");
  const Word u = parse_word("aDf");
  const Word v = parse_word("Ec");
  CHECK(apply_map(tau(), multiply(u, v)) ==
        multiply(apply_map(tau(), u), apply_map(tau(), v)));
}

TEST_CASE("builtin presentations have the expected shape and all hold") {
  const auto [p1, p2] = builtin_presentations();
  CHECK(p1.relations.size() == 3);
  CHECK(p2.relations.size() == 6);

  int equalities = 0;
  for (const auto* p : {&p1, &p2}) {
    for (const auto& chain : p->relations) {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        CHECK(equals(chain[i], chain[i + 1]));
        ++equalities;
      }
    }
  }
  CHECK(equalities == 13);
}

TEST_CASE("tau is a homomorphism on both presentations") {
  const auto [p1, p2] = builtin_presentations();
  CHECK(verify_homomorphism(tau(), p1).passed());
  CHECK(verify_homomorphism(tau(), p2).passed());
  CHECK(verify_homomorphism(identity_map(), p1).passed());
}

TEST_CASE("a genuinely non-homomorphic map fails") {
  GeneratorMap bad = identity_map();
  bad.images[1] = parse_word("a");  // b -> a breaks bcb = cbc
  const auto [p1, p2] = builtin_presentations();
  const SuiteReport r = verify_homomorphism(bad, p1);
  CHECK_FALSE(r.passed());
  bool bcb_failed = false;
  for (const Check& c : r.checks)
    if (c.id == "rel-bcb-cbc") bcb_failed = !c.pass;
  CHECK(bcb_failed);
}

TEST_CASE("involutions") {
  CHECK(verify_involution(tau()));
  CHECK(verify_involution(identity_map()));
  CHECK(verify_involution(inverting_map()));
  GeneratorMap bad = identity_map();
  bad.images[0] = parse_word("b");
  CHECK_FALSE(verify_involution(bad));
}

TEST_CASE("tau decomposes as inversion followed by conjugation by ac") {
  const SuiteReport r = verify_tau_decomposition();
  CHECK(r.checks.size() == 6);
  CHECK(r.passed());
}

TEST_CASE("tau inverts x and preserves the subgroup it generates") {
  const Word x = x_word();
  CHECK(equals(apply_map(tau(), x), invert(x)));
  for (int k = 1; k <= 4; ++k) {
    const Word xk = to_word(x_power(k));
    CHECK(equals(apply_map(tau(), xk), to_word(x_power(-k))));
    CHECK(is_power_of_x(apply_map(tau(), xk)) == -k);
  }
}
