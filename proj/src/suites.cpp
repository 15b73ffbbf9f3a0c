#include "b4cat/suites.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "b4cat/action.hpp"
#include "b4cat/complex.hpp"
#include "b4cat/garside.hpp"
#include "b4cat/handle.hpp"
#include "b4cat/maps.hpp"
#include "b4cat/sampler.hpp"

namespace b4cat {

namespace {

SuiteReport suite_presentation() {
  SuiteReport r;
  r.suite = "presentation";

  const auto [p1, p2] = builtin_presentations();
  for (const Presentation* p : {&p1, &p2}) {
    for (const auto& chain : p->relations) {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const std::string lhs = to_string(chain[i]);
        const std::string rhs = to_string(chain[i + 1]);
        r.add(p->name + "-" + lhs + "=" + rhs, equals(chain[i], chain[i + 1]),
              "");
      }
    }
  }

  SuiteReport tau_p1 = verify_homomorphism(tau(), p1);
  SuiteReport tau_p2 = verify_homomorphism(tau(), p2);
  r.add("tau-respects-presentation-1", tau_p1.passed(),
        std::to_string(tau_p1.checks.size()) + " relation images");
  r.add("tau-respects-presentation-2", tau_p2.passed(),
        std::to_string(tau_p2.checks.size()) + " relation images");
  r.add("tau-involution", verify_involution(tau()), "");
  r.add("inverting-map-involution", verify_involution(inverting_map()), "");
  r.merge(verify_tau_decomposition());
  r.add("tau-inverts-x", equals(apply_map(tau(), x_word()), invert(x_word())),
        "tau(x) = x^-1");
  bool powers = true;
  for (int k = 1; k <= 4; ++k)
    powers = powers &&
             is_power_of_x(apply_map(tau(), to_word(x_power(k)))) == -k;
  r.add("tau-preserves-x-subgroup", powers, "tau(x^k) = x^-k for k = 1..4");
  return r;
}

SuiteReport suite_link(const VerifyOptions& opts) {
  SuiteReport r;
  r.suite = "link";

  const auto nbrs = neighbors(base_vertex());
  bool distinct = true;
  for (int i = 0; i < kSignedLetterCount; ++i)
    for (int j = i + 1; j < kSignedLetterCount; ++j)
      if (nbrs[i].key == nbrs[j].key) distinct = false;
  r.add("neighbors-distinct", distinct, "12 letter cosets");

  const LinkGraph base_link = link(base_vertex());
  bool tagged = true;
  for (int i = 0; i < kSignedLetterCount; ++i)
    tagged = tagged &&
             base_link.nodes[i].via == letter_at(i) &&
             base_link.nodes[i].key == coset_key(Word{letter_at(i)});
  r.add("link-nodes", tagged && distinct,
        "12 nodes, one per signed letter coset");
  r.add("link-arcs", base_link.arcs.size() == 16,
        std::to_string(base_link.arcs.size()) + " arcs");
  r.add("link-degree-sum", base_link.degree_sum() == 32,
        "degree sum " + std::to_string(base_link.degree_sum()));

  const auto girth = injective_girth(base_link);
  r.add("link-girth", girth.has_value() && *girth == 6,
        girth ? "girth " + std::to_string(*girth) : "forest");
  const auto witness = find_simple_cycle(kSignedLetterCount, base_link.arcs, 6);
  std::string cycle_text;
  for (int node : witness) {
    if (!cycle_text.empty()) cycle_text.push_back('-');
    cycle_text.push_back(to_char(letter_at(node)));
  }
  r.add("link-girth-witness", witness.size() == 6, cycle_text);

  const std::vector<Word> spellings = spellings_of_x();
  r.add("spellings-count", spellings.size() == 16,
        std::to_string(spellings.size()) + " of 216 positive length-3 words");
  bool has_bac = false;
  for (const Word& w : spellings) has_bac = has_bac || to_string(w) == "bac";
  r.add("spellings-contains-bac", has_bac, "");
  r.merge(verify_spelling_edge_bijection());

  WordSampler sampler(opts.seed);
  bool equivariant = true;
  for (int i = 0; i < 5; ++i) {
    const LinkGraph other = link(coset_key(sampler.word(6)));
    equivariant = equivariant && other.arcs == base_link.arcs;
  }
  r.add("link-equivariance", equivariant,
        "5 sampled vertices, letter-label arc sets identical");
  return r;
}

SuiteReport suite_action(const VerifyOptions& opts) {
  SuiteReport r;
  r.suite = "action";
  const Ball ball = build_ball(opts.radius);

  r.merge(verify_kernel(std::max(opts.radius, 1)));
  r.merge(verify_transitivity(ball));
  r.merge(verify_stabilizer_order());
  r.merge(verify_action_homomorphism(opts.samples, opts.radius, opts.seed));
  r.merge(verify_simplicial(phi(parse_word("a")), ball, "phi-a"));
  r.merge(verify_simplicial(theta(), ball, "theta"));

  bool conj = true;
  for (int i = 0; i < kSignedLetterCount; ++i) {
    const Word l = {letter_at(i)};
    conj = conj &&
           compose(theta(), compose(phi(l), theta())) == phi(apply_map(tau(), l));
  }
  r.add("conjugation-law-letters", conj,
        "theta phi_l theta = phi_tau(l) for all 12 letters");

  r.add("theta-involution-key", compose(theta(), theta()) == identity_isometry(),
        "");
  const LetterPerm px = link_permutation(phi(x_word()), base_vertex());
  r.add("phi-x-link-order", px.order() == 4 && px.fixed_point_free(),
        px.cycles());
  const LetterPerm pt = link_permutation(theta(), base_vertex());
  r.add("theta-link-involution", pt.order() == 2 && pt.fixed_point_free(),
        pt.cycles());
  return r;
}

SuiteReport suite_curvature(const VerifyOptions& opts) {
  SuiteReport r;
  r.suite = "curvature";
  r.merge(verify_link_condition(build_ball(opts.radius)));
  // Homology evidence stays at desk scale: balls of radius <= 2.
  for (int radius = 0; radius <= std::min(opts.radius, 2); ++radius) {
    const HomologyEvidence h = homology_evidence(build_ball(radius));
    r.add("homology-r" + std::to_string(radius),
          h.b0 == 1 && h.b1_rational == 0 && h.b1_mod2 == 0,
          "b0=" + std::to_string(h.b0) +
              " b1(Q)=" + std::to_string(h.b1_rational) +
              " b1(F2)=" + std::to_string(h.b1_mod2));
  }
  return r;
}

SuiteReport suite_oracle(const VerifyOptions& opts) {
  SuiteReport r;
  r.suite = "oracle";
  WordSampler sampler(opts.seed);

  int disagreements = 0;
  int trivial_words = 0;
  for (int i = 0; i < opts.samples; ++i) {
    ArtinWord w = sampler.artin_word(24);
    if (i % 4 == 0) {
      // Exercise the trivial branch too: u u^-1 padded with relators.
      const ArtinWord half = sampler.artin_word(9);
      w = sampler.splice_relators(multiply(half, invert(half)), 1);
    }
    const bool garside = is_trivial(w);
    if (garside) ++trivial_words;
    if (garside != handle_reduce_trivial(w)) ++disagreements;
  }
  r.add("oracle-words", disagreements == 0,
        std::to_string(opts.samples) + " random Artin words (" +
            std::to_string(trivial_words) +
            " trivial): Garside-trivial iff handle-trivial");

  int pair_disagreements = 0;
  int equal_pairs = 0;
  for (int i = 0; i < opts.samples; ++i) {
    const ArtinWord u = sampler.artin_word(24);
    const ArtinWord v = (i % 2 == 0)
                            ? sampler.splice_relators(u, 1 + sampler.below(3))
                            : sampler.artin_word(24);
    const bool eq = equals(u, v);
    if (eq) ++equal_pairs;
    if (eq != handle_reduce_trivial(multiply(u, invert(v))))
      ++pair_disagreements;
  }
  r.add("oracle-pairs", pair_disagreements == 0,
        std::to_string(opts.samples) + " pairs (" +
            std::to_string(equal_pairs) + " equal): equals iff u v^-1 trivial");

  bool laws = true;
  WordSampler law_sampler(opts.seed + 1);
  for (int i = 0; i < std::min(opts.samples, 100); ++i) {
    const Word u = law_sampler.word(10);
    const Word v = law_sampler.word(10);
    laws = laws && equals(multiply(u, invert(u)), Word{});
    laws = laws && exponent_sum(multiply(u, v)) ==
                       exponent_sum(u) + exponent_sum(v);
  }
  r.add("oracle-group-laws", laws, "u u^-1 = 1 and additive exponent sums");

  bool central = true;
  const Word x4 = to_word(x_power(4));
  for (const char* g : {"a", "b", "c"})
    central = central &&
              equals(multiply(x4, parse_word(g)), multiply(parse_word(g), x4));
  r.add("oracle-x4-central", central, "x^4 commutes with a, b, c");

  const NormalForm x4nf = normal_form(x_power(4));
  r.add("oracle-x4-is-half-twist-squared",
        x4nf.inf == 2 && x4nf.factors.empty(), "normal form (2, [])");
  return r;
}

}  // namespace

const std::vector<std::string> kSuiteNames = {"presentation", "link", "action",
                                              "curvature", "oracle"};

bool is_suite_name(const std::string& name) {
  return std::find(kSuiteNames.begin(), kSuiteNames.end(), name) !=
         kSuiteNames.end();
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r;
  if (name == "presentation")
    r = suite_presentation();
  else if (name == "link")
    r = suite_link(opts);
  else if (name == "action")
    r = suite_action(opts);
  else if (name == "curvature")
    r = suite_curvature(opts);
  else if (name == "oracle")
    r = suite_oracle(opts);
  else
    throw std::invalid_argument("unknown suite: " + name);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

std::vector<SuiteReport> run_suites(const std::string& name,
                                    const VerifyOptions& opts) {
  std::vector<SuiteReport> out;
  if (name == "all") {
    for (const std::string& suite : kSuiteNames)
      out.push_back(run_suite(suite, opts));
  } else {
    out.push_back(run_suite(name, opts));
  }
  return out;
}

}  // namespace b4cat
