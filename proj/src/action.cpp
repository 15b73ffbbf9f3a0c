#include "b4cat/action.hpp"

#include <algorithm>
#include <set>

#include "b4cat/sampler.hpp"

namespace b4cat {

namespace {

IsometryKey make_key(int eps, const ArtinWord& g) {
  const int s = exponent_sum(g);
  // x^4 has exponent sum 12; exactly one representative g x^{4k} lands in
  // the window 0..11.
  const int r = ((s % 12) + 12) % 12;
  const int k = (r - s) / 12;
  ArtinWord adjusted = g;
  const ArtinWord shift = x_power(4 * k);
  adjusted.insert(adjusted.end(), shift.begin(), shift.end());
  return IsometryKey{eps & 1, normal_form(adjusted)};
}

Word tau_word(const Word& w) { return apply_map(tau(), w); }

}  // namespace

IsometryKey phi(const ArtinWord& g) { return make_key(0, g); }
IsometryKey phi(const Word& g) { return make_key(0, expand(g)); }
IsometryKey theta() { return make_key(1, ArtinWord{}); }
IsometryKey identity_isometry() { return make_key(0, ArtinWord{}); }

IsometryKey compose(const IsometryKey& i1, const IsometryKey& i2) {
  Word g2 = to_word(i2.rep.canonical_word());
  if (i1.eps) g2 = tau_word(g2);
  ArtinWord g = i1.rep.canonical_word();
  const ArtinWord tail = expand(g2);
  g.insert(g.end(), tail.begin(), tail.end());
  return make_key(i1.eps ^ i2.eps, g);
}

CosetKey apply(const IsometryKey& iso, const CosetKey& v) {
  Word h = to_word(v.rep_word());
  if (iso.eps) h = tau_word(h);
  ArtinWord w = iso.rep.canonical_word();
  const ArtinWord tail = expand(h);
  w.insert(w.end(), tail.begin(), tail.end());
  return coset_key(w);
}

CosetKey left_multiply(const ArtinWord& g, const CosetKey& v) {
  ArtinWord w = g;
  const ArtinWord rep = v.rep_word();
  w.insert(w.end(), rep.begin(), rep.end());
  return coset_key(w);
}

CosetKey left_multiply(const Word& g, const CosetKey& v) {
  return left_multiply(expand(g), v);
}

LetterPerm LetterPerm::power(int n) const {
  LetterPerm r;
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

int LetterPerm::order() const {
  LetterPerm p = *this;
  int n = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++n;
  }
  return n;
}

bool LetterPerm::fixed_point_free() const {
  for (int i = 0; i < kSignedLetterCount; ++i)
    if (img[i] == i) return false;
  return true;
}

std::string LetterPerm::cycles() const {
  std::string out;
  std::array<bool, kSignedLetterCount> seen{};
  for (int i = 0; i < kSignedLetterCount; ++i) {
    if (seen[i] || img[i] == i) continue;
    out.push_back('(');
    int j = i;
    bool first = true;
    do {
      if (!first) out.push_back(' ');
      out.push_back(to_char(letter_at(j)));
      seen[j] = true;
      j = img[j];
      first = false;
    } while (j != i);
    out.push_back(')');
  }
  return out.empty() ? "id" : out;
}

LetterPerm letter_perm_from_cycles(std::string_view text) {
  LetterPerm p;
  std::vector<int> cycle;
  for (const char c : text) {
    if (c == '(' || c == ' ') continue;
    if (c == ')') {
      for (std::size_t i = 0; i < cycle.size(); ++i)
        p.img[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
      cycle.clear();
      continue;
    }
    cycle.push_back(order_index(parse_word(std::string_view(&c, 1))[0]));
  }
  return p;
}

LetterPerm link_permutation(const IsometryKey& iso, const CosetKey& v) {
  if (!(apply(iso, v) == v))
    throw std::invalid_argument("link_permutation: isometry does not stabilize the vertex");
  const auto nbrs = neighbors(v);
  LetterPerm p;
  for (int i = 0; i < kSignedLetterCount; ++i) {
    const CosetKey image = apply(iso, nbrs[i].key);
    int j = -1;
    for (int t = 0; t < kSignedLetterCount; ++t)
      if (nbrs[t].key == image) j = t;
    if (j < 0)
      throw std::logic_error("link_permutation: image is not a neighbor");
    p.img[i] = static_cast<std::uint8_t>(j);
  }
  return p;
}

int generated_group_order(const std::vector<LetterPerm>& generators) {
  std::set<LetterPerm> group{LetterPerm::identity()};
  std::vector<LetterPerm> frontier{LetterPerm::identity()};
  while (!frontier.empty()) {
    std::vector<LetterPerm> next;
    for (const LetterPerm& p : frontier)
      for (const LetterPerm& g : generators) {
        const LetterPerm q = p * g;
        if (group.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return static_cast<int>(group.size());
}

SuiteReport verify_kernel(int radius) {
  SuiteReport r;
  r.suite = "kernel";

  // (i) x^4 acts trivially: raw left multiplication fixes every vertex.
  const Ball ball = build_ball(radius);
  bool fixes_all = true;
  const ArtinWord x4 = x_power(4);
  for (const BallVertex& v : ball.vertices)
    fixes_all = fixes_all && left_multiply(x4, v.key) == v.key;
  r.add("kernel-x4-fixes-ball", fixes_all,
        "radius " + std::to_string(radius) + ", " +
            std::to_string(ball.vertices.size()) + " vertices");
  r.add("kernel-phi-x4-is-identity-key", phi(to_word(x4)) == identity_isometry(),
        "");

  // (ii) phi(x), phi(x^2), phi(x^3) act distinctly and nontrivially on the
  // base link.
  std::array<LetterPerm, 4> perms;
  for (int k = 1; k <= 3; ++k)
    perms[k] = link_permutation(phi(to_word(x_power(k))), base_vertex());
  bool distinct = true;
  for (int k = 1; k <= 3; ++k) {
    if (perms[k].is_identity()) distinct = false;
    for (int l = k + 1; l <= 3; ++l)
      if (perms[k] == perms[l]) distinct = false;
  }
  r.add("kernel-x-powers-distinct", distinct,
        "x:" + perms[1].cycles() + " x2:" + perms[2].cycles() +
            " x3:" + perms[3].cycles());

  // (iii) theta differs from phi(x^k), k = 0..3, on the base link.
  const LetterPerm theta_perm = link_permutation(theta(), base_vertex());
  perms[0] = LetterPerm::identity();
  bool theta_distinct = true;
  for (int k = 0; k <= 3; ++k)
    if (theta_perm == perms[k]) theta_distinct = false;
  r.add("kernel-theta-distinct", theta_distinct, "theta:" + theta_perm.cycles());
  return r;
}

SuiteReport verify_transitivity(const Ball& ball) {
  SuiteReport r;
  r.suite = "transitivity";
  bool all = true;
  for (const BallVertex& v : ball.vertices)
    all = all && apply(phi(v.key.rep_word()), base_vertex()) == v.key;
  r.add("transitivity-phi-reaches-every-vertex", all,
        std::to_string(ball.vertices.size()) + " vertices from the base");
  return r;
}

SuiteReport verify_stabilizer_order() {
  SuiteReport r;
  r.suite = "stabilizer";

  std::vector<IsometryKey> keys;
  for (int eps = 0; eps <= 1; ++eps)
    for (int k = 0; k <= 3; ++k) {
      IsometryKey key = make_key(eps, x_power(k));
      keys.push_back(key);
    }

  bool fix = true;
  for (const IsometryKey& k : keys)
    fix = fix && apply(k, base_vertex()) == base_vertex();
  r.add("stabilizer-fixes-base", fix, "8 keys (eps, x^k)");

  bool keys_distinct = true;
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i + 1; j < keys.size(); ++j)
      if (keys[i] == keys[j]) keys_distinct = false;
  r.add("stabilizer-keys-distinct", keys_distinct, "");

  std::vector<LetterPerm> perms;
  for (const IsometryKey& k : keys)
    perms.push_back(link_permutation(k, base_vertex()));
  bool perms_distinct = true;
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = i + 1; j < perms.size(); ++j)
      if (perms[i] == perms[j]) perms_distinct = false;
  r.add("stabilizer-perms-distinct", perms_distinct,
        "8 link permutations, pairwise distinct");

  const int order = generated_group_order(
      {link_permutation(phi(x_word()), base_vertex()),
       link_permutation(theta(), base_vertex())});
  r.add("stabilizer-group-order", order == 8,
        "generated permutation group has order " + std::to_string(order));
  return r;
}

SuiteReport verify_action_homomorphism(int samples, int radius, unsigned seed) {
  SuiteReport r;
  r.suite = "action-homomorphism";
  const Ball ball = build_ball(radius);
  WordSampler sampler(seed);

  int key_fail = 0, pointwise_fail = 0, mixed_fail = 0, raw_fail = 0,
      central_fail = 0;
  for (int s = 0; s < samples; ++s) {
    const Word g1 = sampler.word(8);
    const Word g2 = sampler.word(8);
    const IsometryKey k1 = phi(g1);
    const IsometryKey k2 = phi(g2);
    const IsometryKey k12 = compose(k1, k2);
    if (!(k12 == phi(multiply(g1, g2)))) ++key_fail;

    // phi(g * x^{4k}) collapses to phi(g).
    const int shift = static_cast<int>(sampler.below(5)) - 2;
    if (!(phi(multiply(g1, to_word(x_power(4 * shift)))) == k1)) ++central_fail;

    const IsometryKey mixed = compose(theta(), k1);
    for (const BallVertex& v : ball.vertices) {
      if (!(apply(k12, v.key) == apply(k1, apply(k2, v.key)))) ++pointwise_fail;
      if (!(apply(mixed, v.key) == apply(theta(), apply(k1, v.key))))
        ++mixed_fail;
      if (!(apply(k1, v.key) == left_multiply(g1, v.key))) ++raw_fail;
    }
  }

  const std::string scope = std::to_string(samples) + " samples x " +
                            std::to_string(ball.vertices.size()) + " vertices";
  r.add("action-hom-keys", key_fail == 0,
        "compose(phi(g1),phi(g2)) = phi(g1 g2); " + scope);
  r.add("action-hom-pointwise", pointwise_fail == 0,
        "apply(compose) = apply after apply; " + scope);
  r.add("action-hom-mixed", mixed_fail == 0,
        "theta-composites act consistently; " + scope);
  r.add("action-raw-agree", raw_fail == 0,
        "canonical keys act like raw left multiplication; " + scope);
  r.add("action-key-canonical", central_fail == 0,
        "phi(g x^{4k}) = phi(g); " + std::to_string(samples) + " samples");
  return r;
}

SuiteReport verify_simplicial(const IsometryKey& iso, const Ball& ball,
                              const std::string& label) {
  SuiteReport r;
  r.suite = "simplicial-" + label;

  std::vector<std::optional<int>> image(ball.vertices.size());
  for (std::size_t i = 0; i < ball.vertices.size(); ++i)
    image[i] = ball.index_of(apply(iso, ball.vertices[i].key));

  int checked_edges = 0, edge_fail = 0;
  for (const BallEdge& e : ball.edges) {
    const auto iu = image[static_cast<std::size_t>(e.i)];
    const auto iv = image[static_cast<std::size_t>(e.j)];
    if (!iu || !iv) continue;
    ++checked_edges;
    const auto& adj = ball.adjacency[static_cast<std::size_t>(*iu)];
    if (!std::binary_search(adj.begin(), adj.end(), *iv)) ++edge_fail;
  }
  r.add("simplicial-" + label + "-edges", edge_fail == 0,
        std::to_string(checked_edges) + " mapped edges stay edges");

  std::set<std::array<int, 3>> triangle_set;
  for (const BallTriangle& t : ball.triangles)
    triangle_set.insert({t.i, t.j, t.k});
  int checked_triangles = 0, triangle_fail = 0;
  for (const BallTriangle& t : ball.triangles) {
    const auto a = image[static_cast<std::size_t>(t.i)];
    const auto b = image[static_cast<std::size_t>(t.j)];
    const auto c = image[static_cast<std::size_t>(t.k)];
    if (!a || !b || !c) continue;
    ++checked_triangles;
    std::array<int, 3> tri{*a, *b, *c};
    std::sort(tri.begin(), tri.end());
    if (!triangle_set.count(tri)) ++triangle_fail;
  }
  r.add("simplicial-" + label + "-triangles", triangle_fail == 0,
        std::to_string(checked_triangles) + " mapped triangles stay triangles");
  return r;
}

}  // namespace b4cat
