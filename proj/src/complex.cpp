#include "b4cat/complex.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "b4cat/linalg.hpp"

namespace b4cat {

namespace {

// Collation for representative words: a<b<c<A<B<C (positives first).
int gen_rank(const ArtinGen& g) {
  return g.sign > 0 ? g.index - 1 : g.index + 2;
}

bool rep_less(const ArtinWord& a, const ArtinWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (gen_rank(a[i]) != gen_rank(b[i])) return gen_rank(a[i]) < gen_rank(b[i]);
  return false;
}

std::string rep_text(const CosetKey& v) {
  const std::string s = to_string(v.rep_word());
  return s.empty() ? "-" : s;
}

}  // namespace

CosetKey coset_key(const ArtinWord& w) {
  const int s = exponent_sum(w);
  // x has exponent sum 3, so exactly one representative g x^k of the coset
  // has exponent sum in {0,1,2}.
  const int r = ((s % 3) + 3) % 3;
  const int k = (r - s) / 3;
  ArtinWord adjusted = w;
  const ArtinWord shift = x_power(k);
  adjusted.insert(adjusted.end(), shift.begin(), shift.end());
  return CosetKey{normal_form(adjusted)};
}

CosetKey coset_key(const Word& w) { return coset_key(expand(w)); }

const CosetKey& base_vertex() {
  static const CosetKey base = coset_key(ArtinWord{});
  return base;
}

std::array<Neighbor, kSignedLetterCount> neighbors(const CosetKey& v) {
  std::array<Neighbor, kSignedLetterCount> out;
  const ArtinWord rep = v.rep_word();
  for (int i = 0; i < kSignedLetterCount; ++i) {
    const Letter l = letter_at(i);
    ArtinWord w = rep;
    const ArtinWord& e = artin_letter(l);
    w.insert(w.end(), e.begin(), e.end());
    out[i] = Neighbor{l, coset_key(w)};
  }
  return out;
}

std::optional<Letter> adjacent(const CosetKey& u, const CosetKey& v) {
  if (u == v)
    throw std::invalid_argument("adjacent: a vertex is not adjacent to itself");
  const ArtinWord rep = u.rep_word();
  for (int i = 0; i < kSignedLetterCount; ++i) {
    const Letter l = letter_at(i);
    ArtinWord w = rep;
    const ArtinWord& e = artin_letter(l);
    w.insert(w.end(), e.begin(), e.end());
    if (coset_key(w) == v) return l;
  }
  return std::nullopt;
}

std::optional<int> Ball::index_of(const CosetKey& v) const {
  const auto it = index_.find(v.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Ball build_ball(int radius, int cap) {
  if (radius < 0) throw std::invalid_argument("build_ball: negative radius");
  if (radius > cap)
    throw ResourceLimitError("build_ball: radius " + std::to_string(radius) +
                             " exceeds cap " + std::to_string(cap));

  Ball ball;
  ball.radius = radius;

  // Breadth-first collection; the queue is in nondecreasing depth order, so
  // depths are true 1-skeleton distances.
  std::vector<BallVertex> found;
  std::unordered_map<std::string, int> seen;
  found.push_back(BallVertex{base_vertex(), 0});
  seen.emplace(base_vertex().key(), 0);
  for (std::size_t head = 0; head < found.size(); ++head) {
    const BallVertex current = found[head];
    if (current.depth == radius) break;
    for (const Neighbor& nb : neighbors(current.key)) {
      const std::string k = nb.key.key();
      if (seen.emplace(k, static_cast<int>(found.size())).second)
        found.push_back(BallVertex{nb.key, current.depth + 1});
    }
  }

  std::sort(found.begin(), found.end(), [](const BallVertex& a, const BallVertex& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return rep_less(a.key.rep_word(), b.key.rep_word());
  });
  ball.vertices = std::move(found);
  for (std::size_t i = 0; i < ball.vertices.size(); ++i)
    ball.index_[ball.vertices[i].key.key()] = static_cast<int>(i);

  // Induced edges: all adjacencies among contained vertices.  The witness
  // letter for an ordered pair is unique, so the label is deterministic.
  const int n = static_cast<int>(ball.vertices.size());
  ball.adjacency.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    for (const Neighbor& nb : neighbors(ball.vertices[static_cast<std::size_t>(i)].key)) {
      const auto j = ball.index_of(nb.key);
      if (!j) continue;
      ball.adjacency[static_cast<std::size_t>(i)].push_back(*j);
      if (i < *j) ball.edges.push_back(BallEdge{i, *j, nb.via});
    }
  }
  for (auto& adj : ball.adjacency) std::sort(adj.begin(), adj.end());
  std::sort(ball.edges.begin(), ball.edges.end(),
            [](const BallEdge& a, const BallEdge& b) {
              return std::pair(a.i, a.j) < std::pair(b.i, b.j);
            });

  // Triangles = all 3-cliques of the edge set.
  for (const BallEdge& e : ball.edges) {
    const auto& ai = ball.adjacency[static_cast<std::size_t>(e.i)];
    const auto& aj = ball.adjacency[static_cast<std::size_t>(e.j)];
    std::vector<int> common;
    std::set_intersection(ai.begin(), ai.end(), aj.begin(), aj.end(),
                          std::back_inserter(common));
    for (int k : common)
      if (k > e.j) ball.triangles.push_back(BallTriangle{e.i, e.j, k});
  }
  std::sort(ball.triangles.begin(), ball.triangles.end(),
            [](const BallTriangle& a, const BallTriangle& b) {
              return std::tuple(a.i, a.j, a.k) < std::tuple(b.i, b.j, b.k);
            });
  return ball;
}

void write_ball(const Ball& b, std::ostream& out) {
  out << "BALL radius=" << b.radius << " vertices=" << b.vertices.size()
      << " edges=" << b.edges.size() << " triangles=" << b.triangles.size()
      << '\n';
  for (std::size_t i = 0; i < b.vertices.size(); ++i)
    out << "V " << i << ' ' << b.vertices[i].depth << ' '
        << rep_text(b.vertices[i].key) << '\n';
  for (const BallEdge& e : b.edges)
    out << "E " << e.i << ' ' << e.j << ' ' << to_char(e.label) << '\n';
  for (const BallTriangle& t : b.triangles)
    out << "T " << t.i << ' ' << t.j << ' ' << t.k << '\n';
}

LinkGraph link(const CosetKey& v) {
  LinkGraph l;
  l.center = v;
  l.nodes = neighbors(v);
  for (int i = 0; i < kSignedLetterCount; ++i)
    for (int j = i + 1; j < kSignedLetterCount; ++j)
      if (l.nodes[i].key == l.nodes[j].key)
        throw std::logic_error("link: neighbor cosets are not distinct");
  for (int i = 0; i < kSignedLetterCount; ++i)
    for (int j = i + 1; j < kSignedLetterCount; ++j)
      if (adjacent(l.nodes[static_cast<std::size_t>(i)].key,
                   l.nodes[static_cast<std::size_t>(j)].key))
        l.arcs.emplace_back(i, j);
  return l;
}

std::optional<int> graph_girth(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < arcs.size(); ++e) {
    adj[static_cast<std::size_t>(arcs[e].first)].emplace_back(arcs[e].second, static_cast<int>(e));
    adj[static_cast<std::size_t>(arcs[e].second)].emplace_back(arcs[e].first, static_cast<int>(e));
  }
  // BFS from every root; a non-tree edge between visited vertices closes a
  // cycle of length <= dist(u) + dist(v) + 1, and the minimum over all
  // roots is exactly the girth.
  std::optional<int> best;
  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> via_edge(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(root)] = 0;
    q.push(root);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const auto& [w, e] : adj[static_cast<std::size_t>(u)]) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          via_edge[static_cast<std::size_t>(w)] = e;
          q.push(w);
        } else if (e != via_edge[static_cast<std::size_t>(u)]) {
          const int len = dist[static_cast<std::size_t>(u)] +
                          dist[static_cast<std::size_t>(w)] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

namespace {

bool cycle_search(const std::vector<std::vector<int>>& adj, int start, int length,
                  std::vector<int>& path, std::vector<bool>& used) {
  const int u = path.back();
  if (static_cast<int>(path.size()) == length)
    return std::find(adj[static_cast<std::size_t>(u)].begin(),
                     adj[static_cast<std::size_t>(u)].end(),
                     start) != adj[static_cast<std::size_t>(u)].end();
  for (int w : adj[static_cast<std::size_t>(u)]) {
    if (used[static_cast<std::size_t>(w)]) continue;
    used[static_cast<std::size_t>(w)] = true;
    path.push_back(w);
    if (cycle_search(adj, start, length, path, used)) return true;
    path.pop_back();
    used[static_cast<std::size_t>(w)] = false;
  }
  return false;
}

}  // namespace

std::vector<int> find_simple_cycle(int n, const std::vector<std::pair<int, int>>& arcs,
                                   int length) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [a, b] : arcs) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  for (int start = 0; start < n; ++start) {
    std::vector<int> path{start};
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    used[static_cast<std::size_t>(start)] = true;
    if (cycle_search(adj, start, length, path, used)) return path;
  }
  return {};
}

std::optional<int> injective_girth(const LinkGraph& l) {
  return graph_girth(kSignedLetterCount, l.arcs);
}

namespace {

std::string cycle_letters(const std::vector<int>& cycle) {
  std::string s;
  for (int node : cycle) {
    if (!s.empty()) s.push_back('-');
    s.push_back(to_char(letter_at(node)));
  }
  return s;
}

}  // namespace

SuiteReport verify_link_condition(const Ball& b) {
  SuiteReport r;
  r.suite = "link-condition";
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    const LinkGraph l = link(b.vertices[i].key);
    const std::optional<int> girth = injective_girth(l);
    const bool ok = !girth || *girth >= 6;
    std::string detail = "girth=" + (girth ? std::to_string(*girth) : "inf") +
                         " angle>=" + (girth ? std::to_string(*girth) : "inf") +
                         "*pi/3";
    if (!ok)
      detail += " short-cycle=" +
                cycle_letters(find_simple_cycle(kSignedLetterCount, l.arcs, *girth));
    r.add("link-condition-v" + std::to_string(i), ok, detail);
  }
  return r;
}

std::vector<Word> spellings_of_x() {
  const NormalForm target = normal_form(x_power(1));
  std::vector<Word> out;
  for (int p = 0; p < kAlphabetSize; ++p)
    for (int q = 0; q < kAlphabetSize; ++q)
      for (int s = 0; s < kAlphabetSize; ++s) {
        const Word w = {letter_at(p), letter_at(q), letter_at(s)};
        if (normal_form(expand(w)) == target) out.push_back(w);
      }
  return out;  // already lexicographic by construction
}

SuiteReport verify_spelling_edge_bijection() {
  SuiteReport r;
  r.suite = "spelling-edge-bijection";
  const LinkGraph base_link = link(base_vertex());
  const std::vector<Word> spellings = spellings_of_x();

  std::vector<std::pair<int, int>> hit_arcs;
  bool all_adjacent = true;
  bool all_mapped = true;
  for (const Word& w : spellings) {
    const CosetKey v1 = coset_key(Word{w[0]});
    const CosetKey v2 = coset_key(Word{w[0], w[1]});
    const bool tri = adjacent(base_vertex(), v1).has_value() &&
                     adjacent(v1, v2).has_value() &&
                     adjacent(v2, base_vertex()).has_value();
    all_adjacent = all_adjacent && tri;
    r.add("spelling-" + to_string(w) + "-triangle", tri,
          "vertices <x>, " + rep_text(v1) + "<x>, " + rep_text(v2) + "<x>");

    int n1 = -1, n2 = -1;
    for (int i = 0; i < kSignedLetterCount; ++i) {
      if (base_link.nodes[static_cast<std::size_t>(i)].key == v1) n1 = i;
      if (base_link.nodes[static_cast<std::size_t>(i)].key == v2) n2 = i;
    }
    if (n1 < 0 || n2 < 0 || n1 == n2) {
      all_mapped = false;
      continue;
    }
    hit_arcs.emplace_back(std::min(n1, n2), std::max(n1, n2));
  }
  r.add("spelling-count", spellings.size() == 16,
        "found " + std::to_string(spellings.size()) + " of 216 candidates");
  r.add("spelling-nodes-resolved", all_mapped && all_adjacent, "");

  std::sort(hit_arcs.begin(), hit_arcs.end());
  const bool injective =
      std::adjacent_find(hit_arcs.begin(), hit_arcs.end()) == hit_arcs.end();
  std::vector<std::pair<int, int>> link_arcs = base_link.arcs;
  std::sort(link_arcs.begin(), link_arcs.end());
  r.add("spelling-arc-injective", injective,
        std::to_string(hit_arcs.size()) + " arcs hit");
  r.add("spelling-arc-onto", hit_arcs == link_arcs,
        "link has " + std::to_string(link_arcs.size()) + " arcs");
  return r;
}

HomologyEvidence homology_of_complex(
    int vertex_count, const std::vector<std::pair<int, int>>& edges,
    const std::vector<std::array<int, 3>>& triangles) {
  // Connected components of the 1-skeleton.
  std::vector<int> parent(static_cast<std::size_t>(vertex_count));
  for (int i = 0; i < vertex_count; ++i) parent[static_cast<std::size_t>(i)] = i;
  const auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  int components = vertex_count;
  for (const auto& [u, v] : edges) {
    const int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[static_cast<std::size_t>(ru)] = rv;
      --components;
    }
  }

  // Boundary matrices: d1 maps edges to vertices, d2 maps triangles to
  // edges; triangle (i<j<k) has boundary (j,k) - (i,k) + (i,j).
  std::vector<Triplet> d1;
  std::unordered_map<long long, int> edge_index;
  const auto ekey = [](int a, int b) {
    return static_cast<long long>(a) * 1000000 + b;
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& [u, v] = edges[e];
    d1.push_back(Triplet{u, static_cast<int>(e), -1});
    d1.push_back(Triplet{v, static_cast<int>(e), +1});
    edge_index[ekey(u, v)] = static_cast<int>(e);
  }
  std::vector<Triplet> d2;
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const auto& [i, j, k] = triangles[t];
    d2.push_back(Triplet{edge_index.at(ekey(j, k)), static_cast<int>(t), +1});
    d2.push_back(Triplet{edge_index.at(ekey(i, k)), static_cast<int>(t), -1});
    d2.push_back(Triplet{edge_index.at(ekey(i, j)), static_cast<int>(t), +1});
  }

  const int ec = static_cast<int>(edges.size());
  const int tc = static_cast<int>(triangles.size());
  const int rank1_q = rank_rational(vertex_count, ec, d1);
  const int rank2_q = rank_rational(ec, tc, d2);
  const int rank1_2 = rank_mod2(vertex_count, ec, d1);
  const int rank2_2 = rank_mod2(ec, tc, d2);
  assert(rank1_q == vertex_count - components);

  HomologyEvidence h;
  h.b0 = components;
  h.b1_rational = ec - rank1_q - rank2_q;
  h.b1_mod2 = ec - rank1_2 - rank2_2;
  return h;
}

HomologyEvidence homology_evidence(const Ball& b) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(b.edges.size());
  for (const BallEdge& e : b.edges) edges.emplace_back(e.i, e.j);
  std::vector<std::array<int, 3>> triangles;
  triangles.reserve(b.triangles.size());
  for (const BallTriangle& t : b.triangles)
    triangles.push_back({t.i, t.j, t.k});
  return homology_of_complex(static_cast<int>(b.vertices.size()), edges, triangles);
}

void write_link_text(const LinkGraph& l, std::ostream& out) {
  out << "LINK center=" << rep_text(l.center) << " nodes=" << kSignedLetterCount
      << " arcs=" << l.arcs.size() << '\n';
  for (int i = 0; i < kSignedLetterCount; ++i)
    out << "N " << to_char(letter_at(i)) << ' '
        << rep_text(l.nodes[static_cast<std::size_t>(i)].key) << '\n';
  for (const auto& [i, j] : l.arcs)
    out << "A " << to_char(letter_at(i)) << ' ' << to_char(letter_at(j)) << '\n';
}

void write_link_dot(const LinkGraph& l, std::ostream& out) {
  out << "graph link {\n";
  for (int i = 0; i < kSignedLetterCount; ++i)
    out << "  " << to_char(letter_at(i)) << ";\n";
  for (const auto& [i, j] : l.arcs)
    out << "  " << to_char(letter_at(i)) << " -- " << to_char(letter_at(j))
        << ";\n";
  out << "}\n";
}

}  // namespace b4cat
