#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "b4cat/braid.hpp"
#include "b4cat/garside.hpp"
#include "b4cat/report.hpp"

/// Vertices of the coset 2-complex: left cosets of <x> (x = bac) in B4,
/// with edges given by right multiplication by the twelve signed letters
/// and triangles filling every 3-clique.

namespace b4cat {

inline constexpr int kRadiusCap = 4;

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical identifier of a left coset g<x>: the normal form of the unique
/// representative g x^k whose Artin exponent sum lies in {0,1,2}.
struct CosetKey {
  NormalForm rep;

  ArtinWord rep_word() const { return rep.canonical_word(); }
  std::string key() const { return rep.key(); }
  friend bool operator==(const CosetKey&, const CosetKey&) = default;
};

CosetKey coset_key(const ArtinWord& w);
CosetKey coset_key(const Word& w);
const CosetKey& base_vertex();

struct Neighbor {
  Letter via;
  CosetKey key;
};

/// The 12 neighboring cosets v*l in the fixed letter order; they are
/// pairwise distinct.
std::array<Neighbor, kSignedLetterCount> neighbors(const CosetKey& v);

/// Witnessing letter l with u*l = v as cosets, if any.  u must differ
/// from v (a vertex is not adjacent to itself); throws
/// std::invalid_argument otherwise.
std::optional<Letter> adjacent(const CosetKey& u, const CosetKey& v);

struct BallVertex {
  CosetKey key;
  int depth = 0;
};

struct BallEdge {
  int i = 0;
  int j = 0;  // i < j
  Letter label;  // witnesses vertex i * label = vertex j
};

struct BallTriangle {
  int i = 0;
  int j = 0;
  int k = 0;  // i < j < k
};

/// Induced subcomplex on all cosets within the given 1-skeleton distance of
/// the base vertex: every adjacency among contained vertices is an edge and
/// every 3-clique a triangle.  Vertex order is (depth, representative word
/// length, lexicographic representative).
struct Ball {
  int radius = 0;
  std::vector<BallVertex> vertices;
  std::vector<BallEdge> edges;
  std::vector<BallTriangle> triangles;
  std::vector<std::vector<int>> adjacency;  // sorted neighbor indices

  std::optional<int> index_of(const CosetKey& v) const;

 private:
  friend Ball build_ball(int radius, int cap);
  std::unordered_map<std::string, int> index_;
};

Ball build_ball(int radius, int cap = kRadiusCap);

/// Line-oriented text export: a BALL header with the counts, then
/// `V <index> <depth> <rep-word>`, `E <i> <j> <letter>` (i < j) and
/// `T <i> <j> <k>` (i < j < k) records in deterministic order; the empty
/// representative prints as "-".
void write_ball(const Ball& b, std::ostream& out);

/// The link of a vertex: its 12 neighbors, tagged by reaching letter, with
/// an arc for every pair that is adjacent in the complex.
struct LinkGraph {
  CosetKey center;
  std::array<Neighbor, kSignedLetterCount> nodes;  // index = letter order
  std::vector<std::pair<int, int>> arcs;           // node indices, i < j

  int degree_sum() const { return static_cast<int>(2 * arcs.size()); }
};

LinkGraph link(const CosetKey& v);

/// Girth helpers on small undirected graphs given by index pairs.
std::optional<int> graph_girth(int n, const std::vector<std::pair<int, int>>& arcs);
std::vector<int> find_simple_cycle(int n, const std::vector<std::pair<int, int>>& arcs,
                                   int length);

/// Length of the shortest simple cycle of the link (nullopt = forest).
std::optional<int> injective_girth(const LinkGraph& l);

/// Gromov link condition on every vertex: each link must have injective
/// girth >= 6, i.e. total angle >= 6 * pi/3 = 2*pi on unit equilateral
/// triangles.  Failures pinpoint a short cycle.
SuiteReport verify_link_condition(const Ball& b);

/// All positive three-letter words equal to x, in lexicographic order.
std::vector<Word> spellings_of_x();

/// Each spelling pqr spans the triangle {<x>, p<x>, pq<x>}; the induced map
/// from spellings to arcs of the base link is a bijection onto all 16 arcs.
SuiteReport verify_spelling_edge_bijection();

struct HomologyEvidence {
  int b0 = 0;
  int b1_rational = 0;
  int b1_mod2 = 0;
};

/// Betti numbers of the induced 2-complex, over the rationals and over the
/// two-element field, by exact rank computation on the boundary maps.
HomologyEvidence homology_evidence(const Ball& b);

/// Shared worker for homology_evidence; exposed for direct testing on
/// hand-built complexes.
HomologyEvidence homology_of_complex(int vertex_count,
                                     const std::vector<std::pair<int, int>>& edges,
                                     const std::vector<std::array<int, 3>>& triangles);

void write_link_text(const LinkGraph& l, std::ostream& out);
void write_link_dot(const LinkGraph& l, std::ostream& out);

}  // namespace b4cat
