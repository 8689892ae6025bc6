#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubehom/common.hpp"

namespace cubehom {

/// Finite simple undirected graph with 0-indexed vertices.
/// Immutable after construction; all queries are const and thread-safe.
class Graph {
 public:
  Graph() = default;

  /// Validates simplicity: rejects loops, duplicate edges, out-of-range
  /// indices. Edge list is stored sorted with each pair as (min, max).
  Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  bool connected() const;
  bool is_tree() const;
  /// BFS distances from src; unreachable vertices get -1.
  std::vector<int> bfs_distances(int src) const;
  int distance(int u, int v) const;
  int eccentricity(int v) const;

  /// FNV-1a over vertex count and the sorted edge list; used as cache key.
  std::uint64_t hash() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

enum class MemberKind { edge, triangle, quad };

struct CoveringMember {
  MemberKind kind;
  std::vector<int> vertices;  // sorted
};

/// Covering of a graph by its edges, 3-cycles and chordless 4-cycles.
struct CoveringFamily {
  std::vector<CoveringMember> members;

  std::size_t count(MemberKind k) const;
};

struct ShortCycleReport {
  bool has_triangle = false;
  bool has_square = false;  // any 4-cycle, chordal or not
};

/// Graph produced by times_construction, with the two collapsed poles.
struct PoledGraph {
  Graph graph;
  int pole_zero = 0;  // image of the {0} x G layer
  int pole_top = 0;   // image of the {N} x G layer
  int layers = 0;     // N
};

// -- parsing and generators --------------------------------------------------

/// Edge-list format: first line "n m", then m lines "u v".
Graph parse_graph(std::string_view text);

Graph gen_cycle(int n);                       // n >= 3
Graph gen_hypercube(int d);                   // 0 <= d <= 16
Graph gen_named(const std::string& name);     // octahedron | petersen | path:N
Graph box_product(const Graph& g, const Graph& h);

/// (G box I_N) with the end layers collapsed to single vertices.
/// Vertex layout: pole_zero = 0, then layers 1..N-1 in layer-major order,
/// pole_top = last. Requires G connected and N >= 2.
PoledGraph times_construction(const Graph& g, int n);

/// Parses generator tokens: cycle:5, hypercube:3, octahedron, petersen,
/// path:4, times:cycle:5:4.
PoledGraph gen_token(const std::string& token);

// -- structural queries -------------------------------------------------------

ShortCycleReport has_short_cycles(const Graph& g);

/// All 3-cycles, as sorted vertex triples.
std::vector<std::vector<int>> triangles(const Graph& g);

/// All chordless 4-cycles, as sorted vertex quadruples (a chordless 4-cycle
/// is determined by its vertex set).
std::vector<std::vector<int>> chordless_four_cycles(const Graph& g);

/// Edges + 3-cycles + chordless 4-cycles. Chordal 4-cycles are omitted:
/// their edges are already covered by the triangles a chord creates.
CoveringFamily covering_by_short_cycles(const Graph& g);

}  // namespace cubehom
