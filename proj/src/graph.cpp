#include "cubehom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

namespace cubehom {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : n_(vertex_count) {
  if (vertex_count < 0) throw DomainError("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw DomainError("edge endpoint out of range: " + std::to_string(u) +
                        " " + std::to_string(v));
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw DomainError("duplicate edge " + std::to_string(u) + " " +
                        std::to_string(v));
  }
  edges_.assign(seen.begin(), seen.end());
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<int> Graph::bfs_distances(int src) const {
  std::vector<int> dist(n_, -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : adj_[v])
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

int Graph::distance(int u, int v) const { return bfs_distances(u)[v]; }

int Graph::eccentricity(int v) const {
  auto d = bfs_distances(v);
  return *std::max_element(d.begin(), d.end());
}

bool Graph::connected() const {
  if (n_ == 0) return true;
  auto d = bfs_distances(0);
  return std::find(d.begin(), d.end(), -1) == d.end();
}

bool Graph::is_tree() const {
  return connected() && edge_count() == n_ - 1;
}

std::uint64_t Graph::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for (auto [u, v] : edges_) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  return h;
}

// -- parsing ------------------------------------------------------------------

namespace {

bool parse_int(std::string_view tok, int& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    lines.push_back(raw);
    pos = nl + 1;
    if (nl == text.size()) break;
  }
  int lineno = 0;
  auto next_tokens = [&](bool required) -> std::vector<std::string_view> {
    while (lineno < static_cast<int>(lines.size())) {
      auto toks = split_ws(lines[lineno]);
      ++lineno;
      if (!toks.empty() && toks[0][0] != '#') return toks;
    }
    if (required) throw ParseError("unexpected end of input", lineno);
    return {};
  };

  auto header = next_tokens(true);
  int n = 0, m = 0;
  if (header.size() != 2 || !parse_int(header[0], n) || !parse_int(header[1], m))
    throw ParseError("expected header \"n m\"", lineno);
  if (n < 0 || m < 0) throw ParseError("negative count in header", lineno);

  std::vector<std::pair<int, int>> edge_list;
  std::set<std::pair<int, int>> seen;
  for (int k = 0; k < m; ++k) {
    auto toks = next_tokens(true);
    int u = 0, v = 0;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
      throw ParseError("expected edge \"u v\"", lineno);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("vertex index out of range", lineno);
    if (u == v) throw ParseError("loop forbidden", lineno);
    auto e = std::minmax(u, v);
    if (!seen.insert({e.first, e.second}).second)
      throw ParseError("duplicate edge", lineno);
    edge_list.push_back({u, v});
  }
  auto trailing = next_tokens(false);
  if (!trailing.empty()) throw ParseError("trailing content", lineno);
  return Graph(n, std::move(edge_list));
}

// -- generators ---------------------------------------------------------------

Graph gen_cycle(int n) {
  if (n < 3) throw DomainError("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph gen_hypercube(int d) {
  if (d < 0) throw DomainError("hypercube dimension must be >= 0");
  if (d > 16)
    throw ResourceError("hypercube dimension cap is 16", 1ull << d);
  int n = 1 << d;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) {
      int k = i ^ (1 << j);
      if (i < k) edges.push_back({i, k});
    }
  return Graph(n, std::move(edges));
}

Graph gen_named(const std::string& name) {
  if (name == "octahedron") {
    // K_{2,2,2}; antipodal pairs (0,1), (2,3), (4,5)
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v)
        if (u / 2 != v / 2) edges.push_back({u, v});
    return Graph(6, std::move(edges));
  }
  if (name == "petersen") {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
      edges.push_back({i, (i + 1) % 5});
      edges.push_back({5 + i, 5 + (i + 2) % 5});
      edges.push_back({i, 5 + i});
    }
    return Graph(10, std::move(edges));
  }
  if (name.rfind("path:", 0) == 0) {
    int len = 0;
    if (!parse_int(std::string_view(name).substr(5), len) || len < 0)
      throw DomainError("bad path length in \"" + name + "\"");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < len; ++i) edges.push_back({i, i + 1});
    return Graph(len + 1, std::move(edges));
  }
  throw DomainError("unknown graph name \"" + name + "\"");
}

Graph box_product(const Graph& g, const Graph& h) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0)
    throw DomainError("box product of empty graph");
  int nh = h.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = 0; b < nh; ++b) {
      for (int b2 : h.neighbors(b))
        if (b2 > b) edges.push_back({a * nh + b, a * nh + b2});
      for (int a2 : g.neighbors(a))
        if (a2 > a) edges.push_back({a * nh + b, a2 * nh + b});
    }
  return Graph(g.vertex_count() * nh, std::move(edges));
}

PoledGraph times_construction(const Graph& g, int n) {
  if (n < 2) throw DomainError("times construction needs N >= 2");
  if (!g.connected())
    throw DomainError("times construction needs a connected graph");
  int base = g.vertex_count();
  int total = base * (n - 1) + 2;
  auto at = [base](int layer, int v) { return 1 + (layer - 1) * base + v; };
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < base; ++v) {
    edges.push_back({0, at(1, v)});
    edges.push_back({at(n - 1, v), total - 1});
  }
  for (int layer = 1; layer + 1 <= n - 1; ++layer)
    for (int v = 0; v < base; ++v)
      edges.push_back({at(layer, v), at(layer + 1, v)});
  for (int layer = 1; layer <= n - 1; ++layer)
    for (auto [u, v] : g.edges()) edges.push_back({at(layer, u), at(layer, v)});
  PoledGraph out;
  out.graph = Graph(total, std::move(edges));
  out.pole_zero = 0;
  out.pole_top = total - 1;
  out.layers = n;
  return out;
}

PoledGraph gen_token(const std::string& token) {
  if (token.rfind("times:", 0) == 0) {
    std::string rest = token.substr(6);
    auto cut = rest.rfind(':');
    if (cut == std::string::npos)
      throw DomainError("times token needs times:<graph>:<N>");
    int n = 0;
    if (!parse_int(std::string_view(rest).substr(cut + 1), n))
      throw DomainError("bad N in times token");
    PoledGraph inner = gen_token(rest.substr(0, cut));
    return times_construction(inner.graph, n);
  }
  PoledGraph out;
  if (token.rfind("cycle:", 0) == 0) {
    int n = 0;
    if (!parse_int(std::string_view(token).substr(6), n))
      throw DomainError("bad cycle token");
    out.graph = gen_cycle(n);
  } else if (token.rfind("hypercube:", 0) == 0) {
    int d = 0;
    if (!parse_int(std::string_view(token).substr(10), d))
      throw DomainError("bad hypercube token");
    out.graph = gen_hypercube(d);
  } else {
    out.graph = gen_named(token);
  }
  return out;
}

// -- structural queries ---------------------------------------------------------

ShortCycleReport has_short_cycles(const Graph& g) {
  ShortCycleReport r;
  int n = g.vertex_count();
  for (int u = 0; u < n && !r.has_triangle; ++u)
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      for (int w : g.neighbors(v))
        if (w > v && g.adjacent(u, w)) {
          r.has_triangle = true;
          break;
        }
      if (r.has_triangle) break;
    }
  // any 4-cycle: two vertices with two common neighbors
  for (int u = 0; u < n && !r.has_square; ++u)
    for (int w = u + 1; w < n && !r.has_square; ++w) {
      int common = 0;
      for (int x : g.neighbors(u))
        if (g.adjacent(w, x)) ++common;
      if (common >= 2) r.has_square = true;
    }
  return r;
}

std::vector<std::vector<int>> triangles(const Graph& g) {
  std::vector<std::vector<int>> out;
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      for (int w : g.neighbors(v))
        if (w > v && g.adjacent(u, w)) out.push_back({u, v, w});
    }
  return out;
}

std::vector<std::vector<int>> chordless_four_cycles(const Graph& g) {
  std::set<std::vector<int>> out;
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u))
      for (int w : g.neighbors(v)) {
        if (w == u) continue;
        for (int x : g.neighbors(w)) {
          if (x == v || x == u || !g.adjacent(x, u)) continue;
          if (g.adjacent(u, w) || g.adjacent(v, x)) continue;  // chord
          std::vector<int> key{u, v, w, x};
          std::sort(key.begin(), key.end());
          out.insert(key);
        }
      }
  return {out.begin(), out.end()};
}

std::size_t CoveringFamily::count(MemberKind k) const {
  std::size_t c = 0;
  for (const auto& m : members) c += (m.kind == k);
  return c;
}

CoveringFamily covering_by_short_cycles(const Graph& g) {
  CoveringFamily fam;
  for (auto [u, v] : g.edges())
    fam.members.push_back({MemberKind::edge, {u, v}});
  for (auto& t : triangles(g)) fam.members.push_back({MemberKind::triangle, t});
  for (auto& q : chordless_four_cycles(g))
    fam.members.push_back({MemberKind::quad, q});
  return fam;
}

}  // namespace cubehom
