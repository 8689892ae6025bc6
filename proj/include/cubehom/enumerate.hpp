#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubehom/cube.hpp"
#include "cubehom/graph.hpp"

namespace cubehom {

/// Which singular cubes a chain group is generated by.
struct Restriction {
  enum class Kind { all, two_point, subgraph_list, subset };
  Kind kind = Kind::all;
  std::vector<std::vector<int>> members;  // subgraph_list: sorted vertex sets
  std::vector<int> subset;                // subset: sorted vertex list

  static Restriction all() { return {}; }
  static Restriction two_point() {
    Restriction r;
    r.kind = Kind::two_point;
    return r;
  }
  static Restriction subgraphs(const CoveringFamily& family);
  static Restriction subgraphs(std::vector<std::vector<int>> sets);
  static Restriction vertex_subset(std::vector<int> vertices);

  std::string tag() const;
  std::uint64_t hash() const;
  friend bool operator==(const Restriction&, const Restriction&) = default;
};

struct EnumOptions {
  std::uint64_t memory_cap_bytes = 8ull << 30;  // applies to stored bases
  std::string cache_dir;                        // empty disables the cache
  int threads = 1;
};

/// All non-degenerate singular d-cubes under the restriction, in canonical
/// (lexicographic) order. Deterministic for any thread count.
CubeBasis enumerate_cubes(const Graph& g, int d,
                          const Restriction& restriction = {},
                          const EnumOptions& options = {});

// -- streaming enumeration ------------------------------------------------------
// Visits non-degenerate cubes in lexicographic order without storing them.
// The visitor returns false to stop early.

namespace detail {

struct Mask256 {
  std::array<std::uint64_t, 4> w{};

  void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  Mask256& operator&=(const Mask256& o) {
    for (int i = 0; i < 4; ++i) w[i] &= o.w[i];
    return *this;
  }
  Mask256& operator|=(const Mask256& o) {
    for (int i = 0; i < 4; ++i) w[i] |= o.w[i];
    return *this;
  }
  static Mask256 none() { return {}; }
  static Mask256 first_n(int n) {
    Mask256 m;
    for (int i = 0; i < n; ++i) m.set(i);
    return m;
  }
};

/// DFS state shared by the stored and streaming enumerators.
class CubeEnumerator {
 public:
  CubeEnumerator(const Graph& g, int d, const Restriction& r);

  /// Enumerate cubes whose first label lies in [first_lo, first_hi);
  /// calls visit(labels) for each non-degenerate cube, in lex order.
  /// visit returns false to stop. Returns false iff stopped early.
  template <class Visitor>
  bool run(Visitor&& visit, int first_lo, int first_hi) {
    return assign(0, first_lo, first_hi, visit);
  }

 private:
  template <class Visitor>
  bool assign(int pos, int lo, int hi, Visitor&& visit) {
    const int total = 1 << d_;
    if (pos == total) {
      if (!is_degenerate(std::span<const int>(labels_.data(), total), d_))
        return visit(std::span<const int>(labels_.data(), total));
      return true;
    }
    Mask256 cand = base_allow_;
    for (int j = 0; j < d_; ++j)
      if (pos & (1 << j)) cand &= eq_adj_[labels_[pos ^ (1 << j)]];
    if (kind_ == Restriction::Kind::two_point && distinct_count_ == 2) {
      Mask256 two;
      two.set(distinct_[0]);
      two.set(distinct_[1]);
      cand &= two;
    }
    for (int word = 0; word < 4; ++word) {
      std::uint64_t bits = cand.w[word];
      while (bits) {
        int v = word * 64 + __builtin_ctzll(bits);
        bits &= bits - 1;
        if (pos == 0 && (v < lo || v >= hi)) continue;
        if (!try_assign(pos, v)) continue;
        bool go = assign(pos + 1, lo, hi, visit);
        undo_assign(pos);
        if (!go) return false;
      }
    }
    return true;
  }

  bool try_assign(int pos, int v);
  void undo_assign(int pos);

  const Graph& g_;
  int d_;
  Restriction::Kind kind_;
  std::vector<Mask256> eq_adj_;  // {v} | neighbors(v)
  Mask256 base_allow_;
  std::vector<int> labels_;
  // two_point bookkeeping
  int distinct_[2] = {-1, -1};
  int distinct_count_ = 0;
  std::vector<int> distinct_undo_;
  // subgraph_list bookkeeping: viable member indices per assigned level
  std::vector<std::vector<int>> viable_stack_;
  std::vector<Mask256> member_masks_;
  std::vector<Mask256> allow_stack_;
};

}  // namespace detail

/// Streaming enumeration in lexicographic order; visitor returns false to
/// stop early. Single-threaded.
template <class Visitor>
bool for_each_cube(const Graph& g, int d, const Restriction& r,
                   Visitor&& visit) {
  detail::CubeEnumerator e(g, d, r);
  return e.run(visit, 0, g.vertex_count());
}

// -- on-disk basis cache ---------------------------------------------------------

/// File name under dir for a (graph, dim, restriction) key.
std::string basis_cache_path(const std::string& dir, const Graph& g, int d,
                             const Restriction& r);
std::optional<CubeBasis> load_basis_cache(const std::string& dir,
                                          const Graph& g, int d,
                                          const Restriction& r);
void save_basis_cache(const std::string& dir, const Graph& g, int d,
                      const Restriction& r, const CubeBasis& basis);

}  // namespace cubehom
