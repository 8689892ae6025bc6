#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "cubehom/common.hpp"
#include "cubehom/graph.hpp"

namespace cubehom {

// A singular d-cube is a graph map Q_d -> G stored as 2^d labels in
// colexicographic vertex order: label index i corresponds to the Q_d vertex
// (a_1,...,a_d) with a_j = bit j-1 of i (coordinate 1 is least significant).

struct SingularCube {
  int dim = 0;
  std::vector<int> labels;  // size 1 << dim

  friend auto operator<=>(const SingularCube&, const SingularCube&) = default;
};

/// Index into a 2^d label array of the preimage vertex of the face map
/// f_i^eps at (d-1)-index k: coordinate i is pinned to eps, the remaining
/// coordinates keep their order.
inline int face_source_index(int k, int i, int eps) {
  int low = k & ((1 << (i - 1)) - 1);
  int high = k >> (i - 1);
  return low | (eps << (i - 1)) | (high << i);
}

SingularCube face(const SingularCube& cube, int i, bool plus);

bool is_degenerate(std::span<const int> labels, int dim);
inline bool is_degenerate(const SingularCube& cube) {
  return is_degenerate(cube.labels, cube.dim);
}

/// Checks the graph-map condition on all d * 2^(d-1) edges of Q_d.
/// Throws DomainError naming the offending Q_d edge.
SingularCube validate_cube(std::vector<int> labels, int d, const Graph& g);

/// Number of distinct labels, stopping early at 3.
int image_size_capped(std::span<const int> labels);

/// Ordered, deduplicated list of non-degenerate singular cubes of one
/// dimension, stored flat (count * 2^dim labels) in strictly increasing
/// lexicographic order of label sequences.
class CubeBasis {
 public:
  CubeBasis() = default;
  CubeBasis(int dim, std::vector<std::uint32_t> flat);

  int dim() const { return dim_; }
  std::size_t size() const { return count_; }
  std::span<const std::uint32_t> labels(std::size_t idx) const {
    return {flat_.data() + (idx << dim_), std::size_t(1) << dim_};
  }
  SingularCube cube(std::size_t idx) const;

  /// Binary search; returns npos when absent.
  std::size_t find(std::span<const int> labels) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const std::vector<std::uint32_t>& flat() const { return flat_; }

 private:
  int dim_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> flat_;
};

}  // namespace cubehom
