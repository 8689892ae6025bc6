#include "cubehom/cube.hpp"

#include <algorithm>

namespace cubehom {

SingularCube face(const SingularCube& cube, int i, bool plus) {
  if (cube.dim < 1) throw DomainError("face of a 0-cube");
  if (i < 1 || i > cube.dim) throw DomainError("face direction out of range");
  SingularCube out;
  out.dim = cube.dim - 1;
  out.labels.resize(std::size_t(1) << out.dim);
  int eps = plus ? 1 : 0;
  for (int k = 0; k < (1 << out.dim); ++k)
    out.labels[k] = cube.labels[face_source_index(k, i, eps)];
  return out;
}

bool is_degenerate(std::span<const int> labels, int dim) {
  for (int i = 0; i < dim; ++i) {
    int bit = 1 << i;
    bool equal = true;
    for (int k = 0; k < static_cast<int>(labels.size()) && equal; ++k)
      if (!(k & bit) && labels[k] != labels[k | bit]) equal = false;
    if (equal) return true;
  }
  return false;
}

SingularCube validate_cube(std::vector<int> labels, int d, const Graph& g) {
  if (d < 0) throw DomainError("negative dimension");
  if (labels.size() != (std::size_t(1) << d))
    throw DomainError("label sequence has wrong length for dimension " +
                      std::to_string(d));
  for (int v : labels)
    if (v < 0 || v >= g.vertex_count())
      throw DomainError("label out of range: " + std::to_string(v));
  for (int k = 0; k < (1 << d); ++k)
    for (int j = 0; j < d; ++j) {
      int m = k | (1 << j);
      if (m == k || m < k) continue;
      int a = labels[k], b = labels[m];
      if (a != b && !g.adjacent(a, b))
        throw DomainError("graph-map condition fails on grid-cube edge (" +
                          std::to_string(k) + "," + std::to_string(m) +
                          "): labels " + std::to_string(a) + "," +
                          std::to_string(b));
    }
  SingularCube out;
  out.dim = d;
  out.labels = std::move(labels);
  return out;
}

int image_size_capped(std::span<const int> labels) {
  int a = -1, b = -1;
  for (int v : labels) {
    if (v == a || v == b) continue;
    if (a < 0)
      a = v;
    else if (b < 0)
      b = v;
    else
      return 3;
  }
  return (b >= 0) ? 2 : (a >= 0 ? 1 : 0);
}

CubeBasis::CubeBasis(int dim, std::vector<std::uint32_t> flat)
    : dim_(dim), flat_(std::move(flat)) {
  count_ = flat_.size() >> dim_;
}

SingularCube CubeBasis::cube(std::size_t idx) const {
  SingularCube c;
  c.dim = dim_;
  auto s = labels(idx);
  c.labels.assign(s.begin(), s.end());
  return c;
}

std::size_t CubeBasis::find(std::span<const int> want) const {
  std::size_t lo = 0, hi = count_;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto rec = labels(mid);
    int cmp = 0;
    for (std::size_t j = 0; j < rec.size(); ++j) {
      if (static_cast<int>(rec[j]) < want[j]) {
        cmp = -1;
        break;
      }
      if (static_cast<int>(rec[j]) > want[j]) {
        cmp = 1;
        break;
      }
    }
    if (cmp < 0)
      lo = mid + 1;
    else if (cmp > 0)
      hi = mid;
    else
      return mid;
  }
  return npos;
}

}  // namespace cubehom
