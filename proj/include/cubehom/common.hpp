#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubehom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error taxonomy shared by library and CLI. Exit-code mapping lives in the
// CLI: DomainError -> 1, ResourceError -> 2, property failures -> 3.

/// Bad input or precondition violation (malformed graph, n < 3, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure; carries the 1-based line number of the offending line.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& msg, int line)
      : DomainError("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A configured cap (memory, size) was exceeded; carries a count estimate.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& msg, std::uint64_t count_estimate)
      : std::runtime_error(msg), count_estimate_(count_estimate) {}
  std::uint64_t count_estimate() const { return count_estimate_; }

 private:
  std::uint64_t count_estimate_ = 0;
};

/// Lifting a cube into the universal cover reached a contradiction.
/// Happens exactly when propagation around some cycle of the cube disagrees,
/// which requires a 3- or 4-cycle in the codomain graph.
class LiftObstruction : public std::runtime_error {
 public:
  LiftObstruction(const std::string& msg, int qd_vertex_a, int qd_vertex_b)
      : std::runtime_error(msg), qa_(qd_vertex_a), qb_(qd_vertex_b) {}
  /// Indices (colex) of the grid-cube edge where the contradiction surfaced;
  /// the cycle formed by the two propagation paths plus this edge is the
  /// obstruction witness.
  int qd_vertex_a() const { return qa_; }
  int qd_vertex_b() const { return qb_; }

 private:
  int qa_ = -1, qb_ = -1;
};

}  // namespace cubehom
