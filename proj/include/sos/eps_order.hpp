#pragma once

// Combinatorial side of the symbolic perturbation.
//
// Coordinate pi(i,j) is replaced by pi(i,j) + eps(i,j) with
// eps(i,j) = eps^(2^(i*delta - j)). No eps value is ever evaluated: two
// eps-products are compared through their sets of index pairs only, and the
// terms of a perturbed determinant are enumerated through depth vectors.
//
// Depth vectors and term descriptors use matrix coordinates: rows and columns
// are numbered 1..D, and a row's position stands in for its point index (the
// rows of an evaluated matrix are sorted by point index).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sos/exact_arith.hpp"

namespace sos {

/// Lambda matrices carry a constant, unperturbed trailing column of ones;
/// Delta matrices are fully perturbed (homogeneous coordinates).
enum class MatrixKind { lambda, delta };

const char* to_string(MatrixKind kind);

/// Subscript (i, j) of eps(i, j): point index i, coordinate index j >= 1.
struct IndexPair {
  std::int64_t i = 0;
  int j = 1;

  bool operator==(const IndexPair&) const = default;
};

/// True iff a precedes b: eps(a) is a larger perturbation than eps(b).
/// (i,j) precedes (k,l) iff i < k, or i == k and j > l.
bool pair_precedes(IndexPair a, IndexPair b);

/// A product of distinct eps(i,j) factors, identified with its index-pair set.
/// The empty product is eps() = 1. Pairs are kept sorted from the largest
/// (least perturbed) to the smallest pair.
class EpsilonProduct {
 public:
  EpsilonProduct() = default;
  explicit EpsilonProduct(std::vector<IndexPair> pairs);

  std::span<const IndexPair> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(IndexPair p) const;

  bool operator==(const EpsilonProduct&) const = default;

 private:
  std::vector<IndexPair> pairs_;
};

/// True iff I(a) is smaller than I(b), which means the term with eps-product a
/// dominates the term with eps-product b for every positive pair of
/// coefficients once eps is small enough. Throws std::invalid_argument if a
/// and b are the same set.
bool index_set_smaller(const EpsilonProduct& a, const EpsilonProduct& b);

/// v = [v_1..v_D; v_{D+1}] encoding one relevant term of a perturbed D x D
/// determinant. eps(r, v_r) is active iff v_r < v_{r+1}. The sentinel v_{D+1}
/// is D+1 for delta matrices and D for lambda matrices.
class DepthVector {
 public:
  /// [s, .., s; s] with s the sentinel: encodes the unperturbed determinant.
  static DepthVector initial(MatrixKind kind, std::size_t dim);
  /// [1, 2, .., D; s]: the last term that ever needs evaluation.
  static DepthVector terminal(MatrixKind kind, std::size_t dim);
  /// Validates monotonicity, range and sentinel.
  static DepthVector from_values(MatrixKind kind, std::vector<int> values);

  MatrixKind kind() const { return kind_; }
  std::size_t dim() const { return values_.size() - 1; }
  int sentinel() const { return values_.back(); }
  /// 1-based access, r in 1..D+1.
  int operator[](std::size_t r) const { return values_[r - 1]; }
  std::span<const int> values() const { return values_; }
  bool is_terminal() const;
  bool is_active(std::size_t r) const { return values_[r - 1] < values_[r]; }

  /// Renders as "[3,4,4;4]".
  std::string to_string() const;

  bool operator==(const DepthVector&) const = default;

 private:
  DepthVector(MatrixKind kind, std::vector<int> values)
      : kind_(kind), values_(std::move(values)) {}

  MatrixKind kind_ = MatrixKind::delta;
  std::vector<int> values_;
};

/// Successor in order of decreasing significance. Throws std::out_of_range
/// when called on the terminal vector.
DepthVector next_v(const DepthVector& v);

/// True iff a encodes a more significant term than b: a_j > b_j for the
/// largest j where they differ. Throws if the kinds or sizes differ.
bool vector_more_significant(const DepthVector& a, const DepthVector& b);

/// One relevant term of a perturbed determinant: coefficient sign * det(M_t)
/// where M_t is the matrix with deleted_rows/deleted_cols crossed out.
struct TermDescriptor {
  int depth = 0;
  std::size_t k = 0;  // side of M_t
  Sign sign = Sign::positive;
  std::vector<int> deleted_rows;  // 1-based, strictly increasing
  std::vector<int> deleted_cols;  // 1-based, strictly increasing
  EpsilonProduct eps;
  DepthVector v = DepthVector::initial(MatrixKind::delta, 1);

  std::vector<int> remaining_rows() const;
  std::vector<int> remaining_cols() const;

  bool operator==(const TermDescriptor&) const = default;
};

/// Decodes v. `row_indices` maps matrix row r (1-based) to the point index
/// stored at row_indices[r-1]; when empty, rows map to themselves, so the
/// eps-product is expressed in matrix coordinates.
TermDescriptor decode(const DepthVector& v, std::span<const std::int64_t> row_indices = {},
                      int depth = 0);

}  // namespace sos
