#pragma once

// Sign of a symbolically perturbed determinant.
//
// The rows of the matrix must belong to points with strictly increasing
// indices. Terms of the perturbed determinant are scanned in order of
// decreasing significance; the first nonzero coefficient decides the sign and
// its position is reported as the depth.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sos/eps_order.hpp"
#include "sos/exact_arith.hpp"

namespace sos {

/// Largest matrix side accepted by the evaluator (in-sphere in 8 dimensions).
inline constexpr std::size_t max_sos_size = 10;
/// Largest side for which term tables and code are generated.
inline constexpr std::size_t max_table_size = 8;

enum class Arithmetic {
  automatic,  // fixed-width when the bound check allows it
  exact       // always arbitrary precision
};

struct SosSignResult {
  Sign sign = Sign::positive;  // never zero
  int depth = 0;

  bool operator==(const SosSignResult&) const = default;
};

/// D x D matrix to be evaluated under perturbation. For lambda matrices the
/// last column must be all ones.
struct SosMatrix {
  MatrixKind kind = MatrixKind::delta;
  std::size_t size = 0;
  std::vector<BigInt> entries;  // row-major
  std::vector<std::int64_t> row_indices;

  /// Builds a lambda matrix from D rows of D-1 coordinates each.
  static SosMatrix lambda(std::vector<std::vector<BigInt>> rows, std::vector<std::int64_t> indices);
  /// Builds a delta matrix from D rows of D coordinates each.
  static SosMatrix delta(std::vector<std::vector<BigInt>> rows, std::vector<std::int64_t> indices);

  /// Throws std::invalid_argument on shape, ones-column or ordering violations.
  void validate() const;
};

SosSignResult sign_det_sos(const SosMatrix& m, Arithmetic arithmetic = Arithmetic::automatic);

/// Same evaluation over 64-bit entries without building a SosMatrix. Row
/// indices only need to be strictly increasing; they are checked but do not
/// influence the result.
SosSignResult sign_det_sos(MatrixKind kind, std::size_t size, std::span<const std::int64_t> entries,
                           std::span<const std::int64_t> row_indices,
                           Arithmetic arithmetic = Arithmetic::automatic);

/// All relevant terms in order: up to k_t = 0 for delta, k_t = 1 for lambda.
/// Eps-products are in matrix coordinates (row r stands for the r-th point).
/// Requires 2 <= size <= max_table_size.
std::vector<TermDescriptor> generate_term_table(MatrixKind kind, std::size_t size);

enum class CodeStyle { case_table, unrolled };

/// Deterministic straight-line rendering of the term table. Coordinate slots
/// are named P<row letter><column>, e.g. Pi1, Pj2; the ones column of lambda
/// matrices is written as the literal 1.
std::string emit_straightline_code(MatrixKind kind, std::size_t size, CodeStyle style);

/// Row letter used by tables and generated code: rows 1.. map to i, j, k, l, m, n, o, p.
char row_letter(int row);

}  // namespace sos
