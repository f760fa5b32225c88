#include "sos/sos_sign.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sos {

namespace {

void check_shape(std::size_t size, std::size_t entry_count, std::span<const std::int64_t> row_indices) {
  if (size < 1 || size > max_sos_size)
    throw std::invalid_argument("sign_det_sos: matrix size out of range");
  if (entry_count != size * size)
    throw std::invalid_argument("sign_det_sos: entry count is not size*size");
  if (row_indices.size() != size)
    throw std::invalid_argument("sign_det_sos: need one point index per row");
  for (std::size_t r = 1; r < size; ++r)
    if (row_indices[r - 1] >= row_indices[r])
      throw std::invalid_argument("sign_det_sos: row indices must be strictly increasing");
}

template <class Entry>
void check_ones_column(MatrixKind kind, std::size_t size, std::span<const Entry> a) {
  if (kind != MatrixKind::lambda) return;
  for (std::size_t r = 0; r < size; ++r)
    if (a[r * size + size - 1] != 1)
      throw std::invalid_argument("sign_det_sos: lambda matrix needs a trailing column of ones");
}

// Scans the relevant terms. `sign_fn(view, k)` returns the exact sign of a
// k x k row-major determinant.
template <class Entry, class SignFn>
SosSignResult scan_terms(MatrixKind kind, std::size_t size, std::span<const Entry> a,
                         SignFn&& sign_fn) {
  Sign s = sign_fn(a, size);
  if (s != Sign::zero) return {s, 0};

  std::vector<Entry> sub;
  DepthVector v = DepthVector::initial(kind, size);
  for (int depth = 1;; ++depth) {
    // Past the terminal vector next_v throws; the terminal coefficient is +-1,
    // so reaching that point means the input broke a precondition.
    v = next_v(v);
    const TermDescriptor term = decode(v, {}, depth);
    sub.clear();
    for (int r : term.remaining_rows())
      for (int c : term.remaining_cols()) sub.push_back(a[(r - 1) * size + (c - 1)]);
    s = sign_fn(std::span<const Entry>(sub), term.k);
    if (s != Sign::zero) return {term.sign * s, depth};
  }
}

Sign exact_sign(std::span<const BigInt> a, std::size_t k) {
  return sign_of(determinant_exact(a, k));
}

SosSignResult evaluate_big(MatrixKind kind, std::size_t size, std::span<const BigInt> a) {
  return scan_terms<BigInt>(kind, size, a, exact_sign);
}

SosSignResult evaluate_fixed(MatrixKind kind, std::size_t size, std::span<const std::int64_t> a) {
  return scan_terms<std::int64_t>(kind, size, a, [](std::span<const std::int64_t> m, std::size_t k) {
    return fixed_width::sign_of_determinant(m, k);
  });
}

bool fits_int64(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  return v >= lo && v <= hi;
}

}  // namespace

SosMatrix SosMatrix::lambda(std::vector<std::vector<BigInt>> rows, std::vector<std::int64_t> indices) {
  SosMatrix m{.kind = MatrixKind::lambda, .size = rows.size(), .row_indices = std::move(indices)};
  for (auto& row : rows) {
    if (row.size() + 1 != m.size) throw std::invalid_argument("SosMatrix::lambda: need size-1 coordinates per row");
    for (auto& e : row) m.entries.push_back(std::move(e));
    m.entries.emplace_back(1);
  }
  m.validate();
  return m;
}

SosMatrix SosMatrix::delta(std::vector<std::vector<BigInt>> rows, std::vector<std::int64_t> indices) {
  SosMatrix m{.kind = MatrixKind::delta, .size = rows.size(), .row_indices = std::move(indices)};
  for (auto& row : rows) {
    if (row.size() != m.size) throw std::invalid_argument("SosMatrix::delta: need size coordinates per row");
    for (auto& e : row) m.entries.push_back(std::move(e));
  }
  m.validate();
  return m;
}

void SosMatrix::validate() const {
  check_shape(size, entries.size(), row_indices);
  check_ones_column<BigInt>(kind, size, entries);
}

SosSignResult sign_det_sos(const SosMatrix& m, Arithmetic arithmetic) {
  m.validate();
  if (arithmetic == Arithmetic::automatic &&
      std::all_of(m.entries.begin(), m.entries.end(), fits_int64)) {
    std::array<std::int64_t, max_sos_size * max_sos_size> buf{};
    for (std::size_t i = 0; i < m.entries.size(); ++i) buf[i] = static_cast<std::int64_t>(m.entries[i]);
    const std::span<const std::int64_t> view(buf.data(), m.entries.size());
    if (fixed_width::applicable(fixed_width::max_abs_entry(view), m.size))
      return evaluate_fixed(m.kind, m.size, view);
  }
  return evaluate_big(m.kind, m.size, m.entries);
}

SosSignResult sign_det_sos(MatrixKind kind, std::size_t size, std::span<const std::int64_t> entries,
                           std::span<const std::int64_t> row_indices, Arithmetic arithmetic) {
  check_shape(size, entries.size(), row_indices);
  check_ones_column<std::int64_t>(kind, size, entries);
  if (arithmetic == Arithmetic::automatic &&
      fixed_width::applicable(fixed_width::max_abs_entry(entries), size))
    return evaluate_fixed(kind, size, entries);
  const std::vector<BigInt> big(entries.begin(), entries.end());
  return evaluate_big(kind, size, big);
}

std::vector<TermDescriptor> generate_term_table(MatrixKind kind, std::size_t size) {
  if (size < 2 || size > max_table_size)
    throw std::invalid_argument("generate_term_table: size must be in [2, " +
                                std::to_string(max_table_size) + "]");
  // Generating mode evaluates nothing, so the scan stops at the first
  // constant coefficient: the 0x0 minor for delta, the 1x1 minor (1) for lambda.
  const std::size_t last_k = kind == MatrixKind::delta ? 0 : 1;
  std::vector<TermDescriptor> table;
  DepthVector v = DepthVector::initial(kind, size);
  for (int depth = 0;; ++depth) {
    table.push_back(decode(v, {}, depth));
    if (table.back().k == last_k) break;
    v = next_v(v);
  }
  return table;
}

char row_letter(int row) {
  static constexpr char letters[] = "ijklmnop";
  if (row < 1 || row > 8) throw std::out_of_range("row_letter: row out of range");
  return letters[row - 1];
}

namespace {

std::string slot(MatrixKind kind, std::size_t size, int row, int col) {
  if (kind == MatrixKind::lambda && col == static_cast<int>(size)) return "1";
  return std::string("P") + row_letter(row) + std::to_string(col);
}

std::string term_expression(MatrixKind kind, std::size_t size, const TermDescriptor& term) {
  const char* sign = term.sign == Sign::positive ? "+" : "-";
  if (term.k == 0) return std::string(sign) + "1";
  std::vector<std::string> args;
  for (int r : term.remaining_rows())
    for (int c : term.remaining_cols()) args.push_back(slot(kind, size, r, c));
  if (term.k == 1) {
    if (args[0] == "1") return std::string(sign) + "1";
    return std::string(sign) + "Sign (" + args[0] + ")";
  }
  std::string out = std::string(sign) + "SignDet" + std::to_string(term.k) + " (";
  for (std::size_t a = 0; a < args.size(); ++a) out += (a ? ", " : "") + args[a];
  return out + ")";
}

std::string function_name(MatrixKind kind, std::size_t size) {
  return std::string("SignDet") + (kind == MatrixKind::lambda ? "Lambda" : "Delta") + std::to_string(size);
}

}  // namespace

std::string emit_straightline_code(MatrixKind kind, std::size_t size, CodeStyle style) {
  const auto table = generate_term_table(kind, size);
  const std::string name = function_name(kind, size);
  std::ostringstream out;
  if (style == CodeStyle::case_table) {
    out << "(* " << name << ": " << table.size() << " relevant terms by increasing depth t *)\n";
    out << "CASE t OF\n";
    for (const auto& term : table)
      out << "  " << term.depth << " : s := " << term_expression(kind, size, term) << ";\n";
    out << "END;\n";
    return out.str();
  }
  out << "FUNCTION " << name << " (";
  bool first = true;
  for (std::size_t r = 1; r <= size; ++r)
    for (std::size_t c = 1; c <= size; ++c) {
      const std::string s = slot(kind, size, static_cast<int>(r), static_cast<int>(c));
      if (s == "1") continue;
      out << (first ? "" : ", ") << s;
      first = false;
    }
  out << "): Integer;\n";
  out << "BEGIN\n";
  for (std::size_t t = 0; t < table.size(); ++t) {
    out << "  " << name << " := " << term_expression(kind, size, table[t]) << ";\n";
    if (t + 1 < table.size()) out << "  IF " << name << " <> 0 THEN goto 999;\n";
  }
  out << "  999: (* exit *)\n";
  out << "END;\n";
  return out.str();
}

}  // namespace sos
