#include "sos/eps_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace sos {

const char* to_string(MatrixKind kind) {
  return kind == MatrixKind::lambda ? "lambda" : "delta";
}

bool pair_precedes(IndexPair a, IndexPair b) {
  return a.i < b.i || (a.i == b.i && a.j > b.j);
}

EpsilonProduct::EpsilonProduct(std::vector<IndexPair> pairs) : pairs_(std::move(pairs)) {
  // largest pair first
  std::sort(pairs_.begin(), pairs_.end(),
            [](IndexPair a, IndexPair b) { return pair_precedes(b, a); });
  if (std::adjacent_find(pairs_.begin(), pairs_.end()) != pairs_.end())
    throw std::invalid_argument("EpsilonProduct: repeated index pair");
  for (const auto& p : pairs_)
    if (p.j < 1) throw std::invalid_argument("EpsilonProduct: coordinate index must be >= 1");
}

bool EpsilonProduct::contains(IndexPair p) const {
  return std::find(pairs_.begin(), pairs_.end(), p) != pairs_.end();
}

bool index_set_smaller(const EpsilonProduct& a, const EpsilonProduct& b) {
  // Both lists run from the largest pair down; the first position where the
  // walks disagree yields the largest element of the symmetric difference.
  const auto pa = a.pairs();
  const auto pb = b.pairs();
  std::size_t x = 0, y = 0;
  while (x < pa.size() && y < pb.size() && pa[x] == pb[y]) {
    ++x;
    ++y;
  }
  const bool a_done = x == pa.size();
  const bool b_done = y == pb.size();
  if (a_done && b_done) throw std::invalid_argument("index_set_smaller: equal eps-products");
  if (a_done) return true;   // I(a) - I(b) is empty
  if (b_done) return false;  // I(b) - I(a) is empty
  // pa[x] != pb[y]; the larger of the two lies in only one set, and it is
  // the largest pair of the symmetric difference.
  return pair_precedes(pa[x], pb[y]);
}

DepthVector DepthVector::initial(MatrixKind kind, std::size_t dim) {
  if (dim < 1) throw std::invalid_argument("DepthVector: dimension must be >= 1");
  const int s = static_cast<int>(kind == MatrixKind::delta ? dim + 1 : dim);
  return DepthVector(kind, std::vector<int>(dim + 1, s));
}

DepthVector DepthVector::terminal(MatrixKind kind, std::size_t dim) {
  DepthVector v = initial(kind, dim);
  for (std::size_t r = 0; r < dim; ++r) v.values_[r] = static_cast<int>(r + 1);
  return v;
}

DepthVector DepthVector::from_values(MatrixKind kind, std::vector<int> values) {
  if (values.size() < 2) throw std::invalid_argument("DepthVector: need at least one entry plus sentinel");
  const std::size_t dim = values.size() - 1;
  const int s = static_cast<int>(kind == MatrixKind::delta ? dim + 1 : dim);
  if (values.back() != s) throw std::invalid_argument("DepthVector: wrong sentinel");
  for (std::size_t r = 0; r < dim; ++r) {
    if (values[r] < 1 || values[r] > s) throw std::invalid_argument("DepthVector: entry out of range");
    if (values[r] > values[r + 1]) throw std::invalid_argument("DepthVector: entries must be nondecreasing");
  }
  return DepthVector(kind, std::move(values));
}

bool DepthVector::is_terminal() const {
  for (std::size_t r = 0; r + 1 < values_.size(); ++r)
    if (values_[r] != static_cast<int>(r + 1)) return false;
  return true;
}

std::string DepthVector::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < values_.size(); ++r) {
    if (r > 0) out += (r + 1 == values_.size()) ? ";" : ",";
    out += std::to_string(values_[r]);
  }
  return out + "]";
}

DepthVector next_v(const DepthVector& v) {
  if (v.is_terminal()) throw std::out_of_range("next_v: terminal vector has no successor");
  std::vector<int> w(v.values().begin(), v.values().end());
  std::size_t pos = 0;
  while (w[pos] == 1) ++pos;
  --w[pos];
  for (std::size_t r = 0; r < pos; ++r) w[r] = w[pos];
  return DepthVector::from_values(v.kind(), std::move(w));
}

bool vector_more_significant(const DepthVector& a, const DepthVector& b) {
  if (a.kind() != b.kind() || a.dim() != b.dim())
    throw std::invalid_argument("vector_more_significant: vectors of different shape");
  for (std::size_t r = a.dim(); r >= 1; --r)
    if (a[r] != b[r]) return a[r] > b[r];
  return false;
}

std::vector<int> TermDescriptor::remaining_rows() const {
  std::vector<int> out;
  const int dim = static_cast<int>(v.dim());
  for (int r = 1; r <= dim; ++r)
    if (!std::binary_search(deleted_rows.begin(), deleted_rows.end(), r)) out.push_back(r);
  return out;
}

std::vector<int> TermDescriptor::remaining_cols() const {
  std::vector<int> out;
  const int dim = static_cast<int>(v.dim());
  for (int c = 1; c <= dim; ++c)
    if (!std::binary_search(deleted_cols.begin(), deleted_cols.end(), c)) out.push_back(c);
  return out;
}

TermDescriptor decode(const DepthVector& v, std::span<const std::int64_t> row_indices, int depth) {
  const std::size_t dim = v.dim();
  if (!row_indices.empty() && row_indices.size() != dim)
    throw std::invalid_argument("decode: row index table has the wrong length");
  TermDescriptor term{.depth = depth, .k = dim, .sign = Sign::positive, .v = v};
  std::vector<IndexPair> pairs;
  for (std::size_t r = 1; r <= dim; ++r) {
    if (!v.is_active(r)) continue;
    const int c = v[r];
    if ((static_cast<int>(r) + c) % 2 != 0) term.sign = -term.sign;
    term.deleted_rows.push_back(static_cast<int>(r));
    term.deleted_cols.push_back(c);
    pairs.push_back({row_indices.empty() ? static_cast<std::int64_t>(r) : row_indices[r - 1], c});
    --term.k;
  }
  // active columns increase with the rows, so deleted_cols is already sorted
  term.eps = EpsilonProduct(std::move(pairs));
  return term;
}

}  // namespace sos
