#include "sos/exact_arith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace sos {

IntMatrix::IntMatrix(std::size_t k) : k_(k), entries_(k * k) {}

IntMatrix::IntMatrix(std::size_t k, std::vector<BigInt> entries)
    : k_(k), entries_(std::move(entries)) {
  if (entries_.size() != k_ * k_)
    throw std::invalid_argument("IntMatrix: entry count is not k*k");
}

IntMatrix IntMatrix::from_rows(
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(rows.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != m.k_)
      throw std::invalid_argument("IntMatrix: matrix is not square");
    std::size_t c = 0;
    for (std::int64_t v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

IntMatrix IntMatrix::from_span(std::size_t k, std::span<const std::int64_t> entries) {
  if (entries.size() != k * k)
    throw std::invalid_argument("IntMatrix: entry count is not k*k");
  IntMatrix m(k);
  for (std::size_t i = 0; i < entries.size(); ++i) m.entries_[i] = entries[i];
  return m;
}

BigInt IntMatrix::max_abs_entry() const {
  BigInt best = 0;
  for (const auto& e : entries_) {
    BigInt a = abs(e);
    if (a > best) best = std::move(a);
  }
  return best;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < k_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

namespace {

// Works for BigInt and __int128. `a` is a k*k row-major scratch copy that is
// consumed. Callers guarantee that T cannot overflow.
template <class T>
T bareiss(std::span<T> a, std::size_t k) {
  auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * k + c]; };
  T previous = 1;
  bool negate = false;
  for (std::size_t s = 0; s + 1 < k; ++s) {
    if (at(s, s) == 0) {
      std::size_t p = s + 1;
      while (p < k && at(p, s) == 0) ++p;
      if (p == k) return T(0);
      for (std::size_t c = 0; c < k; ++c) std::swap(at(s, c), at(p, c));
      negate = !negate;
    }
    const T pivot = at(s, s);
    for (std::size_t r = s + 1; r < k; ++r) {
      for (std::size_t c = s + 1; c < k; ++c) {
        T v = pivot * at(r, c) - at(r, s) * at(s, c);
        at(r, c) = v / previous;  // exact
      }
      at(r, s) = 0;
    }
    previous = pivot;
  }
  T det = at(k - 1, k - 1);
  return negate ? T(-det) : det;
}

template <class T, class Get>
T small_determinant(std::size_t k, Get get) {
  switch (k) {
    case 0:
      return T(1);
    case 1:
      return T(get(0, 0));
    case 2:
      return T(get(0, 0)) * T(get(1, 1)) - T(get(0, 1)) * T(get(1, 0));
    case 3: {
      const T m0 = T(get(1, 1)) * T(get(2, 2)) - T(get(1, 2)) * T(get(2, 1));
      const T m1 = T(get(1, 0)) * T(get(2, 2)) - T(get(1, 2)) * T(get(2, 0));
      const T m2 = T(get(1, 0)) * T(get(2, 1)) - T(get(1, 1)) * T(get(2, 0));
      return T(get(0, 0)) * m0 - T(get(0, 1)) * m1 + T(get(0, 2)) * m2;
    }
    default:
      throw std::logic_error("small_determinant: k > 3");
  }
}

bool fits_int64(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  return v >= lo && v <= hi;
}

}  // namespace

BigInt determinant_exact(const IntMatrix& m) {
  return determinant_exact(m.entries(), m.size());
}

BigInt determinant_exact(std::span<const BigInt> a, std::size_t k) {
  if (a.size() != k * k) throw std::invalid_argument("determinant_exact: entry count is not k*k");
  if (k <= 3)
    return small_determinant<BigInt>(k, [&](std::size_t r, std::size_t c) -> const BigInt& { return a[r * k + c]; });
  std::vector<BigInt> scratch(a.begin(), a.end());
  return bareiss(std::span<BigInt>(scratch), k);
}

Sign sign_of_determinant(const IntMatrix& m) {
  const std::size_t k = m.size();
  if (k <= fixed_width::max_size &&
      std::all_of(m.entries().begin(), m.entries().end(), fits_int64)) {
    std::array<std::int64_t, fixed_width::max_size * fixed_width::max_size> buf{};
    for (std::size_t i = 0; i < k * k; ++i) buf[i] = static_cast<std::int64_t>(m.entries()[i]);
    const std::span<const std::int64_t> view(buf.data(), k * k);
    if (fixed_width::applicable(fixed_width::max_abs_entry(view), k))
      return fixed_width::sign_of_determinant(view, k);
  }
  return sign_of(determinant_exact(m));
}

BigInt hadamard_bound(const BigInt& mu, std::size_t dim) {
  if (mu < 0) throw std::invalid_argument("hadamard_bound: mu must be nonnegative");
  // ceil(sqrt(mu^(2D) * D^D))
  const BigInt radicand = pow(mu, static_cast<unsigned>(2 * dim)) *
                          pow(BigInt(dim), static_cast<unsigned>(dim));
  BigInt root = sqrt(radicand);
  if (root * root < radicand) ++root;
  return root;
}

namespace fixed_width {

bool applicable(std::uint64_t mu, std::size_t k) {
  if (k > max_size) return false;
  if (k == 0 || mu == 0) return true;
  const double bits = static_cast<double>(std::bit_width(mu));  // mu < 2^bits
  const double n = static_cast<double>(k);
  if (k <= 3) {
    // |any partial sum| <= k! * mu^k, and 3! < 2^3
    return n * bits + 3.0 <= 125.0;
  }
  // Bareiss intermediates are minors bounded by the Hadamard bound H; the
  // unreduced products are bounded by 2*H^2.
  const double log_h = n * bits + 0.5 * n * std::log2(n);
  return log_h <= 62.0;
}

std::uint64_t max_abs_entry(std::span<const std::int64_t> entries) {
  std::uint64_t best = 0;
  for (std::int64_t v : entries) {
    const std::uint64_t a = v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v)
                                  : static_cast<std::uint64_t>(v);
    best = std::max(best, a);
  }
  return best;
}

Sign sign_of_determinant(std::span<const std::int64_t> a, std::size_t k) {
  __extension__ using wide = __int128;
  if (k <= 3)
    return sign_of(small_determinant<wide>(k, [&](std::size_t r, std::size_t c) { return a[r * k + c]; }));
  std::array<wide, max_size * max_size> scratch;
  std::copy(a.begin(), a.end(), scratch.begin());
  return sign_of(bareiss(std::span<wide>(scratch.data(), k * k), k));
}

}  // namespace fixed_width

}  // namespace sos
