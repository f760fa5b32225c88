#pragma once

// Exact integer determinants for small dense matrices.
//
// Two evaluation routes exist. The general route works on arbitrary-precision
// integers (direct cofactor formulas for k <= 3, fraction-free Bareiss
// elimination above that). The fixed-width route works on 64-bit entries with
// 128-bit intermediates and is only taken after a bound check proves that no
// intermediate can overflow.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sos {

using BigInt = boost::multiprecision::cpp_int;

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

template <class T>
constexpr Sign sign_of(const T& v) {
  return v > 0 ? Sign::positive : (v < 0 ? Sign::negative : Sign::zero);
}

inline Sign sign_of(const BigInt& v) {
  return static_cast<Sign>(v.sign());
}

/// Square matrix of arbitrary-precision integers, stored row-major.
/// The 0x0 matrix is valid and has determinant 1.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t k);
  IntMatrix(std::size_t k, std::vector<BigInt> entries);

  static IntMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix from_span(std::size_t k, std::span<const std::int64_t> entries);

  std::size_t size() const { return k_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * k_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * k_ + c]; }

  std::span<const BigInt> entries() const { return entries_; }

  /// Largest absolute value of any entry (0 for the empty matrix).
  BigInt max_abs_entry() const;

  void swap_rows(std::size_t a, std::size_t b);

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t k_ = 0;
  std::vector<BigInt> entries_;
};

BigInt determinant_exact(const IntMatrix& m);
/// Same, on a k x k row-major view.
BigInt determinant_exact(std::span<const BigInt> entries, std::size_t k);

/// Exact sign of det(m). Uses the fixed-width route when every entry fits in
/// 64 bits and the bound check passes, the arbitrary-precision route otherwise.
Sign sign_of_determinant(const IntMatrix& m);

/// Smallest integer >= mu^D * D^(D/2).
BigInt hadamard_bound(const BigInt& mu, std::size_t dim);

namespace fixed_width {

/// Largest matrix side the fixed-width route handles.
inline constexpr std::size_t max_size = 12;

/// True when every intermediate of the fixed-width evaluation of a k x k
/// matrix with entries bounded by mu in absolute value fits in a signed
/// 128-bit integer. Monotone in both mu and k.
bool applicable(std::uint64_t mu, std::size_t k);

/// Largest |entry| of a 64-bit matrix, as an unsigned value (|INT64_MIN| fits).
std::uint64_t max_abs_entry(std::span<const std::int64_t> entries);

/// Sign of the determinant of the k x k row-major matrix `a`.
/// Precondition: applicable(max_abs_entry(a), k).
Sign sign_of_determinant(std::span<const std::int64_t> a, std::size_t k);

}  // namespace fixed_width

}  // namespace sos
