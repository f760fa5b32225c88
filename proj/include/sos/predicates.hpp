#pragma once

// Geometric predicates evaluated on the perturbed input. None of them can
// return a degenerate answer: every call resolves to true or false.
//
// Objects are identified by their index; the index decides how strongly an
// object is perturbed (lower index, larger perturbation), so two objects with
// equal coordinates but different indices are still distinct.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "sos/degeneracy.hpp"
#include "sos/sos_sign.hpp"

namespace sos {

enum class CoordMode { cartesian, homogeneous };

struct PointRef {
  std::int64_t index = 0;
  std::span<const std::int64_t> coords;
};

/// Dense indexed point storage: the i-th added point has index i.
/// Homogeneous points carry dim+1 coordinates, the last being the weight.
class PointSet {
 public:
  explicit PointSet(std::size_t dim, CoordMode mode = CoordMode::cartesian);

  std::int64_t add(std::span<const std::int64_t> coords);
  std::int64_t add(std::initializer_list<std::int64_t> coords) {
    return add(std::span<const std::int64_t>(coords.begin(), coords.size()));
  }

  std::size_t size() const { return arity_ == 0 ? 0 : coords_.size() / arity_; }
  std::size_t dim() const { return dim_; }
  std::size_t arity() const { return arity_; }
  CoordMode mode() const { return mode_; }

  PointRef operator[](std::size_t i) const;
  std::vector<PointRef> refs(std::span<const std::int64_t> indices) const;

 private:
  std::size_t dim_;
  std::size_t arity_;
  CoordMode mode_;
  std::vector<std::int64_t> coords_;
};

/// Hyperplane with an index. General form: d+1 coefficients
/// (a_1..a_d; a_{d+1}) for <x, a> + a_{d+1} = 0. Nonvertical form: d
/// coefficients (a_1..a_{d-1}, a_d) for a_1 x_1 + .. + a_{d-1} x_{d-1} + x_d + a_d = 0.
struct Hyperplane {
  std::int64_t index = 0;
  std::vector<std::int64_t> coeffs;
};

struct SortResult {
  std::vector<std::int64_t> sorted;
  bool odd = false;  // parity of the number of exchanges
};

/// Insertion sort with exchange counting. Throws on repeated indices.
SortResult sort_indices(std::span<const std::int64_t> indices);

/// pi(index, coord) with its value.
struct CoordRef {
  std::int64_t index = 0;
  int coord = 1;
  std::int64_t value = 0;
};

/// True iff the perturbed value of a is below the perturbed value of b.
/// Throws if a and b name the same coordinate.
bool smaller(const CoordRef& a, const CoordRef& b);

/// Sign of a perturbed homogeneous weight: sign(w), or +1 for w = 0.
Sign sign_perturbed_weight(std::int64_t index, std::int64_t w);

struct PredicateOptions {
  DepthRecorder* recorder = nullptr;
  Arithmetic arithmetic = Arithmetic::automatic;
  /// Treat weight 0 as the perturbed weight eps(i, d+1) > 0 instead of rejecting it.
  bool allow_zero_weight = false;
};

/// Orientation of the perturbed sequence of d+1 points in E^d.
bool positive(std::span<const PointRef> points, CoordMode mode, const PredicateOptions& opts = {});

/// Whether the perturbed edge (vj, vk) crosses the rightward horizontal ray
/// starting at the perturbed vi. Planar Cartesian points only.
bool intersect_half_line(const PointRef& vi, const PointRef& vj, const PointRef& vk,
                         const PredicateOptions& opts = {});

/// Whether the intersection of the first d general-form hyperplanes lies on
/// the positive side of the last one.
bool on_positive_side(std::span<const Hyperplane> planes, const PredicateOptions& opts = {});

/// Whether the intersection of the first d nonvertical hyperplanes lies
/// above the last one.
bool above(std::span<const Hyperplane> planes, const PredicateOptions& opts = {});

/// Whether the last of d+2 Cartesian points lies inside the sphere through
/// the first d+1, with the lifted coordinate perturbed independently.
bool in_sphere(std::span<const PointRef> points, const PredicateOptions& opts = {});

namespace detail {
/// Orientation sign of the perturbed sequence (parity already applied) plus
/// the depth reached. Cartesian or homogeneous, no weight handling.
SosSignResult orientation(std::span<const PointRef> points, CoordMode mode, Arithmetic arithmetic);
}  // namespace detail

}  // namespace sos
