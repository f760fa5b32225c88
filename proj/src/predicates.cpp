#include "sos/predicates.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <string>

namespace sos {

namespace {

using Perm = std::array<std::size_t, max_sos_size>;

// Sorts positions 0..n-1 by index; returns the exchange parity.
bool sort_rows(std::size_t n, const std::int64_t* idx, Perm& perm) {
  for (std::size_t a = 0; a < n; ++a) perm[a] = a;
  bool odd = false;
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = a; b > 0; --b) {
      const std::int64_t lo = idx[perm[b - 1]];
      const std::int64_t hi = idx[perm[b]];
      if (lo == hi) throw std::invalid_argument("duplicate index " + std::to_string(lo));
      if (lo < hi) break;
      std::swap(perm[b - 1], perm[b]);
      odd = !odd;
    }
  }
  return odd;
}

void record(const PredicateOptions& opts, const char* name, int depth) {
  if (opts.recorder) opts.recorder->record(name, depth);
}

// Evaluates kind/size over rows built by fill(row_slot, source_position, out_row),
// taking the rows in increasing index order and applying the exchange parity.
template <class Fill>
SosSignResult evaluate_sorted(MatrixKind kind, std::size_t size, const std::int64_t* idx, Fill fill,
                              Arithmetic arithmetic) {
  Perm perm;
  const bool odd = sort_rows(size, idx, perm);
  std::array<std::int64_t, max_sos_size * max_sos_size> entries;
  std::array<std::int64_t, max_sos_size> sorted;
  for (std::size_t r = 0; r < size; ++r) {
    sorted[r] = idx[perm[r]];
    fill(perm[r], &entries[r * size]);
  }
  SosSignResult res = sign_det_sos(kind, size, std::span<const std::int64_t>(entries.data(), size * size),
                                   std::span<const std::int64_t>(sorted.data(), size), arithmetic);
  if (odd) res.sign = -res.sign;
  return res;
}

// Unperturbed orientation of three planar points in the given order, from
// row differences. Zero means the perturbation has to decide.
Sign planar_raw_sign(std::span<const PointRef> p, Arithmetic arithmetic) {
  const auto& a = p[0].coords;
  const auto& b = p[1].coords;
  const auto& c = p[2].coords;
  constexpr std::int64_t limit = std::int64_t(1) << 61;
  const bool narrow = std::all_of(p.begin(), p.end(), [](const PointRef& r) {
    return r.coords[0] > -limit && r.coords[0] < limit && r.coords[1] > -limit && r.coords[1] < limit;
  });
  if (arithmetic == Arithmetic::automatic && narrow) {
    __extension__ using wide = __int128;
    const wide det = wide(b[0] - a[0]) * (c[1] - a[1]) - wide(b[1] - a[1]) * (c[0] - a[0]);
    return sign_of(det);
  }
  const BigInt det = (BigInt(b[0]) - a[0]) * (BigInt(c[1]) - a[1]) - (BigInt(b[1]) - a[1]) * (BigInt(c[0]) - a[0]);
  return sign_of(det);
}

void check_count(std::size_t n, std::size_t lo, const char* what) {
  if (n < lo || n > max_sos_size) throw std::invalid_argument(std::string(what) + ": unsupported number of objects");
}

}  // namespace

PointSet::PointSet(std::size_t dim, CoordMode mode)
    : dim_(dim), arity_(mode == CoordMode::homogeneous ? dim + 1 : dim), mode_(mode) {
  if (dim == 0) throw std::invalid_argument("PointSet: dimension must be positive");
}

std::int64_t PointSet::add(std::span<const std::int64_t> coords) {
  if (coords.size() != arity_)
    throw std::invalid_argument("PointSet: expected " + std::to_string(arity_) + " coordinates");
  if (mode_ == CoordMode::homogeneous) {
    bool all_zero = true;
    for (auto c : coords) all_zero = all_zero && c == 0;
    if (all_zero) throw std::invalid_argument("PointSet: homogeneous point with all coordinates zero");
  }
  coords_.insert(coords_.end(), coords.begin(), coords.end());
  return static_cast<std::int64_t>(size()) - 1;
}

PointRef PointSet::operator[](std::size_t i) const {
  if (i >= size()) throw std::out_of_range("PointSet: index out of range");
  return {static_cast<std::int64_t>(i), std::span<const std::int64_t>(coords_.data() + i * arity_, arity_)};
}

std::vector<PointRef> PointSet::refs(std::span<const std::int64_t> indices) const {
  std::vector<PointRef> out;
  out.reserve(indices.size());
  for (auto i : indices) {
    if (i < 0) throw std::out_of_range("PointSet: negative index");
    out.push_back((*this)[static_cast<std::size_t>(i)]);
  }
  return out;
}

SortResult sort_indices(std::span<const std::int64_t> indices) {
  SortResult res{{indices.begin(), indices.end()}, false};
  auto& s = res.sorted;
  for (std::size_t a = 1; a < s.size(); ++a) {
    for (std::size_t b = a; b > 0; --b) {
      if (s[b - 1] == s[b]) throw std::invalid_argument("sort_indices: duplicate index " + std::to_string(s[b]));
      if (s[b - 1] < s[b]) break;
      std::swap(s[b - 1], s[b]);
      res.odd = !res.odd;
    }
  }
  return res;
}

bool smaller(const CoordRef& a, const CoordRef& b) {
  if (a.index == b.index && a.coord == b.coord) throw std::invalid_argument("smaller: same coordinate");
  if (a.value != b.value) return a.value < b.value;
  if (a.index != b.index) return a.index > b.index;
  return a.coord < b.coord;
}

Sign sign_perturbed_weight(std::int64_t /*index*/, std::int64_t w) { return w < 0 ? Sign::negative : Sign::positive; }

namespace detail {

SosSignResult orientation(std::span<const PointRef> points, CoordMode mode, Arithmetic arithmetic) {
  const std::size_t n = points.size();
  check_count(n, 2, "orientation");
  const std::size_t d = n - 1;
  const std::size_t arity = mode == CoordMode::homogeneous ? d + 1 : d;
  std::array<std::int64_t, max_sos_size> idx{};
  for (std::size_t r = 0; r < n; ++r) {
    if (points[r].coords.size() != arity)
      throw std::invalid_argument("orientation: point " + std::to_string(points[r].index) + " has wrong arity");
    idx[r] = points[r].index;
  }
  if (mode == CoordMode::cartesian && d == 2) {
    if (idx[0] == idx[1] || idx[0] == idx[2] || idx[1] == idx[2])
      throw std::invalid_argument("orientation: duplicate index");
    // Depth 0 needs no matrix; the row order already carries the parity.
    const Sign raw = planar_raw_sign(points, arithmetic);
    if (raw != Sign::zero) return {raw, 0};
  }
  if (mode == CoordMode::homogeneous) {
    return evaluate_sorted(
        MatrixKind::delta, n, idx.data(),
        [&](std::size_t src, std::int64_t* row) {
          for (std::size_t c = 0; c <= d; ++c) row[c] = points[src].coords[c];
        },
        arithmetic);
  }
  return evaluate_sorted(
      MatrixKind::lambda, n, idx.data(),
      [&](std::size_t src, std::int64_t* row) {
        for (std::size_t c = 0; c < d; ++c) row[c] = points[src].coords[c];
        row[d] = 1;
      },
      arithmetic);
}

}  // namespace detail

bool positive(std::span<const PointRef> points, CoordMode mode, const PredicateOptions& opts) {
  Sign weights = Sign::positive;
  if (mode == CoordMode::homogeneous) {
    for (const auto& p : points) {
      if (p.coords.empty()) throw std::invalid_argument("positive: empty point");
      const std::int64_t w = p.coords.back();
      if (w == 0 && !opts.allow_zero_weight)
        throw std::invalid_argument("positive: point " + std::to_string(p.index) + " has weight 0");
      weights = weights * sign_perturbed_weight(p.index, w);
    }
  }
  const SosSignResult res = detail::orientation(points, mode, opts.arithmetic);
  record(opts, "positive", res.depth);
  return res.sign == weights;
}

bool intersect_half_line(const PointRef& vi, const PointRef& vj, const PointRef& vk, const PredicateOptions& opts) {
  for (const auto* p : {&vi, &vj, &vk})
    if (p->coords.size() != 2) throw std::invalid_argument("intersect_half_line: planar points required");
  if (vi.index == vj.index || vi.index == vk.index || vj.index == vk.index)
    throw std::invalid_argument("intersect_half_line: duplicate index");

  auto y = [](const PointRef& p) { return CoordRef{p.index, 2, p.coords[1]}; };
  const PointRef* lo = &vj;
  const PointRef* hi = &vk;
  int depth = vj.coords[1] == vk.coords[1] ? 1 : 0;
  if (!smaller(y(*lo), y(*hi))) std::swap(lo, hi);

  bool result = false;
  const bool above_lo = smaller(y(*lo), y(vi));
  if (vi.coords[1] == lo->coords[1]) depth = std::max(depth, 1);
  bool in_range = above_lo;
  if (in_range) {
    in_range = smaller(y(vi), y(*hi));
    if (vi.coords[1] == hi->coords[1]) depth = std::max(depth, 1);
  }
  if (in_range) {
    const std::array<PointRef, 3> tri = {vi, *lo, *hi};
    const SosSignResult res = detail::orientation(tri, CoordMode::cartesian, opts.arithmetic);
    depth = std::max(depth, res.depth);
    result = res.sign == Sign::positive;
  }
  record(opts, "intersect_half_line", depth);
  return result;
}

bool on_positive_side(std::span<const Hyperplane> planes, const PredicateOptions& opts) {
  const std::size_t n = planes.size();
  check_count(n, 2, "on_positive_side");
  const std::size_t d = n - 1;
  std::array<std::int64_t, max_sos_size> idx{};
  for (std::size_t r = 0; r < n; ++r) {
    const auto& a = planes[r].coeffs;
    if (a.size() != d + 1)
      throw std::invalid_argument("on_positive_side: hyperplane " + std::to_string(planes[r].index) +
                                  " needs " + std::to_string(d + 1) + " coefficients");
    bool zero_normal = true;
    for (std::size_t c = 0; c < d; ++c) zero_normal = zero_normal && a[c] == 0;
    if (zero_normal) throw std::invalid_argument("on_positive_side: zero normal vector");
    idx[r] = planes[r].index;
  }
  // Distinctness over all d+1 planes, including the last one.
  Perm perm;
  sort_rows(n, idx.data(), perm);

  const SosSignResult d1 = evaluate_sorted(
      MatrixKind::delta, d, idx.data(),
      [&](std::size_t src, std::int64_t* row) {
        for (std::size_t c = 0; c < d; ++c) row[c] = planes[src].coeffs[c];
      },
      opts.arithmetic);
  const SosSignResult d2 = evaluate_sorted(
      MatrixKind::delta, n, idx.data(),
      [&](std::size_t src, std::int64_t* row) {
        for (std::size_t c = 0; c <= d; ++c) row[c] = planes[src].coeffs[c];
      },
      opts.arithmetic);
  record(opts, "on_positive_side", std::max(d1.depth, d2.depth));
  return d1.sign == d2.sign;
}

bool above(std::span<const Hyperplane> planes, const PredicateOptions& opts) {
  const std::size_t n = planes.size();
  check_count(n, 2, "above");
  const std::size_t d = n - 1;
  std::array<std::int64_t, max_sos_size> idx{};
  for (std::size_t r = 0; r < n; ++r) {
    if (planes[r].coeffs.size() != d)
      throw std::invalid_argument("above: hyperplane " + std::to_string(planes[r].index) + " needs " +
                                  std::to_string(d) + " coefficients");
    idx[r] = planes[r].index;
  }
  Perm perm;
  sort_rows(n, idx.data(), perm);

  const SosSignResult d1 = evaluate_sorted(
      MatrixKind::lambda, d, idx.data(),
      [&](std::size_t src, std::int64_t* row) {
        for (std::size_t c = 0; c + 1 < d; ++c) row[c] = planes[src].coeffs[c];
        row[d - 1] = 1;
      },
      opts.arithmetic);
  const SosSignResult d2 = evaluate_sorted(
      MatrixKind::lambda, n, idx.data(),
      [&](std::size_t src, std::int64_t* row) {
        for (std::size_t c = 0; c < d; ++c) row[c] = planes[src].coeffs[c];
        row[d] = 1;
      },
      opts.arithmetic);
  record(opts, "above", std::max(d1.depth, d2.depth));
  return d1.sign != d2.sign;
}

bool in_sphere(std::span<const PointRef> points, const PredicateOptions& opts) {
  __extension__ using wide = __int128;
  const std::size_t n = points.size();
  if (n < 3 || n > max_sos_size) throw std::invalid_argument("in_sphere: unsupported number of points");
  const std::size_t d = n - 2;
  std::array<std::int64_t, max_sos_size> idx{};
  std::array<std::int64_t, max_sos_size> lift{};
  bool lift_fits = true;
  bool planar_narrow = d == 2;
  constexpr std::int64_t narrow_limit = std::int64_t(1) << 28;
  for (std::size_t r = 0; r < n; ++r) {
    const auto& coords = points[r].coords;
    if (coords.size() != d)
      throw std::invalid_argument("in_sphere: point " + std::to_string(points[r].index) + " has wrong arity");
    idx[r] = points[r].index;
    wide s = 0;
    for (auto c : coords) {
      planar_narrow = planar_narrow && c > -narrow_limit && c < narrow_limit;
      // |c| < 2^32 keeps every square below 2^64, so at most 8 of them fit in 128 bits.
      if (c <= -(std::int64_t(1) << 32) || c >= (std::int64_t(1) << 32)) lift_fits = false;
      else s += wide(c) * c;
    }
    lift_fits = lift_fits && s <= std::numeric_limits<std::int64_t>::max();
    if (lift_fits) lift[r] = static_cast<std::int64_t>(s);
  }
  Perm perm;
  const bool odd = sort_rows(n, idx.data(), perm);

  const SosSignResult d1 = detail::orientation(points.first(d + 1), CoordMode::cartesian, opts.arithmetic);

  if (planar_narrow && opts.arithmetic == Arithmetic::automatic) {
    // Translating by the last point turns the 4x4 lifted determinant into a
    // 3x3 one with the same value; entries stay below 2^59.
    const auto& q = points[3].coords;
    wide m[3][3];
    for (std::size_t r = 0; r < 3; ++r) {
      const wide dx = points[r].coords[0] - q[0], dy = points[r].coords[1] - q[1];
      m[r][0] = dx;
      m[r][1] = dy;
      m[r][2] = dx * dx + dy * dy;
    }
    const wide det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (det != 0) {
      record(opts, "in_sphere", d1.depth);
      return d1.sign == sign_of(det);
    }
  }

  SosSignResult d2;
  if (lift_fits) {
    d2 = evaluate_sorted(
        MatrixKind::lambda, n, idx.data(),
        [&](std::size_t src, std::int64_t* row) {
          for (std::size_t c = 0; c < d; ++c) row[c] = points[src].coords[c];
          row[d] = lift[src];
          row[d + 1] = 1;
        },
        opts.arithmetic);
  } else {
    SosMatrix m{.kind = MatrixKind::lambda, .size = n};
    for (std::size_t r = 0; r < n; ++r) {
      const auto& p = points[perm[r]];
      BigInt s = 0;
      for (auto c : p.coords) s += BigInt(c) * c;
      for (std::size_t c = 0; c < d; ++c) m.entries.emplace_back(p.coords[c]);
      m.entries.push_back(std::move(s));
      m.entries.emplace_back(1);
      m.row_indices.push_back(p.index);
    }
    d2 = sign_det_sos(m, opts.arithmetic);
    if (odd) d2.sign = -d2.sign;
  }
  record(opts, "in_sphere", std::max(d1.depth, d2.depth));
  return d1.sign == d2.sign;
}

}  // namespace sos
