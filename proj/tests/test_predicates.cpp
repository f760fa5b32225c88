#include <doctest.h>

#include <algorithm>
#include <array>

#include "oracle.hpp"
#include "sos/predicates.hpp"
#include "test_support.hpp"

using namespace sos;
using oracle::Int;
using oracle::Rational;

namespace {

struct Pts {
  std::vector<std::vector<std::int64_t>> coords;
  std::vector<std::int64_t> idx;

  std::vector<PointRef> refs() const {
    std::vector<PointRef> out;
    for (std::size_t a = 0; a < coords.size(); ++a) out.push_back({idx[a], coords[a]});
    return out;
  }
};

Pts pts(std::vector<std::vector<std::int64_t>> coords, std::vector<std::int64_t> idx = {}) {
  if (idx.empty())
    for (std::size_t a = 0; a < coords.size(); ++a) idx.push_back(static_cast<std::int64_t>(a));
  return {std::move(coords), std::move(idx)};
}

bool pos(const Pts& p, CoordMode mode = CoordMode::cartesian, PredicateOptions opts = {}) {
  const auto r = p.refs();
  return positive(r, mode, opts);
}

bool insph(const Pts& p, PredicateOptions opts = {}) {
  const auto r = p.refs();
  return in_sphere(r, opts);
}

std::vector<Hyperplane> planes(std::vector<std::vector<std::int64_t>> coeffs) {
  std::vector<Hyperplane> out;
  for (std::size_t a = 0; a < coeffs.size(); ++a) out.push_back({static_cast<std::int64_t>(a), coeffs[a]});
  return out;
}

int perm_parity(const std::vector<std::size_t>& p) {
  int inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inv;
  return inv % 2;
}

Rational frac(Int num, Int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

}  // namespace

TEST_CASE("sorting with exchange parity") {
  const std::vector<std::int64_t> a = {0, 1, 2}, b = {1, 0, 2}, c = {2, 0, 1}, dup = {3, 1, 3};
  CHECK(sort_indices(a).sorted == a);
  CHECK_FALSE(sort_indices(a).odd);
  CHECK(sort_indices(b).sorted == a);
  CHECK(sort_indices(b).odd);
  CHECK(sort_indices(c).sorted == a);
  CHECK_FALSE(sort_indices(c).odd);
  CHECK_THROWS(sort_indices(dup));
}

TEST_CASE("smaller") {
  CHECK(smaller({0, 1, 1}, {1, 1, 2}));
  CHECK_FALSE(smaller({2, 1, 7}, {5, 1, 7}));
  CHECK(smaller({0, 1, 7}, {0, 2, 7}));
  CHECK_THROWS(smaller({3, 2, 1}, {3, 2, 1}));

  SUBCASE("strict total order agreeing with the perturbation exponents") {
    std::vector<CoordRef> refs;
    for (std::int64_t i = 0; i < 3; ++i)
      for (int j = 1; j <= 2; ++j)
        for (std::int64_t v = 0; v < 3; ++v) refs.push_back({i, j, v});
    // With delta = 2, eps(i,j) has exponent 2^(2i - j); a larger exponent is a smaller perturbation.
    auto exponent = [](const CoordRef& r) { return 1 << (2 * (r.index + 1) - r.coord); };
    auto same = [](const CoordRef& a, const CoordRef& b) { return a.index == b.index && a.coord == b.coord; };
    for (const auto& a : refs)
      for (const auto& b : refs) {
        if (same(a, b)) continue;
        const bool want = a.value != b.value ? a.value < b.value : exponent(a) > exponent(b);
        REQUIRE(smaller(a, b) == want);
        REQUIRE(smaller(a, b) != smaller(b, a));
        for (const auto& c : refs) {
          if (same(a, c) || same(b, c)) continue;
          if (smaller(a, b) && smaller(b, c)) REQUIRE(smaller(a, c));
        }
      }
  }
}

TEST_CASE("perturbed weight sign") {
  CHECK(sign_perturbed_weight(3, 5) == Sign::positive);
  CHECK(sign_perturbed_weight(3, -5) == Sign::negative);
  CHECK(sign_perturbed_weight(3, 0) == Sign::positive);
}

TEST_CASE("orientation examples") {
  CHECK(pos(pts({{0, 0}, {1, 0}, {0, 1}})));
  CHECK_FALSE(pos(pts({{1, 0}, {0, 0}, {0, 1}}, {1, 0, 2})));
  CHECK(pos(pts({{0, 0, 1}, {1, 0, 1}, {0, -1, -1}}), CoordMode::homogeneous));
  CHECK(pos(pts({{5}, {5}})));
  CHECK_FALSE(pos(pts({{5}, {5}}, {1, 0})));
  CHECK_THROWS(pos(pts({{0, 0}, {1, 0}, {0, 1}}, {0, 1, 0})));
  CHECK_THROWS(pos(pts({{0, 0}, {1, 0, 3}, {0, 1}})));
}

TEST_CASE("homogeneous weight zero") {
  const auto p = pts({{0, 0, 1}, {1, 0, 0}, {0, 1, 1}});
  CHECK_THROWS(pos(p, CoordMode::homogeneous));
  PredicateOptions opts;
  opts.allow_zero_weight = true;
  // det = 0*(0-0) - 0 + 1*(1*1 - 0*0) = 1, weights count as +1.
  CHECK(pos(p, CoordMode::homogeneous, opts));
  CHECK_THROWS(PointSet(2, CoordMode::homogeneous).add({0, 0, 0}));
}

TEST_CASE("orientation alternates under permutations") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 2);
    std::vector<std::vector<std::int64_t>> coords(d + 1, std::vector<std::int64_t>(d));
    for (auto& c : coords)
      for (auto& x : c) x = testing::uniform(rng, 0, 2);
    if (trial % 3 == 0) coords[1] = coords[0];
    std::vector<std::int64_t> idx(d + 1);
    for (std::size_t a = 0; a <= d; ++a) idx[a] = static_cast<std::int64_t>(3 * a + testing::uniform(rng, 0, 2));
    const bool base = pos(pts(coords, idx));
    std::vector<std::size_t> perm(d + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Pts p;
      for (auto a : perm) {
        p.coords.push_back(coords[a]);
        p.idx.push_back(idx[a]);
      }
      REQUIRE(pos(p) == (perm_parity(perm) ? !base : base));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("homogeneous with unit weights matches Cartesian when the determinant is nonzero") {
  testing::Rng rng(32);
  int checked = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial % 3);
    Pts cart, hom;
    for (std::size_t a = 0; a <= d; ++a) {
      std::vector<std::int64_t> c(d);
      for (auto& x : c) x = testing::uniform(rng, -1, 1);
      cart.coords.push_back(c);
      c.push_back(1);
      hom.coords.push_back(c);
      const std::int64_t i = static_cast<std::int64_t>(d - a);  // reversed order exercises the parity
      cart.idx.push_back(i);
      hom.idx.push_back(i);
    }
    std::vector<Int> flat;
    for (const auto& row : hom.coords) flat.insert(flat.end(), row.begin(), row.end());
    if (oracle::cofactor_det(flat, d + 1) == 0) continue;
    REQUIRE(pos(cart) == pos(hom, CoordMode::homogeneous));
    ++checked;
  }
  CHECK(checked > 300);
}

TEST_CASE("perturbed weights can separate the two modes on degenerate input") {
  // The weight column of the homogeneous matrix is perturbed; the ones column is not.
  int differ = 0, degenerate = 0;
  for (std::int64_t code = 0; code < 729; ++code) {
    Pts cart, hom;
    std::int64_t c = code;
    for (std::int64_t a = 0; a < 3; ++a) {
      const std::int64_t x = c % 3, y = (c / 3) % 3;
      c /= 9;
      cart.coords.push_back({x, y});
      hom.coords.push_back({x, y, 1});
      cart.idx.push_back(a);
      hom.idx.push_back(a);
    }
    const auto& h = hom.coords;
    if (oracle::cofactor_det({h[0][0], h[0][1], 1, h[1][0], h[1][1], 1, h[2][0], h[2][1], 1}, 3) != 0) continue;
    ++degenerate;
    if (pos(cart) != pos(hom, CoordMode::homogeneous)) ++differ;
  }
  CHECK(degenerate == 273);
  CHECK(differ > 0);
}

TEST_CASE("positive scaling keeps nondegenerate homogeneous results") {
  testing::Rng rng(33);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Pts p;
    for (int a = 0; a < 3; ++a) {
      std::int64_t w = testing::uniform(rng, -5, 5);
      if (w == 0) w = 1;
      p.coords.push_back({testing::uniform(rng, -20, 20), testing::uniform(rng, -20, 20), w});
      p.idx.push_back(a);
    }
    const auto& c = p.coords;
    const Int det = oracle::cofactor_det({c[0][0], c[0][1], c[0][2], c[1][0], c[1][1], c[1][2], c[2][0], c[2][1], c[2][2]}, 3);
    if (det == 0) continue;
    const bool base = pos(p, CoordMode::homogeneous);
    Pts scaled = p;
    const std::int64_t f = testing::uniform(rng, 2, 9);
    for (auto& x : scaled.coords[static_cast<std::size_t>(trial % 3)]) x *= f;
    REQUIRE(pos(scaled, CoordMode::homogeneous) == base);
    ++checked;
  }
  CHECK(checked > 400);
}

TEST_CASE("half-line crossing examples") {
  const auto p = pts({{0, 0}, {2, -1}, {2, 1}});
  const auto r = p.refs();
  CHECK(intersect_half_line(r[0], r[1], r[2]));
  CHECK(intersect_half_line(r[0], r[2], r[1]));
  const auto q = pts({{0, 0}, {2, 1}, {2, 3}});
  const auto s = q.refs();
  CHECK_FALSE(intersect_half_line(s[0], s[1], s[2]));
  const auto t = pts({{0, 0}, {2, 0}, {3, 1}});
  const auto u = t.refs();
  CHECK(intersect_half_line(u[0], u[1], u[2]));
  CHECK_THROWS(intersect_half_line(u[0], u[1], u[1]));
}

TEST_CASE("half-line crossing matches exact geometry away from degeneracies") {
  testing::Rng rng(34);
  int checked = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    std::int64_t c[3][2];
    for (auto& pt : c)
      for (auto& x : pt) x = testing::uniform(rng, -10, 10);
    if (c[1][1] == c[0][1] || c[2][1] == c[0][1]) continue;
    if (oracle::orient2d(c[0], c[1], c[2]) == 0) continue;
    const PointRef a{0, c[0]}, b{1, c[1]}, d{2, c[2]};
    REQUIRE(intersect_half_line(a, b, d) == oracle::ray_crosses(c[0], c[1], c[2]));
    ++checked;
  }
  CHECK(checked > 2500);
}

TEST_CASE("hyperplane side examples") {
  CHECK_FALSE(on_positive_side(planes({{1, 0, 0}, {0, 1, 0}, {1, 1, -1}})));
  CHECK(on_positive_side(planes({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}})));
  CHECK_FALSE(on_positive_side(planes({{1, 0, 0}, {0, 1, 0}, {1, -1, 0}})));
  CHECK_THROWS(on_positive_side(planes({{0, 0, 1}, {0, 1, 0}, {1, 1, 1}})));
  auto dup = planes({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}});
  dup[2].index = 0;
  CHECK_THROWS(on_positive_side(dup));
}

TEST_CASE("hyperplane side matches exact geometry in the plane") {
  testing::Rng rng(35);
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<std::vector<std::int64_t>> h(3, std::vector<std::int64_t>(3));
    for (auto& row : h)
      for (auto& x : row) x = testing::uniform(rng, -6, 6);
    const Int det2 = Int(h[0][0]) * h[1][1] - Int(h[0][1]) * h[1][0];
    if (det2 == 0 || (h[2][0] == 0 && h[2][1] == 0)) continue;
    // a x + b y + c = 0 for the first two; Cramer on -c.
    const Rational x = frac(Int(-h[0][2] * h[1][1] + h[0][1] * h[1][2]), det2);
    const Rational y = frac(Int(-h[0][0] * h[1][2] + h[0][2] * h[1][0]), det2);
    const Rational value = Rational(h[2][0]) * x + Rational(h[2][1]) * y + Rational(h[2][2]);
    if (value == 0) continue;
    REQUIRE(on_positive_side(planes(h)) == (value > 0));
    ++checked;
  }
  CHECK(checked > 1500);
}

TEST_CASE("above examples") {
  CHECK(above(planes({{-1, 0}, {1, 0}, {0, 1}})));
  CHECK_FALSE(above(planes({{-1, 0}, {1, 0}, {0, -1}})));
  CHECK(above(planes({{0, 0}, {0, 0}, {0, 1}})));
  CHECK_THROWS(above(planes({{0, 0}, {0, 0, 1}, {0, 1}})));
}

TEST_CASE("above matches exact geometry in the plane") {
  testing::Rng rng(36);
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<std::vector<std::int64_t>> h(3, std::vector<std::int64_t>(2));
    for (auto& row : h)
      for (auto& x : row) x = testing::uniform(rng, -6, 6);
    // y = -a x - b; first two lines meet where (a1 - a0) x = b0 - b1.
    if (h[0][0] == h[1][0]) continue;
    const Rational x = frac(Int(h[0][1] - h[1][1]), Int(h[1][0] - h[0][0]));
    const Rational y = -Rational(h[0][0]) * x - Rational(h[0][1]);
    const Rational below = -Rational(h[2][0]) * x - Rational(h[2][1]);
    if (y == below) continue;
    REQUIRE(above(planes(h)) == (y > below));
    ++checked;
  }
  CHECK(checked > 2000);
}

TEST_CASE("in-sphere examples") {
  CHECK(insph(pts({{0, 0}, {2, 0}, {0, 2}, {1, 1}})));
  CHECK_FALSE(insph(pts({{0, 0}, {2, 0}, {0, 2}, {3, 3}})));
  CHECK_FALSE(insph(pts({{0, 0}, {2, 0}, {0, 2}, {2, 2}})));
  CHECK(insph(pts({{0, 0}, {0, 2}, {2, 0}, {1, 1}})));
  CHECK_THROWS(insph(pts({{0, 0}, {2, 0}, {0, 2}, {1, 1}}, {0, 1, 2, 2})));
  // One dimension: is 1 strictly between 0 and 2?
  CHECK(insph(pts({{0}, {2}, {1}})));
  CHECK_FALSE(insph(pts({{0}, {2}, {3}})));
}

TEST_CASE("in-sphere matches the exact circle test") {
  testing::Rng rng(37);
  int checked = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const std::int64_t range = trial % 2 ? 20 : (std::int64_t(1) << 40);
    std::int64_t c[4][2];
    for (auto& pt : c)
      for (auto& x : pt) x = testing::uniform(rng, -range, range);
    if (oracle::orient2d(c[0], c[1], c[2]) == 0) continue;
    const int side = oracle::circle_side(c[0], c[1], c[2], c[3]);
    if (side == 0) continue;
    std::array<std::int64_t, 4> idx = {0, 1, 2, 3};
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::array<PointRef, 4> r = {PointRef{idx[0], c[0]}, PointRef{idx[1], c[1]}, PointRef{idx[2], c[2]},
                                       PointRef{idx[3], c[3]}};
    REQUIRE(in_sphere(r) == (side > 0));
    ++checked;
  }
  CHECK(checked > 3500);
}

TEST_CASE("coordinates whose lift exceeds 64 bits") {
  const std::int64_t big = std::int64_t(1) << 40;
  CHECK(insph(pts({{-big, 0}, {big, 0}, {0, big}, {0, 0}})));
  CHECK_FALSE(insph(pts({{-big, 0}, {big, 0}, {0, big}, {0, -big - 1}})));
  // Cocircular: decided by the perturbation, identically in both arithmetic modes.
  PredicateOptions exact;
  exact.arithmetic = Arithmetic::exact;
  const auto p = pts({{-big, 0}, {big, 0}, {0, big}, {0, -big}});
  CHECK(insph(p) == insph(p, exact));
}

TEST_CASE("depth recording") {
  DepthRecorder rec;
  PredicateOptions opts;
  opts.recorder = &rec;
  pos(pts({{0, 0}, {0, 0}, {0, 0}}), CoordMode::cartesian, opts);
  pos(pts({{0, 0}, {1, 0}, {0, 1}}), CoordMode::cartesian, opts);
  insph(pts({{0, 0}, {2, 0}, {0, 2}, {2, 2}}), opts);
  const auto report = rec.report();
  CHECK(report.total_calls == 3);
  CHECK(report.max_depth == 4);
  CHECK(report.histogram.at(0) == 1);
  CHECK(report.histogram.at(1) == 1);
}

TEST_CASE("planar orientation shortcut agrees with the general evaluator") {
  testing::Rng rng(38);
  const std::int64_t huge = std::numeric_limits<std::int64_t>::max();
  for (int trial = 0; trial < 3000; ++trial) {
    const std::int64_t range = trial % 3 == 0 ? huge : (trial % 3 == 1 ? (std::int64_t(1) << 61) + 5 : 3);
    std::int64_t c[3][2];
    for (auto& p : c)
      for (auto& x : p) x = testing::uniform(rng, -range, range);
    if (trial % 5 == 0) {
      c[2][0] = c[0][0];
      c[2][1] = c[0][1];
    }
    std::array<std::int64_t, 3> idx = {0, 1, 2};
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::array<PointRef, 3> r = {PointRef{idx[0], c[0]}, PointRef{idx[1], c[1]}, PointRef{idx[2], c[2]}};
    // Rows by increasing index, then the exchange parity.
    std::array<std::size_t, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return idx[a] < idx[b]; });
    std::vector<std::size_t> perm(order.begin(), order.end());
    std::vector<BigInt> rows;
    for (auto o : order) rows.insert(rows.end(), {BigInt(c[o][0]), BigInt(c[o][1]), BigInt(1)});
    SosMatrix m{.kind = MatrixKind::lambda, .size = 3, .entries = rows, .row_indices = {0, 1, 2}};
    SosSignResult want = sign_det_sos(m, Arithmetic::exact);
    if (perm_parity(perm)) want.sign = -want.sign;
    for (auto a : {Arithmetic::automatic, Arithmetic::exact})
      REQUIRE(detail::orientation(r, CoordMode::cartesian, a) == want);
  }
}

TEST_CASE("in-sphere shortcut agrees with exact evaluation") {
  testing::Rng rng(39);
  for (int trial = 0; trial < 4000; ++trial) {
    const std::int64_t range = trial % 4 == 0 ? (std::int64_t(1) << 28) + 3 : (trial % 4 == 1 ? 1000 : 2);
    std::int64_t c[4][2];
    for (auto& p : c)
      for (auto& x : p) x = testing::uniform(rng, -range, range);
    std::array<std::int64_t, 4> idx = {0, 1, 2, 3};
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::array<PointRef, 4> r = {PointRef{idx[0], c[0]}, PointRef{idx[1], c[1]}, PointRef{idx[2], c[2]},
                                       PointRef{idx[3], c[3]}};
    DepthRecorder fast, slow;
    const bool a = in_sphere(r, {.recorder = &fast});
    const bool b = in_sphere(r, {.recorder = &slow, .arithmetic = Arithmetic::exact});
    REQUIRE(a == b);
    REQUIRE(fast.max_depth() == slow.max_depth());
  }
}
