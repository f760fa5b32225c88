#include "sos/geom.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace sos {

namespace {

PointRef ref(const PointSet& ps, std::int64_t i) { return ps[static_cast<std::size_t>(i)]; }

bool left_turn(const PointSet& ps, std::int64_t a, std::int64_t b, std::int64_t c, const PredicateOptions& opts) {
  const std::array<PointRef, 3> pts = {ref(ps, a), ref(ps, b), ref(ps, c)};
  return positive(pts, CoordMode::cartesian, opts);
}

Sign raw_orientation(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                     std::span<const std::int64_t> c) {
  const BigInt abx = BigInt(b[0]) - a[0], aby = BigInt(b[1]) - a[1];
  const BigInt acx = BigInt(c[0]) - a[0], acy = BigInt(c[1]) - a[1];
  return sign_of(BigInt(abx * acy - aby * acx));
}

void check_planar(const PointSet& ps, const char* what) {
  if (ps.dim() != 2 || ps.mode() != CoordMode::cartesian)
    throw std::invalid_argument(std::string(what) + ": planar Cartesian points required");
  if (ps.size() < 3) throw std::invalid_argument(std::string(what) + ": at least 3 points required");
}

}  // namespace

void Polygon::validate() const {
  if (vertices.size() < 3) throw std::invalid_argument("polygon: at least 3 vertices required");
}

const char* to_string(PipClass c) {
  switch (c) {
    case PipClass::inside: return "inside";
    case PipClass::outside: return "outside";
    case PipClass::boundary: return "boundary";
  }
  return "?";
}

bool on_boundary(const Point2& p, const Polygon& poly) {
  poly.validate();
  const std::size_t n = poly.vertices.size();
  for (std::size_t e = 0; e < n; ++e) {
    const Point2& a = poly.vertices[e];
    const Point2& b = poly.vertices[(e + 1) % n];
    if (raw_orientation(a, b, p) != Sign::zero) continue;
    if (p[0] >= std::min(a[0], b[0]) && p[0] <= std::max(a[0], b[0]) && p[1] >= std::min(a[1], b[1]) &&
        p[1] <= std::max(a[1], b[1]))
      return true;
  }
  return false;
}

PipResult point_in_polygon(const Point2& p, const Polygon& poly, bool boundary_pretest, const PredicateOptions& opts) {
  poly.validate();
  PipResult res;
  if (boundary_pretest && on_boundary(p, poly)) {
    res.classification = PipClass::boundary;
    return res;
  }
  DepthRecorder local;
  PredicateOptions inner = opts;
  inner.recorder = &local;
  const std::size_t n = poly.vertices.size();
  const PointRef q{0, p};
  for (std::size_t e = 0; e < n; ++e) {
    const std::size_t f = (e + 1) % n;
    const PointRef vj{static_cast<std::int64_t>(e + 1), poly.vertices[e]};
    const PointRef vk{static_cast<std::int64_t>(f + 1), poly.vertices[f]};
    if (intersect_half_line(q, vj, vk, inner)) ++res.crossings;
  }
  res.max_depth = std::max(0, local.max_depth());
  if (opts.recorder) opts.recorder->merge(local);
  res.classification = res.crossings % 2 == 1 ? PipClass::inside : PipClass::outside;
  return res;
}

std::vector<std::int64_t> convex_hull_2d(const PointSet& ps, const HullOptions& hull, const PredicateOptions& opts) {
  check_planar(ps, "convex_hull_2d");
  const auto n = static_cast<std::int64_t>(ps.size());

  std::vector<std::int64_t> cycle = {0, 1, 2};
  if (!left_turn(ps, 0, 1, 2, opts)) std::swap(cycle[1], cycle[2]);

  for (std::int64_t q = 3; q < n; ++q) {
    const std::size_t h = cycle.size();
    std::vector<char> visible(h);
    bool any = false;
    for (std::size_t e = 0; e < h; ++e) {
      visible[e] = !left_turn(ps, cycle[e], cycle[(e + 1) % h], q, opts);
      any = any || visible[e];
    }
    if (!any) continue;
    // The visible edges form one contiguous run; find where it starts.
    std::size_t first = 0;
    while (!(visible[first] && !visible[(first + h - 1) % h])) ++first;
    std::size_t last = first;
    while (visible[(last + 1) % h]) last = (last + 1) % h;
    // Keep cycle[last+1] .. cycle[first] and put q after cycle[first].
    std::vector<std::int64_t> next;
    for (std::size_t e = (last + 1) % h;; e = (e + 1) % h) {
      next.push_back(cycle[e]);
      if (e == first) break;
    }
    next.push_back(q);
    cycle = std::move(next);
  }

  if (hull.merge_collinear) {
    bool changed = true;
    while (changed && cycle.size() > 2) {
      changed = false;
      const std::size_t h = cycle.size();
      for (std::size_t b = 0; b < h; ++b) {
        const auto pa = ref(ps, cycle[(b + h - 1) % h]).coords;
        const auto pb = ref(ps, cycle[b]).coords;
        const auto pc = ref(ps, cycle[(b + 1) % h]).coords;
        if (raw_orientation(pa, pb, pc) == Sign::zero) {
          cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(b));
          changed = true;
          break;
        }
      }
    }
  }
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

namespace {

class Mesh {
 public:
  Mesh(const PointSet& ps, const PredicateOptions& opts) : ps_(ps), opts_(opts) {}

  void insert(std::int64_t q) {
    if (tris_.empty()) {
      pending_.push_back(q);
      if (pending_.size() == 3) {
        auto [a, b, c] = std::array{pending_[0], pending_[1], pending_[2]};
        if (!left_turn(ps_, a, b, c, opts_)) std::swap(b, c);
        add({a, b, c});
      }
      return;
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> stack;
    if (const int t = locate(q); t >= 0) {
      const Triangle abc = tris_[t];
      if (!in_circle(abc, q)) {
        redundant_.push_back(q);
        return;
      }
      remove(t);
      for (int e = 0; e < 3; ++e) {
        add({abc[e], abc[(e + 1) % 3], q});
        stack.emplace_back(abc[e], abc[(e + 1) % 3]);
      }
    } else {
      // Outside the hull: attach q to every boundary edge it sees.
      std::vector<std::pair<std::int64_t, std::int64_t>> seen;
      for (const auto& [key, t] : edges_) {
        const auto a = static_cast<std::int64_t>(key >> 32);
        const auto b = static_cast<std::int64_t>(key & 0xffffffffu);
        if (edges_.count(edge_key(b, a))) continue;
        if (!left_turn(ps_, a, b, q, opts_)) seen.emplace_back(a, b);
      }
      std::sort(seen.begin(), seen.end());
      for (const auto& [a, b] : seen) {
        add({b, a, q});
        stack.emplace_back(b, a);
      }
    }
    legalize(q, stack);
  }

  Triangulation result() const {
    Triangulation out;
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      if (!alive_[t]) continue;
      Triangle tri = tris_[t];
      std::rotate(tri.begin(), std::min_element(tri.begin(), tri.end()), tri.end());
      out.triangles.push_back(tri);
      out.vertices.insert(out.vertices.end(), tri.begin(), tri.end());
    }
    std::sort(out.triangles.begin(), out.triangles.end());
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
    out.redundant = redundant_;
    std::sort(out.redundant.begin(), out.redundant.end());
    return out;
  }

 private:
  static std::uint64_t edge_key(std::int64_t a, std::int64_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
  }

  bool in_circle(const Triangle& abc, std::int64_t q) const {
    const std::array<PointRef, 4> pts = {ref(ps_, abc[0]), ref(ps_, abc[1]), ref(ps_, abc[2]), ref(ps_, q)};
    return in_sphere(pts, opts_);
  }

  int find(std::int64_t a, std::int64_t b) const {
    const auto it = edges_.find(edge_key(a, b));
    return it == edges_.end() ? -1 : it->second;
  }

  void add(const Triangle& t) {
    const int id = static_cast<int>(tris_.size());
    tris_.push_back(t);
    alive_.push_back(1);
    for (int e = 0; e < 3; ++e) edges_[edge_key(t[e], t[(e + 1) % 3])] = id;
  }

  void remove(int id) {
    alive_[id] = 0;
    const Triangle& t = tris_[id];
    for (int e = 0; e < 3; ++e) edges_.erase(edge_key(t[e], t[(e + 1) % 3]));
  }

  int locate(std::int64_t q) const {
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      if (!alive_[t]) continue;
      const Triangle& abc = tris_[t];
      if (left_turn(ps_, abc[0], abc[1], q, opts_) && left_turn(ps_, abc[1], abc[2], q, opts_) &&
          left_turn(ps_, abc[2], abc[0], q, opts_))
        return static_cast<int>(t);
    }
    return -1;
  }

  // Each stacked edge (a, b) belongs to the triangle (a, b, q).
  void legalize(std::int64_t q, std::vector<std::pair<std::int64_t, std::int64_t>>& stack) {
    while (!stack.empty()) {
      const auto [a, b] = stack.back();
      stack.pop_back();
      const int t1 = find(a, b);
      if (t1 < 0 || !alive_[t1]) continue;
      const Triangle& qt = tris_[t1];
      if (std::find(qt.begin(), qt.end(), q) == qt.end()) continue;
      const int t2 = find(b, a);
      if (t2 < 0) continue;  // hull edge
      const Triangle& other = tris_[t2];
      std::int64_t c = other[0];
      for (auto v : other)
        if (v != a && v != b) c = v;
      if (!in_circle({a, b, q}, c)) continue;

      const bool a_convex = left_turn(ps_, a, c, q, opts_);
      const bool b_convex = left_turn(ps_, c, b, q, opts_);
      if (a_convex && b_convex) {
        remove(t1);
        remove(t2);
        add({a, c, q});
        add({c, b, q});
        stack.emplace_back(a, c);
        stack.emplace_back(c, b);
      } else if (!a_convex) {
        // a is reflex; it can go only if its star is exactly (a,b,q), (a,q,c), (a,c,b).
        const int t3 = find(q, c);
        if (t3 < 0 || find(c, a) != t3) continue;
        remove(t1);
        remove(t2);
        remove(t3);
        add({b, q, c});
        redundant_.push_back(a);
        stack.emplace_back(c, b);
      } else {
        const int t3 = find(c, q);
        if (t3 < 0 || find(b, c) != t3) continue;
        remove(t1);
        remove(t2);
        remove(t3);
        add({q, a, c});
        redundant_.push_back(b);
        stack.emplace_back(a, c);
      }
    }
  }

  const PointSet& ps_;
  const PredicateOptions& opts_;
  std::vector<std::int64_t> pending_;
  std::vector<Triangle> tris_;
  std::vector<char> alive_;
  std::unordered_map<std::uint64_t, int> edges_;
  std::vector<std::int64_t> redundant_;
};

}  // namespace

Triangulation delaunay_2d(const PointSet& ps, const PredicateOptions& opts) {
  check_planar(ps, "delaunay_2d");
  if (ps.size() > 0xffffffffu) throw std::invalid_argument("delaunay_2d: too many points");
  bool all_equal = true;
  for (std::size_t i = 1; i < ps.size() && all_equal; ++i)
    all_equal = std::equal(ps[i].coords.begin(), ps[i].coords.end(), ps[0].coords.begin());
  if (all_equal) throw std::invalid_argument("delaunay_2d: all points coincide");

  Mesh mesh(ps, opts);
  for (std::size_t i = 0; i < ps.size(); ++i) mesh.insert(static_cast<std::int64_t>(i));
  return mesh.result();
}

}  // namespace sos
