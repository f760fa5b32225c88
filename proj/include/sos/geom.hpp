#pragma once

// Planar algorithms whose only geometric tests are the SoS predicates.

#include <array>
#include <cstdint>
#include <vector>

#include "sos/predicates.hpp"

namespace sos {

using Point2 = std::array<std::int64_t, 2>;

/// Closed simple polygon. Vertex r (0-based in the vector) carries index r+1;
/// index 0 is reserved for the query point.
struct Polygon {
  std::vector<Point2> vertices;

  /// Throws std::invalid_argument if there are fewer than 3 vertices.
  void validate() const;
};

enum class PipClass { inside, outside, boundary };

const char* to_string(PipClass c);

struct PipResult {
  PipClass classification = PipClass::outside;
  int crossings = 0;
  int max_depth = 0;  // deepest SoS term reached, 0 if no determinant was needed
};

/// Exact unperturbed test: p lies on some closed edge of the polygon.
bool on_boundary(const Point2& p, const Polygon& poly);

/// Parity algorithm on the perturbed input. With the pretest on, points on
/// the boundary are reported as such before any perturbation is applied.
PipResult point_in_polygon(const Point2& p, const Polygon& poly, bool boundary_pretest = false,
                           const PredicateOptions& opts = {});

struct HullOptions {
  /// Drop vertices whose unperturbed neighbours are collinear with them.
  bool merge_collinear = false;
};

/// Counterclockwise hull cycle of the perturbed point set, starting at the
/// smallest index. Requires a planar Cartesian set of at least 3 points.
std::vector<std::int64_t> convex_hull_2d(const PointSet& ps, const HullOptions& hull = {},
                                         const PredicateOptions& opts = {});

using Triangle = std::array<std::int64_t, 3>;

struct Triangulation {
  std::vector<Triangle> triangles;      // counterclockwise, smallest index first, sorted
  std::vector<std::int64_t> vertices;   // indices that appear in some triangle, ascending
  std::vector<std::int64_t> redundant;  // indices left out because the perturbed lift hides them

  bool operator==(const Triangulation&) const = default;
};

/// Delaunay triangulation of the perturbed set: incremental insertion in
/// index order with flips driven by in_sphere and positive. A point whose
/// perturbed lift lies above the lower hull (only possible among points with
/// equal coordinates) is reported as redundant instead of triangulated.
Triangulation delaunay_2d(const PointSet& ps, const PredicateOptions& opts = {});

}  // namespace sos
