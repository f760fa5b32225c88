#pragma once

// Bulk predicate evaluation. Every kernel has a serial reference and an
// OpenMP version; both return identical results in identical order.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sos/geom.hpp"
#include "sos/predicates.hpp"

namespace sos {

enum class Execution { serial, parallel };

/// positive() for each triple of indices into a planar Cartesian set.
/// Depths go to opts.recorder, merged from per-thread recorders.
std::vector<char> orient_batch(const PointSet& ps, std::span<const Triangle> triples, Execution exec,
                               const PredicateOptions& opts = {});

/// (triangle position, point index) pairs for which in_sphere holds, i.e.
/// violations of the empty-circle property. Sorted.
std::vector<std::pair<std::size_t, std::int64_t>> find_empty_circle_violations(
    const PointSet& ps, std::span<const Triangle> triangles, Execution exec, const PredicateOptions& opts = {});

/// Threads OpenMP would use for a parallel kernel (1 without OpenMP).
int parallel_threads();

}  // namespace sos
