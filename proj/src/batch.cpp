#include "sos/batch.hpp"

#include <algorithm>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sos {

namespace {

bool orient_one(const PointSet& ps, const Triangle& t, const PredicateOptions& opts) {
  const std::array<PointRef, 3> pts = {ps[static_cast<std::size_t>(t[0])], ps[static_cast<std::size_t>(t[1])],
                                       ps[static_cast<std::size_t>(t[2])]};
  return positive(pts, CoordMode::cartesian, opts);
}

bool violates(const PointSet& ps, const Triangle& t, std::int64_t q, const PredicateOptions& opts) {
  if (q == t[0] || q == t[1] || q == t[2]) return false;
  const std::array<PointRef, 4> pts = {ps[static_cast<std::size_t>(t[0])], ps[static_cast<std::size_t>(t[1])],
                                       ps[static_cast<std::size_t>(t[2])], ps[static_cast<std::size_t>(q)]};
  return in_sphere(pts, opts);
}

// Runs body(i, thread_opts) for i in [0, n) across threads, each thread with
// its own recorder; recorders are merged in thread order afterwards. The
// first exception raised by any thread is rethrown.
template <class Body>
void parallel_for(std::size_t n, const PredicateOptions& opts, Body body) {
  const int threads = parallel_threads();
  std::vector<DepthRecorder> recorders(static_cast<std::size_t>(threads));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel num_threads(threads)
  {
#ifdef _OPENMP
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
#else
    const std::size_t tid = 0;
#endif
    PredicateOptions local = opts;
    local.recorder = opts.recorder ? &recorders[tid] : nullptr;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      if (errors[tid]) continue;
      try {
        body(static_cast<std::size_t>(i), local);
      } catch (...) {
        errors[tid] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  if (opts.recorder)
    for (const auto& r : recorders) opts.recorder->merge(r);
}

}  // namespace

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<char> orient_batch(const PointSet& ps, std::span<const Triangle> triples, Execution exec,
                               const PredicateOptions& opts) {
  std::vector<char> out(triples.size());
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < triples.size(); ++i) out[i] = orient_one(ps, triples[i], opts);
    return out;
  }
  parallel_for(triples.size(), opts,
               [&](std::size_t i, const PredicateOptions& local) { out[i] = orient_one(ps, triples[i], local); });
  return out;
}

std::vector<std::pair<std::size_t, std::int64_t>> find_empty_circle_violations(const PointSet& ps,
                                                                               std::span<const Triangle> triangles,
                                                                               Execution exec,
                                                                               const PredicateOptions& opts) {
  const auto n = static_cast<std::int64_t>(ps.size());
  std::vector<std::pair<std::size_t, std::int64_t>> out;
  if (exec == Execution::serial) {
    for (std::size_t t = 0; t < triangles.size(); ++t)
      for (std::int64_t q = 0; q < n; ++q)
        if (violates(ps, triangles[t], q, opts)) out.emplace_back(t, q);
    return out;
  }
  std::vector<std::vector<std::int64_t>> per_triangle(triangles.size());
  parallel_for(triangles.size(), opts, [&](std::size_t t, const PredicateOptions& local) {
    for (std::int64_t q = 0; q < n; ++q)
      if (violates(ps, triangles[t], q, local)) per_triangle[t].push_back(q);
  });
  for (std::size_t t = 0; t < triangles.size(); ++t)
    for (auto q : per_triangle[t]) out.emplace_back(t, q);
  return out;
}

}  // namespace sos
