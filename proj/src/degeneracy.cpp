#include "sos/degeneracy.hpp"

#include <algorithm>
#include <sstream>

namespace sos {

void DepthRecorder::record(std::string_view predicate, int depth) {
  auto it = counts_.find(predicate);
  if (it == counts_.end()) it = counts_.emplace(std::string(predicate), std::map<int, std::uint64_t>{}).first;
  ++it->second[depth];
}

void DepthRecorder::merge(const DepthRecorder& other) {
  for (const auto& [name, hist] : other.counts_) {
    auto& mine = counts_[name];
    for (const auto& [depth, n] : hist) mine[depth] += n;
  }
}

int DepthRecorder::max_depth() const {
  int best = -1;
  for (const auto& [name, hist] : counts_)
    if (!hist.empty()) best = std::max(best, hist.rbegin()->first);
  return best;
}

DegeneracyReport DepthRecorder::report() const {
  DegeneracyReport rep;
  for (const auto& [name, hist] : counts_) {
    DegeneracyReport::PredicateStats stats{.predicate = name, .histogram = hist};
    for (const auto& [depth, n] : hist) {
      stats.calls += n;
      stats.max_depth = std::max(stats.max_depth, depth);
      rep.histogram[depth] += n;
    }
    rep.total_calls += stats.calls;
    rep.max_depth = std::max(rep.max_depth, stats.max_depth);
    rep.predicates.push_back(std::move(stats));
  }
  return rep;
}

DegeneracyReport degeneracy_report(const DepthRecorder& recorder) { return recorder.report(); }

std::string DegeneracyReport::to_text() const {
  std::ostringstream out;
  out << "# degeneracy report\n";
  out << "calls " << total_calls << "\n";
  out << "max_depth " << max_depth << "\n";
  for (const auto& p : predicates) {
    out << "predicate " << p.predicate << " calls " << p.calls << " max_depth " << p.max_depth << "\n";
  }
  for (const auto& [depth, n] : histogram) out << "depth " << depth << " " << n << "\n";
  return out.str();
}

}  // namespace sos
