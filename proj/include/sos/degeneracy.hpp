#pragma once

// Per-run collection of SoS depths. The deepest term reached by a predicate
// measures how degenerate its input was: 0 means the unperturbed determinant
// already decided.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sos {

struct DegeneracyReport {
  struct PredicateStats {
    std::string predicate;
    std::uint64_t calls = 0;
    int max_depth = 0;
    std::map<int, std::uint64_t> histogram;
  };

  std::vector<PredicateStats> predicates;  // sorted by name
  std::map<int, std::uint64_t> histogram;  // over all predicates
  int max_depth = -1;                      // -1 for an empty run
  std::uint64_t total_calls = 0;

  bool empty() const { return total_calls == 0; }
  std::string to_text() const;
};

/// Not thread-safe; give each thread its own recorder and merge afterwards.
class DepthRecorder {
 public:
  void record(std::string_view predicate, int depth);
  void merge(const DepthRecorder& other);
  void clear() { counts_.clear(); }

  int max_depth() const;
  DegeneracyReport report() const;

 private:
  std::map<std::string, std::map<int, std::uint64_t>, std::less<>> counts_;
};

DegeneracyReport degeneracy_report(const DepthRecorder& recorder);

}  // namespace sos
