#pragma once

// Text input: one object per line as whitespace-separated decimal integers.
// '#' starts a comment; blank lines are dropped. The ordinal of a remaining
// line (from 0) is the object's index.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sos {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputFile {
  std::vector<std::vector<std::int64_t>> rows;

  std::size_t size() const { return rows.size(); }
  std::size_t arity() const { return rows.empty() ? 0 : rows.front().size(); }
};

/// Throws InputError with a line number on malformed or out-of-range values
/// and on inconsistent arity.
InputFile parse_input(std::string_view text);
InputFile read_input_file(const std::string& path);

/// A single signed decimal integer, nothing else.
std::int64_t parse_int64(std::string_view token);

}  // namespace sos
