#include "sos/input_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace sos {

std::int64_t parse_int64(std::string_view token) {
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec == std::errc::invalid_argument || ptr != digits.data() + digits.size())
    throw InputError("not an integer: '" + std::string(token) + "'");
  if (ec == std::errc::result_out_of_range) throw InputError("integer out of 64-bit range: '" + std::string(token) + "'");
  return value;
}

InputFile parse_input(std::string_view text) {
  InputFile file;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::int64_t> row;
    std::size_t pos = 0;
    while (true) {
      pos = line.find_first_not_of(" \t\r\f\v", pos);
      if (pos == std::string_view::npos) break;
      const std::size_t end = std::min(line.find_first_of(" \t\r\f\v", pos), line.size());
      try {
        row.push_back(parse_int64(line.substr(pos, end - pos)));
      } catch (const InputError& e) {
        throw InputError("line " + std::to_string(line_no) + ": " + e.what());
      }
      pos = end;
    }
    if (row.empty()) continue;
    if (!file.rows.empty() && row.size() != file.arity())
      throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(file.arity()) +
                       " values, found " + std::to_string(row.size()));
    file.rows.push_back(std::move(row));
  }
  return file;
}

InputFile read_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

}  // namespace sos
