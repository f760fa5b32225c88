#include "sos/term_table_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "sos/sos_sign.hpp"

namespace sos {

namespace {

std::string join_ints(const std::vector<int>& xs, const char* sep) {
  std::string out;
  for (std::size_t a = 0; a < xs.size(); ++a) {
    if (a) out += sep;
    out += std::to_string(xs[a]);
  }
  return out;
}

std::string letters(const std::vector<int>& rows) {
  std::string out;
  for (int r : rows) out += row_letter(r);
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("term table: bad integer '" + std::string(s) + "'");
  return value;
}

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (auto part : split(s, ' ')) out.push_back(parse_int(part));
  return out;
}

}  // namespace

std::string eps_with_letters(const EpsilonProduct& eps) {
  std::string out;
  for (const auto& p : eps.pairs()) {
    if (!out.empty()) out += ",";
    out += "(";
    out += row_letter(static_cast<int>(p.i));
    out += "," + std::to_string(p.j) + ")";
  }
  return out;
}

std::string format_term_table_csv(const std::vector<TermDescriptor>& table) {
  std::ostringstream out;
  out << "t,k,v,sign,deleted_rows,deleted_cols,eps\n";
  for (const auto& term : table) {
    std::vector<int> entries(term.v.values().begin(), term.v.values().end() - 1);
    out << term.depth << ',' << term.k << ',' << join_ints(entries, " ") << ';' << term.v.sentinel()
        << ',' << (term.sign == Sign::positive ? '+' : '-') << ',' << join_ints(term.deleted_rows, " ")
        << ',' << join_ints(term.deleted_cols, " ") << ',';
    bool first = true;
    for (const auto& p : term.eps.pairs()) {
      out << (first ? "" : " ") << p.i << ':' << p.j;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::string format_term_table_text(MatrixKind kind, const std::vector<TermDescriptor>& table) {
  const std::vector<std::string> header = {"t", "k", "v_t", "sign", "del_rows", "del_cols", "minor", "eps_t"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& term : table) {
    std::string minor = "()";
    if (term.k > 0) minor = letters(term.remaining_rows()) + "|" + join_ints(term.remaining_cols(), "");
    rows.push_back({std::to_string(term.depth), std::to_string(term.k), term.v.to_string(),
                    term.sign == Sign::positive ? "+" : "-", letters(term.deleted_rows),
                    join_ints(term.deleted_cols, ""), minor, "eps(" + eps_with_letters(term.eps) + ")"});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  const std::size_t dim = table.empty() ? 0 : table.front().v.dim();
  out << "# " << table.size() << " relevant terms of det " << to_string(kind) << dim << "(eps)\n";
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::string cell = cells[c];
      if (c + 1 < cells.size()) cell.resize(width[c], ' ');
      line += cell;
      if (c + 1 < cells.size()) line += "  ";
    }
    out << line << '\n';
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  return out.str();
}

std::vector<TermDescriptor> parse_term_table_csv(std::string_view csv) {
  std::vector<TermDescriptor> table;
  auto lines = split(csv, '\n');
  if (lines.empty() || lines.front() != "t,k,v,sign,deleted_rows,deleted_cols,eps")
    throw std::invalid_argument("term table: missing header");
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto line = lines[n];
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) throw std::invalid_argument("term table: expected 7 fields");
    const auto v_parts = split(f[2], ';');
    if (v_parts.size() != 2) throw std::invalid_argument("term table: bad depth vector");
    std::vector<int> values = parse_int_list(v_parts[0]);
    const int sentinel = parse_int(v_parts[1]);
    const std::size_t dim = values.size();
    values.push_back(sentinel);
    MatrixKind kind;
    if (sentinel == static_cast<int>(dim) + 1) kind = MatrixKind::delta;
    else if (sentinel == static_cast<int>(dim)) kind = MatrixKind::lambda;
    else throw std::invalid_argument("term table: sentinel matches neither kind");

    TermDescriptor term{.depth = parse_int(f[0]),
                        .k = static_cast<std::size_t>(parse_int(f[1])),
                        .v = DepthVector::from_values(kind, std::move(values))};
    if (f[3] == "+") term.sign = Sign::positive;
    else if (f[3] == "-") term.sign = Sign::negative;
    else throw std::invalid_argument("term table: bad sign");
    term.deleted_rows = parse_int_list(f[4]);
    term.deleted_cols = parse_int_list(f[5]);
    std::vector<IndexPair> pairs;
    if (!f[6].empty()) {
      for (auto p : split(f[6], ' ')) {
        const auto ij = split(p, ':');
        if (ij.size() != 2) throw std::invalid_argument("term table: bad index pair");
        pairs.push_back({parse_int(ij[0]), parse_int(ij[1])});
      }
    }
    term.eps = EpsilonProduct(std::move(pairs));
    table.push_back(std::move(term));
  }
  return table;
}

}  // namespace sos
