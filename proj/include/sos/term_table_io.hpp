#pragma once

// Export formats for term tables.
//
// CSV columns: t,k,v,sign,deleted_rows,deleted_cols,eps
//   v            "3 4 4;4"  (entries, then the sentinel after ';')
//   sign         "+" or "-"
//   deleted_*    space-separated 1-based matrix rows/columns, empty if none
//   eps          space-separated "row:col" pairs, largest pair first, empty for eps()
//
// The text format is an aligned rendering of the same table with rows named
// i, j, k, l, ... and the surviving minor spelled out.

#include <string>
#include <string_view>
#include <vector>

#include "sos/eps_order.hpp"

namespace sos {

std::string format_term_table_csv(const std::vector<TermDescriptor>& table);
std::string format_term_table_text(MatrixKind kind, const std::vector<TermDescriptor>& table);

/// Inverse of format_term_table_csv. Throws std::invalid_argument on malformed input.
std::vector<TermDescriptor> parse_term_table_csv(std::string_view csv);

/// "(k,3),(j,2),(i,1)" style rendering of an eps-product whose pairs are in
/// matrix coordinates; "" for eps().
std::string eps_with_letters(const EpsilonProduct& eps);

}  // namespace sos
