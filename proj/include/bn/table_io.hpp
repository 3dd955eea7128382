#pragma once

#include <string>
#include <vector>

#include "bn/brill_noether.hpp"

namespace bn {

// CSV with header "g,d,s,t,count", LF line endings, no trailing whitespace.
std::string table_to_csv(const std::vector<TableRow>& rows);
std::vector<TableRow> table_from_csv(const std::string& csv);

std::string table_to_json(const std::vector<TableRow>& rows);

// Parallel version of rho_zero_rows; worker count from BN_MAX_THREADS when
// set, hardware concurrency otherwise.  Output order is deterministic.
std::vector<TableRow> rho_zero_rows_parallel(int d_offset, int max_g);

}  // namespace bn
