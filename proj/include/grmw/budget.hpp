#pragma once

#include <cstddef>

namespace grmw {

// Mutable process-wide budgets.  The CLI may override the enumeration budget
// from the GRMW_BUDGET environment variable.
long long& enumeration_budget();  // max codewords an exhaustive search visits
std::size_t& table_budget();      // max points in a materialized truth table

}  // namespace grmw
