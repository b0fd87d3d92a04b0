#pragma once

#include <string>
#include <string_view>

#include "eigendeg/bounds.hpp"
#include "eigendeg/quasirandom.hpp"
#include "eigendeg/spectrum.hpp"

namespace eigendeg {

/// %g-style text with `digits` significant digits and trailing zeros
/// dropped; +inf, -inf and nan are written as those words.
std::string format_number(double value, int digits = 17);

/// Quoted, escaped JSON string literal.
std::string json_string(std::string_view text);

// JSON writers emit keys in a fixed order and numbers at 17 significant
// digits, so identical inputs give byte-identical text. The vacuous +inf
// slack is written as the string "+inf" with a null witness.

std::string to_json(const Spectrum& spectrum);
std::string to_json(const BoundSet& set);
std::string to_json(const TrendReport& report);

/// Header "graph,n,m,check,holds,worst_slack,witness_k".
std::string bound_csv_header();
/// One row per check, no header.
std::string to_csv_rows(const BoundSet& set);

/// Header plus one row per grid point: n,m,t1,t2,t3,c1,c2,c3,s_norm.
std::string to_csv(const TrendReport& report);

}  // namespace eigendeg
