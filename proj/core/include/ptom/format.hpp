#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ptom {

/// Locale-independent shortest-general formatting with `digits` significant
/// digits ('.' decimal point, no grouping). Non-finite values print as
/// "nan", "inf", "-inf".
std::string format_number(double value, int digits = 12);

/// Joins fields with ',' and appends '\n'; fields holding ',', '"' or a
/// newline are quoted per RFC 4180.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace ptom
