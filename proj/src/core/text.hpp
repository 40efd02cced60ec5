#pragma once

#include <string>

namespace inductolink {

// Shortest decimal form that round-trips to the same double. Always uses
// '.' as the decimal separator regardless of locale.
std::string format_double(double v);

// General format with the given number of significant digits.
std::string format_double(double v, int precision);

}  // namespace inductolink
