#pragma once

#include <string>

namespace meridian {

// Shortest representation that parses back to the same double (at most 17
// significant digits). -0 prints as "0"; non-finite values as "nan",
// "inf", "-inf".
std::string format_real(double x);

}  // namespace meridian
