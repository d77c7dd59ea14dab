#pragma once

#include <string>

namespace pmcover {

// Shortest decimal text that parses back to exactly `value`
// ("1", "0.5", "2.6", "inf", "-inf", "nan").
std::string format_number(double value);

}  // namespace pmcover
