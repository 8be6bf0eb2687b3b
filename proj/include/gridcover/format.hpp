#pragma once

#include <string>

namespace gridcover {

// Shortest round-trip decimal form; "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double value);

}  // namespace gridcover
