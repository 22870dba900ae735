#pragma once

#include <cstdint>
#include <string>

namespace wexsim {

// Shortest decimal form that parses back to the identical double
// (std::to_chars). CSV output must round-trip bit-exactly.
std::string format_double(double value);

std::string format_int(std::int64_t value);

}  // namespace wexsim
