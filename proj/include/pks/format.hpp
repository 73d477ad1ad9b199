#pragma once

#include <string>

namespace pks {

// Shortest round-trip decimal form, '.' separator regardless of locale.
[[nodiscard]] std::string format_number(double value);

}  // namespace pks
