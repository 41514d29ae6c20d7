#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace twistcert {

// Data files compiled into the library (relators, reference tables,
// external constants).
std::string_view bundled_file(std::string_view name);
std::vector<std::string> bundled_names();

}  // namespace twistcert
