#include "twistcert/bundled.hpp"

#include <utility>

#include "twistcert/error.hpp"

namespace twistcert {

namespace detail {
extern const std::pair<std::string_view, std::string_view> kBundledFiles[];
extern const int kBundledFileCount;
}  // namespace detail

std::string_view bundled_file(std::string_view name) {
  for (int i = 0; i < detail::kBundledFileCount; ++i) {
    if (detail::kBundledFiles[i].first == name) return detail::kBundledFiles[i].second;
  }
  throw InputError("no bundled file named '" + std::string(name) + "'");
}

std::vector<std::string> bundled_names() {
  std::vector<std::string> out;
  for (int i = 0; i < detail::kBundledFileCount; ++i) out.emplace_back(detail::kBundledFiles[i].first);
  return out;
}

}  // namespace twistcert
