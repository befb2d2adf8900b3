#include "kaestner/invariant.hpp"
#include "text_blocks.hpp"

namespace kaestner {

std::vector<NamedCode> parse_knot_list(std::string_view text) {
  std::vector<NamedCode> out;
  for (const auto& line : detail::content_lines(text)) {
    if (line.text.front() == '#') continue;
    const auto colon = line.text.find(':');
    if (colon == std::string_view::npos) detail::fail(line, "expected 'NAME: CODE'");
    const auto name = detail::trim(line.text.substr(0, colon));
    if (name.empty()) detail::fail(line, "empty knot name");
    out.push_back({std::string(name), std::string(detail::trim(line.text.substr(colon + 1)))});
  }
  return out;
}

}  // namespace kaestner
