#include <charconv>

#include "twistfuse/cli.hpp"

namespace twistfuse::cli {

std::vector<int> parse_parts(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw InvalidArgument("malformed signature '" + std::string(text) +
                            "': expected comma-separated integers");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

GLSignature parse_gl(std::string_view text) { return GLSignature(parse_parts(text)); }

SpSignature parse_sp(std::string_view text) { return SpSignature(parse_parts(text)); }

}  // namespace twistfuse::cli
