#pragma once

// Line-oriented reader shared by the structure and bracket file parsers.

#include <charconv>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kaestner/errors.hpp"

namespace kaestner::detail {

struct Line {
  std::size_t number = 0;  // 1-based
  std::string_view text;   // trimmed
};

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

/// Non-blank lines, trimmed.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    const auto t = trim(text.substr(start, end - start));
    if (!t.empty()) out.push_back({number, t});
    start = end + 1;
  }
  return out;
}

[[noreturn]] inline void fail(const Line& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

inline long long parse_int(const Line& line, std::string_view s) {
  long long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    fail(line, "expected an integer, found '" + std::string(s) + "'");
  }
  return v;
}

/// Parse "<key>=<value>" where the value follows `prefix` (e.g. "n=" or
/// "ring=Z").
inline long long parse_header(const Line& line, std::string_view prefix) {
  if (line.text.substr(0, prefix.size()) != prefix) {
    fail(line, "expected header '" + std::string(prefix) + "<int>'");
  }
  return parse_int(line, line.text.substr(prefix.size()));
}

inline std::vector<long long> parse_row(const Line& line) {
  std::vector<long long> out;
  std::string_view s = line.text;
  while (!s.empty()) {
    const auto sp = s.find_first_of(" \t");
    out.push_back(parse_int(line, s.substr(0, sp)));
    if (sp == std::string_view::npos) break;
    s = trim(s.substr(sp));
  }
  return out;
}

/// Named blocks of rows following the header line. Block names must come from
/// `allowed`, may not repeat, and each block holds exactly `rows` rows of
/// `rows` entries (rows == 0 means: infer from the first block).
struct Blocks {
  std::size_t rows = 0;
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::vector<long long>>> data;
};

inline Blocks parse_blocks(const std::vector<Line>& lines, std::size_t first,
                           const std::vector<std::string>& allowed, std::size_t rows) {
  Blocks b;
  b.rows = rows;
  std::size_t i = first;
  while (i < lines.size()) {
    const Line& head = lines[i];
    const std::string name(head.text);
    bool ok = false;
    for (const auto& a : allowed) ok = ok || a == name;
    if (!ok) fail(head, "unexpected block header '" + name + "'");
    if (b.data.count(name)) fail(head, "duplicate block '" + name + "'");
    ++i;
    std::vector<std::vector<long long>> table;
    while (i < lines.size()) {
      const Line& l = lines[i];
      const char c = l.text.front();
      if (!(c == '-' || (c >= '0' && c <= '9'))) break;
      table.push_back(parse_row(l));
      ++i;
    }
    if (b.rows == 0) b.rows = table.size();
    if (table.size() != b.rows || b.rows == 0) {
      fail(head, "block '" + name + "' has " + std::to_string(table.size()) + " rows, expected " +
                     std::to_string(b.rows));
    }
    for (std::size_t r = 0; r < table.size(); ++r) {
      if (table[r].size() != b.rows) {
        fail(lines[i - table.size() + r], "row has " + std::to_string(table[r].size()) +
                                              " entries, expected " + std::to_string(b.rows));
      }
    }
    b.order.push_back(name);
    b.data.emplace(name, std::move(table));
  }
  return b;
}

}  // namespace kaestner::detail
