#include <sstream>

#include "kaestner/algebra.hpp"
#include "text_blocks.hpp"

namespace kaestner {

namespace {

Table to_table(const std::vector<std::vector<long long>>& rows, std::size_t n, const char* name) {
  Table t(n, std::vector<int>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const long long v = rows[r][c];
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw ParseError(std::string("block '") + name + "' entry [" + std::to_string(r + 1) + "][" +
                         std::to_string(c + 1) + "] = " + std::to_string(v) + " is outside 1.." +
                         std::to_string(n));
      }
      t[r][c] = static_cast<int>(v);
    }
  }
  return t;
}

void write_block(std::ostringstream& os, const char* name, const Table& t) {
  os << name << '\n';
  for (const auto& row : t) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ' ';
      os << row[c];
    }
    os << '\n';
  }
}

}  // namespace

ParityTables StructureFile::parity_tables() const {
  if (!has_odd()) return ParityTables::parity_blind({utr0, otr0});
  return {utr0, otr0, *utr1, *otr1};
}

StructureFile parse_structure(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty structure file");
  const long long n = detail::parse_header(lines[0], "n=");
  if (n < 1 || n > 4096) detail::fail(lines[0], "n must be in 1..4096");
  const auto blocks = detail::parse_blocks(lines, 1, {"utr0", "otr0", "utr1", "otr1"},
                                           static_cast<std::size_t>(n));
  const std::vector<std::string> even_only{"utr0", "otr0"};
  const std::vector<std::string> full{"utr0", "otr0", "utr1", "otr1"};
  if (blocks.order != even_only && blocks.order != full) {
    throw ParseError("structure file needs blocks utr0, otr0 (and optionally utr1, otr1) in order");
  }
  StructureFile f;
  f.n = static_cast<std::size_t>(n);
  f.utr0 = to_table(blocks.data.at("utr0"), f.n, "utr0");
  f.otr0 = to_table(blocks.data.at("otr0"), f.n, "otr0");
  if (blocks.order.size() == 4) {
    f.utr1 = to_table(blocks.data.at("utr1"), f.n, "utr1");
    f.otr1 = to_table(blocks.data.at("otr1"), f.n, "otr1");
  }
  return f;
}

std::string format_structure(const BiquandleTables& tables) {
  std::ostringstream os;
  os << "n=" << tables.utr.size() << '\n';
  write_block(os, "utr0", tables.utr);
  write_block(os, "otr0", tables.otr);
  return os.str();
}

std::string format_structure(const ParityTables& tables) {
  std::ostringstream os;
  os << "n=" << tables.utr0.size() << '\n';
  write_block(os, "utr0", tables.utr0);
  write_block(os, "otr0", tables.otr0);
  write_block(os, "utr1", tables.utr1);
  write_block(os, "otr1", tables.otr1);
  return os.str();
}

}  // namespace kaestner
