#include <sstream>

#include "kaestner/bracket.hpp"
#include "text_blocks.hpp"

namespace kaestner {

namespace {

CoeffTable to_coeffs(const std::vector<std::vector<long long>>& rows, std::uint64_t modulus,
                     const char* name) {
  CoeffTable t(rows.size(), std::vector<std::uint64_t>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows.size(); ++c) {
      const long long v = rows[r][c];
      if (v < 0 || static_cast<std::uint64_t>(v) >= modulus) {
        throw ParseError(std::string("block '") + name + "' entry [" + std::to_string(r + 1) + "][" +
                         std::to_string(c + 1) + "] = " + std::to_string(v) +
                         " is not a residue in 0.." + std::to_string(modulus - 1));
      }
      t[r][c] = static_cast<std::uint64_t>(v);
    }
  }
  return t;
}

void write_block(std::ostringstream& os, const char* name, const CoeffTable& t) {
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

KaestnerBracketTables BracketFile::kaestner_tables() const {
  if (!has_odd()) return KaestnerBracketTables::parity_blind(even_tables());
  return {modulus, A0, B0, *A1, *B1};
}

BracketFile parse_bracket(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty bracket file");
  const long long m = detail::parse_header(lines[0], "ring=Z");
  if (m < 2) detail::fail(lines[0], "ring modulus must be at least 2");
  const auto blocks = detail::parse_blocks(lines, 1, {"A0", "B0", "A1", "B1"}, 0);
  const std::vector<std::string> even_only{"A0", "B0"};
  const std::vector<std::string> full{"A0", "B0", "A1", "B1"};
  if (blocks.order != even_only && blocks.order != full) {
    throw ParseError("bracket file needs blocks A0, B0 (and optionally A1, B1) in order");
  }
  BracketFile f;
  f.modulus = static_cast<std::uint64_t>(m);
  f.A0 = to_coeffs(blocks.data.at("A0"), f.modulus, "A0");
  f.B0 = to_coeffs(blocks.data.at("B0"), f.modulus, "B0");
  if (blocks.order.size() == 4) {
    f.A1 = to_coeffs(blocks.data.at("A1"), f.modulus, "A1");
    f.B1 = to_coeffs(blocks.data.at("B1"), f.modulus, "B1");
  }
  return f;
}

std::string format_bracket(const BiquandleBracketTables& tables) {
  std::ostringstream os;
  os << "ring=Z" << tables.modulus << '\n';
  write_block(os, "A0", tables.A);
  write_block(os, "B0", tables.B);
  return os.str();
}

std::string format_bracket(const KaestnerBracketTables& tables) {
  std::ostringstream os;
  os << "ring=Z" << tables.modulus << '\n';
  write_block(os, "A0", tables.A0);
  write_block(os, "B0", tables.B0);
  write_block(os, "A1", tables.A1);
  write_block(os, "B1", tables.B1);
  return os.str();
}

}  // namespace kaestner
