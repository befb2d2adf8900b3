#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kaestner/gauss.hpp"
#include "kaestner/ring.hpp"

namespace kaestner {

/// Square operation table with entries in 1..n, indexed [x-1][y-1].
using Table = std::vector<std::vector<int>>;

/// Raw biquandle data: utr[x][y] = x ⊵ y (under), otr[x][y] = x ⊴ y (over).
struct BiquandleTables {
  Table utr;
  Table otr;
};

/// Raw parity biquandle data; the digit is the crossing parity.
struct ParityTables {
  Table utr0;
  Table otr0;
  Table utr1;
  Table otr1;

  BiquandleTables even() const { return {utr0, otr0}; }
  /// Odd tables copied from the even ones.
  static ParityTables parity_blind(const BiquandleTables& t) { return {t.utr, t.otr, t.utr, t.otr}; }
};

/// One failed axiom instance. Witness elements are 1-based.
struct Violation {
  std::string rule;
  std::vector<int> witness;
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;
  bool passed() const noexcept { return violations.empty(); }
};

/// Brute-force check of idempotence, invertibility of α_y, β_y and the
/// sideways map, and the three exchange laws over all triples. Every failing
/// instance is reported. Throws ValidationError on malformed tables.
Report verify_biquandle(const BiquandleTables& tables);

/// Even part is a biquandle, odd α, β and sideways maps are bijective, and
/// the three mixed exchange laws hold for parity triples (1,1,0), (1,0,1),
/// (0,1,1) and all element triples.
Report verify_parity_biquandle(const ParityTables& tables);

/// One operation pair with precomputed inverse columns. Elements are
/// 0-based here; this is the hot-path view used by coloring and search.
class OpPair {
 public:
  OpPair() = default;
  /// Tables must be square, 1-based, with α_y and β_y bijective.
  OpPair(const Table& utr, const Table& otr);

  std::size_t size() const noexcept { return n_; }
  /// x ⊵ y
  std::uint32_t under(std::uint32_t x, std::uint32_t y) const noexcept { return utr_[x * n_ + y]; }
  /// x ⊴ y
  std::uint32_t over(std::uint32_t x, std::uint32_t y) const noexcept { return otr_[x * n_ + y]; }
  /// The y with y ⊴ x = v.
  std::uint32_t alpha_inv(std::uint32_t x, std::uint32_t v) const noexcept {
    return alpha_inv_[x * n_ + v];
  }
  /// The x with x ⊵ y = v.
  std::uint32_t beta_inv(std::uint32_t y, std::uint32_t v) const noexcept {
    return beta_inv_[y * n_ + v];
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> utr_, otr_, alpha_inv_, beta_inv_;
};

/// A finite biquandle whose tables passed verify_biquandle.
class Biquandle {
 public:
  /// Throws ValidationError listing the first violations if verification fails.
  static Biquandle from_tables(const BiquandleTables& tables);

  std::size_t size() const noexcept { return ops_.size(); }
  const OpPair& ops() const noexcept { return ops_; }
  const BiquandleTables& tables() const noexcept { return tables_; }

 private:
  Biquandle(BiquandleTables tables, OpPair ops) : tables_(std::move(tables)), ops_(std::move(ops)) {}
  BiquandleTables tables_;
  OpPair ops_;
};

/// A finite parity biquandle whose tables passed verify_parity_biquandle.
class ParityBiquandle {
 public:
  static ParityBiquandle from_tables(const ParityTables& tables);
  /// Parity-blind extension: odd operations equal the even ones.
  static ParityBiquandle from_biquandle(const Biquandle& b);

  std::size_t size() const noexcept { return even_.size(); }
  const OpPair& ops(int parity) const noexcept { return parity ? odd_ : even_; }
  const ParityTables& tables() const noexcept { return tables_; }
  Biquandle even_part() const { return Biquandle::from_tables(tables_.even()); }

 private:
  ParityBiquandle(ParityTables tables, OpPair even, OpPair odd)
      : tables_(std::move(tables)), even_(std::move(even)), odd_(std::move(odd)) {}
  ParityTables tables_;
  OpPair even_;
  OpPair odd_;
};

/// Colors (1-based) on the four ends of one crossing, with the coefficient
/// index pair (x, y).
///
/// Positive crossing: under_in = x, under_out = x ⊵ y, over_in = y ⊴ x,
/// over_out = y. Negative crossing: under_in = x ⊵ y, under_out = x,
/// over_in = y, over_out = y ⊴ x. So x always sits on the under strand at its
/// "left" end and y on the over strand at its "right" end.
struct CrossingColors {
  int under_in = 0;
  int under_out = 0;
  int over_in = 0;
  int over_out = 0;
  int x = 0;
  int y = 0;

  friend bool operator==(const CrossingColors&, const CrossingColors&) = default;
};

/// Output colors of a crossing from its two input colors. Throws
/// ValidationError for out-of-range elements or parity.
CrossingColors solve_crossing(const ParityBiquandle& pb, int parity, Sign sign, int under_in,
                              int over_in);

/// Crossing colors from the index pair (x, y).
CrossingColors crossing_from_index(const ParityBiquandle& pb, int parity, Sign sign, int x, int y);

/// Alexander biquandle on Z_n: x ⊵ y = t x + (s - t) y, x ⊴ y = s x, with
/// residue r stored as element r + 1. Throws ValidationError unless t and s
/// are units.
Biquandle alexander_biquandle(std::uint64_t modulus, std::int64_t t, std::int64_t s);

/// Contents of a structure file. Odd tables are absent in biquandle files.
struct StructureFile {
  std::size_t n = 0;
  Table utr0, otr0;
  std::optional<Table> utr1, otr1;

  bool has_odd() const noexcept { return utr1.has_value(); }
  ParityTables parity_tables() const;
};

/// Parse "n=<int>" followed by "utr0", "otr0" and optionally "utr1", "otr1"
/// blocks of n rows of n integers in 1..n. Blank lines are skipped.
StructureFile parse_structure(std::string_view text);
std::string format_structure(const BiquandleTables& tables);
std::string format_structure(const ParityTables& tables);

}  // namespace kaestner
