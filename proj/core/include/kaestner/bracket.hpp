#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kaestner/algebra.hpp"
#include "kaestner/ring.hpp"
#include "kaestner/tangle.hpp"

namespace kaestner {

/// Square table of residues, indexed [x-1][y-1].
using CoeffTable = std::vector<std::vector<std::uint64_t>>;

struct BiquandleBracketTables {
  std::uint64_t modulus = 2;
  CoeffTable A;
  CoeffTable B;
};

struct KaestnerBracketTables {
  std::uint64_t modulus = 2;
  CoeffTable A0, B0, A1, B1;

  BiquandleBracketTables even() const { return {modulus, A0, B0}; }
  /// Odd tables copied from the even ones.
  static KaestnerBracketTables parity_blind(const BiquandleBracketTables& t) {
    return {t.modulus, t.A, t.B, t.A, t.B};
  }
};

/// Outcome of deriving w and δ. On failure `failure` names the first
/// inconsistent entry and `witness` holds its 1-based index.
struct Derivation {
  std::optional<RingElement> w;
  std::optional<RingElement> delta;
  std::string failure;
  std::vector<int> witness;

  bool ok() const noexcept { return w.has_value() && delta.has_value(); }
};

/// w = -A[x][x]^2 B[x][x]^-1 (constant over x) and
/// δ = -A[x][y]^-1 B[x][y] - A[x][y] B[x][y]^-1 (constant over all x, y).
/// Throws ValidationError for malformed tables or non-unit entries.
Derivation derive_w_delta(const CoeffTable& A, const CoeffTable& B, const ModularRing& ring);

struct BracketReport {
  std::vector<Violation> violations;
  std::optional<RingElement> w;
  std::optional<RingElement> delta;
  bool passed() const noexcept { return violations.empty() && w && delta; }
};

/// Formal sum over boundary matchings of a tangle; zero coefficients are
/// omitted so two expressions are equal iff their maps are equal.
using TangleExpression = std::map<Matching, RingElement>;

/// Both sides of the colored positive third-move tangle, each summed over its
/// 8 smoothing states. Oriented smoothings contribute A^p[x][y], disoriented
/// ones B^p[x][y], and every closed loop a factor δ.
std::pair<TangleExpression, TangleExpression> expand_r3_sides(const ParityBiquandle& pb,
                                                              const KaestnerBracketTables& tables,
                                                              const RingElement& delta,
                                                              const R3Instance& inst);

/// Checks units, w and δ, and every even third-move instance.
BracketReport verify_biquandle_bracket(const Biquandle& structure,
                                       const BiquandleBracketTables& tables);

/// Checks the even part as a biquandle bracket, the δ condition on the odd
/// tables, and the third-move instances for the three mixed parity triples.
BracketReport verify_kaestner_bracket(const ParityBiquandle& structure,
                                      const KaestnerBracketTables& tables);

/// Verified Kaestner bracket with cached inverses. Immutable.
class KaestnerBracket {
 public:
  /// Throws ValidationError when verification fails.
  static KaestnerBracket from_tables(const ParityBiquandle& structure,
                                     const KaestnerBracketTables& tables);

  const ParityBiquandle& structure() const noexcept { return structure_; }
  const KaestnerBracketTables& tables() const noexcept { return tables_; }
  const ModularRing& ring() const noexcept { return ring_; }
  const RingElement& w() const noexcept { return w_; }
  const RingElement& delta() const noexcept { return delta_; }

  /// Residue contributed by a crossing: A (oriented) or B (disoriented) at
  /// 0-based (x, y), inverted for negative crossings.
  std::uint64_t coefficient(int parity, bool oriented, Sign sign, std::uint32_t x,
                            std::uint32_t y) const noexcept {
    const std::size_t n = structure_.size();
    const std::size_t idx = ((static_cast<std::size_t>(parity) * 2 + (oriented ? 0 : 1)) * 2 +
                             (sign == Sign::Positive ? 0 : 1)) * n * n + x * n + y;
    return coeff_[idx];
  }

 private:
  KaestnerBracket(ParityBiquandle s, KaestnerBracketTables t, const RingElement& w,
                  const RingElement& d);
  ParityBiquandle structure_;
  KaestnerBracketTables tables_;
  ModularRing ring_;
  RingElement w_;
  RingElement delta_;
  std::vector<std::uint64_t> coeff_;
};

/// Verified biquandle bracket; evaluation goes through its parity-blind
/// Kaestner extension.
class BiquandleBracket {
 public:
  static BiquandleBracket from_tables(const Biquandle& structure,
                                      const BiquandleBracketTables& tables);

  const BiquandleBracketTables& tables() const noexcept { return tables_; }
  const RingElement& w() const noexcept { return kaestner_.w(); }
  const RingElement& delta() const noexcept { return kaestner_.delta(); }
  const KaestnerBracket& as_kaestner() const noexcept { return kaestner_; }

 private:
  BiquandleBracket(BiquandleBracketTables t, KaestnerBracket k)
      : tables_(std::move(t)), kaestner_(std::move(k)) {}
  BiquandleBracketTables tables_;
  KaestnerBracket kaestner_;
};

/// Contents of a bracket file; odd tables are absent in biquandle bracket
/// files.
struct BracketFile {
  std::uint64_t modulus = 2;
  CoeffTable A0, B0;
  std::optional<CoeffTable> A1, B1;

  bool has_odd() const noexcept { return A1.has_value(); }
  KaestnerBracketTables kaestner_tables() const;
  BiquandleBracketTables even_tables() const { return {modulus, A0, B0}; }
};

/// Parse "ring=Z<int>" followed by "A0", "B0" and optionally "A1", "B1"
/// blocks of residues in [0, modulus).
BracketFile parse_bracket(std::string_view text);
std::string format_bracket(const BiquandleBracketTables& tables);
std::string format_bracket(const KaestnerBracketTables& tables);

}  // namespace kaestner
