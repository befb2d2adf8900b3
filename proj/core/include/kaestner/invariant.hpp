#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kaestner/algebra.hpp"
#include "kaestner/bracket.hpp"
#include "kaestner/gauss.hpp"
#include "kaestner/ring.hpp"

namespace kaestner {

/// 1-based color of every semiarc, indexed by semiarc id.
struct Coloring {
  std::vector<int> colors;

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

/// All colorings satisfying every crossing relation, sorted
/// lexicographically. Search assigns the lowest free semiarc and propagates
/// through crossings whose color is forced by two known ends.
std::vector<Coloring> enumerate_colorings(const Diagram& diagram, const ParityBiquandle& pb);

/// Number of colorings, without materializing them.
std::uint64_t count_colorings(const Diagram& diagram, const ParityBiquandle& pb);

/// True iff `c` satisfies every crossing relation of the diagram.
bool is_coloring(const Diagram& diagram, const ParityBiquandle& pb, const Coloring& c);

/// One smoothing per crossing, indexed like Diagram::crossings(): true for
/// the oriented smoothing (ui-oo, oi-uo), false for the disoriented one
/// (ui-oi, uo-oo).
struct SmoothingState {
  std::vector<bool> oriented;
};

/// Number of closed curves after smoothing, zero-crossing components
/// included. Throws ValidationError when the state size is wrong.
std::size_t state_loops(const Diagram& diagram, const SmoothingState& state);

/// Diagrams with more crossings are rejected by the state-sum functions.
inline constexpr std::size_t kMaxStateSumCrossings = 26;

/// δ^m times the product of crossing coefficients for each of the 2^N states.
/// Bit k of the state index is 1 when crossing k takes the disoriented
/// smoothing.
std::vector<RingElement> state_contributions(const Diagram& diagram, const Coloring& coloring,
                                             const KaestnerBracket& kb);

/// w^(negative - positive) times the sum of state_contributions.
RingElement beta(const Diagram& diagram, const Coloring& coloring, const KaestnerBracket& kb);

/// Multiset of ring elements written as a polynomial in u.
class InvariantPolynomial {
 public:
  explicit InvariantPolynomial(std::uint64_t modulus) : modulus_(modulus) {}

  void add(const RingElement& exponent, std::uint64_t multiplicity = 1);
  const std::map<std::uint64_t, std::uint64_t>& terms() const noexcept { return terms_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t total() const noexcept;

  /// "<mult>u^<exp>" terms by ascending exponent joined with " + "; a
  /// multiplicity of 1 is omitted and u^0 is written as the bare
  /// multiplicity. The zero polynomial renders as "0".
  std::string render() const;

  friend bool operator==(const InvariantPolynomial&, const InvariantPolynomial&) = default;

 private:
  std::uint64_t modulus_;
  std::map<std::uint64_t, std::uint64_t> terms_;
};

InvariantPolynomial phi(const Diagram& diagram, const KaestnerBracket& kb);
InvariantPolynomial phi(const GaussCode& code, const KaestnerBracket& kb);
/// Classical polynomial: every crossing uses the even tables.
InvariantPolynomial phi(const GaussCode& code, const BiquandleBracket& bb);

struct NamedCode {
  std::string name;
  std::string code;
};

struct Classification {
  /// Rendered polynomial -> names in input order; classes sorted by string.
  std::map<std::string, std::vector<std::string>> classes;
  /// (name, message) for entries whose code failed to parse or evaluate.
  std::vector<std::pair<std::string, std::string>> errors;
};

Classification classify(const std::vector<NamedCode>& codes, const KaestnerBracket& kb);

/// Lines "NAME: CODE"; blank lines and lines starting with '#' are skipped.
/// The code text is returned unparsed so that bad codes can be reported per
/// entry. Throws ParseError for lines without ':' or with an empty name.
std::vector<NamedCode> parse_knot_list(std::string_view text);

}  // namespace kaestner
