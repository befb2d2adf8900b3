#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kaestner/errors.hpp"

namespace kaestner {

enum class Strand : std::uint8_t { Over, Under };
enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

inline constexpr Sign flip(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }
inline constexpr Strand other(Strand s) { return s == Strand::Over ? Strand::Under : Strand::Over; }

/// One passage through a classical crossing: label, strand role, crossing sign.
struct Token {
  int label = 0;
  Strand strand = Strand::Over;
  Sign sign = Sign::Positive;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Position of one token: component index and index within the component.
struct TokenRef {
  std::size_t component = 0;
  std::size_t index = 0;

  friend bool operator==(const TokenRef&, const TokenRef&) = default;
};

/// Signed Gauss code of an oriented virtual link: one cyclic token sequence
/// per component. Construction validates the pairing rules, so every live
/// GaussCode satisfies them:
///   - each label occurs exactly twice, once Over and once Under;
///   - both occurrences carry the same sign;
///   - empty components (crossingless loops) are allowed.
class GaussCode {
 public:
  using Component = std::vector<Token>;

  /// The unknot: a single empty component.
  GaussCode();
  explicit GaussCode(std::vector<Component> components);

  const std::vector<Component>& components() const noexcept { return components_; }
  std::size_t component_count() const noexcept { return components_.size(); }
  std::size_t crossing_count() const noexcept;

  /// Labels in ascending order.
  std::vector<int> labels() const;
  bool has_label(int label) const;
  /// Both occurrences of a label; throws ValidationError for unknown labels.
  std::array<TokenRef, 2> occurrences(int label) const;
  const Token& at(const TokenRef& ref) const { return components_[ref.component][ref.index]; }
  Sign sign_of(int label) const;
  int max_label() const;

  /// Labels renumbered 1..N in first-visit order.
  GaussCode canonical() const;

  friend bool operator==(const GaussCode&, const GaussCode&) = default;

 private:
  std::vector<Component> components_;
};

/// Parse the textual grammar
///   CODE := COMPONENT (";" COMPONENT)*
///   COMPONENT := "" | TOKEN ("," TOKEN)*
///   TOKEN := ("O"|"U") INT ("+"|"-"),  INT := [1-9][0-9]*
/// Whitespace around tokens is ignored.
GaussCode parse_gauss(std::string_view text);

/// Canonical text: labels renumbered in first-visit order, no whitespace.
std::string serialize_gauss(const GaussCode& code);

/// Same text as serialize_gauss but keeping the code's own labels.
std::string format_gauss(const GaussCode& code);

/// 0 (even) or 1 (odd): parity of the number of tokens strictly between the
/// two occurrences of `label`. Both cyclic gaps have the same parity because
/// a component always holds an even number of tokens. Crossings between two
/// different components are even by convention.
int parity(const GaussCode& code, int label);

enum class CrossingEnd : std::uint8_t { UnderIn = 0, UnderOut = 1, OverIn = 2, OverOut = 3 };

struct DiagramCrossing {
  int label = 0;
  Sign sign = Sign::Positive;
  int parity = 0;
  /// Semiarc incident to each CrossingEnd, indexed by the enum value.
  std::array<std::size_t, 4> semiarc{};
};

struct EndRef {
  std::size_t crossing = 0;
  CrossingEnd end = CrossingEnd::UnderIn;

  friend bool operator==(const EndRef&, const EndRef&) = default;
};

/// Maximal arc between consecutive crossing passages of one component, or a
/// whole crossingless component (closed == true, no ends).
struct Semiarc {
  std::size_t component = 0;
  bool closed = false;
  EndRef from;  ///< crossing end the semiarc leaves (an *Out end)
  EndRef to;    ///< crossing end the semiarc enters (an *In end)
};

/// Incidence structure of a Gauss code: crossings with their four ends,
/// semiarcs joining ends, and sign statistics. Crossings are ordered by
/// ascending label; semiarc k of a component with tokens t_0..t_{m-1}
/// leaves t_k and enters t_{k+1 mod m}.
class Diagram {
 public:
  const std::vector<DiagramCrossing>& crossings() const noexcept { return crossings_; }
  const std::vector<Semiarc>& semiarcs() const noexcept { return semiarcs_; }
  std::size_t positive_count() const noexcept { return positive_; }
  std::size_t negative_count() const noexcept { return negative_; }
  std::size_t closed_loops() const noexcept { return closed_loops_; }
  std::size_t component_count() const noexcept { return components_; }
  /// Index into crossings() for a label; throws ValidationError if absent.
  std::size_t crossing_index(int label) const;

  friend Diagram build_diagram(const GaussCode& code);

 private:
  std::vector<DiagramCrossing> crossings_;
  std::vector<Semiarc> semiarcs_;
  std::size_t positive_ = 0;
  std::size_t negative_ = 0;
  std::size_t closed_loops_ = 0;
  std::size_t components_ = 0;
};

Diagram build_diagram(const GaussCode& code);

}  // namespace kaestner
