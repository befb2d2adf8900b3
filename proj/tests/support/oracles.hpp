#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "kaestner/algebra.hpp"
#include "kaestner/bracket.hpp"
#include "kaestner/gauss.hpp"
#include "kaestner/invariant.hpp"
#include "kaestner/search.hpp"

namespace kaestner::testing {

std::string data_path(const std::string& name);
std::string read_text(const std::string& path);

ParityBiquandle fixture_parity_biquandle();
Biquandle fixture_biquandle();
KaestnerBracketTables fixture_bracket_tables();
KaestnerBracket fixture_bracket();
GaussCode virtual_trefoil();

/// Every code with exactly `crossings` crossings on one component, or on two
/// components split at every cut point when `two_components` is set.
/// Duplicates (up to relabelling) are removed.
std::vector<GaussCode> all_codes(std::size_t crossings, bool two_components);

/// All colorings by scanning the full product X^(semiarcs) and checking each
/// crossing directly against the operation tables.
std::vector<Coloring> product_scan_colorings(const Diagram& d, const ParityBiquandle& pb);

/// Third-move pattern: crossing signs (MB, TB, TM) as +1/-1 and, per strand
/// (top, middle, bottom), whether its two crossings are met in the reverse of
/// the reference order top: TB then TM, middle: MB then TM, bottom: MB then TB.
struct R3Pattern {
  std::array<int, 3> signs{};
  std::array<bool, 3> flips{};
  friend auto operator<=>(const R3Pattern&, const R3Pattern&) = default;
};

/// Patterns realised by random configurations of three straight oriented
/// lines in the plane, top over middle over bottom.
std::set<R3Pattern> geometric_r3_patterns(std::uint64_t seed, int samples);

/// Tables of an emitted or candidate bracket, flattened for set comparison.
using FlatBracket = std::vector<std::uint64_t>;
FlatBracket flatten(const KaestnerBracketTables& t);

/// Every assignment of units to the free cells that passes
/// verify_kaestner_bracket, without pruning.
std::set<FlatBracket> exhaustive_brackets(const SearchSpec& spec);
std::set<FlatBracket> pruned_brackets(const SearchSpec& spec);

/// Checks the five crossing-coefficient identities of the positive
/// all-even third move at one color instance directly from the tables.
/// Returns whether all hold; `cells_match` reports whether the cells used
/// agree with r3_cells.
bool five_identities_hold(const ParityBiquandle& pb, const BiquandleBracketTables& t,
                          std::uint64_t delta, const std::array<int, 3>& colors, bool* cells_match);

/// Whether the two expanded sides agree after dropping zero terms.
bool sides_equal(const TangleExpression& l, const TangleExpression& r);

}  // namespace kaestner::testing
