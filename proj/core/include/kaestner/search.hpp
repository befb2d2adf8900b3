#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kaestner/algebra.hpp"
#include "kaestner/bracket.hpp"

namespace kaestner {

enum class SearchMode {
  Full,     ///< all four coefficient tables free
  OddOnly,  ///< A0, B0 fixed; A1, B1 free
};

struct SearchSpec {
  ParityBiquandle structure;
  std::uint64_t modulus = 2;
  SearchMode mode = SearchMode::Full;
  /// Required in OddOnly mode; must pass verify_biquandle_bracket.
  std::optional<BiquandleBracketTables> fixed_even;
  /// Stop after this many brackets.
  std::optional<std::uint64_t> max_results;
  /// Stop at the first task boundary after this many third-move instance
  /// evaluations have been spent. A run always finishes every task it starts.
  std::optional<std::uint64_t> max_work;
  /// Skip top-level tasks before this index (resume point).
  std::uint64_t start_task = 0;
};

struct FoundBracket {
  KaestnerBracketTables tables;
  RingElement w;
  RingElement delta;
};

enum class SearchStatus { Complete, ResultLimit, WorkLimit };

struct SearchSummary {
  SearchStatus status = SearchStatus::Complete;
  std::uint64_t found = 0;
  /// Instance evaluations that rejected a partial assignment.
  std::uint64_t pruned_instances = 0;
  /// Instance evaluations spent.
  std::uint64_t work_units = 0;
  /// Total number of top-level tasks, one per (w, δ) and candidate values of
  /// the first two free cells.
  std::uint64_t task_count = 0;
  /// First task not completed; pass as start_task to resume. After a result
  /// limit the remaining brackets of the last task are skipped.
  std::uint64_t next_task = 0;
};

/// Enumerates every bracket over the structure and Z_modulus that passes
/// verify_kaestner_bracket, in a fixed order: (w, δ) with w over units and
/// δ over residues ascending, then cells (even row-major, then odd
/// row-major) with candidate (A, B) pairs ascending. Each emitted bracket is
/// re-verified in full. Resuming from next_task continues the sequence
/// exactly. Throws
/// ValidationError for an invalid spec.
SearchSummary search_brackets(const SearchSpec& spec,
                              const std::function<void(const FoundBracket&)>& sink);

/// Collecting variant.
std::vector<FoundBracket> search_brackets(const SearchSpec& spec, SearchSummary* summary = nullptr);

}  // namespace kaestner
