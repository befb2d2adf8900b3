#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kaestner/gauss.hpp"

namespace kaestner {

/// Deterministic pseudorandom stream: std::mt19937_64 (fully specified by the
/// standard) plus rejection-sampled bounded draws, so sequences agree across
/// platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Insertion point on a component: the semiarc leaving token `semiarc`
/// (semiarc 0 of an empty component is the whole loop).
struct Gap {
  std::size_t component = 0;
  std::size_t semiarc = 0;

  friend bool operator==(const Gap&, const Gap&) = default;
};

/// All gaps in (component, semiarc) order.
std::vector<Gap> gaps(const GaussCode& code);

/// Insert a kink with fresh label max+1 on `gap`.
GaussCode r1_insert(const GaussCode& code, Gap gap, bool over_first, Sign sign);
/// Remove a crossing whose two instances are cyclically adjacent.
GaussCode r1_delete(const GaussCode& code, int label);
/// Labels removable by r1_delete, ascending.
std::vector<int> r1_delete_candidates(const GaussCode& code);

/// Insert a bigon with fresh labels a = max+1 (sign `sign`) and b = max+2
/// (opposite sign). The over pair (a, b) goes on `over_gap`; the under pair
/// goes on `under_gap`, as (a, b) when the strands run parallel and (b, a)
/// when they run antiparallel.
GaussCode r2_insert(const GaussCode& code, Gap over_gap, Gap under_gap, bool antiparallel,
                    Sign sign);
/// Remove a bigon: opposite signs, over instances adjacent, under instances
/// adjacent.
GaussCode r2_delete(const GaussCode& code, int label1, int label2);
/// Label pairs (smaller first) removable by r2_delete, ascending.
std::vector<std::pair<int, int>> r2_delete_candidates(const GaussCode& code);

/// Adjacent token pair at (component, index): tokens index and index+1 mod k.
struct PairRef {
  std::size_t component = 0;
  std::size_t index = 0;

  friend bool operator==(const PairRef&, const PairRef&) = default;
};

/// A triangle on which a third move applies. The top strand passes over both
/// others, the bottom strand under both. Crossing labels: top/middle,
/// top/bottom, middle/bottom.
struct R3Site {
  PairRef top;     ///< two over instances (top/middle, top/bottom)
  PairRef middle;  ///< over instance of middle/bottom, under instance of top/middle
  PairRef bottom;  ///< two under instances (middle/bottom, top/bottom)
  int top_middle = 0;
  int top_bottom = 0;
  int middle_bottom = 0;

  friend bool operator==(const R3Site&, const R3Site&) = default;
};

/// Every triangle on which a third move applies, in (top, middle, bottom)
/// position order. A triangle qualifies when the three adjacent pairs are
/// present and the crossing signs are consistent with some planar
/// configuration of three oriented lines: each crossing's sign, multiplied
/// by (-1) for every one of its two strands whose pair order differs from
/// the reference all-positive pattern, must give the same value for all
/// three crossings.
std::vector<R3Site> r3_candidates(const GaussCode& code);

/// Apply the third move on the triangle formed by the three labels (in any
/// order): each of the three adjacent pairs is transposed. Throws MoveError
/// when the labels do not form an applicable triangle.
GaussCode r3_apply(const GaussCode& code, int label1, int label2, int label3);
GaussCode r3_apply(const GaussCode& code, const R3Site& site);

enum class MoveKind { R1Insert, R1Delete, R2Insert, R2Delete, R3 };

std::string to_string(MoveKind kind);

struct RandomMoveOptions {
  /// Insertions that would exceed this crossing count are not offered.
  std::optional<std::size_t> max_crossings;
};

struct MoveRecord {
  MoveKind kind = MoveKind::R1Insert;
  /// Labels created, removed or permuted by the move.
  std::vector<int> labels;
  GaussCode result;
};

/// One move chosen uniformly among the applicable kinds, then uniformly
/// among that kind's instances. Labels of untouched crossings are kept.
MoveRecord random_move(const GaussCode& code, Rng& rng, const RandomMoveOptions& options = {});

/// `count` successive random_move steps from the stream seeded by `seed`.
GaussCode random_moves(const GaussCode& code, std::uint64_t seed, std::size_t count,
                       const RandomMoveOptions& options = {});

/// A uniformly shuffled single-component code with `crossings` crossings,
/// random strand order and random signs.
GaussCode random_code(Rng& rng, std::size_t crossings);

}  // namespace kaestner
