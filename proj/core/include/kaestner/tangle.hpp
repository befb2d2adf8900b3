#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "kaestner/algebra.hpp"

namespace kaestner {

/// Model of the positive third-move tangle. Three strands (bottom, middle,
/// top) run left to right; top passes over both others, bottom under both.
/// Crossings are named by their strands: MB (middle over bottom), TB (top
/// over bottom), TM (top over middle). On the left side the bottom strand
/// meets MB then TB, the middle meets MB then TM, and the top meets TB then TM.
/// The right side visits each strand's crossings in the opposite order.
enum class R3Side : std::uint8_t { Left = 0, Right = 1 };
enum class R3Crossing : std::uint8_t { MB = 0, TB = 1, TM = 2 };

/// Boundary endpoints: 2*strand + (0 = in, 1 = out), strands ordered
/// bottom, middle, top.
enum class Endpoint : std::uint8_t { BottomIn, BottomOut, MiddleIn, MiddleOut, TopIn, TopOut };

std::string to_string(Endpoint e);

/// A perfect matching of the six endpoints: three pairs, each (smaller,
/// larger), sorted.
using Matching = std::array<std::pair<std::uint8_t, std::uint8_t>, 3>;

std::string to_string(const Matching& m);

/// Smoothing outcome of one of the 8 states of one side. Bit k of the state
/// index selects the smoothing of crossing k (MB, TB, TM): 0 = oriented,
/// 1 = disoriented.
struct R3StateShape {
  Matching matching{};
  int loops = 0;
};

/// Static connectivity of all 8 states of one side.
const std::array<R3StateShape, 8>& r3_states(R3Side side);

/// Parity-indexed coefficient position: tables (A^p, B^p) at [x][y],
/// 0-based.
struct Cell {
  int parity = 0;
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Parities (a, b, c) assigned to crossings (MB, TB, TM) and 1-based input
/// colors (x, y, z) of the bottom, middle, and top strands.
struct R3Instance {
  std::array<int, 3> parities{};
  std::array<int, 3> colors{};
};

/// Coefficient cells of the three crossings (MB, TB, TM) of one side under
/// the crossing coloring rule of the algebra module.
std::array<Cell, 3> r3_cells(const ParityBiquandle& pb, const R3Instance& inst, R3Side side);

/// The allowed parity triples: (0,0,0), (1,1,0), (1,0,1), (0,1,1).
const std::array<std::array<int, 3>, 4>& r3_parity_triples();

}  // namespace kaestner
