#include "kaestner/tangle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace kaestner {

namespace {

constexpr int kBottom = 0, kMiddle = 1, kTop = 2;

// Under and over strand of each crossing MB, TB, TM.
constexpr std::array<int, 3> kUnder{kBottom, kBottom, kMiddle};
constexpr std::array<int, 3> kOver{kMiddle, kTop, kTop};

// Crossing order met by each strand on each side.
constexpr std::array<std::array<std::array<int, 2>, 3>, 2> kVisits{{
    {{{0, 1}, {0, 2}, {1, 2}}},  // left: B: MB,TB  M: MB,TM  T: TB,TM
    {{{1, 0}, {2, 0}, {2, 1}}},  // right: B: TB,MB  M: TM,MB  T: TM,TB
}};

// Node ids: 6 boundary endpoints, then 4 ends per crossing
// (ui, uo, oi, oo) in CrossingEnd order.
constexpr int kUi = 0, kUo = 1, kOi = 2, kOo = 3;
int end_node(int crossing, int end) { return 6 + 4 * crossing + end; }

struct UnionFind {
  std::array<int, 18> parent{};
  UnionFind() { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

std::array<R3StateShape, 8> compute_states(int side) {
  std::array<R3StateShape, 8> out{};
  for (int state = 0; state < 8; ++state) {
    UnionFind uf;
    for (int s = 0; s < 3; ++s) {
      const auto& seq = kVisits[side][s];
      const int c0 = seq[0], c1 = seq[1];
      auto in_end = [&](int c) { return kUnder[c] == s ? kUi : kOi; };
      auto out_end = [&](int c) { return kUnder[c] == s ? kUo : kOo; };
      uf.join(2 * s, end_node(c0, in_end(c0)));
      uf.join(end_node(c0, out_end(c0)), end_node(c1, in_end(c1)));
      uf.join(end_node(c1, out_end(c1)), 2 * s + 1);
    }
    for (int c = 0; c < 3; ++c) {
      if (((state >> c) & 1) == 0) {
        uf.join(end_node(c, kUi), end_node(c, kOo));
        uf.join(end_node(c, kOi), end_node(c, kUo));
      } else {
        uf.join(end_node(c, kUi), end_node(c, kOi));
        uf.join(end_node(c, kUo), end_node(c, kOo));
      }
    }
    std::array<int, 18> first{};
    first.fill(-1);
    std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs;
    for (int b = 0; b < 6; ++b) {
      const int r = uf.find(b);
      if (first[r] < 0) {
        first[r] = b;
      } else {
        pairs.emplace_back(static_cast<std::uint8_t>(first[r]), static_cast<std::uint8_t>(b));
      }
    }
    std::sort(pairs.begin(), pairs.end());
    std::copy(pairs.begin(), pairs.end(), out[state].matching.begin());
    std::array<bool, 18> has_boundary{};
    for (int b = 0; b < 6; ++b) has_boundary[uf.find(b)] = true;
    int loops = 0;
    for (int v = 6; v < 18; ++v) {
      if (uf.find(v) == v && !has_boundary[v]) ++loops;
    }
    out[state].loops = loops;
  }
  return out;
}

}  // namespace

std::string to_string(Endpoint e) {
  static const char* names[] = {"B_in", "B_out", "M_in", "M_out", "T_in", "T_out"};
  return names[static_cast<int>(e)];
}

std::string to_string(const Matching& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ", ";
    s += to_string(static_cast<Endpoint>(m[i].first)) + "-" +
         to_string(static_cast<Endpoint>(m[i].second));
  }
  return s + "}";
}

const std::array<R3StateShape, 8>& r3_states(R3Side side) {
  static const std::array<std::array<R3StateShape, 8>, 2> table{compute_states(0), compute_states(1)};
  return table[static_cast<int>(side)];
}

std::array<Cell, 3> r3_cells(const ParityBiquandle& pb, const R3Instance& inst, R3Side side) {
  const int sd = static_cast<int>(side);
  // Semiarc color per strand: entering, between its crossings, leaving.
  std::array<std::array<int, 3>, 3> color{};
  for (int s = 0; s < 3; ++s) color[s][0] = inst.colors[s];
  std::array<Cell, 3> cells{};
  std::array<bool, 3> done{};
  for (int round = 0; round < 3; ++round) {
    for (int c = 0; c < 3; ++c) {
      if (done[c]) continue;
      const int u = kUnder[c], o = kOver[c];
      const int ku = kVisits[sd][u][0] == c ? 0 : 1;
      const int ko = kVisits[sd][o][0] == c ? 0 : 1;
      const int ui = color[u][ku], oi = color[o][ko];
      if (ui == 0 || oi == 0) continue;
      const int p = inst.parities[c];
      const CrossingColors cc = solve_crossing(pb, p, Sign::Positive, ui, oi);
      color[u][ku + 1] = cc.under_out;
      color[o][ko + 1] = cc.over_out;
      cells[c] = Cell{p, static_cast<std::uint32_t>(cc.x - 1), static_cast<std::uint32_t>(cc.y - 1)};
      done[c] = true;
    }
  }
  return cells;
}

const std::array<std::array<int, 3>, 4>& r3_parity_triples() {
  static const std::array<std::array<int, 3>, 4> t{{{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};
  return t;
}

}  // namespace kaestner
