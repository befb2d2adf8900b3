#include <doctest.h>

#include <algorithm>

#include "kaestner/errors.hpp"
#include "kaestner/moves.hpp"
#include "support/oracles.hpp"

using namespace kaestner;

namespace {

Token tok(int label, Strand s, Sign sign) { return Token{label, s, sign}; }

// Position of `label` within a component, or -1.
int position(const GaussCode::Component& comp, int label) {
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (comp[i].label == label) return static_cast<int>(i);
  }
  return -1;
}

// Three strands, each a component holding its two move crossings followed by
// a kink, so the order along each strand is unambiguous. Labels: 1 = MB,
// 2 = TB, 3 = TM.
GaussCode pattern_code(const testing::R3Pattern& p) {
  auto sg = [&](int i) { return p.signs[i] > 0 ? Sign::Positive : Sign::Negative; };
  auto strand = [&](Token first, Token second, bool flip, int kink) {
    GaussCode::Component c = flip ? GaussCode::Component{second, first} : GaussCode::Component{first, second};
    c.push_back(tok(kink, Strand::Over, Sign::Positive));
    c.push_back(tok(kink, Strand::Under, Sign::Positive));
    return c;
  };
  return GaussCode({strand(tok(2, Strand::Over, sg(1)), tok(3, Strand::Over, sg(2)), p.flips[0], 4),
                    strand(tok(1, Strand::Over, sg(0)), tok(3, Strand::Under, sg(2)), p.flips[1], 5),
                    strand(tok(1, Strand::Under, sg(0)), tok(2, Strand::Under, sg(1)), p.flips[2], 6)});
}

}  // namespace

TEST_CASE("first move") {
  const auto kink = r1_insert(GaussCode(), Gap{0, 0}, true, Sign::Positive);
  CHECK(serialize_gauss(kink) == "O1+,U1+");
  CHECK(serialize_gauss(r1_insert(GaussCode(), Gap{0, 0}, false, Sign::Negative)) == "U1-,O1-");
  CHECK(serialize_gauss(r1_delete(kink, 1)) == "");
  CHECK_THROWS_AS(r1_delete(parse_gauss("O1+,O2+,U1+,U2+"), 1), MoveError);
  CHECK_THROWS_AS(r1_delete(kink, 9), MoveError);
  // wraps around the end of the component
  CHECK(serialize_gauss(r1_delete(parse_gauss("U1-,O2+,U2+,O1-"), 1)) == "O1+,U1+");
  CHECK(r1_delete_candidates(parse_gauss("U1-,O2+,U2+,O1-")) == std::vector<int>{1, 2});
}

TEST_CASE("second move") {
  const auto code = r2_insert(GaussCode(), Gap{0, 0}, Gap{0, 0}, false, Sign::Positive);
  CHECK(code.crossing_count() == 2);
  CHECK(code.sign_of(1) != code.sign_of(2));
  CHECK(serialize_gauss(r2_delete(code, 1, 2)) == "");

  const auto base = parse_gauss("O1-,O2-,U1-,U2-");
  for (const auto& go : gaps(base)) {
    for (const auto& gu : gaps(base)) {
      for (bool anti : {false, true}) {
        const auto grown = r2_insert(base, go, gu, anti, Sign::Negative);
        CHECK(r2_delete(grown, 3, 4) == base);
      }
    }
  }
  CHECK_THROWS_AS(r2_delete(parse_gauss("O1+,O2+,U1+,U2+"), 1, 2), MoveError);
  CHECK(r2_delete_candidates(parse_gauss("O1+,O2+,U1+,U2+")).empty());
  CHECK(r2_delete_candidates(parse_gauss("O1+,O2-,U1+,U2-")) == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("third move rewrites") {
  const auto a = r3_apply(parse_gauss("U1+,U2+,O1+,U3+,O2+,O3+"), 1, 2, 3);
  CHECK(format_gauss(a) == "U2+,U1+,U3+,O1+,O3+,O2+");
  const auto b = r3_apply(parse_gauss("U1+,U2+,O2+,O3+,O1+,U3+"), 1, 2, 3);
  CHECK(format_gauss(b) == "U2+,U1+,O3+,O2+,U3+,O1+");
  // label order does not matter
  CHECK(r3_apply(parse_gauss("U1+,U2+,O1+,U3+,O2+,O3+"), 3, 1, 2) == a);
  // the move is an involution
  CHECK(format_gauss(r3_apply(a, 1, 2, 3)) == "U1+,U2+,O1+,U3+,O2+,O3+");
  CHECK_THROWS_AS(r3_apply(parse_gauss("O1-,O2-,U1-,U2-"), 1, 2, 2), MoveError);
  CHECK_THROWS_AS(r3_apply(parse_gauss("U1+,U2+,O1+,U3+,O2+,O3+"), 1, 2, 4), MoveError);
  CHECK_THROWS_AS(r3_apply(parse_gauss("U1+,U3+,O1+,U2+,O2+,O3+"), 1, 2, 3), MoveError);
}

TEST_CASE("third move agrees with straight-line geometry") {
  const auto valid = testing::geometric_r3_patterns(2024, 20000);
  CHECK(valid.size() == 16);
  int accepted = 0;
  for (int s = 0; s < 8; ++s) {
    for (int f = 0; f < 8; ++f) {
      testing::R3Pattern p;
      for (int i = 0; i < 3; ++i) {
        p.signs[i] = (s >> i) & 1 ? -1 : 1;
        p.flips[i] = (f >> i) & 1;
      }
      const auto code = pattern_code(p);
      const bool expected = valid.count(p) > 0;
      CAPTURE(format_gauss(code));
      const auto sites = r3_candidates(code);
      CHECK(sites.size() == (expected ? 1u : 0u));
      if (!expected) {
        CHECK_THROWS_AS(r3_apply(code, 1, 2, 3), MoveError);
        continue;
      }
      ++accepted;
      const auto moved = r3_apply(code, 1, 2, 3);
      CHECK(moved == r3_apply(code, sites.front()));
      // every strand now meets its crossings in the opposite order
      const std::array<std::pair<int, int>, 3> pairs{{{2, 3}, {1, 3}, {1, 2}}};
      for (std::size_t c = 0; c < 3; ++c) {
        const auto& comp = moved.components()[c];
        const bool flipped = position(comp, pairs[c].first) > position(comp, pairs[c].second);
        CHECK(flipped == !p.flips[c]);
      }
      for (int l = 1; l <= 3; ++l) CHECK(moved.sign_of(l) == code.sign_of(l));
      testing::R3Pattern after = p;
      for (auto& fl : after.flips) fl = !fl;
      CHECK(valid.count(after) == 1);
    }
  }
  CHECK(accepted == 16);
}

TEST_CASE("random moves") {
  CHECK(random_moves(GaussCode(), 1, 0) == GaussCode());
  CHECK(random_moves(testing::virtual_trefoil(), 9, 25) == random_moves(testing::virtual_trefoil(), 9, 25));
  const auto grown = random_moves(GaussCode(), 7, 50);
  CHECK(parse_gauss(serialize_gauss(grown)).canonical() == grown.canonical());

  Rng rng(3);
  RandomMoveOptions opts;
  opts.max_crossings = 6;
  GaussCode code = testing::virtual_trefoil();
  for (int i = 0; i < 200; ++i) {
    const auto m = random_move(code, rng, opts);
    CHECK(m.result.crossing_count() <= 6);
    code = m.result;
  }
}

TEST_CASE("random codes") {
  Rng rng(11);
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto c = random_code(rng, n);
    CHECK(c.crossing_count() == n);
    CHECK(c.component_count() == 1);
  }
}
