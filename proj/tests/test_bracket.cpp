#include <doctest.h>

#include "kaestner/bracket.hpp"
#include "kaestner/errors.hpp"
#include "kaestner/tangle.hpp"
#include "support/oracles.hpp"

using namespace kaestner;
using kaestner::testing::data_path;
using kaestner::testing::read_text;

namespace {

Biquandle one_element() { return Biquandle::from_tables({{{1}}, {{1}}}); }

BiquandleBracketTables scalar(std::uint64_t n, std::uint64_t a, std::uint64_t b) {
  return {n, {{a}}, {{b}}};
}

bool has_rule_prefix(const BracketReport& r, const std::string& prefix) {
  for (const auto& v : r.violations) {
    if (v.rule.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("w and delta derivation") {
  const auto t = testing::fixture_bracket_tables();
  const auto d = derive_w_delta(t.A0, t.B0, ModularRing(5));
  REQUIRE(d.ok());
  CHECK(d.w->value() == 1);
  CHECK(d.delta->value() == 2);

  const auto k = derive_w_delta({{3}}, {{5}}, ModularRing(7));
  REQUIRE(k.ok());
  CHECK(k.w->value() == 1);
  CHECK(k.delta->value() == 1);

  const auto bad = derive_w_delta({{1, 1}, {1, 1}}, {{1, 2}, {1, 1}}, ModularRing(5));
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.failure.empty());
  CHECK(bad.witness.size() == 2);
}

TEST_CASE("biquandle bracket verification") {
  const auto pb = testing::fixture_parity_biquandle();
  const auto even = testing::fixture_bracket_tables().even();
  const auto r = verify_biquandle_bracket(pb.even_part(), even);
  CHECK(r.passed());
  CHECK(r.w->value() == 1);
  CHECK(r.delta->value() == 2);

  CHECK(verify_biquandle_bracket(one_element(), scalar(7, 3, 5)).passed());
  // for one element any unit pair works: the quadratic vanishes identically
  CHECK(verify_biquandle_bracket(one_element(), scalar(5, 1, 1)).passed());
  CHECK(verify_biquandle_bracket(one_element(), scalar(5, 1, 1)).delta->value() == 3);

  auto mutated = even;
  mutated.A[0][1] = 1;
  const auto m = verify_biquandle_bracket(pb.even_part(), mutated);
  CHECK_FALSE(m.passed());
  CHECK_FALSE(m.violations.front().witness.empty());

  const auto zero = verify_biquandle_bracket(one_element(), scalar(6, 2, 1));
  CHECK_FALSE(zero.passed());
  CHECK(has_rule_prefix(zero, "unit"));
}

TEST_CASE("kaestner bracket verification") {
  const auto pb = testing::fixture_parity_biquandle();
  const auto t = testing::fixture_bracket_tables();
  const auto r = verify_kaestner_bracket(pb, t);
  CHECK(r.passed());
  CHECK(r.w->value() == 1);
  CHECK(r.delta->value() == 2);

  // copying the even tables to the odd ones works when the odd operations
  // equal the even ones, not in general
  const auto blind = ParityBiquandle::from_biquandle(pb.even_part());
  CHECK(verify_kaestner_bracket(blind, KaestnerBracketTables::parity_blind(t.even())).passed());
  CHECK_FALSE(verify_kaestner_bracket(pb, KaestnerBracketTables::parity_blind(t.even())).passed());

  auto b = t;
  b.B1[2][2] = 2;
  const auto rb = verify_kaestner_bracket(pb, b);
  REQUIRE_FALSE(rb.passed());
  bool found = false;
  for (const auto& v : rb.violations) {
    if (v.rule == "odd delta condition" && v.witness == std::vector<int>{3, 3}) found = true;
  }
  CHECK(found);

  auto a = t;
  a.A1[0][0] = 2;
  CHECK_FALSE(verify_kaestner_bracket(pb, a).passed());
  bool unequal = false;
  for (const auto& par : r3_parity_triples()) {
    for (int x = 1; x <= 3; ++x) {
      for (int y = 1; y <= 3; ++y) {
        for (int z = 1; z <= 3; ++z) {
          const auto [l, rr] = expand_r3_sides(pb, a, ModularRing(5).element(2), {par, {x, y, z}});
          if (!testing::sides_equal(l, rr)) unequal = true;
        }
      }
    }
  }
  CHECK(unequal);
  CHECK_THROWS_AS(KaestnerBracket::from_tables(pb, a), ValidationError);
}

TEST_CASE("single odd-entry mutations are all caught") {
  const auto pb = testing::fixture_parity_biquandle();
  const auto t = testing::fixture_bracket_tables();
  int caught = 0, total = 0;
  for (int which = 0; which < 2; ++which) {
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        for (std::uint64_t v = 0; v < 5; ++v) {
          auto m = t;
          auto& cell = (which ? m.B1 : m.A1)[x][y];
          if (cell == v) continue;
          cell = v;
          ++total;
          const auto r = verify_kaestner_bracket(pb, m);
          if (!r.passed() && !r.violations.front().witness.empty()) ++caught;
        }
      }
    }
  }
  CHECK(total == 72);
  CHECK(caught == total);
}

TEST_CASE("expander matches the five coefficient identities") {
  const auto pb = testing::fixture_parity_biquandle();
  const auto even = testing::fixture_bracket_tables().even();
  std::vector<BiquandleBracketTables> brackets{even};
  for (int i = 0; i < 9; ++i) {
    auto m = even;
    (i % 2 ? m.B : m.A)[i / 3][i % 3] = (i % 2 ? m.B : m.A)[i / 3][i % 3] == 2 ? 3 : 2;
    brackets.push_back(m);
  }
  int agree = 0, failing_instances = 0;
  for (const auto& b : brackets) {
    const auto kt = KaestnerBracketTables::parity_blind(b);
    for (int x = 1; x <= 3; ++x) {
      for (int y = 1; y <= 3; ++y) {
        for (int z = 1; z <= 3; ++z) {
          bool cells = false;
          const bool eq = testing::five_identities_hold(pb, b, 2, {x, y, z}, &cells);
          CHECK(cells);
          const auto [l, r] = expand_r3_sides(pb, kt, ModularRing(5).element(2), {{0, 0, 0}, {x, y, z}});
          CHECK(eq == testing::sides_equal(l, r));
          agree += eq == testing::sides_equal(l, r);
          failing_instances += !eq;
        }
      }
    }
  }
  CHECK(agree == 270);
  CHECK(failing_instances > 0);
}

TEST_CASE("tangle states") {
  for (auto side : {R3Side::Left, R3Side::Right}) {
    const auto& states = r3_states(side);
    // all-oriented state keeps three through-strands with no closed loop
    CHECK(states[0].loops == 0);
    for (const auto& s : states) CHECK(s.loops <= 1);
  }
  // the all-oriented matchings agree on both sides
  CHECK(r3_states(R3Side::Left)[0].matching == r3_states(R3Side::Right)[0].matching);
}

TEST_CASE("bracket files") {
  const auto text = read_text(data_path("bracket_z5.txt"));
  const auto f = parse_bracket(text);
  CHECK(f.modulus == 5);
  CHECK(f.has_odd());
  CHECK(format_bracket(f.kaestner_tables()) == text);

  const auto e = parse_bracket(read_text(data_path("bracket_z5_even.txt")));
  CHECK_FALSE(e.has_odd());
  CHECK(e.kaestner_tables().A1 == e.A0);
  CHECK(parse_bracket(format_bracket(e.even_tables())).A0 == e.A0);

  CHECK_THROWS_AS(parse_bracket("ring=Z1\nA0\n0\nB0\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_bracket("ring=Z5\nA0\n5\nB0\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_bracket("ring=Q5\nA0\n1\nB0\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_bracket("ring=Z5\nA0\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_bracket("ring=Z5\nA0\n1 1\n1 1\nB0\n1\n"), ParseError);
}
