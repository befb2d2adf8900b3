#include <doctest.h>

#include "kaestner/algebra.hpp"
#include "kaestner/errors.hpp"
#include "support/oracles.hpp"

using namespace kaestner;
using kaestner::testing::data_path;
using kaestner::testing::read_text;

TEST_CASE("biquandle axioms") {
  const auto bq = parse_structure(read_text(data_path("biquandle3.txt")));
  CHECK(verify_biquandle({bq.utr0, bq.otr0}).passed());

  const auto pb = parse_structure(read_text(data_path("parity_biquandle3.txt")));
  CHECK(verify_biquandle({pb.utr0, pb.otr0}).passed());

  BiquandleTables bad{pb.utr0, pb.otr0};
  bad.utr[0][0] = 1;
  const auto r = verify_biquandle(bad);
  REQUIRE_FALSE(r.passed());
  CHECK_FALSE(r.violations.front().witness.empty());
  CHECK_FALSE(r.violations.front().rule.empty());

  // not a permutation in the first argument
  const auto sq = verify_biquandle({{{1, 1}, {1, 1}}, {{1, 1}, {2, 2}}});
  CHECK_FALSE(sq.passed());
  CHECK_THROWS_AS(Biquandle::from_tables({{{1, 1}, {1, 1}}, {{1, 1}, {2, 2}}}), ValidationError);
}

TEST_CASE("alexander biquandles") {
  const auto trivial = alexander_biquandle(5, 1, 1);
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) {
      CHECK(trivial.tables().utr[x][y] == x + 1);
      CHECK(trivial.tables().otr[x][y] == x + 1);
    }
  }
  CHECK(verify_biquandle(alexander_biquandle(3, 2, 1).tables()).passed());
  for (std::uint64_t n : {5u, 7u, 8u, 9u}) {
    for (const auto& t : ModularRing(n).units()) {
      for (const auto& s : ModularRing(n).units()) {
        CHECK(verify_biquandle(alexander_biquandle(n, static_cast<std::int64_t>(t.value()),
                                                   static_cast<std::int64_t>(s.value()))
                                   .tables())
                  .passed());
      }
    }
  }
  CHECK_THROWS_AS(alexander_biquandle(4, 2, 1), ValidationError);
  CHECK_THROWS_AS(alexander_biquandle(4, 1, 2), ValidationError);
}

TEST_CASE("parity biquandle axioms") {
  const auto pb = parse_structure(read_text(data_path("parity_biquandle3.txt")));
  CHECK(verify_parity_biquandle(pb.parity_tables()).passed());

  const auto bq = parse_structure(read_text(data_path("biquandle3.txt")));
  CHECK(verify_parity_biquandle(ParityTables::parity_blind({bq.utr0, bq.otr0})).passed());
  CHECK(verify_parity_biquandle(ParityTables::parity_blind(alexander_biquandle(7, 3, 5).tables())).passed());

  auto bad = pb.parity_tables();
  bad.otr1[0][1] = 2;
  const auto r = verify_parity_biquandle(bad);
  REQUIRE_FALSE(r.passed());
  CHECK_FALSE(r.violations.front().witness.empty());

  // odd part that is a biquandle on its own but breaks the mixed laws
  auto mixed = ParityTables::parity_blind({bq.utr0, bq.otr0});
  mixed.utr1 = *pb.utr1;
  mixed.otr1 = *pb.otr1;
  const auto rm = verify_parity_biquandle(mixed);
  CHECK_FALSE(rm.passed());
}

TEST_CASE("crossing coloring rule") {
  const auto pb = testing::fixture_parity_biquandle();
  const auto c = crossing_from_index(pb, 1, Sign::Positive, 1, 2);
  CHECK(c.under_in == 1);
  CHECK(c.over_out == 2);
  CHECK(c.under_out == 1);  // 1 under-odd 2
  CHECK(c.over_in == 2);    // 2 over-odd 1

  for (int p = 0; p < 2; ++p) {
    for (int x = 1; x <= 3; ++x) {
      if (p == 0) {
        const auto d = crossing_from_index(pb, p, Sign::Positive, x, x);
        CHECK(d.under_out == d.over_in);
      }
      for (int y = 1; y <= 3; ++y) {
        for (Sign s : {Sign::Positive, Sign::Negative}) {
          const auto k = crossing_from_index(pb, p, s, x, y);
          CHECK(k.x == x);
          CHECK(k.y == y);
          CHECK(solve_crossing(pb, p, s, k.under_in, k.over_in) == k);
        }
        // the negative crossing undoes the positive one
        const auto pos = solve_crossing(pb, p, Sign::Positive, x, y);
        const auto neg = solve_crossing(pb, p, Sign::Negative, pos.under_out, pos.over_out);
        CHECK(neg.under_out == x);
        CHECK(neg.over_out == y);
      }
    }
  }
}

TEST_CASE("structure files") {
  const auto text = read_text(data_path("parity_biquandle3.txt"));
  const auto f = parse_structure(text);
  CHECK(f.n == 3);
  CHECK(f.has_odd());
  CHECK(format_structure(f.parity_tables()) == text);

  const auto even = parse_structure("n=2\nutr0\n1 1\n2 2\notr0\n1 1\n2 2\n");
  CHECK_FALSE(even.has_odd());
  CHECK(even.parity_tables().utr1 == even.utr0);
  CHECK(parse_structure(format_structure(BiquandleTables{even.utr0, even.otr0})).utr0 == even.utr0);

  CHECK(parse_structure("n=1\n\nutr0\n1\notr0\n1\n").n == 1);

  CHECK_THROWS_AS(parse_structure(""), ParseError);
  CHECK_THROWS_AS(parse_structure("n=2\nutr0\n1 1\notr0\n1 1\n2 2\n"), ParseError);
  CHECK_THROWS_AS(parse_structure("n=2\nutr0\n1 3\n2 2\notr0\n1 1\n2 2\n"), ParseError);
  CHECK_THROWS_AS(parse_structure("n=2\notr0\n1 1\n2 2\nutr0\n1 1\n2 2\n"), ParseError);
  CHECK_THROWS_AS(parse_structure("n=2\nutr0\n1 1\n2 2\notr0\n1 1\n2 2\nutr1\n1 1\n2 2\n"), ParseError);
  CHECK_THROWS_WITH(parse_structure("n=2\nutr0\n1 x\n2 2\notr0\n1 1\n2 2\n"), doctest::Contains("line 3"));
}
