#include <doctest.h>

#include "kaestner/errors.hpp"
#include "kaestner/ring.hpp"

using namespace kaestner;

TEST_CASE("residue arithmetic") {
  const ModularRing z5(5), z7(7);
  CHECK((z5.element(4) * z5.element(4)).value() == 1);
  CHECK((-z5.element(1)).value() == 4);
  CHECK((-z7.element(27)).value() == 1);
  CHECK(z7.element(-1).value() == 6);
  CHECK((z5.element(3) + z5.element(4)).value() == 2);
  CHECK((z5.element(1) - z5.element(3)).value() == 3);
  CHECK(arith(z5.element(2), z5.element(4), ArithOp::Mul).value() == 3);
  CHECK(arith(z5.element(2), z5.element(0), ArithOp::Neg).value() == 3);
}

TEST_CASE("inverses") {
  const ModularRing z5(5), z4(4);
  CHECK(unit_inverse(z5.element(4)).value() == 4);
  CHECK(unit_inverse(z5.element(2)).value() == 3);
  CHECK_THROWS_AS(unit_inverse(z4.element(2)), NotInvertible);
  CHECK_THROWS_WITH_AS(z4.element(0).inverse(), doctest::Contains("not invertible"), NotInvertible);
  CHECK(z5.element(2).pow(-1).value() == 3);
  CHECK(z5.element(2).pow(4).value() == 1);
  CHECK(z5.element(3).pow(0).value() == 1);
}

TEST_CASE("unit lists") {
  auto values = [](std::uint64_t n) {
    std::vector<std::uint64_t> v;
    for (const auto& u : ModularRing(n).units()) v.push_back(u.value());
    return v;
  };
  CHECK(values(5) == std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(values(4) == std::vector<std::uint64_t>{1, 3});
  CHECK(values(2) == std::vector<std::uint64_t>{1});
  CHECK(values(12) == std::vector<std::uint64_t>{1, 5, 7, 11});
}

TEST_CASE("ring mismatch and bad modulus") {
  CHECK_THROWS_AS(ModularRing(5).element(1) + ModularRing(7).element(1), RingMismatch);
  CHECK_THROWS_AS(ModularRing(1), ValidationError);
  CHECK_THROWS_AS(ModularRing(0), ValidationError);
}

TEST_CASE("large modulus does not overflow") {
  const ModularRing big(0xFFFFFFFFFFFFFFC5ull);  // largest 64-bit prime
  const auto a = big.element(-2);
  CHECK((a * a).value() == 4);
  CHECK((a * a.inverse()).value() == 1);
}
