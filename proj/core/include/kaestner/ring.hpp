#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

#include "kaestner/errors.hpp"

namespace kaestner {

class RingElement;

namespace detail {
__extension__ typedef __int128 int128;
__extension__ typedef unsigned __int128 uint128;
}  // namespace detail

/// The cyclic ring Z/nZ, n >= 2.
///
/// Only cyclic rings are supported. Bracket coefficients in all known
/// examples live in Z_n, and a finite cyclic ring keeps exhaustive search
/// feasible. A different commutative ring would need its own element type
/// with the same arithmetic surface (add/sub/mul/neg/inverse/units).
class ModularRing {
 public:
  explicit ModularRing(std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return modulus_; }

  /// Canonical residue of an arbitrary integer.
  RingElement element(std::int64_t value) const;
  RingElement zero() const;
  RingElement one() const;

  /// All units in ascending residue order.
  std::vector<RingElement> units() const;
  bool is_unit(std::uint64_t residue) const;

  // Raw residue arithmetic for hot loops; inputs must already be canonical.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return s >= modulus_ ? s - modulus_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + modulus_ - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>((static_cast<detail::uint128>(a) * b) % modulus_);
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : modulus_ - a; }
  /// Inverse by extended Euclid; throws NotInvertible for non-units.
  std::uint64_t inverse(std::uint64_t a) const;
  /// a^e, negative exponents through the inverse.
  std::uint64_t pow(std::uint64_t a, std::int64_t e) const;

  friend bool operator==(const ModularRing&, const ModularRing&) = default;

 private:
  std::uint64_t modulus_;
};

/// A canonical residue bound to its ring. Immutable value type.
class RingElement {
 public:
  RingElement(const ModularRing& ring, std::uint64_t residue);

  std::uint64_t value() const noexcept { return value_; }
  ModularRing ring() const { return ModularRing(modulus_); }
  std::uint64_t modulus() const noexcept { return modulus_; }

  RingElement operator+(const RingElement& rhs) const;
  RingElement operator-(const RingElement& rhs) const;
  RingElement operator*(const RingElement& rhs) const;
  RingElement operator-() const;

  RingElement& operator+=(const RingElement& rhs) { return *this = *this + rhs; }
  RingElement& operator*=(const RingElement& rhs) { return *this = *this * rhs; }

  bool is_unit() const;
  /// Multiplicative inverse; throws NotInvertible when this is not a unit.
  RingElement inverse() const;
  RingElement pow(std::int64_t exponent) const;

  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;

 private:
  void require_same_ring(const RingElement& rhs) const;

  std::uint64_t modulus_;
  std::uint64_t value_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& e);

enum class ArithOp { Add, Sub, Mul, Neg };

/// Dispatching form of the four ring operations; `b` is ignored for Neg.
RingElement arith(const RingElement& a, const RingElement& b, ArithOp op);

/// Free-function spelling of RingElement::inverse.
inline RingElement unit_inverse(const RingElement& a) { return a.inverse(); }

}  // namespace kaestner
