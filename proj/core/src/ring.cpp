#include "kaestner/ring.hpp"

#include <numeric>
#include <string>

namespace kaestner {

ModularRing::ModularRing(std::uint64_t modulus) : modulus_(modulus) {
  if (modulus < 2) {
    throw ValidationError("ring modulus must be at least 2, got " + std::to_string(modulus));
  }
}

RingElement ModularRing::element(std::int64_t value) const {
  const auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return RingElement(*this, static_cast<std::uint64_t>(r));
}

RingElement ModularRing::zero() const { return RingElement(*this, 0); }
RingElement ModularRing::one() const { return RingElement(*this, 1); }

bool ModularRing::is_unit(std::uint64_t residue) const {
  return std::gcd(residue % modulus_, modulus_) == 1;
}

std::vector<RingElement> ModularRing::units() const {
  std::vector<RingElement> out;
  for (std::uint64_t r = 1; r < modulus_; ++r) {
    if (is_unit(r)) out.emplace_back(*this, r);
  }
  return out;
}

std::uint64_t ModularRing::inverse(std::uint64_t a) const {
  // Extended Euclid on signed 128-bit to stay exact for any 64-bit modulus.
  detail::int128 old_r = static_cast<detail::int128>(a % modulus_);
  detail::int128 r = static_cast<detail::int128>(modulus_);
  detail::int128 old_s = 1;
  detail::int128 s = 0;
  while (r != 0) {
    const detail::int128 q = old_r / r;
    const detail::int128 tr = old_r - q * r;
    old_r = r;
    r = tr;
    const detail::int128 ts = old_s - q * s;
    old_s = s;
    s = ts;
  }
  if (old_r != 1) {
    throw NotInvertible(std::to_string(a % modulus_) + " is not invertible in Z" +
                        std::to_string(modulus_));
  }
  detail::int128 inv = old_s % static_cast<detail::int128>(modulus_);
  if (inv < 0) inv += modulus_;
  return static_cast<std::uint64_t>(inv);
}

std::uint64_t ModularRing::pow(std::uint64_t a, std::int64_t e) const {
  std::uint64_t base = a % modulus_;
  if (e < 0) {
    base = inverse(base);
    // -INT64_MIN overflows; split off one factor first.
    e = -(e + 1);
    std::uint64_t result = base;
    std::uint64_t b = base;
    auto k = static_cast<std::uint64_t>(e);
    while (k) {
      if (k & 1) result = mul(result, b);
      b = mul(b, b);
      k >>= 1;
    }
    return result;
  }
  std::uint64_t result = 1 % modulus_;
  auto k = static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

RingElement::RingElement(const ModularRing& ring, std::uint64_t residue)
    : modulus_(ring.modulus()), value_(residue % ring.modulus()) {}

void RingElement::require_same_ring(const RingElement& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw RingMismatch("arithmetic between Z" + std::to_string(modulus_) + " and Z" +
                       std::to_string(rhs.modulus_));
  }
}

RingElement RingElement::operator+(const RingElement& rhs) const {
  require_same_ring(rhs);
  const ModularRing r(modulus_);
  return RingElement(r, r.add(value_, rhs.value_));
}

RingElement RingElement::operator-(const RingElement& rhs) const {
  require_same_ring(rhs);
  const ModularRing r(modulus_);
  return RingElement(r, r.sub(value_, rhs.value_));
}

RingElement RingElement::operator*(const RingElement& rhs) const {
  require_same_ring(rhs);
  const ModularRing r(modulus_);
  return RingElement(r, r.mul(value_, rhs.value_));
}

RingElement RingElement::operator-() const {
  const ModularRing r(modulus_);
  return RingElement(r, r.neg(value_));
}

bool RingElement::is_unit() const { return ModularRing(modulus_).is_unit(value_); }

RingElement RingElement::inverse() const {
  const ModularRing r(modulus_);
  return RingElement(r, r.inverse(value_));
}

RingElement RingElement::pow(std::int64_t exponent) const {
  const ModularRing r(modulus_);
  return RingElement(r, r.pow(value_, exponent));
}

std::ostream& operator<<(std::ostream& os, const RingElement& e) { return os << e.value(); }

RingElement arith(const RingElement& a, const RingElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
    case ArithOp::Neg:
      return -a;
  }
  return a;
}

}  // namespace kaestner
