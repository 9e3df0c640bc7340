#pragma once

#include <cstdint>
#include <iosfwd>

namespace upinv {

/// An odd prime p. Construction rejects p = 2 (several constructions divide
/// by 2) and anything that is not prime.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::int64_t p);

  std::uint32_t value() const noexcept { return p_; }

  // Raw residue arithmetic; operands are assumed to lie in [0, p).
  std::uint32_t reduce(std::int64_t v) const noexcept;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Throws Error(ZeroInverse) for a = 0.
  std::uint32_t inv(std::uint32_t a) const;

  bool operator==(const PrimeModulus&) const = default;

 private:
  std::uint32_t p_;
};

/// A residue in [0, p) tagged with its modulus.
class FieldElement {
 public:
  FieldElement(PrimeModulus p, std::int64_t v) : mod_(p), value_(p.reduce(v)) {}

  static FieldElement zero(PrimeModulus p) { return {p, 0}; }
  static FieldElement one(PrimeModulus p) { return {p, 1}; }

  std::uint32_t value() const noexcept { return value_; }
  PrimeModulus modulus() const noexcept { return mod_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator-() const { return raw(mod_, mod_.neg(value_)); }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  bool operator==(const FieldElement&) const = default;

  static FieldElement raw(PrimeModulus p, std::uint32_t residue) {
    FieldElement e(p, 0);
    e.value_ = residue;
    return e;
  }

 private:
  PrimeModulus mod_;
  std::uint32_t value_;
};

FieldElement inverse(const FieldElement& a);

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

/// Throws Error(ModulusMismatch) unless a == b.
void require_same_modulus(PrimeModulus a, PrimeModulus b);

}  // namespace upinv
