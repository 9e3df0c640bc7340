#include "upinv/field.hpp"

#include <ostream>
#include <string>

#include "upinv/errors.hpp"

namespace upinv {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::SingularGenerator: return "SingularGenerator";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotUpperTriangular: return "NotUpperTriangular";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

PrimeModulus::PrimeModulus(std::int64_t p) {
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  // The upper bound keeps sums of two residues inside 32 bits.
  if (p > (std::int64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidModulus, std::to_string(p) + " is not an odd prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeModulus::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeModulus::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeModulus::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error(ErrorCode::ZeroInverse, "0 has no inverse mod " + std::to_string(p_));
  // Extended Euclid on signed 64-bit values.
  std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return reduce(t0);
}

void require_same_modulus(PrimeModulus a, PrimeModulus b) {
  if (!(a == b)) {
    throw Error(ErrorCode::ModulusMismatch,
                "moduli " + std::to_string(a.value()) + " and " + std::to_string(b.value()));
  }
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a.mod_, b.mod_);
  return FieldElement::raw(a.mod_, a.mod_.add(a.value_, b.value_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a.mod_, b.mod_);
  return FieldElement::raw(a.mod_, a.mod_.sub(a.value_, b.value_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a.mod_, b.mod_);
  return FieldElement::raw(a.mod_, a.mod_.mul(a.value_, b.value_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a.mod_, b.mod_);
  return FieldElement::raw(a.mod_, a.mod_.mul(a.value_, a.mod_.inv(b.value_)));
}

FieldElement inverse(const FieldElement& a) {
  return FieldElement::raw(a.modulus(), a.modulus().inv(a.value()));
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value(); }

}  // namespace upinv
