#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>

#include "upinv/field.hpp"

namespace upinv {

/// A 3x3 matrix over F_p, stored row-major as canonical residues.
class Matrix3 {
 public:
  using Entries = std::array<std::uint32_t, 9>;

  /// Integer entries are normalized mod p (negative values included).
  Matrix3(PrimeModulus p, const std::array<std::int64_t, 9>& entries);
  Matrix3(PrimeModulus p, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Matrix3 identity(PrimeModulus p);
  static Matrix3 zero(PrimeModulus p);
  static Matrix3 from_residues(PrimeModulus p, const Entries& residues);

  PrimeModulus modulus() const noexcept { return mod_; }
  const Entries& residues() const noexcept { return e_; }
  std::uint32_t raw(std::size_t r, std::size_t c) const noexcept { return e_[3 * r + c]; }
  FieldElement at(std::size_t r, std::size_t c) const { return FieldElement::raw(mod_, raw(r, c)); }

  bool is_identity() const noexcept;
  bool is_upper_triangular() const noexcept;
  /// Upper triangular with all-ones diagonal.
  bool is_unipotent_upper() const noexcept;

  FieldElement determinant() const;

  bool operator==(const Matrix3& other) const noexcept {
    return mod_ == other.mod_ && e_ == other.e_;
  }
  /// Lexicographic on the nine residues; matrices over different moduli order by p.
  std::strong_ordering operator<=>(const Matrix3& other) const noexcept {
    if (auto c = mod_.value() <=> other.mod_.value(); c != 0) return c;
    return e_ <=> other.e_;
  }

 private:
  Matrix3(PrimeModulus p, const Entries& residues, int) : mod_(p), e_(residues) {}

  PrimeModulus mod_;
  Entries e_;
};

Matrix3 mat_mul(const Matrix3& a, const Matrix3& b);
Matrix3 mat_sub(const Matrix3& a, const Matrix3& b);
/// Throws Error(Singular) when det(m) = 0.
Matrix3 mat_inverse(const Matrix3& m);
/// Row rank over F_p.
int rank(const Matrix3& m);

inline Matrix3 operator*(const Matrix3& a, const Matrix3& b) { return mat_mul(a, b); }
inline Matrix3 operator-(const Matrix3& a, const Matrix3& b) { return mat_sub(a, b); }

/// Multiplicative order of an invertible matrix (smallest k >= 1 with m^k = E).
std::uint64_t element_order(const Matrix3& m);

/// Renders as [[a,b,c],[d,e,f],[g,h,i]] with canonical residues.
std::string to_string(const Matrix3& m);
std::ostream& operator<<(std::ostream& os, const Matrix3& m);

struct Matrix3Hash {
  std::size_t operator()(const Matrix3& m) const noexcept {
    std::size_t h = m.modulus().value();
    for (auto v : m.residues()) h = h * 1000003u ^ v;
    return h;
  }
};

}  // namespace upinv
