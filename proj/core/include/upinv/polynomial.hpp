#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "upinv/field.hpp"
#include "upinv/matrix.hpp"

namespace upinv {

enum class Var : std::size_t { X = 0, Y = 1, Z = 2 };

/// x^a y^b z^c.
struct Monomial {
  std::array<std::uint32_t, 3> exps{};

  static Monomial one() { return {}; }
  static Monomial of(Var v, std::uint32_t e = 1) {
    Monomial m;
    m.exps[static_cast<std::size_t>(v)] = e;
    return m;
  }

  std::uint32_t degree() const noexcept { return exps[0] + exps[1] + exps[2]; }
  Monomial operator*(const Monomial& o) const noexcept {
    return {{exps[0] + o.exps[0], exps[1] + o.exps[1], exps[2] + o.exps[2]}};
  }
  bool operator==(const Monomial&) const = default;
};

/// Canonical term order: higher total degree first, ties broken
/// lexicographically with x > y > z. `before(a, b)` means a prints first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.exps > b.exps;
  }
};

/// All C(d+2, 2) monomials of degree d in canonical order.
std::vector<Monomial> monomial_basis(std::uint32_t d);
/// Position of m inside monomial_basis(m.degree()).
std::size_t monomial_index(const Monomial& m) noexcept;
inline std::size_t monomial_count(std::uint32_t d) noexcept {
  return static_cast<std::size_t>(d + 1) * (d + 2) / 2;
}

/// Sparse polynomial in x, y, z over F_p. No zero coefficients are stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, std::uint32_t, MonomialOrder>;

  explicit Polynomial(PrimeModulus p) : mod_(p) {}

  static Polynomial constant(PrimeModulus p, std::int64_t c);
  static Polynomial variable(PrimeModulus p, Var v);
  static Polynomial term(PrimeModulus p, std::int64_t c, const Monomial& m);
  /// a*x + b*y + c*z.
  static Polynomial linear(PrimeModulus p, std::int64_t a, std::int64_t b, std::int64_t c);
  /// Homogeneous polynomial of degree d from a coefficient vector over monomial_basis(d).
  static Polynomial from_dense(PrimeModulus p, std::uint32_t d, std::span<const std::uint32_t> coeffs);

  PrimeModulus modulus() const noexcept { return mod_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  /// Nonzero and every term of the same degree.
  bool is_homogeneous() const noexcept;
  std::uint32_t coefficient(const Monomial& m) const noexcept;
  /// Largest power of v occurring in any term.
  std::uint32_t degree_in(Var v) const noexcept;

  /// Adds c*m in place.
  void add_term(const Monomial& m, std::uint32_t c);

  Polynomial homogeneous_part(std::uint32_t d) const;
  /// Coefficients of the degree-d part over monomial_basis(d).
  std::vector<std::uint32_t> dense(std::uint32_t d) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);
  Polynomial scaled(std::uint32_t c) const;
  /// Exponentiation by squaring.
  Polynomial pow(std::uint64_t e) const;

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  bool operator==(const Polynomial& o) const { return mod_ == o.mod_ && terms_ == o.terms_; }

 private:
  PrimeModulus mod_;
  Terms terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

/// f(m . v): variable i is replaced by the i-th row of m applied to (x, y, z).
Polynomial substitute_linear(const Polynomial& f, const Matrix3& m);

FieldElement evaluate(const Polynomial& f, const std::array<FieldElement, 3>& point);

/// Canonical text form, e.g. "2*x*z + 2*y^2"; terms in MonomialOrder,
/// coefficients as residues in [1, p), unit coefficients omitted.
std::string render(const Polynomial& f);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace upinv
