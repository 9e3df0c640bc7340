#pragma once

// Independent reference computations used only by tests. None of these call
// the code path they are used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "upinv/group.hpp"
#include "upinv/polynomial.hpp"

namespace upinv::oracle {

inline std::uint32_t brute_inverse(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t b = 1; b < p; ++b) {
    if (static_cast<std::uint64_t>(a) * b % p == 1) return b;
  }
  return 0;
}

// Schoolbook product straight from the definition, on raw residues.
inline Matrix3 naive_product(const Matrix3& a, const Matrix3& b) {
  const std::int64_t p = a.modulus().value();
  std::array<std::int64_t, 9> e{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      std::int64_t s = 0;
      for (int k = 0; k < 3; ++k) s += static_cast<std::int64_t>(a.raw(r, k)) * b.raw(k, c);
      e[3 * r + c] = s % p;
    }
  return Matrix3(a.modulus(), e);
}

// Closure by repeatedly multiplying every pair until nothing new appears.
inline std::set<Matrix3> pairwise_closure(PrimeModulus p, const std::vector<Matrix3>& gens) {
  std::set<Matrix3> s{Matrix3::identity(p)};
  s.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Matrix3> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (s.insert(naive_product(a, b)).second) grew = true;
  }
  return s;
}

// v -> m v on raw vectors.
inline std::array<std::uint32_t, 3> mat_vec(const Matrix3& m, const std::array<std::uint32_t, 3>& v) {
  const std::uint64_t p = m.modulus().value();
  std::array<std::uint32_t, 3> out{};
  for (int r = 0; r < 3; ++r) {
    std::uint64_t s = 0;
    for (int c = 0; c < 3; ++c) s += static_cast<std::uint64_t>(m.raw(r, c)) * v[c];
    out[r] = static_cast<std::uint32_t>(s % p);
  }
  return out;
}

// dim ker(m - E) by counting fixed vectors of F_p^3.
inline int fixed_space_dim(const Matrix3& m) {
  const std::uint32_t p = m.modulus().value();
  std::size_t fixed = 0;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        if (mat_vec(m, {a, b, c}) == std::array<std::uint32_t, 3>{a, b, c}) ++fixed;
  int d = 0;
  for (std::size_t q = 1; q < fixed; q *= p) ++d;
  return d;
}

// dim ker(m) by counting solutions of m v = 0.
inline int kernel_dim(const Matrix3& m) {
  const std::uint32_t p = m.modulus().value();
  std::size_t zeros = 0;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        if (mat_vec(m, {a, b, c}) == std::array<std::uint32_t, 3>{0, 0, 0}) ++zeros;
  int d = 0;
  for (std::size_t q = 1; q < zeros; q *= p) ++d;
  return d;
}

// (m - E)^2 v = 0 for every v.
inline bool square_of_difference_vanishes(const Matrix3& m) {
  const std::uint32_t p = m.modulus().value();
  auto minus_id = [&](const std::array<std::uint32_t, 3>& v) {
    auto w = mat_vec(m, v);
    for (int i = 0; i < 3; ++i) w[i] = (w[i] + p - v[i]) % p;
    return w;
  };
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        if (minus_id(minus_id({a, b, c})) != std::array<std::uint32_t, 3>{0, 0, 0}) return false;
  return true;
}

// f(m v) by replacing each variable with its linear form and multiplying out
// term by term (no powers shared, no elementary factorization).
inline Polynomial expand_substitution(const Polynomial& f, const Matrix3& m) {
  const auto p = f.modulus();
  std::array<Polynomial, 3> forms{Polynomial(p), Polynomial(p), Polynomial(p)};
  for (int i = 0; i < 3; ++i) forms[i] = Polynomial::linear(p, m.raw(i, 0), m.raw(i, 1), m.raw(i, 2));
  Polynomial out(p);
  for (const auto& [mono, c] : f.terms()) {
    Polynomial t = Polynomial::constant(p, c);
    for (int i = 0; i < 3; ++i)
      for (std::uint32_t k = 0; k < mono.exps[i]; ++k) t = t * forms[i];
    out += t;
  }
  return out;
}

// Coefficient of t^d in prod 1/(1 - t^{d_i}): count (a, b, c) with a d1 + b d2 + c d3 = d.
inline std::size_t count_weighted(const std::array<std::uint32_t, 3>& w, std::uint32_t d) {
  std::size_t n = 0;
  for (std::uint32_t a = 0; a * w[0] <= d; ++a)
    for (std::uint32_t b = 0; a * w[0] + b * w[1] <= d; ++b)
      if ((d - a * w[0] - b * w[1]) % w[2] == 0) ++n;
  return n;
}

inline bool invariant_under_all(const MatrixGroup& g, const Polynomial& f) {
  for (const auto& h : g.elements()) {
    // h . f = f(h^-1 v); check f(h^-1 v) = f(v) via the expansion oracle.
    const auto hi = [&] {
      for (const auto& k : g.elements())
        if (naive_product(h, k).is_identity()) return k;
      return h;
    }();
    if (!(expand_substitution(f, hi) == f)) return false;
  }
  return true;
}

inline Polynomial random_poly(std::mt19937_64& rng, PrimeModulus p, std::uint32_t max_deg, int terms) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, p.value() - 1);
  std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
  Polynomial f(p);
  for (int i = 0; i < terms; ++i) {
    const std::uint32_t d = deg(rng);
    std::uniform_int_distribution<std::uint32_t> a(0, d);
    const std::uint32_t ex = a(rng);
    std::uniform_int_distribution<std::uint32_t> b(0, d - ex);
    const std::uint32_t ey = b(rng);
    f.add_term({{ex, ey, d - ex - ey}}, coeff(rng));
  }
  return f;
}

inline Polynomial random_homogeneous(std::mt19937_64& rng, PrimeModulus p, std::uint32_t d) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, p.value() - 1);
  Polynomial f(p);
  while (f.is_zero()) {
    for (const auto& m : monomial_basis(d)) f.add_term(m, coeff(rng));
  }
  return f;
}

inline Matrix3 random_matrix(std::mt19937_64& rng, PrimeModulus p) {
  std::uniform_int_distribution<std::int64_t> e(0, p.value() - 1);
  std::array<std::int64_t, 9> v{};
  for (auto& x : v) x = e(rng);
  return Matrix3(p, v);
}

inline Matrix3 random_invertible(std::mt19937_64& rng, PrimeModulus p) {
  for (;;) {
    auto m = random_matrix(rng, p);
    if (!m.determinant().is_zero()) return m;
  }
}

inline Matrix3 random_upper_triangular(std::mt19937_64& rng, PrimeModulus p) {
  std::uniform_int_distribution<std::int64_t> e(0, p.value() - 1);
  std::uniform_int_distribution<std::int64_t> nz(1, p.value() - 1);
  return Matrix3(p, {{nz(rng), e(rng), e(rng)}, {0, nz(rng), e(rng)}, {0, 0, nz(rng)}});
}

}  // namespace upinv::oracle
