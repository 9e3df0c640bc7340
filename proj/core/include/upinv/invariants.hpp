#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "upinv/group.hpp"
#include "upinv/polynomial.hpp"

namespace upinv {

/// Basis of the degree-d invariants: the common kernel of (h - id) over the
/// generators h, acting on degree-d forms. Returned in reduced echelon form
/// with respect to the canonical monomial order (monic, distinct leading terms).
std::vector<Polynomial> invariant_basis(const MatrixGroup& g, std::uint32_t d);
/// Same, for an explicit list of acting matrices.
std::vector<Polynomial> invariant_basis(PrimeModulus p, std::span<const Matrix3> acting, std::uint32_t d);

struct HilbertFunction {
  /// dims[d] = dimension of the degree-d invariants, d = 0..D.
  std::vector<std::size_t> dims;
  bool operator==(const HilbertFunction&) const = default;
};

HilbertFunction hilbert_function(const MatrixGroup& g, std::uint32_t max_degree);

/// Coefficients of prod_i 1/(1 - t^degrees[i]) up to t^max_degree.
std::vector<std::size_t> product_series(std::span<const std::uint32_t> degrees, std::uint32_t max_degree);

enum class HsopStatus { Certified, Unknown };

struct HsopCertificate {
  HsopStatus status = HsopStatus::Unknown;
  std::vector<Polynomial> polys;
  std::array<std::uint32_t, 3> degrees{};
  /// Least N with x^N, y^N, z^N in the ideal; empty when no N <= n_max works.
  std::array<std::optional<std::uint32_t>, 3> power_exponents;
  std::uint32_t n_max = 0;
  std::size_t group_order = 0;
  /// d1 d2 d3 = |G|.
  bool degree_product_ok = false;

  bool certified() const noexcept { return status == HsopStatus::Certified; }
  bool operator==(const HsopCertificate&) const = default;
};

/// Searches, for each variable v, the least N <= n_max with v^N in the ideal
/// generated by `polys` (a linear system in degree N). All three found means
/// the only common zero is the origin. n_max defaults to d1 + d2 + d3.
/// Throws NotHomogeneous or NotInvariant when the inputs are unfit.
HsopCertificate hsop_check(const MatrixGroup& g, const std::array<Polynomial, 3>& polys,
                           std::optional<std::uint32_t> n_max = std::nullopt);

/// Least N <= n_max with v^N in the homogeneous ideal of `polys`.
std::optional<std::uint32_t> power_membership_exponent(std::span<const Polynomial> polys, Var v,
                                                       std::uint32_t n_max);

struct FalsifierCandidate {
  std::array<std::uint32_t, 3> degrees{};
  /// First degree where the product series differs from the Hilbert function.
  std::optional<std::uint32_t> first_mismatch;

  bool survives() const noexcept { return !first_mismatch.has_value(); }
  bool operator==(const FalsifierCandidate&) const = default;
};

enum class FalsifierVerdict { NonPolynomialCertified, Inconclusive };

std::string_view to_string(FalsifierVerdict v) noexcept;
std::string_view to_string(HsopStatus s) noexcept;

struct FalsifierReport {
  std::size_t group_order = 0;
  std::uint32_t max_degree = 0;
  HilbertFunction hf;
  std::vector<FalsifierCandidate> candidates;
  FalsifierVerdict verdict = FalsifierVerdict::Inconclusive;

  bool operator==(const FalsifierReport&) const = default;
};

/// All degree triples d1 <= d2 <= d3 with product n.
std::vector<std::array<std::uint32_t, 3>> degree_triples(std::size_t n);

/// A polynomial invariant ring on three generators of degrees d_i forces
/// d1 d2 d3 = |G| and a Hilbert function equal to the product series. Every
/// triple that disagrees somewhere up to max_degree is ruled out.
FalsifierReport hilbert_falsify(const MatrixGroup& g, std::uint32_t max_degree);

}  // namespace upinv
