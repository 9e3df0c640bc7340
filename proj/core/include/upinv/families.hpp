#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "upinv/group.hpp"
#include "upinv/polynomial.hpp"

namespace upinv {

/// Mixed pseudoreflection with -1 in the middle, superdiagonal sum s:
///   [[1, s-c, c(c-s)/2], [0, -1, c], [0, 0, 1]].
Matrix3 construct_sigma(PrimeModulus p, std::int64_t s, std::int64_t c);

/// Corner transvection [[1,0,b],[0,1,0],[0,0,1]].
Matrix3 corner_transvection(PrimeModulus p, std::int64_t b);

/// Additive subgroup of F_p generated by `values` (sorted residues).
std::vector<std::uint32_t> additive_span(PrimeModulus p, std::span<const std::int64_t> values);

/// Additive subgroup generated by the pairwise differences of `c`.
std::vector<std::uint32_t> difference_group(PrimeModulus p, std::span<const std::int64_t> c);

/// Group generated by sigma(s, c_i). Its order must be 2 |K| where K is the
/// difference group of the c_i; otherwise Error(OrderMismatch).
MatrixGroup construct_A(PrimeModulus p, std::int64_t s, std::span<const std::int64_t> c);

/// Group generated by corner transvections with top-right entries b_i;
/// elementary abelian of order p^l, l = dim span(b_i).
MatrixGroup construct_B(PrimeModulus p, std::span<const std::int64_t> b);

/// <B, sigma(s, c)>.
MatrixGroup construct_B_sigma(PrimeModulus p, std::int64_t s, std::int64_t c,
                              std::span<const std::int64_t> b);

/// The three generators of the dihedral-times-cyclic counterexample:
///   [[1,1,0],[0,-1,0],[0,0,1]], [[1,0,0],[0,-1,1],[0,0,1]], [[1,0,1],[0,1,0],[0,0,1]].
std::vector<Matrix3> example_generators(PrimeModulus p);
MatrixGroup example_group(PrimeModulus p);

/// x' = x + ((s - c)/2) y as a degree-1 polynomial.
Polynomial shifted_x(PrimeModulus p, std::int64_t s, std::int64_t c);

}  // namespace upinv
