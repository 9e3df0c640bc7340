#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "upinv/polynomial.hpp"

namespace upinv {

/// Basic invariants of A = <sigma(s, c_i)>, with c = c_1 and x' = x + ((s-c)/2) y:
///   z,  y(cz - y) + 2x'z,  EN_A(x')  (degrees 1, 2, |A|/2).
std::array<Polynomial, 3> construct_A_invariants(PrimeModulus p, std::int64_t s,
                                                 std::span<const std::int64_t> c);

/// Basic invariants of the corner-transvection group B:  z,  y,  EN_B(x').
/// B only moves x by multiples of z, so any shift x' = x + ((s-c)/2) y works;
/// s = c = 0 gives x' = x.
std::array<Polynomial, 3> construct_B_invariants(PrimeModulus p, std::span<const std::int64_t> b,
                                                 std::int64_t s = 0, std::int64_t c = 0);

/// Basic invariants of <B, sigma(s, c)>:  z,  y(cz - y),  EN_B(x').
std::array<Polynomial, 3> construct_B_sigma_invariants(PrimeModulus p, std::int64_t s, std::int64_t c,
                                                       std::span<const std::int64_t> b);

/// y(cz - y) + 2x'z.
Polynomial quadratic_A_invariant(PrimeModulus p, std::int64_t s, std::int64_t c);

}  // namespace upinv
