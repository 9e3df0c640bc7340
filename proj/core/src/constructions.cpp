#include "upinv/constructions.hpp"

#include "upinv/action.hpp"
#include "upinv/errors.hpp"
#include "upinv/families.hpp"

namespace upinv {

namespace {

// y(cz - y)
Polynomial y_times_cz_minus_y(PrimeModulus p, std::int64_t c) {
  return Polynomial::variable(p, Var::Y) * Polynomial::linear(p, 0, -1, c);
}

}  // namespace

Polynomial quadratic_A_invariant(PrimeModulus p, std::int64_t s, std::int64_t c) {
  const auto z = Polynomial::variable(p, Var::Z);
  return y_times_cz_minus_y(p, c) + (shifted_x(p, s, c) * z).scaled(2);
}

std::array<Polynomial, 3> construct_A_invariants(PrimeModulus p, std::int64_t s,
                                                 std::span<const std::int64_t> c) {
  if (c.empty()) throw Error(ErrorCode::InvalidArgument, "construct_A_invariants needs at least one c");
  const auto a = construct_A(p, s, c);
  return {Polynomial::variable(p, Var::Z), quadratic_A_invariant(p, s, c[0]),
          effective_norm(a, shifted_x(p, s, c[0]))};
}

std::array<Polynomial, 3> construct_B_invariants(PrimeModulus p, std::span<const std::int64_t> b,
                                                 std::int64_t s, std::int64_t c) {
  const auto group = construct_B(p, b);
  return {Polynomial::variable(p, Var::Z), Polynomial::variable(p, Var::Y),
          effective_norm(group, shifted_x(p, s, c))};
}

std::array<Polynomial, 3> construct_B_sigma_invariants(PrimeModulus p, std::int64_t s, std::int64_t c,
                                                       std::span<const std::int64_t> b) {
  const auto group = construct_B(p, b);
  return {Polynomial::variable(p, Var::Z), y_times_cz_minus_y(p, c),
          effective_norm(group, shifted_x(p, s, c))};
}

}  // namespace upinv
