#include "upinv/families.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "upinv/errors.hpp"

namespace upinv {

Matrix3 construct_sigma(PrimeModulus p, std::int64_t s, std::int64_t c) {
  const std::uint32_t sr = p.reduce(s), cr = p.reduce(c);
  const std::uint32_t half = p.inv(2);
  const std::uint32_t corner = p.mul(p.mul(cr, p.sub(cr, sr)), half);
  return Matrix3::from_residues(p, {1, p.sub(sr, cr), corner, 0, p.neg(1), cr, 0, 0, 1});
}

Matrix3 corner_transvection(PrimeModulus p, std::int64_t b) {
  return Matrix3(p, {{1, 0, b}, {0, 1, 0}, {0, 0, 1}});
}

std::vector<std::uint32_t> additive_span(PrimeModulus p, std::span<const std::int64_t> values) {
  std::set<std::uint32_t> span{0};
  std::vector<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    const std::uint32_t cur = frontier.back();
    frontier.pop_back();
    for (auto v : values) {
      const std::uint32_t next = p.add(cur, p.reduce(v));
      if (span.insert(next).second) frontier.push_back(next);
    }
  }
  return {span.begin(), span.end()};
}

std::vector<std::uint32_t> difference_group(PrimeModulus p, std::span<const std::int64_t> c) {
  std::vector<std::int64_t> diffs;
  for (auto a : c) {
    for (auto b : c) diffs.push_back(static_cast<std::int64_t>(p.sub(p.reduce(a), p.reduce(b))));
  }
  return additive_span(p, diffs);
}

MatrixGroup construct_A(PrimeModulus p, std::int64_t s, std::span<const std::int64_t> c) {
  if (c.empty()) throw Error(ErrorCode::InvalidArgument, "construct_A needs at least one c");
  std::vector<Matrix3> gens;
  for (auto ci : c) gens.push_back(construct_sigma(p, s, ci));
  auto group = MatrixGroup::closure(p, std::move(gens));
  const std::size_t expected = 2 * difference_group(p, c).size();
  if (group.order() != expected) {
    throw Error(ErrorCode::OrderMismatch, "closure has order " + std::to_string(group.order()) +
                                              ", expected " + std::to_string(expected));
  }
  return group;
}

MatrixGroup construct_B(PrimeModulus p, std::span<const std::int64_t> b) {
  std::vector<Matrix3> gens;
  for (auto bi : b) gens.push_back(corner_transvection(p, bi));
  return MatrixGroup::closure(p, std::move(gens));
}

MatrixGroup construct_B_sigma(PrimeModulus p, std::int64_t s, std::int64_t c,
                              std::span<const std::int64_t> b) {
  std::vector<Matrix3> gens;
  for (auto bi : b) gens.push_back(corner_transvection(p, bi));
  gens.push_back(construct_sigma(p, s, c));
  return MatrixGroup::closure(p, std::move(gens));
}

std::vector<Matrix3> example_generators(PrimeModulus p) {
  return {
      Matrix3(p, {{1, 1, 0}, {0, -1, 0}, {0, 0, 1}}),
      Matrix3(p, {{1, 0, 0}, {0, -1, 1}, {0, 0, 1}}),
      Matrix3(p, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}),
  };
}

MatrixGroup example_group(PrimeModulus p) { return MatrixGroup::closure(p, example_generators(p)); }

Polynomial shifted_x(PrimeModulus p, std::int64_t s, std::int64_t c) {
  const std::uint32_t coeff = p.mul(p.sub(p.reduce(s), p.reduce(c)), p.inv(2));
  return Polynomial::linear(p, 1, coeff, 0);
}

}  // namespace upinv
