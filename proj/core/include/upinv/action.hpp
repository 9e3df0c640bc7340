#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "upinv/group.hpp"
#include "upinv/polynomial.hpp"

namespace upinv {

/// Left action on polynomials: (g . f)(v) = f(g^-1 v). Throws Singular.
Polynomial apply(const Matrix3& g, const Polynomial& f);

/// g . f = f for every generator, which suffices by the action law.
bool is_invariant(const MatrixGroup& g, const Polynomial& f);

/// {h in g : h . f = f}.
MatrixGroup stabilizer(const MatrixGroup& g, const Polynomial& f);

struct OrbitData {
  Polynomial base;
  std::size_t stabilizer_order = 0;
  /// One representative per left coset h St(f), in traversal order.
  std::vector<Matrix3> coset_reps;
  /// rep . base for each representative; these are the distinct orbit elements.
  std::vector<Polynomial> images;
};

/// Orbit of f, picking the first element met in `traversal` as the
/// representative of its coset. `traversal` must list every element of g.
OrbitData orbit(const MatrixGroup& g, const Polynomial& f, std::span<const Matrix3> traversal);
/// Traversal in canonical element order, so each representative is the
/// least element of its coset.
OrbitData orbit(const MatrixGroup& g, const Polynomial& f);

/// Product of the orbit of f over cosets of its stabilizer. Always invariant;
/// degree deg(f) * |G| / |St_G(f)|.
Polynomial effective_norm(const MatrixGroup& g, const Polynomial& f);
Polynomial effective_norm(const OrbitData& orbit);

}  // namespace upinv
