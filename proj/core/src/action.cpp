#include "upinv/action.hpp"

#include <algorithm>
#include <set>

#include "upinv/errors.hpp"

namespace upinv {

namespace {

// Strict weak order on polynomials over one modulus, for orbit bookkeeping.
struct TermsLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const {
    return std::lexicographical_compare(
        a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
        [](const auto& l, const auto& r) {
          if (!(l.first == r.first)) return MonomialOrder{}(l.first, r.first);
          return l.second < r.second;
        });
  }
};

}  // namespace

Polynomial apply(const Matrix3& g, const Polynomial& f) {
  require_same_modulus(g.modulus(), f.modulus());
  if (g.is_identity()) return f;
  return substitute_linear(f, mat_inverse(g));
}

bool is_invariant(const MatrixGroup& g, const Polynomial& f) {
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [&](const Matrix3& h) { return apply(h, f) == f; });
}

MatrixGroup stabilizer(const MatrixGroup& g, const Polynomial& f) {
  std::vector<Matrix3> fixing;
  for (const auto& h : g.elements()) {
    if (apply(h, f) == f) fixing.push_back(h);
  }
  return MatrixGroup::from_elements(g.modulus(), std::move(fixing));
}

OrbitData orbit(const MatrixGroup& g, const Polynomial& f, std::span<const Matrix3> traversal) {
  require_same_modulus(g.modulus(), f.modulus());
  if (traversal.size() != g.order()) {
    throw Error(ErrorCode::InvalidArgument, "traversal must list every group element");
  }
  // h St(f) = h' St(f) iff h . f = h' . f, so cosets are keyed by their image.
  OrbitData out{f, 0, {}, {}};
  std::size_t fixing = 0;
  std::set<Polynomial, TermsLess> seen;
  for (const auto& h : traversal) {
    Polynomial image = apply(h, f);
    if (image == f) ++fixing;
    if (seen.insert(image).second) {
      out.coset_reps.push_back(h);
      out.images.push_back(std::move(image));
    }
  }
  out.stabilizer_order = fixing;
  return out;
}

OrbitData orbit(const MatrixGroup& g, const Polynomial& f) { return orbit(g, f, g.elements()); }

Polynomial effective_norm(const OrbitData& orbit) {
  Polynomial product = Polynomial::constant(orbit.base.modulus(), 1);
  for (const auto& image : orbit.images) product *= image;
  return product;
}

Polynomial effective_norm(const MatrixGroup& g, const Polynomial& f) { return effective_norm(orbit(g, f)); }

}  // namespace upinv
