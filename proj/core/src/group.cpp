#include "upinv/group.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "upinv/errors.hpp"

namespace upinv {

MatrixGroup MatrixGroup::closure(PrimeModulus p, std::vector<Matrix3> generators, std::size_t cap) {
  for (const auto& g : generators) {
    require_same_modulus(p, g.modulus());
    if (g.determinant().is_zero()) {
      throw Error(ErrorCode::SingularGenerator, "generator " + to_string(g) + " is singular");
    }
  }
  const auto e = Matrix3::identity(p);
  std::unordered_set<Matrix3, Matrix3Hash> seen{e};
  std::vector<Matrix3> elements{e};
  std::deque<Matrix3> queue{e};
  while (!queue.empty()) {
    const Matrix3 cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Matrix3 next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw Error(ErrorCode::CapExceeded,
                      "closure exceeds " + std::to_string(cap) + " elements");
        }
        elements.push_back(next);
        queue.push_back(next);
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return MatrixGroup(p, std::move(generators), std::move(elements));
}

MatrixGroup MatrixGroup::from_elements(PrimeModulus p, std::vector<Matrix3> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!std::binary_search(elements.begin(), elements.end(), Matrix3::identity(p))) {
    throw Error(ErrorCode::InvalidArgument, "element list lacks the identity");
  }
  for (const auto& a : elements) require_same_modulus(p, a.modulus());
  // The closure of the chosen generators equals the input exactly when the
  // input is closed under products.
  std::vector<Matrix3> gens;
  MatrixGroup span = closure(p, {});
  try {
    for (const auto& m : elements) {
      if (span.contains(m)) continue;
      gens.push_back(m);
      span = closure(p, gens, elements.size());
    }
  } catch (const Error& err) {
    if (err.code() != ErrorCode::CapExceeded) throw;
    throw Error(ErrorCode::InvalidArgument, "element list is not closed under products");
  }
  if (span.elements() != elements) {
    throw Error(ErrorCode::InvalidArgument, "element list is not closed under products");
  }
  return MatrixGroup(p, std::move(gens), std::move(elements));
}

bool MatrixGroup::contains(const Matrix3& m) const {
  return std::binary_search(elements_.begin(), elements_.end(), m);
}

bool MatrixGroup::is_upper_triangular() const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [](const Matrix3& m) { return m.is_upper_triangular(); });
}

std::string_view to_string(ReflectionType t) noexcept {
  switch (t) {
    case ReflectionType::Identity: return "Identity";
    case ReflectionType::Homology: return "Homology";
    case ReflectionType::Transvection: return "Transvection";
    case ReflectionType::NotPseudoreflection: return "NotPseudoreflection";
  }
  return "?";
}

std::string_view to_string(TriangularKind k) noexcept {
  switch (k) {
    case TriangularKind::Horizontal: return "Horizontal";
    case TriangularKind::Vertical: return "Vertical";
    case TriangularKind::Mixed: return "Mixed";
    case TriangularKind::Corner: return "Corner";
    case TriangularKind::NotApplicable: return "NotApplicable";
  }
  return "?";
}

namespace {

bool horizontal_shape(const Matrix3& m) {
  return m.raw(1, 0) == 0 && m.raw(1, 1) == 1 && m.raw(1, 2) == 0 &&
         m.raw(2, 0) == 0 && m.raw(2, 1) == 0 && m.raw(2, 2) == 1;
}

bool vertical_shape(const Matrix3& m) {
  return m.raw(0, 0) == 1 && m.raw(1, 0) == 0 && m.raw(2, 0) == 0 &&
         m.raw(0, 1) == 0 && m.raw(1, 1) == 1 && m.raw(2, 1) == 0;
}

// [[1,(l-1)b,ab],[0,l,a],[0,0,1]] for some l != 0 and a, b.
bool mixed_shape(const Matrix3& m) {
  const auto p = m.modulus();
  if (!m.is_upper_triangular() || m.raw(0, 0) != 1 || m.raw(2, 2) != 1) return false;
  const std::uint32_t l = m.raw(1, 1), a = m.raw(1, 2);
  if (l == 1) {
    // (l-1)b = 0, so the shape is [[1,0,ab],[0,1,a],[0,0,1]].
    return m.raw(0, 1) == 0 && (a != 0 || m.raw(0, 2) == 0);
  }
  const std::uint32_t b = p.mul(m.raw(0, 1), p.inv(p.sub(l, 1)));
  return m.raw(0, 2) == p.mul(a, b);
}

}  // namespace

ReflectionClass classify(const Matrix3& m) {
  const auto e = Matrix3::identity(m.modulus());
  if (m == e) return {ReflectionType::Identity, TriangularKind::NotApplicable};
  const Matrix3 n = m - e;
  if (rank(n) != 1) return {ReflectionType::NotPseudoreflection, TriangularKind::NotApplicable};
  const bool nilpotent = (n * n) == Matrix3::zero(m.modulus());
  const auto type = nilpotent ? ReflectionType::Transvection : ReflectionType::Homology;
  if (!m.is_upper_triangular()) return {type, TriangularKind::NotApplicable};
  const bool h = horizontal_shape(m), v = vertical_shape(m);
  if (h && v) return {type, TriangularKind::Corner};
  if (h) return {type, TriangularKind::Horizontal};
  if (v) return {type, TriangularKind::Vertical};
  if (mixed_shape(m)) return {type, TriangularKind::Mixed};
  return {type, TriangularKind::NotApplicable};
}

MatrixGroup unipotent_subgroup(const MatrixGroup& g) {
  if (!g.is_upper_triangular()) {
    throw Error(ErrorCode::NotUpperTriangular, "unipotent subgroup needs an upper-triangular group");
  }
  std::vector<Matrix3> h;
  for (const auto& m : g.elements()) {
    if (m.is_unipotent_upper()) h.push_back(m);
  }
  return MatrixGroup::from_elements(g.modulus(), std::move(h));
}

bool is_abelian(const MatrixGroup& g) {
  const auto& el = g.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (!(el[i] * el[j] == el[j] * el[i])) return false;
    }
  }
  return true;
}

MatrixGroup pseudoreflection_subgroup(const MatrixGroup& g) {
  std::vector<Matrix3> gens;
  for (const auto& m : g.elements()) {
    if (is_pseudoreflection(m)) gens.push_back(m);
  }
  return MatrixGroup::closure(g.modulus(), std::move(gens));
}

MatrixGroup transvection_subgroup(const MatrixGroup& g) {
  std::vector<Matrix3> gens;
  for (const auto& m : g.elements()) {
    if (classify(m).type == ReflectionType::Transvection) gens.push_back(m);
  }
  return MatrixGroup::closure(g.modulus(), std::move(gens));
}

bool is_normal_subgroup(const MatrixGroup& h, const MatrixGroup& g) {
  for (const auto& x : g.elements()) {
    const Matrix3 xi = mat_inverse(x);
    for (const auto& y : h.generators()) {
      if (!h.contains(x * y * xi)) return false;
    }
  }
  return true;
}

}  // namespace upinv
