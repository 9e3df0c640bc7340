#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "upinv/field.hpp"
#include "upinv/matrix.hpp"

namespace upinv {

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// A finite subgroup of GL_3(F_p): the generators it was built from plus the
/// full, deduplicated element list sorted lexicographically by entries.
class MatrixGroup {
 public:
  /// Breadth-first product closure of `generators`. Throws SingularGenerator
  /// for a non-invertible generator and CapExceeded past `cap` elements.
  static MatrixGroup closure(PrimeModulus p, std::vector<Matrix3> generators,
                             std::size_t cap = kDefaultClosureCap);
  /// Wraps an explicit element list after checking that it is a group.
  /// A small generating subset is chosen greedily in canonical order.
  static MatrixGroup from_elements(PrimeModulus p, std::vector<Matrix3> elements);

  PrimeModulus modulus() const noexcept { return mod_; }
  const std::vector<Matrix3>& generators() const noexcept { return generators_; }
  const std::vector<Matrix3>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }

  bool contains(const Matrix3& m) const;
  bool is_upper_triangular() const;
  /// Same element set.
  bool operator==(const MatrixGroup& o) const { return mod_ == o.mod_ && elements_ == o.elements_; }

 private:
  MatrixGroup(PrimeModulus p, std::vector<Matrix3> gens, std::vector<Matrix3> elems)
      : mod_(p), generators_(std::move(gens)), elements_(std::move(elems)) {}

  PrimeModulus mod_;
  std::vector<Matrix3> generators_;
  std::vector<Matrix3> elements_;
};

enum class ReflectionType { Identity, Homology, Transvection, NotPseudoreflection };

/// Shapes of upper-triangular pseudoreflections in dimension 3:
///   Horizontal [[l,a,b],[0,1,0],[0,0,1]]
///   Vertical   [[1,0,b],[0,1,a],[0,0,l]]
///   Mixed      [[1,(l-1)b,ab],[0,l,a],[0,0,1]]
///   Corner     both horizontal and vertical, i.e. [[1,0,b],[0,1,0],[0,0,1]]
enum class TriangularKind { Horizontal, Vertical, Mixed, Corner, NotApplicable };

struct ReflectionClass {
  ReflectionType type;
  TriangularKind kind;
  bool operator==(const ReflectionClass&) const = default;
};

std::string_view to_string(ReflectionType t) noexcept;
std::string_view to_string(TriangularKind k) noexcept;

/// Identity for E; Homology/Transvection when rank(m - E) = 1, split by
/// whether (m - E)^2 vanishes. The shape is reported only for upper-triangular
/// pseudoreflections.
ReflectionClass classify(const Matrix3& m);

inline bool is_pseudoreflection(const Matrix3& m) {
  const auto t = classify(m).type;
  return t == ReflectionType::Homology || t == ReflectionType::Transvection;
}

/// Elements with diagonal (1, 1, 1). Throws NotUpperTriangular.
MatrixGroup unipotent_subgroup(const MatrixGroup& g);

bool is_abelian(const MatrixGroup& g);

/// Subgroup generated by every non-identity pseudoreflection in g.
MatrixGroup pseudoreflection_subgroup(const MatrixGroup& g);

/// Subgroup generated by the transvections in g.
MatrixGroup transvection_subgroup(const MatrixGroup& g);

/// Whether h is normal in g (h must be a subgroup of g).
bool is_normal_subgroup(const MatrixGroup& h, const MatrixGroup& g);

}  // namespace upinv
