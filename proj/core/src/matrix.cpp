#include "upinv/matrix.hpp"

#include <ostream>
#include <sstream>

#include "upinv/errors.hpp"
#include "upinv/linalg.hpp"

namespace upinv {

Matrix3::Matrix3(PrimeModulus p, const std::array<std::int64_t, 9>& entries) : mod_(p), e_{} {
  for (std::size_t i = 0; i < 9; ++i) e_[i] = p.reduce(entries[i]);
}

Matrix3::Matrix3(PrimeModulus p, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : mod_(p), e_{} {
  if (rows.size() != 3) throw Error(ErrorCode::InvalidArgument, "matrix needs 3 rows");
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != 3) throw Error(ErrorCode::InvalidArgument, "matrix rows need 3 entries");
    std::size_t c = 0;
    for (auto v : row) e_[3 * r + c++] = p.reduce(v);
    ++r;
  }
}

Matrix3 Matrix3::identity(PrimeModulus p) { return Matrix3(p, Entries{1, 0, 0, 0, 1, 0, 0, 0, 1}, 0); }

Matrix3 Matrix3::zero(PrimeModulus p) { return Matrix3(p, Entries{}, 0); }

Matrix3 Matrix3::from_residues(PrimeModulus p, const Entries& residues) {
  Entries e{};
  for (std::size_t i = 0; i < 9; ++i) e[i] = residues[i] % p.value();
  return Matrix3(p, e, 0);
}

bool Matrix3::is_identity() const noexcept {
  return e_ == Entries{1, 0, 0, 0, 1, 0, 0, 0, 1};
}

bool Matrix3::is_upper_triangular() const noexcept {
  return raw(1, 0) == 0 && raw(2, 0) == 0 && raw(2, 1) == 0;
}

bool Matrix3::is_unipotent_upper() const noexcept {
  return is_upper_triangular() && raw(0, 0) == 1 && raw(1, 1) == 1 && raw(2, 2) == 1;
}

FieldElement Matrix3::determinant() const {
  const auto& p = mod_;
  auto minor = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return p.sub(p.mul(e_[a], e_[d]), p.mul(e_[b], e_[c]));
  };
  std::uint32_t d = p.mul(e_[0], minor(4, 5, 7, 8));
  d = p.sub(d, p.mul(e_[1], minor(3, 5, 6, 8)));
  d = p.add(d, p.mul(e_[2], minor(3, 4, 6, 7)));
  return FieldElement::raw(p, d);
}

Matrix3 mat_mul(const Matrix3& a, const Matrix3& b) {
  require_same_modulus(a.modulus(), b.modulus());
  const auto p = a.modulus();
  const std::uint64_t q = p.value();
  Matrix3::Entries out{};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < 3; ++k) {
        acc += static_cast<std::uint64_t>(a.raw(r, k)) * b.raw(k, c) % q;
      }
      out[3 * r + c] = static_cast<std::uint32_t>(acc % q);
    }
  }
  return Matrix3::from_residues(p, out);
}

Matrix3 mat_sub(const Matrix3& a, const Matrix3& b) {
  require_same_modulus(a.modulus(), b.modulus());
  const auto p = a.modulus();
  Matrix3::Entries out{};
  for (std::size_t i = 0; i < 9; ++i) out[i] = p.sub(a.residues()[i], b.residues()[i]);
  return Matrix3::from_residues(p, out);
}

Matrix3 mat_inverse(const Matrix3& m) {
  const auto p = m.modulus();
  const auto det = m.determinant();
  if (det.is_zero()) throw Error(ErrorCode::Singular, "matrix " + to_string(m) + " is singular");
  const std::uint32_t inv_det = p.inv(det.value());
  // Adjugate: entry (r, c) is the (c, r) cofactor.
  Matrix3::Entries out{};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t r0 = (c + 1) % 3, r1 = (c + 2) % 3;
      const std::size_t c0 = (r + 1) % 3, c1 = (r + 2) % 3;
      const std::uint32_t cof =
          p.sub(p.mul(m.raw(r0, c0), m.raw(r1, c1)), p.mul(m.raw(r0, c1), m.raw(r1, c0)));
      out[3 * r + c] = p.mul(cof, inv_det);
    }
  }
  return Matrix3::from_residues(p, out);
}

int rank(const Matrix3& m) {
  ResidueMatrix dense(m.modulus(), 3, 3);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) dense.at(r, c) = m.raw(r, c);
  }
  return static_cast<int>(rank(dense));
}

std::uint64_t element_order(const Matrix3& m) {
  if (m.determinant().is_zero()) throw Error(ErrorCode::Singular, "order of a singular matrix");
  const auto e = Matrix3::identity(m.modulus());
  Matrix3 acc = m;
  std::uint64_t k = 1;
  // |GL_3(F_p)| bounds the order; for p < 2^31 the loop ends well before overflow.
  while (!(acc == e)) {
    acc = acc * m;
    ++k;
  }
  return k;
}

std::string to_string(const Matrix3& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < 3; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < 3; ++c) os << (c ? "," : "") << m.raw(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix3& m) { return os << to_string(m); }

}  // namespace upinv
