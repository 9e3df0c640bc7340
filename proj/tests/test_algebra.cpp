#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "support/seed.hpp"
#include "upinv/errors.hpp"
#include "upinv/families.hpp"
#include "upinv/field.hpp"
#include "upinv/linalg.hpp"
#include "upinv/matrix.hpp"

namespace upinv {
namespace {

const PrimeModulus p3(3), p5(5), p7(7);

Matrix3 jordan(PrimeModulus p) { return Matrix3(p, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}); }

void expect_code(ErrorCode code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(PrimeModulusTest, RejectsEvenAndComposite) {
  expect_code(ErrorCode::EvenCharacteristic, [] { PrimeModulus(2); });
  expect_code(ErrorCode::InvalidModulus, [] { PrimeModulus(9); });
  expect_code(ErrorCode::InvalidModulus, [] { PrimeModulus(1); });
  expect_code(ErrorCode::InvalidModulus, [] { PrimeModulus(-3); });
  EXPECT_EQ(PrimeModulus(101).value(), 101u);
}

TEST(FieldTest, NegativeInputsNormalize) {
  EXPECT_EQ(FieldElement(p3, -1).value(), 2u);
  EXPECT_EQ(FieldElement(p7, -15).value(), 6u);
  EXPECT_EQ(FieldElement(p5, 12).value(), 2u);
}

TEST(FieldTest, InverseExamples) {
  EXPECT_EQ(inverse(FieldElement(p3, 1)).value(), 1u);
  EXPECT_EQ(inverse(FieldElement(p3, 2)).value(), 2u);
  EXPECT_EQ(inverse(FieldElement(p7, 2)).value(), 4u);
  EXPECT_EQ(oracle::brute_inverse(2, 7), 4u);
}

TEST(FieldTest, InverseOfZeroFails) {
  expect_code(ErrorCode::ZeroInverse, [] { inverse(FieldElement(p5, 0)); });
  expect_code(ErrorCode::ZeroInverse, [] { FieldElement(p5, 1) / FieldElement(p5, 5); });
}

TEST(FieldTest, MixedModuliFail) {
  expect_code(ErrorCode::ModulusMismatch, [] { FieldElement(p3, 1) + FieldElement(p5, 1); });
  expect_code(ErrorCode::ModulusMismatch, [] { mat_mul(Matrix3::identity(p3), Matrix3::identity(p5)); });
}

TEST(FieldTest, InverseMatchesExhaustiveSearch) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 101u}) {
    const PrimeModulus m(p);
    for (std::uint32_t a = 1; a < p; ++a) {
      const FieldElement e(m, a);
      EXPECT_EQ(inverse(e).value(), oracle::brute_inverse(a, p));
      EXPECT_EQ(inverse(inverse(e)), e);
      EXPECT_EQ((e * inverse(e)).value(), 1u);
    }
  }
}

TEST(MatrixTest, IdentityProduct) {
  const Matrix3 m(p5, {{1, 2, 3}, {0, 4, 1}, {2, 0, 3}});
  EXPECT_EQ(Matrix3::identity(p5) * m, m);
  EXPECT_EQ(m * Matrix3::identity(p5), m);
}

TEST(MatrixTest, SigmaProductMatchesDisplayedFormula) {
  for (std::int64_t p : {3, 5, 7}) {
    const PrimeModulus m(p);
    for (std::int64_t s = 0; s < p; ++s)
      for (std::int64_t ci = 0; ci < p; ++ci)
        for (std::int64_t cj = 0; cj < p; ++cj) {
          const auto prod = construct_sigma(m, s, ci) * construct_sigma(m, s, cj);
          const FieldElement d(m, ci - cj);
          const FieldElement corner = d * (d - FieldElement(m, s)) / FieldElement(m, 2);
          const Matrix3 expected(m, {{1, d.value(), corner.value()}, {0, 1, d.value()}, {0, 0, 1}});
          EXPECT_EQ(prod, expected) << "p=" << p << " s=" << s << " ci=" << ci << " cj=" << cj;
        }
  }
}

TEST(MatrixTest, SigmaSquaresToIdentity) {
  for (std::int64_t s = 0; s < 5; ++s)
    for (std::int64_t c = 0; c < 5; ++c) {
      const auto sigma = construct_sigma(p5, s, c);
      EXPECT_TRUE((sigma * sigma).is_identity());
      EXPECT_EQ(mat_inverse(sigma), sigma);
    }
}

TEST(MatrixTest, InverseExamples) {
  EXPECT_EQ(mat_inverse(Matrix3::identity(p3)), Matrix3::identity(p3));
  EXPECT_EQ(mat_inverse(Matrix3(p3, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})),
            Matrix3(p3, {{1, -1, 0}, {0, 1, 0}, {0, 0, 1}}));
  expect_code(ErrorCode::Singular, [] { mat_inverse(Matrix3::zero(p3)); });
  expect_code(ErrorCode::Singular, [] { mat_inverse(Matrix3(p3, {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}})); });
}

TEST(MatrixTest, RankExamples) {
  EXPECT_EQ(rank(Matrix3::zero(p3)), 0);
  EXPECT_EQ(rank(Matrix3::identity(p3)), 3);
  EXPECT_EQ(rank(jordan(p3) - Matrix3::identity(p3)), 2);
  EXPECT_EQ(rank(Matrix3(p3, {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}})), 2);
  EXPECT_EQ(rank(Matrix3(p5, {{1, 2, 3}, {2, 4, 1}, {3, 1, 4}})), 1);
}

TEST(MatrixTest, ElementOrder) {
  EXPECT_EQ(element_order(Matrix3::identity(p5)), 1u);
  EXPECT_EQ(element_order(jordan(p5)), 5u);
  EXPECT_EQ(element_order(jordan(p3)), 3u);
  EXPECT_EQ(element_order(construct_sigma(p5, 1, 2)), 2u);
  EXPECT_EQ(element_order(Matrix3(p7, {{3, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 6u);
}

TEST(MatrixTest, ShapePredicates) {
  EXPECT_TRUE(jordan(p3).is_upper_triangular());
  EXPECT_TRUE(jordan(p3).is_unipotent_upper());
  EXPECT_FALSE(construct_sigma(p3, 0, 1).is_unipotent_upper());
  EXPECT_FALSE(Matrix3(p3, {{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}).is_upper_triangular());
}

TEST(MatrixTest, Rendering) {
  EXPECT_EQ(to_string(construct_sigma(p3, 0, 1)), "[[1,2,2],[0,2,1],[0,0,1]]");
}

TEST(MatrixProperty, ProductAgreesWithSchoolbookAndIsAssociative) {
  std::mt19937_64 rng(testing::seed());
  for (int i = 0; i < 300; ++i) {
    const auto p = PrimeModulus(std::array{3, 5, 7, 11}[i % 4]);
    const auto a = oracle::random_matrix(rng, p);
    const auto b = oracle::random_matrix(rng, p);
    const auto c = oracle::random_matrix(rng, p);
    EXPECT_EQ(a * b, oracle::naive_product(a, b));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(Matrix3::identity(p) * a, a);
  }
}

TEST(MatrixProperty, InverseIsTwoSided) {
  std::mt19937_64 rng(testing::seed() + 1);
  for (int i = 0; i < 300; ++i) {
    const auto p = PrimeModulus(std::array{3, 5, 7}[i % 3]);
    const auto m = oracle::random_invertible(rng, p);
    EXPECT_TRUE((m * mat_inverse(m)).is_identity());
    EXPECT_TRUE((mat_inverse(m) * m).is_identity());
  }
}

TEST(MatrixProperty, RankMatchesFixedSpaceAndRowOrder) {
  std::mt19937_64 rng(testing::seed() + 2);
  for (int i = 0; i < 300; ++i) {
    const auto p = PrimeModulus(std::array{3, 5}[i % 2]);
    const auto m = oracle::random_matrix(rng, p);
    EXPECT_EQ(rank(m), 3 - oracle::kernel_dim(m));
    const auto& e = m.residues();
    const auto permuted = Matrix3::from_residues(p, {e[6], e[7], e[8], e[0], e[1], e[2], e[3], e[4], e[5]});
    EXPECT_EQ(rank(permuted), rank(m));
  }
}

TEST(LinalgTest, NullspaceOfSmallSystem) {
  ResidueMatrix a(p5, 2, 3);
  a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(0, 2) = 3;
  a.at(1, 0) = 2; a.at(1, 1) = 4; a.at(1, 2) = 0;
  EXPECT_EQ(rank(a), 2u);
  const auto ker = nullspace(a);
  ASSERT_EQ(ker.size(), 1u);
  for (std::size_t r = 0; r < 2; ++r) {
    std::uint64_t s = 0;
    for (std::size_t c = 0; c < 3; ++c) s += static_cast<std::uint64_t>(a.at(r, c)) * ker[0][c];
    EXPECT_EQ(s % 5, 0u);
  }
}

}  // namespace
}  // namespace upinv
