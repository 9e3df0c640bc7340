#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/oracles.hpp"
#include "support/seed.hpp"
#include "upinv/action.hpp"
#include "upinv/errors.hpp"
#include "upinv/constructions.hpp"
#include "upinv/families.hpp"

namespace upinv {
namespace {

const PrimeModulus p3(3), p5(5);

Polynomial X(PrimeModulus p) { return Polynomial::variable(p, Var::X); }
Polynomial Y(PrimeModulus p) { return Polynomial::variable(p, Var::Y); }
Polynomial Z(PrimeModulus p) { return Polynomial::variable(p, Var::Z); }

Polynomial set_z_zero(const Polynomial& f) {
  Polynomial out(f.modulus());
  for (const auto& [m, c] : f.terms())
    if (m.exps[2] == 0) out.add_term(m, c);
  return out;
}

Polynomial product_over(const std::vector<std::uint32_t>& alphas, const Polynomial& base, const Polynomial& v) {
  Polynomial out = Polynomial::constant(base.modulus(), 1);
  for (auto a : alphas) out = out * (base + v.scaled(a));
  return out;
}

TEST(ApplyTest, Examples) {
  const auto f = X(p5) * Y(p5) + Z(p5).pow(3);
  EXPECT_EQ(apply(Matrix3::identity(p5), f), f);
  EXPECT_EQ(apply(Matrix3(p3, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), X(p3)), X(p3) - Y(p3));
  for (std::int64_t s = 0; s < 3; ++s)
    for (std::int64_t c = 0; c < 3; ++c) {
      const auto f2 = quadratic_A_invariant(p3, s, c);
      EXPECT_EQ(apply(construct_sigma(p3, s, c), f2), f2);
    }
  EXPECT_THROW(apply(Matrix3::zero(p3), X(p3)), Error);
}

TEST(InvarianceTest, Examples) {
  const auto g = example_group(p3);
  EXPECT_TRUE(is_invariant(g, Polynomial::constant(p3, 2)));
  EXPECT_TRUE(is_invariant(g, Z(p3)));
  EXPECT_FALSE(is_invariant(g, X(p3)));
  EXPECT_FALSE(is_invariant(g, Y(p3)));
}

TEST(StabilizerTest, Examples) {
  const auto g = example_group(p3);
  EXPECT_EQ(stabilizer(g, Polynomial::constant(p3, 1)), g);
  const std::vector<std::int64_t> cs{0, 1};
  const auto a = construct_A(p3, 0, cs);
  EXPECT_EQ(stabilizer(a, shifted_x(p3, 0, 0)).order(), 2u);
  const auto trivial = MatrixGroup::closure(p3, {});
  EXPECT_EQ(stabilizer(trivial, X(p3)).order(), 1u);
}

TEST(NormTest, Examples) {
  const auto trivial = MatrixGroup::closure(p5, {});
  const auto f = X(p5) + Y(p5).scaled(2);
  EXPECT_EQ(effective_norm(trivial, f), f);

  const std::vector<std::int64_t> cs{0, 1};
  const auto a = construct_A(p3, 0, cs);
  const auto en_a = effective_norm(a, shifted_x(p3, 0, 0));
  EXPECT_EQ(en_a.degree(), 3);
  EXPECT_TRUE(en_a.is_homogeneous());
  EXPECT_TRUE(is_invariant(a, en_a));

  const std::vector<std::int64_t> bs{1};
  const auto b = construct_B(p3, bs);
  const auto xp = shifted_x(p3, 0, 0);
  const auto en_b = effective_norm(b, xp);
  EXPECT_EQ(set_z_zero(en_b), xp.pow(3));
  EXPECT_EQ(en_b, product_over({0, 1, 2}, xp, Z(p3)));
}

TEST(NormTest, OrbitBookkeeping) {
  const auto g = example_group(p5);
  const auto data = orbit(g, X(p5));
  EXPECT_EQ(data.stabilizer_order * data.coset_reps.size(), g.order());
  EXPECT_EQ(data.images.size(), data.coset_reps.size());
  // Representatives are the least element of their coset.
  const auto st = stabilizer(g, X(p5));
  for (const auto& rep : data.coset_reps)
    for (const auto& h : st.elements()) EXPECT_LE(rep, rep * h);
  EXPECT_EQ(effective_norm(data), effective_norm(g, X(p5)));
}

TEST(NormTest, SpecializationForA) {
  for (const PrimeModulus p : {p3, p5}) {
    for (std::int64_t s = 0; s < p.value(); ++s)
      for (std::int64_t c1 = 0; c1 < p.value(); ++c1) {
        for (const auto& cs : {std::vector<std::int64_t>{c1}, std::vector<std::int64_t>{c1, c1 + 1}}) {
          const auto a = construct_A(p, s, cs);
          const auto xp = shifted_x(p, s, c1);
          const auto en = effective_norm(a, xp);
          EXPECT_EQ(set_z_zero(en), product_over(difference_group(p, cs), xp, Y(p)));
          EXPECT_EQ(static_cast<std::size_t>(en.degree()) * 2, a.order());
          EXPECT_EQ(stabilizer(a, xp).order(), 2u);
        }
      }
  }
}

TEST(NormTest, LinearTermInShiftedX) {
  // Rewrite EN(x') in the variables x', y, z: substitute x -> x - ((s - c)/2) y.
  for (const PrimeModulus p : {p3, p5}) {
    for (std::int64_t s = 0; s < p.value(); ++s) {
      const std::int64_t c = (s + 1) % p.value();
      const std::vector<std::int64_t> cs{c, c + 1};
      const auto a = construct_A(p, s, cs);
      const auto en = effective_norm(a, shifted_x(p, s, c));
      const FieldElement shift = FieldElement(p, s - c) / FieldElement(p, 2);
      const auto back = Matrix3(p, {{1, (-shift).value(), 0}, {0, 1, 0}, {0, 0, 1}});
      const auto in_xp = substitute_linear(en, back);
      bool linear_in_xp = false, depends_on_y = false;
      for (const auto& [m, coef] : in_xp.terms()) {
        linear_in_xp |= m.exps[0] == 1;
        depends_on_y |= m.exps[1] > 0;
      }
      EXPECT_TRUE(linear_in_xp);
      EXPECT_TRUE(depends_on_y);
    }
  }
}

std::vector<MatrixGroup> sample_groups() {
  std::vector<MatrixGroup> gs{example_group(p3),
                              construct_A(p3, 1, std::vector<std::int64_t>{0, 2}),
                              construct_B_sigma(p3, 2, 1, std::vector<std::int64_t>{1}),
                              MatrixGroup::closure(p3, {Matrix3(p3, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}})}),
                              MatrixGroup::closure(p3, {Matrix3(p3, {{2, 1, 0}, {0, 1, 0}, {0, 0, 2}})}),
                              construct_A(p5, 4, std::vector<std::int64_t>{1, 3})};
  return gs;
}

TEST(ActionProperty, CompositionLaw) {
  std::mt19937_64 rng(testing::seed() + 30);
  for (int i = 0; i < 250; ++i) {
    const auto p = PrimeModulus(std::array{3, 5, 7}[i % 3]);
    const auto f = oracle::random_poly(rng, p, 5, 6);
    const auto g = oracle::random_invertible(rng, p);
    const auto h = oracle::random_invertible(rng, p);
    EXPECT_EQ(apply(g * h, f), apply(g, apply(h, f)));
  }
}

TEST(ActionProperty, GeneratorCheckMatchesAllElements) {
  std::mt19937_64 rng(testing::seed() + 31);
  const auto groups = sample_groups();
  int invariant_cases = 0;
  for (int i = 0; i < 240; ++i) {
    const auto& g = groups[i % groups.size()];
    const auto p = g.modulus();
    Polynomial f(p);
    if (i % 3 == 0) {
      f = effective_norm(g, oracle::random_homogeneous(rng, p, 1));
    } else if (i % 3 == 1) {
      // Sum of a random invariant and a random polynomial that is usually not.
      f = oracle::random_poly(rng, p, 3, 4);
    } else {
      const auto ks = std::uniform_int_distribution<int>(0, 3)(rng);
      f = Polynomial::variable(p, Var::Z).pow(ks) + effective_norm(g, oracle::random_homogeneous(rng, p, 1));
    }
    const bool gens = is_invariant(g, f);
    EXPECT_EQ(gens, oracle::invariant_under_all(g, f)) << render(f);
    invariant_cases += gens ? 1 : 0;
  }
  EXPECT_GT(invariant_cases, 40);
}

TEST(ActionProperty, NormIsInvariantAndRepresentativeFree) {
  std::mt19937_64 rng(testing::seed() + 32);
  const auto groups = sample_groups();
  for (int i = 0; i < 210; ++i) {
    const auto& g = groups[i % groups.size()];
    const auto p = g.modulus();
    const auto f = oracle::random_homogeneous(rng, p, 1 + (i % 4 == 0 ? 1 : 0));
    const auto en = effective_norm(g, f);
    EXPECT_TRUE(is_invariant(g, en));
    const auto st = stabilizer(g, f);
    EXPECT_EQ(static_cast<std::size_t>(en.degree()), static_cast<std::size_t>(f.degree()) * g.order() / st.order());
    std::vector<Matrix3> reversed(g.elements().rbegin(), g.elements().rend());
    EXPECT_EQ(effective_norm(orbit(g, f, reversed)), en);
    std::shuffle(reversed.begin(), reversed.end(), rng);
    EXPECT_EQ(effective_norm(orbit(g, f, reversed)), en);
  }
}

}  // namespace
}  // namespace upinv
