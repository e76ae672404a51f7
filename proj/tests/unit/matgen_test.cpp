#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sl12/errors.hpp"
#include "sl12/generators.hpp"

namespace sl12 {
namespace {

struct Instance {
  FieldSpec spec;
  QValue Q;
  FactoredInteger factored_Q;
  MinimalPolynomial mp;
  GeneratorTriple t;
};

Instance instance(unsigned p, unsigned m) {
  Instance in;
  in.spec = canonical_field(p, m);
  in.Q = compute_Q(in.spec.q());
  const auto group = factorize(in.spec.ext->order() - 1);
  in.factored_Q = factorize(in.Q.Q);
  in.mp = min_poly_of_omega(in.spec, find_omega(in.spec, in.Q, group, OmegaMode::deterministic()));
  in.t = build_generators(*in.spec.base, in.mp.alpha);
  return in;
}

// 1-based access, as the entries are usually described.
FqElem at(const Mat& a, std::size_t r, std::size_t c) { return a(r - 1, c - 1); }

Mat inverse_by_kernel(const BaseField& F, const Mat& a) {
  // Solve a * col_j = e_j column by column through the kernel of [a | -e_j].
  const std::size_t n = a.dim();
  Mat inv(n);
  for (std::size_t j = 0; j < n; ++j) {
    Mat aug(n + 1);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
      aug(r, n) = r == j ? F.neg(F.one()) : F.zero();
    }
    const auto ker = mat::kernel(F, aug);
    for (const auto& v : ker.basis()) {
      if (v[n] == F.zero()) continue;
      const FqElem s = F.inv(v[n]);
      for (std::size_t r = 0; r < n; ++r) inv(r, j) = F.mul(v[r], s);
      break;
    }
  }
  return inv;
}

TEST(Matrix, DetAgreesWithCofactorExpansion) {
  std::mt19937_64 rng(1);
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {7, 2}}) {
    const auto spec = canonical_field(p, m);
    const BaseField& F = *spec.base;
    for (int i = 0; i < 60; ++i) {
      const std::size_t n = 1 + i % 5;
      const Mat a = oracle::random_matrix(F, n, rng);
      ASSERT_EQ(mat::det(F, a), oracle::det_cofactor(F, a));
    }
  }
}

TEST(Matrix, MultiplicationIsAssociativeWithIdentity) {
  std::mt19937_64 rng(12);
  const auto spec = canonical_field(2, 3);
  const BaseField& F = *spec.base;
  for (int i = 0; i < 30; ++i) {
    const Mat a = oracle::random_matrix(F, 12, rng), b = oracle::random_matrix(F, 12, rng),
              c = oracle::random_matrix(F, 12, rng);
    ASSERT_EQ(mat::mul(F, mat::mul(F, a, b), c), mat::mul(F, a, mat::mul(F, b, c)));
    ASSERT_EQ(mat::mul(F, a, Mat::identity(12)), a);
    ASSERT_EQ(mat::mul(F, Mat::identity(12), a), a);
  }
}

TEST(Matrix, DetIsMultiplicative) {
  std::mt19937_64 rng(2);
  const auto spec = canonical_field(5, 2);
  const BaseField& F = *spec.base;
  for (int i = 0; i < 50; ++i) {
    const Mat a = oracle::random_matrix(F, 12, rng), b = oracle::random_matrix(F, 12, rng);
    ASSERT_EQ(mat::det(F, mat::mul(F, a, b)), F.mul(mat::det(F, a), mat::det(F, b)));
  }
}

TEST(Matrix, CharPolyIsSimilarityInvariantAndAnnihilates) {
  std::mt19937_64 rng(4);
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const auto spec = canonical_field(p, m);
    const BaseField& F = *spec.base;
    for (int i = 0; i < 20; ++i) {
      const Mat a = oracle::random_matrix(F, 8, rng);
      Mat s = oracle::random_matrix(F, 8, rng);
      if (mat::det(F, s) == F.zero()) continue;
      const Mat conj = mat::mul(F, mat::mul(F, s, a), inverse_by_kernel(F, s));
      const Poly cp = mat::char_poly(F, a);
      ASSERT_EQ(cp, mat::char_poly(F, conj));
      ASSERT_EQ(cp.degree(), 8u);
      ASSERT_TRUE(cp.is_monic());
      ASSERT_EQ(mat::eval_poly(F, cp, a), Mat(8));
      // constant term is det(-a)
      ASSERT_EQ(cp[0], mat::det(F, mat::scale(F, a, F.neg(F.one()))));
    }
  }
}

TEST(Matrix, CompanionHasGivenCharPoly) {
  std::mt19937_64 rng(6);
  const auto spec = canonical_field(3, 2);
  const BaseField& F = *spec.base;
  for (int i = 0; i < 20; ++i) {
    std::vector<FqElem> c(12);
    for (auto& x : c) x = FqElem{static_cast<std::uint32_t>(rng() % F.order())};
    c.back() = F.one();
    const Poly f(c);
    EXPECT_EQ(mat::char_poly(F, mat::companion(F, f)), f);
  }
}

TEST(Matrix, KernelAndRank) {
  std::mt19937_64 rng(8);
  const auto spec = canonical_field(2, 2);
  const BaseField& F = *spec.base;
  for (int i = 0; i < 50; ++i) {
    Mat a = oracle::random_matrix(F, 6, rng);
    for (std::size_t c = 0; c < 6; ++c) a(i % 6, c) = F.zero();  // force a dependency
    const auto ker = mat::kernel(F, a);
    EXPECT_EQ(ker.dim() + mat::rank(F, a), 6u);
    for (const auto& v : ker.basis()) EXPECT_EQ(mat::apply(F, a, v), Vec(6, F.zero()));
  }
}

TEST(Subspace, IntersectionAndSumMatchEnumeration) {
  std::mt19937_64 rng(9);
  const auto F = BaseField::prime(2);
  const std::size_t n = 5;
  auto members = [&](const Subspace& s) {
    std::vector<Vec> out;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      Vec v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = FqElem{(bits >> i) & 1u};
      if (s.contains(F, v)) out.push_back(v);
    }
    return out;
  };
  for (int i = 0; i < 100; ++i) {
    std::vector<Vec> ga(rng() % 4), gb(rng() % 4);
    for (auto& v : ga) {
      v.resize(n);
      for (auto& x : v) x = FqElem{static_cast<std::uint32_t>(rng() & 1)};
    }
    for (auto& v : gb) {
      v.resize(n);
      for (auto& x : v) x = FqElem{static_cast<std::uint32_t>(rng() & 1)};
    }
    const auto a = Subspace::span(F, n, ga), b = Subspace::span(F, n, gb);
    const auto both = intersect(F, a, b);
    std::size_t common = 0;
    for (const auto& v : members(a)) common += b.contains(F, v) ? 1 : 0;
    ASSERT_EQ(std::size_t{1} << both.dim(), common);
    for (const auto& v : both.basis()) ASSERT_TRUE(a.contains(F, v) && b.contains(F, v));
    const auto s = sum(F, a, b);
    ASSERT_EQ(s.dim() + both.dim(), a.dim() + b.dim());
    ASSERT_TRUE(a.is_subspace_of(F, s) && b.is_subspace_of(F, s));
  }
}

TEST(Subspace, FromRrefRejectsNonCanonicalRows) {
  const auto F = BaseField::prime(3);
  EXPECT_NO_THROW(Subspace::from_rref(3, {{F.one(), F.zero(), F.from_int(2)}}));
  EXPECT_THROW(Subspace::from_rref(3, {{F.from_int(2), F.zero(), F.zero()}}), Error);
  EXPECT_THROW(Subspace::from_rref(3, {{F.zero(), F.one(), F.zero()}, {F.one(), F.zero(), F.zero()}}), Error);
  EXPECT_THROW(Subspace::from_rref(3, {{F.one(), F.one(), F.zero()}, {F.zero(), F.one(), F.zero()}}), Error);
}

TEST(Generators, YIsThePrintedPermutation) {
  const auto F = BaseField::prime(5);
  const Mat y = build_y(F);
  EXPECT_EQ(at(y, 2, 1), F.one());  // y v1 = v2
  EXPECT_EQ(mat::mul(F, y, mat::mul(F, y, y)), Mat::identity(12));
  EXPECT_NE(y, Mat::identity(12));
  const Vec v11 = oracle::unit_vector(F, 12, 10);
  EXPECT_EQ(mat::apply(F, y, v11), oracle::unit_vector(F, 12, 11));
  EXPECT_EQ(mat::det(F, y), F.one());
}

TEST(Generators, PrintedEntries) {
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {5, 1}, {2, 3}}) {
    const auto in = instance(p, m);
    const BaseField& F = *in.spec.base;
    const auto& a = in.mp.alpha;
    const FqElem inv11 = F.inv(a.at(11));
    EXPECT_EQ(at(in.t.x, 10, 12), a.at(11));
    EXPECT_EQ(at(in.t.x, 12, 10), inv11);
    EXPECT_EQ(at(in.t.x, 1, 10), F.mul(a.at(6), inv11));
    EXPECT_EQ(at(in.t.x, 1, 12), a.at(6));
    EXPECT_EQ(at(in.t.z, 10, 11), a.at(11));
    EXPECT_EQ(at(in.t.z, 12, 12), inv11);
    EXPECT_EQ(at(in.t.z, 1, 3), F.neg(F.one()));
    EXPECT_EQ(at(in.t.z, 1, 11), a.at(6));
    EXPECT_EQ(at(in.t.z, 1, 12), F.mul(a.at(6), inv11));
  }
}

TEST(Generators, OrdersDeterminantsAndProduct) {
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}}) {
    const auto in = instance(p, m);
    const BaseField& F = *in.spec.base;
    const Mat I = Mat::identity(12);
    EXPECT_EQ(mat::mul(F, in.t.x, in.t.x), I);
    EXPECT_NE(in.t.x, I);
    EXPECT_EQ(mat::det(F, in.t.x), F.one());
    EXPECT_EQ(mat::det(F, in.t.z), F.one());
    EXPECT_EQ(in.t.z, mat::mul(F, in.t.x, in.t.y));
    EXPECT_EQ(in.t.z, displayed_z(F, in.mp.alpha));
    EXPECT_TRUE(order_with_certified_exponent(F, in.t.x, 2, factorize(2)));
    EXPECT_TRUE(order_with_certified_exponent(F, in.t.y, 3, factorize(3)));
    EXPECT_TRUE(order_with_certified_exponent(F, in.t.z, in.Q.Q, in.factored_Q));
    const Poly lin({F.neg(F.inv(in.mp.alpha.at(11))), F.one()});
    EXPECT_EQ(mat::char_poly(F, in.t.z), poly::mul(F, lin, in.mp.f));
  }
}

TEST(Generators, DetOfXMatchesCofactorOracleAtThree) {
  const auto in = instance(3, 1);
  EXPECT_EQ(oracle::det_cofactor(*in.spec.base, in.t.x), in.spec.base->one());
}

TEST(Generators, CertifiedOrderRejectsWrongExponents) {
  const auto in = instance(3, 1);
  const BaseField& F = *in.spec.base;
  EXPECT_FALSE(order_with_certified_exponent(F, in.t.y, 6, factorize(6)));
  EXPECT_FALSE(order_with_certified_exponent(F, in.t.y, 2, factorize(2)));
  EXPECT_FALSE(order_with_certified_exponent(F, in.t.z, in.Q.Q * 2, factorize(in.Q.Q * 2)));
  const Mat z23 = mat::pow(F, in.t.z, 23);
  EXPECT_FALSE(order_with_certified_exponent(F, z23, in.Q.Q, in.factored_Q));
  EXPECT_TRUE(order_with_certified_exponent(F, z23, 3851, factorize(3851)));
}

TEST(Generators, ZeroAlphaElevenIsRejected) {
  const auto F = BaseField::prime(5);
  AlphaVector a;
  try {
    assemble_x(F, a);
    FAIL();
  } catch (const ConsistencyError& e) {
    EXPECT_EQ(e.check(), "x_order");
  }
}

}  // namespace
}  // namespace sl12
