#include <gtest/gtest.h>

#include "gspin/error.hpp"
#include "gspin/oracles/oracles.hpp"
#include "gspin/sampling.hpp"

namespace gspin {
namespace {

BasisPtr diag_basis(std::initializer_list<long> d, std::uint32_t p = 0) {
  Vector v;
  for (long x : d) v.push_back(p ? Scalar::modular(x, p) : Scalar(x));
  return CliffordBasis::create(standard_space(0, v, p ? FieldTag::prime_field(p) : FieldTag::rationals()));
}

CliffordElement e(const BasisPtr& b, std::initializer_list<int> indices, Scalar c = Scalar(1)) {
  Mask m = 0;
  for (int i : indices) m |= Mask{1} << (i - 1);
  return CliffordElement::monomial(b, m, c);
}

CliffordElement scalar(const BasisPtr& b, long c) { return CliffordElement::scalar(b, b->space().scalar(c)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

TEST(CliffMul, AnticommutationAndContraction) {
  BasisPtr b = diag_basis({3, 1, 1});
  EXPECT_EQ(e(b, {1}) * e(b, {2}), e(b, {1, 2}));
  EXPECT_EQ(e(b, {2}) * e(b, {1}), e(b, {1, 2}, Scalar(-1)));
  EXPECT_EQ(e(b, {1}) * e(b, {1}), scalar(b, 3));
  BasisPtr u = diag_basis({1, 1});
  EXPECT_EQ(e(u, {1, 2}) * e(u, {1, 2}), scalar(u, -1));
}

TEST(CliffMul, MonomialProductsMatchWordReduction) {
  BasisPtr b = diag_basis({2, -3, 5, 7, -1, 11});
  for (Mask x = 0; x <= b->full_mask(); ++x) {
    for (Mask y = 0; y <= b->full_mask(); ++y) {
      std::vector<int> word;
      for (int i = 0; i < 6; ++i)
        if (x & (Mask{1} << i)) word.push_back(i);
      for (int i = 0; i < 6; ++i)
        if (y & (Mask{1} << i)) word.push_back(i);
      oracles::WordProduct w = oracles::reduce_word(word);
      Scalar c(w.sign);
      for (int i : w.contracted) c *= b->diag()[static_cast<std::size_t>(i)];
      Mask m = 0;
      for (int i : w.word) m |= Mask{1} << i;
      ASSERT_EQ(CliffordElement::monomial(b, x) * CliffordElement::monomial(b, y), CliffordElement::monomial(b, m, c));
    }
  }
}

TEST(CliffMul, RingAxiomsOnRandomElements) {
  Rng rng(3);
  for (std::uint32_t p : {0U, 5U}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      BasisPtr b = CliffordBasis::create(random_diagonal_space(rng, n, 3, p ? FieldTag::prime_field(p) : FieldTag::rationals()));
      for (int t = 0; t < 20; ++t) {
        auto x = random_element(b, rng, 3, 0.4, false);
        auto y = random_element(b, rng, 3, 0.4, false);
        auto z = random_element(b, rng, 3, 0.4, false);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(involution(x * y), involution(y) * involution(x));
        EXPECT_EQ(involution(involution(x)), x);
      }
    }
  }
}

TEST(CliffMul, VectorsSquareToTheirNorm) {
  Rng rng(4);
  BasisPtr b = CliffordBasis::create(standard_space(1, {Scalar(3), Scalar(-2)}, FieldTag::rationals()));
  for (int t = 0; t < 30; ++t) {
    Vector coords;
    for (std::size_t i = 0; i < 4; ++i) coords.push_back(random_integer(rng, 5, 0));
    CliffordElement v = CliffordElement::vector(b, coords);
    EXPECT_EQ(v * v, CliffordElement::scalar(b, b->space().q(b->orthogonal_basis() * coords)));
  }
}

TEST(CliffMul, DifferentSpacesDoNotMix) {
  BasisPtr a = diag_basis({1, 1});
  BasisPtr c = diag_basis({1, 2});
  EXPECT_EQ(kind_of([&] { (void)(e(a, {1}) * e(c, {1})); }), ErrorKind::BasisMismatch);
  // Bases built twice from the same gram are interchangeable.
  EXPECT_EQ(e(a, {1}) * e(diag_basis({1, 1}), {2}), e(a, {1, 2}));
}

TEST(Involution, Examples) {
  BasisPtr b = diag_basis({1, 2, 3});
  EXPECT_EQ(involution(scalar(b, 4)), scalar(b, 4));
  EXPECT_EQ(involution(e(b, {1, 2})), e(b, {1, 2}, Scalar(-1)));
  EXPECT_EQ(involution(e(b, {1, 2, 3})), e(b, {1, 2, 3}, Scalar(-1)));
  EXPECT_EQ(involution(e(b, {2})), e(b, {2}));
}

TEST(SpinorNorm, Examples) {
  BasisPtr b = diag_basis({5, 7});
  EXPECT_EQ(*spinor_norm(scalar(b, 3)).scalar, Scalar(9));
  EXPECT_EQ(*spinor_norm(e(b, {1, 2})).scalar, Scalar(35));
  BasisPtr u = diag_basis({1, 1});
  EXPECT_EQ(*spinor_norm(scalar(u, 1) + e(u, {1, 2})).scalar, Scalar(2));
}

TEST(SpinorNorm, NonScalarNormIsReportedAsElement) {
  BasisPtr b = diag_basis({1, 1, 1});
  CliffordElement x = scalar(b, 1) + e(b, {1});
  SpinorNorm n = spinor_norm(x);
  EXPECT_FALSE(n.scalar.has_value());
  EXPECT_EQ(n.value, x * involution(x));
}

TEST(Invert, Examples) {
  BasisPtr b = diag_basis({4, 1});
  EXPECT_EQ(invert(scalar(b, 2)), CliffordElement::scalar(b, Scalar::parse("1/2")));
  EXPECT_EQ(invert(e(b, {1})), e(b, {1}, Scalar::parse("1/4")));
  BasisPtr u = diag_basis({1, 1});
  EXPECT_EQ(kind_of([&] { invert(scalar(u, 1) + e(u, {1})); }), ErrorKind::NotInvertible);
}

TEST(Invert, RandomElementsHaveTwoSidedInverses) {
  Rng rng(6);
  int inverted = 0;
  for (std::uint32_t p : {0U, 7U}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      BasisPtr b = CliffordBasis::create(random_diagonal_space(rng, n, 3, p ? FieldTag::prime_field(p) : FieldTag::rationals()));
      CliffordElement one = CliffordElement::scalar(b, b->space().scalar(1));
      for (int t = 0; t < 10; ++t) {
        auto x = random_element(b, rng, 3, 0.5, false);
        try {
          CliffordElement y = invert(x);
          EXPECT_EQ(x * y, one);
          EXPECT_EQ(y * x, one);
          ++inverted;
        } catch (const Error& err) {
          EXPECT_EQ(err.kind(), ErrorKind::NotInvertible);
        }
      }
    }
  }
  EXPECT_GT(inverted, 50);
}

TEST(IsGSpin, Examples) {
  BasisPtr u = diag_basis({1, 1});
  auto r = is_gspin(scalar(u, 5));
  ASSERT_TRUE(std::holds_alternative<GSpinElement>(r));
  EXPECT_EQ(std::get<GSpinElement>(r).norm(), Scalar(25));
  auto odd = is_gspin(e(u, {1}));
  ASSERT_TRUE(std::holds_alternative<GSpinRejection>(odd));
  EXPECT_EQ(std::get<GSpinRejection>(odd).clause, GSpinRejection::Clause::NotEven);
  auto g = is_gspin(e(u, {1, 2}));
  ASSERT_TRUE(std::holds_alternative<GSpinElement>(g));
  EXPECT_EQ(std::get<GSpinElement>(g).norm(), Scalar(1));
  EXPECT_EQ(std::get<GSpinElement>(g).inverse(), e(u, {1, 2}, Scalar(-1)));
}

TEST(IsGSpin, RejectionClauses) {
  BasisPtr b = diag_basis({1, 1, 1, 1});
  auto zero_divisor = is_gspin(scalar(b, 1) + e(b, {1, 2, 3, 4}));
  ASSERT_TRUE(std::holds_alternative<GSpinRejection>(zero_divisor));
  EXPECT_EQ(std::get<GSpinRejection>(zero_divisor).clause, GSpinRejection::Clause::NotInvertible);
  // 2 + e1234 is invertible (z^2 = 1) but conjugation moves e_1 out of V.
  auto unstable = is_gspin(scalar(b, 2) + e(b, {1, 2, 3, 4}));
  ASSERT_TRUE(std::holds_alternative<GSpinRejection>(unstable));
  EXPECT_EQ(std::get<GSpinRejection>(unstable).clause, GSpinRejection::Clause::NotStable);
  EXPECT_EQ(kind_of([&] { certify_gspin(e(b, {1})); }), ErrorKind::HypothesisViolation);
}

TEST(IsGSpin, CertificateInvariants) {
  Rng rng(8);
  for (std::size_t n = 2; n <= 6; ++n) {
    BasisPtr b = CliffordBasis::create(random_diagonal_space(rng, n, 3, FieldTag::rationals()));
    CliffordElement one = CliffordElement::scalar(b, Scalar(1));
    for (int t = 0; t < 10; ++t) {
      GSpinElement g = certify_gspin(random_versor(b, rng, 2 + 2 * static_cast<std::size_t>(t % 2), 2));
      EXPECT_TRUE(g.element().is_even());
      EXPECT_EQ(g.element() * g.inverse(), one);
      EXPECT_EQ(g.element() * involution(g.element()), CliffordElement::scalar(b, g.norm()));
      for (std::size_t j = 0; j < n; ++j) {
        auto conj = g.element() * CliffordElement::monomial(b, Mask{1} << j) * g.inverse();
        for (const auto& [mask, c] : conj.terms()) EXPECT_EQ(grade(mask), 1);
      }
    }
  }
}

TEST(ProjectSO, Examples) {
  BasisPtr u = diag_basis({1, 1});
  Matrix id = project_so(certify_gspin(scalar(u, 7)));
  EXPECT_EQ(id, Matrix::identity(2));
  Matrix m = project_so(certify_gspin(e(u, {1, 2})));
  EXPECT_EQ(m, Scalar(-1) * Matrix::identity(2));
  BasisPtr f5 = diag_basis({1, 1}, 5);
  CliffordElement g = CliffordElement::scalar(f5, Scalar::modular(3, 5)) * (scalar(f5, 1) + e(f5, {1, 2}));
  Matrix r = project_so(certify_gspin(g));
  EXPECT_EQ(r.transpose() * f5->space().gram() * r, f5->space().gram());
  EXPECT_TRUE(determinant(r).is_one());
  EXPECT_FALSE(r.is_diagonal());
}

TEST(ProjectSO, IsAHomomorphismIntoSO) {
  Rng rng(9);
  for (std::size_t n = 2; n <= 5; ++n) {
    BasisPtr b = CliffordBasis::create(random_diagonal_space(rng, n, 3, FieldTag::rationals()));
    const Matrix& g = b->space().gram();
    for (int t = 0; t < 10; ++t) {
      GSpinElement x = certify_gspin(random_versor(b, rng, 2, 2));
      GSpinElement y = certify_gspin(random_versor(b, rng, 2, 2));
      Matrix px = project_so(x);
      EXPECT_EQ(px.transpose() * g * px, g);
      EXPECT_TRUE(determinant(px).is_one());
      EXPECT_EQ(project_so(certify_gspin(x.element() * y.element())), px * project_so(y));
    }
  }
}

TEST(Embed, Examples) {
  BasisPtr v2 = diag_basis({1, 1});
  BasisPtr v3 = diag_basis({1, 1, 3});
  EXPECT_EQ(embed(scalar(v2, 4), v3), scalar(v3, 4));
  GSpinElement g = embed(certify_gspin(e(v2, {1, 2})), v3);
  EXPECT_EQ(g.element(), e(v3, {1, 2}));
  EXPECT_EQ(g.norm(), Scalar(1));
  EXPECT_EQ(kind_of([&] { embed(e(v2, {1, 2}), diag_basis({1, 2, 3})); }), ErrorKind::BasisNotExtension);
  EXPECT_EQ(kind_of([&] { embed(e(v2, {1, 2}), diag_basis({1, 1, 3, 4})); }), ErrorKind::BasisNotExtension);
}

TEST(CliffordBasis, DimensionCap) {
  Vector d(kMaxCliffordDim + 1, Scalar(1));
  EXPECT_EQ(kind_of([&] { CliffordBasis::create(standard_space(0, d, FieldTag::rationals())); }), ErrorKind::DimensionCap);
}

TEST(CliffordBasis, FingerprintIsDeterministic) {
  EXPECT_EQ(diag_basis({1, 2, 3})->id(), diag_basis({1, 2, 3})->id());
  EXPECT_NE(diag_basis({1, 2, 3})->id(), diag_basis({1, 2, 5})->id());
  EXPECT_NE(diag_basis({1, 2, 3})->id(), diag_basis({1, 2, 3}, 7)->id());
  EXPECT_EQ(diag_basis({1, 2, 3})->id().size(), 16U);
}

}  // namespace
}  // namespace gspin
