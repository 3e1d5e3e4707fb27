#include <gtest/gtest.h>

#include <random>

#include "gspin/error.hpp"
#include "gspin/oracles/oracles.hpp"
#include "gspin/quadspace.hpp"
#include "gspin/sampling.hpp"

namespace gspin {
namespace {

Matrix gram(std::initializer_list<std::initializer_list<long>> rows, std::uint32_t p = 0) {
  Matrix m(rows.size(), rows.size(), p);
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = p ? Scalar::modular(v, p) : Scalar(v);
    ++i;
  }
  return m;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

void expect_diagonalized(const QuadraticSpace& s) {
  const Diagonalization& d = s.orthogonal_basis();
  Matrix t = d.basis.transpose() * s.gram() * d.basis;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (i == j) {
        EXPECT_EQ(t(i, i), d.diag[i]);
        EXPECT_FALSE(d.diag[i].is_zero());
      } else {
        EXPECT_TRUE(t(i, j).is_zero());
      }
    }
  }
}

TEST(Diagonalize, IdentityIsAlreadyDiagonal) {
  QuadraticSpace s(Matrix::identity(3), FieldTag::rationals());
  EXPECT_EQ(s.orthogonal_basis().basis, Matrix::identity(3));
  for (const auto& x : s.orthogonal_basis().diag) EXPECT_EQ(x, Scalar(1));
}

TEST(Diagonalize, HyperbolicPlane) {
  QuadraticSpace s(gram({{0, 1}, {1, 0}}), FieldTag::rationals());
  EXPECT_EQ(s.orthogonal_basis().diag[0], Scalar(2));
  EXPECT_EQ(s.orthogonal_basis().diag[1], Scalar::parse("-1/2"));
  expect_diagonalized(s);
}

TEST(Diagonalize, SingularGramIsDegenerate) {
  EXPECT_EQ(kind_of([] { QuadraticSpace(gram({{1, 0}, {0, 0}}), FieldTag::rationals()); }), ErrorKind::DegenerateForm);
}

TEST(Diagonalize, RejectsNonSymmetricAndComplex) {
  EXPECT_EQ(kind_of([] { QuadraticSpace(gram({{1, 2}, {0, 1}}), FieldTag::rationals()); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { QuadraticSpace(Matrix::identity(2), FieldTag::complex_float()); }), ErrorKind::UnsupportedField);
}

TEST(Diagonalize, RandomSymmetricFormsWithPrefixProperty) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-3, 3);
  int tested = 0;
  for (std::uint32_t p : {0U, 5U, 7U}) {
    for (int t = 0; t < 60; ++t) {
      std::size_t n = 1 + t % 6;
      Matrix g(n, n, p);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = p ? Scalar::modular(d(rng), p) : Scalar(d(rng));
      if (determinant(g).is_zero()) continue;
      QuadraticSpace s(g, p ? FieldTag::prime_field(p) : FieldTag::rationals());
      expect_diagonalized(s);
      // Leading block of the gram is diagonalized by the leading block of the basis when it is nondegenerate.
      if (n > 1 && !determinant(g.block(0, 0, n - 1, n - 1)).is_zero()) {
        QuadraticSpace head(g.block(0, 0, n - 1, n - 1), s.field());
        for (std::size_t i = 0; i + 1 < n; ++i) EXPECT_EQ(head.orthogonal_basis().diag[i], s.orthogonal_basis().diag[i]);
      }
      ++tested;
    }
  }
  EXPECT_GT(tested, 100);
}

TEST(Discriminant, Examples) {
  auto Q = FieldTag::rationals();
  EXPECT_EQ(discriminant(standard_space(0, {Scalar(1), Scalar(1), Scalar(1)}, Q)).rep, 1);
  EXPECT_EQ(discriminant(standard_space(0, {Scalar(1), Scalar(-1)}, Q)).rep, -1);
  EXPECT_EQ(discriminant(standard_space(0, {Scalar(2), Scalar(3)}, Q)).rep, 6);
  EXPECT_EQ(discriminant(standard_space(0, {Scalar::parse("2/9"), Scalar(18)}, Q)).rep, 1);
}

TEST(Discriminant, SignedVariantOfHyperbolicPlaneIsTrivial) {
  QuadraticSpace h = standard_space(1, {}, FieldTag::rationals());
  EXPECT_EQ(discriminant(h).rep, -1);
  EXPECT_EQ(discriminant(h, true).rep, 1);
}

TEST(SquareClass, SquarefreePartAgreesWithTrialDivision) {
  for (long n = -300; n <= 300; ++n) {
    if (n == 0) continue;
    long m = n;
    for (long f = 2; f * f <= std::labs(m); ++f)
      while (m % (f * f) == 0) m /= f * f;
    EXPECT_EQ(squarefree_part(mpz_class(n)), m) << n;
  }
}

TEST(SquareClass, SquareRootsAreExact) {
  EXPECT_EQ(*square_root(Scalar::parse("49/4")), Scalar::parse("7/2"));
  EXPECT_FALSE(square_root(Scalar(2)).has_value());
  for (long a = 1; a < 13; ++a) {
    auto r = square_root(Scalar::modular(a, 13));
    EXPECT_EQ(r.has_value(), legendre(a, 13) == 1);
    if (r) EXPECT_EQ(*r * *r, Scalar::modular(a, 13));
  }
}

TEST(Hilbert, Examples) {
  EXPECT_EQ(hilbert_symbol(1, 7, Place::real()), 1);
  EXPECT_EQ(hilbert_symbol(1, -3, Place::finite(5)), 1);
  EXPECT_EQ(hilbert_symbol(-1, -1, Place::real()), -1);
  EXPECT_EQ(hilbert_symbol(-1, -1, Place::finite(2)), -1);
  EXPECT_EQ(oracles::hilbert_symbol_search(-1, -1, 2), -1);
}

TEST(Hilbert, ZeroArgumentIsRejected) {
  EXPECT_EQ(kind_of([] { hilbert_symbol(0, 3, Place::real()); }), ErrorKind::ZeroArgument);
}

TEST(Hilbert, MatchesSolubilitySearch) {
  const long values[] = {-30, -15, -10, -7, -6, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10, 14, 15, 30};
  for (long p : {2L, 3L, 5L}) {
    for (long a : values) {
      for (long b : values) {
        EXPECT_EQ(hilbert_symbol(a, b, Place::finite(p)), oracles::hilbert_symbol_search(a, b, p))
            << "(" << a << ", " << b << ")_" << p;
      }
    }
  }
}

TEST(Hilbert, ProductFormulaAndGlobalSolutions) {
  const long values[] = {-6, -3, -2, -1, 2, 3, 5, 7, 10, 13};
  for (long a : values) {
    for (long b : values) {
      int product = hilbert_symbol(a, b, Place::real());
      bool split_everywhere = product == 1;
      for (const auto& p : prime_divisors(mpz_class(2 * a * b))) {
        int h = hilbert_symbol(a, b, Place::finite(p));
        product *= h;
        split_everywhere = split_everywhere && h == 1;
      }
      EXPECT_EQ(product, 1) << a << ", " << b;
      // A small integer point forces every local symbol to be 1.
      if (oracles::ternary_has_solution(a, b, 12)) EXPECT_TRUE(split_everywhere) << a << ", " << b;
    }
  }
}

TEST(WittInvariants, Examples) {
  auto Q = FieldTag::rationals();
  QuadraticSpace h = standard_space(1, {}, Q);
  for (long p : {2L, 3L, 5L, 7L}) EXPECT_EQ(witt_invariants(h, Place::finite(p)).witt_index, 1U);
  EXPECT_EQ(witt_invariants(h, Place::real()).witt_index, 1U);
  QuadraticSpace i3 = standard_space(0, {Scalar(1), Scalar(1), Scalar(1)}, Q);
  EXPECT_EQ(witt_invariants(i3, Place::real()).witt_index, 0U);
  QuadraticSpace i4 = standard_space(0, {Scalar(1), Scalar(1), Scalar(1), Scalar(1)}, Q);
  EXPECT_EQ(witt_invariants(i4, Place::finite(3)).witt_index, 2U);
  // Hamilton quaternion norm form: anisotropic at 2.
  EXPECT_EQ(witt_invariants(i4, Place::finite(2)).witt_index, 0U);
}

TEST(WittInvariants, PrimeFieldIndexMatchesSearch) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> d(1, 6);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + t % 4;
    std::vector<long> diag;
    Vector v;
    for (std::size_t i = 0; i < n; ++i) {
      diag.push_back(d(rng));
      v.push_back(Scalar::modular(diag.back(), 7));
    }
    QuadraticSpace s = standard_space(0, v, FieldTag::prime_field(7));
    EXPECT_EQ(witt_invariants(s, Place::real()).witt_index, oracles::witt_index_fp_search(diag, 7));
  }
}

TEST(WittInvariants, LocalBoundsHold) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 80; ++t) {
    std::size_t n = 1 + t % 7;
    QuadraticSpace s = random_diagonal_space(rng, n, 12, FieldTag::rationals());
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
      LocalInvariants inv = witt_invariants(s, Place::finite(p));
      EXPECT_LE(inv.witt_index, n / 2);
      if (n >= 5) EXPECT_GE(2 * inv.witt_index + 4, n);
    }
  }
}

TEST(StandardSpace, Shapes) {
  auto Q = FieldTag::rationals();
  QuadraticSpace h = standard_space(1, {}, Q);
  EXPECT_EQ(h.gram(), gram({{0, 1}, {1, 0}}));
  QuadraticSpace v5 = standard_space(2, {Scalar(1)}, Q);
  EXPECT_EQ(v5.gram(), gram({{0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}}));
  QuadraticSpace nf = norm_form(-1);
  Vector v{Scalar(3), Scalar(4)};
  EXPECT_EQ(nf.q(v), Scalar(25));
  EXPECT_EQ(kind_of([&] { standard_space(0, {Scalar(1), Scalar(0)}, Q); }), ErrorKind::ZeroEntry);
}

TEST(FieldTag, ParsesAndValidates) {
  EXPECT_EQ(FieldTag::parse("Fp:5").modulus(), 5U);
  EXPECT_EQ(FieldTag::parse("Q").modulus(), 0U);
  EXPECT_EQ(kind_of([] { FieldTag::prime_field(9); }), ErrorKind::UnsupportedField);
  EXPECT_EQ(kind_of([] { FieldTag::prime_field(2); }), ErrorKind::UnsupportedField);
}

}  // namespace
}  // namespace gspin
