#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gspin/error.hpp"
#include "gspin/lfactors.hpp"

namespace gspin {
namespace {

constexpr double kTol = 1e-12;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

Complex unit(double theta) { return std::polar(1.0, theta); }

SatakeClass random_class(std::mt19937_64& rng, SatakeFamily family, std::size_t m) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  SatakeClass c;
  c.family = family;
  for (std::size_t i = 0; i < m; ++i) c.satake.push_back(unit(angle(rng)));
  c.similitude = unit(angle(rng));
  if (family == SatakeFamily::EvenGSpinNonsplit) c.satake.back() = c.similitude;
  return c;
}

// Multiset equality up to floating point noise, by greedy matching.
bool same_multiset(EigenvalueMultiset a, EigenvalueMultiset b, double tol = 1e-10) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](const Complex& y) { return std::abs(x - y) < tol; });
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

TEST(StdEigenvalues, Examples) {
  SatakeClass g3{SatakeFamily::OddGSpin, {Complex(2.0, 0.0)}, Complex(3.0, 0.0)};
  EigenvalueMultiset ev = std_eigenvalues(g3);
  ASSERT_EQ(ev.size(), 2U);
  EXPECT_NEAR(std::abs(ev[0] * ev[1] - Complex(3.0, 0.0)), 0.0, kTol);
  SatakeClass trivial{SatakeFamily::OddGSpin, {1.0, 1.0}, 1.0};
  for (const auto& x : std_eigenvalues(trivial)) EXPECT_NEAR(std::abs(x - 1.0), 0.0, kTol);
}

TEST(StdEigenvalues, PairProductsAreTheSimilitude) {
  std::mt19937_64 rng(1);
  for (auto family : {SatakeFamily::OddGSpin, SatakeFamily::EvenGSpinSplit, SatakeFamily::EvenGSpinNonsplit}) {
    for (int t = 0; t < 20; ++t) {
      SatakeClass c = random_class(rng, family, 2);
      EigenvalueMultiset ev = std_eigenvalues(c);
      ASSERT_EQ(ev.size(), 4U);
      for (const auto& x : ev) {
        bool paired = std::any_of(ev.begin(), ev.end(), [&](const Complex& y) { return std::abs(x * y - c.similitude) < 1e-10; });
        EXPECT_TRUE(paired);
      }
    }
  }
}

TEST(EulerFactor, Examples) {
  LocalFieldData f3 = LocalFieldData::make(3);
  EXPECT_NEAR(std::abs(euler_factor(1.0, {}, f3) - 1.0), 0.0, kTol);
  Complex s(0.7, 2.0);
  EXPECT_NEAR(std::abs(euler_factor(s, {1.0}, f3) - local_zeta(s, f3)), 0.0, kTol);
  Complex v = euler_factor(1.0, {Complex(0, 1), Complex(0, -1)}, f3);
  EXPECT_NEAR(std::abs(v - 0.9), 0.0, kTol);
  EXPECT_EQ(kind_of([&] { euler_factor(1.0, {3.0}, f3); }), ErrorKind::PoleAtS);
}

TEST(LocalFieldData, RequiresPrimePower) {
  EXPECT_EQ(LocalFieldData::make(9).q, 9);
  EXPECT_ANY_THROW(LocalFieldData::make(6));
  EXPECT_ANY_THROW(LocalFieldData::make(1));
}

TEST(Adjoint, Dimensions) {
  std::mt19937_64 rng(2);
  for (std::size_t m = 1; m <= 4; ++m) {
    SatakeClass odd = random_class(rng, SatakeFamily::OddGSpin, m);
    EXPECT_EQ(adjoint_eigenvalues(odd, AdjointAlgebra::Sp).size(), 2 * m * m + m);
    EXPECT_EQ(adjoint_eigenvalues(odd, AdjointAlgebra::Gsp).size(), 2 * m * m + m + 1);
    for (auto family : {SatakeFamily::EvenGSpinSplit, SatakeFamily::EvenGSpinNonsplit}) {
      if (m < 2) continue;
      SatakeClass even = random_class(rng, family, m);
      EXPECT_EQ(adjoint_eigenvalues(even, AdjointAlgebra::So).size(), 2 * m * m - m);
      EXPECT_EQ(adjoint_eigenvalues(even, AdjointAlgebra::Gso).size(), 2 * m * m - m + 1);
    }
  }
}

TEST(Adjoint, GspIsSpPlusTrivial) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    SatakeClass c = random_class(rng, SatakeFamily::OddGSpin, 1 + t % 3);
    EigenvalueMultiset sp = adjoint_eigenvalues(c, AdjointAlgebra::Sp);
    sp.push_back(1.0);
    EXPECT_TRUE(same_multiset(sp, adjoint_eigenvalues(c, AdjointAlgebra::Gsp)));
  }
}

TEST(Adjoint, Sl2Weights) {
  Complex a(0.6, 0.8), s = unit(1.1);
  SatakeClass c{SatakeFamily::OddGSpin, {a}, s};
  EXPECT_TRUE(same_multiset(adjoint_eigenvalues(c, AdjointAlgebra::Sp), {a * a / s, 1.0, s / (a * a)}));
}

TEST(Adjoint, RootsOfSpMatchStandardTensorSquare) {
  // Sym^2(std) of GSp_{2m} is Ad_sp twisted by the similitude.
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    SatakeClass c = random_class(rng, SatakeFamily::OddGSpin, 1 + t % 3);
    EigenvalueMultiset ev = std_eigenvalues(c);
    EigenvalueMultiset sym2;
    for (std::size_t i = 0; i < ev.size(); ++i)
      for (std::size_t j = i; j < ev.size(); ++j) sym2.push_back(ev[i] * ev[j] / c.similitude);
    EXPECT_TRUE(same_multiset(sym2, adjoint_eigenvalues(c, AdjointAlgebra::Sp)));
  }
}

TEST(Adjoint, RootsOfSoMatchExteriorSquare) {
  std::mt19937_64 rng(5);
  for (auto family : {SatakeFamily::EvenGSpinSplit, SatakeFamily::EvenGSpinNonsplit}) {
    for (int t = 0; t < 10; ++t) {
      SatakeClass c = random_class(rng, family, 2 + t % 2);
      EigenvalueMultiset ev = std_eigenvalues(c);
      EigenvalueMultiset alt2;
      for (std::size_t i = 0; i < ev.size(); ++i)
        for (std::size_t j = i + 1; j < ev.size(); ++j) alt2.push_back(ev[i] * ev[j] / c.similitude);
      EXPECT_TRUE(same_multiset(alt2, adjoint_eigenvalues(c, AdjointAlgebra::So)));
    }
  }
}

TEST(Adjoint, TrivialClassGivesZetaPower) {
  LocalFieldData f = LocalFieldData::make(5);
  SatakeClass c{SatakeFamily::OddGSpin, {1.0, 1.0}, 1.0};
  Complex s(1.3, 0.2);
  EXPECT_NEAR(std::abs(euler_factor(s, adjoint_eigenvalues(c, AdjointAlgebra::Sp), f) - std::pow(local_zeta(s, f), 10.0)), 0.0, 1e-10);
}

TEST(Adjoint, FamilyMismatchIsInvalidClass) {
  SatakeClass odd{SatakeFamily::OddGSpin, {1.0}, 1.0};
  EXPECT_EQ(kind_of([&] { adjoint_eigenvalues(odd, AdjointAlgebra::So); }), ErrorKind::InvalidClass);
  SatakeClass bad{SatakeFamily::EvenGSpinNonsplit, {1.0, 2.0}, 3.0};
  EXPECT_EQ(kind_of([&] { bad.validate(); }), ErrorKind::InvalidClass);
}

TEST(Adjoint, Gspin2Conventions) {
  SatakeClass c{SatakeFamily::EvenGSpinSplit, {Complex(0.6, 0.8)}, unit(0.4)};
  EigenvalueMultiset single = adjoint_eigenvalues(c, AdjointAlgebra::So, Gspin2AdjointConvention::SingleFactor);
  EigenvalueMultiset squared = adjoint_eigenvalues(c, AdjointAlgebra::So, Gspin2AdjointConvention::Squared);
  EXPECT_EQ(squared.size(), 2 * single.size());
}

TEST(Tensor, Examples) {
  SatakeClass g3{SatakeFamily::OddGSpin, {Complex(0.6, 0.8)}, unit(0.3)};
  SatakeClass g2{SatakeFamily::EvenGSpinSplit, {unit(0.5)}, unit(0.9)};
  EigenvalueMultiset t = tensor_eigenvalues(g2, g3, 1.0);
  EXPECT_EQ(t.size(), 4U);
  EigenvalueMultiset direct;
  for (const auto& c : std_eigenvalues(g2))
    for (const auto& a : std_eigenvalues(g3)) direct.push_back(c * a);
  EXPECT_TRUE(same_multiset(t, direct));
  // L(s, pi x chi1) L(s, pi x chi2) factorization.
  LocalFieldData f = LocalFieldData::make(3);
  Complex s(0.5, 0.0);
  EigenvalueMultiset c2 = std_eigenvalues(g2);
  EigenvalueMultiset first, second;
  for (const auto& a : std_eigenvalues(g3)) {
    first.push_back(c2[0] * a);
    second.push_back(c2[1] * a);
  }
  EXPECT_NEAR(std::abs(euler_factor(s, t, f) - euler_factor(s, first, f) * euler_factor(s, second, f)), 0.0, 1e-12);
  SatakeClass triv3{SatakeFamily::OddGSpin, {1.0}, 1.0};
  SatakeClass triv4{SatakeFamily::EvenGSpinSplit, {1.0, 1.0}, 1.0};
  for (const auto& x : tensor_eigenvalues(triv3, triv4, 1.0)) EXPECT_NEAR(std::abs(x - 1.0), 0.0, kTol);
  EXPECT_EQ(tensor_eigenvalues(triv3, triv4, 1.0).size(), 8U);
}

TEST(Tensor, NonAdjacentRanksMismatch) {
  SatakeClass a{SatakeFamily::OddGSpin, {1.0}, 1.0};
  SatakeClass b{SatakeFamily::OddGSpin, {1.0, 1.0}, 1.0};
  EXPECT_EQ(kind_of([&] { tensor_eigenvalues(a, b, 1.0); }), ErrorKind::RankMismatch);
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta_so_exact(3, LocalFieldData::make(3)), mpq_class(9, 8));
  EXPECT_EQ(delta_so_exact(5, LocalFieldData::make(2)), mpq_class(64, 45));
  EXPECT_EQ(delta_so_exact(4, LocalFieldData::make(2)), mpq_class(16, 9));
  EXPECT_EQ(delta_so_exact(4, LocalFieldData::make(2), -1), mpq_class(4, 3) * mpq_class(4, 5));
  EXPECT_NEAR(std::abs(delta_so(5, LocalFieldData::make(2)) - 64.0 / 45.0), 0.0, kTol);
}

TEST(SqrtTwist, NormalizesSimilitude) {
  SatakeClass c{SatakeFamily::OddGSpin, {Complex(0.6, 0.8)}, 1.0};
  SatakeClass same = unramified_sqrt_twist(c);
  EXPECT_NEAR(std::abs(same.satake[0] - c.satake[0]), 0.0, kTol);
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    SatakeClass r = random_class(rng, SatakeFamily::OddGSpin, 2);
    SatakeClass tw = unramified_sqrt_twist(r);
    EXPECT_NEAR(std::abs(tw.similitude - 1.0), 0.0, kTol);
    EigenvalueMultiset ev = std_eigenvalues(tw);
    EXPECT_NEAR(std::abs(ev[0] * ev[1] - 1.0) * std::abs(ev[0] * ev[2] - 1.0) * std::abs(ev[0] * ev[3] - 1.0), 0.0, 1e-10);
  }
}

}  // namespace
}  // namespace gspin
