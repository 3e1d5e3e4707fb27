#include "gspin/lfactors.hpp"

#include <cmath>

#include "gspin/error.hpp"
#include "gspin/scalar.hpp"

namespace gspin {

namespace {

constexpr double kPoleTol = 1e-14;

void require_family(const SatakeClass& c, bool odd, const char* what) {
  if ((c.family == SatakeFamily::OddGSpin) != odd) throw Error(ErrorKind::InvalidClass, what);
}

}  // namespace

LocalFieldData LocalFieldData::make(int q) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "residue cardinality must be >= 2");
  int p = 2;
  while (q % p != 0) ++p;
  int r = q;
  while (r % p == 0) r /= p;
  if (r != 1) throw Error(ErrorKind::InvalidArgument, "residue cardinality must be a prime power, got " + std::to_string(q));
  return LocalFieldData{q};
}

std::string_view to_string(SatakeFamily f) {
  switch (f) {
    case SatakeFamily::OddGSpin: return "odd";
    case SatakeFamily::EvenGSpinSplit: return "even_split";
    case SatakeFamily::EvenGSpinNonsplit: return "even_nonsplit";
  }
  return "?";
}

SatakeFamily parse_satake_family(std::string_view s) {
  if (s == "odd") return SatakeFamily::OddGSpin;
  if (s == "even_split") return SatakeFamily::EvenGSpinSplit;
  if (s == "even_nonsplit") return SatakeFamily::EvenGSpinNonsplit;
  throw Error(ErrorKind::InvalidClass, "unknown family '" + std::string(s) + "'");
}

std::string_view to_string(AdjointAlgebra a) {
  switch (a) {
    case AdjointAlgebra::Sp: return "sp";
    case AdjointAlgebra::So: return "so";
    case AdjointAlgebra::Gsp: return "gsp";
    case AdjointAlgebra::Gso: return "gso";
  }
  return "?";
}

AdjointAlgebra parse_adjoint_algebra(std::string_view s) {
  if (s == "sp") return AdjointAlgebra::Sp;
  if (s == "so") return AdjointAlgebra::So;
  if (s == "gsp") return AdjointAlgebra::Gsp;
  if (s == "gso") return AdjointAlgebra::Gso;
  throw Error(ErrorKind::InvalidClass, "unknown algebra '" + std::string(s) + "'");
}

bool SatakeClass::tempered(double tol) const {
  if (std::abs(std::abs(similitude) - 1.0) > tol) return false;
  for (const auto& x : satake)
    if (std::abs(std::abs(x) - 1.0) > tol) return false;
  return true;
}

void SatakeClass::validate() const {
  if (similitude == Complex(0.0, 0.0)) throw Error(ErrorKind::InvalidClass, "similitude must be nonzero");
  for (const auto& x : satake)
    if (x == Complex(0.0, 0.0)) throw Error(ErrorKind::InvalidClass, "Satake coordinates must be nonzero");
  if (family == SatakeFamily::EvenGSpinNonsplit && satake.empty())
    throw Error(ErrorKind::InvalidClass, "non-split even class needs at least one coordinate");
  // The Frobenius-twisted block of GSO_{2m} has eigenvalues +-sqrt(x0), so
  // its stored coordinate is pinned to the similitude.
  if (family == SatakeFamily::EvenGSpinNonsplit && std::abs(satake.back() - similitude) > 1e-12 * std::abs(similitude))
    throw Error(ErrorKind::InvalidClass, "non-split coordinate must equal the similitude");
}

EigenvalueMultiset std_eigenvalues(const SatakeClass& c) {
  c.validate();
  EigenvalueMultiset out;
  std::size_t split_count = c.family == SatakeFamily::EvenGSpinNonsplit ? c.m() - 1 : c.m();
  for (std::size_t i = 0; i < split_count; ++i) {
    out.push_back(c.satake[i]);
    out.push_back(c.similitude / c.satake[i]);
  }
  if (c.family == SatakeFamily::EvenGSpinNonsplit) {
    Complex r = std::sqrt(c.satake.back());
    out.push_back(r);
    out.push_back(-r);
  }
  return out;
}

Complex euler_reciprocal(Complex s, const EigenvalueMultiset& eigenvalues, LocalFieldData field) {
  Complex qs = std::pow(Complex(field.q, 0.0), -s);
  Complex p(1.0, 0.0);
  for (const auto& l : eigenvalues) p *= Complex(1.0, 0.0) - l * qs;
  return p;
}

Complex euler_factor(Complex s, const EigenvalueMultiset& eigenvalues, LocalFieldData field) {
  Complex qs = std::pow(Complex(field.q, 0.0), -s);
  Complex p(1.0, 0.0);
  for (const auto& l : eigenvalues) {
    Complex f = Complex(1.0, 0.0) - l * qs;
    if (std::abs(f) < kPoleTol) throw Error(ErrorKind::PoleAtS, "Euler factor has a pole at s");
    p /= f;
  }
  return p;
}

Complex local_zeta(Complex s, LocalFieldData field) { return euler_factor(s, {Complex(1.0, 0.0)}, field); }

EigenvalueMultiset adjoint_eigenvalues(const SatakeClass& c, AdjointAlgebra algebra, Gspin2AdjointConvention convention) {
  c.validate();
  bool symplectic = algebra == AdjointAlgebra::Sp || algebra == AdjointAlgebra::Gsp;
  require_family(c, symplectic, symplectic ? "sp/gsp adjoint needs an odd-family class" : "so/gso adjoint needs an even-family class");
  const std::size_t m = c.m();
  const Complex x0 = c.similitude;
  EigenvalueMultiset out;
  bool nonsplit = c.family == SatakeFamily::EvenGSpinNonsplit;
  std::size_t split_count = nonsplit ? m - 1 : m;
  const auto& a = c.satake;
  // Roots among the split coordinates.
  for (std::size_t i = 0; i < split_count; ++i)
    for (std::size_t j = 0; j < split_count; ++j)
      if (i != j) out.push_back(a[i] / a[j]);
  for (std::size_t i = 0; i < split_count; ++i)
    for (std::size_t j = i + 1; j < split_count; ++j) {
      out.push_back(a[i] * a[j] / x0);
      out.push_back(x0 / (a[i] * a[j]));
    }
  if (symplectic) {
    for (std::size_t i = 0; i < m; ++i) {
      out.push_back(a[i] * a[i] / x0);
      out.push_back(x0 / (a[i] * a[i]));
    }
  }
  if (nonsplit) {
    // Roots e_i +- e_m pair into +- a_i / sqrt(x_m) and +- sqrt(x_m) / a_i
    // in the x0-normalized coordinates; Frobenius acts by -1 on the last
    // Cartan direction.
    Complex r = std::sqrt(a[m - 1]);
    for (std::size_t i = 0; i < split_count; ++i) {
      for (Complex v : {a[i] / r, r / a[i]}) {
        out.push_back(v);
        out.push_back(-v);
      }
    }
  }
  std::size_t trivial = split_count;
  if (nonsplit) out.push_back(Complex(-1.0, 0.0));
  if (m == 1 && !symplectic && convention == Gspin2AdjointConvention::Squared) {
    // so_2 read as the square of L(s, chi_V).
    out.push_back(nonsplit ? Complex(-1.0, 0.0) : Complex(1.0, 0.0));
  }
  for (std::size_t i = 0; i < trivial; ++i) out.push_back(Complex(1.0, 0.0));
  if (algebra == AdjointAlgebra::Gsp || algebra == AdjointAlgebra::Gso) out.push_back(Complex(1.0, 0.0));
  return out;
}

EigenvalueMultiset tensor_eigenvalues(const SatakeClass& class_n, const SatakeClass& class_n1, Complex omega) {
  if (class_n1.n() != class_n.n() + 1 && class_n.n() != class_n1.n() + 1)
    throw Error(ErrorKind::RankMismatch, "classes of GSpin_" + std::to_string(class_n.n()) + " and GSpin_" +
                                             std::to_string(class_n1.n()) + " are not adjacent");
  if (omega == Complex(0.0, 0.0)) throw Error(ErrorKind::InvalidClass, "omega must be nonzero");
  EigenvalueMultiset a = std_eigenvalues(class_n);
  EigenvalueMultiset b = std_eigenvalues(class_n1);
  EigenvalueMultiset out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y / omega);
  return out;
}

mpq_class delta_so_exact(int dim, LocalFieldData field, int chi_value) {
  if (dim < 2) throw Error(ErrorKind::InvalidArgument, "Delta_SO needs dim >= 2");
  if (chi_value != 1 && chi_value != -1) throw Error(ErrorKind::InvalidArgument, "character value must be +1 or -1");
  mpz_class q = field.q;
  auto factor = [&](int s, int chi) {
    mpz_class qs;
    mpz_pow_ui(qs.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(s));
    return mpq_class(qs, qs - chi);
  };
  mpq_class d = 1;
  int m = dim / 2;
  if (dim % 2 == 1) {
    for (int j = 1; j <= m; ++j) d *= factor(2 * j, 1);
  } else {
    for (int j = 1; j <= m - 1; ++j) d *= factor(2 * j, 1);
    d *= factor(m, chi_value);
  }
  d.canonicalize();
  return d;
}

Complex delta_so(int dim, LocalFieldData field, int chi_value) {
  if (dim < 2) throw Error(ErrorKind::InvalidArgument, "Delta_SO needs dim >= 2");
  if (chi_value != 1 && chi_value != -1) throw Error(ErrorKind::InvalidArgument, "character value must be +1 or -1");
  Complex d(1.0, 0.0);
  int m = dim / 2;
  if (dim % 2 == 1) {
    for (int j = 1; j <= m; ++j) d *= local_zeta(Complex(2.0 * j, 0.0), field);
  } else {
    for (int j = 1; j <= m - 1; ++j) d *= local_zeta(Complex(2.0 * j, 0.0), field);
    d *= euler_factor(Complex(m, 0.0), {Complex(chi_value, 0.0)}, field);
  }
  return d;
}

SatakeClass unramified_sqrt_twist(const SatakeClass& c) {
  c.validate();
  SatakeClass t = c;
  Complex r = std::sqrt(c.similitude);
  bool nonsplit = c.family == SatakeFamily::EvenGSpinNonsplit;
  for (std::size_t i = 0; i < t.satake.size(); ++i) {
    if (nonsplit && i + 1 == t.satake.size()) {
      t.satake[i] /= c.similitude;
    } else {
      t.satake[i] /= r;
    }
  }
  t.similitude = Complex(1.0, 0.0);
  return t;
}

}  // namespace gspin
