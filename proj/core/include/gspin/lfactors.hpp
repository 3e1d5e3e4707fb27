#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

namespace gspin {

using Complex = std::complex<double>;
using EigenvalueMultiset = std::vector<Complex>;

struct LocalFieldData {
  int q = 2;
  // Throws InvalidArgument unless q is a prime power >= 2.
  static LocalFieldData make(int q);
};

enum class SatakeFamily { OddGSpin, EvenGSpinSplit, EvenGSpinNonsplit };
std::string_view to_string(SatakeFamily f);
SatakeFamily parse_satake_family(std::string_view s);

// Unramified class of GSp_{2m}(C) (odd family) or GSO_{2m}(C) (even family),
// stored as (a_1..a_m, x0) with standard eigenvalues a_i and x0 / a_i. For
// the non-split even family the last coordinate is the value whose square
// roots form the Galois-swapped pair; it must equal the similitude.
struct SatakeClass {
  SatakeFamily family = SatakeFamily::OddGSpin;
  std::vector<Complex> satake;
  Complex similitude{1.0, 0.0};

  std::size_t m() const { return satake.size(); }
  std::size_t n() const { return family == SatakeFamily::OddGSpin ? 2 * m() + 1 : 2 * m(); }
  bool tempered(double tol = 1e-12) const;
  // Throws InvalidClass on zero coordinates or an empty non-split class.
  void validate() const;
};

EigenvalueMultiset std_eigenvalues(const SatakeClass& c);

// prod (1 - lambda q^{-s})^{-1}; PoleAtS if a factor vanishes.
Complex euler_factor(Complex s, const EigenvalueMultiset& eigenvalues, LocalFieldData field);
// prod (1 - lambda q^{-s}), the reciprocal of euler_factor without division.
Complex euler_reciprocal(Complex s, const EigenvalueMultiset& eigenvalues, LocalFieldData field);
Complex local_zeta(Complex s, LocalFieldData field);

enum class AdjointAlgebra { Sp, So, Gsp, Gso };
enum class Gspin2AdjointConvention { SingleFactor, Squared };
std::string_view to_string(AdjointAlgebra a);
AdjointAlgebra parse_adjoint_algebra(std::string_view s);

EigenvalueMultiset adjoint_eigenvalues(const SatakeClass& c, AdjointAlgebra algebra,
                                       Gspin2AdjointConvention convention = Gspin2AdjointConvention::SingleFactor);

// All lambda mu / omega over std(class_n) x std(class_{n+1}).
EigenvalueMultiset tensor_eigenvalues(const SatakeClass& class_n, const SatakeClass& class_n1, Complex omega);

// Delta_{SO(V)}: zeta(2) zeta(4) ... zeta(2m) for dim V = 2m+1, and
// zeta(2) ... zeta(2m-2) L(m, chi_V) for dim V = 2m, chi_value = chi_V(Frob).
Complex delta_so(int dim, LocalFieldData field, int chi_value = 1);
mpq_class delta_so_exact(int dim, LocalFieldData field, int chi_value = 1);

// pi (x) omega_pi^{-1/2}: coordinates scaled by the principal root of x0^{-1}.
SatakeClass unramified_sqrt_twist(const SatakeClass& c);

}  // namespace gspin
