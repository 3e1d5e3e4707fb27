#pragma once

#include <array>
#include <random>
#include <vector>

#include "gspin/lfactors.hpp"

namespace gspin {

// Unramified representation of GSpin_3 = GL_2 with Satake pair
// (alpha, beta) = (a, x0 / a).
struct SphericalRep {
  Complex a{1.0, 0.0};
  Complex similitude{1.0, 0.0};
  LocalFieldData field;

  Complex alpha() const { return a; }
  Complex beta() const { return similitude / a; }
  SatakeClass satake_class() const { return SatakeClass{SatakeFamily::OddGSpin, {a}, similitude}; }
  bool tempered(double tol = 1e-12) const { return satake_class().tempered(tol); }
};

enum class MacdonaldMode { ClosedForm, Limit };

// Phi(diag(w^k, 1)) normalized by Phi(1) = 1, for k >= 0. ClosedForm throws
// SingularSatake when alpha = beta; Limit evaluates the polynomial form,
// which is also the limit at alpha = beta.
Complex spherical_coeff(const SphericalRep& rep, int k, MacdonaldMode mode = MacdonaldMode::ClosedForm);

// vol(K diag(w^k, 1) K) with vol(K) = 1.
mpq_class cartan_measure(LocalFieldData field, int k);

// Unramified characters of GSpin_2 at the uniformizer: (c1, c2) in the split
// case, a single value c in the inert case.
struct UnramifiedCharacters {
  bool split = true;
  Complex c1{1.0, 0.0};
  Complex c2{1.0, 0.0};

  static UnramifiedCharacters make_split(Complex c1, Complex c2) { return {true, c1, c2}; }
  static UnramifiedCharacters make_inert(Complex c) { return {false, c, c}; }
  // Central character of the GSpin_2 representation at the uniformizer.
  Complex central() const { return split ? c1 * c2 : c1; }
  SatakeClass satake_class() const;
};

struct PartialSum {
  Complex value;
  double tail_bound = 0.0;
};

// C with |Phi(k)| <= C (1 + k) q^{-k/2}: the larger of the tempered bound 1
// and the empirical maximum over k <= 10.
double decay_constant(const SphericalRep& rep);
// sum_{k >= start} (1 + k)^degree r^k for 0 < r < 1.
double poly_geometric_tail(int start, int degree, double r);

PartialSum alpha_natural_n2(const SphericalRep& rep, const UnramifiedCharacters& chars, Complex omega, int truncation);
Complex closed_form_n2(const SphericalRep& rep, const UnramifiedCharacters& chars, Complex omega, bool include_delta = true);

PartialSum alpha_natural_n3(const std::array<SphericalRep, 3>& reps, Complex omega, int truncation);
Complex closed_form_n3(const std::array<SphericalRep, 3>& reps, Complex omega, bool include_delta = true);

enum class PeriodCase { N2Split, N2Inert, N3Split };
std::string_view to_string(PeriodCase c);
PeriodCase parse_period_case(std::string_view s);

struct PeriodParams {
  PeriodCase kase = PeriodCase::N2Split;
  std::vector<SphericalRep> reps;  // one for n2, three for n3
  UnramifiedCharacters chars;
  Complex omega{1.0, 0.0};
  int q() const { return reps.empty() ? 0 : reps.front().field.q; }
};

struct VerifyOptions {
  double tolerance = 1e-8;
  int truncation = 200;
  bool omit_delta = false;  // negative control
};

struct VerificationReport {
  PeriodCase kase = PeriodCase::N2Split;
  int q = 0;
  Complex lhs_sum;
  Complex rhs_closed_form;
  int truncation_K = 0;
  double tail_bound = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool omit_delta = false;
  bool pass = false;
};

VerificationReport verify_identity(const PeriodParams& params, const VerifyOptions& options);

// Tempered draws with |alpha - beta| >= 0.05 and omega the principal root of
// the required product.
PeriodParams random_period_params(PeriodCase kase, LocalFieldData field, std::mt19937_64& rng);
// Twists every representation by omega_pi^{-1/2} and rescales omega to match.
PeriodParams sqrt_twisted(const PeriodParams& params);

}  // namespace gspin
