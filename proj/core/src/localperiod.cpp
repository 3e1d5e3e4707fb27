#include "gspin/localperiod.hpp"

#include <cmath>
#include <numbers>

#include "gspin/error.hpp"

namespace gspin {

namespace {

constexpr double kConstraintTol = 1e-10;
constexpr double kSingularTol = 1e-9;

void check_omega(Complex omega, Complex required) {
  if (std::abs(omega * omega - required) > kConstraintTol * std::max(1.0, std::abs(required)))
    throw Error(ErrorKind::CentralCharacterMismatch, "omega^2 does not match the product of central characters");
}

void require_tempered(const SphericalRep& rep) {
  if (!rep.tempered(1e-9)) throw Error(ErrorKind::HypothesisViolation, "truncated sums need tempered parameters");
}

void require_unit(const UnramifiedCharacters& chars) {
  if (std::abs(std::abs(chars.c1) - 1.0) > 1e-9 || std::abs(std::abs(chars.c2) - 1.0) > 1e-9)
    throw Error(ErrorKind::HypothesisViolation, "characters must be unitary");
}

Complex unit(double theta) { return std::polar(1.0, theta); }

bool near_singular(const SphericalRep& rep) {
  return std::abs(rep.alpha() - rep.beta()) <= kSingularTol * std::max(std::abs(rep.alpha()), std::abs(rep.beta()));
}

// Closed form away from alpha = beta, limit form on it.
Complex phi(const SphericalRep& rep, int k) {
  return spherical_coeff(rep, k, near_singular(rep) ? MacdonaldMode::Limit : MacdonaldMode::ClosedForm);
}

}  // namespace

Complex spherical_coeff(const SphericalRep& rep, int k, MacdonaldMode mode) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "spherical_coeff needs k >= 0");
  rep.satake_class().validate();
  if (k == 0) return Complex(1.0, 0.0);
  const double q = rep.field.q;
  const Complex al = rep.alpha();
  const Complex be = rep.beta();
  const double scale = std::pow(q, -0.5 * k) / (1.0 + 1.0 / q);
  bool singular = near_singular(rep);
  if (mode == MacdonaldMode::Limit) {
    // s_k - q^{-1} alpha beta s_{k-2} with s_j the complete symmetric polynomials.
    auto h = [&](int j) {
      Complex s(0.0, 0.0);
      for (int i = 0; i <= j; ++i) s += std::pow(al, i) * std::pow(be, j - i);
      return s;
    };
    Complex body = h(k) - (k >= 2 ? al * be * h(k - 2) / q : Complex(0.0, 0.0));
    return scale * body;
  }
  if (singular) throw Error(ErrorKind::SingularSatake, "alpha = beta needs the limit mode");
  Complex ca = (1.0 - be / (al * q)) / (1.0 - be / al);
  Complex cb = (1.0 - al / (be * q)) / (1.0 - al / be);
  return scale * (ca * std::pow(al, k) + cb * std::pow(be, k));
}

mpq_class cartan_measure(LocalFieldData field, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "cartan_measure needs k >= 0");
  if (k == 0) return 1;
  mpz_class q = field.q;
  mpz_class qk;
  mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k - 1));
  return mpq_class(qk * (q + 1));
}

SatakeClass UnramifiedCharacters::satake_class() const {
  if (split) return SatakeClass{SatakeFamily::EvenGSpinSplit, {c1}, c1 * c2};
  return SatakeClass{SatakeFamily::EvenGSpinNonsplit, {c1}, c1};
}

double decay_constant(const SphericalRep& rep) {
  double c = 1.0;
  double q = rep.field.q;
  for (int k = 0; k <= 10; ++k) {
    Complex phi = spherical_coeff(rep, k, MacdonaldMode::Limit);
    c = std::max(c, std::abs(phi) * std::pow(q, 0.5 * k) / (1.0 + k));
  }
  return c;
}

double poly_geometric_tail(int start, int degree, double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::InvalidArgument, "tail ratio must lie in (0, 1)");
  double total = 0.0;
  int k = std::max(start, 0);
  // Sum until the term ratio bound drops below 3/4, then close geometrically.
  for (;; ++k) {
    double term = std::pow(1.0 + k, degree) * std::pow(r, k);
    double ratio = std::pow((2.0 + k) / (1.0 + k), degree) * r;
    if (ratio < 0.75) return total + term / (1.0 - ratio);
    total += term;
  }
}

PartialSum alpha_natural_n2(const SphericalRep& rep, const UnramifiedCharacters& chars, Complex omega, int truncation) {
  if (truncation < 0) throw Error(ErrorKind::InvalidArgument, "truncation must be >= 0");
  require_tempered(rep);
  require_unit(chars);
  check_omega(omega, rep.similitude * chars.central());
  if (!chars.split) return PartialSum{Complex(1.0, 0.0), 0.0};
  const Complex chi = chars.c1 / omega;
  const Complex x0 = rep.similitude;
  Complex sum = spherical_coeff(rep, 0);
  for (int k = 1; k <= truncation; ++k) {
    Complex v = phi(rep, k);
    // diag(w^-k, 1) is w^-k diag(1, w^k), conjugate to w^-k diag(w^k, 1).
    sum += v * std::pow(chi, k) + v * std::pow(x0 * chi, -k);
  }
  double r = std::pow(static_cast<double>(rep.field.q), -0.5);
  double tail = 2.0 * decay_constant(rep) * poly_geometric_tail(truncation + 1, 1, r);
  return PartialSum{sum, tail};
}

namespace {

Complex l_half_over_l_one(const EigenvalueMultiset& tensor, const EigenvalueMultiset& adjoint, LocalFieldData f) {
  // L(1/2, tensor) / L(1, Ad), written with the reciprocal polynomial of the
  // adjoint factor so that a pole of L(1, Ad) gives an exact zero.
  return euler_factor(Complex(0.5, 0.0), tensor, f) * euler_reciprocal(Complex(1.0, 0.0), adjoint, f);
}

}  // namespace

Complex closed_form_n2(const SphericalRep& rep, const UnramifiedCharacters& chars, Complex omega, bool include_delta) {
  check_omega(omega, rep.similitude * chars.central());
  SatakeClass pi3 = rep.satake_class();
  SatakeClass pi2 = chars.satake_class();
  EigenvalueMultiset tensor = tensor_eigenvalues(pi2, pi3, omega);
  EigenvalueMultiset adjoint = adjoint_eigenvalues(pi3, AdjointAlgebra::Sp);
  for (const auto& v : adjoint_eigenvalues(pi2, AdjointAlgebra::So, Gspin2AdjointConvention::SingleFactor))
    adjoint.push_back(v);
  Complex value = l_half_over_l_one(tensor, adjoint, rep.field);
  if (include_delta) value *= delta_so(3, rep.field);
  return value;
}

PartialSum alpha_natural_n3(const std::array<SphericalRep, 3>& reps, Complex omega, int truncation) {
  if (truncation < 0) throw Error(ErrorKind::InvalidArgument, "truncation must be >= 0");
  LocalFieldData field = reps[0].field;
  Complex central(1.0, 0.0);
  double c = 1.0;
  for (const auto& r : reps) {
    if (r.field.q != field.q) throw Error(ErrorKind::InvalidArgument, "representations must share q");
    require_tempered(r);
    central *= r.similitude;
    c *= decay_constant(r);
  }
  check_omega(omega, central);
  const double q = field.q;
  Complex sum(1.0, 0.0);
  for (int k = 1; k <= truncation; ++k) {
    Complex prod = std::pow(omega, -k);
    for (const auto& r : reps) prod *= phi(r, k);
    sum += cartan_measure(field, k).get_d() * prod;
  }
  // vol(k) = q^k (1 + 1/q), so the summand is at most C^3 (1 + 1/q) (1 + k)^3 q^{-k/2}.
  double tail = c * (1.0 + 1.0 / q) * poly_geometric_tail(truncation + 1, 3, std::pow(q, -0.5));
  return PartialSum{sum, tail};
}

Complex closed_form_n3(const std::array<SphericalRep, 3>& reps, Complex omega, bool include_delta) {
  LocalFieldData field = reps[0].field;
  check_omega(omega, reps[0].similitude * reps[1].similitude * reps[2].similitude);
  // GSpin_4 = (GL_2 x GL_2) / GL_1 carries the pair (reps[1], reps[2]).
  const SphericalRep& u = reps[1];
  const SphericalRep& v = reps[2];
  SatakeClass pi4{SatakeFamily::EvenGSpinSplit, {u.alpha() * v.alpha(), u.alpha() * v.beta()}, u.similitude * v.similitude};
  SatakeClass pi3 = reps[0].satake_class();
  EigenvalueMultiset tensor = tensor_eigenvalues(pi3, pi4, omega);
  EigenvalueMultiset adjoint = adjoint_eigenvalues(pi3, AdjointAlgebra::Sp);
  for (const auto& x : adjoint_eigenvalues(pi4, AdjointAlgebra::So)) adjoint.push_back(x);
  Complex value = l_half_over_l_one(tensor, adjoint, field);
  if (include_delta) value *= delta_so(4, field, 1);
  return value;
}

std::string_view to_string(PeriodCase c) {
  switch (c) {
    case PeriodCase::N2Split: return "n2_split";
    case PeriodCase::N2Inert: return "n2_inert";
    case PeriodCase::N3Split: return "n3_split";
  }
  return "?";
}

PeriodCase parse_period_case(std::string_view s) {
  if (s == "n2_split") return PeriodCase::N2Split;
  if (s == "n2_inert") return PeriodCase::N2Inert;
  if (s == "n3_split") return PeriodCase::N3Split;
  throw Error(ErrorKind::InvalidArgument, "unknown case '" + std::string(s) + "'");
}

VerificationReport verify_identity(const PeriodParams& params, const VerifyOptions& options) {
  if (!(options.tolerance > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  VerificationReport rep;
  rep.kase = params.kase;
  rep.q = params.q();
  rep.truncation_K = options.truncation;
  rep.tolerance = options.tolerance;
  rep.omit_delta = options.omit_delta;
  PartialSum lhs;
  if (params.kase == PeriodCase::N3Split) {
    if (params.reps.size() != 3) throw Error(ErrorKind::InvalidArgument, "n3_split needs three representations");
    std::array<SphericalRep, 3> r{params.reps[0], params.reps[1], params.reps[2]};
    lhs = alpha_natural_n3(r, params.omega, options.truncation);
    rep.rhs_closed_form = closed_form_n3(r, params.omega, !options.omit_delta);
  } else {
    if (params.reps.size() != 1) throw Error(ErrorKind::InvalidArgument, "n2 cases need one representation");
    if (params.chars.split != (params.kase == PeriodCase::N2Split))
      throw Error(ErrorKind::InvalidArgument, "character data does not match the case");
    lhs = alpha_natural_n2(params.reps[0], params.chars, params.omega, options.truncation);
    rep.rhs_closed_form = closed_form_n2(params.reps[0], params.chars, params.omega, !options.omit_delta);
  }
  rep.lhs_sum = lhs.value;
  rep.tail_bound = lhs.tail_bound;
  double scale = std::abs(rep.rhs_closed_form);
  double diff = std::abs(rep.lhs_sum - rep.rhs_closed_form);
  rep.rel_error = scale > 0.0 ? diff / scale : diff;
  rep.pass = rep.rel_error <= options.tolerance && rep.tail_bound <= options.tolerance * scale;
  return rep;
}

PeriodParams random_period_params(PeriodCase kase, LocalFieldData field, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  auto draw_rep = [&]() {
    for (;;) {
      SphericalRep r{unit(angle(rng)), unit(angle(rng)), field};
      if (std::abs(r.alpha() - r.beta()) >= 0.05) return r;
    }
  };
  PeriodParams p;
  p.kase = kase;
  Complex product(1.0, 0.0);
  if (kase == PeriodCase::N3Split) {
    for (int i = 0; i < 3; ++i) {
      p.reps.push_back(draw_rep());
      product *= p.reps.back().similitude;
    }
  } else {
    p.reps.push_back(draw_rep());
    if (kase == PeriodCase::N2Split) {
      Complex c1 = unit(angle(rng));
      Complex c2 = unit(angle(rng));
      p.chars = UnramifiedCharacters::make_split(c1, c2);
    } else {
      p.chars = UnramifiedCharacters::make_inert(unit(angle(rng)));
    }
    product = p.reps[0].similitude * p.chars.central();
  }
  p.omega = std::sqrt(product);
  return p;
}

PeriodParams sqrt_twisted(const PeriodParams& params) {
  PeriodParams t = params;
  Complex factor(1.0, 0.0);
  for (auto& r : t.reps) {
    SatakeClass tw = unramified_sqrt_twist(r.satake_class());
    factor *= std::sqrt(r.similitude);
    r.a = tw.satake[0];
    r.similitude = tw.similitude;
  }
  if (params.kase != PeriodCase::N3Split) {
    SatakeClass tw = unramified_sqrt_twist(params.chars.satake_class());
    factor *= std::sqrt(params.chars.central());
    if (params.chars.split) {
      t.chars = UnramifiedCharacters::make_split(tw.satake[0], tw.similitude / tw.satake[0]);
    } else {
      t.chars = UnramifiedCharacters::make_inert(tw.satake[0]);
    }
  }
  t.omega = params.omega / factor;
  return t;
}

}  // namespace gspin
