#include "gspin/structure.hpp"

#include <bit>

#include "gspin/error.hpp"

namespace gspin {

namespace {

std::vector<Mask> even_masks(std::size_t n) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (grade(m) % 2 == 0) out.push_back(m);
  return out;
}

bool star_fixes(Mask m) {
  int k = grade(m);
  return (k * (k - 1) / 2) % 2 == 0;
}

InvolutionKind kind_from_fixed(std::size_t fixed, std::size_t m) {
  if (2 * fixed == m * (m + 1)) return InvolutionKind::Orthogonal;
  if (2 * fixed == m * (m - 1)) return InvolutionKind::Symplectic;
  throw Error(ErrorKind::FormNotFound, "fixed subspace of dimension " + std::to_string(fixed) +
                                           " matches no involution type in degree " + std::to_string(m));
}

Scalar top_square(const BasisPtr& basis) {
  Mask top = basis->full_mask();
  CliffordElement z = CliffordElement::monomial(basis, top);
  return (z * z).coeff(0);
}

Matrix zero4(std::uint32_t p) { return Matrix(4, 4, p); }

}  // namespace

std::string_view to_string(CenterKind k) {
  switch (k) {
    case CenterKind::BaseField: return "base_field";
    case CenterKind::Split: return "split";
    case CenterKind::QuadraticField: return "quadratic_field";
  }
  return "?";
}

std::string_view to_string(InvolutionKind k) {
  switch (k) {
    case InvolutionKind::Orthogonal: return "orthogonal";
    case InvolutionKind::Symplectic: return "symplectic";
    case InvolutionKind::Unitary: return "unitary";
  }
  return "?";
}

InvolutionKind expected_involution_kind(std::size_t n) {
  switch (n % 8) {
    case 0:
    case 1:
    case 7: return InvolutionKind::Orthogonal;
    case 3:
    case 4:
    case 5: return InvolutionKind::Symplectic;
    default: return InvolutionKind::Unitary;
  }
}

std::vector<CliffordElement> center_basis(const BasisPtr& basis) {
  std::size_t n = basis->dim();
  if (n > kMaxStructureDim)
    throw Error(ErrorKind::DimensionCap, "center computation is capped at dimension " + std::to_string(kMaxStructureDim));
  std::vector<Mask> even = even_masks(n);
  std::vector<std::size_t> index(std::size_t{1} << n, 0);
  for (std::size_t k = 0; k < even.size(); ++k) index[even[k]] = k;
  std::uint32_t p = basis->modulus();
  std::size_t gens = n > 1 ? n - 1 : 0;
  Matrix eq(gens * even.size(), even.size(), p);
  // x commutes with C^+ iff it commutes with the generators e_1 e_j.
  for (std::size_t j = 1; j < n; ++j) {
    Mask g = Mask{1} | (Mask{1} << j);
    for (std::size_t k = 0; k < even.size(); ++k) {
      Mask a = even[k];
      int diff = monomial_sign(a, g) - monomial_sign(g, a);
      if (diff == 0) continue;
      eq((j - 1) * even.size() + index[a ^ g], k) = Scalar(diff) * basis->square_product(a & g);
    }
  }
  std::vector<CliffordElement> out;
  for (const auto& v : nullspace(eq)) {
    CliffordElement z(basis);
    for (std::size_t k = 0; k < even.size(); ++k) z.add_term(even[k], v[k]);
    out.push_back(std::move(z));
  }
  return out;
}

EvenCliffordClassification classify_even_clifford(const QuadraticSpace& space) {
  BasisPtr basis = CliffordBasis::create(space);
  std::size_t n = space.dim();
  EvenCliffordClassification c;
  c.dim = n;
  auto center = center_basis(basis);
  c.center_dim = center.size();
  std::vector<Mask> fixed;
  for (Mask m : even_masks(n))
    if (star_fixes(m)) fixed.push_back(m);
  c.fixed_dim = fixed.size();
  c.center_class = SquareClass{1, basis->modulus()};
  if (n % 2 == 1) {
    if (c.center_dim != 1) throw Error(ErrorKind::FormNotFound, "odd-dimensional center is not the base field");
    c.center_kind = CenterKind::BaseField;
    c.factor_degree = std::size_t{1} << ((n - 1) / 2);
    c.factor_kinds = {kind_from_fixed(c.fixed_dim, c.factor_degree)};
    c.involution_kind = c.factor_kinds.front();
    return c;
  }
  if (c.center_dim != 2) throw Error(ErrorKind::FormNotFound, "even-dimensional center is not of rank 2");
  Scalar z2 = top_square(basis);
  c.center_class = square_class(z2);
  c.center_kind = c.center_class.is_trivial() ? CenterKind::Split : CenterKind::QuadraticField;
  c.factor_degree = std::size_t{1} << ((n - 2) / 2);
  if (!star_fixes(basis->full_mask())) {
    c.involution_kind = InvolutionKind::Unitary;
    c.factor_kinds = {InvolutionKind::Unitary};
    return c;
  }
  if (c.center_kind == CenterKind::QuadraticField) {
    c.factor_kinds = {kind_from_fixed(c.fixed_dim / 2, c.factor_degree)};
  } else {
    Scalar s = *square_root(z2);
    CliffordElement zn = CliffordElement::monomial(basis, basis->full_mask(), s.inverse());
    CliffordElement one = CliffordElement::scalar(basis, 1);
    Scalar half = space.scalar(mpq_class(1, 2));
    for (int sign : {1, -1}) {
      CliffordElement e = (one + zn * Scalar(sign)) * half;
      std::vector<Mask> masks = even_masks(n);
      std::vector<std::size_t> index(std::size_t{1} << n, 0);
      for (std::size_t k = 0; k < masks.size(); ++k) index[masks[k]] = k;
      Matrix img(fixed.size(), masks.size(), basis->modulus());
      for (std::size_t r = 0; r < fixed.size(); ++r) {
        CliffordElement y = CliffordElement::monomial(basis, fixed[r]) * e;
        for (const auto& [m, v] : y.terms()) img(r, index[m]) = v;
      }
      c.factor_kinds.push_back(kind_from_fixed(rank(img), c.factor_degree));
    }
  }
  c.involution_kind = c.factor_kinds.front();
  for (auto k : c.factor_kinds)
    if (k != c.involution_kind) throw Error(ErrorKind::FormNotFound, "simple factors carry different involution types");
  return c;
}

QuaternionData quaternion_data(const QuadraticSpace& space) {
  if (space.dim() != 3) throw Error(ErrorKind::HypothesisViolation, "quaternion data needs a ternary form");
  BasisPtr basis = CliffordBasis::create(space);
  const Vector& d = basis->diag();
  QuaternionData out{basis, -(d[0] * d[1]), -(d[1] * d[2]), CliffordElement::monomial(basis, 0b011),
                     CliffordElement::monomial(basis, 0b110), {}};
  if (basis->modulus() != 0) return out;
  const mpq_class& a = out.i_square.value();
  const mpq_class& b = out.j_square.value();
  mpz_class all = 2 * a.get_num() * a.get_den() * b.get_num() * b.get_den();
  std::vector<Place> places{Place::real()};
  for (const auto& p : prime_divisors(all)) places.push_back(Place::finite(p));
  for (const auto& v : places)
    if (hilbert_symbol(a, b, v) == -1) out.ramified.push_back(v);
  return out;
}

Matrix SpinModuleWitness::action(const CliffordElement& x) const {
  if (!same_basis(x.basis(), basis)) throw Error(ErrorKind::BasisMismatch, "element is not over the witness basis");
  if (!x.is_even()) throw Error(ErrorKind::InvalidArgument, "spin module action needs an even element");
  Matrix m = zero4(basis->modulus());
  for (const auto& [mask, c] : x.terms()) m = m + c * monomial_action[mask];
  return m;
}

std::optional<Scalar> SpinModuleWitness::similitude(const Matrix& m) const {
  Matrix p = m.transpose() * form * m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (!form(r, c).is_zero()) {
        Scalar lambda = p(r, c) / form(r, c);
        if (p == lambda * form) return lambda;
        return std::nullopt;
      }
  return std::nullopt;
}

CliffordElement SpinModuleWitness::pullback(const Matrix& m) const {
  std::vector<Mask> masks = even_masks(basis->dim());
  Matrix sys(16, masks.size(), basis->modulus());
  for (std::size_t k = 0; k < masks.size(); ++k)
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) sys(r * 4 + c, k) = monomial_action[masks[k]](r, c);
  Vector rhs;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) rhs.push_back(m(r, c));
  auto sol = solve(sys, rhs);
  if (!sol) throw Error(ErrorKind::NotInvertible, "matrix is outside the image of the even Clifford algebra");
  CliffordElement x(basis);
  for (std::size_t k = 0; k < masks.size(); ++k) x.add_term(masks[k], (*sol)[k]);
  return x;
}

SpinModuleWitness spin_module_split(const QuadraticSpace& space) {
  const Matrix& g = space.gram();
  auto expect = [&](std::size_t i, std::size_t j) -> Scalar {
    if ((i == 0 && j == 1) || (i == 1 && j == 0) || (i == 2 && j == 3) || (i == 3 && j == 2)) return Scalar(1);
    return Scalar(0);
  };
  bool shaped = space.dim() == 5;
  for (std::size_t i = 0; shaped && i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (!(i == 4 && j == 4) && !(g(i, j) == expect(i, j))) shaped = false;
  if (!shaped) throw Error(ErrorKind::HypothesisViolation, "expected the form H + H + <a>");
  BasisPtr basis = CliffordBasis::create(space);
  std::uint32_t p = basis->modulus();
  Scalar a = g(4, 4);
  auto one = Scalar::from_rational(1, p);

  Matrix wedge1 = zero4(p), wedge2 = zero4(p), iota1 = zero4(p), iota2 = zero4(p), grading = zero4(p);
  wedge1(1, 0) = one;
  wedge1(3, 2) = one;
  wedge2(2, 0) = one;
  wedge2(3, 1) = -one;
  iota1(0, 1) = one;
  iota1(2, 3) = one;
  iota2(0, 2) = one;
  iota2(1, 3) = -one;
  grading(0, 0) = one;
  grading(1, 1) = -one;
  grading(2, 2) = -one;
  grading(3, 3) = one;

  // Representation of C(U, lambda q) on the exterior algebra of span(x1, x2).
  const Matrix& ortho = basis->orthogonal_basis();
  auto sigma = [&](std::size_t i, const Scalar& lambda) {
    Scalar y_scale = Scalar(2) * lambda;
    return ortho(0, i) * wedge1 + (ortho(1, i) * y_scale) * iota1 + ortho(2, i) * wedge2 +
           (ortho(3, i) * y_scale) * iota2;
  };
  Scalar neg_a = -a;
  Scalar inv_a = a.inverse();
  std::vector<Matrix> sig;
  for (std::size_t i = 0; i < 4; ++i) sig.push_back(sigma(i, neg_a));

  SpinModuleWitness w;
  w.basis = basis;
  w.monomial_action.assign(32, Matrix());
  // C^+(U + <a>) = C(U, -a q) via u -> u w, so f_i f_j acts as -(1/a) s(f_i) s(f_j)
  // and f_i w as s(f_i).
  for (Mask m : even_masks(5)) {
    Matrix acc = Matrix::identity(4, p);
    std::vector<std::size_t> idx;
    for (Mask r = m; r != 0; r &= r - 1) idx.push_back(static_cast<std::size_t>(std::countr_zero(r)));
    for (std::size_t k = 0; k < idx.size(); k += 2) {
      std::size_t i = idx[k];
      std::size_t j = idx[k + 1];
      Matrix pair = j == 4 ? sig[i] : (-inv_a) * (sig[i] * sig[j]);
      acc = acc * pair;
    }
    w.monomial_action[m] = acc;
  }

  if (auto s = square_root(a)) {
    for (std::size_t i = 0; i < 4; ++i) w.vector_action.push_back(sigma(i, one));
    w.vector_action.push_back(*s * grading);
  }

  Matrix eq(10 * 16, 16, p);
  std::size_t row = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      const Matrix& r = w.monomial_action[(Mask{1} << i) | (Mask{1} << j)];
      // r^T B + B r = 0 since (f_i f_j)* = -f_i f_j.
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) {
          for (std::size_t k = 0; k < 4; ++k) {
            eq(row, k * 4 + y) += r(k, x);
            eq(row, x * 4 + k) += r(k, y);
          }
          ++row;
        }
    }
  auto kernel = nullspace(eq);
  if (kernel.size() != 1)
    throw Error(ErrorKind::FormNotFound, "invariant form space has dimension " + std::to_string(kernel.size()));
  w.form = Matrix(4, 4, p);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) w.form(x, y) = kernel[0][x * 4 + y];
  if (!(w.form.transpose() == (Scalar(-1) * w.form)) || determinant(w.form).is_zero())
    throw Error(ErrorKind::FormNotFound, "invariant form is not a nondegenerate alternating form");
  return w;
}

bool LowRankReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

namespace {

struct Tally {
  std::size_t ok = 0;
  std::size_t total = 0;
  std::string first_failure;
  void add(bool pass, const std::string& what) {
    ++total;
    if (pass) {
      ++ok;
    } else if (first_failure.empty()) {
      first_failure = what;
    }
  }
  Check to_check(const std::string& name) const {
    std::string detail = std::to_string(ok) + "/" + std::to_string(total);
    if (!first_failure.empty()) detail += "; first failure: " + first_failure;
    return Check{name, total > 0 && ok == total, detail};
  }
};

bool certified(const CliffordElement& g) { return std::holds_alternative<GSpinElement>(is_gspin(g)); }

Scalar norm_of(const CliffordElement& g) {
  auto n = spinor_norm(g);
  return n.scalar ? *n.scalar : Scalar::from_rational(0, g.basis()->modulus());
}

CliffordElement random_invertible_even(const BasisPtr& basis, Rng& rng) {
  for (;;) {
    CliffordElement g = random_element(basis, rng, 3, 0.7, true);
    if (g.is_zero()) continue;
    try {
      invert(g);
      return g;
    } catch (const Error&) {
    }
  }
}

Matrix random_transvection(const SpinModuleWitness& w, Rng& rng) {
  std::uint32_t p = w.basis->modulus();
  Vector u;
  for (int k = 0; k < 4; ++k) u.push_back(random_integer(rng, 2, p));
  Scalar c = random_nonzero(rng, 2, p);
  // T(x) = x + c B(u, x) u.
  Matrix t = Matrix::identity(4, p);
  Vector bu(4, Scalar::from_rational(0, p));
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) bu[j] += u[i] * w.form(i, j);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t(i, j) += c * bu[j] * u[i];
  return t;
}

}  // namespace

LowRankReport verify_low_rank(const QuadraticSpace& space, std::size_t n, std::size_t samples, std::uint64_t seed) {
  if (n < 1 || n > 5) throw Error(ErrorKind::HypothesisViolation, "low-rank identification covers n = 1..5");
  if (space.dim() != n)
    throw Error(ErrorKind::HypothesisViolation, "space has dimension " + std::to_string(space.dim()) + ", expected " + std::to_string(n));
  LowRankReport rep;
  rep.n = n;
  rep.samples = samples;
  rep.seed = seed;
  rep.classification = classify_even_clifford(space);
  rep.checks.push_back(Check{"involution_type", rep.classification.involution_kind == expected_involution_kind(n),
                             std::string(to_string(rep.classification.involution_kind))});
  Rng rng(seed);
  BasisPtr basis = CliffordBasis::create(space);
  std::uint32_t p = basis->modulus();
  bool signed_trivial = discriminant(space, true).is_trivial();
  if (n % 2 == 0) {
    bool split = rep.classification.center_kind == CenterKind::Split;
    rep.checks.push_back(Check{"center_split_iff_signed_disc_trivial", split == signed_trivial,
                               "signed disc class " + discriminant(space, true).to_string()});
  }

  switch (n) {
    case 1: {
      // C^+ = F, so GSpin_1 = GL_1 with norm g^2.
      Tally t;
      for (std::size_t s = 0; s < samples; ++s) {
        CliffordElement g = CliffordElement::scalar(basis, random_nonzero(rng, 50, p));
        Scalar c = g.coeff(0);
        t.add(certified(g) && norm_of(g) == c * c, "scalar " + c.to_string());
      }
      rep.checks.push_back(t.to_check("gspin1_is_gl1"));
      break;
    }
    case 2: {
      // C^+ = F + F z with z^2 = -q1 q2; N(t + x z) = t^2 - z^2 x^2 is the norm form.
      Scalar z2 = (CliffordElement::monomial(basis, 0b11) * CliffordElement::monomial(basis, 0b11)).coeff(0);
      Tally norm;
      Tally commute;
      std::optional<CliffordElement> prev;
      for (std::size_t s = 0; s < samples; ++s) {
        CliffordElement g = random_invertible_even(basis, rng);
        Scalar t0 = g.coeff(0);
        Scalar x = g.coeff(0b11);
        norm.add(certified(g) && norm_of(g) == t0 * t0 - z2 * x * x, "sample " + std::to_string(s));
        if (prev) commute.add(g * *prev == *prev * g, "sample " + std::to_string(s));
        prev = g;
      }
      rep.checks.push_back(norm.to_check("gspin2_norm_form"));
      rep.checks.push_back(commute.to_check("gspin2_abelian"));
      break;
    }
    case 3: {
      // Every unit of the quaternion algebra C^+ is in GSpin and N is the reduced norm.
      QuaternionData qd = quaternion_data(space);
      Scalar q2 = basis->diag()[1];
      Tally t;
      for (std::size_t s = 0; s < samples; ++s) {
        CliffordElement g = random_invertible_even(basis, rng);
        Scalar a0 = g.coeff(0), x = g.coeff(0b011), y = g.coeff(0b110), z = g.coeff(0b101) / q2;
        Scalar nrd = a0 * a0 - qd.i_square * x * x - qd.j_square * y * y + qd.i_square * qd.j_square * z * z;
        t.add(certified(g) && norm_of(g) == nrd, "sample " + std::to_string(s));
      }
      rep.checks.push_back(t.to_check("gspin3_reduced_norm"));
      rep.checks.push_back(Check{"quaternion_relations",
                                 qd.i * qd.i == CliffordElement::scalar(basis, qd.i_square) &&
                                     qd.j * qd.j == CliffordElement::scalar(basis, qd.j_square) &&
                                     qd.i * qd.j == -(qd.j * qd.i),
                                 ""});
      break;
    }
    case 4: {
      // GSpin_4 is the set of units with scalar norm.
      Tally accepted;
      Tally rejected;
      std::size_t attempts = 0;
      while (accepted.total < samples && attempts < 400 * (samples + 1)) {
        ++attempts;
        CliffordElement g = random_element(basis, rng, 2, 0.6, true);
        if (g.is_zero()) continue;
        SpinorNorm nm = spinor_norm(g);
        bool unit = true;
        try {
          invert(g);
        } catch (const Error&) {
          unit = false;
        }
        if (!unit) continue;
        bool in = certified(g);
        if (nm.scalar) {
          accepted.add(in, "sample " + std::to_string(attempts));
        } else if (rejected.total < samples) {
          rejected.add(!in, "sample " + std::to_string(attempts));
        }
      }
      rep.checks.push_back(accepted.to_check("gspin4_scalar_norm_units_accepted"));
      rep.checks.push_back(rejected.to_check("gspin4_nonscalar_norm_units_rejected"));
      break;
    }
    case 5: {
      SpinModuleWitness w = spin_module_split(space);
      {
        bool alternating = w.form.transpose() == Scalar(-1) * w.form && !determinant(w.form).is_zero();
        bool invariant = true;
        for (std::size_t i = 0; i < 5; ++i)
          for (std::size_t j = i + 1; j < 5; ++j) {
            Matrix r = w.action(CliffordElement::monomial(basis, (Mask{1} << i) | (Mask{1} << j)));
            invariant = invariant && (r.transpose() * w.form + w.form * r) == Matrix(4, 4, space.field().modulus());
          }
        rep.checks.push_back(Check{"invariant_form_alternating", alternating && invariant,
                                   std::string(alternating ? "alternating, nondegenerate" : "degenerate or not alternating") +
                                       (invariant ? "; e_ie_j act skew" : "; not invariant")});
      }
      Tally hom;
      for (std::size_t s = 0; s < std::max<std::size_t>(samples / 4, 1); ++s) {
        CliffordElement x = random_element(basis, rng, 2, 0.4, true);
        CliffordElement y = random_element(basis, rng, 2, 0.4, true);
        hom.add(w.action(x * y) == w.action(x) * w.action(y), "pair " + std::to_string(s));
      }
      rep.checks.push_back(hom.to_check("action_is_multiplicative"));
      Tally sim;
      for (std::size_t s = 0; s < samples; ++s) {
        Matrix t = random_transvection(w, rng) * random_transvection(w, rng) * random_transvection(w, rng);
        CliffordElement g = w.pullback(t) * random_versor(basis, rng, 2, 2);
        auto lambda = w.similitude(w.action(g));
        bool ok = certified(g) && lambda && *lambda == norm_of(g);
        sim.add(ok, "sample " + std::to_string(s));
      }
      rep.checks.push_back(sim.to_check("gspin5_similitude_factor_is_norm"));
      break;
    }
    default: break;
  }
  return rep;
}

}  // namespace gspin
