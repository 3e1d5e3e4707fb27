#include "gspin/quadspace.hpp"

#include "gspin/error.hpp"

namespace gspin {

namespace {

Vector unit(std::size_t n, std::size_t i, std::uint32_t p) {
  Vector v(n, Scalar::from_rational(0, p));
  v[i] = Scalar::from_rational(1, p);
  return v;
}

Scalar form(const Matrix& g, const Vector& x, const Vector& y) { return dot(x, g * y); }

mpz_class rational_to_integer_class(const mpq_class& a) { return a.get_num() * a.get_den(); }

// a = p^alpha * u with u a p-adic unit.
int split_valuation(mpz_class& a, const mpz_class& p) {
  int alpha = 0;
  while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()) != 0) {
    a /= p;
    ++alpha;
  }
  return alpha;
}

int mod_small(const mpz_class& a, unsigned long m) {
  return static_cast<int>(mpz_fdiv_ui(a.get_mpz_t(), m));
}

int legendre_mpz(const mpz_class& a, const mpz_class& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

bool isotropic_padic(std::size_t n, const mpq_class& d, int eps, const Place& v) {
  switch (n) {
    case 0:
    case 1: return false;
    case 2: return is_local_square(-d, v);
    case 3: return hilbert_symbol(-1, -d, v) == eps;
    case 4: return !is_local_square(d, v) || eps == hilbert_symbol(-1, -1, v);
    default: return true;
  }
}

}  // namespace

FieldTag FieldTag::prime_field(std::uint32_t p) {
  if (p == 2) throw Error(ErrorKind::UnsupportedField, "characteristic 2 is not supported");
  if (p >= (1U << 31) || !is_prime(p))
    throw Error(ErrorKind::UnsupportedField, "F_p requires an odd prime p < 2^31, got " + std::to_string(p));
  return FieldTag(Kind::PrimeField, p);
}

FieldTag FieldTag::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text == "C") return complex_float();
  if (text.rfind("Fp:", 0) == 0) {
    try {
      unsigned long p = std::stoul(text.substr(3));
      if (p > 0xFFFFFFFFUL) throw Error(ErrorKind::UnsupportedField, "modulus too large");
      return prime_field(static_cast<std::uint32_t>(p));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "invalid field '" + text + "'");
    }
  }
  throw Error(ErrorKind::ParseError, "invalid field '" + text + "'");
}

std::string FieldTag::to_string() const {
  switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "Fp:" + std::to_string(p_);
    case Kind::ComplexFloat: return "C";
  }
  return "?";
}

QuadraticSpace::QuadraticSpace(Matrix gram, FieldTag field) : field_(field) {
  if (field.kind() == FieldTag::Kind::ComplexFloat)
    throw Error(ErrorKind::UnsupportedField, "quadratic spaces are exact; ComplexFloat is not allowed");
  if (gram.rows() == 0 || gram.rows() != gram.cols())
    throw Error(ErrorKind::InvalidArgument, "gram matrix must be square and nonempty");
  std::uint32_t p = field.modulus();
  gram_ = Matrix(gram.rows(), gram.cols(), p);
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) gram_(i, j) = gram(i, j).in_field(p);
  if (!gram_.is_symmetric()) throw Error(ErrorKind::InvalidArgument, "gram matrix must be symmetric");
  diag_ = diagonalize(gram_);
}

Scalar QuadraticSpace::bilinear(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw Error(ErrorKind::InvalidArgument, "vector length mismatch");
  return form(gram_, x, y);
}

Scalar QuadraticSpace::zero() const { return Scalar::from_rational(0, field_.modulus()); }

Scalar QuadraticSpace::scalar(const mpq_class& v) const { return Scalar::from_rational(v, field_.modulus()); }

Diagonalization diagonalize(const Matrix& gram) {
  std::size_t n = gram.rows();
  std::uint32_t p = gram.modulus();
  std::vector<Vector> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(unit(n, i, p));
  Vector d(n);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar qi = form(gram, v[i], v[i]);
    if (qi.is_zero()) {
      std::size_t j = i + 1;
      Scalar bij;
      for (; j < n; ++j) {
        bij = form(gram, v[i], v[j]);
        if (!bij.is_zero()) break;
      }
      if (j == n) throw Error(ErrorKind::DegenerateForm, "gram matrix is singular");
      Scalar qj = form(gram, v[j], v[j]);
      Scalar plus = Scalar(2) * bij + qj;
      Scalar sign = plus.is_zero() ? Scalar(-1) : Scalar(1);
      for (std::size_t k = 0; k < n; ++k) v[i][k] += sign * v[j][k];
      qi = form(gram, v[i], v[i]);
    }
    d[i] = qi;
    Scalar inv = qi.inverse();
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar c = form(gram, v[j], v[i]);
      if (c.is_zero()) continue;
      c *= inv;
      for (std::size_t k = 0; k < n; ++k) v[j][k] -= c * v[i][k];
    }
  }
  return Diagonalization{Matrix::from_columns(v, n), d};
}

Diagonalization diagonalize(const QuadraticSpace& space) { return space.orthogonal_basis(); }

mpz_class squarefree_part(const mpz_class& n) {
  if (n == 0) throw Error(ErrorKind::ZeroArgument, "squarefree part of zero");
  mpz_class r = abs(n);
  mpz_class out = sgn(n) < 0 ? -1 : 1;
  // After removing all primes up to the cube root, the cofactor is 1, a
  // prime, a product of two distinct primes or a prime square.
  for (mpz_class d = 2; d * d * d <= r; ++d) {
    if (mpz_divisible_p(r.get_mpz_t(), d.get_mpz_t()) == 0) continue;
    int e = split_valuation(r, d);
    if (e % 2 == 1) out *= d;
  }
  if (r > 1 && mpz_perfect_square_p(r.get_mpz_t()) == 0) out *= r;
  return out;
}

SquareClass square_class(const Scalar& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroArgument, "square class of zero");
  std::uint32_t p = x.modulus();
  if (p == 0) return SquareClass{squarefree_part(rational_to_integer_class(x.value())), 0};
  if (legendre(x.value().get_num().get_si(), p) == 1) return SquareClass{1, p};
  std::uint32_t n = 2;
  while (legendre(n, p) != -1) ++n;
  return SquareClass{n, p};
}

bool is_square(const Scalar& x) { return x.is_zero() || square_class(x).is_trivial(); }

std::optional<Scalar> square_root(const Scalar& x) {
  std::uint32_t p = x.modulus();
  if (x.is_zero()) return x;
  if (p == 0) {
    const mpq_class& v = x.value();
    if (sgn(v) < 0) return std::nullopt;
    mpz_class n = v.get_num();
    mpz_class d = v.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn;
    mpz_class rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Scalar(mpq_class(rn, rd));
  }
  std::uint64_t a = x.value().get_num().get_ui();
  if (legendre(static_cast<std::int64_t>(a), p) != 1) return std::nullopt;
  // Tonelli-Shanks.
  std::uint64_t q = p - 1;
  std::uint64_t s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (legendre(static_cast<std::int64_t>(z), p) != -1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = static_cast<std::uint64_t>(static_cast<unsigned __int128>(tt) * tt % p);
      ++i;
    }
    std::uint64_t b = pow_mod(c, std::uint64_t{1} << (m - i - 1), p);
    m = i;
    c = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % p);
    t = static_cast<std::uint64_t>(static_cast<unsigned __int128>(t) * c % p);
    r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * b % p);
  }
  return Scalar::modular(mpz_class(static_cast<unsigned long>(r)), p);
}

std::vector<mpz_class> prime_divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  mpz_class r = abs(n);
  for (mpz_class d = 2; d * d <= r; ++d) {
    if (mpz_divisible_p(r.get_mpz_t(), d.get_mpz_t()) == 0) continue;
    out.push_back(d);
    while (mpz_divisible_p(r.get_mpz_t(), d.get_mpz_t()) != 0) r /= d;
  }
  if (r > 1) out.push_back(r);
  return out;
}

SquareClass discriminant(const QuadraticSpace& space, bool signed_variant) {
  Scalar d = space.scalar(1);
  for (const auto& a : space.orthogonal_basis().diag) d *= a;
  std::size_t n = space.dim();
  if (signed_variant && (n * (n - 1) / 2) % 2 == 1) d = -d;
  return square_class(d);
}

Place Place::finite(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw Error(ErrorKind::InvalidArgument, "place must be a prime, got " + p.get_str());
  return Place{p};
}

int hilbert_symbol(const mpq_class& a_in, const mpq_class& b_in, const Place& v) {
  if (sgn(a_in) == 0 || sgn(b_in) == 0) throw Error(ErrorKind::ZeroArgument, "Hilbert symbol of zero");
  if (v.is_real()) return (sgn(a_in) < 0 && sgn(b_in) < 0) ? -1 : 1;
  mpz_class u = rational_to_integer_class(a_in);
  mpz_class w = rational_to_integer_class(b_in);
  const mpz_class& p = v.prime;
  int alpha = split_valuation(u, p);
  int beta = split_valuation(w, p);
  int exponent = 0;
  if (p == 2) {
    auto eps = [](const mpz_class& x) { return ((mod_small(x, 4) - 1) / 2) & 1; };
    auto omega = [](const mpz_class& x) {
      int r = mod_small(x, 8);
      return ((r * r - 1) / 8) & 1;
    };
    exponent = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    return exponent % 2 == 0 ? 1 : -1;
  }
  int result = 1;
  int eps_p = mod_small(p, 4) == 3 ? 1 : 0;
  if ((alpha * beta * eps_p) % 2 == 1) result = -result;
  if (beta % 2 == 1) result *= legendre_mpz(u, p);
  if (alpha % 2 == 1) result *= legendre_mpz(w, p);
  return result;
}

bool is_local_square(const mpq_class& a, const Place& v) {
  if (sgn(a) == 0) return true;
  if (v.is_real()) return sgn(a) > 0;
  mpz_class u = rational_to_integer_class(a);
  int alpha = split_valuation(u, v.prime);
  if (alpha % 2 != 0) return false;
  if (v.prime == 2) return mod_small(u, 8) == 1;
  return legendre_mpz(u, v.prime) == 1;
}

LocalInvariants witt_invariants(const QuadraticSpace& space, const Place& v) {
  LocalInvariants out;
  out.place = v;
  out.dim = space.dim();
  out.disc = discriminant(space);
  const Vector& a = space.orthogonal_basis().diag;
  std::size_t n = a.size();
  std::uint32_t p = space.field().modulus();
  if (p != 0) {
    out.place = Place::real();
    out.hasse = 1;
    if (n % 2 == 1) {
      out.witt_index = (n - 1) / 2;
    } else {
      Scalar d = space.scalar(1);
      for (const auto& x : a) d *= x;
      if ((n / 2) % 2 == 1) d = -d;
      out.witt_index = is_square(d) ? n / 2 : n / 2 - 1;
    }
    return out;
  }
  int hasse = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) hasse *= hilbert_symbol(a[i].value(), a[j].value(), v);
  out.hasse = hasse;
  if (v.is_real()) {
    std::size_t pos = 0;
    for (const auto& x : a) pos += sgn(x.value()) > 0 ? 1 : 0;
    out.witt_index = std::min(pos, n - pos);
    return out;
  }
  mpq_class d = 1;
  for (const auto& x : a) d *= x.value();
  std::size_t m = n;
  int eps = hasse;
  std::size_t w = 0;
  while (isotropic_padic(m, d, eps, v)) {
    ++w;
    m -= 2;
    d = -d;
    eps *= hilbert_symbol(d, -1, v);
  }
  out.witt_index = w;
  return out;
}

QuadraticSpace standard_space(std::size_t hyperbolic, const Vector& diag, FieldTag field) {
  std::size_t n = 2 * hyperbolic + diag.size();
  std::uint32_t p = field.modulus();
  Matrix g(n, n, p);
  for (std::size_t k = 0; k < hyperbolic; ++k) {
    g(2 * k, 2 * k + 1) = Scalar::from_rational(1, p);
    g(2 * k + 1, 2 * k) = Scalar::from_rational(1, p);
  }
  for (std::size_t i = 0; i < diag.size(); ++i) {
    Scalar a = diag[i].in_field(p);
    if (a.is_zero()) throw Error(ErrorKind::ZeroEntry, "diagonal entry " + std::to_string(i) + " is zero");
    g(2 * hyperbolic + i, 2 * hyperbolic + i) = a;
  }
  return QuadraticSpace(g, field);
}

QuadraticSpace norm_form(const mpz_class& d) {
  if (d == 0) throw Error(ErrorKind::ZeroEntry, "norm form needs d != 0");
  return standard_space(0, {Scalar(1), Scalar(mpq_class(-d))}, FieldTag::rationals());
}

}  // namespace gspin
