#include "gspin/scalar.hpp"

#include "gspin/error.hpp"

namespace gspin {

namespace {

long reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r.get_si();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z(std::to_string(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  unsigned __int128 result = 1;
  unsigned __int128 b = base % p;
  while (exp > 0) {
    if (exp & 1U) result = result * b % p;
    b = b * b % p;
    exp >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

int legendre(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  if (r == 0) return 0;
  return pow_mod(static_cast<std::uint64_t>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

Scalar Scalar::modular(const mpz_class& v, std::uint32_t p) {
  Scalar s;
  s.p_ = p;
  s.v_ = reduce_mod(v, p);
  return s;
}

Scalar Scalar::from_rational(const mpq_class& v, std::uint32_t p) {
  Scalar s(v);
  return p == 0 ? s : s.in_field(p);
}

Scalar Scalar::parse(std::string_view text, std::uint32_t p) {
  std::string t;
  std::size_t i = 0;
  while (i < text.size() && text[i] == ' ') ++i;
  if (text.substr(i, 3) == "\xE2\x88\x92") {
    t.push_back('-');
    i += 3;
  }
  for (; i < text.size(); ++i) {
    if (text[i] != ' ') t.push_back(text[i]);
  }
  if (t.empty()) throw Error(ErrorKind::ParseError, "empty scalar");
  std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  bool slash = false;
  for (std::size_t k = start; k < t.size(); ++k) {
    char c = t[k];
    if (c == '/' && !slash && k > start && k + 1 < t.size()) {
      slash = true;
    } else if (c < '0' || c > '9') {
      throw Error(ErrorKind::ParseError, "invalid scalar '" + std::string(text) + "'");
    }
  }
  if (t[0] == '+') t.erase(0, 1);
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw Error(ErrorKind::ParseError, "invalid scalar '" + t + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + t + "'");
  q.canonicalize();
  return from_rational(q, p);
}

std::string Scalar::to_string() const { return v_.get_str(); }

Scalar Scalar::in_field(std::uint32_t p) const {
  if (p == p_) return *this;
  if (p_ != 0) throw Error(ErrorKind::FieldMismatch, "cannot move an F_p value to another field");
  long den = reduce_mod(v_.get_den(), p);
  if (den == 0) throw Error(ErrorKind::NotInvertible, "denominator vanishes mod p");
  long num = reduce_mod(v_.get_num(), p);
  long inv = static_cast<long>(pow_mod(static_cast<std::uint64_t>(den), p - 2, p));
  return modular(mpz_class(static_cast<long>((static_cast<__int128>(num) * inv) % p)), p);
}

std::uint32_t Scalar::unify(const Scalar& o) const {
  if (p_ == o.p_ || o.p_ == 0) return p_;
  if (p_ == 0) return o.p_;
  throw Error(ErrorKind::FieldMismatch, "scalars from different prime fields");
}

void Scalar::reduce() {
  if (p_ != 0) v_ = reduce_mod(v_.get_num(), p_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::NotInvertible, "inverse of zero");
  if (p_ == 0) return Scalar(mpq_class(1) / v_);
  return modular(mpz_class(static_cast<long>(pow_mod(v_.get_num().get_ui(), p_ - 2, p_))), p_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.v_ = -r.v_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::uint32_t p = unify(o);
  if (p == 0) {
    v_ += o.v_;
    return *this;
  }
  Scalar a = in_field(p);
  Scalar b = o.in_field(p);
  long s = a.v_.get_num().get_si() + b.v_.get_num().get_si();
  if (s >= static_cast<long>(p)) s -= p;
  p_ = p;
  v_ = s;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  std::uint32_t p = unify(o);
  if (p == 0) {
    v_ *= o.v_;
    return *this;
  }
  Scalar a = in_field(p);
  Scalar b = o.in_field(p);
  long s = static_cast<long>((static_cast<__int128>(a.v_.get_num().get_si()) * b.v_.get_num().get_si()) % p);
  p_ = p;
  v_ = s;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  std::uint32_t p = unify(o);
  if (p == 0) {
    if (o.is_zero()) throw Error(ErrorKind::NotInvertible, "division by zero");
    v_ /= o.v_;
    return *this;
  }
  return *this *= o.in_field(p).inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  std::uint32_t p = a.unify(b);
  if (p == 0) return a.v_ == b.v_;
  return a.in_field(p).v_ == b.in_field(p).v_;
}

}  // namespace gspin
