#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace gspin {

// Exact element of Q (modulus 0) or of F_p. Prime-field values are kept
// reduced to integers in [0, p). A rational meets an F_p value by reduction.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral I>
  Scalar(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& v) : v_(v) { v_.canonicalize(); }  // NOLINT(google-explicit-constructor)

  static Scalar modular(const mpz_class& v, std::uint32_t p);
  static Scalar from_rational(const mpq_class& v, std::uint32_t p);
  // Accepts "a", "a/b" with optional sign (ASCII '-' or U+2212).
  static Scalar parse(std::string_view text, std::uint32_t p = 0);

  std::uint32_t modulus() const noexcept { return p_; }
  const mpq_class& value() const noexcept { return v_; }
  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  std::string to_string() const;

  Scalar in_field(std::uint32_t p) const;
  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::uint32_t unify(const Scalar& o) const;
  void reduce();

  mpq_class v_;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);
// Modular exponentiation and Legendre symbol for odd primes p < 2^31.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
int legendre(std::int64_t a, std::uint32_t p);

}  // namespace gspin
