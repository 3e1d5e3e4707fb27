#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gspin/matrix.hpp"

namespace gspin {

class FieldTag {
 public:
  enum class Kind { Rationals, PrimeField, ComplexFloat };

  static FieldTag rationals() { return FieldTag(Kind::Rationals, 0); }
  static FieldTag prime_field(std::uint32_t p);  // odd primes only
  static FieldTag complex_float() { return FieldTag(Kind::ComplexFloat, 0); }
  static FieldTag parse(const std::string& text);  // "Q" | "Fp:<p>" | "C"

  Kind kind() const noexcept { return kind_; }
  std::uint32_t modulus() const noexcept { return p_; }
  std::string to_string() const;
  friend bool operator==(const FieldTag&, const FieldTag&) = default;

 private:
  FieldTag(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

struct Diagonalization {
  Matrix basis;  // columns are the orthogonal basis vectors
  Vector diag;   // q(basis_i) = B(basis_i, basis_i)
};

// q(x) = x^T G x, B(x, y) = x^T G y. Immutable; nondegeneracy is checked on
// construction and the orthogonal basis is computed once.
class QuadraticSpace {
 public:
  QuadraticSpace(Matrix gram, FieldTag field);

  std::size_t dim() const noexcept { return gram_.rows(); }
  const Matrix& gram() const noexcept { return gram_; }
  const FieldTag& field() const noexcept { return field_; }
  const Diagonalization& orthogonal_basis() const noexcept { return diag_; }

  Scalar bilinear(const Vector& x, const Vector& y) const;
  Scalar q(const Vector& x) const { return bilinear(x, x); }
  Scalar zero() const;
  Scalar scalar(const mpq_class& v) const;
  friend bool operator==(const QuadraticSpace& a, const QuadraticSpace& b) {
    return a.field_ == b.field_ && a.gram_ == b.gram_;
  }

 private:
  Matrix gram_;
  FieldTag field_;
  Diagonalization diag_;
};

// Gram-Schmidt in the given order; the first k basis vectors only involve the
// first k coordinates whenever the leading k x k block is nondegenerate.
Diagonalization diagonalize(const Matrix& gram);
Diagonalization diagonalize(const QuadraticSpace& space);

// Square class of a nonzero scalar. Over Q the representative is the
// squarefree integer in the class; over F_p it is 1 or the least non-residue.
struct SquareClass {
  mpz_class rep;
  std::uint32_t modulus = 0;
  bool is_trivial() const { return rep == 1; }
  std::string to_string() const { return rep.get_str(); }
  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.modulus == b.modulus && a.rep == b.rep;
  }
};

mpz_class squarefree_part(const mpz_class& n);
SquareClass square_class(const Scalar& x);
bool is_square(const Scalar& x);
// Exact square root in the base field when one exists.
std::optional<Scalar> square_root(const Scalar& x);
// Distinct prime divisors by trial division; intended for small inputs.
std::vector<mpz_class> prime_divisors(const mpz_class& n);

// det(G) up to squares; the signed variant multiplies by (-1)^(n(n-1)/2).
SquareClass discriminant(const QuadraticSpace& space, bool signed_variant = false);

// A place of Q: the real place (prime == 0) or a finite prime.
struct Place {
  mpz_class prime;
  static Place real() { return Place{0}; }
  static Place finite(const mpz_class& p);
  bool is_real() const { return prime == 0; }
  std::string to_string() const { return is_real() ? "inf" : prime.get_str(); }
  friend bool operator==(const Place& a, const Place& b) { return a.prime == b.prime; }
};

int hilbert_symbol(const mpq_class& a, const mpq_class& b, const Place& v);
bool is_local_square(const mpq_class& a, const Place& v);

struct LocalInvariants {
  Place place;
  std::size_t dim = 0;
  SquareClass disc;
  int hasse = 1;
  std::size_t witt_index = 0;
};

// Over F_p the place is ignored and the Hasse invariant is 1.
LocalInvariants witt_invariants(const QuadraticSpace& space, const Place& v);

// k hyperbolic planes [[0,1],[1,0]] followed by diag(a_1, ..., a_r).
QuadraticSpace standard_space(std::size_t hyperbolic, const Vector& diag, FieldTag field);
// Norm form of Q(sqrt d): diag(1, -d).
QuadraticSpace norm_form(const mpz_class& d);

}  // namespace gspin
