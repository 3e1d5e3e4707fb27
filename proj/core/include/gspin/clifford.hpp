#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "gspin/quadspace.hpp"

namespace gspin {

// Subset of the orthogonal basis, bit i standing for e_{i+1}.
using Mask = std::uint32_t;

inline constexpr std::size_t kMaxCliffordDim = 10;

// Frozen orthogonal basis of a quadratic space together with the products
// q(e_A) = prod_{i in A} q(e_i) used by the monomial multiplication rule.
class CliffordBasis {
 public:
  static std::shared_ptr<const CliffordBasis> create(const QuadraticSpace& space);

  const QuadraticSpace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  std::uint32_t modulus() const noexcept { return space_.field().modulus(); }
  const Matrix& orthogonal_basis() const noexcept { return space_.orthogonal_basis().basis; }
  const Vector& diag() const noexcept { return space_.orthogonal_basis().diag; }
  const Scalar& square_product(Mask a) const { return qprod_[a]; }
  Mask full_mask() const noexcept { return (Mask{1} << dim()) - 1; }
  // Deterministic 16 hex digit fingerprint of field and gram matrix.
  const std::string& id() const noexcept { return id_; }

 private:
  explicit CliffordBasis(const QuadraticSpace& space);
  QuadraticSpace space_;
  std::vector<Scalar> qprod_;
  std::string id_;
};

using BasisPtr = std::shared_ptr<const CliffordBasis>;

// Bases built from the same gram matrix over the same field are interchangeable.
bool same_basis(const BasisPtr& a, const BasisPtr& b);

int grade(Mask m);
// Sign and mask of e_A * e_B before contraction by q(e_{A & B}).
int monomial_sign(Mask a, Mask b);

class CliffordElement {
 public:
  explicit CliffordElement(BasisPtr basis);
  static CliffordElement scalar(BasisPtr basis, const Scalar& c);
  static CliffordElement monomial(BasisPtr basis, Mask m, const Scalar& c = Scalar(1));
  // v = sum_i coords[i] e_i in the frozen orthogonal basis.
  static CliffordElement vector(BasisPtr basis, const Vector& coords);

  const BasisPtr& basis() const noexcept { return basis_; }
  const std::map<Mask, Scalar>& terms() const noexcept { return terms_; }
  Scalar coeff(Mask m) const;
  void add_term(Mask m, const Scalar& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_even() const;
  bool is_scalar() const;
  bool is_homogeneous(int k) const;
  // Orthogonal-basis coordinates when the element has only grade 1 terms.
  std::optional<Vector> as_vector() const;
  std::size_t nnz() const noexcept { return terms_.size(); }

  CliffordElement operator-() const;
  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement& operator*=(const Scalar& s);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(CliffordElement a, const Scalar& s) { return a *= s; }
  friend CliffordElement operator*(const Scalar& s, CliffordElement a) { return a *= s; }
  friend bool operator==(const CliffordElement& a, const CliffordElement& b);

 private:
  void check_same(const CliffordElement& o) const;
  BasisPtr basis_;
  std::map<Mask, Scalar> terms_;
};

CliffordElement cliff_mul(const CliffordElement& x, const CliffordElement& y);
inline CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) { return cliff_mul(x, y); }

// Main anti-involution: reverses the order of basis vectors.
CliffordElement involution(const CliffordElement& x);

struct SpinorNorm {
  CliffordElement value;
  std::optional<Scalar> scalar;  // set when x x* lies in the base field
};
SpinorNorm spinor_norm(const CliffordElement& x);

// Two-sided inverse; NotInvertible if none exists.
CliffordElement invert(const CliffordElement& x);

struct GSpinRejection;
class GSpinElement;
std::variant<GSpinElement, GSpinRejection> is_gspin(const CliffordElement& x);

// Certified element of GSpin(V): even, invertible, stabilizes V under
// conjugation. Only is_gspin and embed produce instances.
class GSpinElement {
 public:
  const CliffordElement& element() const noexcept { return g_; }
  const CliffordElement& inverse() const noexcept { return inv_; }
  const Scalar& norm() const noexcept { return norm_; }

 private:
  friend std::variant<GSpinElement, GSpinRejection> is_gspin(const CliffordElement& x);
  friend GSpinElement embed(const GSpinElement& g, const BasisPtr& target);
  GSpinElement(CliffordElement g, CliffordElement inv, Scalar norm)
      : g_(std::move(g)), inv_(std::move(inv)), norm_(std::move(norm)) {}
  CliffordElement g_;
  CliffordElement inv_;
  Scalar norm_;
};

struct GSpinRejection {
  enum class Clause { NotEven, NotInvertible, NotStable, NormNotScalar };
  Clause clause;
  std::size_t basis_index = 0;  // for NotStable: the e_i whose conjugate left V
  std::string detail;
};

std::string_view to_string(GSpinRejection::Clause c);

std::variant<GSpinElement, GSpinRejection> is_gspin(const CliffordElement& x);
// Throws HypothesisViolation with the rejection detail.
GSpinElement certify_gspin(const CliffordElement& x);

// Matrix of v -> g v g^{-1} in the frozen orthogonal basis.
Matrix project_so(const GSpinElement& g);

// Transport along V_n -> V_{n+1}. The target basis must extend the source.
CliffordElement embed(const CliffordElement& x, const BasisPtr& target);
GSpinElement embed(const GSpinElement& g, const BasisPtr& target);

}  // namespace gspin
