#include "gspin/clifford.hpp"

#include <bit>
#include <cstdio>

#include "gspin/error.hpp"

namespace gspin {

namespace {

std::string fingerprint(const QuadraticSpace& space) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  feed(space.field().to_string());
  const Matrix& g = space.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) feed(g(i, j).to_string());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

CliffordBasis::CliffordBasis(const QuadraticSpace& space) : space_(space) {
  std::size_t n = space.dim();
  if (n > kMaxCliffordDim)
    throw Error(ErrorKind::DimensionCap, "Clifford algebras are capped at dimension " +
                                             std::to_string(kMaxCliffordDim) + ", got " + std::to_string(n));
  const Vector& d = space.orthogonal_basis().diag;
  qprod_.assign(std::size_t{1} << n, space.scalar(1));
  for (Mask a = 1; a < qprod_.size(); ++a) {
    int low = std::countr_zero(a);
    qprod_[a] = qprod_[a & (a - 1)] * d[static_cast<std::size_t>(low)];
  }
  id_ = fingerprint(space);
}

std::shared_ptr<const CliffordBasis> CliffordBasis::create(const QuadraticSpace& space) {
  return std::shared_ptr<const CliffordBasis>(new CliffordBasis(space));
}

bool same_basis(const BasisPtr& a, const BasisPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->modulus() == b->modulus() && a->space().gram() == b->space().gram();
}

int grade(Mask m) { return std::popcount(m); }

int monomial_sign(Mask a, Mask b) {
  int swaps = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

CliffordElement::CliffordElement(BasisPtr basis) : basis_(std::move(basis)) {
  if (!basis_) throw Error(ErrorKind::InvalidArgument, "null Clifford basis");
}

CliffordElement CliffordElement::scalar(BasisPtr basis, const Scalar& c) {
  return monomial(std::move(basis), 0, c);
}

CliffordElement CliffordElement::monomial(BasisPtr basis, Mask m, const Scalar& c) {
  CliffordElement x(std::move(basis));
  if (m > x.basis_->full_mask()) throw Error(ErrorKind::InvalidArgument, "monomial index out of range");
  x.add_term(m, c);
  return x;
}

CliffordElement CliffordElement::vector(BasisPtr basis, const Vector& coords) {
  CliffordElement x(std::move(basis));
  if (coords.size() != x.basis_->dim()) throw Error(ErrorKind::InvalidArgument, "vector length mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) x.add_term(Mask{1} << i, coords[i]);
  return x;
}

Scalar CliffordElement::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::from_rational(0, basis_->modulus()) : it->second;
}

void CliffordElement::add_term(Mask m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c.in_field(basis_->modulus()));
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool CliffordElement::is_even() const {
  for (const auto& [m, c] : terms_)
    if (grade(m) % 2 != 0) return false;
  return true;
}

bool CliffordElement::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

bool CliffordElement::is_homogeneous(int k) const {
  for (const auto& [m, c] : terms_)
    if (grade(m) != k) return false;
  return true;
}

std::optional<Vector> CliffordElement::as_vector() const {
  if (!is_homogeneous(1)) return std::nullopt;
  Vector v(basis_->dim(), Scalar::from_rational(0, basis_->modulus()));
  for (const auto& [m, c] : terms_) v[static_cast<std::size_t>(std::countr_zero(m))] = c;
  return v;
}

void CliffordElement::check_same(const CliffordElement& o) const {
  if (!same_basis(basis_, o.basis_)) throw Error(ErrorKind::BasisMismatch, "elements belong to different Clifford bases");
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CliffordElement& CliffordElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

bool operator==(const CliffordElement& a, const CliffordElement& b) {
  a.check_same(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (it->first != m || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

CliffordElement cliff_mul(const CliffordElement& x, const CliffordElement& y) {
  if (!same_basis(x.basis(), y.basis())) throw Error(ErrorKind::BasisMismatch, "elements belong to different Clifford bases");
  const CliffordBasis& b = *x.basis();
  CliffordElement r(x.basis());
  for (const auto& [ma, ca] : x.terms()) {
    for (const auto& [mb, cb] : y.terms()) {
      Scalar c = ca * cb * b.square_product(ma & mb);
      if (monomial_sign(ma, mb) < 0) c = -c;
      r.add_term(ma ^ mb, c);
    }
  }
  return r;
}

CliffordElement involution(const CliffordElement& x) {
  CliffordElement r(x.basis());
  for (const auto& [m, c] : x.terms()) {
    int k = grade(m);
    r.add_term(m, ((k * (k - 1) / 2) % 2 == 0) ? c : -c);
  }
  return r;
}

SpinorNorm spinor_norm(const CliffordElement& x) {
  CliffordElement n = x * involution(x);
  std::optional<Scalar> s;
  if (n.is_scalar()) s = n.coeff(0);
  return SpinorNorm{std::move(n), std::move(s)};
}

CliffordElement invert(const CliffordElement& x) {
  const BasisPtr& basis = x.basis();
  CliffordElement one = CliffordElement::scalar(basis, 1);
  SpinorNorm n = spinor_norm(x);
  if (n.scalar && !n.scalar->is_zero()) {
    CliffordElement y = involution(x) * n.scalar->inverse();
    if (x * y == one && y * x == one) return y;
  }
  std::size_t dim = std::size_t{1} << basis->dim();
  Matrix left(dim, dim, basis->modulus());
  for (Mask j = 0; j < dim; ++j) {
    CliffordElement col = x * CliffordElement::monomial(basis, j);
    for (const auto& [m, c] : col.terms()) left(m, j) = c;
  }
  Vector rhs(dim, Scalar::from_rational(0, basis->modulus()));
  rhs[0] = Scalar::from_rational(1, basis->modulus());
  auto sol = solve(left, rhs);
  if (!sol) throw Error(ErrorKind::NotInvertible, "element has no inverse");
  CliffordElement y(basis);
  for (Mask m = 0; m < dim; ++m) y.add_term(m, (*sol)[m]);
  if (!(y * x == one)) throw Error(ErrorKind::NotInvertible, "right inverse is not a left inverse");
  return y;
}

std::string_view to_string(GSpinRejection::Clause c) {
  switch (c) {
    case GSpinRejection::Clause::NotEven: return "NotEven";
    case GSpinRejection::Clause::NotInvertible: return "NotInvertible";
    case GSpinRejection::Clause::NotStable: return "NotStable";
    case GSpinRejection::Clause::NormNotScalar: return "NormNotScalar";
  }
  return "?";
}

std::variant<GSpinElement, GSpinRejection> is_gspin(const CliffordElement& x) {
  using Clause = GSpinRejection::Clause;
  if (!x.is_even()) return GSpinRejection{Clause::NotEven, 0, "element has odd-grade terms"};
  std::optional<CliffordElement> inv;
  try {
    inv = invert(x);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInvertible) throw;
    return GSpinRejection{Clause::NotInvertible, 0, "element is not invertible"};
  }
  const BasisPtr& basis = x.basis();
  for (std::size_t i = 0; i < basis->dim(); ++i) {
    CliffordElement c = x * CliffordElement::monomial(basis, Mask{1} << i) * *inv;
    if (!c.is_homogeneous(1))
      return GSpinRejection{Clause::NotStable, i + 1, "g e_" + std::to_string(i + 1) + " g^-1 leaves V"};
  }
  SpinorNorm n = spinor_norm(x);
  if (!n.scalar) return GSpinRejection{Clause::NormNotScalar, 0, "x x* is not a scalar"};
  return GSpinElement(x, std::move(*inv), std::move(*n.scalar));
}

GSpinElement certify_gspin(const CliffordElement& x) {
  auto r = is_gspin(x);
  if (auto* rej = std::get_if<GSpinRejection>(&r))
    throw Error(ErrorKind::HypothesisViolation, "not in GSpin: " + std::string(to_string(rej->clause)) + " (" + rej->detail + ")");
  return std::get<GSpinElement>(std::move(r));
}

Matrix project_so(const GSpinElement& g) {
  const BasisPtr& basis = g.element().basis();
  std::size_t n = basis->dim();
  Matrix m(n, n, basis->modulus());
  for (std::size_t j = 0; j < n; ++j) {
    CliffordElement c = g.element() * CliffordElement::monomial(basis, Mask{1} << j) * g.inverse();
    auto v = c.as_vector();
    if (!v) throw Error(ErrorKind::HypothesisViolation, "conjugate left V");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = (*v)[i];
  }
  return m;
}

CliffordElement embed(const CliffordElement& x, const BasisPtr& target) {
  const CliffordBasis& src = *x.basis();
  std::size_t n = src.dim();
  if (target->dim() != n + 1 || !(target->space().field() == src.space().field()))
    throw Error(ErrorKind::BasisNotExtension, "target must be a space of dimension n+1 over the same field");
  if (!(target->space().gram().block(0, 0, n, n) == src.space().gram()))
    throw Error(ErrorKind::BasisNotExtension, "source gram is not the leading block of the target gram");
  for (std::size_t i = 0; i < n; ++i)
    if (!(target->diag()[i] == src.diag()[i]))
      throw Error(ErrorKind::BasisNotExtension, "orthogonal bases disagree at index " + std::to_string(i + 1));
  CliffordElement r(target);
  for (const auto& [m, c] : x.terms()) r.add_term(m, c);
  return r;
}

GSpinElement embed(const GSpinElement& g, const BasisPtr& target) {
  return GSpinElement(embed(g.element(), target), embed(g.inverse(), target), g.norm());
}

}  // namespace gspin
