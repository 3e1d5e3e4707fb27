#include "gspin/sampling.hpp"

namespace gspin {

Scalar random_nonzero(Rng& rng, int bound, std::uint32_t p) {
  std::uniform_int_distribution<int> dist(1, 2 * bound);
  for (;;) {
    int v = dist(rng);
    v = v <= bound ? v : bound - v;
    Scalar s = Scalar::from_rational(v, p);
    if (!s.is_zero()) return s;
  }
}

Scalar random_integer(Rng& rng, int bound, std::uint32_t p) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  return Scalar::from_rational(dist(rng), p);
}

QuadraticSpace random_diagonal_space(Rng& rng, std::size_t n, int bound, FieldTag field) {
  Vector d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(random_nonzero(rng, bound, field.modulus()));
  return standard_space(0, d, field);
}

CliffordElement random_element(const BasisPtr& basis, Rng& rng, int bound, double density, bool even_only) {
  std::bernoulli_distribution keep(density);
  CliffordElement x(basis);
  for (Mask m = 0; m <= basis->full_mask(); ++m) {
    if (even_only && grade(m) % 2 != 0) continue;
    if (keep(rng)) x.add_term(m, random_nonzero(rng, bound, basis->modulus()));
  }
  return x;
}

CliffordElement random_anisotropic_vector(const BasisPtr& basis, Rng& rng, int bound) {
  for (;;) {
    Vector c;
    Scalar q = Scalar::from_rational(0, basis->modulus());
    for (std::size_t i = 0; i < basis->dim(); ++i) {
      c.push_back(random_integer(rng, bound, basis->modulus()));
      q += c.back() * c.back() * basis->diag()[i];
    }
    if (!q.is_zero()) return CliffordElement::vector(basis, c);
  }
}

CliffordElement random_versor(const BasisPtr& basis, Rng& rng, std::size_t factors, int bound) {
  CliffordElement g = CliffordElement::scalar(basis, random_nonzero(rng, bound, basis->modulus()));
  for (std::size_t k = 0; k < factors; ++k) g = g * random_anisotropic_vector(basis, rng, bound);
  return g;
}

}  // namespace gspin
