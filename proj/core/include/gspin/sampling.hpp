#pragma once

#include <random>

#include "gspin/clifford.hpp"

namespace gspin {

using Rng = std::mt19937_64;

// Uniform integer in [-bound, bound] \ {0}, placed in F_p when p != 0.
Scalar random_nonzero(Rng& rng, int bound, std::uint32_t p);
Scalar random_integer(Rng& rng, int bound, std::uint32_t p);

QuadraticSpace random_diagonal_space(Rng& rng, std::size_t n, int bound, FieldTag field);

// Each monomial is present with the given probability; coefficients are
// nonzero integers in [-bound, bound].
CliffordElement random_element(const BasisPtr& basis, Rng& rng, int bound, double density, bool even_only);
// Vector in the orthogonal basis with q(v) != 0.
CliffordElement random_anisotropic_vector(const BasisPtr& basis, Rng& rng, int bound);
// lambda * v_1 ... v_k with anisotropic v_i; for even k this lies in GSpin.
CliffordElement random_versor(const BasisPtr& basis, Rng& rng, std::size_t factors, int bound);

}  // namespace gspin
