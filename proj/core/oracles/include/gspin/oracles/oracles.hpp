#pragma once

#include <complex>
#include <cstdint>
#include <vector>

// Brute-force reference computations. Each one takes a route that shares no
// code with the library function it is compared against.
namespace gspin::oracles {

// Hilbert symbol at an odd prime p <= 7 or p = 2 for squarefree integers,
// decided by searching primitive solutions of z^2 = a x^2 + b y^2 mod p^k.
int hilbert_symbol_search(long a, long b, long p);

// Witt index of diag(a_1..a_n) over F_p by enumerating totally isotropic
// subspaces (n <= 4, p small).
std::size_t witt_index_fp_search(const std::vector<long>& diag, long p);

// Nontrivial integer solution of z^2 = a x^2 + b y^2 with entries bounded by
// `bound`; a found solution certifies that (a, b)_Q splits.
bool ternary_has_solution(long a, long b, long bound);

// Phi(diag(p^k, 1)) as the average of the induced spherical vector over the
// projective line P^1(Z/p^k), for a prime p.
std::complex<double> spherical_coset_sum(std::complex<double> alpha, std::complex<double> beta, long p, int k);

// |K diag(p^k, 1) K / K| by counting Hermite normal forms with unit content.
std::uint64_t cartan_coset_count(long p, int k);

// Number of classes of {+-1}^k modulo the diagonal, found by union-find.
std::uint64_t sign_quotient_count(std::size_t k);

// Associativity/anti-automorphism checks of Clifford products computed by
// expanding words of basis vectors with explicit reordering.
struct WordProduct {
  int sign = 1;
  std::vector<int> word;  // strictly increasing indices after contraction
  std::vector<int> contracted;  // indices squared to q(e_i)
};
WordProduct reduce_word(std::vector<int> word);

}  // namespace gspin::oracles
