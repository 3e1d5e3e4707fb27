#pragma once

#include <string>
#include <vector>

#include "gspin/clifford.hpp"
#include "gspin/sampling.hpp"

namespace gspin {

inline constexpr std::size_t kMaxStructureDim = 8;

// Basis of the center of C^+(V): {1} for odd n, {1, z} for even n with z the
// top monomial.
std::vector<CliffordElement> center_basis(const BasisPtr& basis);

enum class CenterKind { BaseField, Split, QuadraticField };
enum class InvolutionKind { Orthogonal, Symplectic, Unitary };

std::string_view to_string(CenterKind k);
std::string_view to_string(InvolutionKind k);

// Involution type of * on C^+ predicted by n mod 8.
InvolutionKind expected_involution_kind(std::size_t n);

struct EvenCliffordClassification {
  std::size_t dim = 0;
  std::size_t center_dim = 0;
  CenterKind center_kind = CenterKind::BaseField;
  // Class of z^2 for even n; trivial for odd n.
  SquareClass center_class;
  InvolutionKind involution_kind = InvolutionKind::Orthogonal;
  std::vector<InvolutionKind> factor_kinds;
  // Degree of each simple factor over its center.
  std::size_t factor_degree = 1;
  std::size_t fixed_dim = 0;
};

EvenCliffordClassification classify_even_clifford(const QuadraticSpace& space);

// C^+ of <a, b, c>: i = e1 e2, j = e2 e3 with i^2 = -ab, j^2 = -bc, ij = -ji.
struct QuaternionData {
  BasisPtr basis;
  Scalar i_square;
  Scalar j_square;
  CliffordElement i;
  CliffordElement j;
  std::vector<Place> ramified;  // empty over F_p
  bool split() const { return ramified.empty(); }
};

QuaternionData quaternion_data(const QuadraticSpace& space);

// 4-dimensional module for C^+ of H + H + <a>, realized on the exterior
// algebra of a maximal isotropic subspace, with an invariant alternating form.
struct SpinModuleWitness {
  BasisPtr basis;
  std::vector<Matrix> monomial_action;  // indexed by mask; empty for odd masks
  Matrix form;
  // Action of the vectors e_i themselves when a is a square.
  std::vector<Matrix> vector_action;

  Matrix action(const CliffordElement& x) const;
  // lambda with M^T B M = lambda B; nullopt if M is not a similitude.
  std::optional<Scalar> similitude(const Matrix& m) const;
  CliffordElement pullback(const Matrix& m) const;
};

SpinModuleWitness spin_module_split(const QuadraticSpace& space);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct LowRankReport {
  std::size_t n = 0;
  EvenCliffordClassification classification;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  bool pass() const;
};

LowRankReport verify_low_rank(const QuadraticSpace& space, std::size_t n, std::size_t samples, std::uint64_t seed);

}  // namespace gspin
