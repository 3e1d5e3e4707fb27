#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gspin {

enum class DualTarget { Odd, Even };  // GSp_{2m} for n = 2m+1, GSO_{2m} for n = 2m
enum class SummandKind { Symplectic, Orthogonal };
enum class OrderConvention { Literal, Paper };

std::string_view to_string(DualTarget t);
std::string_view to_string(SummandKind k);
std::string_view to_string(OrderConvention c);

struct Summand {
  std::size_t dim = 0;
  SummandKind kind = SummandKind::Symplectic;
  std::string label;  // empty labels default to the summand index
};

// Abstract L-parameter: a multiplicity-free sum of irreducible self-dual pieces.
struct ParameterDecomposition {
  DualTarget target = DualTarget::Odd;
  std::vector<Summand> summands;

  std::size_t k() const { return summands.size(); }
  std::size_t total_dim() const;
  std::size_t m() const { return total_dim() / 2; }
  // Throws InvalidDecomposition.
  void validate() const;
};

// Sign vectors modulo the diagonal, enumerated as cosets of {+-(1, ..., 1)}.
struct SignQuotient {
  std::size_t k = 0;
  std::vector<std::uint32_t> representatives;  // bit i set means epsilon_i = -1
  std::uint32_t canonical(std::uint32_t signs) const;
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const { return canonical(a ^ b); }
};
SignQuotient enumerate_sign_quotient(std::size_t k);

std::uint64_t s_phi_order(const ParameterDecomposition& d, OrderConvention c);

enum class CenterGroup { Mu2, Mu2xMu2, Mu4 };
std::string_view to_string(CenterGroup g);

struct ScOrder {
  std::uint64_t order = 0;
  std::uint64_t z_hat_order = 0;
  CenterGroup z_hat = CenterGroup::Mu2;
};
ScOrder s_phi_sc_order(const ParameterDecomposition& d, OrderConvention c);

struct ComponentGroupReport {
  DualTarget target = DualTarget::Odd;
  std::size_t k = 0;
  std::size_t m = 0;
  std::uint64_t order_literal = 0;
  std::uint64_t order_paper = 0;
  std::uint64_t order_sc_literal = 0;
  std::uint64_t order_sc_paper = 0;
  std::uint64_t z_hat_order = 0;
  CenterGroup z_hat = CenterGroup::Mu2;
};
ComponentGroupReport component_group_report(const ParameterDecomposition& d);

struct BetaResult {
  std::uint64_t from_component_groups = 0;  // 4 |S_n| |S_{n+1}|
  std::uint64_t from_sc_groups = 0;         // |S_n,sc| |S_{n+1},sc| / 2
  bool agree() const { return from_component_groups == from_sc_groups; }
};
// Throws TargetMismatch unless one target is odd, the other even, and the
// ranks are adjacent (GSp_{2m} with GSO_{2m} or GSO_{2m+2}).
BetaResult beta_constant(const ParameterDecomposition& dn, const ParameterDecomposition& dn1, OrderConvention c);
std::uint64_t beta_from_orders(std::uint64_t s_n, std::uint64_t s_n1);

struct DualGroupDescriptor {
  std::size_t n = 0;
  std::size_t m = 0;
  std::string family;  // "GL1", "GSp", "GSO"
  std::string name;    // e.g. "GSp4(C)"
  bool galois_twist = false;
};
// disc_trivial only matters for even n.
DualGroupDescriptor dual_group_descriptor(std::size_t n, bool disc_trivial = true);

}  // namespace gspin
