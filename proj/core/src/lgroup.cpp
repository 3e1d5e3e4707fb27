#include "gspin/lgroup.hpp"

#include <set>

#include "gspin/error.hpp"

namespace gspin {

std::string_view to_string(DualTarget t) { return t == DualTarget::Odd ? "odd" : "even"; }
std::string_view to_string(SummandKind k) { return k == SummandKind::Symplectic ? "symplectic" : "orthogonal"; }
std::string_view to_string(OrderConvention c) { return c == OrderConvention::Literal ? "literal" : "paper"; }

std::string_view to_string(CenterGroup g) {
  switch (g) {
    case CenterGroup::Mu2: return "mu2";
    case CenterGroup::Mu2xMu2: return "mu2xmu2";
    case CenterGroup::Mu4: return "mu4";
  }
  return "?";
}

std::size_t ParameterDecomposition::total_dim() const {
  std::size_t s = 0;
  for (const auto& x : summands) s += x.dim;
  return s;
}

void ParameterDecomposition::validate() const {
  if (summands.empty()) throw Error(ErrorKind::InvalidDecomposition, "decomposition has no summands");
  if (summands.size() > 30) throw Error(ErrorKind::InvalidDecomposition, "at most 30 summands are supported");
  std::set<std::string> labels;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const Summand& s = summands[i];
    if (s.dim == 0) throw Error(ErrorKind::InvalidDecomposition, "summand " + std::to_string(i) + " has dimension 0");
    if (target == DualTarget::Odd && (s.kind != SummandKind::Symplectic || s.dim % 2 != 0))
      throw Error(ErrorKind::InvalidDecomposition, "odd target needs even-dimensional symplectic summands");
    if (target == DualTarget::Even && s.kind != SummandKind::Orthogonal)
      throw Error(ErrorKind::InvalidDecomposition, "even target needs orthogonal summands");
    std::string label = s.label.empty() ? std::to_string(i) : s.label;
    if (!labels.insert(label).second)
      throw Error(ErrorKind::InvalidDecomposition, "repeated summand label '" + label + "'");
  }
  if (total_dim() % 2 != 0) throw Error(ErrorKind::InvalidDecomposition, "total dimension must be even");
}

std::uint32_t SignQuotient::canonical(std::uint32_t signs) const {
  std::uint32_t all = (k >= 32) ? ~0U : ((1U << k) - 1);
  std::uint32_t flipped = signs ^ all;
  return std::min(signs, flipped);
}

SignQuotient enumerate_sign_quotient(std::size_t k) {
  if (k == 0 || k > 20) throw Error(ErrorKind::InvalidDecomposition, "sign quotient needs 1 <= k <= 20");
  SignQuotient q;
  q.k = k;
  std::set<std::uint32_t> seen;
  for (std::uint32_t s = 0; s < (1U << k); ++s) seen.insert(q.canonical(s));
  q.representatives.assign(seen.begin(), seen.end());
  return q;
}

std::uint64_t s_phi_order(const ParameterDecomposition& d, OrderConvention c) {
  d.validate();
  if (c == OrderConvention::Paper) return std::uint64_t{1} << d.k();
  if (d.k() <= 20) return enumerate_sign_quotient(d.k()).representatives.size();
  return std::uint64_t{1} << (d.k() - 1);
}

ScOrder s_phi_sc_order(const ParameterDecomposition& d, OrderConvention c) {
  ScOrder out;
  std::uint64_t base = s_phi_order(d, c);
  if (d.target == DualTarget::Odd) {
    out.z_hat = CenterGroup::Mu2;
    out.z_hat_order = 2;
  } else {
    out.z_hat = d.m() % 2 == 0 ? CenterGroup::Mu2xMu2 : CenterGroup::Mu4;
    out.z_hat_order = 4;
  }
  out.order = out.z_hat_order * base;
  return out;
}

ComponentGroupReport component_group_report(const ParameterDecomposition& d) {
  ComponentGroupReport r;
  r.target = d.target;
  r.k = d.k();
  r.order_literal = s_phi_order(d, OrderConvention::Literal);
  r.order_paper = s_phi_order(d, OrderConvention::Paper);
  r.m = d.m();
  ScOrder lit = s_phi_sc_order(d, OrderConvention::Literal);
  r.order_sc_literal = lit.order;
  r.order_sc_paper = s_phi_sc_order(d, OrderConvention::Paper).order;
  r.z_hat_order = lit.z_hat_order;
  r.z_hat = lit.z_hat;
  return r;
}

BetaResult beta_constant(const ParameterDecomposition& dn, const ParameterDecomposition& dn1, OrderConvention c) {
  dn.validate();
  dn1.validate();
  if (dn.target == dn1.target)
    throw Error(ErrorKind::TargetMismatch, "one parameter must have odd target and the other even target");
  const ParameterDecomposition& odd = dn.target == DualTarget::Odd ? dn : dn1;
  const ParameterDecomposition& even = dn.target == DualTarget::Odd ? dn1 : dn;
  // GSpin_{2m+1} sits between GSpin_{2m} and GSpin_{2m+2}.
  bool adjacent = even.m() == odd.m() || even.m() == odd.m() + 1;
  if (!adjacent)
    throw Error(ErrorKind::TargetMismatch, "ranks are not adjacent: GSp_" + std::to_string(2 * odd.m()) +
                                               " with GSO_" + std::to_string(2 * even.m()));
  BetaResult b;
  b.from_component_groups = beta_from_orders(s_phi_order(dn, c), s_phi_order(dn1, c));
  b.from_sc_groups = s_phi_sc_order(dn, c).order * s_phi_sc_order(dn1, c).order / 2;
  return b;
}

std::uint64_t beta_from_orders(std::uint64_t s_n, std::uint64_t s_n1) { return 4 * s_n * s_n1; }

DualGroupDescriptor dual_group_descriptor(std::size_t n, bool disc_trivial) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  DualGroupDescriptor d;
  d.n = n;
  d.m = n / 2;
  if (n == 1) {
    d.family = "GL1";
    d.name = "GL1(C)";
    return d;
  }
  if (n % 2 == 1) {
    d.family = "GSp";
    d.name = "GSp" + std::to_string(2 * d.m) + "(C)";
    return d;
  }
  d.family = "GSO";
  d.galois_twist = !disc_trivial;
  d.name = "GSO" + std::to_string(2 * d.m) + "(C)";
  return d;
}

}  // namespace gspin
