#include "gspin/json_io.hpp"

#include <bit>

#include "gspin/error.hpp"

namespace gspin {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

SphericalRep rep_from_json(const Json& j, LocalFieldData f) {
  // Either [re, im] (similitude 1) or {"a": [re, im], "similitude": [re, im]}.
  if (j.is_array()) return SphericalRep{complex_from_json(j), Complex(1.0, 0.0), f};
  if (!j.is_object()) parse_fail("representation must be [re, im] or an object");
  Complex sim = j.contains("similitude") ? complex_from_json(j.at("similitude")) : Complex(1.0, 0.0);
  return SphericalRep{complex_from_json(field(j, "a")), sim, f};
}

}  // namespace

Json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j, std::uint32_t p) {
  if (j.is_number_integer()) return Scalar::from_rational(mpq_class(j.get<long>()), p);
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), p);
  parse_fail("scalar must be an integer or a fraction string");
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const SquareClass& c) {
  if (c.rep.fits_slong_p()) return c.rep.get_si();
  return c.rep.get_str();
}

Json to_json(const QuadraticSpace& space) {
  return Json{{"field", space.field().to_string()}, {"gram", to_json(space.gram())}};
}

QuadraticSpace space_from_json(const Json& j) {
  FieldTag f = FieldTag::parse(field(j, "field").get<std::string>());
  const Json& g = field(j, "gram");
  if (!g.is_array() || g.empty()) parse_fail("gram must be a nonempty array of rows");
  std::size_t n = g.size();
  Matrix m(n, n, f.modulus());
  for (std::size_t i = 0; i < n; ++i) {
    if (!g[i].is_array() || g[i].size() != n) parse_fail("gram must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = scalar_from_json(g[i][k], f.modulus());
  }
  return QuadraticSpace(m, f);
}

Json to_json(const CliffordElement& x) {
  Json terms = Json::array();
  for (const auto& [mask, c] : x.terms()) {
    Json idx = Json::array();
    for (Mask r = mask; r != 0; r &= r - 1) idx.push_back(std::countr_zero(r) + 1);
    terms.push_back(Json{{"indices", idx}, {"coeff", to_json(c)}});
  }
  return Json{{"basis", x.basis()->id()}, {"terms", terms}};
}

CliffordElement element_from_json(const Json& j, const BasisPtr& basis) {
  if (j.is_object() && j.contains("basis") && j.at("basis").get<std::string>() != basis->id())
    throw Error(ErrorKind::BasisMismatch, "element was serialized over a different basis");
  const Json& terms = j.is_array() ? j : field(j, "terms");
  CliffordElement x(basis);
  for (const auto& t : terms) {
    Mask m = 0;
    int last = 0;
    for (const auto& i : field(t, "indices")) {
      int k = i.get<int>();
      if (k < 1 || static_cast<std::size_t>(k) > basis->dim()) parse_fail("basis index out of range");
      if (k <= last) parse_fail("indices must be strictly increasing");
      last = k;
      m |= Mask{1} << (k - 1);
    }
    x.add_term(m, scalar_from_json(field(t, "coeff"), basis->modulus()));
  }
  return x;
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    parse_fail("complex numbers are [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json to_json(const SatakeClass& c) {
  Json s = Json::array();
  for (const auto& x : c.satake) s.push_back(to_json(x));
  return Json{{"family", to_string(c.family)}, {"satake", s}, {"similitude", to_json(c.similitude)}};
}

SatakeClass satake_from_json(const Json& j) {
  SatakeClass c;
  c.family = parse_satake_family(field(j, "family").get<std::string>());
  for (const auto& x : field(j, "satake")) c.satake.push_back(complex_from_json(x));
  c.similitude = j.contains("similitude") ? complex_from_json(j.at("similitude")) : Complex(1.0, 0.0);
  c.validate();
  return c;
}

Json to_json(const LocalInvariants& inv) {
  return Json{{"place", inv.place.to_string()},
              {"dim", inv.dim},
              {"disc", to_json(inv.disc)},
              {"hasse", inv.hasse},
              {"witt_index", inv.witt_index}};
}

Json to_json(const EvenCliffordClassification& c) {
  Json kinds = Json::array();
  for (auto k : c.factor_kinds) kinds.push_back(to_string(k));
  return Json{{"dim", c.dim},
              {"center_dim", c.center_dim},
              {"center_kind", to_string(c.center_kind)},
              {"center_class", to_json(c.center_class)},
              {"involution_kind", to_string(c.involution_kind)},
              {"factor_kinds", kinds},
              {"factor_degree", c.factor_degree},
              {"fixed_dim", c.fixed_dim}};
}

Json to_json(const LowRankReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"case", r.n},
              {"samples", r.samples},
              {"seed", r.seed},
              {"classification", to_json(r.classification)},
              {"checks", checks},
              {"pass", r.pass()}};
}

ParameterDecomposition decomposition_from_json(const Json& summands, DualTarget target) {
  if (!summands.is_array()) parse_fail("decomposition must be an array of summands");
  ParameterDecomposition d;
  d.target = target;
  for (const auto& s : summands) {
    Summand x;
    long dim = field(s, "dim").get<long>();
    if (dim <= 0) throw Error(ErrorKind::InvalidDecomposition, "summand dimensions must be positive");
    x.dim = static_cast<std::size_t>(dim);
    std::string kind = field(s, "kind").get<std::string>();
    if (kind == "symplectic") {
      x.kind = SummandKind::Symplectic;
    } else if (kind == "orthogonal") {
      x.kind = SummandKind::Orthogonal;
    } else {
      throw Error(ErrorKind::InvalidDecomposition, "unknown summand kind '" + kind + "'");
    }
    if (s.contains("label")) x.label = s.at("label").get<std::string>();
    d.summands.push_back(std::move(x));
  }
  return d;
}

Json to_json(const ComponentGroupReport& r) {
  return Json{{"target", to_string(r.target)},
              {"k", r.k},
              {"m", r.m},
              {"order_literal", r.order_literal},
              {"order_paper", r.order_paper},
              {"order_sc", Json{{"literal", r.order_sc_literal}, {"paper", r.order_sc_paper}}},
              {"z_hat_order", r.z_hat_order},
              {"z_hat_group", to_string(r.z_hat)}};
}

Json to_json(const DualGroupDescriptor& d) {
  return Json{{"n", d.n}, {"m", d.m}, {"family", d.family}, {"name", d.name}, {"galois_twist", d.galois_twist}};
}

Json to_json(const VerificationReport& r) {
  return Json{{"case", to_string(r.kase)},
              {"q", r.q},
              {"lhs_sum", to_json(r.lhs_sum)},
              {"rhs_closed_form", to_json(r.rhs_closed_form)},
              {"truncation_K", r.truncation_K},
              {"tail_bound", r.tail_bound},
              {"rel_error", r.rel_error},
              {"tolerance", r.tolerance},
              {"omit_delta", r.omit_delta},
              {"pass", r.pass}};
}

PeriodParams period_params_from_json(const Json& j) {
  PeriodParams p;
  p.kase = parse_period_case(field(j, "case").get<std::string>());
  LocalFieldData f = LocalFieldData::make(field(j, "q").get<int>());
  const Json& reps = field(j, "satake");
  if (p.kase == PeriodCase::N3Split) {
    if (!reps.is_array() || reps.size() != 3) parse_fail("n3_split needs three representations");
    for (const auto& r : reps) p.reps.push_back(rep_from_json(r, f));
  } else {
    bool list = reps.is_array() && !reps.empty() && !reps[0].is_number();
    p.reps.push_back(rep_from_json(list ? reps[0] : reps, f));
    const Json& chars = field(j, "chars");
    if (p.kase == PeriodCase::N2Split) {
      if (!chars.is_array() || chars.size() != 2) parse_fail("n2_split needs two character values");
      p.chars = UnramifiedCharacters::make_split(complex_from_json(chars[0]), complex_from_json(chars[1]));
    } else {
      bool nested = chars.is_array() && chars.size() == 1 && chars[0].is_array();
      p.chars = UnramifiedCharacters::make_inert(complex_from_json(nested ? chars[0] : chars));
    }
  }
  if (j.contains("omega")) {
    p.omega = complex_from_json(j.at("omega"));
  } else {
    Complex prod = p.kase == PeriodCase::N3Split ? Complex(1.0, 0.0) : p.chars.central();
    for (const auto& r : p.reps) prod *= r.similitude;
    p.omega = std::sqrt(prod);
  }
  return p;
}

Json to_json(const PeriodParams& p) {
  Json reps = Json::array();
  for (const auto& r : p.reps) reps.push_back(Json{{"a", to_json(r.a)}, {"similitude", to_json(r.similitude)}});
  Json out{{"case", to_string(p.kase)}, {"q", p.q()}, {"satake", reps}, {"omega", to_json(p.omega)}};
  if (p.kase == PeriodCase::N2Split) out["chars"] = Json::array({to_json(p.chars.c1), to_json(p.chars.c2)});
  if (p.kase == PeriodCase::N2Inert) out["chars"] = Json::array({to_json(p.chars.c1)});
  return out;
}

}  // namespace gspin
