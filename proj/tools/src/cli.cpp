#include "gspin/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include "gspin/error.hpp"
#include "gspin/json_io.hpp"
#include "gspin/suite.hpp"

namespace gspin::cli {

namespace {

struct Outcome {
  Json doc;
  int code = kOk;
};

Json error_doc(const std::string& kind, const std::string& message, const std::string& flag = {}) {
  Json e{{"kind", kind}, {"message", message}};
  if (!flag.empty()) e["flag"] = flag;
  return Json{{"error", e}};
}

Json parse_json_flag(const std::string& flag, const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError{flag, std::string("invalid JSON: ") + e.what()};
  }
}

// Malformed input behind a flag is a usage error; well-formed input that
// violates a mathematical hypothesis stays a domain error.
template <class F>
auto with_flag(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::InvalidArgument) throw UsageError{flag, e.what()};
    throw;
  } catch (const Json::exception& e) {
    throw UsageError{flag, e.what()};
  }
}

Complex complex_flag(const std::string& flag, const std::string& text) {
  std::string t = text;
  t.erase(0, t.find_first_not_of(' '));
  if (!t.empty() && t.front() == '[') return with_flag(flag, [&] { return complex_from_json(parse_json_flag(flag, t)); });
  std::istringstream in(t);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw UsageError{flag, "expected a complex number as 're,im' or [re, im]"};
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw UsageError{flag, "expected a complex number as 're,im' or [re, im]"};
  }
  std::string rest;
  if (in >> rest) throw UsageError{flag, "trailing characters in complex number"};
  return Complex(re, im);
}

QuadraticSpace space_flag(const std::string& flag, const std::string& text) {
  return with_flag(flag, [&] { return space_from_json(parse_json_flag(flag, text)); });
}

CliffordElement element_flag(const std::string& flag, const std::string& text, const BasisPtr& basis) {
  return with_flag(flag, [&] { return element_from_json(parse_json_flag(flag, text), basis); });
}

Place place_flag(const std::string& flag, const std::string& text) {
  if (text == "inf") return Place::real();
  mpz_class p;
  if (p.set_str(text, 10) != 0 || p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw UsageError{flag, "place must be 'inf' or a prime, got '" + text + "'"};
  return Place::finite(p);
}

DualTarget target_flag(const std::string& flag, const std::string& text) {
  if (text == "odd") return DualTarget::Odd;
  if (text == "even") return DualTarget::Even;
  throw UsageError{flag, "target must be 'odd' or 'even'"};
}

std::vector<OrderConvention> conventions(const RunConfig& cfg) {
  if (cfg.convention == "literal") return {OrderConvention::Literal};
  if (cfg.convention == "paper") return {OrderConvention::Paper};
  return {OrderConvention::Literal, OrderConvention::Paper};
}

Json eigen_json(const EigenvalueMultiset& ev) {
  Json a = Json::array();
  for (const auto& z : ev) a.push_back(to_json(z));
  return a;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError{"--out", "cannot open '" + path + "' for writing"};
  f << text;
  if (!f) throw UsageError{"--out", "write to '" + path + "' failed"};
}

std::string read_file(const std::string& flag, const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError{flag, "cannot read '" + path + "'"};
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string flag_in(const std::string& message) {
  static const std::regex flag("--[A-Za-z0-9][A-Za-z0-9-]*");
  std::smatch m;
  return std::regex_search(message, m, flag) ? m.str() : std::string();
}

}  // namespace

void validate(const RunConfig& config) {
  if (!(config.tolerance > 0.0) || !std::isfinite(config.tolerance))
    throw UsageError{"--tol", "tolerance must be a positive finite number"};
  if (config.truncation < 10) throw UsageError{"--K", "truncation must be at least 10"};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Clifford and GSpin algebra, L-group counting and unramified local period checks", "gspin-lab"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed for all sampling");
  app.add_option("--tol", cfg.tolerance, "Relative tolerance for numerical checks");
  app.add_option("--K", cfg.truncation, "Truncation point of the local period series");
  app.add_option("--convention", cfg.convention, "Component group order convention")
      ->check(CLI::IsMember({"literal", "paper", "both"}));
  app.add_option("--disc", cfg.discriminant, "Discriminant convention")->check(CLI::IsMember({"signed", "plain"}));
  app.add_option("--gspin2", cfg.gspin2, "Adjoint convention for GSpin2")->check(CLI::IsMember({"single", "squared"}));
  app.add_option("--out", cfg.out, "Write the JSON report to this file");

  std::vector<std::pair<CLI::App*, std::function<Outcome()>>> handlers;
  std::string space_text, x_text, y_text, target_text, a_text, b_text, place_text;
  std::vector<std::string> places;

  // quad
  CLI::App* quad = app.add_subcommand("quad", "Quadratic space invariants");
  quad->require_subcommand(1, 1);
  CLI::App* quad_inv = quad->add_subcommand("invariants", "Diagonalization, discriminant and local invariants");
  quad_inv->add_option("--space", space_text, "Quadratic space JSON")->required();
  quad_inv->add_option("--place", places, "Places to report over Q: 'inf' or a prime (repeatable)");
  handlers.emplace_back(quad_inv, [&] {
    QuadraticSpace s = space_flag("--space", space_text);
    const Diagonalization& d = s.orthogonal_basis();
    Json diag = Json::array();
    for (const auto& x : d.diag) diag.push_back(to_json(x));
    Json inv = Json::array();
    if (s.field().modulus() != 0) {
      Json j = to_json(witt_invariants(s, Place::real()));
      j["place"] = s.field().to_string();
      inv.push_back(j);
    } else {
      std::vector<Place> ps;
      if (places.empty()) {
        std::set<mpz_class> primes{2};
        for (const auto& x : d.diag) {
          for (const auto& p : prime_divisors(x.value().get_num())) primes.insert(p);
          for (const auto& p : prime_divisors(x.value().get_den())) primes.insert(p);
        }
        ps.push_back(Place::real());
        for (const auto& p : primes) ps.push_back(Place::finite(p));
      } else {
        for (const auto& t : places) ps.push_back(place_flag("--place", t));
      }
      for (const auto& v : ps) inv.push_back(to_json(witt_invariants(s, v)));
    }
    return Outcome{Json{{"space", to_json(s)},
                        {"dim", s.dim()},
                        {"discriminant", to_json(discriminant(s, cfg.discriminant == "signed"))},
                        {"discriminant_convention", cfg.discriminant},
                        {"orthogonal_basis", Json{{"basis", to_json(d.basis)}, {"diag", diag}}},
                        {"places", inv}}};
  });
  CLI::App* quad_hil = quad->add_subcommand("hilbert", "Hilbert symbol (a, b)_v over Q");
  quad_hil->add_option("--a", a_text)->required();
  quad_hil->add_option("--b", b_text)->required();
  quad_hil->add_option("--place", place_text, "'inf' or a prime")->required();
  handlers.emplace_back(quad_hil, [&] {
    mpq_class a = with_flag("--a", [&] { return Scalar::parse(a_text).value(); });
    mpq_class b = with_flag("--b", [&] { return Scalar::parse(b_text).value(); });
    Place v = place_flag("--place", place_text);
    return Outcome{Json{{"a", to_json(Scalar(a))},
                        {"b", to_json(Scalar(b))},
                        {"place", v.to_string()},
                        {"symbol", hilbert_symbol(a, b, v)}}};
  });

  // clifford
  CLI::App* cliff = app.add_subcommand("clifford", "Clifford algebra arithmetic and GSpin membership");
  cliff->require_subcommand(1, 1);
  auto basis_of = [&] { return CliffordBasis::create(space_flag("--space", space_text)); };
  CLI::App* c_mul = cliff->add_subcommand("mul", "Product x y");
  c_mul->add_option("--space", space_text)->required();
  c_mul->add_option("--x", x_text)->required();
  c_mul->add_option("--y", y_text)->required();
  handlers.emplace_back(c_mul, [&] {
    BasisPtr b = basis_of();
    CliffordElement p = element_flag("--x", x_text, b) * element_flag("--y", y_text, b);
    return Outcome{Json{{"basis", b->id()}, {"product", to_json(p)}}};
  });
  CLI::App* c_inv = cliff->add_subcommand("inv", "Two-sided inverse of x");
  c_inv->add_option("--space", space_text)->required();
  c_inv->add_option("--x", x_text)->required();
  handlers.emplace_back(c_inv, [&] {
    BasisPtr b = basis_of();
    return Outcome{Json{{"basis", b->id()}, {"inverse", to_json(invert(element_flag("--x", x_text, b)))}}};
  });
  CLI::App* c_norm = cliff->add_subcommand("norm", "Spinor norm x x*");
  c_norm->add_option("--space", space_text)->required();
  c_norm->add_option("--x", x_text)->required();
  handlers.emplace_back(c_norm, [&] {
    BasisPtr b = basis_of();
    SpinorNorm n = spinor_norm(element_flag("--x", x_text, b));
    return Outcome{Json{{"basis", b->id()},
                        {"x_xstar", to_json(n.value)},
                        {"norm", n.scalar ? to_json(*n.scalar) : Json(nullptr)}}};
  });
  CLI::App* c_gspin = cliff->add_subcommand("gspin", "Certify x as an element of GSpin(V)");
  c_gspin->add_option("--space", space_text)->required();
  c_gspin->add_option("--x", x_text)->required();
  handlers.emplace_back(c_gspin, [&] {
    BasisPtr b = basis_of();
    auto r = is_gspin(element_flag("--x", x_text, b));
    if (const auto* g = std::get_if<GSpinElement>(&r)) {
      return Outcome{Json{{"basis", b->id()},
                          {"gspin", true},
                          {"norm", to_json(g->norm())},
                          {"inverse", to_json(g->inverse())},
                          {"so", to_json(project_so(*g))}}};
    }
    const auto& rej = std::get<GSpinRejection>(r);
    return Outcome{Json{{"basis", b->id()},
                        {"gspin", false},
                        {"rejection", Json{{"clause", to_string(rej.clause)},
                                           {"basis_index", rej.basis_index},
                                           {"detail", rej.detail}}}},
                   kFailure};
  });
  CLI::App* c_embed = cliff->add_subcommand("embed", "Image of x under C(V) -> C(V + <a>)");
  c_embed->add_option("--space", space_text)->required();
  c_embed->add_option("--target", target_text, "Target quadratic space JSON")->required();
  c_embed->add_option("--x", x_text)->required();
  handlers.emplace_back(c_embed, [&] {
    BasisPtr b = basis_of();
    BasisPtr t = CliffordBasis::create(space_flag("--target", target_text));
    CliffordElement e = embed(element_flag("--x", x_text, b), t);
    auto r = is_gspin(e);
    const auto* g = std::get_if<GSpinElement>(&r);
    return Outcome{Json{{"basis", t->id()},
                        {"embedded", to_json(e)},
                        {"gspin", g != nullptr},
                        {"norm", g ? to_json(g->norm()) : Json(nullptr)}}};
  });

  // structure
  CLI::App* structure = app.add_subcommand("structure", "Even Clifford algebra structure");
  structure->require_subcommand(1, 1);
  std::size_t samples = 100;
  CLI::App* s_cls = structure->add_subcommand("classify", "Center and involution type of C+(V)");
  s_cls->add_option("--space", space_text)->required();
  handlers.emplace_back(s_cls, [&] {
    QuadraticSpace s = space_flag("--space", space_text);
    Json j{{"space", to_json(s)}, {"classification", to_json(classify_even_clifford(s))}};
    if (s.dim() == 3) {
      QuaternionData q = quaternion_data(s);
      Json ram = Json::array();
      for (const auto& v : q.ramified) ram.push_back(v.to_string());
      j["quaternion"] = Json{{"i_square", to_json(q.i_square)},
                             {"j_square", to_json(q.j_square)},
                             {"ramified", ram},
                             {"split", q.split()}};
    }
    return Outcome{j};
  });
  CLI::App* s_low = structure->add_subcommand("verify-lowrank", "Exceptional isomorphism witnesses for n <= 5");
  s_low->add_option("--space", space_text)->required();
  s_low->add_option("--samples", samples, "Random samples per check")->check(CLI::Range(1, 100000));
  handlers.emplace_back(s_low, [&] {
    QuadraticSpace s = space_flag("--space", space_text);
    LowRankReport r = verify_low_rank(s, s.dim(), samples, cfg.seed);
    return Outcome{to_json(r), r.pass() ? kOk : kFailure};
  });

  // lgroup
  CLI::App* lgroup = app.add_subcommand("lgroup", "L-parameter component groups and dual groups");
  lgroup->require_subcommand(1, 1);
  std::string decomp_text, decomp1_text, target_n = "odd", target_n1 = "even";
  std::size_t dual_n = 0;
  bool disc_nontrivial = false;
  CLI::App* l_comp = lgroup->add_subcommand("compgroup", "Orders of S_phi and S_phi,sc");
  l_comp->add_option("--decomp", decomp_text, "JSON array of {dim, kind, label?}")->required();
  l_comp->add_option("--target", target_n, "odd (Sp) or even (SO)");
  handlers.emplace_back(l_comp, [&] {
    DualTarget t = target_flag("--target", target_n);
    Json summands = parse_json_flag("--decomp", decomp_text);
    ParameterDecomposition d = with_flag("--decomp", [&] { return decomposition_from_json(summands, t); });
    Json j = to_json(component_group_report(d));
    j["convention"] = cfg.convention;
    return Outcome{j};
  });
  CLI::App* l_beta = lgroup->add_subcommand("beta", "2^beta from both component group formulas");
  l_beta->add_option("--decomp-n", decomp_text)->required();
  l_beta->add_option("--target-n", target_n);
  l_beta->add_option("--decomp-n1", decomp1_text)->required();
  l_beta->add_option("--target-n1", target_n1);
  handlers.emplace_back(l_beta, [&] {
    DualTarget tn = target_flag("--target-n", target_n);
    DualTarget tn1 = target_flag("--target-n1", target_n1);
    Json sn = parse_json_flag("--decomp-n", decomp_text);
    Json sn1 = parse_json_flag("--decomp-n1", decomp1_text);
    ParameterDecomposition dn = with_flag("--decomp-n", [&] { return decomposition_from_json(sn, tn); });
    ParameterDecomposition dn1 = with_flag("--decomp-n1", [&] { return decomposition_from_json(sn1, tn1); });
    Json per = Json::object();
    bool agree = true;
    for (OrderConvention c : conventions(cfg)) {
      BetaResult b = beta_constant(dn, dn1, c);
      per[std::string(to_string(c))] = Json{{"two_to_beta", b.from_component_groups},
                                            {"from_sc_groups", b.from_sc_groups},
                                            {"agree", b.agree()}};
      agree = agree && b.agree();
    }
    return Outcome{Json{{"conventions", per}, {"pass", agree}}, agree ? kOk : kFailure};
  });
  CLI::App* l_dual = lgroup->add_subcommand("dual", "Dual group of GSpin(n)");
  l_dual->add_option("--n", dual_n)->required()->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
  l_dual->add_flag("--disc-nontrivial", disc_nontrivial, "Quasi-split form with nontrivial discriminant");
  handlers.emplace_back(l_dual, [&] { return Outcome{to_json(dual_group_descriptor(dual_n, !disc_nontrivial))}; });

  // lfactor
  CLI::App* lfactor = app.add_subcommand("lfactor", "Unramified local L-factors from Satake data");
  lfactor->require_subcommand(1, 1);
  std::string class_text, class2_text, s_text = "1,0", omega_text, algebra_text;
  int q_value = 0, delta_dim = 0, chi = 1;
  auto resolve = [&](const Json& cls) {
    int q = q_value;
    if (q == 0 && cls.contains("q")) q = with_flag("--class", [&] { return cls.at("q").get<int>(); });
    if (q == 0) throw UsageError{"--q", "residue field size is required"};
    return with_flag("--q", [&] { return LocalFieldData::make(q); });
  };
  auto evaluate = [&](const std::string& rep, const EigenvalueMultiset& ev, LocalFieldData f) {
    Complex s = complex_flag("--s", s_text);
    Complex value = euler_factor(s, ev, f);
    return Outcome{Json{{"representation", rep},
                        {"q", f.q},
                        {"s", to_json(s)},
                        {"degree", ev.size()},
                        {"eigenvalues", eigen_json(ev)},
                        {"value", to_json(value)}}};
  };
  CLI::App* lf_std = lfactor->add_subcommand("std", "Standard L-factor");
  CLI::App* lf_ad = lfactor->add_subcommand("ad", "Adjoint L-factor");
  CLI::App* lf_tensor = lfactor->add_subcommand("tensor", "Rankin-Selberg factor std x std twisted by omega^-1");
  for (CLI::App* sub : {lf_std, lf_ad, lf_tensor}) {
    sub->add_option("--class", class_text, "Satake class JSON")->required();
    sub->add_option("--q", q_value, "Residue field size");
    sub->add_option("--s", s_text, "Complex s as 're,im'");
  }
  lf_ad->add_option("--algebra", algebra_text, "sp | so | gsp | gso")->required();
  lf_tensor->add_option("--class2", class2_text, "Satake class of the larger group")->required();
  lf_tensor->add_option("--omega", omega_text, "Central character value; default sqrt of the similitude product");
  handlers.emplace_back(lf_std, [&] {
    Json cls = parse_json_flag("--class", class_text);
    SatakeClass c = with_flag("--class", [&] { return satake_from_json(cls); });
    return evaluate("std", std_eigenvalues(c), resolve(cls));
  });
  handlers.emplace_back(lf_ad, [&] {
    Json cls = parse_json_flag("--class", class_text);
    SatakeClass c = with_flag("--class", [&] { return satake_from_json(cls); });
    AdjointAlgebra a = with_flag("--algebra", [&] { return parse_adjoint_algebra(algebra_text); });
    auto conv = cfg.gspin2 == "squared" ? Gspin2AdjointConvention::Squared : Gspin2AdjointConvention::SingleFactor;
    return evaluate("ad_" + std::string(to_string(a)), adjoint_eigenvalues(c, a, conv), resolve(cls));
  });
  handlers.emplace_back(lf_tensor, [&] {
    Json cls = parse_json_flag("--class", class_text);
    Json cls2 = parse_json_flag("--class2", class2_text);
    SatakeClass c = with_flag("--class", [&] { return satake_from_json(cls); });
    SatakeClass c2 = with_flag("--class2", [&] { return satake_from_json(cls2); });
    Complex omega = omega_text.empty() ? std::sqrt(c.similitude * c2.similitude) : complex_flag("--omega", omega_text);
    return evaluate("tensor", tensor_eigenvalues(c, c2, omega), resolve(cls));
  });
  CLI::App* lf_delta = lfactor->add_subcommand("delta", "Delta_SO(V) for unramified V");
  lf_delta->add_option("--dim", delta_dim)->required()->check(CLI::Range(1, 64));
  lf_delta->add_option("--q", q_value)->required();
  lf_delta->add_option("--chi", chi, "chi_V(Frob) for even dimension")->check(CLI::IsMember({-1, 1}));
  handlers.emplace_back(lf_delta, [&] {
    LocalFieldData f = with_flag("--q", [&] { return LocalFieldData::make(q_value); });
    mpq_class exact = with_flag("--dim", [&] { return delta_so_exact(delta_dim, f, chi); });
    return Outcome{Json{{"dim", delta_dim},
                        {"q", f.q},
                        {"chi", chi},
                        {"exact", exact.get_str()},
                        {"value", to_json(delta_so(delta_dim, f, chi))}}};
  });

  // localperiod
  CLI::App* lp = app.add_subcommand("localperiod", "Unramified local period identity");
  lp->require_subcommand(1, 1);
  std::string case_text, satake_text, chars_text, batch_path;
  int random_count = 0;
  bool omit_delta = false;
  CLI::App* lp_verify = lp->add_subcommand("verify", "Compare the truncated matrix-coefficient integral with the L-value");
  lp_verify->add_option("--case", case_text, "n2_split | n2_inert | n3_split");
  lp_verify->add_option("--q", q_value, "Residue field size");
  lp_verify->add_option("--satake", satake_text, "Satake parameters: [re, im] or a list of {a, similitude}");
  lp_verify->add_option("--chars", chars_text, "Character values of the torus");
  lp_verify->add_option("--omega", omega_text, "Central character value");
  lp_verify->add_option("--batch", batch_path, "JSON file with an array of parameter objects");
  lp_verify->add_option("--random", random_count, "Verify this many random tempered draws")->check(CLI::Range(1, 100000));
  lp_verify->add_flag("--omit-delta", omit_delta, "Negative control: drop Delta from the closed form");
  handlers.emplace_back(lp_verify, [&] {
    VerifyOptions opts{cfg.tolerance, cfg.truncation, omit_delta};
    auto summary = [&](const std::vector<std::function<PeriodParams()>>& cases, const std::string& flag) {
      Json rows = Json::array();
      std::size_t passed = 0;
      for (const auto& make : cases) {
        try {
          VerificationReport r = verify_identity(with_flag(flag, make), opts);
          passed += r.pass ? 1 : 0;
          rows.push_back(to_json(r));
        } catch (const Error& e) {
          rows.push_back(error_doc(std::string(to_string(e.kind())), e.what()));
        }
      }
      bool ok = passed == cases.size();
      return Outcome{Json{{"cases", rows},
                          {"summary", Json{{"total", cases.size()}, {"passed", passed}, {"failed", cases.size() - passed}}},
                          {"pass", ok}},
                     ok ? kOk : kFailure};
    };
    if (!batch_path.empty()) {
      Json arr = parse_json_flag("--batch", read_file("--batch", batch_path));
      if (!arr.is_array()) throw UsageError{"--batch", "batch file must hold a JSON array"};
      std::vector<std::function<PeriodParams()>> cases;
      for (const auto& entry : arr) cases.push_back([entry] { return period_params_from_json(entry); });
      return summary(cases, "--batch");
    }
    if (case_text.empty()) throw UsageError{"--case", "required unless --batch is given"};
    PeriodCase kase = with_flag("--case", [&] { return parse_period_case(case_text); });
    if (q_value == 0) throw UsageError{"--q", "required unless --batch is given"};
    LocalFieldData f = with_flag("--q", [&] { return LocalFieldData::make(q_value); });
    if (random_count > 0) {
      auto rng = std::make_shared<Rng>(cfg.seed);
      std::vector<std::function<PeriodParams()>> cases(static_cast<std::size_t>(random_count),
                                                        [rng, kase, f] { return random_period_params(kase, f, *rng); });
      return summary(cases, "--random");
    }
    if (satake_text.empty()) throw UsageError{"--satake", "required for a single verification"};
    Json params{{"case", case_text}, {"q", q_value}, {"satake", parse_json_flag("--satake", satake_text)}};
    if (kase != PeriodCase::N3Split) {
      if (chars_text.empty()) throw UsageError{"--chars", "required for n2 cases"};
      params["chars"] = parse_json_flag("--chars", chars_text);
    }
    if (!omega_text.empty()) params["omega"] = to_json(complex_flag("--omega", omega_text));
    PeriodParams p = with_flag("--satake", [&] { return period_params_from_json(params); });
    VerificationReport r = verify_identity(p, opts);
    return Outcome{to_json(r), r.pass ? kOk : kFailure};
  });

  // suite
  CLI::App* suite = app.add_subcommand("suite", "Run the acceptance criteria");
  bool all = false;
  std::vector<int> criteria;
  unsigned threads = 0;
  suite->add_flag("--all", all, "Run every criterion");
  suite->add_option("--criterion", criteria, "Criterion id 1..8 (repeatable)")->check(CLI::Range(1, kCriterionCount));
  suite->add_option("--threads", threads, "Worker threads; GSPIN_LAB_THREADS caps this");
  handlers.emplace_back(suite, [&] {
    if (!all && criteria.empty()) throw UsageError{"--all", "select --all or at least one --criterion"};
    SuiteConfig sc;
    sc.seed = cfg.seed;
    sc.tolerance = cfg.tolerance;
    sc.truncation = cfg.truncation;
    sc.criteria = all ? std::vector<int>{} : criteria;
    sc.threads = threads;
    Json j = run_suite(sc);
    return Outcome{j, j.at("pass").get<bool>() ? kOk : kFailure};
  });

  if (!args.empty() && args.front().rfind("-", 0) != 0) {
    bool known = false;
    for (const CLI::App* sub : app.get_subcommands({})) known = known || sub->check_name(args.front());
    if (!known) {
      out << error_doc("UsageError", "unknown subcommand '" + args.front() + "'").dump(2) << "\n";
      err << "gspin-lab: unknown subcommand '" << args.front() << "'\n";
      return kUsage;
    }
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream o, ignored;
      app.exit(e, o, ignored);
      out << o.str();
      return kOk;
    }
    out << error_doc("UsageError", e.what(), flag_in(e.what())).dump(2) << "\n";
    err << "gspin-lab: " << e.what() << "\n";
    return kUsage;
  }

  try {
    validate(cfg);
    for (auto& [sub, handler] : handlers) {
      if (!sub->parsed()) continue;
      Outcome o = handler();
      std::string text = o.doc.dump(2) + "\n";
      if (cfg.out.empty()) {
        out << text;
      } else {
        write_file(cfg.out, text);
      }
      return o.code;
    }
    throw UsageError{"", "no subcommand selected"};
  } catch (const UsageError& e) {
    out << error_doc("UsageError", e.message, e.flag).dump(2) << "\n";
    err << "gspin-lab: " << (e.flag.empty() ? "" : e.flag + ": ") << e.message << "\n";
    return kUsage;
  } catch (const Error& e) {
    out << error_doc(std::string(to_string(e.kind())), e.what()).dump(2) << "\n";
    err << "gspin-lab: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace gspin::cli
