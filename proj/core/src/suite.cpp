#include "gspin/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "gspin/error.hpp"
#include "gspin/oracles/oracles.hpp"

namespace gspin {

namespace {

struct Counter {
  std::size_t ok = 0;
  std::size_t total = 0;
  void add(bool pass) {
    ++total;
    ok += pass ? 1 : 0;
  }
  bool all() const { return ok == total; }
  Json json() const { return Json{{"passed", ok}, {"total", total}}; }
};

Rng criterion_rng(const SuiteConfig& c, int id) { return Rng(c.seed * 1000003ULL + static_cast<std::uint64_t>(id)); }

CliffordElement random_certifiable(const BasisPtr& basis, Rng& rng) {
  std::uniform_int_distribution<int> pick(1, 2);
  return random_versor(basis, rng, 2 * static_cast<std::size_t>(pick(rng)), 2);
}

CriterionResult clifford_suite(const SuiteConfig& cfg) {
  Rng rng = criterion_rng(cfg, 1);
  Counter assoc, anti, invol, words, norms, dims, closure;
  for (std::size_t n = 2; n <= 6; ++n) {
    QuadraticSpace space = random_diagonal_space(rng, n, 3, FieldTag::rationals());
    BasisPtr basis = CliffordBasis::create(space);
    for (int t = 0; t < 200; ++t) {
      CliffordElement x = random_element(basis, rng, 3, 0.3, false);
      CliffordElement y = random_element(basis, rng, 3, 0.3, false);
      CliffordElement z = random_element(basis, rng, 3, 0.3, false);
      assoc.add((x * y) * z == x * (y * z));
      anti.add(involution(x * y) == involution(y) * involution(x));
      invol.add(involution(involution(x)) == x);
      std::uniform_int_distribution<Mask> mask(0, basis->full_mask());
      Mask a = mask(rng);
      Mask b = mask(rng);
      std::vector<int> word;
      for (std::size_t i = 0; i < n; ++i)
        if (a & (Mask{1} << i)) word.push_back(static_cast<int>(i));
      for (std::size_t i = 0; i < n; ++i)
        if (b & (Mask{1} << i)) word.push_back(static_cast<int>(i));
      oracles::WordProduct w = oracles::reduce_word(word);
      Scalar c(w.sign);
      for (int i : w.contracted) c *= basis->diag()[static_cast<std::size_t>(i)];
      Mask wm = 0;
      for (int i : w.word) wm |= Mask{1} << i;
      words.add(CliffordElement::monomial(basis, a) * CliffordElement::monomial(basis, b) ==
                CliffordElement::monomial(basis, wm, c));
    }
    for (int t = 0; t < 200; ++t) {
      CliffordElement g = random_certifiable(basis, rng);
      CliffordElement h = random_certifiable(basis, rng);
      auto cg = is_gspin(g);
      auto ch = is_gspin(h);
      auto cgh = is_gspin(g * h);
      bool ok = std::holds_alternative<GSpinElement>(cg) && std::holds_alternative<GSpinElement>(ch) &&
                std::holds_alternative<GSpinElement>(cgh);
      if (ok) {
        ok = std::get<GSpinElement>(cgh).norm() == std::get<GSpinElement>(cg).norm() * std::get<GSpinElement>(ch).norm();
      }
      norms.add(ok);
    }
  }
  for (std::size_t n = 1; n <= kMaxCliffordDim; ++n) {
    Vector d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(Scalar(static_cast<long>(i % 3) + 1));
    BasisPtr basis = CliffordBasis::create(standard_space(0, d, FieldTag::rationals()));
    std::size_t even = 0;
    for (Mask m = 0; m <= basis->full_mask(); ++m) even += grade(m) % 2 == 0 ? 1 : 0;
    dims.add(even == (std::size_t{1} << (n - 1)));
    CliffordElement x = random_element(basis, rng, 2, n > 8 ? 0.02 : 0.2, true);
    CliffordElement y = random_element(basis, rng, 2, n > 8 ? 0.02 : 0.2, true);
    closure.add((x * y).is_even());
  }
  CriterionResult r{1, criterion_name(1), false, Json::object()};
  r.metrics = Json{{"associativity", assoc.json()},   {"anti_automorphism", anti.json()},
                   {"involution_order_two", invol.json()}, {"monomial_oracle", words.json()},
                   {"norm_multiplicative", norms.json()}, {"even_dimension", dims.json()},
                   {"even_closure", closure.json()}};
  r.pass = assoc.all() && anti.all() && invol.all() && words.all() && norms.all() && dims.all() && closure.all() &&
           norms.total == 1000;
  return r;
}

CriterionResult structure_table(const SuiteConfig& cfg) {
  Rng rng = criterion_rng(cfg, 2);
  Json per_field = Json::object();
  bool pass = true;
  for (FieldTag f : {FieldTag::rationals(), FieldTag::prime_field(5)}) {
    Counter table, center;
    for (std::size_t n = 1; n <= 8; ++n) {
      for (int t = 0; t < 20; ++t) {
        QuadraticSpace space = random_diagonal_space(rng, n, 4, f);
        EvenCliffordClassification c = classify_even_clifford(space);
        table.add(c.involution_kind == expected_involution_kind(n));
        if (n % 2 == 0) center.add((c.center_kind == CenterKind::Split) == discriminant(space, true).is_trivial());
      }
    }
    per_field[f.to_string()] = Json{{"involution_table", table.json()}, {"center_split_iff_disc", center.json()}};
    pass = pass && table.all() && center.all() && table.total == 160;
  }
  return CriterionResult{2, criterion_name(2), pass, per_field};
}

CriterionResult low_rank(const SuiteConfig& cfg) {
  struct Case {
    std::string label;
    QuadraticSpace space;
    std::size_t samples;
  };
  FieldTag Q = FieldTag::rationals();
  std::vector<Case> cases{
      {"<1>", standard_space(0, {Scalar(1)}, Q), 50},
      {"H", standard_space(1, {}, Q), 50},
      {"norm form Q(i)", norm_form(-1), 50},
      {"<1,1,1>", standard_space(0, {Scalar(1), Scalar(1), Scalar(1)}, Q), 50},
      {"H+<1>", standard_space(1, {Scalar(1)}, Q), 50},
      {"H+H", standard_space(2, {}, Q), 50},
      {"H+<1,1>", standard_space(1, {Scalar(1), Scalar(1)}, Q), 50},
      {"H+H+<1>", standard_space(2, {Scalar(1)}, Q), 100},
      {"H+H+<2>", standard_space(2, {Scalar(2)}, Q), 100},
      {"H+H+<2> over F5", standard_space(2, {Scalar(2)}, FieldTag::prime_field(5)), 100},
  };
  Json reports = Json::array();
  bool pass = true;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    LowRankReport r = verify_low_rank(cases[i].space, cases[i].space.dim(), cases[i].samples, cfg.seed + i);
    Json j = to_json(r);
    j["form"] = cases[i].label;
    reports.push_back(j);
    pass = pass && r.pass();
  }
  return CriterionResult{3, criterion_name(3), pass, Json{{"forms", reports}}};
}

CriterionResult embedding(const SuiteConfig& cfg) {
  Rng rng = criterion_rng(cfg, 4);
  Json per_n = Json::object();
  bool pass = true;
  for (std::size_t n = 2; n <= 4; ++n) {
    Vector d;
    for (std::size_t i = 0; i < n + 1; ++i) d.push_back(random_nonzero(rng, 3, 0));
    Vector head(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(n));
    BasisPtr small = CliffordBasis::create(standard_space(0, head, FieldTag::rationals()));
    BasisPtr big = CliffordBasis::create(standard_space(0, d, FieldTag::rationals()));
    Counter cert, norm, proj, mult;
    for (int t = 0; t < 100; ++t) {
      GSpinElement g = certify_gspin(random_certifiable(small, rng));
      GSpinElement h = certify_gspin(random_certifiable(small, rng));
      GSpinElement eg = embed(g, big);
      auto re = is_gspin(eg.element());
      cert.add(std::holds_alternative<GSpinElement>(re));
      norm.add(std::holds_alternative<GSpinElement>(re) && std::get<GSpinElement>(re).norm() == g.norm());
      Matrix big_so = project_so(eg);
      Matrix expect = Matrix::identity(n + 1);
      Matrix small_so = project_so(g);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) expect(i, j) = small_so(i, j);
      proj.add(big_so == expect);
      mult.add(embed(g.element() * h.element(), big) == eg.element() * embed(h, big).element());
    }
    per_n[std::to_string(n) + "->" + std::to_string(n + 1)] =
        Json{{"certified", cert.json()}, {"norm_preserved", norm.json()}, {"so_block", proj.json()}, {"multiplicative", mult.json()}};
    pass = pass && cert.all() && norm.all() && proj.all() && mult.all() && cert.total == 100;
  }
  return CriterionResult{4, criterion_name(4), pass, per_n};
}

ParameterDecomposition sample_decomposition(DualTarget target, std::size_t k, std::size_t extra) {
  ParameterDecomposition d;
  d.target = target;
  for (std::size_t i = 0; i < k; ++i) {
    Summand s;
    s.kind = target == DualTarget::Odd ? SummandKind::Symplectic : SummandKind::Orthogonal;
    s.dim = target == DualTarget::Odd ? 2 : 1;
    if (i < extra) s.dim += target == DualTarget::Odd ? 2 : 1;
    d.summands.push_back(s);
  }
  return d;
}

CriterionResult component_groups(const SuiteConfig&) {
  Counter agree, literal_oracle, paper, elementary, ratio;
  for (std::size_t k = 1; k <= 6; ++k) {
    SignQuotient quotient = enumerate_sign_quotient(k);
    bool elem = true;
    for (auto a : quotient.representatives) elem = elem && quotient.multiply(a, a) == quotient.canonical(0);
    elementary.add(elem);
  }
  for (std::size_t k = 1; k <= 6; ++k) {
    for (std::size_t extra = 0; extra <= 1; ++extra) {
      ParameterDecomposition odd = sample_decomposition(DualTarget::Odd, k, extra);
      literal_oracle.add(s_phi_order(odd, OrderConvention::Literal) == oracles::sign_quotient_count(k));
      paper.add(s_phi_order(odd, OrderConvention::Paper) == (std::uint64_t{1} << k));
      for (auto conv : {OrderConvention::Literal, OrderConvention::Paper}) {
        ratio.add(s_phi_sc_order(odd, conv).order == 2 * s_phi_order(odd, conv));
        // Even partners of total dimension 2m and 2m + 2 with k' <= 6 summands.
        for (std::size_t target_dim : {odd.total_dim(), odd.total_dim() + 2}) {
          for (std::size_t k2 = 1; k2 <= 6 && k2 <= target_dim; ++k2) {
            std::size_t extra2 = target_dim - k2;
            if (extra2 > k2) continue;
            ParameterDecomposition even = sample_decomposition(DualTarget::Even, k2, extra2);
            ratio.add(s_phi_sc_order(even, conv).order == 4 * s_phi_order(even, conv));
            agree.add(beta_constant(odd, even, conv).agree() && beta_constant(even, odd, conv).agree());
          }
        }
      }
    }
  }
  ParameterDecomposition phi2{DualTarget::Even, {Summand{2, SummandKind::Orthogonal, "chi"}}};
  ParameterDecomposition phi3{DualTarget::Odd, {Summand{2, SummandKind::Symplectic, "pi"}}};
  BetaResult w = beta_constant(phi2, phi3, OrderConvention::Literal);
  bool so3_case = w.agree() && w.from_component_groups == 4 && beta_from_orders(1, 1) == 4;
  bool eight_x = true;
  for (std::uint64_t x : {1U, 2U, 4U, 8U}) eight_x = eight_x && beta_from_orders(2, x) == 8 * x;
  bool pass = agree.all() && literal_oracle.all() && paper.all() && elementary.all() && ratio.all() && so3_case && eight_x;
  return CriterionResult{5, criterion_name(5), pass,
                         Json{{"formulas_agree", agree.json()},
                              {"literal_matches_enumeration", literal_oracle.json()},
                              {"paper_order", paper.json()},
                              {"elementary_abelian", elementary.json()},
                              {"sc_ratio", ratio.json()},
                              {"so3_pgl2_beta", w.from_component_groups},
                              {"beta_eight_times_x", eight_x}}};
}

Complex unit_complex(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

CriterionResult lfactor_identity(const SuiteConfig& cfg) {
  Rng rng = criterion_rng(cfg, 6);
  std::uniform_int_distribution<int> mdist(1, 3);
  std::uniform_int_distribution<int> qdist(0, 3);
  std::uniform_real_distribution<double> re(0.5, 2.0), im(-3.0, 3.0);
  const int qs[] = {2, 3, 5, 7};
  double worst = 0.0;
  Counter within;
  for (int t = 0; t < 100; ++t) {
    SatakeClass c;
    c.family = SatakeFamily::OddGSpin;
    int m = mdist(rng);
    for (int i = 0; i < m; ++i) c.satake.push_back(unit_complex(rng));
    c.similitude = unit_complex(rng);
    LocalFieldData f = LocalFieldData::make(qs[qdist(rng)]);
    Complex s(re(rng), im(rng));
    Complex lhs = euler_factor(s, adjoint_eigenvalues(c, AdjointAlgebra::Gsp), f);
    Complex rhs = euler_factor(s, adjoint_eigenvalues(c, AdjointAlgebra::Sp), f) * local_zeta(s, f);
    double err = std::abs(lhs - rhs) / std::abs(rhs);
    worst = std::max(worst, err);
    within.add(err < 1e-12);
  }
  return CriterionResult{6, criterion_name(6), within.all() && within.total == 100,
                         Json{{"classes", within.json()}, {"max_rel_error", worst}, {"threshold", 1e-12}}};
}

CriterionResult spherical_oracle(const SuiteConfig& cfg) {
  Rng rng = criterion_rng(cfg, 7);
  double worst = 0.0;
  Counter within;
  for (int q : {2, 3, 5}) {
    LocalFieldData f = LocalFieldData::make(q);
    for (int t = 0; t < 20; ++t) {
      SphericalRep rep;
      do {
        rep = SphericalRep{unit_complex(rng), unit_complex(rng), f};
      } while (std::abs(rep.alpha() - rep.beta()) < 0.05);
      for (int k = 0; k <= 3; ++k) {
        Complex mac = spherical_coeff(rep, k);
        Complex orc = oracles::spherical_coset_sum(rep.alpha(), rep.beta(), q, k);
        double err = std::abs(mac - orc);
        worst = std::max(worst, err);
        within.add(err < 1e-12);
      }
    }
  }
  return CriterionResult{7, criterion_name(7), within.all() && within.total == 240,
                         Json{{"comparisons", within.json()}, {"max_abs_error", worst}, {"threshold", 1e-12}}};
}

CriterionResult unramified_identity(const SuiteConfig& cfg) {
  Rng rng = criterion_rng(cfg, 8);
  VerifyOptions opts{cfg.tolerance, cfg.truncation, false};
  Json per_case = Json::object();
  bool pass = true;
  for (PeriodCase kase : {PeriodCase::N2Split, PeriodCase::N2Inert, PeriodCase::N3Split}) {
    Counter ok, twist, negative;
    double worst = 0.0;
    double worst_tail = 0.0;
    double worst_control_gap = 0.0;
    for (int q : {2, 3, 5}) {
      LocalFieldData f = LocalFieldData::make(q);
      for (int t = 0; t < 25; ++t) {
        PeriodParams p = random_period_params(kase, f, rng);
        VerificationReport r = verify_identity(p, opts);
        ok.add(r.pass);
        worst = std::max(worst, r.rel_error);
        worst_tail = std::max(worst_tail, r.tail_bound);
        twist.add(verify_identity(sqrt_twisted(p), opts).pass == r.pass);
        if (t == 0) {
          VerifyOptions neg = opts;
          neg.omit_delta = true;
          VerificationReport c = verify_identity(p, neg);
          double delta = std::abs(delta_so(kase == PeriodCase::N3Split ? 4 : 3, f));
          double gap = std::abs(c.rel_error - std::abs(delta - 1.0));
          worst_control_gap = std::max(worst_control_gap, gap);
          negative.add(!c.pass && gap < 1e-6);
        }
      }
    }
    per_case[std::string(to_string(kase))] = Json{{"draws", ok.json()},
                                                  {"twist_covariant", twist.json()},
                                                  {"negative_control_fails", negative.json()},
                                                  {"max_rel_error", worst},
                                                  {"max_tail_bound", worst_tail},
                                                  {"max_control_gap", worst_control_gap}};
    pass = pass && ok.all() && twist.all() && negative.all() && ok.total == 75;
  }
  return CriterionResult{8, criterion_name(8), pass, per_case};
}

}  // namespace

std::string criterion_name(int id) {
  switch (id) {
    case 1: return "clifford_algebra_suite";
    case 2: return "structure_table";
    case 3: return "low_rank_witnesses";
    case 4: return "embedding";
    case 5: return "component_groups";
    case 6: return "lfactor_identity";
    case 7: return "spherical_oracle";
    case 8: return "unramified_identity";
    default: throw Error(ErrorKind::InvalidArgument, "unknown criterion " + std::to_string(id));
  }
}

CriterionResult run_criterion(int id, const SuiteConfig& config) {
  switch (id) {
    case 1: return clifford_suite(config);
    case 2: return structure_table(config);
    case 3: return low_rank(config);
    case 4: return embedding(config);
    case 5: return component_groups(config);
    case 6: return lfactor_identity(config);
    case 7: return spherical_oracle(config);
    case 8: return unramified_identity(config);
    default: throw Error(ErrorKind::InvalidArgument, "unknown criterion " + std::to_string(id));
  }
}

unsigned suite_thread_count(const SuiteConfig& config) {
  unsigned n = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GSPIN_LAB_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

Json run_suite(const SuiteConfig& config) {
  std::vector<int> ids = config.criteria;
  if (ids.empty())
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids) criterion_name(id);

  std::vector<CriterionResult> results(ids.size());
  std::vector<std::string> errors(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      try {
        results[i] = run_criterion(ids[i], config);
      } catch (const std::exception& e) {
        results[i] = CriterionResult{ids[i], criterion_name(ids[i]), false, Json::object()};
        errors[i] = e.what();
      }
    }
  };
  unsigned threads = std::min<unsigned>(suite_thread_count(config), static_cast<unsigned>(ids.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Json list = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    Json j{{"id", results[i].id}, {"name", results[i].name}, {"pass", results[i].pass}, {"metrics", results[i].metrics}};
    if (!errors[i].empty()) j["error"] = errors[i];
    list.push_back(j);
    all = all && results[i].pass;
  }
  return Json{{"seed", config.seed},
              {"tolerance", config.tolerance},
              {"truncation", config.truncation},
              {"criteria", list},
              {"pass", all}};
}

}  // namespace gspin
