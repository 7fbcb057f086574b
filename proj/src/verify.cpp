#include "amalgam/verify.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "amalgam/betti.hpp"

namespace amalgam {

bool SuiteResult::all_pass() const {
  for (const CheckResult& check : checks)
    if (!check.pass) return false;
  return true;
}

bool VerifyReport::all_pass() const {
  for (const SuiteResult& suite : suites)
    if (!suite.all_pass()) return false;
  return true;
}

namespace {

// Modulo-based draws keep the sequences reproducible independently of the
// standard library's distribution implementations.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  long below(long n) {
    return static_cast<long>(engine() % static_cast<std::uint64_t>(n));
  }
  long range(long lo, long hi) { return lo + below(hi - lo + 1); }
};

NormalWord random_word(const AmalgamParams& params, Rng& rng,
                       int max_letters) {
  NormalWord w(params);
  long len = rng.below(max_letters + 1);
  for (long i = 0; i < len; ++i) {
    Factor f = rng.below(2) == 0 ? Factor::s : Factor::t;
    w.append_power(f, rng.range(1, params.factor_order(f) - 1));
  }
  return w;
}

GroupRingElement random_element(const AmalgamParams& params, Rng& rng,
                                int max_terms, int max_letters) {
  GroupRingElement out(params);
  long terms = rng.range(1, max_terms);
  for (long i = 0; i < terms; ++i) {
    long num = rng.range(-3, 3);
    if (num == 0) num = 1;
    out.add_term(random_word(params, rng, max_letters),
                 make_rational(num, rng.range(1, 3)));
  }
  return out;
}

FreeWord random_free_word(Rng& rng, int max_letters) {
  FreeWord w;
  long len = rng.below(max_letters + 1);
  for (long i = 0; i < len; ++i) {
    w.push(rng.below(2) == 0 ? Factor::s : Factor::t,
           rng.below(2) == 0 ? 1 : -1);
  }
  return w;
}

NormalWord project(const FreeWord& w, const AmalgamParams& params) {
  NormalWord out(params);
  for (const FreeLetter& letter : w.letters())
    out.append_power(letter.gen, letter.sign);
  return out;
}

// Torsion class representatives used by the sampled trace checks.
std::vector<NormalWord> torsion_list(const AmalgamParams& params) {
  std::vector<NormalWord> out;
  out.push_back(NormalWord(params));
  for (int j = 1; j < params.d; ++j)
    out.push_back(NormalWord::central_power(params, j));
  for (int i = 1; i < params.m; ++i)
    out.push_back(NormalWord::generator_power(params, Factor::s, i));
  for (int i = 1; i < params.n; ++i)
    out.push_back(NormalWord::generator_power(params, Factor::t, i));
  return out;
}

void add_check(std::vector<CheckResult>& out, const std::string& name,
               bool pass, std::string detail = "") {
  out.push_back({name, pass, std::move(detail)});
}

}  // namespace

std::vector<CheckResult> symbolic_identity_suite(const AmalgamParams& params) {
  std::vector<CheckResult> out;
  const GroupRingElement one = GroupRingElement::one(params);
  auto gen = [&](Factor f, long e) {
    return GroupRingElement::monomial(
        NormalWord::generator_power(params, f, e));
  };
  const GroupRingElement s = gen(Factor::s, 1);
  const GroupRingElement t = gen(Factor::t, 1);
  const GroupRingElement s_inv = gen(Factor::s, -1);
  const GroupRingElement t_inv = gen(Factor::t, -1);
  const GroupRingElement r =
      GroupRingElement::monomial(NormalWord::central_power(params, 1));
  const GroupRingElement p = make_p(params);
  const GroupRingElement q = make_q(params);
  const GroupRingElement h = make_h(params);
  const GroupRingElement f = make_f(params);
  const GroupRingElement g = make_g(params);
  const GroupRingElement k = make_k(params);
  const GroupRingElement l = make_l(params);
  const GroupRingElement k1 = make_k1(params);
  const GroupRingElement l1 = make_l1(params);

  add_check(out, "p_idempotent", p * p == p);
  add_check(out, "q_idempotent", q * q == q);
  add_check(out, "h_idempotent", h * h == h);
  add_check(out, "p_self_adjoint", star(p) == p);
  add_check(out, "q_self_adjoint", star(q) == q);
  add_check(out, "h_self_adjoint", star(h) == h);

  add_check(out, "p_absorbs_s", p * s == p && s * p == p);
  add_check(out, "q_absorbs_t", q * t == q && t * q == q);
  add_check(out, "p_absorbs_h", p * h == p && h * p == p);
  add_check(out, "q_absorbs_h", q * h == q && h * q == q);

  add_check(out, "p_factors_as_h_f",
            p == make_rational(params.d, params.m) * (h * f));
  add_check(out, "q_factors_as_h_g",
            q == make_rational(params.d, params.n) * (h * g));

  add_check(out, "f_telescopes", f * (one - s) == one - r);
  add_check(out, "g_telescopes", g * (one - t) == one - r);

  add_check(out, "k_factorization",
            k * (one - s_inv) == one - h && (one - s_inv) * k == one - h);
  add_check(out, "l_factorization",
            l * (one - t_inv) == one - h && (one - t_inv) * l == one - h);
  add_check(out, "k1_factorization",
            k1 * (one - s_inv) == one - p && (one - s_inv) * k1 == one - p);
  add_check(out, "l1_factorization",
            l1 * (one - t_inv) == one - q && (one - t_inv) * l1 == one - q);

  add_check(out, "p_times_g",
            p * g == make_rational(params.n, params.d) * (p * q));
  add_check(out, "q_times_f",
            q * f == make_rational(params.m, params.d) * (q * p));

  add_check(out, "f_exchange", f * (one - p) == (one - h) * f);
  add_check(out, "g_exchange", g * (one - q) == (one - h) * g);
  return out;
}

std::vector<CheckResult> fox_suite(const AmalgamParams& params,
                                   std::uint64_t seed, int samples) {
  std::vector<CheckResult> out;
  const GroupRingElement one = GroupRingElement::one(params);
  auto gen = [&](Factor f, long e) {
    return GroupRingElement::monomial(
        NormalWord::generator_power(params, f, e));
  };

  GRMatrix delta0 = build_delta0(params);
  add_check(out, "delta0_entries",
            delta0.at(0, 0) == one - gen(Factor::s, 1) &&
                delta0.at(0, 1) == one - gen(Factor::t, 1));
  add_check(out, "delta0_augmentation",
            augmentation(delta0.at(0, 0)) == 0 &&
                augmentation(delta0.at(0, 1)) == 0);
  add_check(out, "d0_is_transpose", build_d0(params) == delta0.transpose());

  GRMatrix d1 = build_d1(params);
  GroupRingElement sum_s(params), sum_t(params);
  for (int i = 0; i < params.m; ++i) sum_s += gen(Factor::s, i);
  for (int j = 0; j < params.n; ++j) sum_t += gen(Factor::t, j);
  add_check(out, "d1_geometric_rows",
            d1.at(0, 0) == sum_s && d1.at(1, 1) == sum_t);
  add_check(out, "d1_zero_pattern",
            d1.at(0, 1).is_zero() && d1.at(1, 0).is_zero());
  add_check(out, "d1_bottom_row",
            d1.at(2, 0) == -make_f(params) && d1.at(2, 1) == make_g(params));

  // The raw derivatives of the third relator carry the central unit
  // s^{-m/d}; multiplying by r must recover the stored row.
  GroupRingElement unit =
      GroupRingElement::monomial(NormalWord::central_power(params, 1));
  add_check(out, "d1_unit_removal",
            unit * fox_derivative(relator_amalgam(params), Factor::s, params) ==
                    d1.at(2, 0) &&
                unit * fox_derivative(relator_amalgam(params), Factor::t,
                                      params) == d1.at(2, 1));

  GRMatrix lap = build_laplacian(params);
  add_check(out, "laplacian_self_adjoint", lap == lap.star_transpose());
  add_check(out, "laplacian_matches_expanded", lap == expanded_laplacian(params));

  Rng rng(seed);
  bool product_rule = true;
  bool fundamental = true;
  for (int i = 0; i < samples; ++i) {
    FreeWord u = random_free_word(rng, 6);
    FreeWord v = random_free_word(rng, 6);
    GroupRingElement u_image =
        GroupRingElement::monomial(project(u, params));
    for (Factor x : {Factor::s, Factor::t}) {
      product_rule = product_rule &&
                     fox_derivative(u * v, x, params) ==
                         fox_derivative(u, x, params) +
                             u_image * fox_derivative(v, x, params);
    }
    GroupRingElement w_image =
        GroupRingElement::monomial(project(u, params));
    fundamental =
        fundamental &&
        fox_derivative(u, Factor::s, params) * (gen(Factor::s, 1) - one) +
                fox_derivative(u, Factor::t, params) *
                    (gen(Factor::t, 1) - one) ==
            w_image - one;
  }
  add_check(out, "product_rule_sampled", product_rule);
  add_check(out, "fundamental_identity_sampled", fundamental);
  return out;
}

std::vector<CheckResult> conjugacy_suite(const AmalgamParams& params,
                                         std::uint64_t seed, int samples) {
  std::vector<CheckResult> out;
  Rng rng(seed);

  bool reflexive = true, symmetric = true, transitive = true,
       conjugates_detected = true;
  for (int i = 0; i < samples; ++i) {
    NormalWord a = random_word(params, rng, 6);
    NormalWord b = random_word(params, rng, 6);
    NormalWord u = random_word(params, rng, 4);
    NormalWord v = random_word(params, rng, 4);
    reflexive = reflexive && are_conjugate(a, a);
    symmetric = symmetric && are_conjugate(a, b) == are_conjugate(b, a);
    NormalWord ua = multiply(multiply(u, a), invert(u));
    NormalWord vua = multiply(multiply(v, ua), invert(v));
    conjugates_detected = conjugates_detected && are_conjugate(a, ua);
    transitive = transitive && are_conjugate(a, vua);
  }
  add_check(out, "reflexive_sampled", reflexive);
  add_check(out, "symmetric_sampled", symmetric);
  add_check(out, "conjugates_detected_sampled", conjugates_detected);
  add_check(out, "transitive_on_conjugates_sampled", transitive);

  std::vector<NormalWord> torsion = torsion_list(params);
  bool trace_cyclic = true, trace_invariant = true;
  for (int i = 0; i < samples; ++i) {
    GroupRingElement a = random_element(params, rng, 3, 4);
    GroupRingElement b = random_element(params, rng, 3, 4);
    NormalWord u = random_word(params, rng, 4);
    const NormalWord& g = torsion[rng.below(torsion.size())];
    trace_cyclic =
        trace_cyclic && delocalized_trace(a * b, g) == delocalized_trace(b * a, g);
    GroupRingElement conjugated = GroupRingElement::monomial(u) * a *
                                  GroupRingElement::monomial(invert(u));
    trace_invariant =
        trace_invariant &&
        delocalized_trace(conjugated, g) == delocalized_trace(a, g);
  }
  add_check(out, "trace_cyclic_sampled", trace_cyclic);
  add_check(out, "trace_conjugation_invariant_sampled", trace_invariant);

  bool identity_count = class_intersection_count(
                            NormalWord(params), CyclicSubgroup::zm) == 1;
  add_check(out, "identity_intersection_count", identity_count);
  bool central_counts = true;
  for (int j = 0; j < params.d; ++j) {
    central_counts =
        central_counts &&
        class_intersection_count(NormalWord::central_power(params, j),
                                 CyclicSubgroup::zd) == 1;
  }
  add_check(out, "central_intersection_counts", central_counts);
  return out;
}

std::vector<CheckResult> betti_suite(const AmalgamParams& params) {
  std::vector<CheckResult> out;

  // betti_number computes both evaluation routes and throws on mismatch.
  bool paths_agree = true;
  std::string detail;
  try {
    for (const NormalWord& g : torsion_list(params)) betti_number(g, params);
    RawWord generic = parse_word("s t", params);
    betti_number(reduce(generic, params), params);
  } catch (const std::logic_error& e) {
    paths_agree = false;
    detail = e.what();
  }
  add_check(out, "trace_and_count_paths_agree", paths_agree, detail);

  Rational at_identity = betti_number(NormalWord(params), params);
  Rational expected = make_rational(1, params.d) - make_rational(1, params.m) -
                      make_rational(1, params.n);
  add_check(out, "identity_value", at_identity == expected,
            to_fraction_string(at_identity));

  BettiReport report = betti_table(params);
  bool no_duplicates = true;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    for (std::size_t j = i + 1; j < report.rows.size(); ++j) {
      if (!report.rows[i].representative || !report.rows[j].representative)
        continue;
      no_duplicates = no_duplicates &&
                      !are_conjugate(*report.rows[i].representative,
                                     *report.rows[j].representative);
    }
  }
  add_check(out, "table_classes_pairwise_distinct", no_duplicates);

  // Every torsion element of the factor subgroups belongs to exactly one
  // listed class.
  bool complete = true;
  for (const NormalWord& g : torsion_list(params)) {
    int hits = 0;
    for (const BettiRow& row : report.rows) {
      if (row.representative && are_conjugate(*row.representative, g)) ++hits;
    }
    complete = complete && hits == 1;
  }
  add_check(out, "table_covers_torsion_classes", complete);

  bool generic_zero = true;
  for (const char* text : {"s t", "s t^2", "s t s t"}) {
    NormalWord g = reduce(parse_word(text, params), params);
    if (classify(g).kind != ClassKind::generic) continue;
    generic_zero = generic_zero && betti_number(g, params) == 0;
  }
  add_check(out, "generic_classes_vanish", generic_zero);
  return out;
}

std::vector<CheckResult> quotient_suite(const AmalgamParams& params,
                                        VerifyLevel level) {
  std::vector<CheckResult> out;

  std::vector<std::string> names{"trivial", "cyclic_product"};
  if (params.m == 4 && params.n == 6 && params.d == 2) {
    names.push_back("sl2_z_mod2");
    names.push_back("sl2_z_mod3");
    if (level == VerifyLevel::full) names.push_back("sl2_z_mod4");
  }
  if (params.m == 2 && params.n == 3 && params.d == 1) {
    names.push_back("psl2_z_mod2");
    names.push_back("psl2_z_mod3");
    if (level == VerifyLevel::full) names.push_back("psl2_z_mod5");
  }

  for (const std::string& name : names) {
    QuotientRep rep = builtin_rep(name, params);
    KernelIdentityReport kernel = verify_kernel_identity(rep);
    std::ostringstream detail;
    detail << "nullity=" << kernel.laplacian_nullity
           << " predicted=" << kernel.predicted_nullity;
    add_check(out, "kernel_identity_" + name, kernel.match, detail.str());
  }

  QuotientRep rep = builtin_rep("cyclic_product", params);
  Rng rng(kDefaultSeed);
  bool hom = true, star_transpose = true;
  const int samples = level == VerifyLevel::quick ? 10 : 40;
  for (int i = 0; i < samples; ++i) {
    GroupRingElement a = random_element(params, rng, 3, 4);
    GroupRingElement b = random_element(params, rng, 3, 4);
    hom = hom && represent(a * b, rep) == represent(a, rep) * represent(b, rep);
    star_transpose =
        star_transpose && represent(star(a), rep) == represent(a, rep).transpose();
  }
  add_check(out, "represent_is_ring_homomorphism", hom);
  add_check(out, "represent_star_is_transpose", star_transpose);

  RationalMatrix lap = represent(build_laplacian(params), rep);
  RationalMatrix d0 = represent(build_d0(params), rep);
  RationalMatrix d1 = represent(build_d1(params), rep);
  add_check(out, "laplacian_gram_structure",
            lap == d0 * d0.transpose() + d1.transpose() * d1);
  add_check(out, "kernel_via_stacked_differentials",
            nullspace_dim(lap) == nullspace_dim(vstack(d0.transpose(), d1)));
  add_check(out, "rank_pivot_invariance",
            rank(lap, PivotPolicy::first_nonzero) ==
                rank(lap, PivotPolicy::min_magnitude));
  return out;
}

VerifyReport verify_all(const AmalgamParams& params, VerifyLevel level,
                        std::uint64_t seed) {
  const int samples = level == VerifyLevel::quick ? 40 : 200;
  VerifyReport report;
  report.params = params;
  report.level = level;
  report.seed = seed;
  report.suites.push_back({"group_ring", symbolic_identity_suite(params)});
  report.suites.push_back({"fox", fox_suite(params, seed, samples)});
  report.suites.push_back({"conjugacy", conjugacy_suite(params, seed, samples)});
  report.suites.push_back({"betti", betti_suite(params)});
  report.suites.push_back({"quotient", quotient_suite(params, level)});
  return report;
}

std::vector<AmalgamParams> params_grid(int max_m, int max_n) {
  std::vector<AmalgamParams> out;
  for (int m = 2; m <= max_m; ++m) {
    for (int n = 3; n <= max_n; ++n) {
      int g = std::gcd(m, n);
      for (int d = 1; d <= g; ++d) {
        if (g % d != 0 || d == m || d == n) continue;
        out.push_back(AmalgamParams{m, n, d});
      }
    }
  }
  return out;
}

std::string render_table(const VerifyReport& report) {
  std::ostringstream out;
  out << "verification for (m, n, d) = (" << report.params.m << ", "
      << report.params.n << ", " << report.params.d << "), level "
      << (report.level == VerifyLevel::quick ? "quick" : "full") << ", seed "
      << report.seed << "\n";
  int failures = 0;
  for (const SuiteResult& suite : report.suites) {
    for (const CheckResult& check : suite.checks) {
      out << (check.pass ? "PASS" : "FAIL") << "  " << suite.name << "."
          << check.name;
      if (!check.detail.empty()) out << "  [" << check.detail << "]";
      out << "\n";
      if (!check.pass) ++failures;
    }
  }
  out << (failures == 0 ? "all checks passed"
                        : std::to_string(failures) + " check(s) failed")
      << "\n";
  return out.str();
}

nlohmann::ordered_json to_json(const VerifyReport& report) {
  nlohmann::ordered_json out;
  out["schema"] = "amalgam.verify/1";
  out["params"] = {{"m", report.params.m},
                   {"n", report.params.n},
                   {"d", report.params.d}};
  out["level"] = report.level == VerifyLevel::quick ? "quick" : "full";
  out["seed"] = report.seed;
  out["suites"] = nlohmann::ordered_json::array();
  for (const SuiteResult& suite : report.suites) {
    nlohmann::ordered_json s;
    s["name"] = suite.name;
    s["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& check : suite.checks) {
      nlohmann::ordered_json c;
      c["name"] = check.name;
      c["pass"] = check.pass;
      if (!check.detail.empty()) c["detail"] = check.detail;
      s["checks"].push_back(c);
    }
    out["suites"].push_back(s);
  }
  out["all_pass"] = report.all_pass();
  return out;
}

}  // namespace amalgam
