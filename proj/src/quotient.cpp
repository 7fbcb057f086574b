#include "amalgam/quotient.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace amalgam {

Perm identity_perm(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm inverse_perm(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
  return out;
}

Perm perm_power(const Perm& a, long e) {
  Perm base = e < 0 ? inverse_perm(a) : a;
  Perm out = identity_perm(static_cast<int>(a.size()));
  for (long i = 0, reps = std::labs(e); i < reps; ++i) out = compose(out, base);
  return out;
}

Perm QuotientRep::image(const NormalWord& w) const {
  Perm out = perm_power(image_s, static_cast<long>(params.coset_width(Factor::s)) *
                                     w.central());
  for (const Syllable& syl : w.syllables()) {
    const Perm& gen = syl.factor == Factor::s ? image_s : image_t;
    out = compose(out, perm_power(gen, syl.exponent));
  }
  return out;
}

namespace {

void check_permutation(const Perm& p, int degree, const char* name) {
  if (static_cast<int>(p.size()) != degree)
    throw MalformedPermutation(std::string(name) + " has length " +
                               std::to_string(p.size()) + ", expected " +
                               std::to_string(degree));
  std::vector<bool> seen(degree, false);
  for (int v : p) {
    if (v < 0 || v >= degree)
      throw MalformedPermutation(std::string(name) + " image " +
                                 std::to_string(v) + " out of range");
    if (seen[v])
      throw MalformedPermutation(std::string(name) + " repeats image " +
                                 std::to_string(v));
    seen[v] = true;
  }
}

}  // namespace

void validate_rep(const QuotientRep& rep) {
  if (rep.degree < 1)
    throw MalformedPermutation("degree must be positive");
  check_permutation(rep.image_s, rep.degree, "s");
  check_permutation(rep.image_t, rep.degree, "t");
  const Perm id = identity_perm(rep.degree);
  if (perm_power(rep.image_s, rep.params.m) != id)
    throw RelationViolation("s^" + std::to_string(rep.params.m) +
                            " is not the identity");
  if (perm_power(rep.image_t, rep.params.n) != id)
    throw RelationViolation("t^" + std::to_string(rep.params.n) +
                            " is not the identity");
  if (perm_power(rep.image_s, rep.params.coset_width(Factor::s)) !=
      perm_power(rep.image_t, rep.params.coset_width(Factor::t)))
    throw RelationViolation(
        "s^" + std::to_string(rep.params.coset_width(Factor::s)) +
        " != t^" + std::to_string(rep.params.coset_width(Factor::t)));
}

QuotientRep load_rep(const nlohmann::json& doc, const AmalgamParams& params) {
  QuotientRep rep;
  rep.params = params;
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("s") ||
      !doc.contains("t"))
    throw MalformedPermutation(
        "quotient JSON must contain degree, s and t fields");
  rep.degree = doc.at("degree").get<int>();
  rep.image_s = doc.at("s").get<std::vector<int>>();
  rep.image_t = doc.at("t").get<std::vector<int>>();
  validate_rep(rep);
  return rep;
}

namespace {

// 2x2 matrices over Z/N, keyed for indexing.
struct ModMatrix {
  std::array<int, 4> a;  // row-major
  friend auto operator<=>(const ModMatrix&, const ModMatrix&) = default;
};

ModMatrix mod_mul(const ModMatrix& x, const ModMatrix& y, int mod) {
  return ModMatrix{{(x.a[0] * y.a[0] + x.a[1] * y.a[2]) % mod,
                    (x.a[0] * y.a[1] + x.a[1] * y.a[3]) % mod,
                    (x.a[2] * y.a[0] + x.a[3] * y.a[2]) % mod,
                    (x.a[2] * y.a[1] + x.a[3] * y.a[3]) % mod}};
}

ModMatrix mod_negate(const ModMatrix& x, int mod) {
  return ModMatrix{{(mod - x.a[0]) % mod, (mod - x.a[1]) % mod,
                    (mod - x.a[2]) % mod, (mod - x.a[3]) % mod}};
}

ModMatrix sign_canonical(const ModMatrix& x, int mod) {
  return std::min(x, mod_negate(x, mod));
}

// Left multiplication action of the generator images
// s -> [[0,-1],[1,0]], t -> [[0,-1],[1,1]] on (P)SL(2, Z/N).
QuotientRep modular_rep(const AmalgamParams& params, int mod, bool projective) {
  std::vector<ModMatrix> elements;
  std::map<ModMatrix, int> index;
  for (int a = 0; a < mod; ++a)
    for (int b = 0; b < mod; ++b)
      for (int c = 0; c < mod; ++c)
        for (int e = 0; e < mod; ++e) {
          if (((a * e - b * c) % mod + mod) % mod != 1 % mod) continue;
          ModMatrix x{{a, b, c, e}};
          if (projective) x = sign_canonical(x, mod);
          if (index.emplace(x, static_cast<int>(elements.size())).second)
            elements.push_back(x);
        }

  const ModMatrix gen_s{{0, (mod - 1) % mod, 1 % mod, 0}};
  const ModMatrix gen_t{{0, (mod - 1) % mod, 1 % mod, 1 % mod}};
  auto action = [&](const ModMatrix& g) {
    Perm p(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      ModMatrix y = mod_mul(g, elements[i], mod);
      if (projective) y = sign_canonical(y, mod);
      p[i] = index.at(y);
    }
    return p;
  };

  QuotientRep rep;
  rep.params = params;
  rep.degree = static_cast<int>(elements.size());
  rep.image_s = action(gen_s);
  rep.image_t = action(gen_t);
  validate_rep(rep);
  return rep;
}

// Regular action of Z_{m/d} x Z_{n/d}; collapses r to the identity, so it
// is a quotient for every parameter triple.
QuotientRep cyclic_product_rep(const AmalgamParams& params) {
  const int a = params.coset_width(Factor::s);
  const int b = params.coset_width(Factor::t);
  QuotientRep rep;
  rep.params = params;
  rep.degree = a * b;
  rep.image_s.resize(rep.degree);
  rep.image_t.resize(rep.degree);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      rep.image_s[i * b + j] = ((i + 1) % a) * b + j;
      rep.image_t[i * b + j] = i * b + (j + 1) % b;
    }
  }
  validate_rep(rep);
  return rep;
}

}  // namespace

QuotientRep builtin_rep(const std::string& name, const AmalgamParams& params) {
  if (name == "trivial") {
    QuotientRep rep{params, 1, {0}, {0}};
    validate_rep(rep);
    return rep;
  }
  if (name == "cyclic_product") return cyclic_product_rep(params);
  for (const char* prefix : {"sl2_z_mod", "psl2_z_mod"}) {
    if (name.rfind(prefix, 0) == 0) {
      int mod = 0;
      try {
        mod = std::stoi(name.substr(std::string(prefix).size()));
      } catch (const std::exception&) {
        break;
      }
      if (mod < 2 || mod > 7)
        throw std::invalid_argument("modulus out of range for " + name +
                                    " (supported: 2..7)");
      return modular_rep(params, mod, prefix[0] == 'p');
    }
  }
  throw std::invalid_argument("unknown builtin representation '" + name + "'");
}

std::vector<std::string> builtin_rep_names(const AmalgamParams& params) {
  std::vector<std::string> names{"trivial", "cyclic_product"};
  const char* family = nullptr;
  if (params.m == 4 && params.n == 6 && params.d == 2) family = "sl2_z_mod";
  if (params.m == 2 && params.n == 3 && params.d == 1) family = "psl2_z_mod";
  if (family) {
    for (int mod = 2; mod <= 7; ++mod)
      names.push_back(family + std::to_string(mod));
  }
  return names;
}

RationalMatrix represent(const GroupRingElement& a, const QuotientRep& rep) {
  if (!(a.params() == rep.params))
    throw ParamMismatch("element and representation parameters differ");
  RationalMatrix out(rep.degree, rep.degree);
  for (const auto& [word, coeff] : a.coeffs()) {
    Perm p = rep.image(word);
    for (int i = 0; i < rep.degree; ++i) out.at(p[i], i) += coeff;
  }
  return out;
}

RationalMatrix represent(const GRMatrix& a, const QuotientRep& rep) {
  if (!(a.params() == rep.params))
    throw ParamMismatch("matrix and representation parameters differ");
  const std::size_t n = rep.degree;
  RationalMatrix out(a.rows() * n, a.cols() * n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      RationalMatrix block = represent(a.at(i, j), rep);
      for (std::size_t bi = 0; bi < n; ++bi)
        for (std::size_t bj = 0; bj < n; ++bj)
          out.at(i * n + bi, j * n + bj) = block.at(bi, bj);
    }
  }
  return out;
}

namespace {

RationalMatrix generator_matrix(const QuotientRep& rep, Factor f) {
  return represent(GroupRingElement::monomial(
                       NormalWord::generator_power(rep.params, f, 1)),
                   rep);
}

RationalMatrix scaled(const RationalMatrix& m, const Rational& c) {
  RationalMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) *= c;
  return out;
}

// Generators of the joint fixed space as the kernel of [S - I; T - I].
RationalMatrix joint_fixed_basis(const QuotientRep& rep) {
  RationalMatrix eye = RationalMatrix::identity(rep.degree);
  RationalMatrix s = generator_matrix(rep, Factor::s);
  RationalMatrix t = generator_matrix(rep, Factor::t);
  return nullspace_basis(vstack(s - eye, t - eye));
}

}  // namespace

std::size_t joint_fixed_dim(const QuotientRep& rep) {
  RationalMatrix eye = RationalMatrix::identity(rep.degree);
  RationalMatrix s = generator_matrix(rep, Factor::s);
  RationalMatrix t = generator_matrix(rep, Factor::t);
  return nullspace_dim(vstack(s - eye, t - eye));
}

KernelIdentityReport verify_kernel_identity(const QuotientRep& rep) {
  KernelIdentityReport report;
  report.degree = rep.degree;
  report.laplacian_nullity =
      nullspace_dim(represent(build_laplacian(rep.params), rep));
  report.rank_h = rank(represent(make_h(rep.params), rep));
  report.rank_p = rank(represent(make_p(rep.params), rep));
  report.rank_q = rank(represent(make_q(rep.params), rep));
  report.joint_fixed = joint_fixed_dim(rep);
  report.predicted_nullity =
      static_cast<long>(report.rank_h) - static_cast<long>(report.rank_p) -
      static_cast<long>(report.rank_q) + static_cast<long>(report.joint_fixed);
  report.match = report.predicted_nullity >= 0 &&
                 report.laplacian_nullity ==
                     static_cast<std::size_t>(report.predicted_nullity);
  return report;
}

InjectivityReport verify_injectivity(const QuotientRep& rep) {
  const AmalgamParams& params = rep.params;
  InjectivityReport report;

  GroupRingElement one = GroupRingElement::one(params);
  auto gen = [&](Factor f, long e) {
    return GroupRingElement::monomial(
        NormalWord::generator_power(params, f, e));
  };
  GroupRingElement sum_squares =
      (one - gen(Factor::s, -1)) * (one - gen(Factor::s, 1)) +
      (one - gen(Factor::t, -1)) * (one - gen(Factor::t, 1));
  RationalMatrix sum_mat = represent(sum_squares, rep);
  RationalMatrix kernel = nullspace_basis(sum_mat);
  RationalMatrix fixed = joint_fixed_basis(rep);
  report.sum_squares_kernel = kernel.cols();
  report.joint_fixed = fixed.cols();

  RationalMatrix eye = RationalMatrix::identity(rep.degree);
  RationalMatrix s = generator_matrix(rep, Factor::s);
  RationalMatrix t = generator_matrix(rep, Factor::t);
  // Set equality as two containments: the operator kills the fixed space,
  // and both generators fix the kernel pointwise.
  bool fixed_in_kernel = (sum_mat * fixed).is_zero();
  bool kernel_fixed = ((s - eye) * kernel).is_zero() &&
                      ((t - eye) * kernel).is_zero();
  report.kernel_equals_joint_fixed =
      fixed_in_kernel && kernel_fixed &&
      report.sum_squares_kernel == report.joint_fixed;

  // dim(ker A ∩ im B) = nullity(A B) - nullity(B) for B = 1 - h, whose
  // nullity is rank h.
  GroupRingElement combined = make_f(params) * make_k(params) +
                              make_g(params) * make_l(params);
  RationalMatrix h_mat = represent(make_h(params), rep);
  std::size_t rank_h = rank(h_mat);
  RationalMatrix restricted = represent(combined, rep) * (eye - h_mat);
  report.restricted_kernel = nullspace_dim(restricted) - rank_h;
  report.restricted_kernel_trivial = report.restricted_kernel == 0;
  return report;
}

DecompositionReport verify_decompositions(const QuotientRep& rep) {
  const AmalgamParams& params = rep.params;
  DecompositionReport report;

  const std::size_t n = rep.degree;
  RationalMatrix eye = RationalMatrix::identity(n);
  RationalMatrix p = represent(make_p(params), rep);
  RationalMatrix q = represent(make_q(params), rep);
  RationalMatrix h = represent(make_h(params), rep);
  report.rank_h = rank(h);
  report.rank_p = rank(p);
  report.rank_q = rank(q);
  report.joint_fixed = joint_fixed_dim(rep);

  // Core subspace: a in im h with p a = q a = 0 (membership conditions as
  // one stacked kernel).
  RationalMatrix core = nullspace_basis(vstack(vstack(p, q), eye - h));
  RationalMatrix h1 = vstack(core, scaled(core, -1));

  RationalMatrix pq_span = hstack(p, q);  // generators of im p + im q
  RationalMatrix h2 = vstack(pq_span, scaled(pq_span, -1));
  RationalMatrix h3 = vstack(h, h);

  RationalMatrix zero(n, n);
  RationalMatrix h2_alt = hstack(vstack(p, zero), vstack(zero, q));
  RationalMatrix h3_alt = vstack((eye - p) * h, (eye - q) * h);

  report.dim_h1 = core.cols();  // a -> (a, -a) is injective
  report.dim_h2 = rank(h2);
  report.dim_h3 = rank(h3);
  report.dim_h2_alt = rank(h2_alt);
  report.dim_h3_alt = rank(h3_alt);

  report.orthogonal_h1_h2 = spans_orthogonal(h1, h2);
  report.orthogonal_h1_h3 = spans_orthogonal(h1, h3);
  report.orthogonal_h2_h3 = spans_orthogonal(h2, h3);
  report.orthogonal_h1_h2_alt = spans_orthogonal(h1, h2_alt);
  report.orthogonal_h1_h3_alt = spans_orthogonal(h1, h3_alt);
  report.orthogonal_h2_alt_h3_alt = spans_orthogonal(h2_alt, h3_alt);

  report.additivity =
      2 * report.rank_h == report.dim_h1 + report.dim_h2 + report.dim_h3;
  report.additivity_alt = 2 * report.rank_h == report.dim_h1 +
                                                   report.dim_h2_alt +
                                                   report.dim_h3_alt;

  GRMatrix t_block(params, 2, 2);
  GroupRingElement half_h = make_rational(1, 2) * make_h(params);
  t_block.at(0, 0) = half_h;
  t_block.at(0, 1) = half_h;
  t_block.at(1, 0) = half_h;
  t_block.at(1, 1) = half_h;
  report.rank_projector_t = rank(represent(t_block, rep));
  report.rank_t_equals_rank_h = report.rank_projector_t == report.rank_h;
  report.h2_alt_matches_rank_sum =
      report.dim_h2_alt == report.rank_p + report.rank_q;
  report.h3_ranks_equal = report.dim_h3 == report.dim_h3_alt;
  return report;
}

double spectral_gap_estimate(const QuotientRep& rep) {
  RationalMatrix lap = represent(build_laplacian(rep.params), rep);
  const std::size_t dim = lap.rows();
  const std::size_t nullity = nullspace_dim(lap);
  if (nullity >= dim) return 0.0;

  Eigen::MatrixXd a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = lap.at(i, j).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a,
                                                        Eigen::EigenvaluesOnly);
  // Eigenvalues come back sorted ascending; the first `nullity` of them
  // are exact zeros by the rank computation above.
  return solver.eigenvalues()[static_cast<Eigen::Index>(nullity)];
}

nlohmann::ordered_json to_json(const KernelIdentityReport& r) {
  nlohmann::ordered_json out;
  out["degree"] = r.degree;
  out["laplacian_nullity"] = r.laplacian_nullity;
  out["rank_h"] = r.rank_h;
  out["rank_p"] = r.rank_p;
  out["rank_q"] = r.rank_q;
  out["joint_fixed_dim"] = r.joint_fixed;
  out["predicted_nullity"] = r.predicted_nullity;
  out["pass"] = r.match;
  return out;
}

nlohmann::ordered_json to_json(const InjectivityReport& r) {
  nlohmann::ordered_json out;
  out["sum_squares_kernel_dim"] = r.sum_squares_kernel;
  out["joint_fixed_dim"] = r.joint_fixed;
  out["kernel_equals_joint_fixed"] = r.kernel_equals_joint_fixed;
  out["restricted_kernel_dim"] = r.restricted_kernel;
  out["restricted_kernel_trivial"] = r.restricted_kernel_trivial;
  out["pass"] = r.kernel_equals_joint_fixed && r.restricted_kernel_trivial;
  return out;
}

nlohmann::ordered_json to_json(const DecompositionReport& r) {
  nlohmann::ordered_json out;
  out["rank_h"] = r.rank_h;
  out["rank_p"] = r.rank_p;
  out["rank_q"] = r.rank_q;
  out["joint_fixed_dim"] = r.joint_fixed;
  out["dim_h1"] = r.dim_h1;
  out["dim_h2"] = r.dim_h2;
  out["dim_h3"] = r.dim_h3;
  out["dim_h2_alt"] = r.dim_h2_alt;
  out["dim_h3_alt"] = r.dim_h3_alt;
  out["orthogonal_h1_h2"] = r.orthogonal_h1_h2;
  out["orthogonal_h1_h3"] = r.orthogonal_h1_h3;
  out["orthogonal_h2_h3"] = r.orthogonal_h2_h3;
  out["orthogonal_h1_h2_alt"] = r.orthogonal_h1_h2_alt;
  out["orthogonal_h1_h3_alt"] = r.orthogonal_h1_h3_alt;
  out["orthogonal_h2_alt_h3_alt"] = r.orthogonal_h2_alt_h3_alt;
  out["additivity"] = r.additivity;
  out["additivity_alt"] = r.additivity_alt;
  out["rank_projector_t"] = r.rank_projector_t;
  out["rank_t_equals_rank_h"] = r.rank_t_equals_rank_h;
  out["h2_alt_matches_rank_sum"] = r.h2_alt_matches_rank_sum;
  // Informational: differs from true by exactly joint_fixed_dim at finite
  // dimension, where the projector ranks can disagree.
  out["h3_ranks_equal"] = r.h3_ranks_equal;
  out["pass"] = r.pass();
  return out;
}

}  // namespace amalgam
