#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "amalgam/fox.hpp"
#include "amalgam/verify.hpp"

using namespace amalgam;

namespace {

GroupRingElement gen(const AmalgamParams& params, Factor f, long e,
                     const Rational& coeff = 1) {
  return GroupRingElement::monomial(NormalWord::generator_power(params, f, e),
                                    coeff);
}

GroupRingElement geometric(const AmalgamParams& params, Factor f, int count) {
  GroupRingElement out(params);
  for (int i = 0; i < count; ++i) out += gen(params, f, i);
  return out;
}

FreeWord random_free_word(std::mt19937_64& rng, int max_letters) {
  FreeWord w;
  long len = rng() % (max_letters + 1);
  for (long i = 0; i < len; ++i) {
    w.push(rng() % 2 ? Factor::s : Factor::t, rng() % 2 ? 1 : -1);
  }
  return w;
}

NormalWord project(const FreeWord& w, const AmalgamParams& params) {
  NormalWord out(params);
  for (const FreeLetter& letter : w.letters())
    out.append_power(letter.gen, letter.sign);
  return out;
}

}  // namespace

TEST_CASE("free words reduce freely") {
  FreeWord w = FreeWord::power(Factor::s, 2) * FreeWord::power(Factor::s, -2);
  CHECK(w.empty());
  FreeWord u = FreeWord::power(Factor::s, 1) * FreeWord::power(Factor::t, -1);
  CHECK(u.letters().size() == 2);
  CHECK((u * u.inverse()).empty());
}

TEST_CASE("derivatives of the relators") {
  for (auto [m, n, d] : {std::array<long, 3>{4, 6, 2},
                         std::array<long, 3>{2, 3, 1},
                         std::array<long, 3>{9, 12, 3}}) {
    AmalgamParams params = parse_params(m, n, d);
    CHECK(fox_derivative(relator_s(params), Factor::s, params) ==
          geometric(params, Factor::s, params.m));
    CHECK(fox_derivative(relator_s(params), Factor::t, params).is_zero());
    CHECK(fox_derivative(FreeWord(), Factor::s, params).is_zero());
    CHECK(fox_derivative(relator_t(params), Factor::t, params) ==
          geometric(params, Factor::t, params.n));

    // d(s^{-m/d} t^{n/d})/dt = s^{-m/d} g(t); the s-derivative carries the
    // product-rule sign: -s^{-m/d} f(s).
    GroupRingElement unit_inverse =
        gen(params, Factor::s, -params.coset_width(Factor::s));
    CHECK(fox_derivative(relator_amalgam(params), Factor::t, params) ==
          unit_inverse * make_g(params));
    CHECK(fox_derivative(relator_amalgam(params), Factor::s, params) ==
          -(unit_inverse * make_f(params)));

    CHECK(fox_derivative(FreeWord::power(Factor::s, -1), Factor::s, params) ==
          -gen(params, Factor::s, -1));
  }
}

TEST_CASE("product rule and fundamental identity on random words") {
  AmalgamParams params = parse_params(4, 6, 2);
  GroupRingElement one = GroupRingElement::one(params);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    FreeWord u = random_free_word(rng, 8);
    FreeWord v = random_free_word(rng, 8);
    GroupRingElement u_image = GroupRingElement::monomial(project(u, params));
    for (Factor x : {Factor::s, Factor::t}) {
      CHECK(fox_derivative(u * v, x, params) ==
            fox_derivative(u, x, params) +
                u_image * fox_derivative(v, x, params));
    }
    CHECK(fox_derivative(u, Factor::s, params) *
                  (gen(params, Factor::s, 1) - one) +
              fox_derivative(u, Factor::t, params) *
                  (gen(params, Factor::t, 1) - one) ==
          u_image - one);
  }
}

TEST_CASE("differentials match their displayed entries at (4,6,2)") {
  AmalgamParams params = parse_params(4, 6, 2);
  GroupRingElement one = GroupRingElement::one(params);

  GRMatrix delta0 = build_delta0(params);
  REQUIRE(delta0.rows() == 1);
  REQUIRE(delta0.cols() == 2);
  CHECK(delta0.at(0, 0) == one - gen(params, Factor::s, 1));
  CHECK(delta0.at(0, 1) == one - gen(params, Factor::t, 1));
  CHECK(build_d0(params) == delta0.transpose());

  GRMatrix d1 = build_d1(params);
  REQUIRE(d1.rows() == 3);
  REQUIRE(d1.cols() == 2);
  CHECK(d1.at(0, 0) == geometric(params, Factor::s, 4));
  CHECK(d1.at(0, 1).is_zero());
  CHECK(d1.at(1, 0).is_zero());
  CHECK(d1.at(1, 1) == geometric(params, Factor::t, 6));
  CHECK(d1.at(2, 0) == -(one + gen(params, Factor::s, 1)));
  CHECK(d1.at(2, 1) == one + gen(params, Factor::t, 1) +
                           gen(params, Factor::t, 2));
  CHECK(build_delta1(params) == d1.transpose());
}

TEST_CASE("the two Laplacian routes agree and are self-adjoint") {
  for (const AmalgamParams& params : params_grid(8, 8)) {
    CAPTURE(params.m);
    CAPTURE(params.n);
    CAPTURE(params.d);
    GRMatrix lap = build_laplacian(params);
    CHECK(lap == lap.star_transpose());
    CHECK(lap == expanded_laplacian(params));
  }
}

TEST_CASE("d = 1 Laplacian matches an independent hand assembly") {
  AmalgamParams params = parse_params(2, 3, 1);
  GroupRingElement one = GroupRingElement::one(params);
  GroupRingElement s = gen(params, Factor::s, 1);
  GroupRingElement t = gen(params, Factor::t, 1);
  GroupRingElement s_inv = gen(params, Factor::s, -1);
  GroupRingElement t_inv = gen(params, Factor::t, -1);
  // With d = 1 the widths equal the factor orders, so f and g are the full
  // geometric sums; write everything out by hand.
  GroupRingElement f = one + s;
  GroupRingElement g = one + t + t * t;

  GRMatrix expected(params, 2, 2);
  expected.at(0, 0) =
      (one - s) * (one - s_inv) + Rational(4) * make_p(params) + star(f) * f;
  expected.at(0, 1) = (one - s) * (one - t_inv) - star(f) * g;
  expected.at(1, 0) = (one - t) * (one - s_inv) - star(g) * f;
  expected.at(1, 1) =
      (one - t) * (one - t_inv) + Rational(9) * make_q(params) + star(g) * g;

  CHECK(build_laplacian(params) == expected);
}
