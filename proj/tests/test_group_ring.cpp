#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "amalgam/verify.hpp"
#include "oracles.hpp"

using namespace amalgam;

namespace {

GroupRingElement gen(const AmalgamParams& params, Factor f, long e,
                     const Rational& coeff = 1) {
  return GroupRingElement::monomial(NormalWord::generator_power(params, f, e),
                                    coeff);
}

GroupRingElement random_element(const AmalgamParams& params,
                                std::mt19937_64& rng, int max_terms) {
  GroupRingElement out(params);
  long terms = 1 + rng() % max_terms;
  for (long i = 0; i < terms; ++i) {
    NormalWord w(params);
    long len = rng() % 5;
    for (long j = 0; j < len; ++j) {
      Factor f = rng() % 2 ? Factor::s : Factor::t;
      w.append_power(f, 1 + static_cast<long>(rng() % (params.factor_order(f) - 1)));
    }
    long num = static_cast<long>(rng() % 7) - 3;
    out.add_term(w, make_rational(num == 0 ? 2 : num, 1 + rng() % 3));
  }
  return out;
}

}  // namespace

TEST_CASE("monomials multiply like group elements") {
  AmalgamParams params = parse_params(4, 6, 2);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    NormalWord g(params), h(params);
    for (int j = 0; j < 3; ++j) {
      g.append_power(rng() % 2 ? Factor::s : Factor::t, 1 + rng() % 3);
      h.append_power(rng() % 2 ? Factor::s : Factor::t, 1 + rng() % 3);
    }
    CHECK(GroupRingElement::monomial(g) * GroupRingElement::monomial(h) ==
          GroupRingElement::monomial(multiply(g, h)));
  }
}

TEST_CASE("convolution agrees with the dual-formula oracle") {
  for (auto [m, n, d] : {std::array<long, 3>{4, 6, 2},
                         std::array<long, 3>{2, 3, 1}}) {
    AmalgamParams params = parse_params(m, n, d);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
      GroupRingElement a = random_element(params, rng, 4);
      GroupRingElement b = random_element(params, rng, 4);
      CHECK(a * b == oracles::naive_convolution(a, b));
    }
  }
}

TEST_CASE("star is an involutive anti-automorphism") {
  AmalgamParams params = parse_params(4, 6, 2);
  CHECK(star(gen(params, Factor::s, 1)) == gen(params, Factor::s, 3));
  CHECK(star(make_p(params)) == make_p(params));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    GroupRingElement a = random_element(params, rng, 4);
    GroupRingElement b = random_element(params, rng, 4);
    CHECK(star(star(a)) == a);
    CHECK(star(a * b) == star(b) * star(a));
  }
}

TEST_CASE("augmentation sums coefficients and respects products") {
  AmalgamParams params = parse_params(4, 6, 2);
  GroupRingElement one = GroupRingElement::one(params);
  CHECK(augmentation(one - gen(params, Factor::s, 1)) == 0);
  CHECK(augmentation(make_p(params)) == 1);
  CHECK(augmentation(make_q(params)) == 1);
  CHECK(augmentation(make_h(params)) == 1);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 50; ++i) {
    GroupRingElement a = random_element(params, rng, 4);
    GroupRingElement b = random_element(params, rng, 4);
    CHECK(augmentation(a * b) == augmentation(a) * augmentation(b));
  }
}

TEST_CASE("named elements have their closed forms at (4,6,2)") {
  AmalgamParams params = parse_params(4, 6, 2);
  GroupRingElement expected_p(params);
  for (int i = 0; i < 4; ++i)
    expected_p += gen(params, Factor::s, i, make_rational(1, 4));
  CHECK(make_p(params) == expected_p);

  GroupRingElement expected_h = GroupRingElement::one(params);
  expected_h += gen(params, Factor::s, 2);  // s^2 = r
  expected_h *= make_rational(1, 2);
  CHECK(make_h(params) == expected_h);

  GroupRingElement expected_f = GroupRingElement::one(params);
  expected_f += gen(params, Factor::s, 1);
  CHECK(make_f(params) == expected_f);

  GroupRingElement expected_g = GroupRingElement::one(params);
  expected_g += gen(params, Factor::t, 1);
  expected_g += gen(params, Factor::t, 2);
  CHECK(make_g(params) == expected_g);

  // k = -(s + s^2)/2 and l = -(t + t^2 + t^3)/2 solve the 1-h
  // factorizations.
  GroupRingElement expected_k =
      gen(params, Factor::s, 1, make_rational(-1, 2)) +
      gen(params, Factor::s, 2, make_rational(-1, 2));
  CHECK(make_k(params) == expected_k);
  GroupRingElement expected_l =
      gen(params, Factor::t, 1, make_rational(-1, 2)) +
      gen(params, Factor::t, 2, make_rational(-1, 2)) +
      gen(params, Factor::t, 3, make_rational(-1, 2));
  CHECK(make_l(params) == expected_l);

  // k1 = -(3s + 2s^2 + s^3)/4.
  GroupRingElement expected_k1 =
      gen(params, Factor::s, 1, make_rational(-3, 4)) +
      gen(params, Factor::s, 2, make_rational(-2, 4)) +
      gen(params, Factor::s, 3, make_rational(-1, 4));
  CHECK(make_k1(params) == expected_k1);
}

TEST_CASE("degenerate d = 1 sets h = 1 and k = l = 0") {
  AmalgamParams params = parse_params(2, 3, 1);
  CHECK(make_h(params) == GroupRingElement::one(params));
  CHECK(make_k(params).is_zero());
  CHECK(make_l(params).is_zero());
  // m = 2: k1 = -s/2.
  CHECK(make_k1(params) == gen(params, Factor::s, 1, make_rational(-1, 2)));
  // n = 3: l1 = -(2t + t^2)/3.
  CHECK(make_l1(params) == gen(params, Factor::t, 1, make_rational(-2, 3)) +
                               gen(params, Factor::t, 2, make_rational(-1, 3)));
  // f is the full geometric sum when d = 1.
  CHECK(make_f(params) == GroupRingElement::one(params) +
                              gen(params, Factor::s, 1));
}

TEST_CASE("every symbolic identity holds across the small grid") {
  for (const AmalgamParams& params : params_grid(8, 8)) {
    CAPTURE(params.m);
    CAPTURE(params.n);
    CAPTURE(params.d);
    for (const CheckResult& check : symbolic_identity_suite(params)) {
      CAPTURE(check.name);
      CHECK(check.pass);
    }
  }
}

TEST_CASE("mixing parameter triples is rejected") {
  AmalgamParams a = parse_params(4, 6, 2);
  AmalgamParams b = parse_params(2, 3, 1);
  CHECK_THROWS_AS(make_p(a) * make_p(b), ParamMismatch);
  CHECK_THROWS_AS(make_p(a) + make_q(b), ParamMismatch);
  CHECK_THROWS_AS(multiply(NormalWord(a), NormalWord(b)), ParamMismatch);
  CHECK_THROWS_AS(are_conjugate(NormalWord(a), NormalWord(b)), ParamMismatch);
}

TEST_CASE("element JSON rejects malformed documents") {
  AmalgamParams params = parse_params(4, 6, 2);
  CHECK_THROWS_AS(group_ring_from_json(nlohmann::json::object(), params),
                  std::invalid_argument);
  nlohmann::json bad_den = nlohmann::json::array(
      {{{"word", "s"}, {"num", 1}, {"den", 0}}});
  CHECK_THROWS_AS(group_ring_from_json(bad_den, params),
                  std::invalid_argument);
  nlohmann::json bad_word = nlohmann::json::array(
      {{{"word", "x"}, {"num", 1}, {"den", 1}}});
  CHECK_THROWS_AS(group_ring_from_json(bad_word, params), SyntaxError);
}

TEST_CASE("JSON serialization is ordered and round-trips") {
  AmalgamParams params = parse_params(4, 6, 2);
  GroupRingElement a = make_k1(params) + make_h(params);
  nlohmann::ordered_json doc = to_json(a);
  REQUIRE(doc.is_array());
  // deterministic ordering by canonical word text
  std::string previous;
  for (const auto& term : doc) {
    std::string word = term.at("word").get<std::string>();
    CHECK(previous < word);
    previous = word;
    CHECK(term.at("den").get<long>() > 0);
  }
  CHECK(group_ring_from_json(doc, params) == a);
  CHECK(to_json(a).dump() == doc.dump());
}

TEST_CASE("matrix arithmetic over the group ring") {
  AmalgamParams params = parse_params(4, 6, 2);
  GRMatrix eye = GRMatrix::identity(params, 2);
  GRMatrix a(params, 2, 2);
  a.at(0, 0) = make_p(params);
  a.at(0, 1) = gen(params, Factor::s, 1);
  a.at(1, 0) = make_g(params);
  a.at(1, 1) = make_h(params);
  CHECK(a * eye == a);
  CHECK(eye * a == a);
  CHECK(a.star_transpose().star_transpose() == a);
  CHECK((a + a) - a == a);
  GRMatrix b = a * a;
  CHECK(b.at(0, 0) == make_p(params) * make_p(params) +
                          gen(params, Factor::s, 1) * make_g(params));
}
