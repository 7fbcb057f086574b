#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"

using namespace amalgam;

namespace {

NormalWord from_text(const std::string& text, const AmalgamParams& params) {
  return reduce(parse_word(text, params), params);
}

NormalWord random_word(const AmalgamParams& params, std::mt19937_64& rng,
                       int max_letters) {
  NormalWord w(params);
  long len = rng() % (max_letters + 1);
  for (long j = 0; j < len; ++j) {
    Factor f = rng() % 2 ? Factor::s : Factor::t;
    w.append_power(f, 1 + static_cast<long>(rng() % (params.factor_order(f) - 1)));
  }
  return w;
}

}  // namespace

TEST_CASE("defining relations collapse to the identity") {
  AmalgamParams params = parse_params(4, 6, 2);
  CHECK(from_text("s^4", params).is_identity());
  CHECK(from_text("t^6", params).is_identity());
  CHECK(from_text("s^2 t^-3", params).is_identity());
  CHECK(from_text("r^2", params).is_identity());
  CHECK(from_text("s^2", params) == from_text("t^3", params));
  CHECK(from_text("s^2", params) == from_text("r", params));
}

TEST_CASE("frozen normal form of t s t s") {
  AmalgamParams params = parse_params(4, 6, 2);
  NormalWord w = from_text("t s t s", params);
  CHECK(w.central() == 0);
  REQUIRE(w.syllables().size() == 4);
  CHECK(w.syllables()[0] == Syllable{Factor::t, 1});
  CHECK(w.syllables()[1] == Syllable{Factor::s, 1});
  CHECK(w.syllables()[2] == Syllable{Factor::t, 1});
  CHECK(w.syllables()[3] == Syllable{Factor::s, 1});
  CHECK(render(w) == "t · s · t · s");
  // Cross-check against the integer matrix model: (TS)^2 = [[1,0],[-2,1]].
  CHECK(oracles::matrix_of(w, false) == oracles::Mat2{1, 0, -2, 1});
}

TEST_CASE("identity, inverse and order laws") {
  for (auto [m, n, d] : {std::array<long, 3>{4, 6, 2},
                         std::array<long, 3>{2, 3, 1},
                         std::array<long, 3>{9, 12, 3}}) {
    AmalgamParams params = parse_params(m, n, d);
    NormalWord one(params);
    NormalWord s = NormalWord::generator_power(params, Factor::s, 1);
    NormalWord t = NormalWord::generator_power(params, Factor::t, 1);
    NormalWord r = NormalWord::central_power(params, 1);

    CHECK(multiply(one, s) == s);
    CHECK(multiply(s, one) == s);
    CHECK(multiply(s, NormalWord::generator_power(params, Factor::s, m - 1))
              .is_identity());
    CHECK(invert(one) == one);
    CHECK(invert(s) == NormalWord::generator_power(params, Factor::s, m - 1));

    // exact orders of s, t, r
    auto order_of = [&](const NormalWord& g) {
      NormalWord acc(params);
      for (int k = 1; k <= 2 * params.m * params.n; ++k) {
        acc = multiply(acc, g);
        if (acc.is_identity()) return k;
      }
      return -1;
    };
    CHECK(order_of(s) == params.m);
    CHECK(order_of(t) == params.n);
    CHECK(order_of(r) == params.d);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
      NormalWord a = random_word(params, rng, 6);
      NormalWord b = random_word(params, rng, 6);
      NormalWord c = random_word(params, rng, 6);
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
      CHECK(multiply(a, invert(a)).is_identity());
      CHECK(multiply(invert(a), a).is_identity());
      CHECK(multiply(r, a) == multiply(a, r));  // r is central
    }
  }
}

TEST_CASE("syllable_length counts alternating blocks") {
  AmalgamParams params = parse_params(4, 6, 2);
  CHECK(syllable_length(NormalWord(params)) == 0);
  CHECK(syllable_length(from_text("r", params)) == 0);
  CHECK(syllable_length(from_text("s t", params)) == 2);
  CHECK(syllable_length(from_text("s t^4 s", params)) == 3);
  CHECK(syllable_length(from_text("s s", params)) == 0);  // s^2 = r
}

TEST_CASE("normal forms agree with the SL(2,Z) matrix model, 6 letters") {
  oracles::SweepResult sweep =
      oracles::word_oracle_sweep(parse_params(4, 6, 2), false, 6);
  CHECK(sweep.words == ((1L << 14) - 1) / 3);
  CHECK(sweep.mismatches == 0);
}

TEST_CASE("normal forms agree with the sign-quotiented model, 6 letters") {
  oracles::SweepResult sweep =
      oracles::word_oracle_sweep(parse_params(2, 3, 1), true, 6);
  CHECK(sweep.mismatches == 0);
}

TEST_CASE("degenerate d = 1 has trivial r") {
  AmalgamParams params = parse_params(2, 3, 1);
  CHECK(from_text("r", params).is_identity());
  NormalWord w = from_text("s t s t^2", params);
  CHECK(w.central() == 0);
  CHECK(syllable_length(w) == 4);
}
