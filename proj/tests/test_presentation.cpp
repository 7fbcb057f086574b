#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "amalgam/normal_form.hpp"

using namespace amalgam;

TEST_CASE("parse_params accepts the documented triples") {
  AmalgamParams sl2 = parse_params(4, 6, 2);
  CHECK(sl2.m == 4);
  CHECK(sl2.coset_width(Factor::s) == 2);
  CHECK(sl2.coset_width(Factor::t) == 3);

  AmalgamParams psl2 = parse_params(2, 3, 1);
  CHECK(psl2.d == 1);
  CHECK(psl2.coset_width(Factor::s) == 2);

  CHECK_NOTHROW(parse_params(12, 12, 6));
  CHECK_NOTHROW(parse_params(6, 9, 3));
}

TEST_CASE("parse_params rejects exactly the bad triples") {
  CHECK_THROWS_AS(parse_params(4, 6, 3), DivisibilityError);
  CHECK_THROWS_AS(parse_params(6, 4, 4), DivisibilityError);
  CHECK_THROWS_AS(parse_params(1, 6, 1), RangeError);
  CHECK_THROWS_AS(parse_params(4, 2, 1), RangeError);
  CHECK_THROWS_AS(parse_params(4, 6, 0), RangeError);
  CHECK_THROWS_AS(parse_params(4, 6, -2), RangeError);
  CHECK_THROWS_AS(parse_params(4, 8, 4), RangeError);   // d = m
  CHECK_THROWS_AS(parse_params(6, 3, 3), RangeError);   // d = n
  CHECK_THROWS_AS(parse_params(12, 24, 12), RangeError);
}

TEST_CASE("parse_word tokenizes and expands r") {
  AmalgamParams params = parse_params(4, 6, 2);

  RawWord w = parse_word("s^2 t^-3", params);
  REQUIRE(w.letters.size() == 2);
  CHECK(w.letters[0] == RawLetter{Factor::s, 2});
  CHECK(w.letters[1] == RawLetter{Factor::t, -3});

  RawWord r = parse_word("r", params);
  REQUIRE(r.letters.size() == 1);
  CHECK(r.letters[0] == RawLetter{Factor::s, 2});

  RawWord r2 = parse_word("r^-2", params);
  REQUIRE(r2.letters.size() == 1);
  CHECK(r2.letters[0] == RawLetter{Factor::s, -4});

  CHECK(parse_word("s^0 t", params).letters ==
        std::vector<RawLetter>{{Factor::t, 1}});
  CHECK(parse_word("", params).letters.empty());
  CHECK(parse_word("1", params).letters.empty());
  CHECK(parse_word("  s · t^2 ", params).letters.size() == 2);
  CHECK(parse_word("s^+3", params).letters ==
        std::vector<RawLetter>{{Factor::s, 3}});
}

TEST_CASE("parse_word reports the offending byte offset") {
  AmalgamParams params = parse_params(4, 6, 2);
  auto offset_of = [&](const std::string& text) {
    try {
      parse_word(text, params);
    } catch (const SyntaxError& e) {
      return e.offset();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("x") == 0);
  CHECK(offset_of("s^") == 2);
  CHECK(offset_of("s^x") == 2);
  CHECK(offset_of("s t ^2") == 4);
  CHECK(offset_of("s^- t") == 3);
  CHECK(offset_of("st,") == 2);
}

TEST_CASE("canonical text round-trips through the parser") {
  for (auto [m, n, d] : {std::array<long, 3>{4, 6, 2},
                         std::array<long, 3>{2, 3, 1},
                         std::array<long, 3>{8, 12, 4}}) {
    AmalgamParams params = parse_params(m, n, d);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      NormalWord w(params);
      long len = rng() % 7;
      for (long j = 0; j < len; ++j) {
        Factor f = rng() % 2 ? Factor::s : Factor::t;
        w.append_power(f, 1 + static_cast<long>(
                                  rng() % (params.factor_order(f) - 1)));
      }
      CAPTURE(render(w));
      CHECK(reduce(parse_word(render(w), params), params) == w);
    }
  }
}

TEST_CASE("raw words render back to their input") {
  AmalgamParams params = parse_params(4, 6, 2);
  CHECK(render(parse_word("s^2 t^-3", params)) == "s^2 t^-3");
  CHECK(render(parse_word("", params)) == "1");
  CHECK(render(parse_word("s t^2 s^-1", params)) == "s t^2 s^-1");
}
