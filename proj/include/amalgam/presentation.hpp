#pragma once

#include <string>
#include <vector>

#include "amalgam/errors.hpp"

namespace amalgam {

// Generators of the two cyclic factors.
enum class Factor : unsigned char { s = 0, t = 1 };

inline char generator_char(Factor f) { return f == Factor::s ? 's' : 't'; }
inline Factor other_factor(Factor f) {
  return f == Factor::s ? Factor::t : Factor::s;
}

// Parameters (m, n, d) of G = Z_m *_{Z_d} Z_n with presentation
//
//   < s, t | s^m = 1, t^n = 1, r := s^(m/d) = t^(n/d) >.
//
// d must divide both m and n, and d = 1 degenerates to the free product
// Z_m * Z_n (then r = 1). The common power r generates a central copy of
// Z_d, since it commutes with both generators.
struct AmalgamParams {
  int m = 0;
  int n = 0;
  int d = 0;

  // m/d for s, n/d for t: the exponent range of coset representatives.
  int coset_width(Factor f) const { return f == Factor::s ? m / d : n / d; }
  int factor_order(Factor f) const { return f == Factor::s ? m : n; }

  friend bool operator==(const AmalgamParams&, const AmalgamParams&) = default;
};

// Validates (m, n, d). Throws RangeError for m < 2, n < 3, d < 1 or an
// improper amalgamation d = m or d = n; DivisibilityError when d does not
// divide m and n. d = 1 is accepted and yields the free product.
AmalgamParams parse_params(long m, long n, long d);

struct RawLetter {
  Factor generator;
  long exponent;  // never zero
  friend bool operator==(const RawLetter&, const RawLetter&) = default;
};

// A parsed word over the generators; r is already expanded to s^(m/d).
struct RawWord {
  std::vector<RawLetter> letters;
  friend bool operator==(const RawWord&, const RawWord&) = default;
};

// Grammar:
//   word := "1" | term*
//   term := ("s" | "t" | "r") ("^" signed-integer)?
// Terms may be separated by whitespace or a middle dot. The letter r is
// syntactic sugar for s^(m/d); zero-exponent terms are dropped.
// Throws SyntaxError with the byte offset of the first invalid character.
RawWord parse_word(const std::string& text, const AmalgamParams& params);

std::string render(const RawWord& word);

}  // namespace amalgam
