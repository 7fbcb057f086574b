#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "amalgam/presentation.hpp"

namespace amalgam {

// One alternating block of the normal form: a nontrivial coset
// representative s^e (1 <= e < m/d) or t^e (1 <= e < n/d).
struct Syllable {
  Factor factor;
  int exponent;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Canonical form of a group element:
//
//   g = r^c · u_1 · u_2 ... u_k,   c in [0, d),
//
// where the u_i are nontrivial coset representatives alternating between
// the s-factor and the t-factor. Because r is central the prefix is well
// defined, and by the normal form theorem for amalgamated products two
// words represent the same element of G iff their NormalWords are
// structurally identical. The identity is (c = 0, no syllables).
class NormalWord {
 public:
  explicit NormalWord(const AmalgamParams& params) : params_(params) {}

  static NormalWord generator_power(const AmalgamParams& params, Factor f,
                                    long exponent);
  // r^exponent
  static NormalWord central_power(const AmalgamParams& params, long exponent);

  const AmalgamParams& params() const { return params_; }
  int central() const { return central_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return central_ == 0 && syllables_.empty(); }

  // Folds one generator power onto the right end, keeping the word
  // canonical: the exponent is reduced mod the factor order, merged with a
  // trailing syllable of the same factor, and any full r-power is split
  // off into the central prefix. Amortized O(1) per letter.
  void append_power(Factor f, long exponent);
  void append_central(long exponent);
  void append(const NormalWord& other);

  friend bool operator==(const NormalWord& a, const NormalWord& b) {
    return a.params_ == b.params_ && a.central_ == b.central_ &&
           a.syllables_ == b.syllables_;
  }

  // Total order used for map keys and deterministic iteration.
  std::strong_ordering order(const NormalWord& other) const;

 private:
  AmalgamParams params_;
  int central_ = 0;
  std::vector<Syllable> syllables_;
};

struct WordOrder {
  bool operator()(const NormalWord& a, const NormalWord& b) const {
    return a.order(b) < 0;
  }
};

NormalWord reduce(const RawWord& word, const AmalgamParams& params);
NormalWord multiply(const NormalWord& a, const NormalWord& b);
NormalWord invert(const NormalWord& a);
NormalWord power(const NormalWord& a, long e);
std::size_t syllable_length(const NormalWord& a);

inline NormalWord operator*(const NormalWord& a, const NormalWord& b) {
  return multiply(a, b);
}

// Canonical text, e.g. "r^2 · s · t^2"; the identity renders as "1".
// parse_word followed by reduce round-trips this exactly.
std::string render(const NormalWord& word);

}  // namespace amalgam
