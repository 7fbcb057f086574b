#pragma once

#include <vector>

#include "amalgam/group_ring.hpp"

namespace amalgam {

struct FreeLetter {
  Factor gen;
  int sign;  // +1 or -1
  friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
};

// A freely reduced word in the free group F = <s, t>.
class FreeWord {
 public:
  FreeWord() = default;
  static FreeWord power(Factor gen, long exponent);

  const std::vector<FreeLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  void push(Factor gen, int sign);  // cancels against the trailing letter

  FreeWord inverse() const;
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<FreeLetter> letters_;
};

// Relators of the canonical presentation: s^m, t^n, s^{-m/d} t^{n/d}.
FreeWord relator_s(const AmalgamParams& params);
FreeWord relator_t(const AmalgamParams& params);
FreeWord relator_amalgam(const AmalgamParams& params);

// Free differential calculus, projected into QG. Defined by
//   d(1)/dx = 0,  d(x)/dx = 1,  d(y)/dx = 0 for y != x,
//   d(uv)/dx = d(u)/dx + u d(v)/dx,
// which forces d(x^{-1})/dx = -x^{-1}.
GroupRingElement fox_derivative(const FreeWord& word, Factor gen,
                                const AmalgamParams& params);

// First differentials of the free resolution built from the presentation:
//   delta0 = [1-s  1-t]            (1x2)
//   delta1 = [d(r_j)/d(gen_i)]     (2x3)
// and their transposes d0 (2x1), d1 (3x2) acting on cochains. In the
// third relator's derivatives the invertible central unit s^{-m/d} is
// dropped, which changes nothing about kernels or exactness; the bottom
// row of d1 is then (-f(s), g(t)).
GRMatrix build_delta0(const AmalgamParams& params);
GRMatrix build_d0(const AmalgamParams& params);
GRMatrix build_delta1(const AmalgamParams& params);
GRMatrix build_d1(const AmalgamParams& params);

// Degree-1 Laplacian assembled by matrix arithmetic: d0 d0* + d1* d1.
GRMatrix build_laplacian(const AmalgamParams& params);

// Independent route to the same 2x2 matrix: the closed three-term form
//
//   diag(1-s, 1-t) · J · diag(1-s^{-1}, 1-t^{-1})
//   + diag(m^2 p, n^2 q)
//   + diag(-f(s)*, g(t)*) · J · diag(-f(s), g(t)),     J = [[1,1],[1,1]],
//
// assembled without going through the Fox derivatives. Kept separate so
// the two routes can be compared entrywise.
GRMatrix expanded_laplacian(const AmalgamParams& params);

}  // namespace amalgam
