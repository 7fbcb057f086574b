// Independent reference implementations used only by the tests: an
// integer-matrix model of the two headline groups, a naive convolution,
// bounded-ball brute-force conjugacy, and orbit counting for permutation
// ranks. Nothing here calls the code paths it checks beyond NormalWord
// arithmetic itself.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "amalgam/conjugacy.hpp"
#include "amalgam/quotient.hpp"

namespace oracles {

using amalgam::AmalgamParams;
using amalgam::Factor;
using amalgam::GroupRingElement;
using amalgam::NormalWord;
using amalgam::Rational;
using amalgam::WordOrder;

// ---------------------------------------------------------------------
// Integer 2x2 matrices: s -> [[0,-1],[1,0]], t -> [[0,-1],[1,1]] give a
// faithful model of the (4,6,2) group; the same matrices modulo sign give
// a faithful model of the (2,3,1) group.

struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
              x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline Mat2 mat_inverse(const Mat2& x) {  // determinant 1
  return Mat2{x.d, -x.b, -x.c, x.a};
}

inline Mat2 mat_s() { return Mat2{0, -1, 1, 0}; }
inline Mat2 mat_t() { return Mat2{0, -1, 1, 1}; }

inline Mat2 mat_sign_canonical(const Mat2& x) {
  Mat2 neg{-x.a, -x.b, -x.c, -x.d};
  return x < neg ? x : neg;
}

inline Mat2 mat_power(Mat2 base, long e) {
  if (e < 0) {
    base = mat_inverse(base);
    e = -e;
  }
  Mat2 out;
  for (long i = 0; i < e; ++i) out = out * base;
  return out;
}

// Matrix of a normal-form word (sign-quotiented when projective).
inline Mat2 matrix_of(const NormalWord& w, bool projective) {
  Mat2 out = mat_power(mat_s(), static_cast<long>(w.params().coset_width(
                                    Factor::s)) *
                                    w.central());
  for (const amalgam::Syllable& syl : w.syllables()) {
    out = out * mat_power(syl.factor == Factor::s ? mat_s() : mat_t(),
                          syl.exponent);
  }
  return projective ? mat_sign_canonical(out) : out;
}

// ---------------------------------------------------------------------
// Ball enumeration: all group elements expressible with at most `radius`
// single letters s^{±1}, t^{±1}.

inline std::vector<NormalWord> ball(const AmalgamParams& params, int radius) {
  std::set<NormalWord, WordOrder> seen;
  std::vector<NormalWord> frontier{NormalWord(params)};
  seen.insert(frontier.front());
  std::vector<NormalWord> all = frontier;
  for (int step = 0; step < radius; ++step) {
    std::vector<NormalWord> next;
    for (const NormalWord& w : frontier) {
      for (Factor f : {Factor::s, Factor::t}) {
        for (int sign : {1, -1}) {
          NormalWord u = w;
          u.append_power(f, sign);
          if (seen.insert(u).second) {
            next.push_back(u);
            all.push_back(u);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return all;
}

// Conjugacy by exhausting conjugators from a precomputed ball.
struct BruteConjugacy {
  std::vector<NormalWord> conjugators;

  BruteConjugacy(const AmalgamParams& params, int radius)
      : conjugators(ball(params, radius)) {}

  std::set<NormalWord, WordOrder> orbit(const NormalWord& x) const {
    std::set<NormalWord, WordOrder> out;
    for (const NormalWord& u : conjugators) {
      out.insert(multiply(multiply(u, x), invert(u)));
    }
    return out;
  }

  bool conjugate(const NormalWord& x, const NormalWord& y) const {
    for (const NormalWord& u : conjugators) {
      if (multiply(multiply(u, x), invert(u)) == y) return true;
    }
    return false;
  }
};

// Walks every letter sequence over {s^{±1}, t^{±1}} up to max_letters,
// carrying the normal form and the matrix model side by side, and counts
// violations of "equal matrices <=> equal normal forms". The word count
// visited is (4^(L+1) - 1)/3.
struct SweepResult {
  long words = 0;
  long mismatches = 0;
};

inline SweepResult word_oracle_sweep(const AmalgamParams& params,
                                     bool projective, int max_letters) {
  std::map<Mat2, NormalWord> by_matrix;
  std::map<NormalWord, Mat2, WordOrder> by_word;
  SweepResult result;

  struct Item {
    NormalWord w;
    Mat2 m;
    int depth;
  };
  Mat2 root;
  if (projective) root = mat_sign_canonical(root);
  std::vector<Item> stack{{NormalWord(params), root, 0}};
  while (!stack.empty()) {
    Item item = stack.back();
    stack.pop_back();
    ++result.words;
    auto [it, inserted] = by_matrix.emplace(item.m, item.w);
    if (!inserted && !(it->second == item.w)) ++result.mismatches;
    auto [jt, jnserted] = by_word.emplace(item.w, item.m);
    if (!jnserted && !(jt->second == item.m)) ++result.mismatches;
    if (item.depth == max_letters) continue;
    for (Factor f : {Factor::s, Factor::t}) {
      for (int sign : {1, -1}) {
        NormalWord w = item.w;
        w.append_power(f, sign);
        Mat2 m = item.m * mat_power(f == Factor::s ? mat_s() : mat_t(), sign);
        if (projective) m = mat_sign_canonical(m);
        stack.push_back({w, m, item.depth + 1});
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------
// Convolution by the dual formula c(w) = sum_g a(g) b(g^{-1} w).

inline GroupRingElement naive_convolution(const GroupRingElement& a,
                                          const GroupRingElement& b) {
  std::set<NormalWord, WordOrder> candidates;
  for (const auto& [ga, ca] : a.coeffs())
    for (const auto& [gb, cb] : b.coeffs()) candidates.insert(multiply(ga, gb));
  GroupRingElement out(a.params());
  for (const NormalWord& w : candidates) {
    Rational c = 0;
    for (const auto& [g, coeff] : a.coeffs()) {
      c += coeff * b.coeff(multiply(invert(g), w));
    }
    out.add_term(w, c);
  }
  return out;
}

// ---------------------------------------------------------------------
// Orbit counts: the rank of an averaging projection equals the number of
// orbits of the underlying permutation.

inline int cycle_count(const amalgam::Perm& p) {
  std::vector<bool> seen(p.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return cycles;
}

inline int joint_orbit_count(const amalgam::Perm& a, const amalgam::Perm& b) {
  std::vector<int> parent(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (std::size_t i = 0; i < a.size(); ++i) {
    unite(static_cast<int>(i), a[i]);
    unite(static_cast<int>(i), b[i]);
  }
  int roots = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++roots;
  }
  return roots;
}

}  // namespace oracles
