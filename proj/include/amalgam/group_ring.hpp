#pragma once

#include <cstddef>
#include <map>
#include <string>

#include <json.hpp>

#include "amalgam/normal_form.hpp"
#include "amalgam/rational.hpp"

namespace amalgam {

// An element of the rational group ring QG: a finitely supported map
// NormalWord -> Q. No stored coefficient is zero; iteration order is the
// total order on NormalWord, so equality is structural.
class GroupRingElement {
 public:
  using CoeffMap = std::map<NormalWord, Rational, WordOrder>;

  explicit GroupRingElement(const AmalgamParams& params) : params_(params) {}

  static GroupRingElement zero(const AmalgamParams& params) {
    return GroupRingElement(params);
  }
  static GroupRingElement one(const AmalgamParams& params);
  static GroupRingElement monomial(const NormalWord& word,
                                   const Rational& coeff = 1);

  const AmalgamParams& params() const { return params_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }
  Rational coeff(const NormalWord& word) const;

  // Accumulates coeff onto word, erasing the entry if the sum is zero.
  void add_term(const NormalWord& word, const Rational& coeff);

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  GroupRingElement& operator*=(const Rational& scalar);
  GroupRingElement operator-() const;

  friend GroupRingElement operator+(GroupRingElement a,
                                    const GroupRingElement& b) {
    a += b;
    return a;
  }
  friend GroupRingElement operator-(GroupRingElement a,
                                    const GroupRingElement& b) {
    a -= b;
    return a;
  }
  // Convolution product through NormalWord multiplication.
  friend GroupRingElement operator*(const GroupRingElement& a,
                                    const GroupRingElement& b);
  friend GroupRingElement operator*(const Rational& scalar,
                                    GroupRingElement a) {
    a *= scalar;
    return a;
  }
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

 private:
  AmalgamParams params_;
  CoeffMap coeffs_;
};

// The adjoint: coefficient at g of star(a) equals the coefficient of a at
// g^{-1}. An involutive ring anti-automorphism (coefficients rational).
GroupRingElement star(const GroupRingElement& a);

// Sum of all coefficients; a ring homomorphism QG -> Q.
Rational augmentation(const GroupRingElement& a);

// Averaging projections over the three finite cyclic subgroups:
//   p = (1 + s + ... + s^{m-1}) / m
//   q = (1 + t + ... + t^{n-1}) / n
//   h = (1 + r + ... + r^{d-1}) / d
GroupRingElement make_p(const AmalgamParams& params);
GroupRingElement make_q(const AmalgamParams& params);
GroupRingElement make_h(const AmalgamParams& params);

// Truncated geometric sums f(s) = 1 + s + ... + s^{m/d - 1} and
// g(t) = 1 + t + ... + t^{n/d - 1}; they satisfy p = (d/m) h f(s),
// q = (d/n) h g(t) and f(s)(1-s) = g(t)(1-t) = 1 - r.
GroupRingElement make_f(const AmalgamParams& params);
GroupRingElement make_g(const AmalgamParams& params);

// Solutions of the factorizations
//   1 - h = k (1 - s^{-1}) = (1 - s^{-1}) k,
//   1 - h = l (1 - t^{-1}) = (1 - t^{-1}) l,
//   1 - p = k1 (1 - s^{-1}) = (1 - s^{-1}) k1,
//   1 - q = l1 (1 - t^{-1}) = (1 - t^{-1}) l1,
// built from the telescoping identity
//   1 - x^j = (1 - x^{-1}) · ( -(x + x^2 + ... + x^j) ).
// Only the factorization identity matters downstream, so each constructor
// re-checks it symbolically and throws std::logic_error on failure.
// For d = 1 both k and l are 0 (h = 1).
GroupRingElement make_k(const AmalgamParams& params);
GroupRingElement make_l(const AmalgamParams& params);
GroupRingElement make_k1(const AmalgamParams& params);
GroupRingElement make_l1(const AmalgamParams& params);

// Human-readable sum ordered by canonical word text, e.g. "1 - 1/2 s".
std::string render(const GroupRingElement& a);

// JSON: array of {word, num, den} ordered by canonical word text; den > 0.
nlohmann::ordered_json to_json(const GroupRingElement& a);
GroupRingElement group_ring_from_json(const nlohmann::json& doc,
                                      const AmalgamParams& params);

// A rectangular matrix over QG; all entries share one parameter triple.
class GRMatrix {
 public:
  GRMatrix(const AmalgamParams& params, std::size_t rows, std::size_t cols);
  static GRMatrix identity(const AmalgamParams& params, std::size_t n);

  const AmalgamParams& params() const { return params_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GroupRingElement& at(std::size_t i, std::size_t j);
  const GroupRingElement& at(std::size_t i, std::size_t j) const;

  GRMatrix transpose() const;

  // Entrywise star of the transpose: the adjoint.
  GRMatrix star_transpose() const;

  friend GRMatrix operator+(const GRMatrix& a, const GRMatrix& b);
  friend GRMatrix operator-(const GRMatrix& a, const GRMatrix& b);
  friend GRMatrix operator*(const GRMatrix& a, const GRMatrix& b);
  friend bool operator==(const GRMatrix& a, const GRMatrix& b);

 private:
  AmalgamParams params_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GroupRingElement> entries_;  // row-major
};

}  // namespace amalgam
