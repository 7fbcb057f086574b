#pragma once

#include <cstddef>
#include <vector>

#include "amalgam/rational.hpp"

namespace amalgam {

// Dense matrix over Q; exact arithmetic only.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  RationalMatrix transpose() const;
  bool is_zero() const;

  friend RationalMatrix operator+(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);

// Pivot selection for the fraction-free elimination. Either policy gives
// the same rank; having two makes pivoting-independence testable.
enum class PivotPolicy { first_nonzero, min_magnitude };

// Exact rank over Q via Bareiss (fraction-free) elimination on the
// denominator-cleared integer matrix. Every division is exact.
std::size_t rank(const RationalMatrix& m,
                 PivotPolicy policy = PivotPolicy::first_nonzero);

std::size_t nullspace_dim(const RationalMatrix& m,
                          PivotPolicy policy = PivotPolicy::first_nonzero);

// Columns form a basis of { x : m x = 0 } (cols x nullity); computed by
// rational Gauss-Jordan reduction.
RationalMatrix nullspace_basis(const RationalMatrix& m);

// Dimension of the span of the columns.
inline std::size_t dim_span(const RationalMatrix& generators) {
  return rank(generators);
}

// True iff every column of u is orthogonal to every column of v under the
// standard bilinear form: u^T v = 0.
bool spans_orthogonal(const RationalMatrix& u, const RationalMatrix& v);

}  // namespace amalgam
