#include "amalgam/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace amalgam {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const Rational& x : a_)
    if (x != 0) return false;
  return true;
}

namespace {
void require_same_shape(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch");
}
}  // namespace

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b);
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) += b.at(i, j);
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b);
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) -= b.at(i, j);
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix shape mismatch in product");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.at(k, j);
        if (bkj != 0) out.at(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  RationalMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  RationalMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

std::size_t rank(const RationalMatrix& m, PivotPolicy policy) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row (row scaling preserves rank).
  std::vector<Integer> a(rows * cols);
  Integer lcm, den;
  for (std::size_t i = 0; i < rows; ++i) {
    lcm = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              m.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& q = m.at(i, j);
      mpz_divexact(den.get_mpz_t(), lcm.get_mpz_t(),
                   q.get_den().get_mpz_t());
      a[i * cols + j] = q.get_num() * den;
    }
  }

  // Bareiss: after step k every entry is a (k+1)x(k+1) minor of the input,
  // so the division by the previous pivot is exact and growth stays
  // polynomial in the minors.
  Integer prev = 1, tmp = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      const Integer& x = a[i * cols + c];
      if (x == 0) continue;
      if (pivot == rows) {
        pivot = i;
        if (policy == PivotPolicy::first_nonzero) break;
      } else if (mpz_cmpabs(x.get_mpz_t(), a[pivot * cols + c].get_mpz_t()) <
                 0) {
        pivot = i;
      }
    }
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j)
        std::swap(a[pivot * cols + j], a[r * cols + j]);
    }
    const std::size_t prow = r * cols;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::size_t irow = i * cols;
      for (std::size_t j = c + 1; j < cols; ++j) {
        // a[i][j] = (a[i][j] * piv - a[i][c] * a[r][j]) / prev, exactly.
        mpz_mul(tmp.get_mpz_t(), a[irow + j].get_mpz_t(),
                a[prow + c].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), a[irow + c].get_mpz_t(),
                   a[prow + j].get_mpz_t());
        mpz_divexact(a[irow + j].get_mpz_t(), tmp.get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[irow + c] = 0;
    }
    prev = a[prow + c];
    ++r;
  }
  return r;
}

std::size_t nullspace_dim(const RationalMatrix& m, PivotPolicy policy) {
  return m.cols() - rank(m, policy);
}

RationalMatrix nullspace_basis(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  RationalMatrix r = m;

  // Gauss-Jordan to reduced row echelon form.
  std::vector<std::size_t> pivot_col;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && r.at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t j = 0; j < cols; ++j)
      std::swap(r.at(pivot, j), r.at(lead, j));
    Rational inv = 1 / r.at(lead, c);
    for (std::size_t j = c; j < cols; ++j) r.at(lead, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || r.at(i, c) == 0) continue;
      Rational factor = r.at(i, c);
      for (std::size_t j = c; j < cols; ++j)
        r.at(i, j) -= factor * r.at(lead, j);
    }
    pivot_col.push_back(c);
    ++lead;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  RationalMatrix basis(cols, cols - pivot_col.size());
  std::size_t b = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis.at(free, b) = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
      basis.at(pivot_col[k], b) = -r.at(k, free);
    ++b;
  }
  return basis;
}

bool spans_orthogonal(const RationalMatrix& u, const RationalMatrix& v) {
  return (u.transpose() * v).is_zero();
}

}  // namespace amalgam
