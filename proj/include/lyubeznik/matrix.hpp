#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace lyubeznik {

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  using field_type = F;
  using scalar = typename F::scalar;

  explicit Matrix(F field, std::size_t rows = 0, std::size_t cols = 0)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Build from integer rows, e.g. {{1, 1, 1}}; `cols` matters only when rows is empty.
  static Matrix from_ints(const F& field, const std::vector<std::vector<long>>& rows,
                          std::size_t cols = 0) {
    Matrix m(field, rows.size(), rows.empty() ? cols : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols()) throw input_error("ragged matrix rows");
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = field.from_int(rows[r][c]);
    }
    return m;
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k) {
      if (!a.field_.equal(a.data_[k], b.data_[k])) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
      out += '[';
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) out += ' ';
        out += field_.to_string((*this)(r, c));
      }
      out += "]\n";
    }
    return out;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<scalar> data_;
};

template <class F>
Matrix<F> transpose(const Matrix<F>& a) {
  Matrix<F> t(a.field(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  }
  return t;
}

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) {
    throw contract_error("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  const F& f = a.field();
  Matrix<F> out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (f.is_zero(b(k, j))) continue;
        out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
      }
    }
  }
  return out;
}

template <class F>
Matrix<F> scaled(const Matrix<F>& a, const typename F::scalar& s) {
  Matrix<F> out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field().mul(a(r, c), s);
  }
  return out;
}

/// Horizontal concatenation [a | b].
template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw contract_error("hstack row mismatch");
  Matrix<F> out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

template <class F>
Matrix<F> select_columns(const Matrix<F>& a, const std::vector<std::size_t>& cols) {
  Matrix<F> out(a.field(), a.rows(), cols.size());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < cols.size(); ++k) out(r, k) = a(r, cols[k]);
  }
  return out;
}

template <class F>
Matrix<F> select_rows(const Matrix<F>& a, const std::vector<std::size_t>& rows) {
  Matrix<F> out(a.field(), rows.size(), a.cols());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(k, c) = a(rows[k], c);
  }
  return out;
}

template <class F>
struct RowEchelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form; pivots are the first nonzero entries in column order.
template <class F>
RowEchelon<F> rref(Matrix<F> a) {
  const F& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pick = row;
    while (pick < a.rows() && f.is_zero(a(pick, col))) ++pick;
    if (pick == a.rows()) continue;
    if (pick != row) {
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(pick, c), a(row, c));
    }
    const auto inv = f.inv(a(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = f.mul(a(row, c), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || f.is_zero(a(r, col))) continue;
      const auto factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!f.is_zero(a(row, c))) a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

/// Rank by plain Gauss-Jordan elimination in the field.
template <class F>
std::size_t rank_naive(const Matrix<F>& a) {
  return rref(a).pivots.size();
}

namespace detail {

/// Fraction-free (Bareiss) rank of an integer matrix, destroying the input.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>>& m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pick = rank;
    while (pick < rows && sgn(m[pick][col]) == 0) ++pick;
    if (pick == rows) continue;
    std::swap(m[pick], m[rank]);
    const mpz_class& piv = m[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const mpz_class lead = m[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        m[r][c] = (piv * m[r][c] - lead * m[rank][c]);
        mpz_divexact(m[r][c].get_mpz_t(), m[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      m[r][col] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Exact rank. Over the rationals rows are cleared of denominators and reduced
/// fraction-free so intermediate entries stay integral and bounded.
template <class F>
std::size_t rank(const Matrix<F>& a) {
  if constexpr (std::is_same_v<F, RationalField>) {
    std::vector<std::vector<mpz_class>> m(a.rows(), std::vector<mpz_class>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      mpz_class common = 1;
      for (std::size_t c = 0; c < a.cols(); ++c) {
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), a(r, c).get_den_mpz_t());
      }
      for (std::size_t c = 0; c < a.cols(); ++c) {
        m[r][c] = a(r, c).get_num() * (common / a(r, c).get_den());
      }
    }
    return detail::bareiss_rank(m, a.cols());
  } else {
    return rank_naive(a);
  }
}

/// Columns form a basis of ker a, one per free column of the echelon form.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& a) {
  const F& f = a.field();
  const auto [reduced, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Matrix<F> k(f, a.cols(), a.cols() - pivots.size());
  std::size_t out = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    k(free, out) = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], out) = f.neg(reduced(r, free));
    ++out;
  }
  return k;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
  if (a.rows() != a.cols()) throw contract_error("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  const auto [reduced, pivots] = rref(hstack(a, Matrix<F>::identity(a.field(), n)));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw contract_error("inverse of a singular matrix");
  }
  Matrix<F> inv(a.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = reduced(r, n + c);
  }
  return inv;
}

}  // namespace lyubeznik
