#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace stacky::corr {

using Rational = mpq_class;

/// Dense row-major matrix over Q.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QMatrix operator*(const QMatrix& rhs) const;
  QMatrix transpose() const;
  QMatrix scaled(const Rational& s) const;
  bool is_zero() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  QMatrix reduced;                  // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Row reduction by fraction-free (Bareiss) elimination on the row-wise
/// integer scaling of `m`, normalised to reduced echelon form at the end.
Echelon row_echelon(const QMatrix& m);
std::size_t rank(const QMatrix& m);

}  // namespace stacky::corr
