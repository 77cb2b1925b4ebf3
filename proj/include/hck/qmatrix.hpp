#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hck {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws InvalidInput.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

/// Dense matrix over the rationals. All arithmetic is exact.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

  static QMatrix identity(std::size_t n);
  static QMatrix column(const std::vector<Rational>& v);
  static QMatrix row(const std::vector<Rational>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Rational>& data() const { return data_; }

  QMatrix operator*(const QMatrix& rhs) const;
  QMatrix operator+(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;
  QMatrix scaled(const Rational& s) const;
  bool operator==(const QMatrix& rhs) const;

  QMatrix transpose() const;
  QMatrix kron(const QMatrix& rhs) const;
  QMatrix hstack(const QMatrix& rhs) const;
  QMatrix vstack(const QMatrix& rhs) const;
  QMatrix col(std::size_t c) const;
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Column-major flattening, i.e. vec(X).
  std::vector<Rational> vec() const;
  static QMatrix unvec(const std::vector<Rational>& v, std::size_t rows, std::size_t cols);

  bool is_zero() const;
  bool is_identity() const;

  std::size_t rank() const;
  /// Reduced row echelon form; pivot columns are chosen left to right.
  QMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  /// Basis of the right null space, one column per free variable, ordered by
  /// the free column index. Deterministic.
  std::vector<QMatrix> nullspace() const;
  /// A solution x of (*this) x = b, or nullopt when the system is inconsistent.
  std::optional<QMatrix> solve(const QMatrix& b) const;
  std::optional<QMatrix> inverse() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Coordinates of v in the column span of basis (full column rank), or nullopt.
std::optional<std::vector<Rational>> coordinates_in(const QMatrix& basis, const QMatrix& v);

}  // namespace hck
