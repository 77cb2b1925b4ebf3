#include "hck/qmatrix.hpp"

#include <sstream>
#include <utility>

#include "hck/common.hpp"

namespace hck {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw InvalidInput("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  auto check_digits = [&](const std::string& part, bool allow_sign) {
    std::size_t i = (allow_sign && !part.empty() && part[0] == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!check_digits(num, true) || !check_digits(den, false))
    throw InvalidInput("malformed rational literal '" + text + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw InvalidInput("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw InvalidInput("matrix data size mismatch");
  for (auto& x : data_) x.canonicalize();
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::column(const std::vector<Rational>& v) { return QMatrix(v.size(), 1, v); }
QMatrix QMatrix::row(const std::vector<Rational>& v) { return QMatrix(1, v.size(), v); }

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidInput("matrix product dimension mismatch");
  QMatrix out(rows_, rhs.cols_);
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (b == 0) continue;
        t = a * b;
        out(i, j) += t;
      }
    }
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix sum dimension mismatch");
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix difference dimension mismatch");
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

QMatrix QMatrix::scaled(const Rational& s) const {
  QMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool QMatrix::operator==(const QMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

QMatrix QMatrix::kron(const QMatrix& rhs) const {
  QMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = (*this)(i, j);
      if (a == 0) continue;
      for (std::size_t k = 0; k < rhs.rows_; ++k)
        for (std::size_t l = 0; l < rhs.cols_; ++l)
          if (rhs(k, l) != 0) out(i * rhs.rows_ + k, j * rhs.cols_ + l) = a * rhs(k, l);
    }
  return out;
}

QMatrix QMatrix::hstack(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw InvalidInput("hstack row mismatch");
  QMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
  }
  return out;
}

QMatrix QMatrix::vstack(const QMatrix& rhs) const {
  if (cols_ != rhs.cols_) throw InvalidInput("vstack column mismatch");
  QMatrix out(rows_ + rhs.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(rhs.data_.begin(), rhs.data_.end(), out.data_.begin() + static_cast<long>(data_.size()));
  return out;
}

QMatrix QMatrix::col(std::size_t c) const { return block(0, c, rows_, 1); }

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  QMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

std::vector<Rational> QMatrix::vec() const {
  std::vector<Rational> v;
  v.reserve(data_.size());
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

QMatrix QMatrix::unvec(const std::vector<Rational>& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw InvalidInput("unvec size mismatch");
  QMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = v[j * rows + i];
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool QMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

QMatrix QMatrix::rref(std::vector<std::size_t>* pivots) const {
  QMatrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  Rational t;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && m(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols_; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < cols_; ++j) {
        if (m(r, j) == 0) continue;
        t = f * m(r, j);
        m(i, j) -= t;
      }
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t QMatrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

std::vector<QMatrix> QMatrix::nullspace() const {
  std::vector<std::size_t> piv;
  QMatrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<QMatrix> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    QMatrix v(cols_, 1);
    v(f, 0) = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v(piv[k], 0) = -r(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QMatrix> QMatrix::solve(const QMatrix& b) const {
  if (b.rows_ != rows_ || b.cols_ != 1) throw InvalidInput("solve: right-hand side shape mismatch");
  std::vector<std::size_t> piv;
  QMatrix r = hstack(b).rref(&piv);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  QMatrix x(cols_, 1);
  for (std::size_t k = 0; k < piv.size(); ++k) x(piv[k], 0) = r(k, cols_);
  return x;
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  std::vector<std::size_t> piv;
  QMatrix r = hstack(identity(rows_)).rref(&piv);
  if (piv.size() < rows_ || (rows_ > 0 && piv[rows_ - 1] != rows_ - 1)) return std::nullopt;
  return r.block(0, cols_, rows_, cols_);
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

std::optional<std::vector<Rational>> coordinates_in(const QMatrix& basis, const QMatrix& v) {
  auto x = basis.solve(v);
  if (!x) return std::nullopt;
  std::vector<Rational> out(basis.cols());
  for (std::size_t i = 0; i < basis.cols(); ++i) out[i] = (*x)(i, 0);
  return out;
}

}  // namespace hck
