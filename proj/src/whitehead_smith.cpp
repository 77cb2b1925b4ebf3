#include <algorithm>
#include <sstream>

#include "hck/whitehead.hpp"
#include "whitehead_internal.hpp"

namespace hck::wh {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, const std::vector<long>& data) : IntMatrix(rows, cols) {
  if (data.size() != rows * cols) throw InvalidInput("IntMatrix data has the wrong length");
  for (std::size_t i = 0; i < data.size(); ++i) data_[i] = data[i];
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidInput("IntMatrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst += q * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
}

Integer determinant(IntMatrix m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      swap_rows(m, k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool unimodular(const IntMatrix& m) { return abs(determinant(m)) == 1; }

}  // namespace

Smith smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  Smith s{m, IntMatrix::identity(r), IntMatrix::identity(c), IntMatrix::identity(c), false};
  IntMatrix& d = s.d;
  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (d(i, j) != 0 && (pi == r || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == r) break;
      swap_rows(d, t, pi);
      swap_rows(s.u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(s.v, t, pj);
      swap_rows(s.v_inv, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row(d, i, t, -q);
        add_row(s.u, i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        add_col(d, j, t, -q);
        add_col(s.v, j, t, -q);
        add_row(s.v_inv, t, j, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // The pivot must divide the whole trailing block.
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == r) break;
      add_row(d, t, bad, 1);
      add_row(s.u, t, bad, 1);
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < r; ++j) s.u(t, j) = -s.u(t, j);
    }
  }
  s.verified = s.u * m * s.v == d && d.is_diagonal() && (s.v * s.v_inv) == IntMatrix::identity(c) &&
               unimodular(s.u) && unimodular(s.v);
  return s;
}

std::vector<Integer> smith_diagonal(const Smith& s) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i) out.push_back(s.d(i, i));
  return out;
}

namespace detail {

std::vector<std::vector<Integer>> echelon_rows(std::vector<std::vector<Integer>> rows, std::size_t n) {
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::vector<std::vector<Integer>> out;
  std::size_t top = 0;
  for (std::size_t col = 0; col < n && top < rows.size(); ++col) {
    for (;;) {
      std::size_t piv = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (piv == rows.size() || abs(rows[i][col]) < abs(rows[piv][col]))) piv = i;
      if (piv == rows.size()) break;
      std::swap(rows[top], rows[piv]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[top][col].get_mpz_t());
        for (std::size_t j = col; j < n; ++j) rows[i][j] -= q * rows[top][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) {
        if (rows[top][col] < 0)
          for (auto& x : rows[top]) x = -x;
        out.push_back(rows[top]);
        ++top;
        break;
      }
    }
    // Drop rows that became zero so later columns scan less.
    rows.erase(std::remove_if(rows.begin() + static_cast<std::ptrdiff_t>(top), rows.end(),
                              [](const auto& r) { return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; }); }),
               rows.end());
  }
  return out;
}

}  // namespace detail

}  // namespace hck::wh
