#include "tlk/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "tlk/errors.hpp"

namespace tlk {

Matrix Matrix::identity(std::size_t n) { return scalar(n, Scalar(1)); }

Matrix Matrix::scalar(std::size_t n, const Scalar& s) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Row Matrix::row(std::size_t r) const { return Row(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Row Matrix::column(std::size_t c) const {
  Row v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Row& v) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

Matrix Matrix::submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
  Matrix m(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
  return m;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  Matrix m = x;
  for (std::size_t k = 0; k < m.data_.size(); ++k)
    if (!y.data_[k].is_zero()) m.data_[k] += y.data_[k];
  return m;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  Matrix m = x;
  for (std::size_t k = 0; k < m.data_.size(); ++k)
    if (!y.data_[k].is_zero()) m.data_[k] -= y.data_[k];
  return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix m(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i) {
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Scalar& a = x(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        const Scalar& b = y(k, j);
        if (b.is_zero()) continue;
        m(i, j) += a * b;
      }
    }
  }
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& e : m.data_)
    if (!e.is_zero()) e *= s;
  return m;
}

bool operator==(const Matrix& x, const Matrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix Matrix::specialize(const Specialization& s) const {
  Matrix m = *this;
  for (auto& e : m.data_)
    if (!e.is_zero() && !e.is_constant()) e = e.specialize(s);
  return m;
}

std::size_t Matrix::hash() const {
  std::size_t h = rows_ * 1315423911u + cols_;
  for (const auto& e : data_) h ^= e.hash() + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  return h;
}

UPoly Matrix::charpoly() const {
  if (!square()) throw std::invalid_argument("charpoly of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return UPoly::constant(Scalar(1));
  const Matrix& a = *this;
  // Coefficients in decreasing degree.
  std::vector<Scalar> vect = {Scalar(1), -a(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<Scalar> t(r + 2);
    t[0] = Scalar(1);
    t[1] = -a(r, r);
    std::vector<Scalar> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Scalar dot;
      for (std::size_t i = 0; i < r; ++i)
        if (!a(r, i).is_zero() && !col[i].is_zero()) dot += a(r, i) * col[i];
      t[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<Scalar> next(r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            if (!a(i, j).is_zero() && !col[j].is_zero()) next[i] += a(i, j) * col[j];
        col = std::move(next);
      }
    }
    std::vector<Scalar> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        if (!t[i - j].is_zero() && !vect[j].is_zero()) next[i] += t[i - j] * vect[j];
    vect = std::move(next);
  }
  return UPoly(std::vector<Scalar>(vect.rbegin(), vect.rend()));
}

namespace {

// Row index in [from, rows) with the lightest nonzero entry in column c.
long lightest_pivot(const Matrix& m, std::size_t from, std::size_t c) {
  long best = -1;
  std::size_t weight = 0;
  for (std::size_t r = from; r < m.rows(); ++r) {
    const Scalar& e = m(r, c);
    if (e.is_zero()) continue;
    if (best < 0 || e.weight() < weight) {
      best = static_cast<long>(r);
      weight = e.weight();
    }
  }
  return best;
}

void swap_rows(Matrix& m, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(r1, c), m(r2, c));
}

}  // namespace

Scalar Matrix::determinant() const {
  if (!square()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix m = *this;
  Scalar det(1);
  const std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    long p = lightest_pivot(m, c, c);
    if (p < 0) return Scalar();
    if (static_cast<std::size_t>(p) != c) {
      swap_rows(m, c, static_cast<std::size_t>(p));
      det = -det;
    }
    const Scalar pivot = m(c, c);
    det *= pivot;
    const Scalar inv = pivot.inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const Scalar factor = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!m(c, k).is_zero()) m(r, k) -= factor * m(c, k);
    }
  }
  return det;
}

std::vector<int> Matrix::rref() {
  std::vector<int> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    long p = lightest_pivot(*this, lead, c);
    if (p < 0) continue;
    swap_rows(*this, lead, static_cast<std::size_t>(p));
    const Scalar inv = (*this)(lead, c).inverse();
    for (std::size_t k = c; k < cols_; ++k)
      if (!(*this)(lead, k).is_zero()) (*this)(lead, k) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead || (*this)(r, c).is_zero()) continue;
      const Scalar factor = (*this)(r, c);
      for (std::size_t k = c; k < cols_; ++k)
        if (!(*this)(lead, k).is_zero()) (*this)(r, k) -= factor * (*this)(lead, k);
    }
    pivots.push_back(static_cast<int>(c));
    ++lead;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref().size();
}

Row operator*(const Row& v, const Matrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("row/matrix dimension mismatch");
  Row out(m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(k, j).is_zero()) out[j] += v[k] * m(k, j);
  }
  return out;
}

Row operator+(const Row& x, const Row& y) {
  Row out = x;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += y[k];
  return out;
}

Row operator-(const Row& x, const Row& y) {
  Row out = x;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= y[k];
  return out;
}

Row scaled(const Row& v, const Scalar& s) {
  Row out = v;
  for (auto& e : out)
    if (!e.is_zero()) e *= s;
  return out;
}

bool is_zero(const Row& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

Matrix outer(std::size_t k, const Row& f) {
  Matrix m(f.size(), f.size());
  m.set_row(k, f);
  return m;
}

Matrix evaluate(const UPoly& p, const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    if (!p.coeff(k).is_zero())
      for (std::size_t i = 0; i < n; ++i) acc(i, i) += p.coeff(k);
  }
  return acc;
}

}  // namespace tlk
