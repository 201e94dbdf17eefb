#include "casimir/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace casimir {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    for (const auto& x : r) e_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t i,
                    std::size_t j, const Rational& value) {
  Matrix m(rows, cols);
  m.at(i, j) = value;
  return m;
}

Matrix Matrix::column(const Vec& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return Matrix(0, 0);
  Matrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw std::invalid_argument("from_columns: ragged input");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Rational Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Rational Matrix::max_abs_entry() const {
  Rational m;
  for (const auto& x : e_) {
    Rational a = x.abs();
    if (a > m) m = a;
  }
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix +: dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix -: dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : e_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix *: dimension mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
      }
    }
  return m;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("Matrix * Vec: dimension mismatch");
  Vec out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const Rational& x = a.at(i, j);
      if (!x.is_zero() && !v[j].is_zero()) out[i] += x * v[j];
    }
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec +: size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec -: size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator*(const Rational& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace casimir
