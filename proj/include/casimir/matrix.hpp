#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "casimir/rational.hpp"

namespace casimir {

using Vec = std::vector<Rational>;

/// Dense row-major matrix over exact rationals.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  /// Matrix with a single nonzero entry.
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i,
                     std::size_t j, const Rational& value = Rational(1));
  /// Column vector from a Vec.
  static Matrix column(const Vec& v);
  /// Matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Rational max_abs_entry() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);
Rational dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

}  // namespace casimir
