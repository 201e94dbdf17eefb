#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "casimir/matrix.hpp"

namespace casimir {

/// Reduced row echelon form.  Pivoting is deterministic: columns are
/// scanned left to right and the first row with a nonzero entry becomes
/// the pivot, so results are reproducible across runs.
struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the right null space { x : m x = 0 }.  Free-variable
/// convention: each basis vector has a 1 in one free column and 0 in the
/// others.  Deterministic.
std::vector<Vec> kernel_basis(const Matrix& m);

/// ab - ba.  Throws on non-square or mismatched sizes.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Entry (i,j) = form(v_i, v_j).
Matrix gram_matrix(const std::vector<Vec>& vectors,
                   const std::function<Rational(const Vec&, const Vec&)>& form);

Matrix inverse(const Matrix& m);

/// Solver for A x = b with fixed A (typically columns = a basis),
/// prefactored so many right-hand sides are cheap.
class LinearSolver {
 public:
  explicit LinearSolver(const Matrix& a);
  /// Returns x with A x = b, or nullopt if inconsistent.  When A has
  /// full column rank the solution is unique.
  std::optional<Vec> solve(const Vec& b) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::size_t rows_, cols_;
  Matrix elim_;                                        // row-operation matrix E with E*A in RREF
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;  // (row, col) in RREF
};

/// Incrementally maintained row space in reduced echelon form; used for
/// exact rank/closure computations.
class RowSpan {
 public:
  /// Adds v to the span; returns true if the dimension grew.
  bool insert(Vec v);
  bool contains(Vec v) const;
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }

 private:
  std::vector<Vec> rows_;               // reduced rows, pivot normalized to 1
  std::vector<std::size_t> pivot_col_;  // per row
};

/// Characteristic polynomial coefficients c_0..c_n (monic, p(x) = sum c_i x^i),
/// by the Faddeev-LeVerrier recurrence.
std::vector<Rational> charpoly(const Matrix& m);

/// Minimal polynomial of m (monic coefficients c_0..c_d).
std::vector<Rational> minimal_polynomial(const Matrix& m);

/// All rational roots of the polynomial with the given coefficients
/// (c_0..c_d).  Sound: every returned value is a root.  Complete whenever
/// the bound coefficients factor within the trial-division budget; the
/// `complete` flag reports that.
struct RationalRoots {
  std::vector<Rational> roots;
  bool complete;
};
RationalRoots rational_roots(const std::vector<Rational>& coeffs);

/// Positive definiteness via leading principal minors, exact.
bool positive_definite(const Matrix& symmetric);

Rational determinant(const Matrix& m);

}  // namespace casimir
