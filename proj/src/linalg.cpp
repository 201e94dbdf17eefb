#include "casimir/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace casimir {

namespace {

// In-place forward+backward elimination on `m`; mirrors the same row
// operations onto `companion` when non-null.  First-nonzero pivot rule.
std::vector<std::pair<std::size_t, std::size_t>> eliminate(Matrix& m, Matrix* companion) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != next_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(next_row, j));
      if (companion)
        for (std::size_t j = 0; j < companion->cols(); ++j)
          std::swap(companion->at(pivot, j), companion->at(next_row, j));
    }
    Rational inv = m.at(next_row, col).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(next_row, j) *= inv;
    if (companion)
      for (std::size_t j = 0; j < companion->cols(); ++j) companion->at(next_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == next_row) continue;
      Rational f = m.at(r, col);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) -= f * m.at(next_row, j);
      if (companion)
        for (std::size_t j = 0; j < companion->cols(); ++j)
          companion->at(r, j) -= f * companion->at(next_row, j);
    }
    pivots.emplace_back(next_row, col);
    ++next_row;
  }
  return pivots;
}

}  // namespace

Rref rref(const Matrix& m) {
  Rref out;
  out.reduced = m;
  auto pivots = eliminate(out.reduced, nullptr);
  for (const auto& [r, c] : pivots) out.pivot_cols.push_back(c);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = Rational(1);
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
      v[r.pivot_cols[p]] = -r.reduced.at(p, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw std::invalid_argument("commutator: matrices must be square of equal size");
  return a * b - b * a;
}

Matrix gram_matrix(const std::vector<Vec>& vectors,
                   const std::function<Rational(const Vec&, const Vec&)>& form) {
  for (const auto& v : vectors)
    if (v.size() != vectors[0].size())
      throw std::invalid_argument("gram_matrix: vectors of unequal dimension");
  Matrix g(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) g.at(i, j) = form(vectors[i], vectors[j]);
  return g;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: non-square matrix");
  Matrix work = m;
  Matrix inv = Matrix::identity(m.rows());
  auto pivots = eliminate(work, &inv);
  if (pivots.size() != m.rows()) throw std::domain_error("inverse: singular matrix");
  return inv;
}

LinearSolver::LinearSolver(const Matrix& a) : rows_(a.rows()), cols_(a.cols()) {
  Matrix work = a;
  elim_ = Matrix::identity(rows_);
  pivots_ = eliminate(work, &elim_);
}

std::optional<Vec> LinearSolver::solve(const Vec& b) const {
  if (b.size() != rows_) throw std::invalid_argument("LinearSolver: rhs size mismatch");
  Vec c = elim_ * b;
  std::vector<bool> pivot_row(rows_, false);
  Vec x(cols_);
  for (const auto& [r, col] : pivots_) {
    pivot_row[r] = true;
    x[col] = c[r];
  }
  for (std::size_t r = 0; r < rows_; ++r)
    if (!pivot_row[r] && !c[r].is_zero()) return std::nullopt;
  return x;
}

bool RowSpan::insert(Vec v) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& f = v[pivot_col_[r]];
    if (!f.is_zero()) {
      Rational factor = f;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= factor * rows_[r][j];
    }
  }
  std::size_t lead = 0;
  while (lead < v.size() && v[lead].is_zero()) ++lead;
  if (lead == v.size()) return false;
  Rational inv = v[lead].inverse();
  for (auto& x : v) x *= inv;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational f = rows_[r][lead];
    if (!f.is_zero())
      for (std::size_t j = 0; j < v.size(); ++j) rows_[r][j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivot_col_.push_back(lead);
  return true;
}

bool RowSpan::contains(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& f = v[pivot_col_[r]];
    if (!f.is_zero()) {
      Rational factor = f;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= factor * rows_[r][j];
    }
  }
  return is_zero(v);
}

std::vector<Rational> charpoly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly: non-square matrix");
  std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  Matrix aux = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    aux = m * aux;
    Rational ck = -aux.trace() / Rational(static_cast<long>(k));
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) aux.at(i, i) += ck;
  }
  return c;
}

std::vector<Rational> minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("minimal_polynomial: non-square matrix");
  std::size_t n = m.rows();
  // Stack vectorized powers I, m, m^2, ... until linearly dependent.
  std::vector<Vec> powers;
  Matrix p = Matrix::identity(n);
  RowSpan span;
  while (true) {
    Vec flat(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = p.at(i, j);
    if (!span.insert(flat)) {
      // This power is a combination of the lower ones: solve for it.
      LinearSolver solver(Matrix::from_columns(powers));
      auto sol = solver.solve(flat);
      std::vector<Rational> mc(powers.size() + 1);
      mc[powers.size()] = Rational(1);
      for (std::size_t i = 0; i < powers.size(); ++i) mc[i] = -(*sol)[i];
      return mc;
    }
    powers.push_back(flat);
    p = p * m;
  }
}

namespace {

std::vector<mpz_class> divisors_within_budget(mpz_class n, bool* complete) {
  n = abs(n);
  *complete = true;
  std::vector<std::pair<mpz_class, unsigned>> factors;
  mpz_class d = 2;
  const unsigned long budget = 1000000;
  while (d * d <= n) {
    if (mpz_cmp_ui(d.get_mpz_t(), budget) > 0) break;
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      factors.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 25) > 0 || d * d > n) {
      factors.emplace_back(n, 1);
    } else {
      *complete = false;  // unfactored composite remainder
      factors.emplace_back(n, 1);
    }
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    std::size_t sz = divs.size();
    mpz_class pe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational out;
  for (std::size_t i = c.size(); i-- > 0;) out = out * x + c[i];
  return out;
}

}  // namespace

RationalRoots rational_roots(const std::vector<Rational>& coeffs) {
  RationalRoots out;
  out.complete = true;
  std::vector<Rational> c = coeffs;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.size() <= 1) return out;  // constant: no roots reported
  // Strip x^v: zero is a root.
  std::size_t v = 0;
  while (v < c.size() && c[v].is_zero()) ++v;
  if (v > 0) {
    out.roots.push_back(Rational(0));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(v));
    if (c.size() <= 1) return out;
  }
  // Clear denominators.
  mpz_class lcm = 1;
  for (const auto& x : c) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
    lcm = lcm / g * x.den();
  }
  std::vector<mpz_class> ic;
  for (const auto& x : c) ic.push_back(x.num() * (lcm / x.den()));
  bool c0_complete = true, cd_complete = true;
  auto ps = divisors_within_budget(ic.front(), &c0_complete);
  auto qs = divisors_within_budget(ic.back(), &cd_complete);
  out.complete = c0_complete && cd_complete;
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int sign : {1, -1}) {
        Rational cand(mpq_class(sign * p, q));
        if (eval_poly(c, cand).is_zero()) out.roots.push_back(cand);
      }
  std::sort(out.roots.begin(), out.roots.end());
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
  return out;
}

bool positive_definite(const Matrix& symmetric) {
  if (!symmetric.is_square()) throw std::invalid_argument("positive_definite: non-square");
  for (std::size_t k = 1; k <= symmetric.rows(); ++k) {
    Matrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = symmetric.at(i, j);
    if (determinant(minor).sign() <= 0) return false;
  }
  return true;
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: non-square");
  Matrix work = m;
  Rational det(1);
  std::size_t n = m.rows();
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < n && next_row < n; ++col) {
    std::size_t pivot = next_row;
    while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != next_row) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work.at(pivot, j), work.at(next_row, j));
      det = -det;
    }
    det *= work.at(next_row, col);
    Rational inv = work.at(next_row, col).inverse();
    for (std::size_t r = next_row + 1; r < n; ++r) {
      Rational f = work.at(r, col) * inv;
      if (f.is_zero()) continue;
      for (std::size_t j = col; j < n; ++j) work.at(r, j) -= f * work.at(next_row, j);
    }
    ++next_row;
  }
  return det;
}

}  // namespace casimir
