#include "casimir/lie_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace casimir {

std::string kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::sl2: return "sl2";
    case AlgebraKind::sl: return "sl";
    case AlgebraKind::gl: return "gl";
    case AlgebraKind::so: return "so";
    case AlgebraKind::sp: return "sp";
  }
  return "?";
}

std::pair<AlgebraKind, int> parse_algebra_name(const std::string& name) {
  std::size_t i = 0;
  while (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) ++i;
  std::string kind = name.substr(0, i);
  std::string num = name.substr(i);
  if (num.empty()) throw std::invalid_argument("algebra: missing rank in '" + name + "'");
  int n = std::stoi(num);
  if (kind == "sl" && n == 2) return {AlgebraKind::sl2, 2};
  if (kind == "sl") return {AlgebraKind::sl, n};
  if (kind == "gl") return {AlgebraKind::gl, n};
  if (kind == "so") return {AlgebraKind::so, n};
  if (kind == "sp") return {AlgebraKind::sp, n};
  throw std::invalid_argument("algebra: unknown kind '" + name + "'");
}

std::size_t LieAlgebraData::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw std::invalid_argument("LieAlgebraData: unknown label '" + label + "'");
}

Rational LieAlgebraData::weight_form(const Weight& w1, const Weight& w2) const {
  return dot(w1, cartan_gram_inv * w2);
}

Rational LieAlgebraData::weight_on(const Weight& w, const Vec& cartan_coords) const {
  return dot(w, cartan_coords);
}

Rational LieAlgebraData::coroot_value(const Weight& w, std::size_t pos_root) const {
  return weight_on(w, positive_roots.at(pos_root).coroot);
}

Vec LieAlgebraData::coordinates_of(const Matrix& x) const {
  std::size_t nn = static_cast<std::size_t>(matrix_size) * matrix_size;
  Vec flat(nn);
  for (int i = 0; i < matrix_size; ++i)
    for (int j = 0; j < matrix_size; ++j)
      flat[static_cast<std::size_t>(i) * matrix_size + j] = x.at(i, j);
  auto sol = coord_solver_->solve(flat);
  if (!sol) throw std::invalid_argument("coordinates_of: matrix outside the algebra");
  return *sol;
}

Matrix LieAlgebraData::element_matrix(const Vec& full_coords) const {
  Matrix out(matrix_size, matrix_size);
  for (std::size_t i = 0; i < full_coords.size(); ++i)
    if (!full_coords[i].is_zero()) out += full_coords[i] * basis[i];
  return out;
}

Matrix LieAlgebraData::cartan_matrix_of(const Vec& cartan_coords) const {
  Matrix out(matrix_size, matrix_size);
  for (std::size_t i = 0; i < cartan_coords.size(); ++i)
    if (!cartan_coords[i].is_zero()) out += cartan_coords[i] * basis[cartan_indices[i]];
  return out;
}

namespace {

struct RawBasis {
  std::vector<std::string> labels;
  std::vector<Matrix> mats;
  std::vector<std::size_t> cartan;
  Matrix grading;  // regular diagonal grading element (not necessarily in the algebra)
};

std::string pair_label(const char* head, int i, int j) {
  std::ostringstream os;
  os << head << "(" << i << "," << j << ")";
  return os.str();
}

RawBasis raw_sl2() {
  RawBasis b;
  b.labels = {"x", "y", "h"};
  b.mats = {Matrix::unit(2, 2, 0, 1), Matrix::unit(2, 2, 1, 0),
            Matrix{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}}};
  b.cartan = {2};
  b.grading = Matrix{{Rational(2), Rational(0)}, {Rational(0), Rational(1)}};
  return b;
}

RawBasis raw_gl(int n) {
  RawBasis b;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      b.labels.push_back(pair_label("E", i, j));
      b.mats.push_back(Matrix::unit(n, n, i - 1, j - 1));
      if (i == j) b.cartan.push_back(b.mats.size() - 1);
    }
  b.grading = Matrix(n, n);
  for (int i = 0; i < n; ++i) b.grading.at(i, i) = Rational(n - i);
  return b;
}

RawBasis raw_sl(int n) {
  RawBasis b;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      b.labels.push_back(pair_label("E", i, j));
      b.mats.push_back(Matrix::unit(n, n, i - 1, j - 1));
    }
  for (int i = 1; i < n; ++i) {
    b.labels.push_back("H(" + std::to_string(i) + ")");
    Matrix h(n, n);
    h.at(i - 1, i - 1) = Rational(1);
    h.at(i, i) = Rational(-1);
    b.mats.push_back(h);
    b.cartan.push_back(b.mats.size() - 1);
  }
  b.grading = Matrix(n, n);
  for (int i = 0; i < n; ++i) b.grading.at(i, i) = Rational(n - i);
  return b;
}

std::vector<int> oscp_indices(AlgebraKind kind, int n) {
  int k = n / 2;
  bool odd = (n % 2) == 1;
  if (kind == AlgebraKind::sp && odd)
    throw std::invalid_argument("sp requires even matrix size");
  std::vector<int> idx;
  for (int i = -k; i <= k; ++i) {
    if (i == 0 && !odd) continue;
    idx.push_back(i);
  }
  return idx;
}

int theta_sign(AlgebraKind kind, int i, int j) {
  if (kind == AlgebraKind::so) return 1;
  return ((i > 0) == (j > 0)) ? 1 : -1;
}

Matrix f_matrix(AlgebraKind kind, const std::vector<int>& idx, int i, int j) {
  auto pos = [&](int m) {
    auto it = std::find(idx.begin(), idx.end(), m);
    return static_cast<std::size_t>(it - idx.begin());
  };
  std::size_t n = idx.size();
  Matrix f(n, n);
  f.at(pos(i), pos(j)) += Rational(1);
  f.at(pos(-j), pos(-i)) -= Rational(theta_sign(kind, i, j));
  return f;
}

RawBasis raw_oscp(AlgebraKind kind, int n) {
  auto idx = oscp_indices(kind, n);
  RawBasis b;
  for (int i : idx)
    for (int j : idx) {
      // The pairs (i,j) and (-j,-i) give the same generator up to sign;
      // keep the lexicographically larger representative.
      std::pair<int, int> self{i, j}, mirror{-j, -i};
      if (self < mirror) continue;
      Matrix f = f_matrix(kind, idx, i, j);
      if (f.is_zero()) continue;
      b.labels.push_back(pair_label("F", i, j));
      b.mats.push_back(std::move(f));
      if (i == j && i > 0) b.cartan.push_back(b.mats.size() - 1);
    }
  b.grading = Matrix(idx.size(), idx.size());
  for (std::size_t p = 0; p < idx.size(); ++p) b.grading.at(p, p) = Rational(idx[p]);
  return b;
}

// The bracket [c, x] of a root vector with a Cartan (or grading) element
// is an exact scalar multiple of x; extract that scalar.
Rational ad_eigenvalue(const Matrix& c, const Matrix& x, const std::string& what) {
  Matrix br = c * x - x * c;
  if (br.is_zero()) return Rational(0);
  Rational scale;
  for (std::size_t i = 0; i < x.rows() && scale.is_zero(); ++i)
    for (std::size_t j = 0; j < x.cols() && scale.is_zero(); ++j)
      if (!x.at(i, j).is_zero()) scale = br.at(i, j) / x.at(i, j);
  if (br != scale * x)
    throw std::logic_error("build_algebra: " + what + " is not a simultaneous eigenvector");
  return scale;
}

}  // namespace

LieAlgebraData build_algebra(AlgebraKind kind, int n) {
  RawBasis raw;
  switch (kind) {
    case AlgebraKind::sl2:
      if (n != 2) throw std::invalid_argument("sl2 requires N = 2");
      raw = raw_sl2();
      break;
    case AlgebraKind::sl:
      if (n < 2) throw std::invalid_argument("sl requires N >= 2");
      raw = raw_sl(n);
      break;
    case AlgebraKind::gl:
      if (n < 1) throw std::invalid_argument("gl requires N >= 1");
      raw = raw_gl(n);
      break;
    case AlgebraKind::so:
      if (n < 3) throw std::invalid_argument("so requires N >= 3");
      raw = raw_oscp(kind, n);
      break;
    case AlgebraKind::sp:
      if (n < 2 || n % 2 != 0) throw std::invalid_argument("sp requires even N >= 2");
      raw = raw_oscp(kind, n);
      break;
  }

  LieAlgebraData g;
  g.kind = kind;
  g.matrix_size = n;
  g.labels = std::move(raw.labels);
  g.basis = std::move(raw.mats);
  g.cartan_indices = std::move(raw.cartan);

  // Coordinate solver over the vectorized basis.
  {
    std::vector<Vec> cols;
    for (const auto& m : g.basis) {
      Vec flat(static_cast<std::size_t>(n) * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
      cols.push_back(std::move(flat));
    }
    g.coord_solver_ = std::make_shared<LinearSolver>(Matrix::from_columns(cols));
    if (g.coord_solver_->rank() != g.basis.size())
      throw std::logic_error("build_algebra: basis matrices are dependent");
  }

  std::size_t r = g.cartan_indices.size();

  // Cartan Gram matrix and dual basis u^i.
  g.cartan_gram = Matrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      g.cartan_gram.at(i, j) = g.form(g.basis[g.cartan_indices[i]], g.basis[g.cartan_indices[j]]);
  g.cartan_gram_inv = inverse(g.cartan_gram);
  for (std::size_t i = 0; i < r; ++i) g.cartan_dual.push_back(g.cartan_gram_inv.col(i));

  // Classify root vectors: weight tuple over the cartan basis plus the
  // sign of the grading eigenvalue.
  std::vector<bool> is_cartan(g.dim(), false);
  for (std::size_t c : g.cartan_indices) is_cartan[c] = true;

  struct RootVec {
    std::size_t idx;
    Weight root;
    Rational grading;
  };
  std::vector<RootVec> rootvecs;
  for (std::size_t b = 0; b < g.dim(); ++b) {
    if (is_cartan[b]) continue;
    Weight root(r);
    for (std::size_t c = 0; c < r; ++c)
      root[c] = ad_eigenvalue(g.basis[g.cartan_indices[c]], g.basis[b], g.labels[b]);
    Rational grade = ad_eigenvalue(raw.grading, g.basis[b], g.labels[b]);
    if (grade.is_zero())
      throw std::logic_error("build_algebra: non-Cartan element with zero grading");
    rootvecs.push_back({b, std::move(root), grade});
  }

  // Group by root; positive roots sorted by tuple (descending) for
  // reproducibility.
  std::map<Weight, RootSpace, std::greater<Weight>> pos;
  for (const auto& rv : rootvecs) {
    if (rv.grading.sign() <= 0) continue;
    auto& space = pos[rv.root];
    space.root = rv.root;
    space.grading = rv.grading;
    space.raising.push_back(rv.idx);
  }
  for (auto& [root, space] : pos) {
    Weight neg(r);
    for (std::size_t c = 0; c < r; ++c) neg[c] = -root[c];
    for (const auto& rv : rootvecs)
      if (rv.root == neg) space.lowering.push_back(rv.idx);
    if (space.lowering.size() != space.raising.size())
      throw std::logic_error("build_algebra: mismatched root space dimensions");
    // Dual basis of g_{-alpha} against the chosen basis of g_alpha.
    std::size_t d = space.raising.size();
    Matrix pair_gram(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t bb = 0; bb < d; ++bb)
        pair_gram.at(a, bb) = g.form(g.basis[space.lowering[a]], g.basis[space.raising[bb]]);
    Matrix inv = inverse(pair_gram);
    for (std::size_t j = 0; j < d; ++j) {
      Vec dual(g.dim());
      for (std::size_t m = 0; m < d; ++m) dual[space.lowering[m]] = inv.at(m, j);
      space.lowering_dual.push_back(std::move(dual));
    }
    // t_alpha = nu^{-1}(alpha) in cartan coords, and the coroot.
    space.t_alpha = g.cartan_gram_inv * root;
    Rational norm2 = g.weight_form(root, root);
    space.coroot = (Rational(2) / norm2) * space.t_alpha;
    g.positive_roots.push_back(space);
  }

  // Cross-check the dual normalization: [e^j_alpha, e^j_{-alpha}] = t_alpha.
  for (const auto& space : g.positive_roots) {
    for (std::size_t j = 0; j < space.raising.size(); ++j) {
      Matrix e = g.basis[space.raising[j]];
      Matrix f = g.element_matrix(space.lowering_dual[j]);
      Matrix t = g.cartan_matrix_of(space.t_alpha);
      if (commutator(e, f) != t)
        throw std::logic_error("build_algebra: dual pair bracket mismatch");
    }
  }

  // rho = half sum of positive roots, stored as nu^{-1}(rho).
  g.rho = Vec(r);
  for (const auto& space : g.positive_roots)
    for (std::size_t c = 0; c < r; ++c)
      g.rho[c] += Rational(1, 2) * space.t_alpha[c] * Rational(static_cast<long>(space.raising.size()));

  // Simple roots: positive roots that are not sums of two positive roots.
  for (std::size_t i = 0; i < g.positive_roots.size(); ++i) {
    bool simple = true;
    for (std::size_t a = 0; a < g.positive_roots.size() && simple; ++a)
      for (std::size_t b = 0; b < g.positive_roots.size() && simple; ++b) {
        if (a == i || b == i) continue;
        Weight sum = g.positive_roots[a].root + g.positive_roots[b].root;
        if (sum == g.positive_roots[i].root) simple = false;
      }
    if (simple) g.simple_roots.push_back(i);
  }

  // rho satisfies alpha_i(rho) = (rho, alpha_i) = (alpha_i, alpha_i)/2 on
  // every simple root; enforced here so downstream formulas can rely on it.
  for (std::size_t s : g.simple_roots) {
    const auto& space = g.positive_roots[s];
    if (g.weight_on(space.root, g.rho) != Rational(1, 2) * g.weight_form(space.root, space.root))
      throw std::logic_error("build_algebra: rho normalization failed");
  }

  return g;
}

int FGenerators::theta(int i, int j) const { return theta_sign(kind, i, j); }

const Matrix& FGenerators::f(int i, int j) const {
  auto it = table.find({i, j});
  if (it == table.end()) throw std::invalid_argument("FGenerators: index out of range");
  return it->second;
}

std::size_t FGenerators::pos(int index) const {
  auto it = std::find(indices.begin(), indices.end(), index);
  if (it == indices.end()) throw std::invalid_argument("FGenerators: bad index");
  return static_cast<std::size_t>(it - indices.begin());
}

FGenerators f_generators(AlgebraKind kind, int n) {
  if (kind != AlgebraKind::so && kind != AlgebraKind::sp)
    throw std::invalid_argument("f_generators: orthogonal or symplectic only");
  if (kind == AlgebraKind::so && n < 3) throw std::invalid_argument("so requires N >= 3");
  if (kind == AlgebraKind::sp && (n < 2 || n % 2)) throw std::invalid_argument("sp requires even N >= 2");
  FGenerators g;
  g.kind = kind;
  g.n = n;
  g.indices = oscp_indices(kind, n);
  for (int i : g.indices)
    for (int j : g.indices) g.table.emplace(std::make_pair(i, j), f_matrix(kind, g.indices, i, j));
  return g;
}

BracketCheck check_f_bracket(const FGenerators& g) {
  // The index set is symmetric under negation, so -i and -j stay in range.
  for (int i : g.indices)
    for (int j : g.indices)
      for (int k : g.indices)
        for (int l : g.indices) {
          Matrix lhs = commutator(g.f(i, j), g.f(k, l));
          Matrix rhs(g.indices.size(), g.indices.size());
          if (j == k) rhs += g.f(i, l);
          if (i == l) rhs -= g.f(k, j);
          if (l == -j) rhs += Rational(g.theta(i, j)) * g.f(k, -i);
          if (i == -k) rhs -= Rational(g.theta(i, j)) * g.f(-j, l);
          if (lhs != rhs) return BracketCheck{false, {i, j, k, l}};
        }
  return BracketCheck{};
}

}  // namespace casimir
