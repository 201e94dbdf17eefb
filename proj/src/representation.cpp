#include "casimir/representation.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace casimir {

Matrix Representation::action_of(const Vec& full_coords) const {
  Matrix out(dim, dim);
  for (std::size_t i = 0; i < full_coords.size(); ++i)
    if (!full_coords[i].is_zero()) out += full_coords[i] * action[i];
  return out;
}

Matrix Representation::action_of_matrix(const Matrix& algebra_element) const {
  return action_of(algebra->coordinates_of(algebra_element));
}

namespace {

// Gram matrix of the contravariant form from the construction chain:
// <f w, u> = <w, f^T u>, with <v, v> = 1 on the highest weight vector.
Matrix build_contravariant(const Representation& rep) {
  Matrix s(rep.dim, rep.dim);
  s.at(0, 0) = Rational(1);
  // Transposes of the lowering generators, as action matrices.
  std::map<std::size_t, Matrix> transposed_action;
  for (std::size_t a = 1; a < rep.dim; ++a) {
    auto [parent, gen] = rep.construction[a];
    auto it = transposed_action.find(gen);
    if (it == transposed_action.end()) {
      Matrix t = rep.action_of_matrix(rep.algebra->basis[gen].transpose());
      it = transposed_action.emplace(gen, std::move(t)).first;
    }
    const Matrix& t = it->second;
    for (std::size_t b = 0; b < rep.dim; ++b) {
      Rational val;
      for (std::size_t c = 0; c < rep.dim; ++c) {
        const Rational& tcb = t.at(c, b);
        if (!tcb.is_zero()) val += s.at(static_cast<std::size_t>(parent), c) * tcb;
      }
      s.at(a, b) = val;
    }
  }
  if (s != s.transpose())
    throw std::logic_error("contravariant form: Gram matrix is not symmetric");
  for (std::size_t a = 0; a < rep.dim; ++a)
    for (std::size_t b = 0; b < rep.dim; ++b)
      if (rep.weights[a] != rep.weights[b] && !s.at(a, b).is_zero())
        throw std::logic_error("contravariant form: weight spaces not orthogonal");
  return s;
}

void check_bracket_fidelity(const Representation& rep) {
  const auto& g = *rep.algebra;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Matrix lhs = rep.action_of_matrix(commutator(g.basis[i], g.basis[j]));
      if (lhs != commutator(rep.action[i], rep.action[j]))
        throw std::logic_error("representation: bracket fidelity failed for " + g.labels[i] +
                               ", " + g.labels[j]);
    }
}

}  // namespace

Representation sl2_irrep(std::shared_ptr<const LieAlgebraData> algebra, int m) {
  if (m < 0) throw std::invalid_argument("sl2_irrep: m must be nonnegative");
  if (algebra->kind != AlgebraKind::sl2) throw std::invalid_argument("sl2_irrep: wrong algebra");
  Representation rep;
  rep.algebra = std::move(algebra);
  rep.dim = static_cast<std::size_t>(m) + 1;
  std::size_t ix = rep.algebra->index_of("x");
  std::size_t iy = rep.algebra->index_of("y");
  std::size_t ih = rep.algebra->index_of("h");
  Matrix ax(rep.dim, rep.dim), ay(rep.dim, rep.dim), ah(rep.dim, rep.dim);
  for (int a = 0; a <= m; ++a) {
    ah.at(a, a) = Rational(m - 2 * a);
    if (a + 1 <= m) ay.at(a + 1, a) = Rational(1);
    if (a >= 1) ax.at(a - 1, a) = Rational(static_cast<long>(a) * (m - a + 1));
  }
  rep.action.resize(3);
  rep.action[ix] = std::move(ax);
  rep.action[iy] = std::move(ay);
  rep.action[ih] = std::move(ah);
  for (int a = 0; a <= m; ++a) rep.weights.push_back({Rational(m - 2 * a)});
  rep.highest_weight = {Rational(m)};
  rep.hw_index = 0;
  rep.construction.emplace_back(-1, 0);
  for (int a = 1; a <= m; ++a) rep.construction.emplace_back(a - 1, iy);
  rep.contravariant = build_contravariant(rep);
  return rep;
}

Representation sl2_irrep(int m) {
  return sl2_irrep(std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::sl2, 2)), m);
}

namespace {

// Diagonal action of an algebra basis matrix on the d-th tensor power of
// the defining representation, applied to a dense coordinate vector.
Vec act_tensor_power(const Matrix& m, const Vec& v, int n, int d) {
  Vec out(v.size());
  std::size_t stride = 1;
  for (int s = d - 1; s >= 0; --s) {
    for (std::size_t p = 0; p < v.size(); ++p) {
      if (v[p].is_zero()) continue;
      std::size_t digit = (p / stride) % static_cast<std::size_t>(n);
      std::size_t base = p - digit * stride;
      for (int r = 0; r < n; ++r) {
        const Rational& c = m.at(static_cast<std::size_t>(r), digit);
        if (!c.is_zero()) out[base + static_cast<std::size_t>(r) * stride] += c * v[p];
      }
    }
    stride *= static_cast<std::size_t>(n);
  }
  return out;
}

}  // namespace

Representation irrep_from_tensor_power(std::shared_ptr<const LieAlgebraData> algebra,
                                       const Weight& lambda, int d_max) {
  const LieAlgebraData& g = *algebra;
  int n = g.matrix_size;
  std::size_t r = g.rank();
  if (lambda.size() != r) throw std::invalid_argument("irrep_from_tensor_power: weight rank mismatch");

  // Weights of the defining representation basis (cartan matrices are diagonal).
  std::vector<Weight> def_weights(static_cast<std::size_t>(n), Weight(r));
  for (std::size_t c = 0; c < r; ++c) {
    const Matrix& cm = g.basis[g.cartan_indices[c]];
    for (int p = 0; p < n; ++p) def_weights[static_cast<std::size_t>(p)][c] = cm.at(p, p);
  }

  for (int d = 1; d <= d_max; ++d) {
    std::size_t big = 1;
    for (int i = 0; i < d; ++i) big *= static_cast<std::size_t>(n);

    auto weight_of_index = [&](std::size_t p) {
      Weight w(r);
      std::size_t q = p;
      for (int s = 0; s < d; ++s) {
        std::size_t digit = q % static_cast<std::size_t>(n);
        q /= static_cast<std::size_t>(n);
        w = w + def_weights[digit];
      }
      return w;
    };

    std::vector<std::size_t> lam_space;
    for (std::size_t p = 0; p < big; ++p)
      if (weight_of_index(p) == lambda) lam_space.push_back(p);
    if (lam_space.empty()) continue;

    // Joint kernel of the simple raising operators on the lambda space.
    std::vector<Vec> rows;
    for (std::size_t s : g.simple_roots)
      for (std::size_t raise_idx : g.positive_roots[s].raising) {
        std::vector<Vec> images;
        for (std::size_t col = 0; col < lam_space.size(); ++col) {
          Vec unit(big);
          unit[lam_space[col]] = Rational(1);
          images.push_back(act_tensor_power(g.basis[raise_idx], unit, n, d));
        }
        // Rows indexed by the union of support of the images.
        std::map<std::size_t, std::size_t> row_of;
        for (const auto& im : images)
          for (std::size_t p = 0; p < big; ++p)
            if (!im[p].is_zero() && !row_of.count(p)) {
              row_of[p] = rows.size();
              rows.emplace_back(lam_space.size());
            }
        for (std::size_t col = 0; col < images.size(); ++col)
          for (std::size_t p = 0; p < big; ++p)
            if (!images[col][p].is_zero()) rows[row_of[p]][col] = images[col][p];
      }
    Matrix stacked(rows.size(), lam_space.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < lam_space.size(); ++j) stacked.at(i, j) = rows[i][j];
    auto kern = kernel_basis(stacked);
    if (kern.empty()) continue;

    Vec hw(big);
    for (std::size_t col = 0; col < lam_space.size(); ++col) hw[lam_space[col]] = kern[0][col];

    // Generate the cyclic span under the simple lowering operators,
    // breadth first, keeping raw image vectors as the module basis.
    std::vector<Vec> module_basis{hw};
    std::vector<Weight> module_weights{lambda};
    std::vector<std::pair<std::ptrdiff_t, std::size_t>> construction{{-1, 0}};
    RowSpan span;
    span.insert(hw);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      std::size_t at = queue.front();
      queue.pop_front();
      for (std::size_t s : g.simple_roots) {
        const auto& space = g.positive_roots[s];
        for (std::size_t low_idx : space.lowering) {
          Vec img = act_tensor_power(g.basis[low_idx], module_basis[at], n, d);
          if (is_zero(img)) continue;
          if (!span.insert(img)) continue;
          module_basis.push_back(img);
          module_weights.push_back(module_weights[at] - space.root);
          construction.emplace_back(static_cast<std::ptrdiff_t>(at), low_idx);
          queue.push_back(module_basis.size() - 1);
        }
      }
    }

    Representation rep;
    rep.algebra = algebra;
    rep.dim = module_basis.size();
    rep.weights = std::move(module_weights);
    rep.highest_weight = lambda;
    rep.hw_index = 0;
    rep.construction = std::move(construction);

    LinearSolver coords(Matrix::from_columns(module_basis));
    for (std::size_t b = 0; b < g.dim(); ++b) {
      Matrix a(rep.dim, rep.dim);
      for (std::size_t j = 0; j < rep.dim; ++j) {
        Vec img = act_tensor_power(g.basis[b], module_basis[j], n, d);
        auto sol = coords.solve(img);
        if (!sol) throw std::logic_error("irrep_from_tensor_power: span not closed under action");
        for (std::size_t i = 0; i < rep.dim; ++i) a.at(i, j) = (*sol)[i];
      }
      rep.action.push_back(std::move(a));
    }

    check_bracket_fidelity(rep);
    rep.contravariant = build_contravariant(rep);
    return rep;
  }

  std::ostringstream os;
  os << "irrep_from_tensor_power: weight (";
  for (std::size_t i = 0; i < lambda.size(); ++i) os << (i ? "," : "") << lambda[i].str();
  os << ") unrealizable at this bound (d_max = " << d_max << ")";
  throw std::runtime_error(os.str());
}

std::map<Weight, std::vector<std::size_t>> weight_spaces(const Representation& rep) {
  std::map<Weight, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < rep.dim; ++i) out[rep.weights[i]].push_back(i);
  return out;
}

}  // namespace casimir
