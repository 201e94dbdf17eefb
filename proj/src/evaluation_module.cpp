#include "casimir/evaluation_module.hpp"

#include <sstream>
#include <stdexcept>

namespace casimir {

Vec WeightSpace::coords_of(const ModuleVector& v) const {
  Vec out(tuples.size());
  for (const auto& [idx, c] : v.terms()) {
    auto it = pos.find(idx);
    if (it == pos.end())
      throw std::invalid_argument("WeightSpace: vector not supported on this weight space");
    out[it->second] = c;
  }
  return out;
}

ModuleVector WeightSpace::vector_of(const Vec& coords) const {
  if (coords.size() != tuples.size())
    throw std::invalid_argument("WeightSpace: coordinate size mismatch");
  ModuleVector v;
  for (std::size_t i = 0; i < coords.size(); ++i) v.add(tuples[i], coords[i]);
  return v;
}

EvaluationModule::EvaluationModule(std::shared_ptr<const LieAlgebraData> algebra,
                                   std::vector<Representation> factors, EvaluationPoints points)
    : algebra_(std::move(algebra)),
      factors_(std::move(factors)),
      idempotents_(lagrange_idempotents(points)) {
  if (factors_.empty()) throw std::invalid_argument("EvaluationModule: no factors");
  if (factors_.size() != points.size())
    throw std::invalid_argument("EvaluationModule: factor count differs from point count");
  for (const auto& f : factors_)
    if (f.algebra->name() != algebra_->name())
      throw std::invalid_argument("EvaluationModule: factor algebra mismatch");

  dim_ = 1;
  strides_.assign(factors_.size(), 1);
  for (std::size_t s = factors_.size(); s-- > 0;) {
    strides_[s] = dim_;
    dim_ *= factors_[s].dim;
  }

  const LieAlgebraData& g = *algebra_;
  for (const auto& f : factors_) {
    FactorOps fo;
    Vec rho_full(g.dim());
    for (std::size_t c = 0; c < g.rank(); ++c) rho_full[g.cartan_indices[c]] = g.rho[c];
    fo.rho = f.action_of(rho_full);
    for (std::size_t c = 0; c < g.rank(); ++c) {
      fo.u.push_back(f.action[g.cartan_indices[c]]);
      Vec dual_full(g.dim());
      for (std::size_t m = 0; m < g.rank(); ++m)
        dual_full[g.cartan_indices[m]] = g.cartan_dual[c][m];
      fo.u_dual.push_back(f.action_of(dual_full));
    }
    for (const auto& space : g.positive_roots) {
      std::vector<Matrix> raise, lower;
      for (std::size_t j = 0; j < space.raising.size(); ++j) {
        raise.push_back(f.action[space.raising[j]]);
        lower.push_back(f.action_of(space.lowering_dual[j]));
      }
      fo.raise.push_back(std::move(raise));
      fo.lower_dual.push_back(std::move(lower));
    }
    ops_.push_back(std::move(fo));
  }
}

std::uint64_t EvaluationModule::flat(const std::vector<std::size_t>& tuple) const {
  if (tuple.size() != factors_.size()) throw std::invalid_argument("flat: tuple arity mismatch");
  std::uint64_t out = 0;
  for (std::size_t s = 0; s < tuple.size(); ++s) {
    if (tuple[s] >= factors_[s].dim) throw std::invalid_argument("flat: index out of range");
    out += tuple[s] * strides_[s];
  }
  return out;
}

std::vector<std::size_t> EvaluationModule::tuple_of(std::uint64_t flat) const {
  std::vector<std::size_t> tuple(factors_.size());
  for (std::size_t s = 0; s < factors_.size(); ++s)
    tuple[s] = (flat / strides_[s]) % factors_[s].dim;
  return tuple;
}

Weight EvaluationModule::weight_of(std::uint64_t flat) const {
  Weight w(algebra_->rank());
  for (std::size_t s = 0; s < factors_.size(); ++s) {
    std::size_t digit = (flat / strides_[s]) % factors_[s].dim;
    w = w + factors_[s].weights[digit];
  }
  return w;
}

Weight EvaluationModule::top_weight() const {
  Weight w(algebra_->rank());
  for (const auto& f : factors_) w = w + f.highest_weight;
  return w;
}

ModuleVector EvaluationModule::act_in_slot(std::size_t slot, const Matrix& factor_matrix,
                                           const ModuleVector& v) const {
  ModuleVector out;
  std::uint64_t stride = strides_[slot];
  std::size_t fdim = factors_[slot].dim;
  for (const auto& [idx, c] : v.terms()) {
    std::size_t digit = (idx / stride) % fdim;
    std::uint64_t base = idx - digit * stride;
    for (std::size_t r = 0; r < fdim; ++r) {
      const Rational& a = factor_matrix.at(r, digit);
      if (!a.is_zero()) out.add(base + r * stride, a * c);
    }
  }
  return out;
}

ModuleVector EvaluationModule::act_slot(std::size_t slot, std::size_t algebra_idx,
                                        const ModuleVector& v) const {
  return act_in_slot(slot, factors_[slot].action[algebra_idx], v);
}

ModuleVector EvaluationModule::act_loop(std::size_t algebra_idx, long k,
                                        const ModuleVector& v) const {
  ModuleVector out;
  for (std::size_t s = 0; s < factors_.size(); ++s) {
    Rational c = pow(points()[s], k);
    out += c * act_slot(s, algebra_idx, v);
  }
  return out;
}

ModuleVector EvaluationModule::act_loop(const std::string& label, long k,
                                        const ModuleVector& v) const {
  return act_loop(algebra_->index_of(label), k, v);
}

ModuleVector EvaluationModule::act_poly(std::size_t algebra_idx, const LaurentPoly& p,
                                        const ModuleVector& v) const {
  ModuleVector out;
  for (std::size_t s = 0; s < factors_.size(); ++s) {
    Rational c = p.evaluate(points()[s]);
    if (!c.is_zero()) out += c * act_slot(s, algebra_idx, v);
  }
  return out;
}

ModuleVector EvaluationModule::act_poly(const std::string& label, const LaurentPoly& p,
                                        const ModuleVector& v) const {
  return act_poly(algebra_->index_of(label), p, v);
}

ModuleVector EvaluationModule::act_diag(std::size_t algebra_idx, const ModuleVector& v) const {
  ModuleVector out;
  for (std::size_t s = 0; s < factors_.size(); ++s) out += act_slot(s, algebra_idx, v);
  return out;
}

ModuleVector EvaluationModule::act_diag_element(const Vec& full_coords,
                                                const ModuleVector& v) const {
  ModuleVector out;
  for (std::size_t s = 0; s < factors_.size(); ++s)
    out += act_in_slot(s, factors_[s].action_of(full_coords), v);
  return out;
}

const WeightSpace& EvaluationModule::weight_space(const Weight& mu) const {
  auto it = weight_cache_.find(mu);
  if (it != weight_cache_.end()) return it->second;
  WeightSpace ws;
  ws.mu = mu;
  for (std::uint64_t idx = 0; idx < dim_; ++idx)
    if (weight_of(idx) == mu) {
      ws.pos[idx] = ws.tuples.size();
      ws.tuples.push_back(idx);
    }
  return weight_cache_.emplace(mu, std::move(ws)).first->second;
}

std::vector<ModuleVector> EvaluationModule::highest_weight_space(const Weight& mu) const {
  const WeightSpace& ws = weight_space(mu);
  if (ws.dim() == 0) return {};
  const LieAlgebraData& g = *algebra_;
  std::vector<Vec> rows;
  for (std::size_t s : g.simple_roots) {
    const RootSpace& space = g.positive_roots[s];
    const WeightSpace& target = weight_space(mu + space.root);
    if (target.dim() == 0) continue;
    for (std::size_t j = 0; j < space.raising.size(); ++j) {
      std::vector<Vec> img_coords;
      for (std::size_t col = 0; col < ws.dim(); ++col) {
        ModuleVector img = act_diag(space.raising[j], ModuleVector::unit(ws.tuples[col]));
        img_coords.push_back(target.coords_of(img));
      }
      for (std::size_t rrow = 0; rrow < target.dim(); ++rrow) {
        Vec row(ws.dim());
        for (std::size_t col = 0; col < ws.dim(); ++col) row[col] = img_coords[col][rrow];
        rows.push_back(std::move(row));
      }
    }
  }
  Matrix stacked(rows.size(), ws.dim());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t jj = 0; jj < ws.dim(); ++jj) stacked.at(i, jj) = rows[i][jj];
  auto kern = kernel_basis(stacked);
  std::vector<ModuleVector> out;
  out.reserve(kern.size());
  for (const auto& k : kern) out.push_back(ws.vector_of(k));
  return out;
}

ModuleVector EvaluationModule::top_vector() const {
  std::vector<std::size_t> tuple(factors_.size());
  for (std::size_t s = 0; s < factors_.size(); ++s) tuple[s] = factors_[s].hw_index;
  return ModuleVector::unit(flat(tuple));
}

Rational EvaluationModule::lowering_multiplicity(std::size_t slot, std::size_t simple_j) const {
  const LieAlgebraData& g = *algebra_;
  std::size_t root_idx = g.simple_roots.at(simple_j);
  return g.coroot_value(factors_[slot].highest_weight, root_idx);
}

ModuleVector EvaluationModule::single_lowered(std::size_t k, std::size_t simple_j) const {
  const RootSpace& space = algebra_->positive_roots[algebra_->simple_roots.at(simple_j)];
  return act_in_slot(k, factors_[k].action_of(space.lowering_dual[0]), top_vector());
}

ModuleVector EvaluationModule::hw_pair(std::size_t k, std::size_t l, std::size_t simple_j) const {
  Rational mk = lowering_multiplicity(k, simple_j);
  Rational ml = lowering_multiplicity(l, simple_j);
  return ml * single_lowered(k, simple_j) - mk * single_lowered(l, simple_j);
}

ModuleVector EvaluationModule::double_lowered_pair(std::size_t k, std::size_t l,
                                                   std::size_t simple_j) const {
  const RootSpace& space = algebra_->positive_roots[algebra_->simple_roots.at(simple_j)];
  ModuleVector v = act_in_slot(k, factors_[k].action_of(space.lowering_dual[0]), top_vector());
  return act_in_slot(l, factors_[l].action_of(space.lowering_dual[0]), v);
}

ModuleVector EvaluationModule::double_lowered(std::size_t k, std::size_t simple_j) const {
  const RootSpace& space = algebra_->positive_roots[algebra_->simple_roots.at(simple_j)];
  Matrix f = factors_[k].action_of(space.lowering_dual[0]);
  return act_in_slot(k, f, act_in_slot(k, f, top_vector()));
}

ModuleVector EvaluationModule::hw_double_pair(std::size_t k, std::size_t l,
                                              std::size_t simple_j) const {
  Rational mk = lowering_multiplicity(k, simple_j);
  Rational ml = lowering_multiplicity(l, simple_j);
  Rational one(1), two(2);
  ModuleVector out = (two * (mk - one) * (ml - one)) * double_lowered_pair(k, l, simple_j);
  out -= ((mk - one) * mk) * double_lowered(l, simple_j);
  out -= ((ml - one) * ml) * double_lowered(k, simple_j);
  return out;
}

Rational EvaluationModule::form(const ModuleVector& a, const ModuleVector& b) const {
  Rational out;
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      Rational prod = ca * cb;
      for (std::size_t s = 0; s < factors_.size() && !prod.is_zero(); ++s) {
        std::size_t da = (ia / strides_[s]) % factors_[s].dim;
        std::size_t db = (ib / strides_[s]) % factors_[s].dim;
        prod *= factors_[s].contravariant.at(da, db);
      }
      out += prod;
    }
  return out;
}

std::string EvaluationModule::descriptor() const {
  std::ostringstream os;
  os << "algebra=" << algebra_->name() << " N=" << algebra_->matrix_size << " factors=[";
  for (std::size_t s = 0; s < factors_.size(); ++s) {
    os << (s ? "," : "") << "(";
    const Weight& w = factors_[s].highest_weight;
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i].str();
    os << ")";
  }
  os << "] points=[";
  for (std::size_t s = 0; s < points().size(); ++s) os << (s ? "," : "") << points()[s].str();
  os << "]";
  return os.str();
}

}  // namespace casimir
