#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "casimir/laurent.hpp"
#include "casimir/lie_algebra.hpp"
#include "casimir/representation.hpp"

namespace casimir {

/// Finitely supported vector in a tensor-product module, keyed by flat
/// basis-tuple index.  Zero coefficients are pruned on write, and
/// iteration order is the lexicographic tuple order.
class ModuleVector {
 public:
  ModuleVector() = default;
  static ModuleVector unit(std::uint64_t idx) {
    ModuleVector v;
    v.c_[idx] = Rational(1);
    return v;
  }

  bool is_zero() const { return c_.empty(); }
  const std::map<std::uint64_t, Rational>& terms() const { return c_; }
  Rational coeff(std::uint64_t idx) const {
    auto it = c_.find(idx);
    return it == c_.end() ? Rational(0) : it->second;
  }
  void add(std::uint64_t idx, const Rational& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = c_.emplace(idx, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  ModuleVector& operator+=(const ModuleVector& o) {
    for (const auto& [i, x] : o.c_) add(i, x);
    return *this;
  }
  ModuleVector& operator-=(const ModuleVector& o) {
    for (const auto& [i, x] : o.c_) add(i, -x);
    return *this;
  }
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const Rational& s, const ModuleVector& v) {
    ModuleVector out;
    if (s.is_zero()) return out;
    for (const auto& [i, x] : v.c_) out.c_[i] = s * x;
    return out;
  }
  friend bool operator==(const ModuleVector& a, const ModuleVector& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ModuleVector& a, const ModuleVector& b) { return !(a == b); }

 private:
  std::map<std::uint64_t, Rational> c_;
};

/// Basis tuples of one total weight, with coordinates relative to the
/// (lexicographically ordered) tuple list.
struct WeightSpace {
  Weight mu;
  std::vector<std::uint64_t> tuples;
  std::map<std::uint64_t, std::size_t> pos;

  std::size_t dim() const { return tuples.size(); }
  /// Coordinates of a vector supported on this space; throws otherwise.
  Vec coords_of(const ModuleVector& v) const;
  ModuleVector vector_of(const Vec& coords) const;
};

/// Evaluation module: a tensor product of irreducible modules made into
/// a module over the loop algebra by evaluating the variable at distinct
/// nonzero points, X (x) t^k acting as sum_i a_i^k (X in slot i).
class EvaluationModule {
 public:
  EvaluationModule(std::shared_ptr<const LieAlgebraData> algebra,
                   std::vector<Representation> factors, EvaluationPoints points);

  const LieAlgebraData& algebra() const { return *algebra_; }
  std::shared_ptr<const LieAlgebraData> algebra_ptr() const { return algebra_; }
  std::size_t n_factors() const { return factors_.size(); }
  const Representation& factor(std::size_t i) const { return factors_[i]; }
  const EvaluationPoints& points() const { return idempotents_.points; }
  const IdempotentBasis& idempotents() const { return idempotents_; }
  std::uint64_t dim() const { return dim_; }

  std::uint64_t flat(const std::vector<std::size_t>& tuple) const;
  std::vector<std::size_t> tuple_of(std::uint64_t flat) const;
  Weight weight_of(std::uint64_t flat) const;
  Weight top_weight() const;

  // --- actions ---
  /// A matrix acting in one tensor slot.
  ModuleVector act_in_slot(std::size_t slot, const Matrix& factor_matrix,
                           const ModuleVector& v) const;
  /// Algebra basis element in one slot.
  ModuleVector act_slot(std::size_t slot, std::size_t algebra_idx, const ModuleVector& v) const;
  /// X (x) t^k per the evaluation action.
  ModuleVector act_loop(std::size_t algebra_idx, long k, const ModuleVector& v) const;
  ModuleVector act_loop(const std::string& label, long k, const ModuleVector& v) const;
  /// X (x) p(t) = sum_s p(a_s) (X in slot s).
  ModuleVector act_poly(std::size_t algebra_idx, const LaurentPoly& p, const ModuleVector& v) const;
  ModuleVector act_poly(const std::string& label, const LaurentPoly& p, const ModuleVector& v) const;
  /// Diagonal action X (x) 1.
  ModuleVector act_diag(std::size_t algebra_idx, const ModuleVector& v) const;
  ModuleVector act_diag_element(const Vec& full_coords, const ModuleVector& v) const;

  const WeightSpace& weight_space(const Weight& mu) const;
  /// Basis of the joint kernel of the simple raising operators on the
  /// mu weight space: the highest weight vectors of weight mu.
  std::vector<ModuleVector> highest_weight_space(const Weight& mu) const;

  // --- named vectors for the worked tensor-product examples ---
  ModuleVector top_vector() const;
  /// m_i = lambda_i(alpha_j-vee) for factor slot i and simple root j.
  Rational lowering_multiplicity(std::size_t slot, std::size_t simple_j) const;
  /// w_k: the top tensor with one lowering applied in slot k.
  ModuleVector single_lowered(std::size_t k, std::size_t simple_j) const;
  /// z_{k,l} = m_l w_k - m_k w_l, a highest weight vector.
  ModuleVector hw_pair(std::size_t k, std::size_t l, std::size_t simple_j) const;
  /// One lowering in each of slots k and l.
  ModuleVector double_lowered_pair(std::size_t k, std::size_t l, std::size_t simple_j) const;
  /// Two lowerings in slot k.
  ModuleVector double_lowered(std::size_t k, std::size_t simple_j) const;
  /// A_{k,l} = 2(m_k-1)(m_l-1) z_{k,l} - (m_k-1)m_k z_l - (m_l-1)m_l z_k.
  ModuleVector hw_double_pair(std::size_t k, std::size_t l, std::size_t simple_j) const;

  /// Contravariant form, multiplicative over tensor factors.
  Rational form(const ModuleVector& a, const ModuleVector& b) const;

  /// One-line structured text record of the module.
  std::string descriptor() const;

  // Per-factor action matrices of the fixed algebra elements used by the
  // central operators.
  const Matrix& factor_rho(std::size_t slot) const { return ops_[slot].rho; }
  const Matrix& factor_u(std::size_t slot, std::size_t i) const { return ops_[slot].u[i]; }
  const Matrix& factor_u_dual(std::size_t slot, std::size_t i) const { return ops_[slot].u_dual[i]; }
  const Matrix& factor_raise(std::size_t slot, std::size_t root, std::size_t j) const {
    return ops_[slot].raise[root][j];
  }
  const Matrix& factor_lower_dual(std::size_t slot, std::size_t root, std::size_t j) const {
    return ops_[slot].lower_dual[root][j];
  }

 private:
  struct FactorOps {
    Matrix rho;
    std::vector<Matrix> u, u_dual;
    std::vector<std::vector<Matrix>> raise, lower_dual;
  };

  std::shared_ptr<const LieAlgebraData> algebra_;
  std::vector<Representation> factors_;
  IdempotentBasis idempotents_;
  std::uint64_t dim_;
  std::vector<std::uint64_t> strides_;
  std::vector<FactorOps> ops_;
  mutable std::map<Weight, WeightSpace> weight_cache_;
};

}  // namespace casimir
