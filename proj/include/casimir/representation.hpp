#pragma once

#include <map>
#include <memory>
#include <vector>

#include "casimir/lie_algebra.hpp"

namespace casimir {

/// An irreducible highest weight module realized as explicit matrices
/// over a weight-graded basis.  Basis vector 0 is the highest weight
/// vector; every other basis vector arises from an earlier one by a
/// single lowering operator, recorded in `construction`.
struct Representation {
  std::shared_ptr<const LieAlgebraData> algebra;
  std::size_t dim = 0;
  std::vector<Matrix> action;          // per algebra basis index
  std::vector<Weight> weights;         // per module basis vector
  Weight highest_weight;
  std::size_t hw_index = 0;
  // (parent basis index, algebra basis index of the lowering operator);
  // entry 0 is (-1, 0).
  std::vector<std::pair<std::ptrdiff_t, std::size_t>> construction;
  // Gram matrix of the contravariant form, normalized so the highest
  // weight vector has norm 1.
  Matrix contravariant;

  const Matrix& action_of_basis(std::size_t algebra_idx) const { return action[algebra_idx]; }
  Matrix action_of(const Vec& full_coords) const;
  Matrix action_of_matrix(const Matrix& algebra_element) const;
};

/// The (m+1)-dimensional irreducible sl2 module with basis
/// v, yv, ..., y^m v, where x y^a v = a(m-a+1) y^{a-1} v.
Representation sl2_irrep(std::shared_ptr<const LieAlgebraData> algebra, int m);
Representation sl2_irrep(int m);

/// Finds a highest weight vector of the given weight inside tensor
/// powers of the defining representation (smallest power first), then
/// generates the cyclic span under lowering operators and restricts the
/// action to it.  Throws if the weight is not found up to d_max.
Representation irrep_from_tensor_power(std::shared_ptr<const LieAlgebraData> algebra,
                                       const Weight& lambda, int d_max = 8);

/// Basis indices grouped by weight.
std::map<Weight, std::vector<std::size_t>> weight_spaces(const Representation& rep);

}  // namespace casimir
