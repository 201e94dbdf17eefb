#pragma once

#include <functional>
#include <string>
#include <vector>

#include "casimir/central_operators.hpp"

namespace casimir {

/// Clebsch-Gordan table for a pair of sl2 modules: the component
/// highest weights m+n, m+n-2, ..., |m-n|, multiplicity free.
struct CGTable {
  int m = 0, n = 0;
  std::vector<int> components;
};

CGTable cg_decompose(int m, int n);

/// Coefficients a_0..a_l of the highest weight vector
/// w_l = sum a_i y^i v_1 (x) y^{l-i} v_2 inside V(m) (x) V(n), from the
/// recursion i(m-i+1) a_i + (l-i+1)(n-l+i) a_{i-1} = 0 with a_0 = 1.
/// All coefficients are nonzero for 0 <= l <= min(m,n).
std::vector<Rational> hw_recursion_coeffs(int m, int n, int l);

/// Span growth of a seed vector under repeated application of operator
/// matrices restricted to one weight space.
struct OrbitReport {
  std::string seed_desc;
  std::vector<std::string> generator_specs;
  std::vector<std::size_t> dims_per_round;  // after each closure round
  std::vector<ModuleVector> span_basis;
  std::size_t target_dim = 0;
  std::size_t hwv_dim = 0;
  bool spans_hwv = false;
  bool spans_target = false;
};

/// Pre: seed lies in the target space and every generator preserves it.
OrbitReport operator_orbit(const EvaluationModule& mod, const ModuleVector& seed,
                           const std::vector<OperatorMatrix>& generators,
                           const WeightSpace& target, const std::string& seed_desc = "seed");

/// One anti-diagonal row record of the triple-product experiment.
struct AntiDiagonalRow {
  int l = 0;
  std::size_t expected_independent = 0;  // d_l = min(l,k)+1
  std::size_t orbit_rank = 0;
  std::size_t hwv_dim = 0;               // dim V+ at that weight
  std::size_t expected_hwv = 0;          // d'_l
  bool ok = false;
};

/// Report of the V(m) (x) V(n) (x) V(k) highest-weight-vector survey:
/// orbits of w_l (x) v3 along each anti-diagonal, the last-row z seed,
/// and the total highest-weight-vector count.
struct AntiDiagonalReport {
  int m = 0, n = 0, k = 0;
  std::vector<AntiDiagonalRow> rows;        // l = 0..n
  std::vector<AntiDiagonalRow> tail_rows;   // l = n+1..n+k (kernel counts only)
  std::size_t z_orbit_rank = 0;
  std::size_t z_expected = 0;               // d'_{n+1} = k
  bool z_ok = false;
  std::size_t total_hwv = 0;
  std::size_t expected_total = 0;           // sum d'_l = (n+1)(k+1)
  bool ok = false;
};

/// Pre: m > n > k and m - n > k > 0.
AntiDiagonalReport anti_diagonal_span(int m, int n, int k);

/// Gram matrix of the product contravariant form on the given vectors.
Matrix contravariant_gram(const std::vector<ModuleVector>& vectors,
                          const EvaluationModule& mod);

/// A named central operator given by its action on vectors.
struct NamedOperator {
  std::string name;
  std::function<ModuleVector(const ModuleVector&)> apply;
};

/// The generating family used for T-module decompositions: every
/// Omega(l,k) with l <= k, plus the cyclic invariants T_r (or S_r)
/// over all idempotent tuples for r <= r_max.
std::vector<NamedOperator> central_generator_set(const EvaluationModule& mod, int r_max,
                                                 std::uint64_t budget = 100000);

struct IsotypicBlock {
  std::vector<ModuleVector> basis;
  bool irreducible_certified = false;
  std::string note;
};

/// Decomposition of the highest-weight-vector space of one weight into
/// orthogonal invariant blocks under the generated operator algebra.
struct IsotypicReport {
  Weight mu;
  std::size_t hwv_dim = 0;
  std::vector<IsotypicBlock> blocks;
  bool orthogonal_certified = false;  // pairwise block Gram blocks vanish
  bool gram_positive_definite = false;
  bool fills = false;                 // block dims sum to hwv_dim
  bool invariant_certified = false;   // generator images stay inside each block
};

IsotypicReport t_module_decompose(const EvaluationModule& mod, const Weight& mu,
                                  const std::vector<NamedOperator>& generators);

/// Outcome of replaying one closed-form coefficient formula against
/// brute-force matrix application.
struct FormulaCheck {
  std::string id;
  std::string instance;
  bool vacuous = false;
  bool verbatim = false;  // the reference form reproduced exactly
  std::string printed;    // reference coefficients
  std::string computed;   // coefficients found by matrix application
};

/// Checks the operator-action formulas on singly lowered vectors w_i and
/// the highest weight pairs z_{k,l}; requires every factor multiplicity
/// m_i >= 1 along the chosen simple root.
std::vector<FormulaCheck> validate_single_lowering_formulas(const EvaluationModule& mod,
                                                            std::size_t simple_j);

/// Checks the doubly lowered family: dimension counts, the A_{k,l}
/// highest weight property, and the operator-action formulas; requires
/// every m_i >= 2.
std::vector<FormulaCheck> validate_double_lowering_formulas(const EvaluationModule& mod,
                                                            std::size_t simple_j);

}  // namespace casimir
