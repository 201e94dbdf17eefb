#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "casimir/linalg.hpp"
#include "casimir/matrix.hpp"

namespace casimir {

enum class AlgebraKind { sl2, sl, gl, so, sp };

std::string kind_name(AlgebraKind k);
/// Parses "sl2", "sl3", "gl2", "so5", "sp4", ... into (kind, N).
std::pair<AlgebraKind, int> parse_algebra_name(const std::string& name);

/// A weight (or root) is stored as its tuple of values on the Cartan
/// basis elements, in basis order.
using Weight = Vec;

/// One positive root space together with its opposite space and the
/// dual pairing between them under the invariant form.
struct RootSpace {
  Weight root;                      // values on the cartan basis
  Rational grading;                 // value on the regular grading element
  std::vector<std::size_t> raising;       // basis indices spanning g_alpha
  std::vector<std::size_t> lowering;      // basis indices spanning g_{-alpha}
  std::vector<Vec> lowering_dual;         // full-basis coords, (dual_j, raising_j') = delta
  Vec t_alpha;                      // nu^{-1}(root), cartan coords
  Vec coroot;                       // cartan coords
};

/// Catalog entry for a finite-dimensional matrix Lie algebra: basis,
/// trace form, root data, dual pairs and nu^{-1}(rho).  The invariant
/// form is the trace form of the defining representation.
class LieAlgebraData {
 public:
  AlgebraKind kind = AlgebraKind::gl;
  int matrix_size = 0;
  std::vector<std::string> labels;
  std::vector<Matrix> basis;
  std::vector<std::size_t> cartan_indices;
  std::vector<RootSpace> positive_roots;
  std::vector<std::size_t> simple_roots;  // indices into positive_roots
  Vec rho;                                // nu^{-1}(rho), cartan coords
  Matrix cartan_gram;                     // (u_i, u_j)
  Matrix cartan_gram_inv;
  std::vector<Vec> cartan_dual;           // u^i, cartan coords

  std::size_t dim() const { return basis.size(); }
  std::size_t rank() const { return cartan_indices.size(); }
  std::size_t index_of(const std::string& label) const;
  std::string name() const { return kind_name(kind) + (kind == AlgebraKind::sl2 ? "" : std::to_string(matrix_size)); }

  /// Trace form of the defining representation.
  Rational form(const Matrix& x, const Matrix& y) const { return (x * y).trace(); }
  /// Induced form on weights: w1^T G^{-1} w2.
  Rational weight_form(const Weight& w1, const Weight& w2) const;
  /// Value of a weight on an element of the Cartan given by coords.
  Rational weight_on(const Weight& w, const Vec& cartan_coords) const;
  /// lambda(alpha^vee) for a positive root.
  Rational coroot_value(const Weight& w, std::size_t pos_root) const;

  /// Coordinates over the basis; throws if the matrix is outside the span.
  Vec coordinates_of(const Matrix& x) const;
  Matrix element_matrix(const Vec& full_coords) const;
  Matrix cartan_matrix_of(const Vec& cartan_coords) const;

 private:
  friend LieAlgebraData build_algebra(AlgebraKind, int);
  std::shared_ptr<const LinearSolver> coord_solver_;
};

/// Builds the catalog entry; throws std::invalid_argument on an
/// unsupported (kind, N) combination.
LieAlgebraData build_algebra(AlgebraKind kind, int n);

/// The full table of generators F_ij = E_ij - theta_ij E_{-j,-i} for the
/// orthogonal and symplectic algebras, indexed by {-k..-1,(0),1..k}.
struct FGenerators {
  AlgebraKind kind = AlgebraKind::so;
  int n = 0;
  std::vector<int> indices;
  int theta(int i, int j) const;
  const Matrix& f(int i, int j) const;
  std::size_t pos(int index) const;

  std::map<std::pair<int, int>, Matrix> table;
};

FGenerators f_generators(AlgebraKind kind, int n);

struct BracketCheck {
  bool ok = true;
  std::array<int, 4> first_violation{0, 0, 0, 0};
};

/// Verifies [F_ij, F_kl] = d_jk F_il - d_il F_kj + d_{l,-j} theta_ij F_{k,-i}
///                          - d_{i,-k} theta_ij F_{-j,l}
/// over all index 4-tuples by direct matrix computation.
BracketCheck check_f_bracket(const FGenerators& g);

}  // namespace casimir
