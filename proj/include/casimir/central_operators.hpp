#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "casimir/evaluation_module.hpp"

namespace casimir {

/// The generalized Casimir operator Omega(a, b), realized on evaluation
/// modules through its slot-operator form: with coordinates a_l = a(p_l),
/// b_k = b(p_k),
///   Omega(a,b) = sum_l 2 a_l b_l (rho-vee in slot l)
///              + sum_{l,k} a_l b_k sum_i (u^i in slot l)(u_i in slot k)
///              + sum_{l,k} (a_l b_k + b_l a_k)
///                  sum_{alpha>0,j} (e^j_{-alpha} in slot l)(e^j_alpha in slot k).
struct OmegaSpec {
  LaurentPoly a, b;
  std::string str() const;
};

enum class GelfandFamily { general_linear, ortho_symplectic };

/// Cyclic invariant T_k(b_1..b_k) = sum E_{i1 i2}(b_1) ... E_{ik i1}(b_k)
/// (general linear), or S_k with F generators (orthogonal/symplectic).
struct GelfandSpec {
  int k = 1;
  std::vector<LaurentPoly> coeffs;
  GelfandFamily family = GelfandFamily::general_linear;
  std::string str() const;
};

struct Domain {
  bool whole = true;
  Weight mu;
  static Domain whole_module() { return Domain{}; }
  static Domain weight(Weight w) { return Domain{false, std::move(w)}; }
  std::string str() const;
};

/// A central operator materialized as an exact matrix over the basis of
/// its domain (the whole module, or one weight space).
struct OperatorMatrix {
  std::string spec_text;
  Domain domain;
  Matrix mat;
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

ModuleVector apply_omega(const EvaluationModule& mod, const OmegaSpec& spec,
                         const ModuleVector& v);

/// Gelfand operator with per-slot element actions prepared once.
class GelfandOperator {
 public:
  GelfandOperator(const EvaluationModule& mod, GelfandSpec spec,
                  std::uint64_t budget = 100000);
  ModuleVector apply(const ModuleVector& v) const;
  const GelfandSpec& spec() const { return spec_; }

 private:
  const EvaluationModule& mod_;
  GelfandSpec spec_;
  std::vector<int> indices_;
  // actions_[slot][a*indices+b] = action of E_{ia ib} (or F) on that factor
  std::vector<std::vector<Matrix>> actions_;
  std::vector<bool> element_zero_;
  std::vector<std::vector<Rational>> coeff_at_point_;
};

ModuleVector apply_gelfand(const EvaluationModule& mod, const GelfandSpec& spec,
                           const ModuleVector& v, std::uint64_t budget = 100000);

OperatorMatrix omega_matrix(const EvaluationModule& mod, const OmegaSpec& spec,
                            const Domain& domain);
/// Omega(P_l, P_k) for 1-based slot indices l, k.
OperatorMatrix omega_lk(const EvaluationModule& mod, int l, int k, const Domain& domain);
OmegaSpec omega_lk_spec(const EvaluationModule& mod, int l, int k);
OperatorMatrix gelfand_matrix(const EvaluationModule& mod, const GelfandSpec& spec,
                              const Domain& domain, std::uint64_t budget = 100000);

/// Materializes any linear vector map on a domain, asserting that images
/// stay inside it (weight preservation is checked, not assumed).
OperatorMatrix materialize(const EvaluationModule& mod,
                           const std::function<ModuleVector(const ModuleVector&)>& op,
                           const Domain& domain, const std::string& spec_text);

/// Matrix of the diagonal action X (x) 1 on the whole module.
Matrix diag_action_matrix(const EvaluationModule& mod, std::size_t algebra_idx);

struct CentralityReport {
  bool central = true;
  Rational max_abs_entry;     // over all commutator entries
  std::string max_abs_numerator;
  std::string worst_generator;
};

/// Commutes the operator with every algebra generator acting diagonally;
/// requires a whole-module domain.
CentralityReport centrality_check(const OperatorMatrix& op, const EvaluationModule& mod);

/// Parses the operator text forms "omega(a=<poly>, b=<poly>)",
/// "omega_lk(l,k)", "T(k; b1,...,bk)", "S(k; b1,...,bk)".  Polynomial
/// arguments accept the canonical Laurent form plus the idempotent
/// shorthand "P1".."Pn".
struct ParsedOperator {
  std::optional<OmegaSpec> omega;
  std::optional<GelfandSpec> gelfand;
  std::string text;
};
ParsedOperator parse_operator_spec(const std::string& text, const IdempotentBasis& basis);

}  // namespace casimir
