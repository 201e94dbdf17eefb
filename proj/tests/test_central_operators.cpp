#include "doctest.h"

#include <memory>
#include <random>

#include "casimir/central_operators.hpp"

using namespace casimir;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

EvaluationModule sl2_module(const std::vector<int>& ms, const std::vector<Rational>& pts) {
  auto g = std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::sl2, 2));
  std::vector<Representation> factors;
  for (int m : ms) factors.push_back(sl2_irrep(g, m));
  return EvaluationModule(g, std::move(factors), EvaluationPoints(pts));
}

EvaluationModule gl_module(int n, const std::vector<Weight>& lambdas,
                           const std::vector<Rational>& pts) {
  auto g = std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::gl, n));
  std::vector<Representation> factors;
  for (const auto& l : lambdas) factors.push_back(irrep_from_tensor_power(g, l));
  return EvaluationModule(g, std::move(factors), EvaluationPoints(pts));
}

// Independent classical-Casimir oracle: sum over dual pairs of the
// composition (dual b) after b, acting diagonally on the chosen slots.
Matrix pair_casimir_oracle(const EvaluationModule& mod, const std::vector<std::size_t>& slots) {
  const LieAlgebraData& g = mod.algebra();
  std::size_t d = static_cast<std::size_t>(mod.dim());
  Matrix out(d, d);
  auto diag_on_slots = [&](const std::function<ModuleVector(std::size_t, const ModuleVector&)>& f,
                           const ModuleVector& v) {
    ModuleVector sum;
    for (std::size_t s : slots) sum += f(s, v);
    return sum;
  };
  for (std::size_t col = 0; col < d; ++col) {
    ModuleVector v = ModuleVector::unit(col);
    ModuleVector img;
    for (std::size_t i = 0; i < g.rank(); ++i) {
      ModuleVector inner = diag_on_slots(
          [&](std::size_t s, const ModuleVector& w) { return mod.act_in_slot(s, mod.factor_u(s, i), w); }, v);
      img += diag_on_slots(
          [&](std::size_t s, const ModuleVector& w) { return mod.act_in_slot(s, mod.factor_u_dual(s, i), w); },
          inner);
    }
    for (std::size_t root = 0; root < g.positive_roots.size(); ++root)
      for (std::size_t j = 0; j < g.positive_roots[root].raising.size(); ++j) {
        ModuleVector up = diag_on_slots(
            [&](std::size_t s, const ModuleVector& w) { return mod.act_in_slot(s, mod.factor_raise(s, root, j), w); },
            v);
        img += diag_on_slots(
            [&](std::size_t s, const ModuleVector& w) {
              return mod.act_in_slot(s, mod.factor_lower_dual(s, root, j), w);
            },
            up);
        ModuleVector down = diag_on_slots(
            [&](std::size_t s, const ModuleVector& w) {
              return mod.act_in_slot(s, mod.factor_lower_dual(s, root, j), w);
            },
            v);
        img += diag_on_slots(
            [&](std::size_t s, const ModuleVector& w) { return mod.act_in_slot(s, mod.factor_raise(s, root, j), w); },
            down);
      }
    for (const auto& [idx, c] : img.terms()) out.at(static_cast<std::size_t>(idx), col) = c;
  }
  return out;
}

ModuleVector random_vector(const EvaluationModule& mod, std::mt19937& rng) {
  std::uniform_int_distribution<long> c(-4, 4);
  std::uniform_int_distribution<std::uint64_t> idx(0, mod.dim() - 1);
  ModuleVector v;
  for (int t = 0; t < 5; ++t) v.add(idx(rng), R(c(rng)));
  return v;
}

}  // namespace

TEST_CASE("single-factor omega is the casimir scalar m(m+2)/2") {
  for (int m = 0; m <= 6; ++m) {
    EvaluationModule mod = sl2_module({m}, {R(1)});
    OperatorMatrix op = omega_lk(mod, 1, 1, Domain::whole_module());
    Rational scalar(static_cast<long>(m) * (m + 2), 2);
    CHECK(op.mat == scalar * Matrix::identity(static_cast<std::size_t>(m) + 1));
    // Independent oracle: h + h^2/2 + 2 y x as explicit matrices.
    const LieAlgebraData& g = mod.algebra();
    const Representation& rep = mod.factor(0);
    Matrix h = rep.action[g.index_of("h")];
    Matrix x = rep.action[g.index_of("x")];
    Matrix y = rep.action[g.index_of("y")];
    Matrix oracle = h + R(1, 2) * (h * h) + R(2) * (y * x);
    CHECK(op.mat == oracle);
  }
}

TEST_CASE("omega on the top vector is the weight pairing") {
  EvaluationModule mod = sl2_module({1, 1}, {R(1), R(2)});
  ModuleVector top = mod.top_vector();
  OmegaSpec spec = omega_lk_spec(mod, 1, 2);
  CHECK(apply_omega(mod, spec, top) == R(1, 2) * top);
}

TEST_CASE("omega is bilinear and vanishes with a zero argument") {
  EvaluationModule mod = sl2_module({1, 2}, {R(1), R(2)});
  std::mt19937 rng(9);
  const auto& p = mod.idempotents().idempotents;
  LaurentPoly t2 = LaurentPoly::monomial(2, R(1));
  for (int trial = 0; trial < 4; ++trial) {
    ModuleVector v = random_vector(mod, rng);
    // Omega(a, 0) = 0.
    CHECK(apply_omega(mod, OmegaSpec{p[0], LaurentPoly::zero()}, v).is_zero());
    // Linearity in the first argument.
    LaurentPoly combo = R(3) * p[0] + t2;
    ModuleVector lhs = apply_omega(mod, OmegaSpec{combo, p[1]}, v);
    ModuleVector rhs = R(3) * apply_omega(mod, OmegaSpec{p[0], p[1]}, v) +
                       apply_omega(mod, OmegaSpec{t2, p[1]}, v);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("omega is symmetric in its arguments") {
  EvaluationModule mod = sl2_module({2, 1}, {R(1), R(2)});
  LaurentPoly a = LaurentPoly::parse("2*t^1+1*t^0");
  LaurentPoly b = LaurentPoly::parse("1*t^-1");
  Domain whole = Domain::whole_module();
  CHECK(omega_matrix(mod, OmegaSpec{a, b}, whole).mat ==
        omega_matrix(mod, OmegaSpec{b, a}, whole).mat);
  CHECK(omega_lk(mod, 1, 2, whole).mat == omega_lk(mod, 2, 1, whole).mat);
}

TEST_CASE("omega reduces to idempotent components") {
  EvaluationModule mod = sl2_module({1, 1, 2}, {R(1), R(2), R(3)});
  LaurentPoly a = LaurentPoly::parse("1*t^2+-1*t^0");
  LaurentPoly b = LaurentPoly::parse("1/2*t^-1+1*t^1");
  Matrix direct = omega_matrix(mod, OmegaSpec{a, b}, Domain::whole_module()).mat;
  Matrix sum(direct.rows(), direct.cols());
  for (int l = 1; l <= 3; ++l)
    for (int k = 1; k <= 3; ++k) {
      Rational c = a.evaluate(mod.points()[static_cast<std::size_t>(l - 1)]) *
                   b.evaluate(mod.points()[static_cast<std::size_t>(k - 1)]);
      if (!c.is_zero()) sum += c * omega_lk(mod, l, k, Domain::whole_module()).mat;
    }
  CHECK(direct == sum);
}

TEST_CASE("omega vanishes on the ideal of the points") {
  EvaluationModule mod = sl2_module({1, 1}, {R(1), R(2)});
  // (t-1)(t-2) vanishes at both points.
  LaurentPoly ideal_elem = LaurentPoly::parse("1*t^2+-3*t^1+2*t^0");
  LaurentPoly b = LaurentPoly::parse("1*t^1");
  CHECK(omega_matrix(mod, OmegaSpec{ideal_elem, b}, Domain::whole_module()).mat.is_zero());
  CHECK(omega_matrix(mod, OmegaSpec{b, ideal_elem}, Domain::whole_module()).mat.is_zero());
}

TEST_CASE("omega of a pair of idempotent sums is the pair casimir") {
  EvaluationModule mod = sl2_module({1, 2, 1}, {R(1), R(2), R(3)});
  const auto& p = mod.idempotents().idempotents;
  LaurentPoly pij = p[0] + p[1];
  Matrix omega_pair = omega_matrix(mod, OmegaSpec{pij, pij}, Domain::whole_module()).mat;
  CHECK(omega_pair == pair_casimir_oracle(mod, {0, 1}));
}

TEST_CASE("omega preserves weight spaces") {
  EvaluationModule mod = sl2_module({1, 1, 1}, {R(1), R(2), R(3)});
  for (const Weight& mu : {Weight{R(1)}, Weight{R(-1)}, Weight{R(3)}}) {
    OperatorMatrix op = omega_lk(mod, 1, 3, Domain::weight(mu));
    CHECK(op.mat.rows() == mod.weight_space(mu).dim());
  }
}

TEST_CASE("hw pair eigenvalue for the two-factor module") {
  // Casimir split forces Omega(1,2) z = ((lam,lam) - m_1 - m_2) z for the
  // two-factor highest weight pair; frozen instance: eigenvalue -3/2.
  EvaluationModule mod = sl2_module({1, 1}, {R(1), R(2)});
  ModuleVector z = mod.hw_pair(0, 1, 0);
  OmegaSpec spec = omega_lk_spec(mod, 1, 2);
  CHECK(apply_omega(mod, spec, z) == R(-3, 2) * z);
  // Consistency: Omega(P1+P2, P1+P2) kills z (trivial component Casimir),
  // and the per-slot terms contribute 3/2 each.
  const auto& p = mod.idempotents().idempotents;
  LaurentPoly sum = p[0] + p[1];
  CHECK(apply_omega(mod, OmegaSpec{sum, sum}, z).is_zero());
  CHECK(apply_omega(mod, omega_lk_spec(mod, 1, 1), z) == R(3, 2) * z);
  CHECK(apply_omega(mod, omega_lk_spec(mod, 2, 2), z) == R(3, 2) * z);
}

TEST_CASE("gelfand invariants on the natural gl module") {
  EvaluationModule mod = gl_module(2, {{R(1), R(0)}}, {R(1)});
  const auto& p1 = mod.idempotents().idempotents[0];
  SUBCASE("T_1(1) is the identity") {
    GelfandSpec spec{1, {LaurentPoly::one()}, GelfandFamily::general_linear};
    OperatorMatrix op = gelfand_matrix(mod, spec, Domain::whole_module());
    CHECK(op.mat == Matrix::identity(2));
  }
  SUBCASE("T_2(1,1) is N times the identity") {
    GelfandSpec spec{2, {LaurentPoly::one(), LaurentPoly::one()}, GelfandFamily::general_linear};
    OperatorMatrix op = gelfand_matrix(mod, spec, Domain::whole_module());
    CHECK(op.mat == R(2) * Matrix::identity(2));
  }
  SUBCASE("T_1(P_1) acts as the identity sum in slot one") {
    GelfandSpec spec{1, {p1}, GelfandFamily::general_linear};
    OperatorMatrix op = gelfand_matrix(mod, spec, Domain::whole_module());
    CHECK(op.mat == Matrix::identity(2));
  }
}

TEST_CASE("T_1(P_1) acts only in the first slot of a pair") {
  EvaluationModule mod = gl_module(2, {{R(1), R(0)}, {R(1), R(0)}}, {R(1), R(2)});
  GelfandSpec spec{1, {mod.idempotents().idempotents[0]}, GelfandFamily::general_linear};
  std::mt19937 rng(31);
  const LieAlgebraData& g = mod.algebra();
  for (int t = 0; t < 5; ++t) {
    ModuleVector v = random_vector(mod, rng);
    // sum_i E_ii in slot 1 is the identity there.
    ModuleVector expect = v;
    GelfandOperator op(mod, spec);
    CHECK(op.apply(v) == expect);
  }
  // A non-scalar instance: T_2(P_1, P_2) moves entries across slots.
  GelfandSpec t2{2,
                 {mod.idempotents().idempotents[0], mod.idempotents().idempotents[1]},
                 GelfandFamily::general_linear};
  OperatorMatrix op2 = gelfand_matrix(mod, t2, Domain::whole_module());
  CHECK(!op2.mat.is_zero());
  (void)g;
}

TEST_CASE("centrality of omega and gelfand operators") {
  SUBCASE("omega on an sl2 pair") {
    EvaluationModule mod = sl2_module({1, 1}, {R(1), R(2)});
    OperatorMatrix op = omega_lk(mod, 1, 2, Domain::whole_module());
    CentralityReport rep = centrality_check(op, mod);
    CHECK(rep.central);
    CHECK(rep.max_abs_entry == R(0));
    CHECK(rep.max_abs_numerator == "0");
  }
  SUBCASE("T_2 on a gl2 pair") {
    EvaluationModule mod = gl_module(2, {{R(1), R(0)}, {R(1), R(0)}}, {R(1), R(2)});
    GelfandSpec spec{2,
                     {mod.idempotents().idempotents[0], mod.idempotents().idempotents[1]},
                     GelfandFamily::general_linear};
    OperatorMatrix op = gelfand_matrix(mod, spec, Domain::whole_module());
    CHECK(centrality_check(op, mod).central);
  }
  SUBCASE("the identity operator is central") {
    EvaluationModule mod = sl2_module({1, 1}, {R(1), R(2)});
    OperatorMatrix op{"identity", Domain::whole_module(),
                      Matrix::identity(static_cast<std::size_t>(mod.dim()))};
    CHECK(centrality_check(op, mod).central);
  }
  SUBCASE("a deliberately broken operator is flagged") {
    EvaluationModule mod = sl2_module({1, 1}, {R(1), R(2)});
    Matrix bad(static_cast<std::size_t>(mod.dim()), static_cast<std::size_t>(mod.dim()));
    bad.at(0, 1) = R(7);
    OperatorMatrix op{"bad", Domain::whole_module(), bad};
    CentralityReport rep = centrality_check(op, mod);
    CHECK(!rep.central);
    CHECK(rep.max_abs_entry > R(0));
  }
}

TEST_CASE("gelfand adjoint identity under the contravariant form") {
  EvaluationModule mod = gl_module(2, {{R(1), R(0)}, {R(1), R(0)}}, {R(1), R(2)});
  const auto& p = mod.idempotents().idempotents;
  std::mt19937 rng(77);
  std::vector<GelfandSpec> specs{
      {1, {p[0]}, GelfandFamily::general_linear},
      {2, {p[0], p[1]}, GelfandFamily::general_linear},
      {3, {p[1], LaurentPoly::parse("1*t^1"), p[0]}, GelfandFamily::general_linear},
  };
  for (const auto& spec : specs) {
    GelfandSpec reversed = spec;
    std::reverse(reversed.coeffs.begin(), reversed.coeffs.end());
    GelfandOperator fwd(mod, spec), rev(mod, reversed);
    for (int t = 0; t < 8; ++t) {
      ModuleVector u = random_vector(mod, rng);
      ModuleVector w = random_vector(mod, rng);
      CHECK(mod.form(fwd.apply(u), w) == mod.form(u, rev.apply(w)));
    }
  }
}

TEST_CASE("gelfand term budget is enforced") {
  EvaluationModule mod = gl_module(2, {{R(1), R(0)}}, {R(1)});
  GelfandSpec spec{3,
                   {LaurentPoly::one(), LaurentPoly::one(), LaurentPoly::one()},
                   GelfandFamily::general_linear};
  CHECK_THROWS_AS(gelfand_matrix(mod, spec, Domain::whole_module(), 4), BudgetExceeded);
  CHECK_NOTHROW(gelfand_matrix(mod, spec, Domain::whole_module(), 8));
}

TEST_CASE("family and algebra must match") {
  EvaluationModule mod = sl2_module({1}, {R(1)});
  GelfandSpec spec{1, {LaurentPoly::one()}, GelfandFamily::general_linear};
  CHECK_THROWS_AS(gelfand_matrix(mod, spec, Domain::whole_module()), std::invalid_argument);
}

TEST_CASE("operator spec text forms parse") {
  EvaluationModule mod = sl2_module({1, 1}, {R(1), R(2)});
  const IdempotentBasis& basis = mod.idempotents();
  ParsedOperator a = parse_operator_spec("omega_lk(1,2)", basis);
  REQUIRE(a.omega.has_value());
  CHECK(a.omega->a == basis.idempotents[0]);
  CHECK(a.omega->b == basis.idempotents[1]);
  ParsedOperator b = parse_operator_spec("omega(a=2-t, b=P2)", basis);
  REQUIRE(b.omega.has_value());
  CHECK(b.omega->a == LaurentPoly::parse("2-t"));
  CHECK(b.omega->b == basis.idempotents[1]);
  ParsedOperator c = parse_operator_spec("T(2; P1, P2)", basis);
  REQUIRE(c.gelfand.has_value());
  CHECK(c.gelfand->k == 2);
  CHECK(c.gelfand->family == GelfandFamily::general_linear);
  ParsedOperator d = parse_operator_spec("S(1; 1*t^0)", basis);
  REQUIRE(d.gelfand.has_value());
  CHECK(d.gelfand->family == GelfandFamily::ortho_symplectic);
  CHECK_THROWS_AS(parse_operator_spec("omega_lk(0,1)", basis), std::invalid_argument);
  CHECK_THROWS_AS(parse_operator_spec("T(2; P1)", basis), std::invalid_argument);
  CHECK_THROWS_AS(parse_operator_spec("nonsense(1)", basis), std::invalid_argument);
}

TEST_CASE("S_2 centrality on an so3 pair module") {
  auto g = std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::so, 3));
  std::vector<Representation> factors{irrep_from_tensor_power(g, Weight{R(1)}),
                                      irrep_from_tensor_power(g, Weight{R(1)})};
  EvaluationModule mod(g, std::move(factors), EvaluationPoints({R(1), R(2)}));
  const auto& p = mod.idempotents().idempotents;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      GelfandSpec spec{2,
                       {p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]},
                       GelfandFamily::ortho_symplectic};
      OperatorMatrix op = gelfand_matrix(mod, spec, Domain::whole_module());
      CHECK(centrality_check(op, mod).central);
    }
}
