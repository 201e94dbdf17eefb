#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>

#include "casimir/representation.hpp"

using namespace casimir;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

// Independent dimension oracle for polynomial gl_N weights: counts
// semistandard tableaux of the partition shape with entries in 1..N
// (rows weakly increasing, columns strictly increasing).
long count_ssyt(const std::vector<int>& shape, int n) {
  std::vector<std::vector<int>> fill(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) fill[r].assign(shape[r], 0);
  std::function<long(std::size_t, int)> go = [&](std::size_t row, int col) -> long {
    if (row == shape.size()) return 1;
    std::size_t next_row = row;
    int next_col = col + 1;
    if (next_col >= shape[row]) {
      next_row = row + 1;
      next_col = 0;
    }
    long total = 0;
    int lo = 1;
    if (col > 0) lo = std::max(lo, fill[row][col - 1]);
    if (row > 0) lo = std::max(lo, fill[row - 1][col] + 1);
    for (int v = lo; v <= n; ++v) {
      fill[row][col] = v;
      total += go(next_row, next_col);
    }
    fill[row][col] = 0;
    return total;
  };
  if (shape.empty()) return 1;
  return go(0, 0);
}

// gl_N weight tuple (eigenvalues of E_11..E_NN) for a partition.
Weight gl_weight(const std::vector<int>& shape, int n) {
  Weight w(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < shape.size(); ++i) w[i] = R(shape[i]);
  return w;
}

void check_bracket_fidelity(const Representation& rep) {
  const LieAlgebraData& g = *rep.algebra;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      Matrix lhs = rep.action_of_matrix(commutator(g.basis[i], g.basis[j]));
      Matrix rhs = commutator(rep.action[i], rep.action[j]);
      CHECK(lhs == rhs);
    }
}

void check_weights_are_eigen(const Representation& rep) {
  const LieAlgebraData& g = *rep.algebra;
  for (std::size_t c = 0; c < g.rank(); ++c) {
    const Matrix& act = rep.action[g.cartan_indices[c]];
    for (std::size_t b = 0; b < rep.dim; ++b)
      for (std::size_t i = 0; i < rep.dim; ++i)
        CHECK(act.at(i, b) == (i == b ? rep.weights[b][c] : R(0)));
  }
}

void check_hw_annihilated(const Representation& rep) {
  const LieAlgebraData& g = *rep.algebra;
  for (const auto& space : g.positive_roots)
    for (std::size_t e : space.raising) CHECK(is_zero(rep.action[e].col(rep.hw_index)));
}

void check_contravariant(const Representation& rep) {
  const LieAlgebraData& g = *rep.algebra;
  const Matrix& s = rep.contravariant;
  CHECK(s.at(rep.hw_index, rep.hw_index) == R(1));
  CHECK(s == s.transpose());
  CHECK(positive_definite(s));
  for (std::size_t b = 0; b < g.dim(); ++b) {
    Matrix lhs = rep.action[b].transpose() * s;
    Matrix rhs = s * rep.action_of_matrix(g.basis[b].transpose());
    CHECK(lhs == rhs);
  }
}

void check_irreducible_by_cyclicity(const Representation& rep) {
  // The cyclic span of any basis vector under words in the action
  // matrices is the whole space.
  for (std::size_t seed = 0; seed < rep.dim; ++seed) {
    RowSpan span;
    Vec v(rep.dim);
    v[seed] = R(1);
    span.insert(v);
    std::vector<Vec> frontier{v};
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const auto& w : frontier)
        for (const auto& gmat : rep.action) {
          Vec img = gmat * w;
          if (span.insert(img)) next.push_back(std::move(img));
        }
      frontier = std::move(next);
    }
    CHECK(span.dim() == rep.dim);
  }
}

}  // namespace

TEST_CASE("sl2 irreducibles have the textbook matrices") {
  auto g = std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::sl2, 2));
  SUBCASE("m = 0 is the trivial module") {
    Representation rep = sl2_irrep(g, 0);
    CHECK(rep.dim == 1);
    for (const auto& a : rep.action) CHECK(a.is_zero());
  }
  SUBCASE("m = 1") {
    Representation rep = sl2_irrep(g, 1);
    CHECK(rep.dim == 2);
    CHECK(rep.action[g->index_of("h")] == Matrix{{R(1), R(0)}, {R(0), R(-1)}});
    // x (y v) = v.
    CHECK(rep.action[g->index_of("x")].col(1) == Vec{R(1), R(0)});
  }
  SUBCASE("m = 2") {
    Representation rep = sl2_irrep(g, 2);
    CHECK(rep.dim == 3);
    const Matrix& x = rep.action[g->index_of("x")];
    // x (y^2 v) = 2 y v.
    CHECK(x.col(2) == Vec{R(0), R(2), R(0)});
    CHECK(x.col(1) == Vec{R(2), R(0), R(0)});
  }
  SUBCASE("structure checks for m up to 4") {
    for (int m = 0; m <= 4; ++m) {
      Representation rep = sl2_irrep(g, m);
      CHECK(rep.dim == static_cast<std::size_t>(m) + 1);
      check_bracket_fidelity(rep);
      check_weights_are_eigen(rep);
      check_hw_annihilated(rep);
      check_contravariant(rep);
    }
  }
}

TEST_CASE("sl2 contravariant norms follow the lowering chain") {
  auto g = std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::sl2, 2));
  Representation rep = sl2_irrep(g, 1);
  // <y v, y v> = <v, x y v> = m <v, v> = 1 for m = 1.
  CHECK(rep.contravariant.at(1, 1) == R(1));
  Representation rep3 = sl2_irrep(g, 3);
  // <y^a v, y^a v> = a! m!/(m-a)!.
  CHECK(rep3.contravariant.at(1, 1) == R(3));
  CHECK(rep3.contravariant.at(2, 2) == R(12));
  CHECK(rep3.contravariant.at(3, 3) == R(36));
}

TEST_CASE("defining representation comes out at tensor power one") {
  auto g = std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::gl, 2));
  Representation rep = irrep_from_tensor_power(g, gl_weight({1}, 2));
  CHECK(rep.dim == 2);
  for (std::size_t b = 0; b < g->dim(); ++b) CHECK(rep.action[b] == g->basis[b]);
}

TEST_CASE("gl2 determinant representation") {
  auto g = std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::gl, 2));
  Representation rep = irrep_from_tensor_power(g, gl_weight({1, 1}, 2));
  CHECK(rep.dim == 1);
  CHECK(rep.action[g->index_of("E(1,1)")] == Matrix{{R(1)}});
  CHECK(rep.action[g->index_of("E(2,2)")] == Matrix{{R(1)}});
  CHECK(rep.action[g->index_of("E(1,2)")].is_zero());
}

TEST_CASE("weyl dimensions match the tableau count oracle") {
  for (auto [shape, n] : std::vector<std::pair<std::vector<int>, int>>{{{1}, 2},
                                                                       {{2}, 2},
                                                                       {{1, 1}, 2},
                                                                       {{2, 1}, 2},
                                                                       {{3, 1}, 2},
                                                                       {{1}, 3},
                                                                       {{1, 1}, 3},
                                                                       {{2}, 3},
                                                                       {{2, 1}, 3}}) {
    auto g = std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::gl, n));
    Representation rep = irrep_from_tensor_power(g, gl_weight(shape, n));
    CHECK(rep.dim == static_cast<std::size_t>(count_ssyt(shape, n)));
    check_bracket_fidelity(rep);
    check_weights_are_eigen(rep);
    check_hw_annihilated(rep);
    check_contravariant(rep);
  }
}

TEST_CASE("sl2 tensor square reproduces the spin-1 module") {
  auto g = std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::sl2, 2));
  Representation via_power = irrep_from_tensor_power(g, Weight{R(2)});
  Representation direct = sl2_irrep(g, 2);
  CHECK(via_power.dim == direct.dim);
  auto weights_of = [](const Representation& rep) {
    std::vector<Weight> w = rep.weights;
    std::sort(w.begin(), w.end());
    return w;
  };
  CHECK(weights_of(via_power) == weights_of(direct));
}

TEST_CASE("sl3 fundamental representations") {
  auto g = std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::sl, 3));
  Representation w1 = irrep_from_tensor_power(g, Weight{R(1), R(0)});
  Representation w2 = irrep_from_tensor_power(g, Weight{R(0), R(1)});
  CHECK(w1.dim == 3);
  CHECK(w2.dim == 3);
  check_bracket_fidelity(w2);
  check_hw_annihilated(w2);
  check_contravariant(w2);
  check_irreducible_by_cyclicity(w2);
}

TEST_CASE("so3 vector representation") {
  auto g = std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::so, 3));
  Representation rep = irrep_from_tensor_power(g, Weight{R(1)});
  CHECK(rep.dim == 3);
  check_bracket_fidelity(rep);
  check_hw_annihilated(rep);
  check_contravariant(rep);
  check_irreducible_by_cyclicity(rep);
}

TEST_CASE("unrealizable weights raise a bounded error") {
  auto g = std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::gl, 2));
  // Negative entries never appear in tensor powers of the defining module.
  CHECK_THROWS_WITH_AS(irrep_from_tensor_power(g, Weight{R(-1), R(0)}, 3),
                       doctest::Contains("unrealizable at this bound"), std::runtime_error);
}

TEST_CASE("weight spaces partition the basis") {
  auto g = std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::sl2, 2));
  Representation rep = sl2_irrep(g, 2);
  auto spaces = weight_spaces(rep);
  CHECK(spaces.size() == 3);
  CHECK(spaces[Weight{R(2)}].size() == 1);
  CHECK(spaces[Weight{R(0)}].size() == 1);
  CHECK(spaces[Weight{R(-2)}].size() == 1);
  Representation trivial = sl2_irrep(g, 0);
  auto tsp = weight_spaces(trivial);
  CHECK(tsp.size() == 1);
  CHECK(tsp[Weight{R(0)}].size() == 1);
}

TEST_CASE("irreducibility via cyclic spans at desk scale") {
  auto g = std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::sl2, 2));
  check_irreducible_by_cyclicity(sl2_irrep(g, 3));
  auto gl2 = std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::gl, 2));
  check_irreducible_by_cyclicity(irrep_from_tensor_power(gl2, gl_weight({2, 1}, 2)));
}

TEST_CASE("contravariance on random vectors") {
  auto g = std::make_shared<LieAlgebraData>(build_algebra(AlgebraKind::gl, 2));
  Representation rep = irrep_from_tensor_power(g, gl_weight({2}, 2));
  std::mt19937 rng(42);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    Vec u(rep.dim), w(rep.dim);
    for (std::size_t i = 0; i < rep.dim; ++i) {
      u[i] = R(c(rng));
      w[i] = R(c(rng));
    }
    for (std::size_t b = 0; b < g->dim(); ++b) {
      Rational lhs = dot(rep.action[b] * u, rep.contravariant * w);
      Rational rhs =
          dot(u, rep.contravariant * (rep.action_of_matrix(g->basis[b].transpose()) * w));
      CHECK(lhs == rhs);
    }
  }
}
