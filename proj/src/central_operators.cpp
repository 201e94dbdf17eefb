#include "casimir/central_operators.hpp"

#include <sstream>
#include <stdexcept>

namespace casimir {

std::string OmegaSpec::str() const { return "omega(a=" + a.str() + ", b=" + b.str() + ")"; }

std::string GelfandSpec::str() const {
  std::ostringstream os;
  os << (family == GelfandFamily::general_linear ? "T(" : "S(") << k << ";";
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : " ") << coeffs[i].str();
  os << ")";
  return os.str();
}

std::string Domain::str() const {
  if (whole) return "whole";
  std::ostringstream os;
  os << "weight(";
  for (std::size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i].str();
  os << ")";
  return os.str();
}

ModuleVector apply_omega(const EvaluationModule& mod, const OmegaSpec& spec,
                         const ModuleVector& v) {
  const LieAlgebraData& g = mod.algebra();
  std::size_t n = mod.n_factors();
  std::vector<Rational> va(n), vb(n);
  for (std::size_t s = 0; s < n; ++s) {
    va[s] = spec.a.evaluate(mod.points()[s]);
    vb[s] = spec.b.evaluate(mod.points()[s]);
  }

  ModuleVector out;
  for (std::size_t l = 0; l < n; ++l) {
    Rational c = Rational(2) * va[l] * vb[l];
    if (!c.is_zero()) out += c * mod.act_in_slot(l, mod.factor_rho(l), v);
  }
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < n; ++k) {
      Rational c_cartan = va[l] * vb[k];
      if (!c_cartan.is_zero())
        for (std::size_t i = 0; i < g.rank(); ++i)
          out += c_cartan * mod.act_in_slot(l, mod.factor_u_dual(l, i),
                                            mod.act_in_slot(k, mod.factor_u(k, i), v));
      Rational c_root = va[l] * vb[k] + vb[l] * va[k];
      if (!c_root.is_zero())
        for (std::size_t root = 0; root < g.positive_roots.size(); ++root)
          for (std::size_t j = 0; j < g.positive_roots[root].raising.size(); ++j) {
            ModuleVector raised = mod.act_in_slot(k, mod.factor_raise(k, root, j), v);
            if (raised.is_zero()) continue;
            out += c_root * mod.act_in_slot(l, mod.factor_lower_dual(l, root, j), raised);
          }
    }
  return out;
}

GelfandOperator::GelfandOperator(const EvaluationModule& mod, GelfandSpec spec,
                                 std::uint64_t budget)
    : mod_(mod), spec_(std::move(spec)) {
  const LieAlgebraData& g = mod.algebra();
  if (spec_.family == GelfandFamily::general_linear && g.kind != AlgebraKind::gl)
    throw std::invalid_argument("T_k requires a gl algebra, got " + g.name());
  if (spec_.family == GelfandFamily::ortho_symplectic &&
      !(g.kind == AlgebraKind::so || g.kind == AlgebraKind::sp))
    throw std::invalid_argument("S_k requires an so/sp algebra, got " + g.name());
  if (spec_.k < 1) throw std::invalid_argument("Gelfand operator: k must be positive");
  if (static_cast<int>(spec_.coeffs.size()) != spec_.k)
    throw std::invalid_argument("Gelfand operator: expected k coefficient polynomials");

  int n = g.matrix_size;
  std::uint64_t terms = 1;
  for (int i = 0; i < spec_.k; ++i) {
    terms *= static_cast<std::uint64_t>(n);
    if (terms > budget) {
      std::ostringstream os;
      os << "Gelfand operator: N^k = " << n << "^" << spec_.k << " exceeds the term budget "
         << budget;
      throw BudgetExceeded(os.str());
    }
  }

  if (spec_.family == GelfandFamily::general_linear) {
    for (int i = 1; i <= n; ++i) indices_.push_back(i);
  } else {
    indices_ = f_generators(g.kind, n).indices;
  }

  // Per-slot action of every E_{ij} (or F_{ij}).
  std::size_t nn = indices_.size();
  element_zero_.assign(nn * nn, false);
  FGenerators fg;
  if (spec_.family == GelfandFamily::ortho_symplectic) fg = f_generators(g.kind, n);
  for (std::size_t slot = 0; slot < mod.n_factors(); ++slot) {
    std::vector<Matrix> acts(nn * nn);
    for (std::size_t a = 0; a < nn; ++a)
      for (std::size_t b = 0; b < nn; ++b) {
        if (spec_.family == GelfandFamily::general_linear) {
          Matrix e = Matrix::unit(static_cast<std::size_t>(n), static_cast<std::size_t>(n),
                                  static_cast<std::size_t>(indices_[a] - 1),
                                  static_cast<std::size_t>(indices_[b] - 1));
          acts[a * nn + b] = mod.factor(slot).action_of_matrix(e);
        } else {
          const Matrix& f = fg.f(indices_[a], indices_[b]);
          if (f.is_zero()) {
            element_zero_[a * nn + b] = true;
            acts[a * nn + b] = Matrix(mod.factor(slot).dim, mod.factor(slot).dim);
          } else {
            acts[a * nn + b] = mod.factor(slot).action_of_matrix(f);
          }
        }
      }
    actions_.push_back(std::move(acts));
  }

  for (const auto& p : spec_.coeffs) {
    std::vector<Rational> at_points;
    for (std::size_t s = 0; s < mod.n_factors(); ++s)
      at_points.push_back(p.evaluate(mod.points()[s]));
    coeff_at_point_.push_back(std::move(at_points));
  }
}

ModuleVector GelfandOperator::apply(const ModuleVector& v) const {
  std::size_t nn = indices_.size();
  int k = spec_.k;
  std::vector<std::size_t> cycle(static_cast<std::size_t>(k), 0);
  ModuleVector out;
  while (true) {
    // Product E_{i1 i2}(b_1) ... E_{ik i1}(b_k) applied right to left.
    bool skip = false;
    for (int r = 0; r < k && !skip; ++r) {
      std::size_t a = cycle[static_cast<std::size_t>(r)];
      std::size_t b = cycle[static_cast<std::size_t>((r + 1) % k)];
      if (element_zero_[a * nn + b]) skip = true;
    }
    if (!skip) {
      ModuleVector w = v;
      for (int r = k - 1; r >= 0 && !w.is_zero(); --r) {
        std::size_t a = cycle[static_cast<std::size_t>(r)];
        std::size_t b = cycle[static_cast<std::size_t>((r + 1) % k)];
        ModuleVector next;
        for (std::size_t slot = 0; slot < mod_.n_factors(); ++slot) {
          const Rational& c = coeff_at_point_[static_cast<std::size_t>(r)][slot];
          if (c.is_zero()) continue;
          next += c * mod_.act_in_slot(slot, actions_[slot][a * nn + b], w);
        }
        w = std::move(next);
      }
      out += w;
    }
    // Odometer over index tuples.
    int pos = k - 1;
    while (pos >= 0) {
      if (++cycle[static_cast<std::size_t>(pos)] < nn) break;
      cycle[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

ModuleVector apply_gelfand(const EvaluationModule& mod, const GelfandSpec& spec,
                           const ModuleVector& v, std::uint64_t budget) {
  return GelfandOperator(mod, spec, budget).apply(v);
}

OperatorMatrix materialize(const EvaluationModule& mod,
                           const std::function<ModuleVector(const ModuleVector&)>& op,
                           const Domain& domain, const std::string& spec_text) {
  OperatorMatrix out;
  out.spec_text = spec_text;
  out.domain = domain;
  if (domain.whole) {
    std::size_t d = static_cast<std::size_t>(mod.dim());
    out.mat = Matrix(d, d);
    for (std::size_t col = 0; col < d; ++col) {
      ModuleVector img = op(ModuleVector::unit(col));
      for (const auto& [idx, c] : img.terms()) out.mat.at(static_cast<std::size_t>(idx), col) = c;
    }
  } else {
    const WeightSpace& ws = mod.weight_space(domain.mu);
    out.mat = Matrix(ws.dim(), ws.dim());
    for (std::size_t col = 0; col < ws.dim(); ++col) {
      ModuleVector img = op(ModuleVector::unit(ws.tuples[col]));
      Vec coords;
      try {
        coords = ws.coords_of(img);
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument(spec_text +
                                    ": image leaves the weight space (domain/weight mismatch)");
      }
      for (std::size_t row = 0; row < ws.dim(); ++row) out.mat.at(row, col) = coords[row];
    }
  }
  return out;
}

OperatorMatrix omega_matrix(const EvaluationModule& mod, const OmegaSpec& spec,
                            const Domain& domain) {
  return materialize(
      mod, [&](const ModuleVector& v) { return apply_omega(mod, spec, v); }, domain, spec.str());
}

OmegaSpec omega_lk_spec(const EvaluationModule& mod, int l, int k) {
  int n = static_cast<int>(mod.n_factors());
  if (l < 1 || l > n || k < 1 || k > n)
    throw std::invalid_argument("omega_lk: slot index out of range");
  return OmegaSpec{mod.idempotents().idempotents[static_cast<std::size_t>(l - 1)],
                   mod.idempotents().idempotents[static_cast<std::size_t>(k - 1)]};
}

OperatorMatrix omega_lk(const EvaluationModule& mod, int l, int k, const Domain& domain) {
  OmegaSpec spec = omega_lk_spec(mod, l, k);
  OperatorMatrix out = omega_matrix(mod, spec, domain);
  std::ostringstream os;
  os << "omega_lk(" << l << "," << k << ")";
  out.spec_text = os.str();
  return out;
}

OperatorMatrix gelfand_matrix(const EvaluationModule& mod, const GelfandSpec& spec,
                              const Domain& domain, std::uint64_t budget) {
  GelfandOperator op(mod, spec, budget);
  return materialize(
      mod, [&](const ModuleVector& v) { return op.apply(v); }, domain, spec.str());
}

Matrix diag_action_matrix(const EvaluationModule& mod, std::size_t algebra_idx) {
  std::size_t d = static_cast<std::size_t>(mod.dim());
  Matrix out(d, d);
  for (std::size_t col = 0; col < d; ++col) {
    ModuleVector img = mod.act_diag(algebra_idx, ModuleVector::unit(col));
    for (const auto& [idx, c] : img.terms()) out.at(static_cast<std::size_t>(idx), col) = c;
  }
  return out;
}

CentralityReport centrality_check(const OperatorMatrix& op, const EvaluationModule& mod) {
  if (!op.domain.whole)
    throw std::invalid_argument(
        "centrality_check: domain must be the whole module (closed under the diagonal action)");
  CentralityReport report;
  report.max_abs_numerator = "0";
  const LieAlgebraData& g = mod.algebra();
  mpz_class worst_num = 0;
  for (std::size_t b = 0; b < g.dim(); ++b) {
    Matrix comm = commutator(op.mat, diag_action_matrix(mod, b));
    if (comm.is_zero()) continue;
    report.central = false;
    for (std::size_t i = 0; i < comm.rows(); ++i)
      for (std::size_t j = 0; j < comm.cols(); ++j) {
        Rational a = comm.at(i, j).abs();
        if (a > report.max_abs_entry) report.max_abs_entry = a;
        mpz_class nm = abs(comm.at(i, j).num());
        if (nm > worst_num) {
          worst_num = nm;
          report.worst_generator = g.labels[b];
        }
      }
  }
  report.max_abs_numerator = worst_num.get_str();
  return report;
}

namespace {

LaurentPoly parse_poly_arg(const std::string& text, const IdempotentBasis& basis) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() >= 2 && (s[0] == 'P' || s[0] == 'p')) {
    bool digits = true;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) digits = false;
    if (digits) {
      std::size_t i = static_cast<std::size_t>(std::stoul(s.substr(1)));
      if (i < 1 || i > basis.points.size())
        throw std::invalid_argument("operator spec: idempotent index " + s + " out of range");
      return basis.idempotents[i - 1];
    }
  }
  return LaurentPoly::parse(s);
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

ParsedOperator parse_operator_spec(const std::string& text, const IdempotentBasis& basis) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  ParsedOperator out;
  out.text = s;
  auto body_of = [&](std::size_t head_len) {
    if (s.back() != ')') throw std::invalid_argument("operator spec: missing ')' in '" + text + "'");
    return s.substr(head_len, s.size() - head_len - 1);
  };
  if (s.rfind("omega_lk(", 0) == 0) {
    auto parts = split_top_level(body_of(9), ',');
    if (parts.size() != 2) throw std::invalid_argument("omega_lk: expected two indices");
    int l = std::stoi(parts[0]);
    int k = std::stoi(parts[1]);
    int n = static_cast<int>(basis.points.size());
    if (l < 1 || l > n || k < 1 || k > n)
      throw std::invalid_argument("omega_lk: slot index out of range");
    out.omega = OmegaSpec{basis.idempotents[static_cast<std::size_t>(l - 1)],
                          basis.idempotents[static_cast<std::size_t>(k - 1)]};
    return out;
  }
  if (s.rfind("omega(", 0) == 0) {
    auto parts = split_top_level(body_of(6), ',');
    if (parts.size() != 2) throw std::invalid_argument("omega: expected a= and b= arguments");
    OmegaSpec spec;
    for (const auto& part : parts) {
      if (part.rfind("a=", 0) == 0)
        spec.a = parse_poly_arg(part.substr(2), basis);
      else if (part.rfind("b=", 0) == 0)
        spec.b = parse_poly_arg(part.substr(2), basis);
      else
        throw std::invalid_argument("omega: arguments must be a=<poly>, b=<poly>");
    }
    out.omega = spec;
    return out;
  }
  if (s.rfind("T(", 0) == 0 || s.rfind("S(", 0) == 0) {
    GelfandSpec spec;
    spec.family =
        s[0] == 'T' ? GelfandFamily::general_linear : GelfandFamily::ortho_symplectic;
    auto semi = split_top_level(body_of(2), ';');
    if (semi.size() != 2)
      throw std::invalid_argument("operator spec: expected '(k; b1,...,bk)' in '" + text + "'");
    spec.k = std::stoi(semi[0]);
    for (const auto& arg : split_top_level(semi[1], ','))
      spec.coeffs.push_back(parse_poly_arg(arg, basis));
    if (static_cast<int>(spec.coeffs.size()) != spec.k)
      throw std::invalid_argument("operator spec: expected exactly k polynomials");
    out.gelfand = spec;
    return out;
  }
  throw std::invalid_argument("operator spec: unrecognized form '" + text + "'");
}

}  // namespace casimir
