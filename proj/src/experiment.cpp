#include "casimir/experiment.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace casimir {

namespace {

using Json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Splits on whitespace outside parentheses.
std::vector<std::string> split_items(const std::string& s) {
  std::vector<std::string> items;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (std::isspace(static_cast<unsigned char>(c)) || c == ',')) {
      if (!cur.empty()) items.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) items.push_back(cur);
  return items;
}

Weight parse_weight_tuple(const std::string& text, const std::string& key) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ConfigError(key, "expected a parenthesized tuple, got '" + text + "'");
  Weight w;
  std::string body = s.substr(1, s.size() - 2);
  std::string cur;
  for (char c : body + ",") {
    if (c == ',') {
      if (trim(cur).empty()) throw ConfigError(key, "empty tuple entry in '" + text + "'");
      try {
        w.push_back(Rational::parse(trim(cur)));
      } catch (const std::exception& e) {
        throw ConfigError(key, e.what());
      }
      cur.clear();
    } else {
      cur += c;
    }
  }
  return w;
}

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].str();
  return s + ")";
}

long to_long(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    long out = std::stol(trim(v), &pos);
    if (pos != trim(v).size()) throw std::invalid_argument("trailing characters");
    return out;
  } catch (const std::exception&) {
    throw ConfigError(key, "expected an integer, got '" + v + "'");
  }
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "experiment") {
      cfg.experiment = value;
    } else if (key == "algebra") {
      try {
        auto [kind, n] = parse_algebra_name(value);
        cfg.kind = kind;
        cfg.N = n;
      } catch (const std::exception& e) {
        throw ConfigError(key, e.what());
      }
    } else if (key == "weights") {
      for (const auto& item : split_items(value))
        cfg.factor_weights.push_back(parse_weight_tuple(item, key));
    } else if (key == "points") {
      for (const auto& item : split_items(value)) {
        try {
          cfg.points.push_back(Rational::parse(item));
        } catch (const std::exception& e) {
          throw ConfigError(key, e.what());
        }
      }
    } else if (key == "operators") {
      for (const auto& item : split_items(value)) cfg.operator_specs.push_back(item);
    } else if (key == "weight") {
      cfg.weight_sel = parse_weight_tuple(value, key);
    } else if (key == "simple_root") {
      cfg.simple_root = static_cast<int>(to_long(value, key));
    } else if (key == "format") {
      if (value != "json" && value != "table")
        throw ConfigError(key, "expected 'json' or 'table'");
      cfg.format = value;
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "max_terms") {
      cfg.max_terms = static_cast<std::uint64_t>(to_long(value, key));
    } else if (key == "d_max") {
      cfg.d_max = static_cast<int>(to_long(value, key));
    } else if (key == "r_max") {
      cfg.r_max = static_cast<int>(to_long(value, key));
    } else if (key == "m") {
      cfg.m = static_cast<int>(to_long(value, key));
    } else if (key == "n") {
      cfg.n = static_cast<int>(to_long(value, key));
    } else if (key == "k") {
      cfg.k = static_cast<int>(to_long(value, key));
    } else if (key == "seed") {
      cfg.seed = value;
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  return cfg;
}

namespace {

struct ModuleBundle {
  std::shared_ptr<const LieAlgebraData> algebra;
  std::unique_ptr<EvaluationModule> mod;
};

ModuleBundle build_module(const ExperimentConfig& cfg) {
  ModuleBundle b;
  try {
    b.algebra = std::make_shared<LieAlgebraData>(build_algebra(cfg.kind, cfg.N));
  } catch (const std::exception& e) {
    throw ConfigError("algebra", e.what());
  }
  if (cfg.factor_weights.empty()) throw ConfigError("weights", "at least one factor required");
  if (cfg.factor_weights.size() != cfg.points.size())
    throw ConfigError("points", "point count must equal the factor count");
  std::vector<Representation> factors;
  for (const auto& w : cfg.factor_weights) {
    if (w.size() != b.algebra->rank())
      throw ConfigError("weights", "weight " + weight_str(w) + " has wrong rank for " +
                                       b.algebra->name());
    try {
      if (cfg.kind == AlgebraKind::sl2) {
        if (!w[0].is_integer() || w[0].sign() < 0)
          throw std::invalid_argument("sl2 weights are nonnegative integers");
        factors.push_back(sl2_irrep(b.algebra, static_cast<int>(w[0].num().get_si())));
      } else {
        factors.push_back(irrep_from_tensor_power(b.algebra, w, cfg.d_max));
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError("weights", e.what());
    }
  }
  try {
    b.mod = std::make_unique<EvaluationModule>(b.algebra, std::move(factors),
                                               EvaluationPoints(cfg.points));
  } catch (const std::exception& e) {
    throw ConfigError("points", e.what());
  }
  return b;
}

std::vector<std::pair<std::string, OperatorMatrix>> materialize_operators(
    const EvaluationModule& mod, const ExperimentConfig& cfg, const Domain& domain) {
  std::vector<std::pair<std::string, OperatorMatrix>> ops;
  std::vector<std::string> specs = cfg.operator_specs;
  if (specs.empty()) {
    int n = static_cast<int>(mod.n_factors());
    for (int l = 1; l <= n; ++l)
      for (int k = 1; k <= n; ++k) {
        std::ostringstream os;
        os << "omega_lk(" << l << "," << k << ")";
        specs.push_back(os.str());
      }
  }
  for (const auto& text : specs) {
    ParsedOperator parsed = parse_operator_spec(text, mod.idempotents());
    if (parsed.omega) {
      OperatorMatrix op = omega_matrix(mod, *parsed.omega, domain);
      op.spec_text = parsed.text;
      ops.emplace_back(parsed.text, std::move(op));
    } else {
      OperatorMatrix op = gelfand_matrix(mod, *parsed.gelfand, domain, cfg.max_terms);
      op.spec_text = parsed.text;
      ops.emplace_back(parsed.text, std::move(op));
    }
  }
  return ops;
}

// All weights occurring in the module, in deterministic order.
std::vector<Weight> all_weights(const EvaluationModule& mod) {
  std::map<Weight, bool> seen;
  for (std::uint64_t i = 0; i < mod.dim(); ++i) seen[mod.weight_of(i)] = true;
  std::vector<Weight> out;
  for (const auto& [w, _] : seen) out.push_back(w);
  return out;
}

std::string poly_str(const std::vector<Rational>& coeffs) {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i ? "," : "") + coeffs[i].str();
  return s + "]";
}

struct Renderer {
  const ExperimentConfig& cfg;
  Json json;
  std::ostringstream table;

  explicit Renderer(const ExperimentConfig& c, const std::string& module_desc) : cfg(c) {
    json["schema"] = "casimir-lab/1";
    json["experiment"] = c.experiment;
    if (!module_desc.empty()) {
      json["module"] = module_desc;
      table << "module: " << module_desc << "\n";
    }
    json["results"] = Json::array();
  }

  std::string finish(bool pass, const std::string& status = "") {
    std::string st = !status.empty() ? status : (pass ? "pass" : "fail");
    json["status"] = st;
    table << "status: " << st << "\n";
    if (cfg.format == "json") return json.dump(2) + "\n";
    return table.str();
  }
};

int run_verify_centrality(const ExperimentConfig& cfg, ModuleBundle& b, Renderer& r) {
  auto ops = materialize_operators(*b.mod, cfg, Domain::whole_module());
  bool all_ok = true;
  for (const auto& [name, op] : ops) {
    CentralityReport rep = centrality_check(op, *b.mod);
    all_ok = all_ok && rep.central;
    Json item;
    item["operator"] = name;
    item["central"] = rep.central;
    item["max_abs_entry"] = rep.max_abs_entry.str();
    item["max_abs_numerator"] = rep.max_abs_numerator;
    if (!rep.central) item["worst_generator"] = rep.worst_generator;
    r.json["results"].push_back(item);
    r.table << name << ": central=" << (rep.central ? "yes" : "NO")
            << " max|entry|=" << rep.max_abs_entry.str() << "\n";
  }
  r.json["module_dim"] = b.mod->dim();
  return all_ok ? 0 : 1;
}

int run_hwv_dims(const ExperimentConfig& cfg, ModuleBundle& b, Renderer& r) {
  std::vector<Weight> weights =
      cfg.weight_sel ? std::vector<Weight>{*cfg.weight_sel} : all_weights(*b.mod);
  r.table << "weight  dim  hwv_dim\n";
  for (const auto& mu : weights) {
    std::size_t d = b.mod->weight_space(mu).dim();
    std::size_t h = b.mod->highest_weight_space(mu).size();
    Json item;
    item["weight"] = weight_str(mu);
    item["dim"] = d;
    item["hwv_dim"] = h;
    r.json["results"].push_back(item);
    r.table << weight_str(mu) << "  " << d << "  " << h << "\n";
  }
  return 0;
}

int run_orbit(const ExperimentConfig& cfg, ModuleBundle& b, Renderer& r) {
  std::size_t j = static_cast<std::size_t>(cfg.simple_root - 1);
  if (j >= b.algebra->simple_roots.size())
    throw ConfigError("simple_root", "index out of range");
  ModuleVector seed;
  std::string desc = cfg.seed.empty() ? "z(1,2)" : cfg.seed;
  auto parse_pair = [&](std::size_t head) {
    auto body = desc.substr(head, desc.size() - head - 1);
    auto comma = body.find(',');
    if (desc.back() != ')' || comma == std::string::npos)
      throw ConfigError("seed", "expected '" + desc.substr(0, head) + "k,l)'");
    std::size_t k = static_cast<std::size_t>(to_long(body.substr(0, comma), "seed"));
    std::size_t l = static_cast<std::size_t>(to_long(body.substr(comma + 1), "seed"));
    std::size_t n = b.mod->n_factors();
    if (k < 1 || l < 1 || k > n || l > n || k == l)
      throw ConfigError("seed", "slot indices out of range");
    return std::make_pair(k - 1, l - 1);
  };
  if (desc.rfind("z(", 0) == 0) {
    auto [k, l] = parse_pair(2);
    seed = b.mod->hw_pair(k, l, j);
  } else if (desc.rfind("A(", 0) == 0) {
    auto [k, l] = parse_pair(2);
    seed = b.mod->hw_double_pair(k, l, j);
  } else if (desc == "top") {
    seed = b.mod->top_vector();
  } else {
    throw ConfigError("seed", "expected z(k,l), A(k,l) or top");
  }
  if (seed.is_zero()) throw ConfigError("seed", "seed vector is zero in this module");
  Weight mu = b.mod->weight_of(seed.terms().begin()->first);
  const WeightSpace& target = b.mod->weight_space(mu);
  auto ops = materialize_operators(*b.mod, cfg, Domain::weight(mu));
  std::vector<OperatorMatrix> gens;
  for (auto& [name, op] : ops) gens.push_back(op);
  OrbitReport rep = operator_orbit(*b.mod, seed, gens, target, desc);

  Json item;
  item["seed"] = desc;
  item["weight"] = weight_str(mu);
  item["generators"] = rep.generator_specs;
  item["dims_per_round"] = rep.dims_per_round;
  item["span_dim"] = rep.span_basis.size();
  item["target_dim"] = rep.target_dim;
  item["hwv_dim"] = rep.hwv_dim;
  item["spans_hwv"] = rep.spans_hwv;
  item["spans_target"] = rep.spans_target;
  r.json["results"].push_back(item);
  r.table << "seed " << desc << " at weight " << weight_str(mu) << "\n";
  r.table << "rounds:";
  for (auto d : rep.dims_per_round) r.table << " " << d;
  r.table << "\nspan=" << rep.span_basis.size() << " hwv_dim=" << rep.hwv_dim
          << " target_dim=" << rep.target_dim << " spans_hwv=" << (rep.spans_hwv ? "yes" : "NO")
          << "\n";
  return rep.spans_hwv ? 0 : 1;
}

int run_cg_table(const ExperimentConfig& cfg, Renderer& r) {
  if (cfg.m < 0 || cfg.n < 0) throw ConfigError("m", "cg-table requires m and n");
  CGTable t = cg_decompose(cfg.m, cfg.n);
  Json item;
  item["m"] = t.m;
  item["n"] = t.n;
  item["components"] = t.components;
  r.json["results"].push_back(item);
  r.table << "V(" << t.m << ") (x) V(" << t.n << ") =";
  for (std::size_t i = 0; i < t.components.size(); ++i)
    r.table << (i ? " + V(" : " V(") << t.components[i] << ")";
  r.table << "\n";
  return 0;
}

int run_anti_diagonal(const ExperimentConfig& cfg, Renderer& r) {
  if (cfg.m < 0 || cfg.n < 0 || cfg.k < 0)
    throw ConfigError("m", "anti-diagonal requires m, n and k");
  AntiDiagonalReport rep = anti_diagonal_span(cfg.m, cfg.n, cfg.k);
  r.table << "row  d_l  orbit_rank  hwv_dim  d'_l  ok\n";
  for (const auto& row : rep.rows) {
    Json item;
    item["l"] = row.l;
    item["expected_independent"] = row.expected_independent;
    item["orbit_rank"] = row.orbit_rank;
    item["hwv_dim"] = row.hwv_dim;
    item["expected_hwv"] = row.expected_hwv;
    item["ok"] = row.ok;
    r.json["results"].push_back(item);
    r.table << row.l << "    " << row.expected_independent << "    " << row.orbit_rank
            << "           " << row.hwv_dim << "        " << row.expected_hwv << "     "
            << (row.ok ? "yes" : "NO") << "\n";
  }
  for (const auto& row : rep.tail_rows) {
    Json item;
    item["l"] = row.l;
    item["hwv_dim"] = row.hwv_dim;
    item["expected_hwv"] = row.expected_hwv;
    item["ok"] = row.ok;
    r.json["results"].push_back(item);
    r.table << row.l << "    -    -           " << row.hwv_dim << "        " << row.expected_hwv
            << "     " << (row.ok ? "yes" : "NO") << "\n";
  }
  Json z;
  z["z_orbit_rank"] = rep.z_orbit_rank;
  z["z_expected"] = rep.z_expected;
  z["z_ok"] = rep.z_ok;
  z["total_hwv"] = rep.total_hwv;
  z["expected_total"] = rep.expected_total;
  r.json["z_row"] = z;
  r.table << "z-orbit rank " << rep.z_orbit_rank << " (expected " << rep.z_expected << ")\n";
  r.table << "total hwv " << rep.total_hwv << " (expected " << rep.expected_total << ")\n";
  return rep.ok ? 0 : 1;
}

int run_gelfand_spectrum(const ExperimentConfig& cfg, ModuleBundle& b, Renderer& r) {
  if (cfg.operator_specs.empty())
    throw ConfigError("operators", "gelfand-spectrum requires operator specs");
  Domain domain = cfg.weight_sel ? Domain::weight(*cfg.weight_sel) : Domain::whole_module();
  auto ops = materialize_operators(*b.mod, cfg, domain);
  for (const auto& [name, op] : ops) {
    Json item;
    item["operator"] = name;
    item["domain"] = op.domain.str();
    item["dim"] = op.mat.rows();
    auto cp = charpoly(op.mat);
    item["charpoly"] = poly_str(cp);
    auto roots = rational_roots(cp);
    Json eig = Json::array();
    std::size_t total_mult = 0;
    for (const auto& theta : roots.roots) {
      Matrix shifted = op.mat;
      for (std::size_t i = 0; i < shifted.rows(); ++i) shifted.at(i, i) -= theta;
      std::size_t mult = shifted.rows() - rank(shifted);
      if (mult == 0) continue;
      total_mult += mult;
      Json e;
      e["value"] = theta.str();
      e["geometric_multiplicity"] = mult;
      eig.push_back(e);
    }
    item["rational_eigenvalues"] = eig;
    item["eigenvalue_search_complete"] = roots.complete;
    item["diagonalizable_over_Q"] = total_mult == op.mat.rows();
    r.json["results"].push_back(item);
    r.table << name << " on " << op.domain.str() << ": dim=" << op.mat.rows()
            << " charpoly=" << poly_str(cp) << "\n";
    for (const auto& e : eig)
      r.table << "  eigenvalue " << e["value"].get<std::string>() << " multiplicity "
              << e["geometric_multiplicity"].get<std::size_t>() << "\n";
  }
  return 0;
}

int run_t_decompose(const ExperimentConfig& cfg, ModuleBundle& b, Renderer& r) {
  int r_max = cfg.r_max > 0 ? cfg.r_max : b.algebra->matrix_size;
  auto gens = central_generator_set(*b.mod, r_max, cfg.max_terms);
  std::vector<Weight> weights =
      cfg.weight_sel ? std::vector<Weight>{*cfg.weight_sel} : all_weights(*b.mod);
  bool all_ok = true;
  std::uint64_t dim_account = 0;
  bool account_complete = true;
  for (const auto& mu : weights) {
    IsotypicReport rep = t_module_decompose(*b.mod, mu, gens);
    if (rep.hwv_dim == 0) continue;
    bool ok = rep.orthogonal_certified && rep.gram_positive_definite && rep.fills &&
              rep.invariant_certified;
    all_ok = all_ok && ok;
    Json item;
    item["weight"] = weight_str(mu);
    item["multiplicity"] = rep.hwv_dim;
    Json blocks = Json::array();
    std::vector<std::size_t> dims;
    for (const auto& block : rep.blocks) {
      Json bj;
      bj["dim"] = block.basis.size();
      bj["irreducible_certified"] = block.irreducible_certified;
      bj["note"] = block.note;
      blocks.push_back(bj);
      dims.push_back(block.basis.size());
    }
    item["blocks"] = blocks;
    item["orthogonal"] = rep.orthogonal_certified;
    item["gram_positive_definite"] = rep.gram_positive_definite;
    item["fills"] = rep.fills;
    item["invariant"] = rep.invariant_certified;
    // Isotypic accounting: multiplicity x dim of the irreducible.
    try {
      std::size_t irrep_dim;
      if (cfg.kind == AlgebraKind::sl2)
        irrep_dim = static_cast<std::size_t>(mu[0].num().get_si()) + 1;
      else
        irrep_dim = irrep_from_tensor_power(b.algebra, mu, cfg.d_max).dim;
      item["irrep_dim"] = irrep_dim;
      dim_account += static_cast<std::uint64_t>(rep.hwv_dim) * irrep_dim;
    } catch (const std::exception&) {
      item["irrep_dim"] = nullptr;
      account_complete = false;
    }
    r.json["results"].push_back(item);
    r.table << "weight " << weight_str(mu) << ": multiplicity " << rep.hwv_dim << ", blocks [";
    for (std::size_t i = 0; i < dims.size(); ++i) r.table << (i ? "," : "") << dims[i];
    r.table << "] orthogonal=" << (rep.orthogonal_certified ? "yes" : "NO")
            << " posdef=" << (rep.gram_positive_definite ? "yes" : "NO")
            << " fills=" << (rep.fills ? "yes" : "NO") << "\n";
  }
  if (account_complete) {
    all_ok = all_ok && dim_account == b.mod->dim();
    r.json["dimension_account"] = dim_account;
    r.json["module_dim"] = b.mod->dim();
    r.table << "dimension account: " << dim_account << " of " << b.mod->dim() << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg) {
  RunResult result;
  bool needs_module = cfg.experiment != "cg-table" && cfg.experiment != "anti-diagonal";
  try {
    std::optional<ModuleBundle> bundle;
    std::string module_desc;
    if (needs_module) {
      bundle = build_module(cfg);
      module_desc = bundle->mod->descriptor();
    }
    Renderer r(cfg, module_desc);
    int code;
    if (cfg.experiment == "verify-centrality")
      code = run_verify_centrality(cfg, *bundle, r);
    else if (cfg.experiment == "hwv-dims")
      code = run_hwv_dims(cfg, *bundle, r);
    else if (cfg.experiment == "orbit")
      code = run_orbit(cfg, *bundle, r);
    else if (cfg.experiment == "cg-table")
      code = run_cg_table(cfg, r);
    else if (cfg.experiment == "anti-diagonal")
      code = run_anti_diagonal(cfg, r);
    else if (cfg.experiment == "gelfand-spectrum")
      code = run_gelfand_spectrum(cfg, *bundle, r);
    else if (cfg.experiment == "t-decompose")
      code = run_t_decompose(cfg, *bundle, r);
    else
      throw ConfigError("experiment", "unknown experiment '" + cfg.experiment + "'");
    result.exit_code = code;
    result.output = r.finish(code == 0);
  } catch (const BudgetExceeded& e) {
    Renderer rb(cfg, "");
    rb.json["error"] = e.what();
    rb.table << "error: " << e.what() << "\n";
    result.output = rb.finish(false, "budget-exceeded");
    result.exit_code = 2;
  } catch (const ConfigError& e) {
    Renderer rb(cfg, "");
    rb.json["error"] = e.what();
    rb.json["key"] = e.key;
    rb.table << "error: " << e.what() << "\n";
    result.output = rb.finish(false, "usage-error");
    result.exit_code = 2;
  }
  return result;
}

}  // namespace casimir
