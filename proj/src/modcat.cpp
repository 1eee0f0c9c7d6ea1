#include "regcoal/modcat.hpp"

#include <algorithm>
#include <stdexcept>

namespace regcoal {

namespace {

std::string entry_name(long row, long col) { return "(" + std::to_string(row) + "," + std::to_string(col) + ")"; }

/// First entry where a and b differ as images (torsion rows modulo their order).
std::optional<std::pair<long, long>> first_difference(const FGModule& m, const MatrixQ& a, const MatrixQ& b) {
  for (long h = 0; h < a.rows(); ++h) {
    const auto ord = m.order(h);
    for (long g = 0; g < a.cols(); ++g) {
      const Rational diff = a(h, g) - b(h, g);
      if (diff == 0) continue;
      if (ord && is_p_local_integer(m.prime, diff / Rational(*ord))) continue;
      return std::pair{h, g};
    }
  }
  return std::nullopt;
}

/// Coordinates of every coaction polynomial, as matrices R_n(h, g), n < level.
std::vector<MatrixQ> coefficient_tables(const std::vector<std::vector<LaurentPoly>>& coaction, long dim,
                                        const CoeffTables& tables, long level) {
  std::vector<MatrixQ> out(static_cast<std::size_t>(level), MatrixQ::Zero(dim, dim));
  for (long h = 0; h < dim; ++h)
    for (long g = 0; g < dim; ++g) {
      const VectorQ coords = basis_coordinates(coaction[h][g], tables);
      for (long n = 0; n < coords.size(); ++n) {
        if (coords(n) == 0) continue;
        if (n >= level) throw std::logic_error("coaction has a term past the annihilation level");
        out[n](h, g) = coords(n);
      }
    }
  return out;
}

/// M_i M_j against sum_n Gamma^n_{ij} M_n for all i, j < level.
ModuleVerdict check_products(const FGModule& m, const std::vector<MatrixQ>& action, const CoeffTables& tables) {
  const long level = static_cast<long>(action.size());
  for (long i = 0; i < level; ++i)
    for (long j = 0; j < level; ++j) {
      const MatrixQ lhs = action[i] * action[j];
      MatrixQ rhs = MatrixQ::Zero(lhs.rows(), lhs.cols());
      for (long n = std::max(i, j); n < level; ++n) {
        const Rational& g = tables.gamma(n)(i, j);
        if (g != 0) rhs += g * action[n];
      }
      if (auto at = first_difference(m, lhs, rhs)) {
        ModuleVerdict v{false, "product", i, j, at->first, at->second, {}};
        v.detail = "a_" + std::to_string(i) + " a_" + std::to_string(j) + " differs at " + entry_name(at->first, at->second);
        return v;
      }
    }
  return {};
}

ModuleVerdict check_unit(const FGModule& m, const std::vector<MatrixQ>& action, const CoeffTables& tables) {
  const long d = m.dimension();
  MatrixQ unit = MatrixQ::Zero(d, d);
  for (long n = 0; n < static_cast<long>(action.size()); ++n) {
    const Rational e = tables.counit(n);
    if (e != 0) unit += e * action[n];
  }
  if (auto at = first_difference(m, unit, MatrixQ::Identity(d, d))) {
    return {false, "unit", std::nullopt, std::nullopt, at->first, at->second,
            "the unit of A does not act as the identity at " + entry_name(at->first, at->second)};
  }
  return {};
}

}  // namespace

std::optional<Integer> FGModule::order(long h) const {
  if (h < free_rank) return std::nullopt;
  return torsion_orders.at(static_cast<std::size_t>(h - free_rank));
}

MatrixQ FGModule::matrix(long n) const {
  if (n < annihilation_level()) return action[static_cast<std::size_t>(n)];
  return MatrixQ::Zero(dimension(), dimension());
}

bool FGModule::same_image(const MatrixQ& a, const MatrixQ& b) const { return !first_difference(*this, a, b); }

ModuleVerdict validate_module(const FGModule& m, const CoeffTables& tables) {
  const long d = m.dimension();
  auto bad = [](std::string relation, std::string detail) {
    return ModuleVerdict{false, std::move(relation), std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                         std::move(detail)};
  };
  if (!tables.ring().prime || *tables.ring().prime != m.prime)
    return bad("shape", "module prime does not match the ground ring");
  if (m.free_rank < 0 || d < 1) return bad("shape", "no generators");
  if (m.action.empty()) return bad("shape", "annihilation level must be at least 1");
  for (const Integer& o : m.torsion_orders)
    if (o <= 1 || power(Integer(m.prime), static_cast<unsigned long>(nu(m.prime, Rational(o)))) != o)
      return bad("shape", "torsion order " + o.str() + " is not a positive power of p");
  for (std::size_t n = 0; n < m.action.size(); ++n)
    if (m.action[n].rows() != d || m.action[n].cols() != d)
      return bad("shape", "a_" + std::to_string(n) + " is not " + std::to_string(d) + "x" + std::to_string(d));

  for (std::size_t n = 0; n < m.action.size(); ++n)
    for (long h = 0; h < d; ++h)
      for (long g = 0; g < d; ++g)
        if (!is_p_local_integer(m.prime, m.action[n](h, g))) {
          ModuleVerdict v = bad("integrality", "a_" + std::to_string(n) + " entry " + entry_name(h, g));
          v.row = h;
          v.column = g;
          return v;
        }

  for (std::size_t n = 0; n < m.action.size(); ++n)
    for (long g = m.free_rank; g < d; ++g) {
      const Integer og = *m.order(g);
      for (long h = 0; h < d; ++h) {
        const Rational& x = m.action[n](h, g);
        if (x == 0) continue;
        const auto oh = m.order(h);
        if (!oh || !is_p_local_integer(m.prime, x * Rational(og) / Rational(*oh))) {
          ModuleVerdict v = bad("torsion_block", "a_" + std::to_string(n) + " sends a torsion generator outside " +
                                                     "its possible images at " + entry_name(h, g));
          v.row = h;
          v.column = g;
          return v;
        }
      }
    }

  if (auto v = check_unit(m, m.action, tables); !v.valid) return v;
  return check_products(m, m.action, tables);
}

Comodule to_comodule(const FGModule& m, const CoeffTables& tables) {
  if (auto v = validate_module(m, tables); !v.valid) throw InvalidModule(v);
  const long d = m.dimension();
  const long level = m.annihilation_level();
  Comodule out{m.prime, m.free_rank, m.torsion_orders, {}, false, false};
  out.coaction.assign(static_cast<std::size_t>(d), std::vector<LaurentPoly>(static_cast<std::size_t>(d)));
  for (long n = 0; n < level; ++n)
    for (long h = 0; h < d; ++h)
      for (long g = 0; g < d; ++g)
        if (m.action[n](h, g) != 0) out.coaction[h][g] += m.action[n](h, g) * tables.basis(n);

  MatrixQ eps(d, d);
  for (long h = 0; h < d; ++h)
    for (long g = 0; g < d; ++g) eps(h, g) = out.coaction[h][g].eval(1);
  out.counit_ok = m.same_image(eps, MatrixQ::Identity(d, d));

  // (rho (x) id) rho = (id (x) Delta) rho, coefficientwise in c_i (x) c_j.
  const auto recovered = coefficient_tables(out.coaction, d, tables, level);
  out.coassociative = check_products(m, recovered, tables).valid;
  return out;
}

std::vector<MatrixQ> action_from_comodule(const Comodule& c, const CoeffTables& tables, long level) {
  const long d = static_cast<long>(c.coaction.size());
  return coefficient_tables(c.coaction, d, tables, level);
}

AnnihilatorSearch torsion_annihilator(const FGModule& m, const IndexSet& n_s, long s, long bound) {
  if (s < 1 || bound < 1) throw std::invalid_argument("s and bound must be positive");
  const Integer ps = power(Integer(m.prime), static_cast<unsigned long>(s));
  for (const Integer& o : m.torsion_orders)
    if (ps % o != 0) throw std::invalid_argument("p^s does not annihilate the torsion part");

  AnnihilatorSearch out;
  const std::vector<long> candidates = n_s.first(bound);
  if (m.torsion_orders.empty()) {
    out.witness = candidates.front();
    out.searched = 1;
    out.message = "torsion part is zero";
    return out;
  }

  const long d = m.dimension();
  auto torsion_part = [&](long n) {
    MatrixQ t = MatrixQ::Zero(d, d);
    const MatrixQ full = m.matrix(n);
    t.bottomRightCorner(d - m.free_rank, d - m.free_rank) = full.bottomRightCorner(d - m.free_rank, d - m.free_rank);
    return t;
  };
  const MatrixQ zero = MatrixQ::Zero(d, d);
  std::vector<std::pair<long, MatrixQ>> seen;
  for (long n : candidates) {
    ++out.searched;
    MatrixQ t = torsion_part(n);
    if (m.same_image(t, zero)) {
      out.witness = n;
      out.message = "a_" + std::to_string(n) + " kills the torsion part";
      return out;
    }
    if (!out.pigeonhole)
      for (const auto& [earlier, u] : seen)
        if (m.same_image(u, t)) {
          out.pigeonhole = std::pair{earlier, n};
          break;
        }
    seen.emplace_back(n, std::move(t));
  }
  out.message = "no witness within bound";
  return out;
}

AnnihilatorSearch torsion_annihilator(const FGModule& m, const SpectrumSpec& spec, long s, long bound) {
  if (spec.prime != m.prime) throw std::invalid_argument("module prime does not match the spectrum");
  return torsion_annihilator(m, n_l(spec, s), s, bound);
}

FGModule trivial_module(const CoeffTables& tables, long rank) {
  if (!tables.ring().prime) throw std::domain_error("modules need a p-local ground ring");
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  return {*tables.ring().prime, rank, {}, {MatrixQ::Identity(rank, rank)}};
}

FGModule character_module(const CoeffTables& tables, long w_exponent) {
  if (!tables.ring().prime) throw std::domain_error("modules need a p-local ground ring");
  const VectorQ& coords = tables.lambda_coords(tables.spec().slot_of_w_exponent(w_exponent));
  long level = coords.size();
  while (level > 1 && coords(level - 1) == 0) --level;
  FGModule out{*tables.ring().prime, 1, {}, {}};
  for (long n = 0; n < level; ++n) out.action.push_back(MatrixQ::Constant(1, 1, coords(n)));
  return out;
}

FGModule regular_module(const CoeffTables& tables, long level) {
  if (!tables.ring().prime) throw std::domain_error("modules need a p-local ground ring");
  if (level < 1) throw std::invalid_argument("level must be positive");
  FGModule out{*tables.ring().prime, level, {}, {}};
  for (long n = 0; n < level; ++n) {
    MatrixQ a = MatrixQ::Zero(level, level);
    for (long g = n; g < level; ++g) {
      const MatrixQ& gamma = tables.gamma(g);
      for (long h = 0; h <= g; ++h) a(h, g) = gamma(h, n);
    }
    out.action.push_back(std::move(a));
  }
  return out;
}

FGModule direct_sum(const FGModule& a, const FGModule& b) {
  if (a.prime != b.prime) throw std::invalid_argument("direct sum of modules over different primes");
  const long da = a.dimension(), db = b.dimension(), d = da + db;
  // New generator order: free(a), free(b), torsion(a), torsion(b).
  std::vector<long> place(static_cast<std::size_t>(d));
  long next = 0;
  for (long h = 0; h < a.free_rank; ++h) place[h] = next++;
  for (long h = 0; h < b.free_rank; ++h) place[da + h] = next++;
  for (long h = a.free_rank; h < da; ++h) place[h] = next++;
  for (long h = b.free_rank; h < db; ++h) place[da + h] = next++;

  FGModule out{a.prime, a.free_rank + b.free_rank, a.torsion_orders, {}};
  out.torsion_orders.insert(out.torsion_orders.end(), b.torsion_orders.begin(), b.torsion_orders.end());
  const long level = std::max(a.annihilation_level(), b.annihilation_level());
  for (long n = 0; n < level; ++n) {
    MatrixQ block = MatrixQ::Zero(d, d);
    block.topLeftCorner(da, da) = a.matrix(n);
    block.bottomRightCorner(db, db) = b.matrix(n);
    MatrixQ moved(d, d);
    for (long h = 0; h < d; ++h)
      for (long g = 0; g < d; ++g) moved(place[h], place[g]) = block(h, g);
    out.action.push_back(std::move(moved));
  }
  return out;
}

FGModule conjugate(const FGModule& m, const MatrixQ& u) {
  const long f = m.free_rank, d = m.dimension();
  if (u.rows() != f || u.cols() != f) throw std::invalid_argument("conjugating matrix must act on the free part");
  Eigen::FullPivLU<MatrixQ> lu(u);
  if (!lu.isInvertible()) throw std::invalid_argument("conjugating matrix is singular");
  const MatrixQ inv = lu.inverse();
  for (long h = 0; h < f; ++h)
    for (long g = 0; g < f; ++g)
      if (!is_p_local_integer(m.prime, u(h, g)) || !is_p_local_integer(m.prime, inv(h, g)))
        throw std::invalid_argument("conjugating matrix is not invertible over Z_(p)");
  MatrixQ left = MatrixQ::Identity(d, d), right = MatrixQ::Identity(d, d);
  left.topLeftCorner(f, f) = u;
  right.topLeftCorner(f, f) = inv;
  FGModule out = m;
  for (auto& a : out.action) a = left * a * right;
  return out;
}

FGModule reduce_mod(const FGModule& m, long e) {
  if (e < 1) throw std::invalid_argument("exponent must be positive");
  const Integer pe = power(Integer(m.prime), static_cast<unsigned long>(e));
  for (const Integer& o : m.torsion_orders)
    if (pe % o != 0) throw std::invalid_argument("existing torsion order exceeds p^e");
  FGModule out = m;
  out.torsion_orders.assign(static_cast<std::size_t>(m.free_rank), pe);
  out.torsion_orders.insert(out.torsion_orders.end(), m.torsion_orders.begin(), m.torsion_orders.end());
  out.free_rank = 0;
  for (auto& a : out.action)
    for (long h = 0; h < a.rows(); ++h) {
      const Integer o = *out.order(h);
      for (long g = 0; g < a.cols(); ++g) a(h, g) = Rational(residue(a(h, g), o));
    }
  return out;
}

nlohmann::json to_json(const FGModule& m) {
  nlohmann::json orders = nlohmann::json::array();
  for (const Integer& o : m.torsion_orders) orders.push_back(o.str());
  nlohmann::json action = nlohmann::json::array();
  for (const MatrixQ& a : m.action) {
    nlohmann::json rows = nlohmann::json::array();
    for (long h = 0; h < a.rows(); ++h) {
      nlohmann::json row = nlohmann::json::array();
      for (long g = 0; g < a.cols(); ++g) row.push_back(to_string(a(h, g)));
      rows.push_back(std::move(row));
    }
    action.push_back(std::move(rows));
  }
  return {{"prime", m.prime}, {"free_rank", m.free_rank}, {"torsion_orders", orders}, {"action", action}};
}

FGModule module_from_json(const nlohmann::json& j) {
  FGModule m;
  m.prime = j.at("prime").get<long>();
  m.free_rank = j.at("free_rank").get<long>();
  for (const auto& o : j.at("torsion_orders")) m.torsion_orders.emplace_back(o.get<std::string>());
  const long d = m.dimension();
  for (const auto& rows : j.at("action")) {
    if (static_cast<long>(rows.size()) != d) throw std::invalid_argument("action matrix has the wrong number of rows");
    MatrixQ a(d, d);
    for (long h = 0; h < d; ++h) {
      if (static_cast<long>(rows[h].size()) != d) throw std::invalid_argument("action matrix row has the wrong length");
      for (long g = 0; g < d; ++g) a(h, g) = parse_rational(rows[h][g].get<std::string>());
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

}  // namespace regcoal
