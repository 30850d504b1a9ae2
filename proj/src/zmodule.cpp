#include "csl4/zmodule.hpp"

#include <algorithm>
#include <utility>

#include "json.hpp"

namespace csl4 {

namespace {

// col_j -= q * col_k
void submul_column(IntColumn& cj, const IntColumn& ck, const BigInt& q) {
  for (std::size_t r = 0; r < cj.size(); ++r)
    if (ck[r] != 0) mpz_submul(cj[r].get_mpz_t(), ck[r].get_mpz_t(), q.get_mpz_t());
}

// Column echelon form over the first `pivot_rows` rows using unimodular
// column operations on full columns. Returns the rank within those rows;
// columns [rank, m) are zero in the pivot rows afterwards.
std::size_t echelonize(std::vector<IntColumn>& cols, std::size_t pivot_rows, bool reduce_left) {
  std::size_t k = 0;
  const std::size_t m = cols.size();
  for (std::size_t i = 0; i < pivot_rows && k < m; ++i) {
    bool found = false;
    while (true) {
      std::size_t best = m;
      for (std::size_t j = k; j < m; ++j) {
        if (cols[j][i] == 0) continue;
        if (best == m || mpz_cmpabs(cols[j][i].get_mpz_t(), cols[best][i].get_mpz_t()) < 0) best = j;
      }
      if (best == m) break;
      found = true;
      if (best != k) std::swap(cols[best], cols[k]);
      bool done = true;
      for (std::size_t j = k + 1; j < m; ++j) {
        if (cols[j][i] == 0) continue;
        BigInt q = floor_div(cols[j][i], cols[k][i]);
        submul_column(cols[j], cols[k], q);
        if (cols[j][i] != 0) done = false;
      }
      if (done) break;
    }
    if (!found) continue;
    if (cols[k][i] < 0)
      for (auto& x : cols[k]) x = -x;
    if (reduce_left) {
      for (std::size_t j = 0; j < k; ++j) {
        if (cols[j][i] == 0) continue;
        BigInt q = floor_div(cols[j][i], cols[k][i]);
        if (q != 0) submul_column(cols[j], cols[k], q);
      }
    }
    ++k;
  }
  return k;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<IntColumn> scaled(const std::vector<IntColumn>& cols, const BigInt& factor) {
  std::vector<IntColumn> out = cols;
  if (factor != 1)
    for (auto& c : out)
      for (auto& x : c) x *= factor;
  return out;
}

// Coefficients of v in the HNF basis `h` (pivot-wise forward substitution);
// nullopt if v is not in the integral span.
std::optional<std::vector<BigInt>> solve_hnf(const std::vector<IntColumn>& h, IntColumn v) {
  std::vector<BigInt> t(h.size());
  std::size_t row = 0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    while (h[j][row] == 0) {
      if (v[row] != 0) return std::nullopt;
      ++row;
    }
    if (v[row] % h[j][row] != 0) return std::nullopt;
    t[j] = v[row] / h[j][row];
    if (t[j] != 0) submul_column(v, h[j], t[j]);
    ++row;
  }
  for (const auto& x : v)
    if (x != 0) return std::nullopt;
  return t;
}

}  // namespace

BigRat determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw ModuleError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  BigRat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      BigRat f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::vector<IntColumn> hnf_columns(std::vector<IntColumn> cols, std::size_t n) {
  for (const auto& c : cols)
    if (c.size() != n) throw ModuleError("generator length mismatch");
  std::size_t rank = echelonize(cols, n, true);
  cols.resize(rank);
  return cols;
}

std::vector<IntColumn> integer_kernel(const std::vector<IntColumn>& cols, std::size_t n) {
  const std::size_t m = cols.size();
  std::vector<IntColumn> aug(m, IntColumn(n + m));
  for (std::size_t j = 0; j < m; ++j) {
    if (cols[j].size() != n) throw ModuleError("generator length mismatch");
    std::copy(cols[j].begin(), cols[j].end(), aug[j].begin());
    aug[j][n + j] = 1;
  }
  std::size_t rank = echelonize(aug, n, false);
  std::vector<IntColumn> kernel;
  for (std::size_t j = rank; j < m; ++j) kernel.emplace_back(aug[j].begin() + static_cast<long>(n), aug[j].end());
  return kernel;
}

FreeModule FreeModule::from_integer_generators(std::size_t ambient_dim, std::vector<IntColumn> gens,
                                               const BigInt& scale) {
  if (scale <= 0) throw ModuleError("module scale must be positive");
  FreeModule m;
  m.dim_ = ambient_dim;
  m.hnf_ = hnf_columns(std::move(gens), ambient_dim);
  BigInt g = scale;
  for (const auto& c : m.hnf_)
    for (const auto& x : c) {
      if (g == 1) break;
      g = gcd(g, x);
    }
  m.scale_ = scale / g;
  if (g != 1)
    for (auto& c : m.hnf_)
      for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return m;
}

FreeModule FreeModule::from_generators(std::size_t ambient_dim, const std::vector<RatVector>& gens) {
  BigInt den = 1;
  for (const auto& v : gens) {
    if (v.size() != ambient_dim) throw ModuleError("generator length mismatch");
    for (const auto& x : v) den = lcm(den, x.get_den());
  }
  std::vector<IntColumn> cols;
  cols.reserve(gens.size());
  for (const auto& v : gens) {
    IntColumn c(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) c[i] = v[i].get_num() * (den / v[i].get_den());
    cols.push_back(std::move(c));
  }
  return from_integer_generators(ambient_dim, std::move(cols), den);
}

FreeModule FreeModule::standard_lattice(std::size_t n) {
  std::vector<IntColumn> cols(n, IntColumn(n));
  for (std::size_t i = 0; i < n; ++i) cols[i][i] = 1;
  return from_integer_generators(n, std::move(cols));
}

std::vector<RatVector> FreeModule::basis() const {
  std::vector<RatVector> out;
  for (const auto& c : hnf_) {
    RatVector v(dim_);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = make_rat(c[i], scale_);
    out.push_back(std::move(v));
  }
  return out;
}

bool FreeModule::contains(const RatVector& v) const {
  if (v.size() != dim_) throw ModuleError("dimension mismatch");
  IntColumn w(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    BigRat x = v[i] * scale_;
    if (!is_integer(x)) return false;
    w[i] = x.get_num();
  }
  return solve_hnf(hnf_, std::move(w)).has_value();
}

bool FreeModule::contains(const FreeModule& other) const {
  if (other.dim_ != dim_) throw ModuleError("dimension mismatch");
  BigInt l = lcm(scale_, other.scale_);
  auto mine = scaled(hnf_, l / scale_);
  for (const auto& c : scaled(other.hnf_, l / other.scale_))
    if (!solve_hnf(mine, c)) return false;
  return true;
}

BigRat FreeModule::determinant() const {
  if (rank() != dim_) throw ModuleError("determinant of a module without full rank");
  BigInt d = 1;
  for (std::size_t j = 0; j < dim_; ++j) d *= hnf_[j][j];
  BigInt s = 1;
  for (std::size_t j = 0; j < dim_; ++j) s *= scale_;
  return make_rat(d, s);
}

std::string FreeModule::key() const {
  std::string s = std::to_string(dim_) + ":" + scale_.get_str(62) + ":";
  for (const auto& c : hnf_) {
    for (const auto& x : c) {
      s += x.get_str(62);
      s += ',';
    }
    s += ';';
  }
  return s;
}

std::string FreeModule::to_json() const {
  nlohmann::json j;
  j["ambient_dim"] = dim_;
  j["rank"] = rank();
  nlohmann::json basis_json = nlohmann::json::array();
  for (const auto& v : basis()) {
    nlohmann::json col = nlohmann::json::array();
    for (const auto& x : v) col.push_back(to_string(x));
    basis_json.push_back(col);
  }
  j["basis"] = basis_json;
  return j.dump();
}

FreeModule FreeModule::from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    std::size_t dim = j.at("ambient_dim").get<std::size_t>();
    std::vector<RatVector> gens;
    for (const auto& col : j.at("basis")) {
      RatVector v;
      for (const auto& x : col) v.push_back(parse_rational(x.get<std::string>()));
      gens.push_back(std::move(v));
    }
    FreeModule m = from_generators(dim, gens);
    if (j.contains("rank") && j.at("rank").get<std::size_t>() != m.rank())
      throw ModuleError("module JSON: rank does not match basis");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ModuleError(std::string("module JSON: ") + e.what());
  } catch (const ArithmeticError& e) {
    throw ModuleError(std::string("module JSON: ") + e.what());
  }
}

FreeModule hnf_canonical(const FreeModule& m) {
  return FreeModule::from_integer_generators(m.ambient_dim(), m.hnf(), m.scale());
}

FreeModule module_sum(const FreeModule& a, const FreeModule& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw ModuleError("module_sum: dimension mismatch");
  BigInt l = lcm(a.scale(), b.scale());
  auto gens = scaled(a.hnf(), l / a.scale());
  for (auto& c : scaled(b.hnf(), l / b.scale())) gens.push_back(std::move(c));
  return FreeModule::from_integer_generators(a.ambient_dim(), std::move(gens), l);
}

FreeModule module_intersect(const FreeModule& a, const FreeModule& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw ModuleError("module_intersect: dimension mismatch");
  const std::size_t n = a.ambient_dim();
  BigInt l = lcm(a.scale(), b.scale());
  auto ga = scaled(a.hnf(), l / a.scale());
  auto gb = scaled(b.hnf(), l / b.scale());
  // Kernel of [A | -B]: pairs (x, y) with A x = B y.
  std::vector<IntColumn> stacked = ga;
  for (const auto& c : gb) {
    IntColumn neg(n);
    for (std::size_t i = 0; i < n; ++i) neg[i] = -c[i];
    stacked.push_back(std::move(neg));
  }
  std::vector<IntColumn> gens;
  for (const auto& kv : integer_kernel(stacked, n)) {
    IntColumn v(n);
    for (std::size_t j = 0; j < ga.size(); ++j)
      if (kv[j] != 0)
        for (std::size_t i = 0; i < n; ++i) mpz_addmul(v[i].get_mpz_t(), ga[j][i].get_mpz_t(), kv[j].get_mpz_t());
    gens.push_back(std::move(v));
  }
  return FreeModule::from_integer_generators(n, std::move(gens), l);
}

BigInt index_in(const FreeModule& sub, const FreeModule& sup) {
  if (sub.ambient_dim() != sup.ambient_dim()) throw ModuleError("index_in: dimension mismatch");
  if (sub.rank() != sup.rank()) throw ModuleError("index_in: rank mismatch (infinite index)");
  BigInt l = lcm(sub.scale(), sup.scale());
  auto hp = scaled(sup.hnf(), l / sup.scale());
  std::vector<std::vector<BigInt>> t;
  for (const auto& c : scaled(sub.hnf(), l / sub.scale())) {
    auto coeff = solve_hnf(hp, c);
    if (!coeff) throw ModuleError("index_in: not a submodule");
    t.push_back(std::move(*coeff));
  }
  return abs(bareiss_determinant(std::move(t)));
}

FreeModule apply_map(const FreeModule& m, const RatMatrix& r) {
  const std::size_t n = m.ambient_dim();
  if (r.rows() != n || r.cols() != n) throw ModuleError("apply_map: dimension mismatch");
  if (determinant(r) == 0) throw ModuleError("apply_map: singular map");
  std::vector<RatVector> gens;
  for (const auto& c : m.hnf()) {
    RatVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      BigRat s = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (c[k] != 0) s += r(i, k) * c[k];
      v[i] = s / m.scale();
    }
    gens.push_back(std::move(v));
  }
  return FreeModule::from_generators(n, gens);
}

RatVector golden_embed(const std::vector<GoldenRat>& v) {
  RatVector out;
  out.reserve(2 * v.size());
  for (const auto& x : v) {
    out.push_back(x.rational_part());
    out.push_back(x.tau_part());
  }
  return out;
}

RatMatrix golden_embed(const GoldenMatrix& m) {
  RatMatrix r(2 * m.rows(), 2 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      // (c + d tau)(a + b tau) = (ca + db) + (da + (c + d) b) tau
      BigRat c = m(i, j).rational_part();
      BigRat d = m(i, j).tau_part();
      r(2 * i, 2 * j) = c;
      r(2 * i, 2 * j + 1) = d;
      r(2 * i + 1, 2 * j) = d;
      r(2 * i + 1, 2 * j + 1) = c + d;
    }
  return r;
}

RatVector to_vector(const RatQuat& q) { return {q.c.begin(), q.c.end()}; }

RatVector to_vector(const GoldenQuat& q) {
  return golden_embed(std::vector<GoldenRat>(q.c.begin(), q.c.end()));
}

FreeModule golden_embed_module(const std::vector<GoldenQuat>& gens, bool tau_closure) {
  std::vector<RatVector> vs;
  const GoldenRat tau(GoldenInt::tau());
  for (const auto& g : gens) {
    vs.push_back(to_vector(g));
    if (tau_closure) vs.push_back(to_vector(tau * g));
  }
  return FreeModule::from_generators(8, vs);
}

}  // namespace csl4
