#include "fdalg/algebra.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fdalg {

struct Algebra::Cache {
  std::once_flag commutator_once, center_once, derivations_once, mult_once;
  std::optional<Subspace> commutator, center, mult;
  std::vector<LinMap> derivations;
  std::mutex radical_mutex;
  std::map<std::pair<int, std::uint64_t>, Subspace> radicals;
};

namespace {

std::string default_label(std::size_t i) { return "b" + std::to_string(i + 1); }

std::string triple_text(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << "(" << i + 1 << "," << j + 1 << "," << k + 1 << ")";
  return os.str();
}

}  // namespace

Algebra::Algebra(const FieldSpec& field, StructureTable table, std::vector<std::string> labels, AlgebraTags tags)
    : field_(field),
      dim_(table.size()),
      table_(std::move(table)),
      labels_(std::move(labels)),
      tags_(std::move(tags)),
      cache_(std::make_shared<Cache>()) {
  sparse_.assign(dim_, std::vector<std::vector<Term>>(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!table_[i][j][k].is_zero()) sparse_[i][j].push_back({k, table_[i][j][k]});
}

Algebra Algebra::build(const FieldSpec& field, StructureTable table, std::vector<std::string> labels,
                       AlgebraTags tags) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::MalformedTable, "algebra must have positive dimension");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(ErrorCode::MalformedTable, "table row " + std::to_string(i + 1) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j].size() != n)
        throw Error(ErrorCode::MalformedTable,
                    "product b" + std::to_string(i + 1) + "*b" + std::to_string(j + 1) + " has wrong length");
      for (const auto& c : table[i][j])
        if (c.field() != field) throw Error(ErrorCode::FieldMismatch, "table entry outside " + field.name());
    }
  }
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back(default_label(i));
  if (labels.size() != n) throw Error(ErrorCode::MalformedTable, "label count differs from dimension");
  if (tags.matrix_side && *tags.matrix_side * *tags.matrix_side != n)
    throw Error(ErrorCode::MalformedTable, "matrix side does not match dimension");

  Algebra a(field, std::move(table), std::move(labels), std::move(tags));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element& ij = a.table_[i][j];
      for (std::size_t k = 0; k < n; ++k) {
        if (a.mul(ij, a.basis_vector(k)) != a.mul(a.basis_vector(i), a.table_[j][k]))
          throw Error(ErrorCode::NotAssociative, "associativity fails at basis triple " + triple_text(i, j, k));
      }
    }

  // e*b_i = b_i and b_i*e = b_i, one block of n equations each.
  Matrix sys(field, 2 * n * n, n);
  Vec rhs = zero_vec(field, 2 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < n; ++m) {
      const std::size_t left = i * n + m, right = n * n + i * n + m;
      for (std::size_t k = 0; k < n; ++k) {
        sys(left, k) = a.table_[k][i][m];
        sys(right, k) = a.table_[i][k][m];
      }
      if (i == m) rhs[left] = rhs[right] = Scalar::one(field);
    }
  a.unit_ = solve(sys, rhs);
  return a;
}

std::string Algebra::name() const { return tags_.construction.empty() ? "algebra" : tags_.construction; }

const Element& Algebra::require_unit() const {
  if (!unit_) throw Error(ErrorCode::NotUnital, name() + " has no unit");
  return *unit_;
}

void Algebra::require_element(const Element& x) const {
  if (x.size() != dim_)
    throw Error(ErrorCode::AlgebraMismatch,
                "element has " + std::to_string(x.size()) + " coordinates, algebra has dimension " + std::to_string(dim_));
  for (const auto& c : x)
    if (c.field() != field_) throw Error(ErrorCode::AlgebraMismatch, "element coordinate outside " + field_.name());
}

Element Algebra::mul(const Element& x, const Element& y) const {
  require_element(x);
  require_element(y);
  Element out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& t : sparse_[i][j]) out[t.index] += xy * t.coeff;
    }
  }
  return out;
}

Element Algebra::commutator(const Element& x, const Element& y) const { return sub(mul(x, y), mul(y, x)); }

Element Algebra::jordan_product(const Element& x, const Element& y) const { return add(mul(x, y), mul(y, x)); }

Element Algebra::power(const Element& x, unsigned k) const {
  require_element(x);
  if (k == 0) return require_unit();
  Element result = x, base = x;
  bool have = false;
  while (k > 0) {
    if (k & 1u) {
      result = have ? mul(result, base) : base;
      have = true;
    }
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Matrix Algebra::left_mult_matrix(const Element& a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, mul(a, basis_vector(j)));
  return m;
}

Matrix Algebra::right_mult_matrix(const Element& a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, mul(basis_vector(j), a));
  return m;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (table_[i][j] != table_[j][i]) return false;
  return true;
}

bool Algebra::commutes_with_all(const Element& a) const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (!is_zero_vec(commutator(a, basis_vector(i)))) return false;
  return true;
}

std::optional<Element> Algebra::inverse(const Element& a) const {
  const Element& one = require_unit();
  auto y = solve(left_mult_matrix(a), one);
  if (!y || mul(*y, a) != one) return std::nullopt;
  return y;
}

Matrix Algebra::to_matrix(const Element& x) const {
  if (!tags_.matrix_side) throw Error(ErrorCode::NotMatrixAlgebra, name() + " is not a full matrix algebra");
  require_element(x);
  const std::size_t s = *tags_.matrix_side;
  Matrix m(field_, s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) m(i, j) = x[i * s + j];
  return m;
}

Element Algebra::from_matrix(const Matrix& m) const {
  if (!tags_.matrix_side) throw Error(ErrorCode::NotMatrixAlgebra, name() + " is not a full matrix algebra");
  const std::size_t s = *tags_.matrix_side;
  if (m.rows() != s || m.cols() != s) throw Error(ErrorCode::SizeMismatch, "matrix size differs from algebra side");
  Element x = zero();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) x[i * s + j] = m(i, j);
  return x;
}

Subspace Algebra::commutator_space() const {
  std::call_once(cache_->commutator_once, [&] {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j) gens.push_back(sub(table_[i][j], table_[j][i]));
    cache_->commutator = Subspace::span(field_, dim_, gens);
  });
  return *cache_->commutator;
}

Subspace Algebra::center() const {
  std::call_once(cache_->center_once, [&] {
    Matrix sys(field_, dim_ * dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t m = 0; m < dim_; ++m) sys(i * dim_ + m, k) = table_[k][i][m] - table_[i][k][m];
    cache_->center = kernel(sys);
  });
  return *cache_->center;
}

std::vector<LinMap> Algebra::derivation_space() const {
  std::call_once(cache_->derivations_once, [&] {
    const std::size_t n = dim_;
    // Unknown (j, k) at j*n + k is the b_k-coordinate of delta(b_j).
    Matrix sys(field_, n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m) {
          const std::size_t row = (i * n + j) * n + m;
          for (const auto& t : sparse_[i][j]) sys(row, t.index * n + m) += t.coeff;
          for (std::size_t k = 0; k < n; ++k) {
            sys(row, i * n + k) -= table_[k][j][m];
            sys(row, j * n + k) -= table_[i][k][m];
          }
        }
    const Subspace ker = kernel(sys);
    for (const auto& v : ker.basis()) cache_->derivations.push_back(LinMap::from_vectorized(field_, n, v));
  });
  return cache_->derivations;
}

Subspace Algebra::multiplication_algebra() const {
  require_unit();
  std::call_once(cache_->mult_once, [&] {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        Matrix m(field_, dim_, dim_);
        for (std::size_t l = 0; l < dim_; ++l) m.set_column(l, mul(table_[i][l], basis_vector(j)));
        gens.push_back(LinMap(std::move(m)).vectorize());
      }
    cache_->mult = Subspace::span(field_, dim_ * dim_, gens);
  });
  return *cache_->mult;
}

// ---------------------------------------------------------------------------
// Constructions

Algebra matrix_algebra(const FieldSpec& field, std::size_t s) {
  if (s == 0) throw Error(ErrorCode::MalformedTable, "matrix side must be positive");
  const std::size_t n = s * s;
  StructureTable t(n, std::vector<Vec>(n, zero_vec(field, n)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t l = 0; l < s; ++l) t[i * s + j][j * s + l][i * s + l] = Scalar::one(field);
  AlgebraTags tags;
  tags.matrix_side = s;
  tags.construction = "M" + std::to_string(s) + "(" + field.name() + ")";
  return Algebra::build(field, std::move(t), std::move(labels), std::move(tags));
}

Algebra upper_triangular(const FieldSpec& field, std::size_t s) {
  if (s == 0) throw Error(ErrorCode::MalformedTable, "matrix side must be positive");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      units.emplace_back(i, j);
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  const std::size_t n = units.size();
  auto index_of = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k)
      if (units[k] == std::make_pair(i, j)) return k;
    throw std::logic_error("missing matrix unit");
  };
  StructureTable t(n, std::vector<Vec>(n, zero_vec(field, n)));
  std::vector<Vec> diagonal;
  for (std::size_t a = 0; a < n; ++a) {
    if (units[a].first == units[a].second) diagonal.push_back(unit_vec(field, n, a));
    for (std::size_t b = 0; b < n; ++b)
      if (units[a].second == units[b].first) t[a][b][index_of(units[a].first, units[b].second)] = Scalar::one(field);
  }
  AlgebraTags tags;
  tags.complement = Subspace::span(field, n, diagonal);
  tags.construction = "T" + std::to_string(s) + "(" + field.name() + ")";
  return Algebra::build(field, std::move(t), std::move(labels), std::move(tags));
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "direct summands over different fields");
  const FieldSpec& f = a.field();
  const std::size_t n = a.dim(), m = b.dim(), d = n + m;
  StructureTable t(d, std::vector<Vec>(d, zero_vec(f, d)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t[i][j][k] = a.basis_product(i, j)[k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) t[n + i][n + j][n + k] = b.basis_product(i, j)[k];
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("1:" + l);
  for (const auto& l : b.labels()) labels.push_back("2:" + l);
  AlgebraTags tags;
  tags.construction = a.name() + "+" + b.name();
  return Algebra::build(f, std::move(t), std::move(labels), std::move(tags));
}

Algebra quotient(const Algebra& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal)) throw Error(ErrorCode::NotAnIdeal, "quotient by a subspace that is not a two-sided ideal");
  const auto reps = ideal.complement_positions();
  const std::size_t d = reps.size();
  if (d == 0) throw Error(ErrorCode::MalformedTable, "quotient by the whole algebra is zero-dimensional");
  StructureTable t(d, std::vector<Vec>(d));
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < d; ++r) {
    labels.push_back(a.labels()[reps[r]]);
    for (std::size_t c = 0; c < d; ++c) t[r][c] = ideal.quotient_coords(a.basis_product(reps[r], reps[c]));
  }
  AlgebraTags tags;
  tags.construction = a.name() + "/I";
  return Algebra::build(a.field(), std::move(t), std::move(labels), std::move(tags));
}

Algebra field_extension(const Polynomial& f) {
  if (f.degree() < 1 || !f.is_monic())
    throw Error(ErrorCode::NonMonic, "extension polynomial must be monic of degree at least 1");
  const FieldSpec& field = f.field();
  const std::size_t d = static_cast<std::size_t>(f.degree());
  // Coordinates of X^m mod f for m < 2d - 1.
  std::vector<Vec> powers;
  Vec cur = unit_vec(field, d, 0);
  for (std::size_t m = 0; m + 1 < 2 * d; ++m) {
    powers.push_back(cur);
    Vec next = zero_vec(field, d);
    for (std::size_t k = 0; k + 1 < d; ++k) next[k + 1] = cur[k];
    const Scalar top = cur[d - 1];
    for (std::size_t k = 0; k < d; ++k) next[k] -= top * f.coeff(k);
    cur = std::move(next);
  }
  StructureTable t(d, std::vector<Vec>(d));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    labels.push_back(i == 0 ? "1" : i == 1 ? "a" : "a^" + std::to_string(i));
    for (std::size_t j = 0; j < d; ++j) t[i][j] = powers[i + j];
  }
  AlgebraTags tags;
  tags.construction = field.name() + "[X]/(" + f.to_string("X") + ")";
  return Algebra::build(field, std::move(t), std::move(labels), std::move(tags));
}

// ---------------------------------------------------------------------------
// Ideals

Subspace generated_ideal(const Algebra& a, const std::vector<Element>& generators) {
  std::vector<Vec> gens;
  for (const auto& g : generators) {
    a.require_element(g);
    gens.push_back(g);
  }
  Subspace s = Subspace::span(a.field(), a.dim(), gens);
  std::vector<Vec> pending = s.basis();
  while (!pending.empty()) {
    const Vec v = pending.back();
    pending.pop_back();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (Vec w : {a.mul(a.basis_vector(i), v), a.mul(v, a.basis_vector(i))}) {
        if (s.contains(w)) continue;
        gens.push_back(w);
        pending.push_back(w);
        s = Subspace::span(a.field(), a.dim(), gens);
      }
    }
  }
  return s;
}

bool is_ideal(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw Error(ErrorCode::AmbientMismatch, "subspace ambient differs from algebra");
  for (const auto& v : s.basis())
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!s.contains(a.mul(a.basis_vector(i), v)) || !s.contains(a.mul(v, a.basis_vector(i)))) return false;
  return true;
}

bool is_subalgebra(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw Error(ErrorCode::AmbientMismatch, "subspace ambient differs from algebra");
  for (const auto& v : s.basis())
    for (const auto& w : s.basis())
      if (!s.contains(a.mul(v, w))) return false;
  return true;
}

bool is_nilpotent(const Algebra& a, const Subspace& s) {
  if (!is_ideal(a, s)) throw Error(ErrorCode::NotAnIdeal, "nilpotency is tested on two-sided ideals");
  Subspace cur = s;
  for (std::size_t step = 0; step <= a.dim(); ++step) {
    if (cur.dim() == 0) return true;
    std::vector<Vec> prods;
    for (const auto& v : cur.basis())
      for (const auto& w : s.basis()) prods.push_back(a.mul(v, w));
    Subspace next = Subspace::span(a.field(), a.dim(), prods);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return cur.dim() == 0;
}

// ---------------------------------------------------------------------------
// Radical

std::optional<std::uint64_t> space_size(const FieldSpec& field, std::size_t k) {
  if (!field.is_finite()) return std::nullopt;
  std::uint64_t total = 1;
  const std::uint64_t p = field.p();
  for (std::size_t i = 0; i < k; ++i) {
    if (total > UINT64_MAX / p) return UINT64_MAX;
    total *= p;
  }
  return total;
}

bool radical_method_valid(const Algebra& a, RadicalMethod method, std::uint64_t budget) {
  const std::uint32_t ch = a.field().characteristic();
  switch (method) {
    case RadicalMethod::TraceForm:
      return ch == 0 || ch > a.dim();
    case RadicalMethod::Brute: {
      const auto size = space_size(a.field(), a.dim());
      return size && *size <= budget;
    }
    case RadicalMethod::Frobenius:
      return ch != 0 && a.is_commutative();
    case RadicalMethod::Auto:
      return radical_method_valid(a, RadicalMethod::TraceForm, budget) ||
             radical_method_valid(a, RadicalMethod::Brute, budget) ||
             radical_method_valid(a, RadicalMethod::Frobenius, budget);
  }
  return false;
}

namespace {

RadicalMethod resolve_method(const Algebra& a, RadicalMethod method, std::uint64_t budget) {
  if (method == RadicalMethod::Auto) {
    for (auto m : {RadicalMethod::TraceForm, RadicalMethod::Brute, RadicalMethod::Frobenius})
      if (radical_method_valid(a, m, budget)) return m;
    throw Error(ErrorCode::NoValidMethod,
                "no radical method applies to " + a.name() + " (characteristic at most the dimension, field too large "
                "to enumerate, and not commutative)");
  }
  if (radical_method_valid(a, method, budget)) return method;
  if (method == RadicalMethod::Brute && a.field().is_finite())
    throw Error(ErrorCode::BudgetExceeded, "|F|^" + std::to_string(a.dim()) + " exceeds budget " + std::to_string(budget));
  throw Error(ErrorCode::NoValidMethod, "requested radical method is not valid for " + a.name());
}

Subspace radical_trace_form(const Algebra& a) {
  const std::size_t n = a.dim();
  const FieldSpec& f = a.field();
  Vec tr_basis = zero_vec(f, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m) tr_basis[k] += a.basis_product(k, m)[m];
  Matrix gram(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s = Scalar::zero(f);
      const Vec& p = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) s += p[k] * tr_basis[k];
      gram(j, i) = s;
    }
  return kernel(gram);
}

Subspace radical_brute(const Algebra& a) {
  const std::size_t n = a.dim();
  const FieldSpec& f = a.field();
  const std::uint64_t p = f.p();
  const std::uint64_t total = *space_size(f, n);
  Subspace rad(f, n);
  Vec x = zero_vec(f, n);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    // Digits of idx, little-endian; the leading nonzero digit must be 1 so each line is visited once.
    std::uint64_t rest = idx;
    std::size_t top = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto digit = static_cast<long long>(rest % p);
      x[k] = Scalar::from_int(f, digit);
      if (digit != 0) top = k;
      rest /= p;
    }
    if (!x[top].is_one() || rad.contains(x)) continue;
    std::vector<Vec> gens = rad.basis();
    gens.push_back(x);
    Subspace candidate = generated_ideal(a, gens);
    if (is_nilpotent(a, candidate)) rad = std::move(candidate);
  }
  return rad;
}

FpPoly poly_lcm(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
  return fppoly::divmod(fppoly::mul(a, b, p), fppoly::gcd(a, b, p), p).first;
}

// For commutative A in characteristic p, rad(A) is the kernel of x -> x^q with q = p^k > dim.
Subspace radical_frobenius(const Algebra& a) {
  const std::size_t n = a.dim();
  const FieldSpec& f = a.field();
  const std::uint64_t p = f.p();
  std::uint64_t q = p;
  while (q < n + 1) q *= p;
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(a.power(a.basis_vector(i), static_cast<unsigned>(q)));
  const Matrix c = Matrix::from_columns(f, cols);
  if (f.kind() == FieldKind::PrimeField) return kernel(c);

  // Over F_p(t) the map is semilinear: sum c_i^q v_i = 0. Clear denominators row by row and split
  // each polynomial entry by exponent residue mod q; the pieces give a linear system in c.
  const auto pp = static_cast<std::uint32_t>(p);
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < n; ++k) {
    FpPoly l{1};
    for (std::size_t i = 0; i < n; ++i) l = poly_lcm(l, c(k, i).ratfunc().den, pp);
    std::vector<FpPoly> polys;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& r = c(k, i).ratfunc();
      polys.push_back(fppoly::mul(r.num, fppoly::divmod(l, r.den, pp).first, pp));
    }
    for (std::uint64_t res = 0; res < q; ++res) {
      Vec row;
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        FpPoly piece;
        for (std::uint64_t e = res; e < polys[i].size(); e += q) piece.push_back(polys[i][e]);
        while (!piece.empty() && piece.back() == 0) piece.pop_back();
        nonzero = nonzero || !piece.empty();
        row.push_back(Scalar::from_ratfunc(f, std::move(piece), {1}));
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return Subspace::whole(f, n);
  return kernel(Matrix::from_rows(f, rows));
}

Subspace compute_radical(const Algebra& a, RadicalMethod method) {
  switch (method) {
    case RadicalMethod::TraceForm:
      return radical_trace_form(a);
    case RadicalMethod::Brute:
      return radical_brute(a);
    case RadicalMethod::Frobenius:
      return radical_frobenius(a);
    case RadicalMethod::Auto:
      break;
  }
  throw std::logic_error("unresolved radical method");
}

}  // namespace

Subspace Algebra::radical(RadicalMethod method, std::uint64_t budget) const {
  const RadicalMethod m = resolve_method(*this, method, budget);
  const auto key = std::make_pair(static_cast<int>(m), m == RadicalMethod::Brute ? budget : 0);
  {
    std::lock_guard lock(cache_->radical_mutex);
    if (auto it = cache_->radicals.find(key); it != cache_->radicals.end()) return it->second;
  }
  Subspace rad = compute_radical(*this, m);
  if (!is_nilpotent(*this, rad)) throw std::logic_error("radical computation returned a non-nilpotent ideal");
  if (rad.dim() < dim_) {
    const Algebra q = quotient(*this, rad);
    if (compute_radical(q, resolve_method(q, m, budget)).dim() != 0)
      throw std::logic_error("radical computation left a non-semisimple quotient");
  }
  std::lock_guard lock(cache_->radical_mutex);
  cache_->radicals.emplace(key, rad);
  return rad;
}

}  // namespace fdalg
