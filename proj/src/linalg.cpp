#include "fdalg/linalg.hpp"

#include <algorithm>

namespace fdalg {

Vec zero_vec(const FieldSpec& field, std::size_t n) { return Vec(n, Scalar::zero(field)); }

Vec unit_vec(const FieldSpec& field, std::size_t n, std::size_t i) {
  Vec v = zero_vec(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::SizeMismatch, "vector lengths differ");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::SizeMismatch, "vector lengths differ");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void axpy(Vec& v, const Scalar& c, const Vec& w) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!w[i].is_zero()) v[i] += c * w[i];
  }
}

std::string format_vec(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, const std::vector<Vec>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& field, const std::vector<Vec>& columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw Error(ErrorCode::SizeMismatch, "row length");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw Error(ErrorCode::SizeMismatch, "column length");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::SizeMismatch, "matrix-vector dimensions");
  Vec out = zero_vec(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& m = (*this)(r, c);
      if (!m.is_zero()) out[r] += m * v[c];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::SizeMismatch, "matrix product dimensions");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::SizeMismatch, "matrix sum");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::SizeMismatch, "matrix difference");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix scale(const Scalar& c, const Matrix& m) {
  Matrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t k = 0; k < m.cols(); ++k) out(r, k) *= c;
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

RowReduction row_reduce(Matrix a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    }
    const Scalar inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::SizeMismatch, "determinant of non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = Scalar::one(a.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a(sel, col).is_zero()) ++sel;
    if (sel == n) return Scalar::zero(a.field());
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(sel, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    const Scalar inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::SizeMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(m.field());
  }
  RowReduction red = row_reduce(std::move(aug));
  if (red.pivots.size() < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.rref(r, n + c);
  return inv;
}

namespace {

std::vector<Vec> kernel_basis(const RowReduction& red, std::size_t cols) {
  const FieldSpec& field = red.rref.field();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(field, cols);
    v[f] = Scalar::one(field);
    for (std::size_t r = 0; r < red.pivots.size(); ++r) v[red.pivots[r]] = -red.rref(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

Subspace kernel(const Matrix& a) {
  RowReduction red = row_reduce(a);
  auto basis = kernel_basis(red, a.cols());
  return Subspace::span(a.field(), a.cols(), basis);
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) { return row_reduce_and_solve(a, b).solution; }

SystemSolution row_reduce_and_solve(const Matrix& a, const std::optional<Vec>& b) {
  RowReduction red = row_reduce(a);
  Subspace ker = Subspace::span(a.field(), a.cols(), kernel_basis(red, a.cols()));
  std::optional<Vec> solution;
  if (b) {
    if (b->size() != a.rows()) throw Error(ErrorCode::SizeMismatch, "right-hand side length");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
      aug(r, a.cols()) = (*b)[r];
    }
    RowReduction ared = row_reduce(std::move(aug));
    const bool inconsistent = !ared.pivots.empty() && ared.pivots.back() == a.cols();
    if (!inconsistent) {
      Vec x = zero_vec(a.field(), a.cols());
      for (std::size_t r = 0; r < ared.pivots.size(); ++r) x[ared.pivots[r]] = ared.rref(r, a.cols());
      solution = std::move(x);
    }
  }
  return {std::move(red), std::move(solution), std::move(ker)};
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(const FieldSpec& field, std::size_t ambient_dim) : field_(field), ambient_(ambient_dim) {}

Subspace Subspace::span(const FieldSpec& field, std::size_t ambient_dim, std::span<const Vec> vectors) {
  Subspace s(field, ambient_dim);
  if (vectors.empty()) return s;
  Matrix m(field, vectors.size(), ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim) throw Error(ErrorCode::AmbientMismatch, "spanning vector length");
    m.set_row(r, vectors[r]);
  }
  RowReduction red = row_reduce(std::move(m));
  for (std::size_t r = 0; r < red.pivots.size(); ++r) s.basis_.push_back(red.rref.row(r));
  s.pivots_ = std::move(red.pivots);
  return s;
}

Subspace Subspace::whole(const FieldSpec& field, std::size_t ambient_dim) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < ambient_dim; ++i) basis.push_back(unit_vec(field, ambient_dim, i));
  return span(field, ambient_dim, basis);
}

void Subspace::require_ambient(const Subspace& other) const {
  if (other.ambient_ != ambient_ || !(other.field_ == field_)) {
    throw Error(ErrorCode::AmbientMismatch, "subspaces live in different ambient spaces");
  }
}

void Subspace::require_ambient(const Vec& v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::AmbientMismatch, "vector length differs from ambient dimension");
}

Vec Subspace::reduce(const Vec& v) const {
  require_ambient(v);
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (!c.is_zero()) axpy(r, -c, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_ambient(other);
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c;
  c.reserve(pivots_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

std::vector<std::size_t> Subspace::complement_positions() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (k < pivots_.size() && pivots_[k] == i) {
      ++k;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

Vec Subspace::quotient_coords(const Vec& v) const {
  const Vec r = reduce(v);
  Vec out;
  for (auto i : complement_positions()) out.push_back(r[i]);
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  require_ambient(other);
  std::vector<Vec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(field_, ambient_, all);
}

Subspace Subspace::intersection(const Subspace& other) const {
  require_ambient(other);
  if (basis_.empty() || other.basis_.empty()) return Subspace(field_, ambient_);
  // columns u_1..u_r, -v_1..-v_s; kernel vectors (c, d) give sum c_i u_i in both.
  const std::size_t r = basis_.size();
  Matrix m(field_, ambient_, r + other.basis_.size());
  for (std::size_t i = 0; i < r; ++i) m.set_column(i, basis_[i]);
  for (std::size_t j = 0; j < other.basis_.size(); ++j) m.set_column(r + j, scale(-Scalar::one(field_), other.basis_[j]));
  const Subspace ker = kernel(m);
  std::vector<Vec> common;
  for (const auto& k : ker.basis()) {
    Vec w = zero_vec(field_, ambient_);
    for (std::size_t i = 0; i < r; ++i) axpy(w, k[i], basis_[i]);
    common.push_back(std::move(w));
  }
  return span(field_, ambient_, common);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const FieldSpec& field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) throw Error(ErrorCode::FieldMismatch, "polynomial coefficient field");
  }
  trim();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const FieldSpec& field, std::size_t k, const Scalar& c) {
  std::vector<Scalar> coeffs(k + 1, Scalar::zero(field));
  coeffs[k] = c;
  return Polynomial(field, std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(field_); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Scalar inv = leading().inverse();
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(a.field_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(a.field_, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(a.field_, std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    std::string c = coeffs_[k].to_string();
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += c;
      continue;
    }
    if (!coeffs_[k].is_one()) out += (c.find_first_of("+-/") != std::string::npos ? "(" + c + ")" : c) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const FieldSpec& field = a.field();
  if (a.degree() < b.degree()) return {Polynomial(field), a};
  std::vector<Scalar> rem = a.coeffs();
  const auto nb = static_cast<std::size_t>(b.degree());
  std::vector<Scalar> quot(rem.size() - nb, Scalar::zero(field));
  const Scalar lead_inv = b.leading().inverse();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Scalar c = rem[k + nb] * lead_inv;
    if (c.is_zero()) continue;
    quot[k] = c;
    for (std::size_t j = 0; j <= nb; ++j) rem[k + j] -= c * b.coeffs()[j];
  }
  return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---------------------------------------------------------------------------
// Smith form of xI - M over F[x]

std::vector<Polynomial> invariant_factors(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::SizeMismatch, "invariant factors need a square matrix");
  const FieldSpec& field = m.field();
  const std::size_t n = m.rows();
  using PolyMat = std::vector<std::vector<Polynomial>>;
  PolyMat a(n, std::vector<Polynomial>(n, Polynomial(field)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> c{-m(i, j)};
      if (i == j) c.push_back(Scalar::one(field));
      a[i][j] = Polynomial(field, std::move(c));
    }

  auto swap_rows = [&](std::size_t r1, std::size_t r2) { std::swap(a[r1], a[r2]); };
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    for (auto& row : a) std::swap(row[c1], row[c2]);
  };

  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      // pivot on a minimal-degree nonzero entry of the trailing block
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j) {
          if (a[i][j].is_zero()) continue;
          if (pi == n || a[i][j].degree() < a[pi][pj].degree()) {
            pi = i;
            pj = j;
          }
        }
      if (pi == n) break;
      swap_rows(k, pi);
      swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k].is_zero()) continue;
        const Polynomial q = divmod(a[i][k], a[k][k]).first;
        for (std::size_t j = k; j < n; ++j) a[i][j] = a[i][j] - q * a[k][j];
        if (!a[i][k].is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k][j].is_zero()) continue;
        const Polynomial q = divmod(a[k][j], a[k][k]).first;
        for (std::size_t i = k; i < n; ++i) a[i][j] = a[i][j] - q * a[i][k];
        if (!a[k][j].is_zero()) clean = false;
      }
      if (!clean) continue;

      bool divides_all = true;
      for (std::size_t i = k + 1; i < n && divides_all; ++i)
        for (std::size_t j = k + 1; j < n; ++j) {
          if (!divmod(a[i][j], a[k][k]).second.is_zero()) {
            for (std::size_t c = k; c < n; ++c) a[k][c] = a[k][c] + a[i][c];
            divides_all = false;
            break;
          }
        }
      if (divides_all) break;
    }
  }

  std::vector<Polynomial> factors;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].degree() >= 1) factors.push_back(a[k][k].monic());
  }
  return factors;
}

bool is_similar(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw Error(ErrorCode::SizeMismatch, "similarity needs square matrices of equal size");
  }
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "similarity across fields");
  return invariant_factors(a) == invariant_factors(b);
}

}  // namespace fdalg
