#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdalg/scalars.hpp"

namespace fdalg {

/// Coordinate vector. Algebra elements are coordinate vectors on the algebra's basis.
using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldSpec& field, std::size_t n);
Vec unit_vec(const FieldSpec& field, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
/// v += c * w
void axpy(Vec& v, const Scalar& c, const Vec& w);
std::string format_vec(const Vec& v);

class Matrix {
 public:
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_rows(const FieldSpec& field, const std::vector<Vec>& rows);
  static Matrix from_columns(const FieldSpec& field, const std::vector<Vec>& columns);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);
  void set_column(std::size_t c, const Vec& v);

  Matrix transpose() const;
  Vec apply(const Vec& v) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  bool operator==(const Matrix& rhs) const = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

Matrix scale(const Scalar& c, const Matrix& m);

struct RowReduction {
  Matrix rref;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form.
RowReduction row_reduce(Matrix a);

std::size_t rank(const Matrix& a);
Scalar determinant(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);

class Subspace;

/// Basis of {x : a x = 0}, in RREF.
Subspace kernel(const Matrix& a);

/// Canonical solution of a x = b (free variables zero), or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// A subspace of F^n stored as an RREF basis with strictly increasing pivots.
class Subspace {
 public:
  Subspace(const FieldSpec& field, std::size_t ambient_dim);
  static Subspace span(const FieldSpec& field, std::size_t ambient_dim, std::span<const Vec> vectors);
  static Subspace whole(const FieldSpec& field, std::size_t ambient_dim);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its projection along the basis; zero at every pivot position.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients on basis() when v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  /// Non-pivot coordinate positions; these index the canonical complement.
  std::vector<std::size_t> complement_positions() const;
  /// Image of v in ambient / this, expressed on the canonical complement.
  Vec quotient_coords(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;

  bool operator==(const Subspace& rhs) const = default;

 private:
  void require_ambient(const Subspace& other) const;
  void require_ambient(const Vec& v) const;

  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

struct SystemSolution {
  RowReduction reduction;
  std::optional<Vec> solution;
  Subspace kernel;
};

/// RREF of a, the canonical solution of a x = b when b is given and the
/// system is consistent, and the kernel of a.
SystemSolution row_reduce_and_solve(const Matrix& a, const std::optional<Vec>& b = std::nullopt);

/// Dense univariate polynomial with Scalar coefficients, low degree first.
class Polynomial {
 public:
  explicit Polynomial(const FieldSpec& field) : field_(field) {}
  Polynomial(const FieldSpec& field, std::vector<Scalar> coeffs);
  static Polynomial constant(const Scalar& c);
  /// X^k
  static Polynomial monomial(const FieldSpec& field, std::size_t k, const Scalar& c);

  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const Scalar& leading() const { return coeffs_.back(); }
  Scalar coeff(std::size_t k) const;
  bool is_monic() const { return !is_zero() && leading().is_one(); }
  Polynomial monic() const;
  Scalar evaluate(const Scalar& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& rhs) const = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; zero when both inputs are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Invariant factors f_1 | ... | f_k of a square matrix (non-constant, monic),
/// read off the Smith form of xI - m over F[x].
std::vector<Polynomial> invariant_factors(const Matrix& m);

bool is_similar(const Matrix& a, const Matrix& b);

}  // namespace fdalg
