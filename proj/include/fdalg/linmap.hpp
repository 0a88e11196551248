#pragma once

#include <cstddef>
#include <vector>

#include "fdalg/linalg.hpp"

namespace fdalg {

/// Linear operator on an n-dimensional algebra; column j is the image of basis vector j.
class LinMap {
 public:
  explicit LinMap(Matrix matrix);
  static LinMap from_columns(const FieldSpec& field, const std::vector<Vec>& columns);
  static LinMap identity(const FieldSpec& field, std::size_t n);
  static LinMap zero(const FieldSpec& field, std::size_t n);

  const Matrix& matrix() const noexcept { return matrix_; }
  const FieldSpec& field() const noexcept { return matrix_.field(); }
  std::size_t dim() const noexcept { return matrix_.rows(); }

  Vec apply(const Vec& x) const { return matrix_.apply(x); }
  Vec column(std::size_t j) const { return matrix_.column(j); }
  std::vector<Vec> columns() const;

  /// Columns concatenated; index j*n + k holds the b_k-coordinate of the image of b_j.
  Vec vectorize() const;
  static LinMap from_vectorized(const FieldSpec& field, std::size_t n, const Vec& v);

  bool is_bijective() const;

  /// Composition: (a * b)(x) = a(b(x)).
  friend LinMap operator*(const LinMap& a, const LinMap& b) { return LinMap(a.matrix_ * b.matrix_); }
  friend LinMap operator+(const LinMap& a, const LinMap& b) { return LinMap(a.matrix_ + b.matrix_); }
  friend LinMap operator-(const LinMap& a, const LinMap& b) { return LinMap(a.matrix_ - b.matrix_); }
  bool operator==(const LinMap& rhs) const = default;

 private:
  Matrix matrix_;
};

LinMap scale(const Scalar& c, const LinMap& m);

}  // namespace fdalg
