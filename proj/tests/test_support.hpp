#pragma once

#include <random>
#include <vector>

#include "fdalg/linalg.hpp"

namespace fdalg::testing {

inline Vec vec_of(const FieldSpec& field, std::initializer_list<long long> values) {
  Vec v;
  for (auto x : values) v.push_back(Scalar::from_int(field, x));
  return v;
}

inline Matrix mat_of(const FieldSpec& field, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vec> r;
  for (auto row : rows) r.push_back(vec_of(field, row));
  return Matrix::from_rows(field, r);
}

inline Vec random_vec(const FieldSpec& field, std::size_t n, std::mt19937_64& rng) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(field, rng));
  return v;
}

inline Matrix random_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(field, rng);
  return m;
}

inline Matrix random_invertible(const FieldSpec& field, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix m = random_matrix(field, n, n, rng);
    if (!determinant(m).is_zero()) return m;
  }
}

/// det(xI - m) by cofactor expansion along the first row, with polynomial entries.
inline Polynomial charpoly_by_cofactors(const Matrix& m) {
  const FieldSpec& field = m.field();
  const std::size_t n = m.rows();
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n, Polynomial(field)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> c{-m(i, j)};
      if (i == j) c.push_back(Scalar::one(field));
      a[i][j] = Polynomial(field, c);
    }
  auto det = [&](auto&& self, const std::vector<std::vector<Polynomial>>& b) -> Polynomial {
    const std::size_t k = b.size();
    if (k == 1) return b[0][0];
    Polynomial acc(field);
    for (std::size_t col = 0; col < k; ++col) {
      std::vector<std::vector<Polynomial>> minor;
      for (std::size_t r = 1; r < k; ++r) {
        std::vector<Polynomial> row;
        for (std::size_t c = 0; c < k; ++c)
          if (c != col) row.push_back(b[r][c]);
        minor.push_back(row);
      }
      Polynomial term = b[0][col] * self(self, minor);
      acc = (col % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  return det(det, a);
}

}  // namespace fdalg::testing
