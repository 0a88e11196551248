#include "fdalg/linmap.hpp"

namespace fdalg {

LinMap::LinMap(Matrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw Error(ErrorCode::SizeMismatch, "linear map matrix must be square");
}

LinMap LinMap::from_columns(const FieldSpec& field, const std::vector<Vec>& columns) {
  for (const auto& c : columns)
    if (c.size() != columns.size())
      throw Error(ErrorCode::SizeMismatch, "map column length differs from the number of columns");
  return LinMap(Matrix::from_columns(field, columns));
}

LinMap LinMap::identity(const FieldSpec& field, std::size_t n) { return LinMap(Matrix::identity(field, n)); }

LinMap LinMap::zero(const FieldSpec& field, std::size_t n) { return LinMap(Matrix(field, n, n)); }

std::vector<Vec> LinMap::columns() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j) out.push_back(matrix_.column(j));
  return out;
}

Vec LinMap::vectorize() const {
  const std::size_t n = dim();
  Vec v;
  v.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) v.push_back(matrix_(k, j));
  return v;
}

LinMap LinMap::from_vectorized(const FieldSpec& field, std::size_t n, const Vec& v) {
  if (v.size() != n * n) throw Error(ErrorCode::SizeMismatch, "vectorized map has the wrong length");
  Matrix m(field, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = v[j * n + k];
  return LinMap(std::move(m));
}

bool LinMap::is_bijective() const { return rank(matrix_) == dim(); }

LinMap scale(const Scalar& c, const LinMap& m) { return LinMap(scale(c, m.matrix())); }

}  // namespace fdalg
