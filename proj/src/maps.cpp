#include "fdalg/maps.hpp"

namespace fdalg {

void require_map(const Algebra& a, const LinMap& m) {
  if (m.dim() != a.dim() || m.field() != a.field())
    throw Error(ErrorCode::AlgebraMismatch, "map of size " + std::to_string(m.dim()) + " over " + m.field().name() +
                                                " does not act on " + a.name());
}

LinMap map_from_columns(const Algebra& a, const std::vector<Element>& columns) {
  if (columns.size() != a.dim())
    throw Error(ErrorCode::AlgebraMismatch, "map has " + std::to_string(columns.size()) + " columns, expected " +
                                                std::to_string(a.dim()));
  for (const auto& c : columns) a.require_element(c);
  return LinMap::from_columns(a.field(), columns);
}

LinMap identity_map(const Algebra& a) { return LinMap::identity(a.field(), a.dim()); }

LinMap inner_derivation(const Algebra& alg, const Element& a) {
  std::vector<Element> cols;
  for (std::size_t j = 0; j < alg.dim(); ++j) cols.push_back(alg.commutator(a, alg.basis_vector(j)));
  return LinMap::from_columns(alg.field(), cols);
}

LinMap conjugation(const Algebra& alg, const Element& u) {
  const auto inv = alg.inverse(u);
  if (!inv) throw Error(ErrorCode::NotInvertible, "conjugating element is not invertible");
  std::vector<Element> cols;
  for (std::size_t j = 0; j < alg.dim(); ++j) cols.push_back(alg.mul(alg.mul(u, alg.basis_vector(j)), *inv));
  return LinMap::from_columns(alg.field(), cols);
}

LinMap transpose_map(const Algebra& alg) {
  std::vector<Element> cols;
  for (std::size_t j = 0; j < alg.dim(); ++j)
    cols.push_back(alg.from_matrix(alg.to_matrix(alg.basis_vector(j)).transpose()));
  return LinMap::from_columns(alg.field(), cols);
}

LinMap scalar_multiple(const Algebra& alg, const Element& alpha, const LinMap& t) {
  require_map(alg, t);
  alg.require_element(alpha);
  if (!alg.commutes_with_all(alpha)) throw Error(ErrorCode::NotCentral, "multiplier is not central");
  return LinMap(alg.left_mult_matrix(alpha) * t.matrix());
}

LinMap left_multiplication(const Algebra& alg, const Element& a) { return LinMap(alg.left_mult_matrix(a)); }

MapProfile classify(const Algebra& a, const LinMap& t) {
  require_map(a, t);
  const std::size_t n = a.dim();
  std::vector<Element> img;
  for (std::size_t j = 0; j < n; ++j) img.push_back(t.column(j));

  MapProfile p;
  p.bijective = t.is_bijective();
  p.unital = a.unit() && t.apply(*a.unit()) == *a.unit();
  p.derivation = p.jordan_homomorphism = p.homomorphism = p.antihomomorphism = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element& bi = a.basis_vector(i);
      const Element& bj = a.basis_vector(j);
      const Element t_ij = t.apply(a.basis_product(i, j));
      if (p.derivation && t_ij != add(a.mul(img[i], bj), a.mul(bi, img[j]))) p.derivation = false;
      const Element ti_tj = a.mul(img[i], img[j]);
      const Element tj_ti = a.mul(img[j], img[i]);
      if (p.homomorphism && t_ij != ti_tj) p.homomorphism = false;
      if (p.antihomomorphism && t_ij != tj_ti) p.antihomomorphism = false;
      if (p.jordan_homomorphism && i <= j && add(t_ij, t.apply(a.basis_product(j, i))) != add(ti_tj, tj_ti))
        p.jordan_homomorphism = false;
    }
  p.jordan_automorphism = p.bijective && p.jordan_homomorphism;
  p.automorphism = p.bijective && p.homomorphism;
  p.antiautomorphism = p.bijective && p.antihomomorphism;
  p.in_mult_algebra = a.unit() && a.multiplication_algebra().contains(t.vectorize());
  return p;
}

std::vector<std::pair<std::string, bool>> profile_flags(const MapProfile& p) {
  return {{"bijective", p.bijective},
          {"unital", p.unital},
          {"derivation", p.derivation},
          {"jordan_homomorphism", p.jordan_homomorphism},
          {"homomorphism", p.homomorphism},
          {"antihomomorphism", p.antihomomorphism},
          {"jordan_automorphism", p.jordan_automorphism},
          {"automorphism", p.automorphism},
          {"antiautomorphism", p.antiautomorphism},
          {"in_mult_algebra", p.in_mult_algebra}};
}

}  // namespace fdalg
