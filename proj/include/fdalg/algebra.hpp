#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fdalg/linalg.hpp"
#include "fdalg/linmap.hpp"

namespace fdalg {

/// Coordinates of an algebra member on the algebra's basis.
using Element = Vec;

/// Structure table: table[i][j] holds the coordinates of b_i * b_j.
using StructureTable = std::vector<std::vector<Vec>>;

struct AlgebraTags {
  /// Side s of a full matrix algebra M_s(F); basis e_ij at index i*s + j.
  std::optional<std::size_t> matrix_side;
  /// A subalgebra complementing the radical, when the constructor knows one.
  std::optional<Subspace> complement;
  std::string construction;
};

enum class RadicalMethod { Auto, TraceForm, Brute, Frobenius };

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 21;

/// Finite-dimensional associative algebra given by structure constants.
/// Immutable once built; derived subspaces are computed on first access and
/// shared between copies.
class Algebra {
 public:
  /// Validates the table and associativity on all basis triples, then detects the unit.
  static Algebra build(const FieldSpec& field, StructureTable table, std::vector<std::string> labels,
                       AlgebraTags tags = {});

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const StructureTable& table() const noexcept { return table_; }
  const Vec& basis_product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  const std::optional<Element>& unit() const noexcept { return unit_; }
  const AlgebraTags& tags() const noexcept { return tags_; }
  std::string name() const;

  Element zero() const { return zero_vec(field_, dim_); }
  Element basis_vector(std::size_t i) const { return unit_vec(field_, dim_, i); }
  /// Unit element; throws NOT_UNITAL when there is none.
  const Element& require_unit() const;

  Element mul(const Element& x, const Element& y) const;
  Element commutator(const Element& x, const Element& y) const;
  /// xy + yx
  Element jordan_product(const Element& x, const Element& y) const;
  /// x^k; k = 0 gives the unit.
  Element power(const Element& x, unsigned k) const;
  Matrix left_mult_matrix(const Element& a) const;
  Matrix right_mult_matrix(const Element& a) const;
  bool is_commutative() const;
  bool commutes_with_all(const Element& a) const;
  /// Inverse of a when it exists (unital algebras only).
  std::optional<Element> inverse(const Element& a) const;

  bool is_matrix_algebra() const noexcept { return tags_.matrix_side.has_value(); }
  /// s x s matrix of an element of M_s(F); NOT_MATRIX_ALGEBRA otherwise.
  Matrix to_matrix(const Element& x) const;
  Element from_matrix(const Matrix& m) const;

  /// [A,A]
  Subspace commutator_space() const;
  Subspace center() const;
  Subspace radical(RadicalMethod method = RadicalMethod::Auto, std::uint64_t budget = kDefaultBudget) const;
  /// RREF-canonical basis of Der(A).
  std::vector<LinMap> derivation_space() const;
  /// M(A) as a subspace of the vectorized operator space (see LinMap::vectorize).
  Subspace multiplication_algebra() const;

  void require_element(const Element& x) const;

 private:
  struct Term {
    std::size_t index;
    Scalar coeff;
  };
  struct Cache;

  Algebra(const FieldSpec& field, StructureTable table, std::vector<std::string> labels, AlgebraTags tags);

  FieldSpec field_;
  std::size_t dim_;
  StructureTable table_;
  std::vector<std::vector<std::vector<Term>>> sparse_;
  std::vector<std::string> labels_;
  std::optional<Element> unit_;
  AlgebraTags tags_;
  std::shared_ptr<Cache> cache_;
};

// Standard constructions.
Algebra matrix_algebra(const FieldSpec& field, std::size_t s);
Algebra upper_triangular(const FieldSpec& field, std::size_t s);
Algebra direct_sum(const Algebra& a, const Algebra& b);
/// A / ideal on the non-pivot complement of the ideal; NOT_AN_IDEAL when it is not one.
Algebra quotient(const Algebra& a, const Subspace& ideal);
/// F[X] / (f) for monic f of degree >= 1, basis 1, X, ..., X^{d-1}.
Algebra field_extension(const Polynomial& f);

// Ideals and subalgebras.
Subspace generated_ideal(const Algebra& a, const std::vector<Element>& generators);
bool is_ideal(const Algebra& a, const Subspace& s);
bool is_subalgebra(const Algebra& a, const Subspace& s);
/// Throws NOT_AN_IDEAL when s is not a two-sided ideal.
bool is_nilpotent(const Algebra& a, const Subspace& s);

/// True when the method's validity conditions hold for this algebra and budget.
bool radical_method_valid(const Algebra& a, RadicalMethod method, std::uint64_t budget);
/// |F|^k, saturating; nullopt for infinite fields.
std::optional<std::uint64_t> space_size(const FieldSpec& field, std::size_t k);

}  // namespace fdalg
