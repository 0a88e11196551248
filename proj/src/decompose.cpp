#include "fdalg/decompose.hpp"

#include <stdexcept>

#include "fdalg/maps.hpp"

namespace fdalg {

namespace {

// Column k stacks [b_k, b_i] for i = 0..n-1, each mapped through `reduce`.
template <class Reduce>
Matrix commutator_system(const Algebra& alg, std::size_t equations, Reduce reduce) {
  const std::size_t n = alg.dim();
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < n; ++k) {
    Vec col;
    for (std::size_t i = 0; i < equations; ++i) {
      const Vec c = reduce(alg.commutator(alg.basis_vector(k), alg.basis_vector(i)));
      col.insert(col.end(), c.begin(), c.end());
    }
    cols.push_back(std::move(col));
  }
  if (cols.front().empty()) return Matrix(alg.field(), 0, n);
  return Matrix::from_columns(alg.field(), cols);
}

template <class Reduce>
Vec image_rhs(const LinMap& d, std::size_t equations, Reduce reduce) {
  Vec rhs;
  for (std::size_t i = 0; i < equations; ++i) {
    const Vec c = reduce(d.column(i));
    rhs.insert(rhs.end(), c.begin(), c.end());
  }
  return rhs;
}

void guard_characteristic(const FieldSpec& field, std::initializer_list<std::uint32_t> excluded, bool allow,
                          std::vector<std::string>& warnings) {
  for (auto p : excluded) {
    if (field.characteristic() != p) continue;
    const std::string msg = "characteristic " + std::to_string(p) + " is outside the theorem's hypotheses";
    if (!allow) throw Error(ErrorCode::CharacteristicViolation, msg);
    warnings.push_back(msg);
  }
}

}  // namespace

std::optional<Element> solve_inner_derivation(const Algebra& alg, const LinMap& d) {
  require_map(alg, d);
  auto id = [](const Vec& v) { return v; };
  const Matrix sys = commutator_system(alg, alg.dim(), id);
  auto a = solve(sys, image_rhs(d, alg.dim(), id));
  if (!a) return std::nullopt;
  if (!(inner_derivation(alg, *a) == d)) throw std::logic_error("inner derivation solve failed verification");
  return a;
}

DerivationDecompositionResult decompose_theorem_d(const Algebra& alg, const LinMap& d, bool allow_char_violation,
                                                  RadicalMethod method) {
  require_map(alg, d);
  DerivationDecompositionResult result;
  guard_characteristic(alg.field(), {2}, allow_char_violation, result.warnings);
  const Subspace rad = alg.radical(method);
  auto reduce = [&](const Vec& v) { return rad.quotient_coords(v); };

  const std::size_t n = alg.dim();
  auto a = solve(commutator_system(alg, n, reduce), image_rhs(d, n, reduce));
  if (!a) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (!solve(commutator_system(alg, k, reduce), image_rhs(d, k, reduce))) {
        result.inconsistent_prefix = k;
        break;
      }
    }
    return result;
  }

  const LinMap ad = inner_derivation(alg, *a);
  LinMap residual = d - ad;
  for (std::size_t j = 0; j < n; ++j)
    if (!rad.contains(residual.column(j))) throw std::logic_error("residual leaves the radical");
  if (!(ad + residual == d)) throw std::logic_error("decomposition does not recompose");
  result.decomposition = DerivationDecomposition{std::move(*a), std::move(residual), rad};
  return result;
}

std::string_view failure_token(FactorizationFailure f) {
  switch (f) {
    case FactorizationFailure::None: return "NONE";
    case FactorizationFailure::SemisimpleRequired: return "SEMISIMPLE_REQUIRED";
    case FactorizationFailure::AlphaNotCentral: return "ALPHA_NOT_CENTRAL";
    case FactorizationFailure::AlphaCubeNotOne: return "ALPHA_CUBE_NOT_ONE";
    case FactorizationFailure::JordanFail: return "JORDAN_FAIL";
    case FactorizationFailure::NotInMultAlgebra: return "NOT_IN_MULT_ALGEBRA";
  }
  return "?";
}

JordanFactorizationResult decompose_theorem_a(const Algebra& alg, const LinMap& t, bool allow_char_violation,
                                              RadicalMethod method) {
  require_map(alg, t);
  JordanFactorizationResult result;
  guard_characteristic(alg.field(), {2, 3}, allow_char_violation, result.warnings);
  const Element& one = alg.require_unit();

  auto fail = [&](FactorizationFailure f, std::string detail) {
    result.failure = f;
    result.detail = std::move(detail);
    return result;
  };

  const Subspace rad = alg.radical(method);
  if (rad.dim() != 0) return fail(FactorizationFailure::SemisimpleRequired, "rad(A) has dimension " + std::to_string(rad.dim()));

  const Element alpha = t.apply(one);
  result.alpha = alpha;
  if (!alg.commutes_with_all(alpha)) return fail(FactorizationFailure::AlphaNotCentral, "T(1) = " + format_vec(alpha) + " is not central");
  if (alg.power(alpha, 3) != one) return fail(FactorizationFailure::AlphaCubeNotOne, "T(1)^3 = " + format_vec(alg.power(alpha, 3)));

  LinMap j = scalar_multiple(alg, alg.mul(alpha, alpha), t);
  const MapProfile profile = classify(alg, j);
  if (!profile.jordan_automorphism) return fail(FactorizationFailure::JordanFail, "T(1)^{-1} T is not a Jordan automorphism");
  if (!profile.in_mult_algebra) return fail(FactorizationFailure::NotInMultAlgebra, "T(1)^{-1} T lies outside M(A)");
  if (!(scalar_multiple(alg, alpha, j) == t)) throw std::logic_error("factorization does not recompose");
  result.factorization = JordanFactorization{alpha, std::move(j)};
  return result;
}

Ac3Result split_ac3(const Algebra& alg, const LinMap& t, const Subspace& complement, bool allow_char_violation,
                    RadicalMethod method) {
  require_map(alg, t);
  if (complement.ambient_dim() != alg.dim() || complement.field() != alg.field())
    throw Error(ErrorCode::AmbientMismatch, "complement lives in a different ambient space");
  std::vector<std::string> warnings;
  guard_characteristic(alg.field(), {2, 3}, allow_char_violation, warnings);
  const Subspace rad = alg.radical(method);
  Ac3Result result{std::nullopt, std::nullopt, rad, std::move(warnings)};

  const std::size_t n = alg.dim();
  if (complement.dim() + rad.dim() != n)
    throw Error(ErrorCode::NotAComplement, "dim S + dim rad = " + std::to_string(complement.dim() + rad.dim()) +
                                               ", expected " + std::to_string(n));
  if (complement.intersection(rad).dim() != 0) throw Error(ErrorCode::NotAComplement, "S meets rad(A)");
  if (!is_subalgebra(alg, complement)) throw Error(ErrorCode::NotAComplement, "S is not closed under multiplication");
  const Element& one = alg.require_unit();
  if (t.apply(one) != one) throw Error(ErrorCode::UnitNotFixed, "T(1) = " + format_vec(t.apply(one)));

  // pi = B diag(1,..,1,0,..,0) B^{-1} with B = [S | rad].
  std::vector<Vec> cols = complement.basis();
  cols.insert(cols.end(), rad.basis().begin(), rad.basis().end());
  const Matrix b = Matrix::from_columns(alg.field(), cols);
  Matrix keep(alg.field(), n, n);
  for (std::size_t i = 0; i < complement.dim(); ++i) keep(i, i) = Scalar::one(alg.field());
  const LinMap pi(b * keep * *inverse(b));

  LinMap jordan_part = pi * t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Element lhs = jordan_part.apply(alg.jordan_product(alg.basis_vector(i), alg.basis_vector(j)));
      const Element rhs = alg.jordan_product(jordan_part.column(i), jordan_part.column(j));
      if (lhs != rhs) {
        result.jordan_failure = std::make_pair(i, j);
        return result;
      }
    }
  }
  LinMap radical_part = t - jordan_part;
  result.split = Ac3Split{std::move(jordan_part), std::move(radical_part)};
  return result;
}

}  // namespace fdalg
