#include <doctest.h>

#include <array>

#include "fdalg/decompose.hpp"
#include "fdalg/identities.hpp"
#include "fdalg/maps.hpp"
#include "test_support.hpp"

using namespace fdalg;
using namespace fdalg::testing;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime_field(2);
const FieldSpec kF3 = FieldSpec::prime_field(3);
const FieldSpec kF5 = FieldSpec::prime_field(5);
const FieldSpec kF7 = FieldSpec::prime_field(7);

Element in_span(const Subspace& s, std::mt19937_64& rng) {
  Element v = zero_vec(s.field(), s.ambient_dim());
  for (const auto& b : s.basis()) axpy(v, random_scalar(s.field(), rng), b);
  return v;
}

LinMap radical_valued(const Algebra& a, std::mt19937_64& rng) {
  const Subspace rad = a.radical();
  std::vector<Element> cols;
  for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(in_span(rad, rng));
  return map_from_columns(a, cols);
}

LinMap random_map(const Algebra& a, std::mt19937_64& rng) {
  return LinMap(random_matrix(a.field(), a.dim(), a.dim(), rng));
}

Element random_unit(const Algebra& a, std::mt19937_64& rng) {
  while (true) {
    Element u = random_vec(a.field(), a.dim(), rng);
    if (a.inverse(u)) return u;
  }
}

bool formal_pass(const Algebra& a, IdentityKind kind, const LinMap& t) {
  return check_formal(a, IdentitySpec{kind, t, std::nullopt}).status == VerdictStatus::Pass;
}

Element scalar_unit(const Algebra& a, long long c) { return scale(Scalar::from_int(a.field(), c), a.require_unit()); }
}  // namespace

TEST_CASE("solve_inner_derivation examples") {
  const Algebra m2 = matrix_algebra(kQ, 2);
  const LinMap ad12 = inner_derivation(m2, m2.basis_vector(1));
  const auto a = solve_inner_derivation(m2, ad12);
  REQUIRE(a);
  CHECK(inner_derivation(m2, *a) == ad12);
  const Subspace z = m2.center();
  CHECK(z.contains(sub(*a, m2.basis_vector(1))));

  CHECK_FALSE(solve_inner_derivation(m2, identity_map(m2)));

  const Algebra t2 = upper_triangular(kQ, 2);
  const LinMap ad11 = inner_derivation(t2, t2.basis_vector(0));
  const auto b = solve_inner_derivation(t2, ad11);
  REQUIRE(b);
  CHECK(inner_derivation(t2, *b) == ad11);
}

TEST_CASE("decompose_theorem_d examples") {
  const Algebra t3 = upper_triangular(kQ, 3);
  // basis e11 e12 e13 e22 e23 e33; R0 sends e23 to e13
  std::vector<Element> cols(6, t3.zero());
  cols[4] = t3.basis_vector(2);
  const LinMap d = inner_derivation(t3, t3.basis_vector(0)) + map_from_columns(t3, cols);
  const auto r = decompose_theorem_d(t3, d);
  REQUIRE(r.decomposition);
  CHECK(r.warnings.empty());
  const Subspace strict = Subspace::span(kQ, 6, std::vector<Vec>{t3.basis_vector(1), t3.basis_vector(2), t3.basis_vector(4)});
  CHECK(r.decomposition->rad == strict);
  for (const auto& c : r.decomposition->residual.columns()) CHECK(strict.contains(c));
  CHECK(inner_derivation(t3, r.decomposition->a) + r.decomposition->residual == d);

  std::mt19937_64 rng(11);
  const Algebra m25 = matrix_algebra(kF5, 2);
  for (int k = 0; k < 10; ++k) {
    const LinMap ad = inner_derivation(m25, random_vec(kF5, 4, rng));
    const auto s = decompose_theorem_d(m25, ad);
    REQUIRE(s.decomposition);
    CHECK(s.decomposition->residual == LinMap::zero(kF5, 4));
    CHECK(inner_derivation(m25, s.decomposition->a) == ad);
  }

  const Algebra m2 = matrix_algebra(kQ, 2);
  const auto none = decompose_theorem_d(m2, identity_map(m2));
  CHECK_FALSE(none.decomposition);
  // [a, e11] = e11 already has no solution.
  CHECK(none.inconsistent_prefix == 1u);
  CHECK_FALSE(formal_pass(m2, IdentityKind::XDXX, identity_map(m2)));
}

TEST_CASE("characteristic guards") {
  const Algebra m2 = matrix_algebra(kF2, 2);
  const LinMap id = identity_map(m2);
  CHECK_THROWS_WITH_AS(decompose_theorem_d(m2, id), doctest::Contains("CHARACTERISTIC_VIOLATION"), Error);
  const auto r = decompose_theorem_d(m2, inner_derivation(m2, m2.basis_vector(1)), true);
  CHECK(r.decomposition);
  CHECK(r.warnings.size() == 1);

  const Algebra m3 = matrix_algebra(kF3, 2);
  CHECK_THROWS_WITH_AS(decompose_theorem_a(m3, identity_map(m3)), doctest::Contains("CHARACTERISTIC_VIOLATION"), Error);
  CHECK(decompose_theorem_a(m3, identity_map(m3), true).factorization);
  CHECK_NOTHROW(decompose_theorem_d(m3, identity_map(m3)));
}

TEST_CASE("decompose_theorem_a examples") {
  const Algebra m3 = matrix_algebra(kQ, 3);
  const auto id = decompose_theorem_a(m3, identity_map(m3));
  REQUIRE(id.factorization);
  CHECK(id.factorization->alpha == m3.require_unit());
  CHECK(id.factorization->j == identity_map(m3));

  const Algebra m27 = matrix_algebra(kF7, 2);
  const LinMap conj = conjugation(m27, vec_of(kF7, {1, 1, 0, 1}));
  const auto two = decompose_theorem_a(m27, scalar_multiple(m27, scalar_unit(m27, 2), conj));
  REQUIRE(two.factorization);
  CHECK(two.factorization->alpha == vec_of(kF7, {2, 0, 0, 2}));
  CHECK(two.factorization->j == conj);

  // x + tr(x) e12 on M2(F3): T(1) = 1 + 2 e12 is not central.
  const Algebra m23 = matrix_algebra(kF3, 2);
  std::vector<Element> cols = identity_map(m23).columns();
  cols[0] = add(cols[0], m23.basis_vector(1));
  cols[3] = add(cols[3], m23.basis_vector(1));
  const auto remaut = decompose_theorem_a(m23, map_from_columns(m23, cols), true);
  CHECK_FALSE(remaut.factorization);
  CHECK(remaut.failure == FactorizationFailure::AlphaNotCentral);
  CHECK(remaut.alpha == vec_of(kF3, {1, 2, 0, 1}));
  CHECK(failure_token(remaut.failure) == "ALPHA_NOT_CENTRAL");

  const Algebra t2 = upper_triangular(kQ, 2);
  CHECK(decompose_theorem_a(t2, identity_map(t2)).failure == FactorizationFailure::SemisimpleRequired);

  CHECK(decompose_theorem_a(m27, scalar_multiple(m27, scalar_unit(m27, 3), conj)).failure ==
        FactorizationFailure::AlphaCubeNotOne);

  // Fixes 1 but sends e12 to e12 + e11 - e22.
  std::vector<Element> twist = identity_map(m27).columns();
  twist[1] = vec_of(kF7, {1, 1, 0, 6});
  const LinMap bad = map_from_columns(m27, twist);
  REQUIRE_FALSE(classify(m27, bad).jordan_automorphism);
  CHECK(decompose_theorem_a(m27, bad).failure == FactorizationFailure::JordanFail);

  // The swap on F7 x F7 is an automorphism, but M(A) consists of multiplications only.
  const Algebra f = field_extension(Polynomial(kF7, {Scalar::zero(kF7), Scalar::one(kF7)}));
  const Algebra ff = direct_sum(f, f);
  const LinMap swap = map_from_columns(ff, {ff.basis_vector(1), ff.basis_vector(0)});
  CHECK(decompose_theorem_a(ff, swap).failure == FactorizationFailure::NotInMultAlgebra);

  const Algebra zero = Algebra::build(kQ, {{vec_of(kQ, {0})}}, {});
  CHECK_THROWS_WITH_AS(decompose_theorem_a(zero, identity_map(zero)), doctest::Contains("NOT_UNITAL"), Error);
}

TEST_CASE("split_ac3 examples") {
  const Algebra t2 = upper_triangular(kQ, 2);
  const Subspace diag2 = *t2.tags().complement;
  const auto id = split_ac3(t2, identity_map(t2), diag2);
  REQUIRE(id.split);
  // basis e11 e12 e22
  CHECK(id.split->jordan_part == map_from_columns(t2, {t2.basis_vector(0), t2.zero(), t2.basis_vector(2)}));
  CHECK(id.split->radical_part == map_from_columns(t2, {t2.zero(), t2.basis_vector(1), t2.zero()}));

  const Algebra t3 = upper_triangular(kQ, 3);
  const LinMap conj = conjugation(t3, vec_of(kQ, {1, 1, 0, 1, 0, 1}));
  REQUIRE(classify(t3, conj).automorphism);
  const auto c = split_ac3(t3, conj, *t3.tags().complement);
  REQUIRE(c.split);
  CHECK(c.split->jordan_part + c.split->radical_part == conj);
  for (const auto& col : c.split->radical_part.columns()) CHECK(c.rad.contains(col));
  for (const auto& col : c.split->jordan_part.columns()) CHECK(t3.tags().complement->contains(col));

  const Subspace e11 = Subspace::span(kQ, 3, std::vector<Vec>{t2.basis_vector(0)});
  CHECK_THROWS_WITH_AS(split_ac3(t2, identity_map(t2), e11), doctest::Contains("NOT_A_COMPLEMENT"), Error);
  // span{e11 + e12, e22} meets rad trivially but is not closed: (e11+e12)^2 = e11+e12, (e11+e12)e22 = e12.
  const Subspace skew = Subspace::span(kQ, 3, std::vector<Vec>{vec_of(kQ, {1, 1, 0}), t2.basis_vector(2)});
  CHECK_THROWS_WITH_AS(split_ac3(t2, identity_map(t2), skew), doctest::Contains("NOT_A_COMPLEMENT"), Error);
  CHECK_THROWS_WITH_AS(split_ac3(t2, LinMap::zero(kQ, 3), diag2), doctest::Contains("UNIT_NOT_FIXED"), Error);

  // Fixes 1; pi T sends e12 to e11 - e22, while e11 o e12 = e12.
  std::vector<Element> cols{t2.basis_vector(0), vec_of(kQ, {1, 1, -1}), t2.basis_vector(2)};
  const auto f = split_ac3(t2, map_from_columns(t2, cols), diag2);
  CHECK_FALSE(f.split);
  REQUIRE(f.jordan_failure);
  CHECK(*f.jordan_failure == std::make_pair<std::size_t, std::size_t>(0, 1));
}

TEST_CASE("roundtrip of radical-valued perturbations of inner derivations") {
  std::mt19937_64 rng(2024);
  for (const Algebra& a : {upper_triangular(kQ, 2), upper_triangular(kQ, 3), upper_triangular(kF5, 3)}) {
    for (int k = 0; k < 20; ++k) {
      const LinMap d = inner_derivation(a, random_vec(a.field(), a.dim(), rng)) + radical_valued(a, rng);
      const auto r = decompose_theorem_d(a, d);
      REQUIRE(r.decomposition);
      CHECK(inner_derivation(a, r.decomposition->a) + r.decomposition->residual == d);
    }
  }
}

TEST_CASE("formal xdxx pass implies a decomposition") {
  std::mt19937_64 rng(5);
  for (const Algebra& a : {upper_triangular(kQ, 2), upper_triangular(kF5, 2), upper_triangular(kF3, 3),
                           matrix_algebra(kF5, 2), matrix_algebra(kQ, 2)}) {
    std::vector<LinMap> maps;
    for (int k = 0; k < 5; ++k) {
      maps.push_back(inner_derivation(a, random_vec(a.field(), a.dim(), rng)) + radical_valued(a, rng));
      maps.push_back(random_map(a, rng));
    }
    for (const auto& d : a.derivation_space()) maps.push_back(d);
    for (const auto& d : maps)
      if (formal_pass(a, IdentityKind::XDXX, d)) CHECK(decompose_theorem_d(a, d).decomposition);
  }
}

TEST_CASE("on semisimple algebras formal xdxx decides innerness") {
  std::mt19937_64 rng(8);
  for (const Algebra& a : {matrix_algebra(kF5, 2), matrix_algebra(kQ, 2), matrix_algebra(kF7, 2)}) {
    int inner = 0;
    for (int k = 0; k < 12; ++k) {
      const LinMap d = k % 2 == 0 ? inner_derivation(a, random_vec(a.field(), a.dim(), rng)) : random_map(a, rng);
      const bool pass = formal_pass(a, IdentityKind::XDXX, d);
      CHECK(pass == solve_inner_derivation(a, d).has_value());
      inner += pass;
    }
    CHECK(inner >= 6);
  }
}

TEST_CASE("on semisimple algebras formal cube decides the factorization") {
  std::mt19937_64 rng(13);
  const Algebra m27 = matrix_algebra(kF7, 2);
  const Algebra m2q = matrix_algebra(kQ, 2);
  const Algebra f = field_extension(Polynomial(kF7, {Scalar::zero(kF7), Scalar::one(kF7)}));
  const Algebra ff = direct_sum(f, f);
  struct Case {
    const Algebra* a;
    LinMap t;
  };
  std::vector<Case> cases;
  for (int k = 0; k < 6; ++k) {
    LinMap j = conjugation(m27, random_unit(m27, rng));
    if (k % 2) j = transpose_map(m27) * j;
    cases.push_back({&m27, scalar_multiple(m27, scalar_unit(m27, std::array{1, 2, 4}[k % 3]), j)});
    cases.push_back({&m27, random_map(m27, rng)});
    cases.push_back({&m2q, conjugation(m2q, random_unit(m2q, rng))});
    cases.push_back({&m2q, random_map(m2q, rng)});
  }
  cases.push_back({&m27, scalar_multiple(m27, scalar_unit(m27, 3), identity_map(m27))});
  cases.push_back({&ff, identity_map(ff)});
  cases.push_back({&ff, map_from_columns(ff, {ff.basis_vector(1), ff.basis_vector(0)})});
  cases.push_back({&ff, map_from_columns(ff, {vec_of(kF7, {2, 0}), vec_of(kF7, {0, 4})})});

  int successes = 0;
  for (const auto& c : cases) {
    const auto r = decompose_theorem_a(*c.a, c.t);
    CHECK(formal_pass(*c.a, IdentityKind::CubeDiff, c.t) == r.factorization.has_value());
    if (!r.factorization) continue;
    ++successes;
    CHECK(formal_pass(*c.a, IdentityKind::CubeDiff, scalar_multiple(*c.a, r.factorization->alpha, r.factorization->j)));
    const MapProfile p = classify(*c.a, r.factorization->j);
    CHECK(p.jordan_automorphism);
    CHECK(p.in_mult_algebra);
  }
  CHECK(successes >= 13);
}

TEST_CASE("cube-preserving maps preserve fourth powers modulo the radical") {
  std::mt19937_64 rng(21);
  for (const Algebra& a : {upper_triangular(kQ, 2), upper_triangular(kQ, 3), upper_triangular(kF5, 3)}) {
    std::vector<LinMap> maps{identity_map(a)};
    for (int k = 0; k < 4; ++k) {
      const LinMap conj = conjugation(a, random_unit(a, rng));
      maps.push_back(conj);
      maps.push_back(conj + radical_valued(a, rng) * conj);
    }
    for (const auto& t : maps) {
      if (!formal_pass(a, IdentityKind::CubeDiff, t)) continue;
      CHECK(formal_pass(a, IdentityKind::QuarticDiff, t));
    }
  }
}
