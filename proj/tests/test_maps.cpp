#include <doctest.h>

#include "fdalg/maps.hpp"
#include "test_support.hpp"

using namespace fdalg;
using namespace fdalg::testing;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime_field(2);
const FieldSpec kF5 = FieldSpec::prime_field(5);
const FieldSpec kF7 = FieldSpec::prime_field(7);

Element random_invertible_element(const Algebra& a, std::mt19937_64& rng) {
  while (true) {
    Element u = random_vec(a.field(), a.dim(), rng);
    if (a.inverse(u)) return u;
  }
}
}  // namespace

TEST_CASE("map constructors") {
  const Algebra m2 = matrix_algebra(kQ, 2);
  CHECK(inner_derivation(m2, m2.basis_vector(1)).apply(m2.basis_vector(2)) == vec_of(kQ, {1, 0, 0, -1}));
  CHECK(transpose_map(m2).apply(m2.basis_vector(1)) == m2.basis_vector(2));

  // (1 + e12) e11 (1 - e12) = e11 - e12 = e11 + 6 e12 over F_7
  const Algebra m27 = matrix_algebra(kF7, 2);
  CHECK(conjugation(m27, vec_of(kF7, {1, 1, 0, 1})).apply(m27.basis_vector(0)) == vec_of(kF7, {1, 6, 0, 0}));
  CHECK_THROWS_WITH_AS(conjugation(m27, m27.basis_vector(0)), doctest::Contains("NOT_INVERTIBLE"), Error);
  CHECK_THROWS_WITH_AS(transpose_map(upper_triangular(kQ, 2)), doctest::Contains("NOT_MATRIX_ALGEBRA"), Error);
  CHECK_THROWS_WITH_AS(scalar_multiple(m2, m2.basis_vector(0), identity_map(m2)), doctest::Contains("NOT_CENTRAL"), Error);
  CHECK(scalar_multiple(m2, scale(Scalar::from_int(kQ, 3), m2.require_unit()), identity_map(m2)).apply(m2.basis_vector(3)) ==
        vec_of(kQ, {0, 0, 0, 3}));
  CHECK_THROWS_WITH_AS(classify(m2, LinMap::identity(kQ, 3)), doctest::Contains("ALGEBRA_MISMATCH"), Error);
}

TEST_CASE("classification examples") {
  const Algebra m2 = matrix_algebra(kQ, 2);
  const MapProfile t = classify(m2, transpose_map(m2));
  CHECK(t.antiautomorphism);
  CHECK_FALSE(t.automorphism);
  CHECK(t.jordan_automorphism);
  CHECK(t.in_mult_algebra);
  CHECK(t.unital);

  // D((x_ij)) = [[x22, x12], [0, x11]] over F_2
  const Algebra f2 = matrix_algebra(kF2, 2);
  const LinMap d = map_from_columns(f2, {f2.basis_vector(3), f2.basis_vector(1), f2.zero(), f2.basis_vector(0)});
  CHECK_FALSE(classify(f2, d).derivation);

  const MapProfile id = classify(m2, identity_map(m2));
  CHECK(id.automorphism);
  CHECK(id.antiautomorphism == false);
  CHECK_FALSE(id.derivation);

  // Without a unit nothing lies in M(A).
  const Algebra zero = Algebra::build(kQ, {{vec_of(kQ, {0})}}, {});
  CHECK_FALSE(classify(zero, identity_map(zero)).in_mult_algebra);
}

TEST_CASE("x + tr(x) 1 on M2(F_2) equals the adjugate") {
  const Algebra f2 = matrix_algebra(kF2, 2);
  std::vector<Element> cols;
  for (std::size_t j = 0; j < 4; ++j) {
    Element c = f2.basis_vector(j);
    if (j == 0 || j == 3) c = add(c, f2.require_unit());
    cols.push_back(c);
  }
  const LinMap t = map_from_columns(f2, cols);
  // adj [[a, b], [c, d]] = [[d, -b], [-c, a]] reverses products; check on every pair directly.
  auto adj = [](const Element& x) { return Element{x[3], -x[1], -x[2], x[0]}; };
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Element x = random_vec(kF2, 4, rng);
    const Element y = random_vec(kF2, 4, rng);
    REQUIRE(t.apply(x) == adj(x));
    REQUIRE(adj(f2.mul(x, y)) == f2.mul(adj(y), adj(x)));
  }
  const MapProfile p = classify(f2, t);
  CHECK(p.antiautomorphism);
  CHECK_FALSE(p.automorphism);
  CHECK(p.unital);
}

TEST_CASE("inner derivations classify as derivations") {
  const Algebra m3 = matrix_algebra(kF5, 3);
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 50; ++trial) {
    const Element a = random_vec(kF5, 9, rng);
    const MapProfile p = classify(m3, inner_derivation(m3, a));
    REQUIRE(p.derivation);
    REQUIRE(p.in_mult_algebra);
  }
}

TEST_CASE("conjugations are unital automorphisms and compose correctly") {
  std::mt19937_64 rng(4);
  for (const Algebra& a : {matrix_algebra(kF5, 2), matrix_algebra(kQ, 3)}) {
    const LinMap tr = transpose_map(a);
    for (int trial = 0; trial < 25; ++trial) {
      const LinMap c1 = conjugation(a, random_invertible_element(a, rng));
      const LinMap c2 = conjugation(a, random_invertible_element(a, rng));
      const MapProfile p = classify(a, c1);
      REQUIRE(p.automorphism);
      REQUIRE(p.unital);
      REQUIRE(p.jordan_automorphism);
      REQUIRE(classify(a, c1 * c2).automorphism);
      const MapProfile q = classify(a, c1 * tr);
      REQUIRE(q.antiautomorphism);
      REQUIRE_FALSE(q.automorphism);
    }
  }
}

TEST_CASE("Jordan test on squares agrees with the bilinear test over Q") {
  const Algebra m2 = matrix_algebra(kQ, 2);
  std::mt19937_64 rng(12);
  int jordan = 0;
  for (int trial = 0; trial < 60; ++trial) {
    LinMap t = trial % 3 == 0   ? conjugation(m2, random_invertible_element(m2, rng))
               : trial % 3 == 1 ? conjugation(m2, random_invertible_element(m2, rng)) * transpose_map(m2)
                                : LinMap(random_matrix(kQ, 4, 4, rng));
    if (trial % 3 == 2 && trial % 2 == 0) t = t + transpose_map(m2);
    // squares on basis vectors and pairwise sums b_i + b_j determine the symmetric bilinear form
    bool squares = true;
    for (std::size_t i = 0; i < 4 && squares; ++i)
      for (std::size_t j = i; j < 4 && squares; ++j) {
        const Element x = i == j ? m2.basis_vector(i) : add(m2.basis_vector(i), m2.basis_vector(j));
        squares = t.apply(m2.mul(x, x)) == m2.mul(t.apply(x), t.apply(x));
      }
    const MapProfile p = classify(m2, t);
    REQUIRE(squares == p.jordan_homomorphism);
    if (p.jordan_homomorphism) ++jordan;
  }
  CHECK(jordan >= 40);
}
