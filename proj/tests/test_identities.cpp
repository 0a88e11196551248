#include <doctest.h>

#include <array>
#include <map>

#include "fdalg/enumerate.hpp"
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

LinMap f2_gallery_map(const Algebra& f2) {
  return map_from_columns(f2, {f2.basis_vector(3), f2.basis_vector(1), f2.zero(), f2.basis_vector(0)});
}

// Polynomials over F_2 in the four matrix entries, keyed by exponent vectors.
using Mono = std::array<int, 4>;
using Poly2 = std::map<Mono, int>;

Poly2 padd(const Poly2& a, const Poly2& b) {
  Poly2 r = a;
  for (const auto& [m, c] : b) r[m] = (r[m] + c) % 2;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

Poly2 pmul(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m;
      for (int k = 0; k < 4; ++k) m[k] = ma[k] + mb[k];
      r[m] = (r[m] + ca * cb) % 2;
    }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

using PMat = std::array<std::array<Poly2, 2>, 2>;

PMat pmatmul(const PMat& a, const PMat& b) {
  PMat r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = padd(pmul(a[i][0], b[0][j]), pmul(a[i][1], b[1][j]));
  return r;
}

Poly2 var(int k) {
  Mono m{0, 0, 0, 0};
  m[k] = 1;
  return {{m, 1}};
}

// tr(x D(x) x) for D((x_ij)) = [[x22, x12], [0, x11]] with generic x.
Poly2 symbolic_trace_xdxx() {
  const PMat x{{{var(0), var(1)}, {var(2), var(3)}}};
  const PMat dx{{{var(3), var(1)}, {Poly2{}, var(0)}}};
  const PMat p = pmatmul(pmatmul(x, dx), x);
  return padd(p[0][0], p[1][1]);
}

Element random_invertible_element(const Algebra& a, std::mt19937_64& rng) {
  while (true) {
    Element u = random_vec(a.field(), a.dim(), rng);
    if (a.inverse(u)) return u;
  }
}
}  // namespace

TEST_CASE("identity tokens") {
  for (auto k : {IdentityKind::XDXX, IdentityKind::CubeDiff, IdentityKind::SquareDiff, IdentityKind::QuarticDiff,
                 IdentityKind::H1, IdentityKind::XD})
    CHECK(parse_identity_kind(identity_token(k)) == k);
  CHECK_FALSE(parse_identity_kind("quartic"));
  CHECK(identity_degree(IdentityKind::QuarticDiff) == 4);
  CHECK(identity_degree(IdentityKind::SquareDiff) == 2);
}

TEST_CASE("formal examples") {
  std::mt19937_64 rng(3);
  const Algebra m3 = matrix_algebra(kQ, 3);
  const Verdict inner = check_formal(m3, {IdentityKind::XDXX, inner_derivation(m3, random_vec(kQ, 9, rng)), {}});
  CHECK(inner.status == VerdictStatus::Pass);
  CHECK(inner.checked == 165);
  CHECK(inner.modes_equivalent);

  const Algebra m27 = matrix_algebra(kF7, 2);
  const IdentitySpec cube{IdentityKind::CubeDiff, conjugation(m27, random_invertible_element(m27, rng)), {}};
  CHECK(check_formal(m27, cube).status == VerdictStatus::Pass);
  const Verdict ex = check_pointwise(m27, cube);
  CHECK(ex.status == VerdictStatus::Pass);
  CHECK(ex.mode == CheckMode::PointwiseExhaustive);
  CHECK(ex.checked == 2401);

  const Algebra m2 = matrix_algebra(kQ, 2);
  const Verdict id = check_formal(m2, {IdentityKind::XDXX, identity_map(m2), {}});
  CHECK(id.status == VerdictStatus::Fail);
  REQUIRE(id.coefficient_witness);
  CHECK(*id.coefficient_witness == std::vector<std::size_t>{0, 0, 0});
  CHECK(*id.coefficient_value == m2.basis_vector(0));
}

TEST_CASE("mode gap on M2(F_2)") {
  const Algebra f2 = matrix_algebra(kF2, 2);
  const IdentitySpec spec{IdentityKind::XDXX, f2_gallery_map(f2), {}};

  const Poly2 tr = symbolic_trace_xdxx();
  REQUIRE_FALSE(tr.empty());
  // the trace polynomial vanishes at every point of F_2^4
  for (std::uint64_t idx = 0; idx < 16; ++idx) {
    int value = 0;
    for (const auto& [m, c] : tr) {
      int term = c;
      for (int k = 0; k < 4; ++k)
        if (m[k] > 0) term *= static_cast<int>((idx >> k) & 1);
      value += term;
    }
    REQUIRE(value % 2 == 0);
  }

  const Verdict pw = check_pointwise(f2, spec);
  CHECK(pw.status == VerdictStatus::Pass);
  CHECK(pw.mode == CheckMode::PointwiseExhaustive);
  CHECK(pw.checked == 16);
  CHECK_FALSE(pw.modes_equivalent);

  const Verdict formal = check_formal(f2, spec);
  CHECK(formal.status == VerdictStatus::Fail);
  REQUIRE(formal.coefficient_witness);
  // The first failing monomial of the engine is the smallest monomial of the trace polynomial
  // in the engine's order (sorted index tuples).
  std::vector<std::vector<std::size_t>> nonzero;
  for (const auto& [m, c] : tr) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < 4; ++k)
      for (int e = 0; e < m[k]; ++e) idx.push_back(k);
    nonzero.push_back(idx);
  }
  CHECK(*formal.coefficient_witness == *std::min_element(nonzero.begin(), nonzero.end()));
}

TEST_CASE("x + tr(x) 1 on M2(F_2) passes the cube condition everywhere") {
  const Algebra f2 = matrix_algebra(kF2, 2);
  std::vector<Element> cols;
  for (std::size_t j = 0; j < 4; ++j) cols.push_back(j == 0 || j == 3 ? add(f2.basis_vector(j), f2.require_unit()) : f2.basis_vector(j));
  const Verdict v = check_pointwise(f2, {IdentityKind::CubeDiff, map_from_columns(f2, cols), {}});
  CHECK(v.status == VerdictStatus::Pass);
  CHECK(v.checked == 16);
}

TEST_CASE("formal PASS is sound and, over F_5 and F_7, complete") {
  std::mt19937_64 rng(71);
  int passes = 0, fails = 0;
  for (const FieldSpec& f : {kF5, kF7}) {
    const Algebra t2 = upper_triangular(f, 2);
    const Algebra m2 = matrix_algebra(f, 2);
    for (int trial = 0; trial < 24; ++trial) {
      const Algebra& a = trial % 2 ? t2 : m2;
      LinMap d = inner_derivation(a, random_vec(f, a.dim(), rng));
      if (trial % 3 == 1) d = d + LinMap(random_matrix(f, a.dim(), a.dim(), rng));
      LinMap t = trial % 2 ? identity_map(a) : conjugation(a, random_invertible_element(a, rng));
      if (trial % 3 == 2) t = t + LinMap(random_matrix(f, a.dim(), a.dim(), rng));
      for (const IdentitySpec& spec : {IdentitySpec{IdentityKind::XDXX, d, {}}, IdentitySpec{IdentityKind::CubeDiff, t, {}},
                                       IdentitySpec{IdentityKind::SquareDiff, t, {}}, IdentitySpec{IdentityKind::XD, d, {}}}) {
        const Verdict formal = check_formal(a, spec);
        const Verdict pw = check_pointwise(a, spec);
        REQUIRE(pw.mode == CheckMode::PointwiseExhaustive);
        REQUIRE(pw.modes_equivalent);
        REQUIRE(formal.status == pw.status);
        if (pw.status == VerdictStatus::Fail) {
          ++fails;
          REQUIRE_FALSE(identity_target(a, spec).contains(evaluate_identity(a, spec, pw.witness[0])));
          REQUIRE(*pw.witness_value == evaluate_identity(a, spec, pw.witness[0]));
        } else {
          ++passes;
        }
      }
    }
  }
  CHECK(passes > 10);
  CHECK(fails > 10);
}

TEST_CASE("formal PASS implies pointwise PASS over F_2 and F_3") {
  std::mt19937_64 rng(9);
  for (const FieldSpec& f : {kF2, kF3}) {
    const Algebra m2 = matrix_algebra(f, 2);
    for (int trial = 0; trial < 10; ++trial) {
      const LinMap d = inner_derivation(m2, random_vec(f, 4, rng));
      const LinMap t = conjugation(m2, random_invertible_element(m2, rng));
      for (const IdentitySpec& spec : {IdentitySpec{IdentityKind::XDXX, d, {}}, IdentitySpec{IdentityKind::CubeDiff, t, {}}}) {
        REQUIRE(check_formal(m2, spec).status == VerdictStatus::Pass);
        REQUIRE(check_pointwise(m2, spec).status == VerdictStatus::Pass);
      }
    }
  }
}

TEST_CASE("h1 follows from the cube condition outside characteristics 2 and 3") {
  std::mt19937_64 rng(5);
  const Algebra t2 = upper_triangular(kF5, 2);
  for (const Algebra& a : {matrix_algebra(kF5, 2), matrix_algebra(kQ, 2), upper_triangular(kQ, 2), t2}) {
    for (int trial = 0; trial < 8; ++trial) {
      LinMap t = conjugation(a, random_invertible_element(a, rng));
      if (a.is_matrix_algebra() && trial % 2) t = t * transpose_map(a);
      if (trial % 4 == 3) t = scale(Scalar::from_int(a.field(), 2), t);
      const IdentitySpec cube{IdentityKind::CubeDiff, t, {}};
      const IdentitySpec h1{IdentityKind::H1, t, {}};
      if (check_formal(a, cube).status == VerdictStatus::Pass) REQUIRE(check_formal(a, h1).status == VerdictStatus::Pass);
    }
  }
  // pointwise h1 over pairs agrees with formal on T2(F_5)
  for (int trial = 0; trial < 4; ++trial) {
    LinMap t = conjugation(t2, random_invertible_element(t2, rng));
    if (trial % 2) t = t + LinMap(random_matrix(kF5, 3, 3, rng));
    const IdentitySpec h1{IdentityKind::H1, t, {}};
    const Verdict pw = check_pointwise(t2, h1);
    REQUIRE(pw.mode == CheckMode::PointwiseExhaustive);
    REQUIRE(check_formal(t2, h1).status == pw.status);
    if (pw.status == VerdictStatus::Fail) {
      REQUIRE(pw.witness.size() == 2);
      REQUIRE_FALSE(t2.commutator_space().contains(evaluate_identity(t2, h1, pw.witness[0], pw.witness[1])));
    }
  }
}

TEST_CASE("quartic condition modulo the radical") {
  std::mt19937_64 rng(31);
  for (const Algebra& a : {upper_triangular(kQ, 2), upper_triangular(kQ, 3), upper_triangular(kF5, 3)}) {
    for (int trial = 0; trial < 5; ++trial) {
      const LinMap t = conjugation(a, random_invertible_element(a, rng));
      REQUIRE(check_formal(a, {IdentityKind::CubeDiff, t, {}}).status == VerdictStatus::Pass);
      REQUIRE(check_formal(a, {IdentityKind::QuarticDiff, t, {}}).status == VerdictStatus::Pass);
    }
  }
  const Algebra m2 = matrix_algebra(kQ, 2);
  const Verdict v = check_formal(m2, {IdentityKind::QuarticDiff, scale(Scalar::from_int(kQ, 2), identity_map(m2)), {}});
  CHECK(v.status == VerdictStatus::Fail);
}

TEST_CASE("symmetrized (2,1) coefficient is [x1,[x1,x2]] in characteristic 3") {
  std::mt19937_64 rng(13);
  for (const Algebra& a : {matrix_algebra(kF3, 2), upper_triangular(kF3, 3), matrix_algebra(kF3, 3)}) {
    const Subspace c = a.commutator_space();
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        const Element x1 = a.basis_vector(i), x2 = a.basis_vector(j);
        const Element s = add(add(a.mul(a.mul(x1, x1), x2), a.mul(a.mul(x1, x2), x1)), a.mul(a.mul(x2, x1), x1));
        REQUIRE(s == a.commutator(x1, a.commutator(x1, x2)));
        REQUIRE(c.contains(s));
      }
  }
}

TEST_CASE("sampled mode and budgets") {
  const Algebra m2 = matrix_algebra(kQ, 2);
  const IdentitySpec inner{IdentityKind::XDXX, inner_derivation(m2, m2.basis_vector(1)), {}};
  PointwiseOptions opts;
  opts.seed = 42;
  opts.samples = 40;
  const Verdict u = check_pointwise(m2, inner, opts);
  CHECK(u.status == VerdictStatus::UndecidedSampled);
  CHECK(u.mode == CheckMode::PointwiseSampled);
  CHECK(u.seed == 42u);
  CHECK(u.checked == 40);

  const Verdict f = check_pointwise(m2, {IdentityKind::XDXX, identity_map(m2), {}}, opts);
  CHECK(f.status == VerdictStatus::Fail);
  REQUIRE(f.witness.size() == 1);
  CHECK_FALSE(m2.commutator_space().contains(m2.power(f.witness[0], 3)));

  // 7^9 exceeds the default budget of 2^21
  const Algebra m3 = matrix_algebra(kF7, 3);
  PointwiseOptions exhaustive;
  exhaustive.plan = PointwisePlan::Exhaustive;
  CHECK_THROWS_WITH_AS(check_pointwise(m3, {IdentityKind::XDXX, identity_map(m3), {}}, exhaustive),
                       doctest::Contains("BUDGET_EXCEEDED"), Error);
  CHECK(check_pointwise(m3, {IdentityKind::XDXX, identity_map(m3), {}}).mode == CheckMode::PointwiseSampled);
}

TEST_CASE("parallel enumeration returns the smallest failing index") {
  for (unsigned workers : {1u, 2u, 5u}) {
    CHECK(first_failure(100000, [](std::uint64_t i) { return i % 7919 != 7918 && i != 52000; }, workers) == 7918u);
    CHECK_FALSE(first_failure(5000, [](std::uint64_t) { return true; }, workers));
  }
  const Algebra f5 = matrix_algebra(kF5, 2);
  PointwiseOptions seq, par;
  seq.workers = 1;
  par.workers = 4;
  const IdentitySpec spec{IdentityKind::CubeDiff, scale(Scalar::from_int(kF5, 2), identity_map(f5)), {}};
  const Verdict a = check_pointwise(f5, spec, seq), b = check_pointwise(f5, spec, par);
  CHECK(a.status == VerdictStatus::Fail);
  CHECK(a.witness == b.witness);
  CHECK(a.checked == b.checked);
}
