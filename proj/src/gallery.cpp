#include "fdalg/gallery.hpp"

#include <map>

#include "fdalg/decompose.hpp"
#include "fdalg/identities.hpp"
#include "fdalg/localmaps.hpp"
#include "fdalg/maps.hpp"

namespace fdalg {

namespace {

using Compute = std::function<std::string(const Fixture&)>;

std::string boolean(bool b) { return b ? "true" : "false"; }

ExpectedRow check_row(IdentityKind kind, CheckMode mode, std::string expected) {
  const bool formal = mode == CheckMode::Formal;
  std::string args = "identity=" + std::string(identity_token(kind)) + " mode=" + (formal ? "formal" : "pointwise");
  Compute f = [kind, formal](const Fixture& fx) {
    const IdentitySpec spec{kind, fx.map, std::nullopt};
    if (formal) return std::string(status_token(check_formal(fx.algebra, spec).status));
    const Verdict v = check_pointwise(fx.algebra, spec);
    return std::string(status_token(v.status)) + " checked=" + std::to_string(v.checked);
  };
  return {"check", std::move(args), std::move(expected), std::move(f)};
}

// A flag of classify applied to the fixture map, or to `other` when given.
ExpectedRow flag_row(const std::string& flag, bool expected, std::optional<LinMap> other = std::nullopt,
                     const std::string& map_name = "T") {
  Compute f = [flag, other](const Fixture& fx) {
    for (const auto& [name, value] : profile_flags(classify(fx.algebra, other ? *other : fx.map)))
      if (name == flag) return boolean(value);
    throw std::logic_error("unknown classification flag " + flag);
  };
  return {"classify", "flag=" + flag + " map=" + map_name, boolean(expected), std::move(f)};
}

ExpectedRow unital_row() {
  Compute f = [](const Fixture& fx) {
    const Element& one = fx.algebra.require_unit();
    return boolean(fx.map.apply(one) == one);
  };
  return {"fixes-unit", "T(1) == 1", "true", std::move(f)};
}

ExpectedRow theorem_a_row(std::string expected) {
  Compute f = [](const Fixture& fx) {
    const auto r = decompose_theorem_a(fx.algebra, fx.map, true);
    return r.factorization ? std::string("OK") : std::string(failure_token(r.failure));
  };
  return {"decompose", "theorem=a allow-char-violation", std::move(expected), std::move(f)};
}

ExpectedRow inner_row(std::string expected) {
  Compute f = [](const Fixture& fx) {
    return std::string(solve_inner_derivation(fx.algebra, fx.map) ? "FOUND" : "NONE");
  };
  return {"solve-inner-derivation", "map=T", std::move(expected), std::move(f)};
}

ExpectedRow orbit_row(LocalKind kind, const Element& x, const std::string& label, bool expected) {
  Compute f = [kind, x](const Fixture& fx) { return boolean(orbit_membership(fx.algebra, kind, fx.map, x).member); };
  return {"orbit", "kind=" + std::string(local_kind_token(kind)) + " x=" + label, boolean(expected), std::move(f)};
}

ExpectedRow certify_row(LocalKind kind, std::optional<std::uint64_t> seed, std::string expected) {
  std::string args = "kind=" + std::string(local_kind_token(kind));
  if (seed) args += " seed=" + std::to_string(*seed);
  Compute f = [kind, seed](const Fixture& fx) {
    PointwiseOptions options;
    if (seed) options.seed = *seed;
    const Certification c = certify_local(fx.algebra, kind, fx.map, options);
    return std::string(status_token(c.status)) + " checked=" + std::to_string(c.checked);
  };
  return {"certify-local", std::move(args), std::move(expected), std::move(f)};
}

// x -> x + tr(x) c on M2
LinMap trace_shift(const Algebra& m2, const Element& c) {
  std::vector<Element> cols = identity_map(m2).columns();
  cols[0] = add(cols[0], c);
  cols[3] = add(cols[3], c);
  return map_from_columns(m2, cols);
}

// x -> x + sum_i (a_i x b_i - b_i x a_i)
LinMap skew_sum(const Algebra& alg, const Element& a, const Element& b, bool with_identity) {
  std::vector<Element> cols;
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    const Element x = alg.basis_vector(j);
    Element y = sub(alg.mul(alg.mul(a, x), b), alg.mul(alg.mul(b, x), a));
    if (with_identity) y = add(y, x);
    cols.push_back(std::move(y));
  }
  return map_from_columns(alg, cols);
}

Fixture f2_m2_cube() {
  const FieldSpec f = FieldSpec::prime_field(2);
  const Algebra a = matrix_algebra(f, 2);
  // [[x11, x12], [x21, x22]] -> [[x22, x12], [0, x11]]
  const LinMap d = map_from_columns(a, {a.basis_vector(3), a.basis_vector(1), a.zero(), a.basis_vector(0)});
  return {"f2-m2-cube",
          a,
          d,
          {check_row(IdentityKind::XDXX, CheckMode::PointwiseExhaustive, "PASS checked=16"),
           check_row(IdentityKind::XDXX, CheckMode::Formal, "FAIL"), flag_row("derivation", false)},
          "M2(F2), D(x) = [[x22, x12], [0, x11]]; xD(x)x has trace zero at every point but not formally"};
}

Fixture eaut1() {
  const FieldSpec f = FieldSpec::prime_field(2);
  const Algebra a = matrix_algebra(f, 2);
  return {"eaut1",
          a,
          trace_shift(a, a.require_unit()),
          {check_row(IdentityKind::CubeDiff, CheckMode::PointwiseExhaustive, "PASS checked=16"), unital_row(),
           flag_row("automorphism", false), flag_row("antiautomorphism", true), flag_row("jordan_automorphism", true),
           theorem_a_row("OK")},
          "M2(F2), T(x) = x + tr(x)1, which in characteristic 2 is the adjugate map"};
}

Fixture remaut_p3() {
  const FieldSpec f = FieldSpec::prime_field(3);
  const Algebra a = matrix_algebra(f, 2);
  return {"remaut-p3",
          a,
          trace_shift(a, a.basis_vector(1)),
          {check_row(IdentityKind::CubeDiff, CheckMode::PointwiseExhaustive, "PASS checked=81"),
           theorem_a_row("ALPHA_NOT_CENTRAL")},
          "M2(F3), T(x) = x + phi(x)a with a = e12 (a^3 = 0) and phi = trace"};
}

Fixture rd_skew() {
  const FieldSpec f = FieldSpec::rationals();
  const Algebra a = matrix_algebra(f, 2);
  return {"rd-skew",
          a,
          skew_sum(a, a.basis_vector(0), a.basis_vector(1), false),
          {check_row(IdentityKind::XD, CheckMode::Formal, "PASS"), check_row(IdentityKind::XDXX, CheckMode::Formal, "FAIL"),
           inner_row("NONE")},
          "M2(Q), D(x) = a x b - b x a with a = e11, b = e12; x D(x) = [xa, xb]"};
}

Fixture rh_square() {
  const FieldSpec f = FieldSpec::rationals();
  const Algebra a = matrix_algebra(f, 3);
  return {"rh-square",
          a,
          skew_sum(a, a.basis_vector(2), a.basis_vector(1), true),
          {check_row(IdentityKind::SquareDiff, CheckMode::Formal, "PASS"), unital_row(),
           flag_row("jordan_automorphism", false)},
          "M3(Q), T(x) = x + a x b - b x a with a = e13, b = e12, so a^2 = ab = ba = b^2 = 0"};
}

Fixture tri_rad_comm() {
  const FieldSpec f = FieldSpec::rationals();
  const Algebra a = upper_triangular(f, 3);
  Compute equal = [](const Fixture& fx) { return boolean(fx.algebra.radical() == fx.algebra.commutator_space()); };
  Compute dim = [](const Fixture& fx) { return std::to_string(fx.algebra.radical().dim()); };
  return {"tri-rad-comm",
          a,
          identity_map(a),
          {{"invariant", "radical == commutator", "true", equal}, {"invariant", "dim radical", "3", dim}},
          "T3(Q); the radical is the strict upper triangle, which is also [A,A]"};
}

Fixture ede_p3() {
  const FieldSpec f = FieldSpec::rational_functions(3);
  const Scalar t = Scalar::variable(f);
  const Scalar zero = Scalar::zero(f);
  const Algebra a = field_extension(Polynomial(f, {-t, zero, zero, Scalar::one(f)}));
  const Element one = a.basis_vector(0), alpha = a.basis_vector(1), alpha2 = a.basis_vector(2);
  // f -> f', so alpha^2 -> 2 alpha
  const LinMap prime = map_from_columns(a, {a.zero(), one, scale(Scalar::from_int(f, 2), alpha)});
  const LinMap l = map_from_columns(a, {a.zero(), one, a.zero()});
  Compute der_dim = [](const Fixture& fx) { return std::to_string(fx.algebra.derivation_space().size()); };
  return {"ede-p3",
          a,
          l,
          {flag_row("derivation", true, prime, "d/dalpha"),
           flag_row("derivation", false),
           {"invariant", "dim derivations", "3", der_dim},
           orbit_row(LocalKind::Derivation, alpha, "alpha", true),
           orbit_row(LocalKind::Derivation, alpha2, "alpha^2", true),
           orbit_row(LocalKind::Derivation, add(one, alpha), "1+alpha", true),
           orbit_row(LocalKind::Derivation, add(scale(t, alpha), alpha2), "t*alpha+alpha^2", true),
           certify_row(LocalKind::Derivation, 1, "UNDECIDED_SAMPLED checked=262")},
          "F3(t)(alpha) with alpha^3 = t; L(1) = 0, L(alpha) = 1, L(alpha^2) = 0"};
}

Fixture transpose_m2() {
  const FieldSpec f = FieldSpec::prime_field(3);
  const Algebra a = matrix_algebra(f, 2);
  return {"transpose-m2",
          a,
          transpose_map(a),
          {certify_row(LocalKind::InnerAutomorphism, std::nullopt, "PASS checked=81"), flag_row("automorphism", false),
           flag_row("antiautomorphism", true), flag_row("jordan_automorphism", true), flag_row("in_mult_algebra", true)},
          "M2(F3), x -> x^t; every matrix is similar to its transpose"};
}

Fixture cd2_demo() {
  const FieldSpec f = FieldSpec::prime_field(3);
  const Algebra a = matrix_algebra(f, 2);
  Compute decomposes = [](const Fixture& fx) {
    return std::string(decompose_theorem_d(fx.algebra, fx.map).decomposition ? "OK" : "NO_DECOMPOSITION");
  };
  return {"cd2-demo",
          a,
          inner_derivation(a, add(a.basis_vector(0), a.basis_vector(1))),
          {certify_row(LocalKind::InnerDerivation, std::nullopt, "PASS checked=81"), inner_row("FOUND"),
           flag_row("derivation", true), {"decompose", "theorem=d", "OK", decomposes}},
          "M2(F3), D = ad_a with a = e11 + e12"};
}

const std::map<std::string, Fixture (*)()>& registry() {
  static const std::map<std::string, Fixture (*)()> r{
      {"f2-m2-cube", f2_m2_cube}, {"eaut1", eaut1},         {"remaut-p3", remaut_p3},
      {"rd-skew", rd_skew},       {"rh-square", rh_square}, {"tri-rad-comm", tri_rad_comm},
      {"ede-p3", ede_p3},         {"transpose-m2", transpose_m2}, {"cd2-demo", cd2_demo},
  };
  return r;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"f2-m2-cube", "eaut1", "remaut-p3", "rd-skew", "rh-square", "tri-rad-comm", "ede-p3", "transpose-m2", "cd2-demo"};
}

Fixture build_fixture(const std::string& name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorCode::UnknownFixture, "no fixture named '" + name + "'");
  return it->second();
}

std::vector<RowOutcome> verify_fixture(const Fixture& fixture) {
  std::vector<RowOutcome> out;
  for (const auto& row : fixture.expected) {
    RowOutcome o{row.operation, row.arguments, row.expected, row.compute(fixture), false};
    o.pass = o.computed == o.expected;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace fdalg
