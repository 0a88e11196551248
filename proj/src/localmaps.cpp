#include "fdalg/localmaps.hpp"

#include <random>

#include "fdalg/enumerate.hpp"

namespace fdalg {

std::string_view local_kind_token(LocalKind kind) {
  switch (kind) {
    case LocalKind::Derivation: return "derivation";
    case LocalKind::InnerDerivation: return "inner-derivation";
    case LocalKind::InnerAutomorphism: return "inner-automorphism";
    case LocalKind::JordanAutomorphism: return "jordan-automorphism";
  }
  return "?";
}

std::optional<LocalKind> parse_local_kind(std::string_view token) {
  for (auto k : {LocalKind::Derivation, LocalKind::InnerDerivation, LocalKind::InnerAutomorphism,
                 LocalKind::JordanAutomorphism})
    if (local_kind_token(k) == token) return k;
  return std::nullopt;
}

namespace {

// Per-map state shared by every point of a certification run.
class OrbitOracle {
 public:
  OrbitOracle(const Algebra& alg, LocalKind kind, const LinMap& t) : alg_(alg), kind_(kind), t_(t) {
    require_map(alg, t);
    if ((kind == LocalKind::InnerAutomorphism || kind == LocalKind::JordanAutomorphism) && !alg.is_matrix_algebra())
      throw Error(ErrorCode::UnsupportedAlgebra,
                  std::string(local_kind_token(kind)) + " orbits are decided only on full matrix algebras");
    if (kind == LocalKind::Derivation) der_ = alg.derivation_space();
  }

  OrbitWitness test(const Element& x) const {
    alg_.require_element(x);
    const Element y = t_.apply(x);
    OrbitWitness w;
    switch (kind_) {
      case LocalKind::Derivation: {
        if (der_.empty()) {
          w.member = is_zero_vec(y);
          if (w.member) w.derivation_coords = Vec{};
          break;
        }
        std::vector<Vec> cols;
        for (const auto& d : der_) cols.push_back(d.apply(x));
        w.derivation_coords = solve(Matrix::from_columns(alg_.field(), cols), y);
        w.member = w.derivation_coords.has_value();
        break;
      }
      case LocalKind::InnerDerivation: {
        std::vector<Vec> cols;
        for (std::size_t k = 0; k < alg_.dim(); ++k) cols.push_back(alg_.commutator(alg_.basis_vector(k), x));
        w.generator = solve(Matrix::from_columns(alg_.field(), cols), y);
        w.member = w.generator.has_value();
        break;
      }
      case LocalKind::InnerAutomorphism:
      case LocalKind::JordanAutomorphism: {
        w.source_factors = invariant_factors(alg_.to_matrix(x));
        w.image_factors = invariant_factors(alg_.to_matrix(y));
        w.member = *w.source_factors == *w.image_factors;
        break;
      }
    }
    return w;
  }

 private:
  const Algebra& alg_;
  LocalKind kind_;
  const LinMap& t_;
  std::vector<LinMap> der_;
};

}  // namespace

OrbitWitness orbit_membership(const Algebra& alg, LocalKind kind, const LinMap& t, const Element& x) {
  return OrbitOracle(alg, kind, t).test(x);
}

Certification certify_local(const Algebra& alg, LocalKind kind, const LinMap& t, const PointwiseOptions& options) {
  const OrbitOracle oracle(alg, kind, t);
  const std::size_t n = alg.dim();
  Certification c;
  c.budget = options.budget;
  for (std::size_t i = 0; i < n; ++i) c.audits.push_back({alg.basis_vector(i), oracle.test(alg.basis_vector(i))});

  auto fail_at = [&](Element x) {
    c.status = VerdictStatus::Fail;
    c.audits.push_back({x, oracle.test(x)});
    c.witness = std::move(x);
  };

  const auto total = space_size(alg.field(), n);
  const bool fits = total && *total <= options.budget;
  if (options.plan == PointwisePlan::Exhaustive && !fits)
    throw Error(ErrorCode::BudgetExceeded, total ? "|F|^" + std::to_string(n) + " = " + std::to_string(*total) +
                                                       " exceeds budget " + std::to_string(options.budget)
                                                 : "exhaustive certification needs a finite field");

  if (fits && options.plan != PointwisePlan::Sampled) {
    c.mode = CheckMode::PointwiseExhaustive;
    const auto bad = first_failure(
        *total, [&](std::uint64_t idx) { return oracle.test(element_at(alg.field(), n, idx)).member; }, options.workers);
    if (bad) {
      c.checked = *bad + 1;
      fail_at(element_at(alg.field(), n, *bad));
    } else {
      c.checked = *total;
      c.status = VerdictStatus::Pass;
    }
    return c;
  }

  c.mode = CheckMode::PointwiseSampled;
  c.seed = options.seed;
  std::vector<Element> plan;
  for (std::size_t i = 0; i < n; ++i) plan.push_back(alg.basis_vector(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) plan.push_back(add(alg.basis_vector(i), alg.basis_vector(j)));
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    Element x;
    for (std::size_t k = 0; k < n; ++k) x.push_back(random_scalar(alg.field(), rng));
    plan.push_back(std::move(x));
  }
  for (auto& x : plan) {
    ++c.checked;
    if (!oracle.test(x).member) {
      fail_at(std::move(x));
      return c;
    }
  }
  c.status = VerdictStatus::UndecidedSampled;
  return c;
}

A2Report experiment_a2(const Algebra& alg, const LinMap& t, std::uint64_t budget, unsigned workers) {
  PointwiseOptions options;
  options.budget = budget;
  options.plan = PointwisePlan::Exhaustive;
  options.workers = workers;
  A2Report report;
  report.certification = certify_local(alg, LocalKind::JordanAutomorphism, t, options);
  if (report.certification.status == VerdictStatus::Pass) {
    report.profile = classify(alg, t);
    report.anomaly = !(report.profile->jordan_automorphism && report.profile->in_mult_algebra);
  }
  return report;
}

}  // namespace fdalg
