#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdalg/identities.hpp"
#include "fdalg/maps.hpp"

namespace fdalg {

enum class LocalKind { Derivation, InnerDerivation, InnerAutomorphism, JordanAutomorphism };

/// CLI tokens: derivation, inner-derivation, inner-automorphism, jordan-automorphism.
std::string_view local_kind_token(LocalKind kind);
std::optional<LocalKind> parse_local_kind(std::string_view token);

/// Evidence for one point. Which fields are set depends on the kind:
/// derivation coordinates on the Der(A) basis, a_x with [a_x, x] = T(x),
/// or the invariant factors of x and T(x).
struct OrbitWitness {
  bool member = false;
  std::optional<Vec> derivation_coords;
  std::optional<Element> generator;
  std::optional<std::vector<Polynomial>> source_factors;
  std::optional<std::vector<Polynomial>> image_factors;
};

/// Decides whether T(x) lies in the orbit of x for the given kind.
/// Automorphism kinds need a full matrix algebra (UNSUPPORTED_ALGEBRA otherwise).
OrbitWitness orbit_membership(const Algebra& alg, LocalKind kind, const LinMap& t, const Element& x);

struct AuditedPoint {
  Element x;
  OrbitWitness witness;
};

struct Certification {
  VerdictStatus status = VerdictStatus::Pass;
  CheckMode mode = CheckMode::PointwiseExhaustive;
  std::uint64_t checked = 0;
  std::uint64_t budget = 0;
  std::optional<std::uint64_t> seed;
  /// A point whose orbit does not contain T(x).
  std::optional<Element> witness;
  /// Orbit evidence at the basis vectors and at the failing point, if any.
  std::vector<AuditedPoint> audits;
};

/// Exhaustive when |F|^n <= budget; otherwise basis vectors, pairwise sums of
/// distinct basis vectors, then seeded random points. Sampled runs never PASS.
Certification certify_local(const Algebra& alg, LocalKind kind, const LinMap& t, const PointwiseOptions& options = {});

struct A2Report {
  Certification certification;
  /// Present when the certification passed.
  std::optional<MapProfile> profile;
  /// A certified local Jordan automorphism that is not a Jordan automorphism in M(A).
  bool anomaly = false;
};

/// Exhaustive local Jordan automorphism certification on a full matrix algebra
/// over a finite field, followed by classification. BUDGET_EXCEEDED when the
/// enumeration is infeasible.
A2Report experiment_a2(const Algebra& alg, const LinMap& t, std::uint64_t budget = kDefaultBudget, unsigned workers = 0);

}  // namespace fdalg
