#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdalg/algebra.hpp"

namespace fdalg {

enum class IdentityKind {
  XDXX,         ///< x D(x) x
  CubeDiff,     ///< T(x)^3 - x^3
  SquareDiff,   ///< T(x)^2 - x^2
  QuarticDiff,  ///< T(x^4) - T(x)^4, target rad(A)
  H1,           ///< T(x)^2 T(y) - x^2 y
  XD,           ///< x D(x)
};

/// CLI tokens: xdxx, cube, square, quartic-rad, h1, xd.
std::string_view identity_token(IdentityKind kind);
std::optional<IdentityKind> parse_identity_kind(std::string_view token);
/// Total degree of the expression.
unsigned identity_degree(IdentityKind kind);

struct IdentitySpec {
  IdentityKind kind;
  LinMap map;
  /// Defaults to [A,A], or rad(A) for QuarticDiff.
  std::optional<Subspace> target;
};

enum class VerdictStatus { Pass, Fail, UndecidedSampled, BudgetExceeded };
enum class CheckMode { Formal, PointwiseExhaustive, PointwiseSampled };

std::string_view status_token(VerdictStatus s);
std::string_view mode_token(CheckMode m);

struct Verdict {
  VerdictStatus status = VerdictStatus::Pass;
  CheckMode mode = CheckMode::Formal;
  /// Failing point: x, or x then y for H1.
  std::vector<Element> witness;
  std::optional<Element> witness_value;
  /// Failing monomial as sorted basis indices of the x slots (then the y index for H1).
  std::optional<std::vector<std::size_t>> coefficient_witness;
  std::optional<Element> coefficient_value;
  bool modes_equivalent = false;
  std::string equivalence_note;
  std::uint64_t checked = 0;
  std::uint64_t budget = 0;
  std::optional<std::uint64_t> seed;
};

Subspace identity_target(const Algebra& a, const IdentitySpec& spec);

/// The expression at x (and y for H1).
Element evaluate_identity(const Algebra& a, const IdentitySpec& spec, const Element& x,
                          const std::optional<Element>& y = std::nullopt);

/// Sum of the multilinearized expression over all distinct arrangements of the
/// given basis indices, with no division by multinomial factors.
Element symmetrized_coefficient(const Algebra& a, const IdentitySpec& spec, std::vector<std::size_t> x_indices,
                                std::optional<std::size_t> y_index = std::nullopt);

/// Formal and pointwise verdicts agree when F is infinite or |F| > degree.
bool modes_equivalent(const FieldSpec& field, unsigned degree);

Verdict check_formal(const Algebra& a, const IdentitySpec& spec);

enum class PointwisePlan { Auto, Exhaustive, Sampled };

struct PointwiseOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::uint64_t samples = 256;
  PointwisePlan plan = PointwisePlan::Auto;
  unsigned workers = 0;
};

/// Exhaustive over finite fields within budget, otherwise seeded sampling.
/// An explicit exhaustive plan over budget throws BUDGET_EXCEEDED.
Verdict check_pointwise(const Algebra& a, const IdentitySpec& spec, const PointwiseOptions& options = {});

}  // namespace fdalg
