#include "fdalg/identities.hpp"

#include <algorithm>
#include <random>

#include "fdalg/enumerate.hpp"
#include "fdalg/maps.hpp"

namespace fdalg {

std::string_view identity_token(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::XDXX: return "xdxx";
    case IdentityKind::CubeDiff: return "cube";
    case IdentityKind::SquareDiff: return "square";
    case IdentityKind::QuarticDiff: return "quartic-rad";
    case IdentityKind::H1: return "h1";
    case IdentityKind::XD: return "xd";
  }
  return "?";
}

std::optional<IdentityKind> parse_identity_kind(std::string_view token) {
  for (auto k : {IdentityKind::XDXX, IdentityKind::CubeDiff, IdentityKind::SquareDiff, IdentityKind::QuarticDiff,
                 IdentityKind::H1, IdentityKind::XD})
    if (identity_token(k) == token) return k;
  return std::nullopt;
}

unsigned identity_degree(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::SquareDiff:
    case IdentityKind::XD:
      return 2;
    case IdentityKind::QuarticDiff:
      return 4;
    default:
      return 3;
  }
}

std::string_view status_token(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass: return "PASS";
    case VerdictStatus::Fail: return "FAIL";
    case VerdictStatus::UndecidedSampled: return "UNDECIDED_SAMPLED";
    case VerdictStatus::BudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

std::string_view mode_token(CheckMode m) {
  switch (m) {
    case CheckMode::Formal: return "formal";
    case CheckMode::PointwiseExhaustive: return "pointwise_exhaustive";
    case CheckMode::PointwiseSampled: return "pointwise_sampled";
  }
  return "?";
}

Subspace identity_target(const Algebra& a, const IdentitySpec& spec) {
  if (spec.target) {
    if (spec.target->ambient_dim() != a.dim())
      throw Error(ErrorCode::AmbientMismatch, "identity target lives in a different ambient space");
    return *spec.target;
  }
  return spec.kind == IdentityKind::QuarticDiff ? a.radical() : a.commutator_space();
}

namespace {

// The multilinear form whose diagonal is the identity's expression.
Element form(const Algebra& a, const LinMap& t, IdentityKind kind, const std::vector<Element>& s) {
  switch (kind) {
    case IdentityKind::XDXX:
      return a.mul(a.mul(s[0], t.apply(s[1])), s[2]);
    case IdentityKind::CubeDiff:
    case IdentityKind::H1:
      return sub(a.mul(a.mul(t.apply(s[0]), t.apply(s[1])), t.apply(s[2])), a.mul(a.mul(s[0], s[1]), s[2]));
    case IdentityKind::SquareDiff:
      return sub(a.mul(t.apply(s[0]), t.apply(s[1])), a.mul(s[0], s[1]));
    case IdentityKind::QuarticDiff: {
      const Element prod = a.mul(a.mul(a.mul(s[0], s[1]), s[2]), s[3]);
      const Element tprod = a.mul(a.mul(a.mul(t.apply(s[0]), t.apply(s[1])), t.apply(s[2])), t.apply(s[3]));
      return sub(t.apply(prod), tprod);
    }
    case IdentityKind::XD:
      return a.mul(s[0], t.apply(s[1]));
  }
  throw std::logic_error("unknown identity kind");
}

std::string equivalence_text(const FieldSpec& field, unsigned degree) {
  const std::string d = std::to_string(degree);
  if (!field.is_finite()) return "formal and pointwise verdicts coincide: the field is infinite";
  const std::string q = std::to_string(field.p());
  if (field.p() > degree) return "formal and pointwise verdicts coincide: |F| = " + q + " > degree " + d;
  return "pointwise PASS does not imply formal PASS: |F| = " + q + " <= degree " + d;
}

// Nondecreasing index tuples of length k over [0, n), lexicographic.
bool next_multiset(std::vector<std::size_t>& m, std::size_t n) {
  std::size_t i = m.size();
  while (i > 0 && m[i - 1] == n - 1) --i;
  if (i == 0) return false;
  ++m[i - 1];
  for (std::size_t j = i; j < m.size(); ++j) m[j] = m[i - 1];
  return true;
}

}  // namespace

Element evaluate_identity(const Algebra& a, const IdentitySpec& spec, const Element& x, const std::optional<Element>& y) {
  require_map(a, spec.map);
  a.require_element(x);
  std::vector<Element> slots(identity_degree(spec.kind), x);
  if (spec.kind == IdentityKind::H1) {
    if (!y) throw Error(ErrorCode::MalformedInput, "h1 needs a second point y");
    a.require_element(*y);
    slots.back() = *y;
  }
  return form(a, spec.map, spec.kind, slots);
}

Element symmetrized_coefficient(const Algebra& a, const IdentitySpec& spec, std::vector<std::size_t> x_indices,
                                std::optional<std::size_t> y_index) {
  require_map(a, spec.map);
  const bool h1 = spec.kind == IdentityKind::H1;
  const std::size_t x_slots = identity_degree(spec.kind) - (h1 ? 1 : 0);
  if (x_indices.size() != x_slots || h1 != y_index.has_value())
    throw Error(ErrorCode::MalformedInput, "monomial does not match the identity's slots");
  std::sort(x_indices.begin(), x_indices.end());
  Element acc = a.zero();
  do {
    std::vector<Element> slots;
    for (auto i : x_indices) slots.push_back(a.basis_vector(i));
    if (h1) slots.push_back(a.basis_vector(*y_index));
    acc = add(acc, form(a, spec.map, spec.kind, slots));
  } while (std::next_permutation(x_indices.begin(), x_indices.end()));
  return acc;
}

bool modes_equivalent(const FieldSpec& field, unsigned degree) { return !field.is_finite() || field.p() > degree; }

Verdict check_formal(const Algebra& a, const IdentitySpec& spec) {
  require_map(a, spec.map);
  const Subspace target = identity_target(a, spec);
  const unsigned degree = identity_degree(spec.kind);
  const bool h1 = spec.kind == IdentityKind::H1;
  Verdict v;
  v.mode = CheckMode::Formal;
  v.modes_equivalent = modes_equivalent(a.field(), degree);
  v.equivalence_note = equivalence_text(a.field(), degree);

  std::vector<std::size_t> m(h1 ? degree - 1 : degree, 0);
  do {
    for (std::size_t y = 0; y < (h1 ? a.dim() : 1); ++y) {
      const auto y_index = h1 ? std::optional<std::size_t>(y) : std::nullopt;
      Element c = symmetrized_coefficient(a, spec, m, y_index);
      ++v.checked;
      if (!target.contains(c)) {
        v.status = VerdictStatus::Fail;
        std::vector<std::size_t> w = m;
        if (h1) w.push_back(y);
        v.coefficient_witness = std::move(w);
        v.coefficient_value = std::move(c);
        return v;
      }
    }
  } while (next_multiset(m, a.dim()));
  v.status = VerdictStatus::Pass;
  return v;
}

Verdict check_pointwise(const Algebra& a, const IdentitySpec& spec, const PointwiseOptions& options) {
  require_map(a, spec.map);
  const Subspace target = identity_target(a, spec);
  const unsigned degree = identity_degree(spec.kind);
  const bool h1 = spec.kind == IdentityKind::H1;
  const std::size_t n = a.dim();
  Verdict v;
  v.budget = options.budget;
  v.modes_equivalent = modes_equivalent(a.field(), degree);
  v.equivalence_note = equivalence_text(a.field(), degree);

  const auto total = space_size(a.field(), h1 ? 2 * n : n);
  const bool fits = total && *total <= options.budget;
  if (options.plan == PointwisePlan::Exhaustive && !fits) {
    throw Error(ErrorCode::BudgetExceeded, total ? "|F|^" + std::to_string(h1 ? 2 * n : n) + " = " +
                                                       std::to_string(*total) + " exceeds budget " +
                                                       std::to_string(options.budget)
                                                 : "exhaustive enumeration needs a finite field");
  }

  auto fails = [&](const Element& x, const std::optional<Element>& y) {
    return !target.contains(evaluate_identity(a, spec, x, y));
  };
  auto record = [&](Element x, std::optional<Element> y) {
    v.status = VerdictStatus::Fail;
    v.witness_value = evaluate_identity(a, spec, x, y);
    v.witness.push_back(std::move(x));
    if (y) v.witness.push_back(std::move(*y));
  };

  if (fits && options.plan != PointwisePlan::Sampled) {
    v.mode = CheckMode::PointwiseExhaustive;
    auto point = [&](std::uint64_t idx) {
      if (!h1) return std::make_pair(element_at(a.field(), n, idx), std::optional<Element>());
      const std::uint64_t size = *space_size(a.field(), n);
      return std::make_pair(element_at(a.field(), n, idx % size),
                            std::optional<Element>(element_at(a.field(), n, idx / size)));
    };
    const auto bad = first_failure(
        *total,
        [&](std::uint64_t idx) {
          auto [x, y] = point(idx);
          return !fails(x, y);
        },
        options.workers);
    if (bad) {
      auto [x, y] = point(*bad);
      record(std::move(x), std::move(y));
      v.checked = *bad + 1;
    } else {
      v.status = VerdictStatus::Pass;
      v.checked = *total;
    }
    return v;
  }

  v.mode = CheckMode::PointwiseSampled;
  v.seed = options.seed;
  std::mt19937_64 rng(options.seed);
  auto random_element = [&] {
    Element x;
    for (std::size_t k = 0; k < n; ++k) x.push_back(random_scalar(a.field(), rng));
    return x;
  };
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    Element x = random_element();
    std::optional<Element> y;
    if (h1) y = random_element();
    ++v.checked;
    if (fails(x, y)) {
      record(std::move(x), std::move(y));
      return v;
    }
  }
  v.status = VerdictStatus::UndecidedSampled;
  return v;
}

}  // namespace fdalg
