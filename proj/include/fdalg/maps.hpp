#pragma once

#include <string>
#include <vector>

#include "fdalg/algebra.hpp"

namespace fdalg {

/// Checks that m acts on a (same dimension and field); throws ALGEBRA_MISMATCH otherwise.
void require_map(const Algebra& a, const LinMap& m);

LinMap map_from_columns(const Algebra& a, const std::vector<Element>& columns);
LinMap identity_map(const Algebra& a);
/// x -> [a, x]
LinMap inner_derivation(const Algebra& alg, const Element& a);
/// x -> u x u^{-1}; NOT_INVERTIBLE when u has no inverse.
LinMap conjugation(const Algebra& alg, const Element& u);
/// Matrix transpose on a full matrix algebra.
LinMap transpose_map(const Algebra& alg);
/// x -> alpha T(x) for central alpha; NOT_CENTRAL otherwise.
LinMap scalar_multiple(const Algebra& alg, const Element& alpha, const LinMap& t);
LinMap left_multiplication(const Algebra& alg, const Element& a);

struct MapProfile {
  bool bijective = false;
  bool unital = false;
  bool derivation = false;
  bool jordan_homomorphism = false;
  bool homomorphism = false;
  bool antihomomorphism = false;
  bool jordan_automorphism = false;
  bool automorphism = false;
  bool antiautomorphism = false;
  /// False for algebras without a unit.
  bool in_mult_algebra = false;
};

/// Decides every flag exactly on basis pairs.
MapProfile classify(const Algebra& a, const LinMap& t);

/// (name, value) pairs in a fixed order, for reports.
std::vector<std::pair<std::string, bool>> profile_flags(const MapProfile& p);

}  // namespace fdalg
