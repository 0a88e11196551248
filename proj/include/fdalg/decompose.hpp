#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdalg/algebra.hpp"

namespace fdalg {

/// Canonical a with [a, x] = D(x) for all x (free variables zero), or nullopt.
std::optional<Element> solve_inner_derivation(const Algebra& alg, const LinMap& d);

struct DerivationDecomposition {
  Element a;
  LinMap residual;  ///< D - ad_a, with image in rad
  Subspace rad;
};

struct DerivationDecompositionResult {
  std::optional<DerivationDecomposition> decomposition;
  /// When no decomposition exists: the equations for b_1 .. b_k are already
  /// inconsistent, and k is the smallest such index (1-based).
  std::optional<std::size_t> inconsistent_prefix;
  std::vector<std::string> warnings;
};

/// D = ad_a + R with R valued in rad(A). Characteristic 2 needs the override flag
/// (CHARACTERISTIC_VIOLATION otherwise).
DerivationDecompositionResult decompose_theorem_d(const Algebra& alg, const LinMap& d, bool allow_char_violation = false,
                                                  RadicalMethod method = RadicalMethod::Auto);

enum class FactorizationFailure { None, SemisimpleRequired, AlphaNotCentral, AlphaCubeNotOne, JordanFail, NotInMultAlgebra };

std::string_view failure_token(FactorizationFailure f);

struct JordanFactorization {
  Element alpha;
  LinMap j;
};

struct JordanFactorizationResult {
  std::optional<JordanFactorization> factorization;
  FactorizationFailure failure = FactorizationFailure::None;
  /// alpha = T(1) whenever it was computed.
  std::optional<Element> alpha;
  std::string detail;
  std::vector<std::string> warnings;
};

/// T = alpha J with alpha = T(1) central, alpha^3 = 1, J a Jordan automorphism in M(A).
/// Characteristics 2 and 3 need the override flag.
JordanFactorizationResult decompose_theorem_a(const Algebra& alg, const LinMap& t, bool allow_char_violation = false,
                                              RadicalMethod method = RadicalMethod::Auto);

struct Ac3Split {
  LinMap jordan_part;   ///< pi T, pi the projection onto the complement along rad
  LinMap radical_part;  ///< T - pi T
};

struct Ac3Result {
  std::optional<Ac3Split> split;
  /// Set when pi T is not a Jordan homomorphism: the first failing basis pair (0-based).
  std::optional<std::pair<std::size_t, std::size_t>> jordan_failure;
  Subspace rad;
  std::vector<std::string> warnings;
};

/// NOT_A_COMPLEMENT unless s is a subalgebra with s + rad = A directly;
/// UNIT_NOT_FIXED unless T(1) = 1.
Ac3Result split_ac3(const Algebra& alg, const LinMap& t, const Subspace& complement, bool allow_char_violation = false,
                    RadicalMethod method = RadicalMethod::Auto);

}  // namespace fdalg
