#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "fdalg/error.hpp"

namespace fdalg {

enum class FieldKind { Rationals, PrimeField, RationalFunctions };

/// One of Q, F_p or F_p(t). Primality of p is checked at construction.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
  static FieldSpec prime_field(std::uint32_t p);
  static FieldSpec rational_functions(std::uint32_t p);

  FieldKind kind() const noexcept { return kind_; }
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_finite() const noexcept { return kind_ == FieldKind::PrimeField; }

  /// Number of elements for finite fields, nullopt otherwise.
  std::optional<std::uint64_t> order() const noexcept {
    if (is_finite()) return p_;
    return std::nullopt;
  }

  /// "Q", "F_5", "F_5(t)".
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Dense polynomial over F_p, coefficients low degree first, no trailing zeros.
using FpPoly = std::vector<std::uint32_t>;

/// Reduced fraction over F_p[t]: gcd(num, den) = 1, den monic. Zero is ({}, {1}).
struct RationalFunction {
  FpPoly num;
  FpPoly den{1};
  bool operator==(const RationalFunction&) const = default;
};

class Scalar {
 public:
  explicit Scalar(const FieldSpec& field);

  static Scalar zero(const FieldSpec& field) { return Scalar(field); }
  static Scalar one(const FieldSpec& field) { return from_int(field, 1); }
  static Scalar from_int(const FieldSpec& field, long long value);
  static Scalar from_rational(const mpq_class& value);
  /// The indeterminate t of F_p(t).
  static Scalar variable(const FieldSpec& field);
  static Scalar from_ratfunc(const FieldSpec& field, FpPoly num, FpPoly den);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  const RationalFunction& ratfunc() const { return std::get<RationalFunction>(value_); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  Scalar inverse() const;
  /// Negative exponents require a nonzero base.
  Scalar pow(long long exponent) const;

  bool operator==(const Scalar& rhs) const;

  /// Canonical literal; parse_scalar(to_string()) reproduces the value.
  std::string to_string() const;

 private:
  FieldSpec field_;
  std::variant<mpq_class, std::uint32_t, RationalFunction> value_;
};

Scalar parse_scalar(std::string_view text, const FieldSpec& field);

/// Small random scalar: uniform residues over F_p, small fractions over Q,
/// low-degree fractions over F_p(t).
Scalar random_scalar(const FieldSpec& field, std::mt19937_64& rng);

namespace fppoly {
FpPoly add(const FpPoly& a, const FpPoly& b, std::uint32_t p);
FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint32_t p);
FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint32_t p);
/// Quotient and remainder; b must be nonzero.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b, std::uint32_t p);
/// Monic gcd (empty when both are zero).
FpPoly gcd(FpPoly a, FpPoly b, std::uint32_t p);
std::string format(const FpPoly& a);
}  // namespace fppoly

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace fdalg
