#include "fdalg/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fdalg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLiteral: return "MALFORMED_LITERAL";
    case ErrorCode::ZeroDenominator: return "ZERO_DENOMINATOR";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::InvalidField: return "INVALID_FIELD";
    case ErrorCode::AmbientMismatch: return "AMBIENT_MISMATCH";
    case ErrorCode::SizeMismatch: return "SIZE_MISMATCH";
    case ErrorCode::MalformedTable: return "MALFORMED_TABLE";
    case ErrorCode::NotAssociative: return "NOT_ASSOCIATIVE";
    case ErrorCode::NotAnIdeal: return "NOT_AN_IDEAL";
    case ErrorCode::NonMonic: return "NON_MONIC";
    case ErrorCode::AlgebraMismatch: return "ALGEBRA_MISMATCH";
    case ErrorCode::NoValidMethod: return "NO_VALID_METHOD";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::NotUnital: return "NOT_UNITAL";
    case ErrorCode::NotInvertible: return "NOT_INVERTIBLE";
    case ErrorCode::NotMatrixAlgebra: return "NOT_MATRIX_ALGEBRA";
    case ErrorCode::NotCentral: return "NOT_CENTRAL";
    case ErrorCode::UnsupportedAlgebra: return "UNSUPPORTED_ALGEBRA";
    case ErrorCode::NotAComplement: return "NOT_A_COMPLEMENT";
    case ErrorCode::UnitNotFixed: return "UNIT_NOT_FIXED";
    case ErrorCode::CharacteristicViolation: return "CHARACTERISTIC_VIOLATION";
    case ErrorCode::UnknownFixture: return "UNKNOWN_FIXTURE";
    case ErrorCode::MalformedInput: return "MALFORMED_INPUT";
  }
  return "UNKNOWN";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

void check_prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidField, "p = " + std::to_string(p) + " is not a prime below 2^31");
  }
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t reduce_ll(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero residue");
  long long t = 0, new_t = 1;
  long long r = p, new_r = a % p;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return reduce_ll(t, p);
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  check_prime(p);
  return FieldSpec(FieldKind::PrimeField, p);
}

FieldSpec FieldSpec::rational_functions(std::uint32_t p) {
  check_prime(p);
  return FieldSpec(FieldKind::RationalFunctions, p);
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::PrimeField: return "F_" + std::to_string(p_);
    case FieldKind::RationalFunctions: return "F_" + std::to_string(p_) + "(t)";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// F_p[t]

namespace fppoly {

FpPoly add(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  trim(r);
  return r;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  FpPoly rem = a;
  if (rem.size() < b.size()) return {{}, rem};
  FpPoly quot(rem.size() - b.size() + 1, 0);
  const std::uint32_t lead_inv = inverse_mod(b.back(), p);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::uint32_t c = mul_mod(rem[k + b.size() - 1], lead_inv, p);
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      rem[k + j] = (rem[k + j] + p - mul_mod(c, b[j], p)) % p;
    }
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

FpPoly gcd(FpPoly a, FpPoly b, std::uint32_t p) {
  while (!b.empty()) {
    auto r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t inv = inverse_mod(a.back(), p);
    for (auto& c : a) c = mul_mod(c, inv, p);
  }
  return a;
}

std::string format(const FpPoly& a) {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t k = a.size(); k-- > 0;) {
    const std::uint32_t c = a[k];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += 't';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace fppoly

namespace {

RationalFunction normalize(FpPoly num, FpPoly den, std::uint32_t p) {
  trim(num);
  trim(den);
  if (den.empty()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  if (num.empty()) return RationalFunction{};
  FpPoly g = fppoly::gcd(num, den, p);
  if (g.size() > 1) {
    num = fppoly::divmod(num, g, p).first;
    den = fppoly::divmod(den, g, p).first;
  }
  const std::uint32_t inv = inverse_mod(den.back(), p);
  for (auto& c : num) c = mul_mod(c, inv, p);
  for (auto& c : den) c = mul_mod(c, inv, p);
  return RationalFunction{std::move(num), std::move(den)};
}

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw Error(ErrorCode::FieldMismatch, a.name() + " vs " + b.name());
}

}  // namespace

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const FieldSpec& field) : field_(field) {
  switch (field.kind()) {
    case FieldKind::Rationals: value_ = mpq_class(0); break;
    case FieldKind::PrimeField: value_ = std::uint32_t{0}; break;
    case FieldKind::RationalFunctions: value_ = RationalFunction{}; break;
  }
}

Scalar Scalar::from_int(const FieldSpec& field, long long value) {
  Scalar s(field);
  switch (field.kind()) {
    case FieldKind::Rationals: s.value_ = mpq_class(static_cast<long>(value)); break;
    case FieldKind::PrimeField: s.value_ = reduce_ll(value, field.p()); break;
    case FieldKind::RationalFunctions: {
      FpPoly num;
      if (std::uint32_t r = reduce_ll(value, field.p()); r != 0) num.push_back(r);
      s.value_ = RationalFunction{num, {1}};
      break;
    }
  }
  return s;
}

Scalar Scalar::from_rational(const mpq_class& value) {
  Scalar s(FieldSpec::rationals());
  mpq_class v = value;
  v.canonicalize();
  s.value_ = v;
  return s;
}

Scalar Scalar::variable(const FieldSpec& field) {
  if (field.kind() != FieldKind::RationalFunctions) {
    throw Error(ErrorCode::FieldMismatch, "t exists only in F_p(t)");
  }
  return from_ratfunc(field, {0, 1}, {1});
}

Scalar Scalar::from_ratfunc(const FieldSpec& field, FpPoly num, FpPoly den) {
  if (field.kind() != FieldKind::RationalFunctions) {
    throw Error(ErrorCode::FieldMismatch, "rational function payload outside F_p(t)");
  }
  for (auto& c : num) c %= field.p();
  for (auto& c : den) c %= field.p();
  Scalar s(field);
  s.value_ = normalize(std::move(num), std::move(den), field.p());
  return s;
}

bool Scalar::is_zero() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return sgn(rational()) == 0;
    case FieldKind::PrimeField: return residue() == 0;
    case FieldKind::RationalFunctions: return ratfunc().num.empty();
  }
  return false;
}

bool Scalar::is_one() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return rational() == 1;
    case FieldKind::PrimeField: return residue() == 1;
    case FieldKind::RationalFunctions: {
      const auto& r = ratfunc();
      return r.num.size() == 1 && r.num[0] == 1 && r.den.size() == 1;
    }
  }
  return false;
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  switch (field_.kind()) {
    case FieldKind::Rationals: s.value_ = mpq_class(-rational()); break;
    case FieldKind::PrimeField: s.value_ = (field_.p() - residue()) % field_.p(); break;
    case FieldKind::RationalFunctions: {
      RationalFunction r = ratfunc();
      for (auto& c : r.num) c = (field_.p() - c) % field_.p();
      s.value_ = std::move(r);
      break;
    }
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(field_, rhs.field_);
  const std::uint32_t p = field_.p();
  switch (field_.kind()) {
    case FieldKind::Rationals: std::get<mpq_class>(value_) += rhs.rational(); break;
    case FieldKind::PrimeField: {
      auto& r = std::get<std::uint32_t>(value_);
      r = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r) + rhs.residue()) % p);
      break;
    }
    case FieldKind::RationalFunctions: {
      const auto& a = ratfunc();
      const auto& b = rhs.ratfunc();
      if (b.num.empty()) break;
      if (a.num.empty()) {
        value_ = b;
        break;
      }
      if (a.den == b.den) {
        value_ = normalize(fppoly::add(a.num, b.num, p), a.den, p);
      } else {
        value_ = normalize(fppoly::add(fppoly::mul(a.num, b.den, p), fppoly::mul(b.num, a.den, p), p),
                           fppoly::mul(a.den, b.den, p), p);
      }
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(field_, rhs.field_);
  const std::uint32_t p = field_.p();
  switch (field_.kind()) {
    case FieldKind::Rationals: std::get<mpq_class>(value_) *= rhs.rational(); break;
    case FieldKind::PrimeField: {
      auto& r = std::get<std::uint32_t>(value_);
      r = mul_mod(r, rhs.residue(), p);
      break;
    }
    case FieldKind::RationalFunctions: {
      const auto& a = ratfunc();
      const auto& b = rhs.ratfunc();
      if (a.num.empty() || b.num.empty()) {
        value_ = RationalFunction{};
        break;
      }
      value_ = normalize(fppoly::mul(a.num, b.num, p), fppoly::mul(a.den, b.den, p), p);
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(field_, rhs.field_);
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + field_.name());
  Scalar s(field_);
  switch (field_.kind()) {
    case FieldKind::Rationals: {
      mpq_class inv = 1 / rational();
      inv.canonicalize();
      s.value_ = inv;
      break;
    }
    case FieldKind::PrimeField: s.value_ = inverse_mod(residue(), field_.p()); break;
    case FieldKind::RationalFunctions: {
      const auto& r = ratfunc();
      s.value_ = normalize(r.den, r.num, field_.p());
      break;
    }
  }
  return s;
}

Scalar Scalar::pow(long long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  Scalar result = one(field_);
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool Scalar::operator==(const Scalar& rhs) const {
  return field_ == rhs.field_ && value_ == rhs.value_;
}

std::string Scalar::to_string() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return rational().get_str();
    case FieldKind::PrimeField: return std::to_string(residue());
    case FieldKind::RationalFunctions: {
      const auto& r = ratfunc();
      if (r.den.size() == 1) return fppoly::format(r.num);
      return "(" + fppoly::format(r.num) + ")/(" + fppoly::format(r.den) + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

[[noreturn]] void malformed(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::MalformedLiteral, "'" + std::string(text) + "': " + why);
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::uint32_t digits_mod(std::string_view digits, std::uint32_t p) {
  std::uint64_t r = 0;
  for (char c : digits) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p;
  return static_cast<std::uint32_t>(r);
}

// poly := term (('+'|'-') term)*, term := c | c*t | c*t^k | t | t^k
FpPoly parse_fp_poly(std::string_view whole, std::string_view s, std::uint32_t p) {
  if (s.empty()) malformed(whole, "empty polynomial");
  FpPoly acc;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      malformed(whole, "expected '+' or '-'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view term = s.substr(pos, end - pos);
    if (term.empty()) malformed(whole, "empty term");

    std::uint32_t coeff = 1;
    std::size_t degree = 0;
    const auto tpos = term.find('t');
    if (tpos == std::string_view::npos) {
      if (!all_digits(term)) malformed(whole, "bad coefficient");
      coeff = digits_mod(term, p);
    } else {
      std::string_view head = term.substr(0, tpos);
      std::string_view tail = term.substr(tpos + 1);
      if (!head.empty()) {
        if (head.back() != '*') malformed(whole, "expected '*' before t");
        head.remove_suffix(1);
        if (!all_digits(head)) malformed(whole, "bad coefficient");
        coeff = digits_mod(head, p);
      }
      degree = 1;
      if (!tail.empty()) {
        if (tail[0] != '^' || !all_digits(tail.substr(1)) || tail.size() > 8) {
          malformed(whole, "bad exponent");
        }
        degree = std::stoul(std::string(tail.substr(1)));
      }
    }
    if (negative) coeff = (p - coeff) % p;
    FpPoly mono(degree + 1, 0);
    mono[degree] = coeff;
    trim(mono);
    acc = fppoly::add(acc, mono, p);
    pos = end;
  }
  return acc;
}

}  // namespace

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
  std::string cleaned;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
  }
  std::string_view s = cleaned;
  if (s.empty()) malformed(text, "empty literal");

  switch (field.kind()) {
    case FieldKind::Rationals: {
      const auto slash = s.find('/');
      std::string_view num = s.substr(0, slash);
      std::string_view num_digits = num.starts_with('-') ? num.substr(1) : num;
      if (!all_digits(num_digits)) malformed(text, "bad numerator");
      mpq_class value;
      if (slash == std::string_view::npos) {
        value = mpq_class(mpz_class(std::string(num)));
      } else {
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(den)) malformed(text, "bad denominator");
        const mpz_class d{std::string(den)};
        if (d == 0) throw Error(ErrorCode::ZeroDenominator, "'" + std::string(text) + "'");
        if (den[0] == '0') malformed(text, "leading zero in denominator");
        value = mpq_class(mpz_class(std::string(num)), d);
      }
      return Scalar::from_rational(value);
    }
    case FieldKind::PrimeField: {
      const bool negative = s.starts_with('-');
      std::string_view digits = negative ? s.substr(1) : s;
      if (!all_digits(digits)) malformed(text, "expected a decimal integer");
      const std::uint32_t r = digits_mod(digits, field.p());
      return Scalar::from_int(field, negative ? -static_cast<long long>(r) : r);
    }
    case FieldKind::RationalFunctions: {
      if (s.starts_with('(')) {
        const auto close = s.find(')');
        if (close == std::string_view::npos || close + 2 >= s.size() || s.substr(close + 1, 2) != "/(" ||
            s.back() != ')') {
          malformed(text, "expected (poly)/(poly)");
        }
        std::string_view num = s.substr(1, close - 1);
        std::string_view den = s.substr(close + 3, s.size() - close - 4);
        FpPoly n = parse_fp_poly(text, num, field.p());
        FpPoly d = parse_fp_poly(text, den, field.p());
        if (d.empty()) throw Error(ErrorCode::ZeroDenominator, "'" + std::string(text) + "'");
        return Scalar::from_ratfunc(field, std::move(n), std::move(d));
      }
      return Scalar::from_ratfunc(field, parse_fp_poly(text, s, field.p()), {1});
    }
  }
  malformed(text, "unknown field");
}

Scalar random_scalar(const FieldSpec& field, std::mt19937_64& rng) {
  switch (field.kind()) {
    case FieldKind::Rationals: {
      std::uniform_int_distribution<long> num(-5, 5);
      std::uniform_int_distribution<long> den(1, 3);
      const long n = num(rng);
      const long d = den(rng);
      return Scalar::from_rational(mpq_class(mpz_class(n), mpz_class(d)));
    }
    case FieldKind::PrimeField: {
      std::uniform_int_distribution<std::uint32_t> r(0, field.p() - 1);
      return Scalar::from_int(field, r(rng));
    }
    case FieldKind::RationalFunctions: {
      std::uniform_int_distribution<std::uint32_t> r(0, field.p() - 1);
      std::uniform_int_distribution<int> deg(0, 2);
      FpPoly num(static_cast<std::size_t>(deg(rng)) + 1);
      for (auto& c : num) c = r(rng);
      FpPoly den(static_cast<std::size_t>(deg(rng) % 2) + 1);
      for (auto& c : den) c = r(rng);
      den.back() = 1;
      return Scalar::from_ratfunc(field, std::move(num), std::move(den));
    }
  }
  return Scalar(field);
}

}  // namespace fdalg
