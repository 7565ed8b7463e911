#pragma once

// Exact scalar arithmetic over GF(p) (small p) and over the rationals.
//
// Two layers live here:
//   * typed field backends (PrimeField, RationalField) used by every
//     algorithm as a template parameter, and
//   * a runtime-tagged Scalar for API boundaries (parsing, JSON, tests),
//     where mixing elements of different fields must be an error.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lieideal/error.hpp"

namespace lieideal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest supported prime modulus (residues fit in a byte).
inline constexpr unsigned kMaxPrime = 251;

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

enum class FieldKind { prime, rationals };

/// Names a field: GF(p) or Q.
class FieldDescriptor {
 public:
  static FieldDescriptor prime(unsigned p) {
    if (!is_prime(p)) throw FieldError("GF(" + std::to_string(p) + "): modulus is not prime");
    if (p > kMaxPrime)
      throw FieldError("GF(" + std::to_string(p) + "): modulus exceeds the supported cap of " +
                       std::to_string(kMaxPrime));
    return FieldDescriptor(FieldKind::prime, p);
  }
  static FieldDescriptor rationals() { return FieldDescriptor(FieldKind::rationals, 0); }

  FieldKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == FieldKind::prime; }
  unsigned modulus() const { return modulus_; }
  unsigned characteristic() const { return modulus_; }

  std::string name() const { return is_finite() ? "GF(" + std::to_string(modulus_) + ")" : "Q"; }

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  FieldDescriptor(FieldKind k, unsigned p) : kind_(k), modulus_(p) {}
  FieldKind kind_;
  unsigned modulus_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Parses [+-]digits into a BigInt; false on malformed input.
inline bool parse_integer(std::string_view s, BigInt& out) {
  s = trim(s);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return false;
  BigInt v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = neg ? BigInt(-v) : v;
  return true;
}

}  // namespace detail

/// GF(p) with canonical residues 0..p-1.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(unsigned p) : p_(FieldDescriptor::prime(p).modulus()) {}

  FieldDescriptor descriptor() const { return FieldDescriptor::prime(p_); }
  unsigned modulus() const { return p_; }
  unsigned characteristic() const { return p_; }
  static constexpr bool is_finite() { return true; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }

  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p_; }
  value_type inv(value_type a) const {
    if (a == 0) throw FieldError("division by zero in " + descriptor().name());
    // extended Euclid on (a, p)
    long long r0 = p_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
      long long q = r0 / r1;
      std::tie(r0, r1) = std::pair(r1, r0 - q * r1);
      std::tie(t0, t1) = std::pair(t1, t0 - q * t1);
    }
    long long t = t0 % static_cast<long long>(p_);
    return static_cast<value_type>(t < 0 ? t + p_ : t);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  value_type from_integer(long long n) const {
    long long r = n % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type from_integer(const BigInt& n) const {
    BigInt r = n % p_;
    if (r < 0) r += p_;
    return r.convert_to<value_type>();
  }

  /// Every element, in increasing residue order.
  std::vector<value_type> elements() const {
    std::vector<value_type> out(p_);
    for (unsigned i = 0; i < p_; ++i) out[i] = i;
    return out;
  }

  std::string to_string(value_type a) const { return std::to_string(a); }

  /// Integer literal, canonicalised mod p.
  value_type parse(std::string_view s) const {
    BigInt v;
    if (!detail::parse_integer(s, v))
      throw FieldError("invalid " + descriptor().name() + " literal '" + std::string(s) + "'");
    return from_integer(v);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  unsigned p_;
};

/// The rationals, arbitrary precision, always in lowest terms.
class RationalField {
 public:
  using value_type = Rational;

  FieldDescriptor descriptor() const { return FieldDescriptor::rationals(); }
  static constexpr unsigned characteristic() { return 0; }
  static constexpr bool is_finite() { return false; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return a == 0; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw FieldError("division by zero in Q");
    return value_type(1) / a;
  }
  value_type div(const value_type& a, const value_type& b) const {
    if (b == 0) throw FieldError("division by zero in Q");
    return a / b;
  }

  value_type from_integer(long long n) const { return value_type(n); }
  value_type from_integer(const BigInt& n) const { return value_type(n); }

  std::string to_string(const value_type& a) const {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(a) == 1) return numerator(a).str();
    return numerator(a).str() + "/" + denominator(a).str();
  }

  /// "n" or "n/d".
  value_type parse(std::string_view s) const {
    s = detail::trim(s);
    auto slash = s.find('/');
    BigInt num, den = 1;
    bool ok = detail::parse_integer(s.substr(0, slash), num);
    if (ok && slash != std::string_view::npos) {
      auto d = detail::trim(s.substr(slash + 1));
      ok = !d.empty() && d.front() != '-' && d.front() != '+' && detail::parse_integer(d, den);
    }
    if (!ok) throw FieldError("invalid Q literal '" + std::string(s) + "'");
    if (den == 0) throw FieldError("zero denominator in Q literal '" + std::string(s) + "'");
    return value_type(num, den);
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Field backend requirements shared by every algorithm in the library.
template <class F>
concept Field = requires(const F& f, const typename F::value_type& a, long long n) {
  typename F::value_type;
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.div(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.neg(a) } -> std::convertible_to<typename F::value_type>;
  { f.from_integer(n) } -> std::convertible_to<typename F::value_type>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
  { f.descriptor() } -> std::same_as<FieldDescriptor>;
  { F::is_finite() } -> std::convertible_to<bool>;
};

template <class F>
concept FiniteField = Field<F> && F::is_finite();

/// Invokes fn with the typed backend matching a descriptor.
template <class Fn>
decltype(auto) visit_field(const FieldDescriptor& d, Fn&& fn) {
  if (d.is_finite()) return std::forward<Fn>(fn)(PrimeField(d.modulus()));
  return std::forward<Fn>(fn)(RationalField{});
}

// ---------------------------------------------------------------------------
// Runtime-tagged scalars

/// An element of some field, carrying its field. Canonical representation:
/// equal elements of the same field compare equal.
class Scalar {
 public:
  static Scalar from_integer(long long n, const FieldDescriptor& f) {
    if (f.is_finite()) return Scalar(f, PrimeField(f.modulus()).from_integer(n));
    return Scalar(f, Rational(n));
  }
  static Scalar parse(std::string_view s, const FieldDescriptor& f) {
    if (f.is_finite()) return Scalar(f, PrimeField(f.modulus()).parse(s));
    return Scalar(f, RationalField{}.parse(s));
  }
  template <Field F>
  static Scalar from_value(const F& f, const typename F::value_type& v) {
    if constexpr (std::same_as<F, PrimeField>)
      return Scalar(f.descriptor(), v);
    else
      return Scalar(f.descriptor(), Rational(v));
  }

  const FieldDescriptor& field() const { return field_; }

  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }

  template <Field F>
  typename F::value_type value_in(const F& f) const {
    if (!(f.descriptor() == field_))
      throw FieldError("scalar of " + field_.name() + " used in " + f.descriptor().name());
    if constexpr (std::same_as<F, PrimeField>)
      return residue();
    else
      return rational();
  }

  bool is_zero() const {
    return field_.is_finite() ? residue() == 0 : rational() == 0;
  }

  std::string to_string() const {
    return field_.is_finite() ? std::to_string(residue()) : RationalField{}.to_string(rational());
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  Scalar(FieldDescriptor f, std::uint32_t r) : field_(f), value_(r) {}
  Scalar(FieldDescriptor f, Rational q) : field_(f), value_(std::move(q)) {}

  FieldDescriptor field_;
  std::variant<std::uint32_t, Rational> value_;
};

enum class ArithOp { add, sub, mul, div };

/// Exact a (op) b. Throws FieldError for mixed fields or division by zero.
inline Scalar scalar_arith(ArithOp op, const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field()))
    throw FieldError("mixed-field operands: " + a.field().name() + " and " + b.field().name());
  return visit_field(a.field(), [&](const auto& f) {
    auto x = a.value_in(f), y = b.value_in(f);
    switch (op) {
      case ArithOp::add: return Scalar::from_value(f, f.add(x, y));
      case ArithOp::sub: return Scalar::from_value(f, f.sub(x, y));
      case ArithOp::mul: return Scalar::from_value(f, f.mul(x, y));
      case ArithOp::div: return Scalar::from_value(f, f.div(x, y));
    }
    throw FieldError("unknown arithmetic op");
  });
}

inline Scalar operator+(const Scalar& a, const Scalar& b) { return scalar_arith(ArithOp::add, a, b); }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return scalar_arith(ArithOp::sub, a, b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return scalar_arith(ArithOp::mul, a, b); }
inline Scalar operator/(const Scalar& a, const Scalar& b) { return scalar_arith(ArithOp::div, a, b); }

inline Scalar scalar_from_integer(long long n, const FieldDescriptor& f) {
  return Scalar::from_integer(n, f);
}

}  // namespace lieideal
