#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "waring/error.hpp"

namespace waring {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// The ground field of a computation: either the rationals or a prime field
/// F_p with p an odd prime. All arithmetic is exact; equality is decidable.
class FieldSpec {
 public:
  static FieldSpec rational() { return FieldSpec(0); }
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  std::uint64_t p() const { return p_; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  std::string to_string() const;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;  // 0 encodes the rationals
};

bool is_prime_u64(std::uint64_t n);

/// An exact field element tagged with its field. Rationals are stored
/// normalized; prime-field values live in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rational()) {}  // zero over the rationals

  static Scalar zero(const FieldSpec& field) { return Scalar(field); }
  static Scalar one(const FieldSpec& field) { return from_int(1, field); }
  static Scalar from_int(long long n, const FieldSpec& field);
  static Scalar from_rational(const BigRat& q, const FieldSpec& field);
  /// Parses "17", "-3", or "a/b" (rational fields only for a non-trivial b).
  static Scalar parse(const std::string& text, const FieldSpec& field);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  /// Total order used for canonical point sorting: prime-field elements by
  /// their representative in [0, p); rationals lexicographically by
  /// (numerator, denominator).
  static int canonical_cmp(const Scalar& a, const Scalar& b);

  /// Value as a rational; only valid over the rationals.
  const BigRat& rational_value() const { return q_; }
  /// Representative in [0, p); only valid over a prime field.
  std::uint64_t prime_value() const { return v_; }

  std::string to_string() const;

 private:
  explicit Scalar(const FieldSpec& field) : field_(field) {}

  FieldSpec field_;
  BigRat q_;
  std::uint64_t v_ = 0;
};

// Arithmetic mod p on raw representatives (p < 2^32 so products fit u64).
namespace fp {
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}
std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
/// Square root mod p via Tonelli-Shanks; returns false if a is a non-residue.
bool sqrt(std::uint64_t a, std::uint64_t p, std::uint64_t& root);
}  // namespace fp

}  // namespace waring
