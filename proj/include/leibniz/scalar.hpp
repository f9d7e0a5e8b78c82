#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace leibniz {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Ground field tag: the rationals (modulus 0) or a prime field GF(p).
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws InvalidInput unless p is prime.
  static Field prime(std::uint64_t p);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr std::uint64_t characteristic() const { return p_; }

  std::string name() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  explicit constexpr Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Exact field element. Rationals are kept in lowest terms by the GMP
/// backend; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Field field) : field_(field) {}
  Scalar(Field field, long long value);
  Scalar(Field field, const Rational& value);

  /// Parses "n" or "a/b" (optionally signed). Throws ParseError.
  static Scalar parse(Field field, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);

  /// Throws InvalidInput on zero.
  Scalar inverse() const;

  /// Canonical text: "n", "-n" or "a/b" over Q; the residue over GF(p).
  std::string to_string() const;

  /// Rational value (residue as an integer over GF(p)).
  Rational to_rational() const;

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

 private:
  void require_same_field(const Scalar& rhs) const;

  Field field_;
  Rational q_;
  std::uint64_t r_ = 0;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(Field field, std::size_t n);
Vector unit_vector(Field field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
/// Concatenation a ⊕ b.
Vector concat(const Vector& a, const Vector& b);

}  // namespace leibniz
