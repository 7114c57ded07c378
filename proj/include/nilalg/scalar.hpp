#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "nilalg/error.hpp"

namespace nilalg {

/// Deterministic trial division; the characteristics used here are small.
bool is_prime(std::uint64_t n);

/// Coefficient field: 0 stands for the rationals, otherwise a prime p.
class FieldSpec {
 public:
  FieldSpec() = default;
  explicit FieldSpec(std::uint64_t characteristic);

  static FieldSpec rationals() { return FieldSpec(); }

  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  std::uint32_t characteristic_ = 0;
};

std::ostream& operator<<(std::ostream& os, FieldSpec f);

/// An element of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator, residues in [0, p).
class Scalar {
 public:
  Scalar() : Scalar(FieldSpec::rationals()) {}
  explicit Scalar(FieldSpec field);
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, const mpz_class& value);
  /// Requires a rational field, or a denominator that is a unit mod p.
  Scalar(FieldSpec field, const mpq_class& value);

  static Scalar zero(FieldSpec f) { return Scalar(f); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1L); }

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Throws unless the field is the rationals.
  const mpq_class& rational() const;
  /// Throws unless the field is a prime field.
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  /// this += a * b, avoiding a temporary in the hot reduction loop.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

enum class ArithOp { add, sub, mul, div };

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

/// Clears denominators and divides by the content. The first nonzero entry
/// of the result is positive. Throws on an empty or all-zero input.
std::vector<mpz_class> integer_normalize(std::span<const mpq_class> coeffs);

/// Componentwise residues modulo p. Throws if p is not prime.
std::vector<Scalar> reduce_mod(std::span<const mpz_class> coeffs, std::uint64_t p);

}  // namespace nilalg
