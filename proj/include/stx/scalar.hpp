#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "stx/errors.hpp"

namespace stx {

enum class FieldKind { Rationals, Prime };

// Coefficient field: exact rationals or a prime field F_p.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rationals, 0); }
  static Field prime(std::uint64_t p);  // p must be prime and < 2^31

  FieldKind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }
  bool is_prime_field() const { return kind_ == FieldKind::Prime; }
  // Over F_2 a sign flip is invisible; reports carry this flag.
  bool sign_blind() const { return kind_ == FieldKind::Prime && p_ == 2; }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string to_string() const;  // "QQ" | "FP 5"

 private:
  Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::uint64_t p_;
};

// An element of a Field.  Rational values are kept canonical by GMP
// (reduced, positive denominator); prime-field values as representatives
// in [0, p).
class Scalar {
 public:
  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of(const Field& f, long long n);
  static Scalar fraction(const Field& f, long long num, long long den);

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar negated() const;
  Scalar inverse() const;  // throws NotInvertibleError on zero

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // Total order used for canonical term ordering; both operands must share a field.
  int cmp(const Scalar& o) const;

  // True when the canonical rendering starts with '-' (never for F_p).
  bool leading_minus() const;
  std::string to_string() const;
  std::string magnitude_string() const;  // rendering without any leading '-'

 private:
  Scalar(Field f, mpq_class q) : field_(f), value_(std::move(q)) {}
  Scalar(Field f, std::uint64_t r) : field_(f), value_(r) {}
  void require_same(const Scalar& o) const;
  const mpq_class& rat() const { return std::get<mpq_class>(value_); }
  std::uint64_t rep() const { return std::get<std::uint64_t>(value_); }

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace stx
