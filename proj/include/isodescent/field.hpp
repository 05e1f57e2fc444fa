#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace isod {

enum class FieldKind { Rationals, PrimeField };

/// Descriptor of the base field k: the rationals or a prime field F_p with
/// p < 2^31. Cheap to copy; equality is structural.
class Field {
 public:
  Field() = default;

  static Field rationals() noexcept { return Field(); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// Accepts `QQ` or `GF(p)`.
  static Field parse(std::string_view spec);

  FieldKind kind() const noexcept { return kind_; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_rationals() const noexcept { return kind_ == FieldKind::Rationals; }
  bool is_prime_field() const noexcept { return kind_ == FieldKind::PrimeField; }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  FieldKind kind_ = FieldKind::Rationals;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// An element of a base field. Rationals are kept in lowest terms with a
/// positive denominator; prime-field values are residues in [0, p).
class Element {
 public:
  Element() = default;  // 0 in QQ

  static Element zero(const Field& field);
  static Element one(const Field& field);
  static Element from_int(const Field& field, long long value);
  static Element from_mpz(const Field& field, const mpz_class& value);
  /// For prime fields maps num/den to num * den^-1 (DivisionByZero if p | den).
  static Element from_rational(const Field& field, const mpq_class& value);

  const Field& field() const noexcept { return field_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Prime fields only.
  std::uint64_t residue() const;
  /// Rationals only.
  const mpq_class& rational() const;

  Element operator-() const;
  Element inv() const;
  Element pow(std::uint64_t exponent) const;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Element& rhs);
  Element& operator/=(const Element& rhs);

  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(Element lhs, const Element& rhs) { return lhs *= rhs; }
  friend Element operator/(Element lhs, const Element& rhs) { return lhs /= rhs; }

  friend bool operator==(const Element& lhs, const Element& rhs);
  /// Total order inside one field: residues for F_p, numeric value for QQ.
  friend std::strong_ordering operator<=>(const Element& lhs, const Element& rhs);

  std::string to_string() const;

 private:
  Element(Field field, std::uint64_t residue) : field_(field), value_(residue) {}
  Element(Field field, mpq_class value) : field_(field), value_(std::move(value)) {}

  void require_same_field(const Element& other) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace isod
