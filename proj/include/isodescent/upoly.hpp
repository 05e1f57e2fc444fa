#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isodescent/field.hpp"

namespace isod {

/// Dense univariate polynomial in t over a base field. Coefficients are
/// stored low degree first with no trailing zeros; the zero polynomial has
/// no coefficients and no degree.
class UPoly {
 public:
  explicit UPoly(Field field = Field::rationals()) : field_(field) {}
  UPoly(Field field, std::vector<Element> coeffs);

  static UPoly constant(const Element& c);
  static UPoly monomial(const Element& c, std::size_t exponent);
  /// The polynomial t.
  static UPoly variable(const Field& field);
  /// Integer coefficients, low degree first.
  static UPoly from_ints(const Field& field, std::initializer_list<long long> coeffs);
  static UPoly parse(const Field& field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  /// Absent for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const noexcept;
  /// Number of stored coefficients (degree + 1, or 0).
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of t^i (zero beyond the degree).
  Element coeff(std::size_t i) const;
  const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
  /// Leading coefficient. Throws ZeroPolynomial on 0.
  const Element& leading() const;

  UPoly monic() const;
  UPoly derivative() const;
  Element operator()(const Element& x) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  UPoly& operator*=(const UPoly& rhs);
  UPoly& operator*=(const Element& c);

  friend UPoly operator+(UPoly lhs, const UPoly& rhs) { return lhs += rhs; }
  friend UPoly operator-(UPoly lhs, const UPoly& rhs) { return lhs -= rhs; }
  friend UPoly operator*(UPoly lhs, const UPoly& rhs) { return lhs *= rhs; }
  friend UPoly operator*(UPoly lhs, const Element& c) { return lhs *= c; }
  friend UPoly operator*(const Element& c, UPoly rhs) { return rhs *= c; }

  friend bool operator==(const UPoly& lhs, const UPoly& rhs) = default;

  /// Lexicographic comparison by (degree, coefficients from the top down).
  friend bool canonical_less(const UPoly& lhs, const UPoly& rhs);

  /// Human-readable form accepted back by parse, e.g. `t^4 - t - 1`.
  std::string to_string() const;

 private:
  void trim();
  void require_same_field(const UPoly& other) const;

  Field field_;
  std::vector<Element> coeffs_;
};

bool canonical_less(const UPoly& lhs, const UPoly& rhs);

struct DivMod {
  UPoly quotient;
  UPoly remainder;
};

/// Division with remainder: a = b*quotient + remainder, deg remainder < deg b.
DivMod divmod(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);

UPoly pow(const UPoly& base, unsigned exponent);
/// base^exponent mod modulus.
UPoly powmod(const UPoly& base, const mpz_class& exponent, const UPoly& modulus);

/// Monic gcd. Throws BothZero when both inputs vanish.
UPoly gcd(const UPoly& a, const UPoly& b);

struct ExtendedGcd {
  UPoly gcd;  // monic
  UPoly u;
  UPoly v;    // a*u + b*v = gcd
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);

struct SquarefreePart {
  UPoly part;  // monic, squarefree
  unsigned multiplicity;
  friend bool operator==(const SquarefreePart&, const SquarefreePart&) = default;
};

/// Pairwise coprime squarefree parts with distinct multiplicities, sorted by
/// multiplicity ascending. Throws ConstantInput on constants.
std::vector<SquarefreePart> squarefree_decomposition(const UPoly& a);

struct FactorPower {
  UPoly poly;  // monic irreducible
  unsigned exponent;
  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

struct Factorization {
  Element unit;
  std::vector<FactorPower> factors;  // sorted by canonical_less

  UPoly expand() const;
};

/// Complete factorization into monic irreducibles. Throws ZeroPolynomial.
Factorization factor(const UPoly& a);

/// Throws ConstantInput on constants.
bool is_irreducible(const UPoly& a);

/// Largest e with p^e | a. Throws ZeroPolynomial, ReducibleModulus.
unsigned valuation(const UPoly& a, const UPoly& p);

/// Deterministic random monic irreducible of the given degree. Over QQ the
/// coefficients are integers of absolute value at most `height`.
UPoly random_irreducible(const Field& field, unsigned degree, std::uint64_t seed,
                         long long height = 9);

/// Stable 64-bit digest of a polynomial, used to seed randomized splitting.
std::uint64_t fingerprint(const UPoly& a) noexcept;

}  // namespace isod
