// Test-only helpers and independent oracles. Nothing here calls the
// factorization or descent code paths it is used to check.
#pragma once

#include <random>
#include <set>
#include <vector>

#include "isodescent/error.hpp"
#include "isodescent/field.hpp"
#include "isodescent/upoly.hpp"

namespace isod::testing {

template <class Fn>
std::optional<Errc> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline UPoly poly(const Field& f, const char* text) { return UPoly::parse(f, text); }

/// All monic polynomials of the given degree over F_p.
inline std::vector<UPoly> all_monic(const Field& fp, unsigned degree) {
  const auto p = fp.characteristic();
  std::vector<UPoly> out;
  std::vector<std::uint64_t> digits(degree, 0);
  for (;;) {
    std::vector<Element> coeffs;
    for (auto d : digits) coeffs.push_back(Element::from_int(fp, static_cast<long long>(d)));
    coeffs.push_back(Element::one(fp));
    out.emplace_back(fp, std::move(coeffs));
    std::size_t i = 0;
    while (i < degree && ++digits[i] == p) digits[i++] = 0;
    if (i == degree) break;
  }
  return out;
}

/// Trial division by every monic polynomial of degree <= deg/2, using only
/// the division algorithm.
inline bool brute_force_irreducible_fp(const UPoly& a) {
  const std::size_t n = *a.degree();
  for (unsigned k = 1; 2 * k <= n; ++k)
    for (const auto& q : all_monic(a.field(), k))
      if ((a % q).is_zero()) return false;
  return true;
}

/// Random monic irreducible over F_p of exactly this degree, certified by
/// brute-force trial division.
inline UPoly oracle_irreducible_fp(const Field& fp, unsigned degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> dist(0, static_cast<long long>(fp.characteristic()) - 1);
  for (;;) {
    std::vector<Element> coeffs;
    for (unsigned i = 0; i < degree; ++i) coeffs.push_back(Element::from_int(fp, dist(rng)));
    coeffs.push_back(Element::one(fp));
    UPoly cand(fp, std::move(coeffs));
    if (brute_force_irreducible_fp(cand)) return cand;
  }
}

/// Random monic irreducible over QQ with integer coefficients of absolute
/// value <= height (height >= 10). Irreducibility is certified by
/// construction: linear, quadratic with non-square discriminant, or
/// Eisenstein at 2, 3 or 5.
inline UPoly oracle_irreducible_q(unsigned degree, std::mt19937_64& rng, long long height = 20) {
  const Field qq = Field::rationals();
  std::uniform_int_distribution<long long> coef(-height, height);
  if (degree == 1) return UPoly::from_ints(qq, {coef(rng), 1});
  if (degree == 2) {
    for (;;) {
      long long b = coef(rng), c = coef(rng);
      mpz_class disc = mpz_class(static_cast<long>(b * b - 4 * c));
      if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) return UPoly::from_ints(qq, {c, b, 1});
    }
  }
  static constexpr long long primes[] = {2, 3, 5};
  std::uniform_int_distribution<int> pick(0, 2);
  const long long p = primes[pick(rng)];
  std::uniform_int_distribution<long long> mult(-height / p, height / p);
  for (;;) {
    std::vector<Element> coeffs;
    long long a0 = mult(rng);
    if (a0 == 0 || a0 % p == 0) continue;
    coeffs.push_back(Element::from_int(qq, p * a0));
    for (unsigned i = 1; i < degree; ++i) coeffs.push_back(Element::from_int(qq, p * mult(rng)));
    coeffs.push_back(Element::one(qq));
    return UPoly(qq, std::move(coeffs));
  }
}

}  // namespace isod::testing
