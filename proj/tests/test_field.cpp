#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "isodescent/error.hpp"
#include "isodescent/field.hpp"
#include "isodescent/quotient_ring.hpp"

using namespace isod;

namespace {

Element rat(long long num, long long den) {
  return Element::from_rational(Field::rationals(), mpq_class(static_cast<long>(num), static_cast<long>(den)));
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an isod::Error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("field specs") {
  CHECK(Field::parse("QQ").is_rationals());
  CHECK(Field::parse(" GF(7) ").characteristic() == 7);
  CHECK(Field::parse("GF(2147483647)").characteristic() == 2147483647u);
  CHECK(code_of([] { Field::parse("GF(9)"); }) == Errc::InvalidArgument);
  CHECK(code_of([] { Field::parse("GF(2147483659)"); }) == Errc::InvalidArgument);
  CHECK(code_of([] { Field::parse("ZZ"); }) == Errc::InvalidArgument);
  CHECK(Field::prime(13).to_string() == "GF(13)");
}

TEST_CASE("prime field arithmetic") {
  const Field f7 = Field::prime(7);
  CHECK(Element::from_int(f7, 3) * Element::from_int(f7, 5) == Element::one(f7));
  const Field f5 = Field::prime(5);
  CHECK(Element::from_int(f5, 2).inv() == Element::from_int(f5, 3));
  CHECK(Element::from_int(f5, -1).residue() == 4);
  CHECK(code_of([&] { Element::zero(f5).inv(); }) == Errc::DivisionByZero);
  CHECK(code_of([&] { (void)(Element::one(f5) + Element::one(f7)); }) == Errc::MixedFields);
  CHECK(code_of([&] { Element::from_rational(f5, mpq_class(1, 10)); }) == Errc::DivisionByZero);
  CHECK(Element::from_rational(f5, mpq_class(1, 2)) == Element::from_int(f5, 3));
}

TEST_CASE("rational arithmetic") {
  CHECK(rat(2, 3) + rat(1, 6) == rat(5, 6));
  CHECK((rat(2, 3) + rat(1, 6)).to_string() == "5/6");
  CHECK(rat(-4, 6).to_string() == "-2/3");
  CHECK(rat(4, -6) == rat(-2, 3));
  CHECK(rat(3, 4) / rat(3, 8) == rat(2, 1));
  CHECK(code_of([] { rat(0, 1).inv(); }) == Errc::DivisionByZero);
  CHECK(rat(1, 3) < rat(1, 2));
}

TEST_CASE("inverse property and canonical form") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(-1000, 1000);
  for (std::uint64_t p : {2u, 3u, 13u, 65521u}) {
    const Field f = Field::prime(p);
    for (int i = 0; i < 200; ++i) {
      Element a = Element::from_int(f, dist(rng));
      if (a.is_zero()) continue;
      CHECK(a * a.inv() == Element::one(f));
    }
  }
  for (int i = 0; i < 200; ++i) {
    long long m = dist(rng), n = dist(rng), k = dist(rng);
    if (n == 0 || k == 0) continue;
    Element a = rat(m, n);
    CHECK(a == rat(m * k, n * k));
    CHECK(sgn(a.rational().get_den()) > 0);
    if (!a.is_zero()) CHECK(a * a.inv() == Element::one(Field::rationals()));
  }
}

TEST_CASE("Frobenius is additive in F_p") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2u, 5u, 7u, 101u, 7919u}) {
    const Field f = Field::prime(p);
    std::uniform_int_distribution<long long> dist(0, static_cast<long long>(p) - 1);
    for (int i = 0; i < 50; ++i) {
      Element a = Element::from_int(f, dist(rng));
      Element b = Element::from_int(f, dist(rng));
      CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
    }
  }
}

TEST_CASE("quotient ring arithmetic") {
  SUBCASE("t*t in F_3[t]/(t^2+1)") {
    const Field f3 = Field::prime(3);
    QuotientRing ring(UPoly::from_ints(f3, {1, 0, 1}));
    QElem t = ring.generator();
    CHECK(t * t == ring.embed(Element::from_int(f3, 2)));
  }
  SUBCASE("inverse of t modulo t^3 - t - 1") {
    const Field qq = Field::rationals();
    QuotientRing ring(UPoly::from_ints(qq, {-1, -1, 0, 1}));
    QElem inv = ring.generator().inv();
    CHECK(inv.representative() == UPoly::from_ints(qq, {-1, 0, 1}));
    CHECK(inv * ring.generator() == ring.one());
  }
  SUBCASE("zero divisor reports the common factor") {
    const Field qq = Field::rationals();
    QuotientRing ring(UPoly::from_ints(qq, {-1, 0, 1}));
    try {
      ring.element(UPoly::from_ints(qq, {-1, 1})).inv();
      FAIL("expected NotInvertible");
    } catch (const NotInvertibleError& e) {
      CHECK(e.code() == Errc::NotInvertible);
      CHECK(e.common_factor() == UPoly::from_ints(qq, {-1, 1}));
    }
  }
  SUBCASE("moduli must match") {
    const Field qq = Field::rationals();
    QuotientRing r1(UPoly::from_ints(qq, {1, 0, 1}));
    QuotientRing r2(UPoly::from_ints(qq, {2, 0, 1}));
    CHECK(code_of([&] { (void)(r1.one() + r2.one()); }) == Errc::MixedFields);
    QuotientRing r1b(UPoly::from_ints(qq, {1, 0, 1}));
    CHECK(r1.one() + r1b.one() == r1.embed(Element::from_int(qq, 2)));
  }
  SUBCASE("modulus must be monic and nonconstant") {
    const Field qq = Field::rationals();
    CHECK(code_of([&] { QuotientRing(UPoly::from_ints(qq, {1, 2})); }) == Errc::InvalidArgument);
    CHECK(code_of([&] { QuotientRing(UPoly::from_ints(qq, {1})); }) == Errc::InvalidArgument);
  }
}

TEST_CASE("a * inv(a) = 1 in a field extension") {
  const Field f5 = Field::prime(5);
  const UPoly modulus = UPoly::from_ints(f5, {1, 1, 0, 1});  // t^3 + t + 1, no roots mod 5
  REQUIRE(is_irreducible(modulus));
  QuotientRing ring(modulus);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> dist(0, 4);
  for (int i = 0; i < 100; ++i) {
    QElem a = ring.element(UPoly::from_ints(f5, {dist(rng), dist(rng), dist(rng)}));
    if (a.is_zero()) continue;
    CHECK(a * a.inv() == ring.one());
  }
}
