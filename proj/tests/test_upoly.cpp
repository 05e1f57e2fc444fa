#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "support.hpp"

using namespace isod;
using isod::testing::error_of;
using isod::testing::poly;

namespace {

const Field QQ = Field::rationals();
const Field F2 = Field::prime(2);
const Field F5 = Field::prime(5);

UPoly random_poly(const Field& f, std::size_t max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> deg(0, max_deg);
  std::uniform_int_distribution<long long> coef(-30, 30);
  std::vector<Element> c;
  std::size_t d = deg(rng);
  for (std::size_t i = 0; i <= d; ++i) c.push_back(Element::from_int(f, coef(rng)));
  return UPoly(f, std::move(c));
}

std::size_t deg(const UPoly& p) { return *p.degree(); }

}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(poly(QQ, "t^4 - t - 1") == UPoly::from_ints(QQ, {-1, -1, 0, 0, 1}));
  CHECK(poly(QQ, "3/2*t^2 + 1").coeff(2) == Element::from_rational(QQ, mpq_class(3, 2)));
  CHECK(poly(QQ, "(t+1)^2") == UPoly::from_ints(QQ, {1, 2, 1}));
  CHECK(poly(QQ, "0").is_zero());
  CHECK(poly(QQ, "t - t").is_zero());
  CHECK(poly(F5, "7*t") == UPoly::from_ints(F5, {0, 2}));
  CHECK(UPoly::from_ints(QQ, {-1, -1, 0, 0, 1}).to_string() == "t^4 - t - 1");
  CHECK(UPoly::from_ints(QQ, {0, -1}).to_string() == "-t");
  CHECK(poly(QQ, "-3/2*t^3 + t^2 - 5").to_string() == "-3/2*t^3 + t^2 - 5");
  CHECK(UPoly(QQ).to_string() == "0");
  CHECK(error_of([] { poly(QQ, "t^"); }) == Errc::SyntaxError);
  CHECK(error_of([] { poly(QQ, "x + 1"); }) == Errc::SyntaxError);
  CHECK(error_of([] { poly(QQ, "1/t"); }) == Errc::SyntaxError);
  CHECK(error_of([] { poly(QQ, "t + * 2"); }) == Errc::SyntaxError);
  CHECK(error_of([] { poly(F5, "1/5"); }) == Errc::DivisionByZero);
  try {
    poly(QQ, "t + $");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    UPoly a = random_poly(QQ, 6, rng) * Element::from_rational(QQ, mpq_class(1, 1 + i % 7));
    CHECK(poly(QQ, a.to_string().c_str()) == a);
    UPoly b = random_poly(F5, 6, rng);
    CHECK(poly(F5, b.to_string().c_str()) == b);
  }
}

TEST_CASE("degree of the zero polynomial is absent") {
  CHECK_FALSE(UPoly(QQ).degree().has_value());
  CHECK(UPoly::from_ints(QQ, {0, 0, 0}).is_zero());
  CHECK(UPoly::from_ints(QQ, {4}).degree() == 0u);
}

TEST_CASE("divmod") {
  auto [q1, r1] = divmod(poly(QQ, "t^3 + 1"), poly(QQ, "t + 1"));
  CHECK(q1 == poly(QQ, "t^2 - t + 1"));
  CHECK(r1.is_zero());

  auto [q2, r2] = divmod(poly(QQ, "t^2"), poly(QQ, "t^3"));
  CHECK(q2.is_zero());
  CHECK(r2 == poly(QQ, "t^2"));

  // over F_2: (t^2+1)^2 = t^4 + 1, so t^4 + t + 1 = (t^2+1)(t^2+1) + t
  auto [q3, r3] = divmod(poly(F2, "t^4 + t + 1"), poly(F2, "t^2 + 1"));
  CHECK(q3 * poly(F2, "t^2 + 1") + r3 == poly(F2, "t^4 + t + 1"));
  CHECK(q3 == poly(F2, "t^2 + 1"));
  CHECK(r3 == poly(F2, "t"));

  CHECK(error_of([] { divmod(poly(QQ, "t"), UPoly(QQ)); }) == Errc::DivisionByZero);
  CHECK(error_of([] { divmod(poly(QQ, "t"), poly(F5, "t")); }) == Errc::MixedFields);

  std::mt19937_64 rng(17);
  for (const Field& f : {QQ, F2, F5, Field::prime(2147483647)}) {
    for (int i = 0; i < 100; ++i) {
      UPoly a = random_poly(f, 9, rng), b = random_poly(f, 5, rng);
      if (b.is_zero()) continue;
      auto [q, r] = divmod(a, b);
      CHECK(b * q + r == a);
      CHECK((r.is_zero() || deg(r) < deg(b)));
    }
  }
}

TEST_CASE("gcd") {
  CHECK(gcd(poly(QQ, "t^2 - 1"), poly(QQ, "t - 1")) == poly(QQ, "t - 1"));
  UPoly g = gcd(poly(F2, "t^2 + 1"), poly(F2, "t^2 + t"));
  CHECK(g == poly(F2, "t + 1"));
  CHECK((poly(F2, "t^2 + 1") % g).is_zero());
  CHECK((poly(F2, "t^2 + t") % g).is_zero());
  CHECK(gcd(poly(QQ, "7"), poly(QQ, "t^3 + 2")) == poly(QQ, "1"));
  CHECK(gcd(UPoly(QQ), poly(QQ, "2*t + 4")) == poly(QQ, "t + 2"));
  CHECK(error_of([] { gcd(UPoly(QQ), UPoly(QQ)); }) == Errc::BothZero);

  std::mt19937_64 rng(23);
  for (const Field& f : {QQ, F5}) {
    for (int i = 0; i < 60; ++i) {
      UPoly a = random_poly(f, 6, rng), b = random_poly(f, 6, rng);
      if (a.is_zero() && b.is_zero()) continue;
      ExtendedGcd eg = extended_gcd(a, b);
      CHECK(eg.gcd.is_monic());
      CHECK(a * eg.u + b * eg.v == eg.gcd);
      CHECK(eg.gcd == gcd(a, b));
    }
  }
}

TEST_CASE("squarefree decomposition") {
  auto sq = squarefree_decomposition(poly(QQ, "(t-1)^2*(t+2)"));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0] == SquarefreePart{poly(QQ, "t + 2"), 1});
  CHECK(sq[1] == SquarefreePart{poly(QQ, "t - 1"), 2});

  // (t-1)^5 = t^5 - 1 over F_5
  CHECK(pow(poly(F5, "t - 1"), 5) == poly(F5, "t^5 - 1"));
  auto frob = squarefree_decomposition(poly(F5, "t^5 - 1"));
  REQUIRE(frob.size() == 1);
  CHECK(frob[0] == SquarefreePart{poly(F5, "t - 1"), 5});

  auto same = squarefree_decomposition(poly(QQ, "t^3 - t - 1"));
  REQUIRE(same.size() == 1);
  CHECK(same[0] == SquarefreePart{poly(QQ, "t^3 - t - 1"), 1});

  CHECK(error_of([] { squarefree_decomposition(poly(QQ, "3")); }) == Errc::ConstantInput);

  // mixed multiplicities across the p-th power boundary
  UPoly a = pow(poly(F5, "t + 1"), 6) * pow(poly(F5, "t^2 + 2"), 5) * poly(F5, "t");
  auto parts = squarefree_decomposition(a);
  UPoly prod = poly(F5, "1");
  for (const auto& [part, m] : parts) {
    prod *= pow(part, m);
    CHECK(gcd(part, part.derivative()).is_constant());
  }
  CHECK(prod == a.monic());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) CHECK(gcd(parts[i].part, parts[j].part).is_constant());
}

TEST_CASE("factor examples") {
  auto f1 = factor(poly(F5, "t^2 + 1"));
  CHECK(poly(F5, "(t - 2)*(t + 2)") == poly(F5, "t^2 + 1"));
  CHECK(f1.unit == Element::one(F5));
  REQUIRE(f1.factors.size() == 2);
  CHECK(f1.factors[0] == FactorPower{poly(F5, "t + 2"), 1});
  CHECK(f1.factors[1] == FactorPower{poly(F5, "t + 3"), 1});

  auto f2 = factor(poly(QQ, "t^4 - 1"));
  CHECK(poly(QQ, "(t - 1)*(t + 1)*(t^2 + 1)") == poly(QQ, "t^4 - 1"));
  REQUIRE(f2.factors.size() == 3);
  CHECK(f2.factors[0].poly == poly(QQ, "t - 1"));
  CHECK(f2.factors[1].poly == poly(QQ, "t + 1"));
  CHECK(f2.factors[2].poly == poly(QQ, "t^2 + 1"));

  auto f3 = factor(poly(QQ, "6*t"));
  CHECK(f3.unit == Element::from_int(QQ, 6));
  REQUIRE(f3.factors.size() == 1);
  CHECK(f3.factors[0] == FactorPower{poly(QQ, "t"), 1});

  CHECK(error_of([] { factor(UPoly(QQ)); }) == Errc::ZeroPolynomial);
  auto c = factor(poly(QQ, "-4/3"));
  CHECK(c.factors.empty());
  CHECK(c.unit == Element::from_rational(QQ, mpq_class(-4, 3)));
}

TEST_CASE("factor over F_2 uses trace splitting") {
  // the two irreducible cubics over F_2 (no roots in {0, 1})
  UPoly c1 = poly(F2, "t^3 + t + 1"), c2 = poly(F2, "t^3 + t^2 + 1");
  REQUIRE(testing::brute_force_irreducible_fp(c1));
  REQUIRE(testing::brute_force_irreducible_fp(c2));
  auto f = factor(c1 * c2 * c2 * poly(F2, "t^2 + t + 1"));
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == FactorPower{poly(F2, "t^2 + t + 1"), 1});
  CHECK(f.factors[1] == FactorPower{c1, 1});
  CHECK(f.factors[2] == FactorPower{c2, 2});
}

TEST_CASE("factor over a large prime field") {
  const Field big = Field::prime(2147483647);
  UPoly a = poly(big, "(t - 3)*(t - 1000000)*(t + 77)^2*(t^2 + 1)");
  auto f = factor(a);
  CHECK(f.expand() == a);
  std::size_t total = 0;
  for (const auto& fp : f.factors) total += fp.exponent * deg(fp.poly);
  CHECK(total == 6);
}

TEST_CASE("is_irreducible") {
  CHECK(is_irreducible(poly(QQ, "t^3 - t - 1")));
  CHECK(is_irreducible(poly(F2, "t^2 + t + 1")));
  CHECK_FALSE(is_irreducible(poly(F5, "t^2 + 1")));
  CHECK_FALSE(is_irreducible(poly(F5, "(t^2 + 2)^2")));
  CHECK(is_irreducible(poly(QQ, "2*t + 1")));
  CHECK_FALSE(is_irreducible(poly(QQ, "t^4 + 4")));  // (t^2+2t+2)(t^2-2t+2)
  CHECK(error_of([] { is_irreducible(poly(QQ, "5")); }) == Errc::ConstantInput);

  // agreement with trial division on every monic quartic over F_3
  const Field f3 = Field::prime(3);
  for (const auto& q : testing::all_monic(f3, 4)) CHECK(is_irreducible(q) == testing::brute_force_irreducible_fp(q));
}

TEST_CASE("valuation") {
  CHECK(valuation(poly(QQ, "(t-1)^3*(t+1)"), poly(QQ, "t - 1")) == 3);
  CHECK(valuation(poly(QQ, "t^4 - 1"), poly(QQ, "t^2 + 1")) == 1);
  CHECK(valuation(poly(QQ, "t + 1"), poly(QQ, "t")) == 0);
  CHECK(error_of([] { valuation(UPoly(QQ), poly(QQ, "t")); }) == Errc::ZeroPolynomial);
  CHECK(error_of([] { valuation(poly(QQ, "t"), poly(QQ, "t^2 - 1")); }) == Errc::ReducibleModulus);

  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) {
    UPoly p = testing::oracle_irreducible_fp(F5, 1 + i % 3, rng);
    UPoly a = random_poly(F5, 4, rng) * pow(p, i % 3);
    UPoly b = random_poly(F5, 4, rng) * pow(p, i % 2);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(valuation(a * b, p) == valuation(a, p) + valuation(b, p));
  }
}

TEST_CASE("factorization round trip over F_p and QQ") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<unsigned> deg_dist(1, 4), exp_dist(1, 3), count_dist(1, 3);
  for (const Field& f : {F2, F5, Field::prime(13), QQ}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::map<std::string, std::pair<UPoly, unsigned>> expected;
      UPoly product = UPoly::constant(Element::one(f));
      unsigned count = count_dist(rng);
      while (expected.size() < count) {
        UPoly q = f.is_rationals() ? testing::oracle_irreducible_q(deg_dist(rng), rng)
                                   : testing::oracle_irreducible_fp(f, deg_dist(rng), rng);
        if (expected.count(q.to_string())) continue;
        unsigned e = exp_dist(rng);
        expected.emplace(q.to_string(), std::make_pair(q, e));
        product *= pow(q, e);
      }
      Element unit = Element::from_int(f, 1 + trial % 4);
      if (unit.is_zero()) unit = Element::one(f);
      auto result = factor(product * unit);
      CHECK(result.unit == unit);
      REQUIRE(result.factors.size() == expected.size());
      std::size_t total = 0;
      for (const auto& [poly, e] : result.factors) {
        auto it = expected.find(poly.to_string());
        REQUIRE(it != expected.end());
        CHECK(it->second.second == e);
        total += e * deg(poly);
      }
      CHECK(total == deg(product));
      CHECK(std::is_sorted(result.factors.begin(), result.factors.end(),
                           [](const auto& x, const auto& y) { return canonical_less(x.poly, y.poly); }));
    }
  }
}

TEST_CASE("factorization over QQ with non-monic and rational input") {
  UPoly a = poly(QQ, "(2*t + 1)^2 * (3*t^2 - 5) / 7");
  auto f = factor(a);
  CHECK(f.expand() == a);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == FactorPower{poly(QQ, "t + 1/2"), 2});
  CHECK(f.factors[1] == FactorPower{poly(QQ, "t^2 - 5/3"), 1});

  // Swinnerton-Dyer style: irreducible over QQ, splits modulo every prime
  UPoly sd = poly(QQ, "t^4 - 10*t^2 + 1");
  CHECK(is_irreducible(sd));
  auto g = factor(sd * poly(QQ, "t^4 + 4"));
  REQUIRE(g.factors.size() == 3);
  CHECK(g.expand() == sd * poly(QQ, "t^4 + 4"));
}

TEST_CASE("random_irreducible is deterministic and irreducible") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    UPoly a = random_irreducible(F2, 3, seed);
    CHECK((a == poly(F2, "t^3 + t + 1") || a == poly(F2, "t^3 + t^2 + 1")));
    CHECK(a == random_irreducible(F2, 3, seed));
    UPoly b = random_irreducible(QQ, 4, seed);
    CHECK(b.is_monic());
    CHECK(is_irreducible(b));
    UPoly c = random_irreducible(F2, 1, seed);
    CHECK((c == poly(F2, "t") || c == poly(F2, "t + 1")));
  }
}
