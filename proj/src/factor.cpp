// Factorization over F_p (distinct-degree + Cantor-Zassenhaus) and over QQ
// (modular factorization, Hensel lifting, subset recombination).

#include <algorithm>
#include <random>

#include "isodescent/error.hpp"
#include "isodescent/upoly.hpp"

namespace isod {

namespace {

// ---------------------------------------------------------------------------
// F_p

struct DegreeBlock {
  UPoly product;  // product of all irreducible factors of this degree
  std::size_t degree;
};

std::vector<DegreeBlock> distinct_degree(const UPoly& monic_squarefree) {
  const Field& field = monic_squarefree.field();
  const mpz_class p(static_cast<unsigned long>(field.characteristic()));
  const UPoly t = UPoly::variable(field);
  std::vector<DegreeBlock> out;
  UPoly f = monic_squarefree;
  UPoly h = t;
  for (std::size_t i = 1; *f.degree() >= 2 * i; ++i) {
    h = powmod(h, p, f);
    UPoly g = gcd(f, h - t);
    if (!g.is_constant()) {
      out.push_back({g, i});
      f = f / g;
      h = h % f;
    }
  }
  if (!f.is_constant()) out.push_back({f, *f.degree()});
  return out;
}

UPoly random_below(const Field& field, std::size_t degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, field.characteristic() - 1);
  std::vector<Element> coeffs;
  coeffs.reserve(degree);
  for (std::size_t i = 0; i < degree; ++i)
    coeffs.push_back(Element::from_int(field, static_cast<long long>(dist(rng))));
  return UPoly(field, std::move(coeffs));
}

// Splits a monic squarefree g whose irreducible factors all have degree d.
void equal_degree(const UPoly& g, std::size_t d, std::mt19937_64& rng, std::vector<UPoly>& out) {
  const std::size_t n = *g.degree();
  if (n == d) {
    out.push_back(g);
    return;
  }
  const Field& field = g.field();
  const auto p = field.characteristic();
  const UPoly one = UPoly::constant(Element::one(field));
  mpz_class half;
  if (p != 2) {
    mpz_ui_pow_ui(half.get_mpz_t(), p, d);
    half = (half - 1) / 2;
  }
  for (;;) {
    UPoly a = random_below(field, n, rng);
    if (a.is_constant()) continue;
    UPoly b(field);
    if (p == 2) {
      // absolute trace to F_2: a + a^2 + ... + a^(2^(d-1))
      UPoly term = a % g;
      b = term;
      for (std::size_t j = 1; j < d; ++j) {
        term = (term * term) % g;
        b += term;
      }
    } else {
      b = powmod(a, half, g) - one;
    }
    if (b.is_zero()) continue;
    UPoly h = gcd(g, b);
    if (h.is_constant() || *h.degree() == n) continue;
    equal_degree(h, d, rng, out);
    equal_degree(g / h, d, rng, out);
    return;
  }
}

std::vector<UPoly> factor_squarefree_fp(const UPoly& monic_squarefree, std::mt19937_64& rng) {
  std::vector<UPoly> out;
  for (const auto& block : distinct_degree(monic_squarefree))
    equal_degree(block.product, block.degree, rng, out);
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials, low degree first.

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void zmod(ZPoly& a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
}

void zsymmetric(ZPoly& a, const mpz_class& m) {
  mpz_class half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
}

mpz_class zcontent(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly zprimitive(ZPoly a) {
  ztrim(a);
  if (a.empty()) return a;
  mpz_class g = zcontent(a);
  if (sgn(a.back()) < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

// Quotient a / b if b divides a exactly over Z.
std::optional<ZPoly> zdivexact(const ZPoly& a, const ZPoly& b) {
  if (b.empty() || a.size() < b.size()) return std::nullopt;
  if (sgn(a.front()) != 0 && sgn(b.front()) != 0 && !mpz_divisible_p(a.front().get_mpz_t(), b.front().get_mpz_t()))
    return std::nullopt;
  ZPoly rem = a;
  ZPoly quot(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (sgn(rem[k]) == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), rem[k].get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b[j];
    quot[k - db] = q;
  }
  for (const auto& c : rem)
    if (sgn(c) != 0) return std::nullopt;
  return quot;
}

UPoly to_fp(const ZPoly& a, const Field& fp) {
  std::vector<Element> coeffs;
  coeffs.reserve(a.size());
  for (const auto& c : a) coeffs.push_back(Element::from_mpz(fp, c));
  return UPoly(fp, std::move(coeffs));
}

ZPoly from_fp(const UPoly& a) {
  ZPoly out;
  out.reserve(a.size());
  for (const auto& c : a.coeffs()) out.emplace_back(static_cast<unsigned long>(c.residue()));
  return out;
}

// Lifts the monic factor f of target mod p (with cofactor g, target monic
// mod p^K) to a monic factor mod p^K.
ZPoly hensel_lift(const ZPoly& target, const UPoly& f_p, const UPoly& g_p, unsigned long p, unsigned K) {
  const Field& fp = f_p.field();
  const UPoly t = extended_gcd(f_p, g_p).v;  // s*f + t*g = 1
  ZPoly f = from_fp(f_p);
  ZPoly g = from_fp(g_p);
  mpz_class pj = p;  // p^j
  for (unsigned j = 1; j < K; ++j) {
    mpz_class next = pj * p;
    ZPoly prod = zmul(f, g);
    ZPoly e(std::max(target.size(), prod.size()));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i < target.size()) e[i] += target[i];
      if (i < prod.size()) e[i] -= prod[i];
    }
    zmod(e, next);
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    UPoly e_p = to_fp(e, fp);
    // f*dg + g*df = e (mod p) with deg df < deg f
    UPoly df = (t * e_p) % f_p;
    UPoly dg = (e_p - g_p * df) / f_p;
    ZPoly dfz = from_fp(df), dgz = from_fp(dg);
    if (f.size() < dfz.size()) f.resize(dfz.size());
    if (g.size() < dgz.size()) g.resize(dgz.size());
    for (std::size_t i = 0; i < dfz.size(); ++i) f[i] += pj * dfz[i];
    for (std::size_t i = 0; i < dgz.size(); ++i) g[i] += pj * dgz[i];
    pj = next;
  }
  zmod(f, pj);
  return f;
}

// Factors a squarefree primitive integer polynomial with positive leading
// coefficient into primitive irreducibles.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& input) {
  const std::size_t n = input.size() - 1;
  if (n <= 1) return {input};

  // Pick the good prime (first few tried) giving the fewest modular factors.
  unsigned long best_p = 0;
  std::vector<UPoly> best_factors;
  int good = 0;
  for (unsigned long p = 3; good < 5 && p < (1ul << 31); p += 2) {
    if (!is_prime(p) || mpz_divisible_ui_p(input.back().get_mpz_t(), p)) continue;
    Field fp = Field::prime(p);
    UPoly a = to_fp(input, fp);
    if (!gcd(a, a.derivative()).is_constant()) continue;
    ++good;
    std::mt19937_64 rng(fingerprint(a));
    auto factors = factor_squarefree_fp(a.monic(), rng);
    if (best_p == 0 || factors.size() < best_factors.size()) {
      best_p = p;
      best_factors = std::move(factors);
    }
    if (best_factors.size() == 1) break;
  }
  if (best_factors.size() <= 1) return {input};

  const unsigned long p = best_p;
  const Field fp = Field::prime(p);
  std::sort(best_factors.begin(), best_factors.end(), canonical_less);

  // Any factor h satisfies |h_i| <= 2^n ||input||_2; candidates carry lc(input).
  mpz_class norm2 = 0;
  for (const auto& c : input) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  mpz_class bound = norm * abs(input.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);
  unsigned K = 1;
  mpz_class modulus = p;
  while (modulus <= bound) {
    modulus *= p;
    ++K;
  }

  // Monic target: lc^-1 * input mod p^K.
  mpz_class lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), input.back().get_mpz_t(), modulus.get_mpz_t());
  ZPoly target = input;
  for (auto& c : target) c *= lc_inv;
  zmod(target, modulus);

  std::vector<ZPoly> lifted;
  for (std::size_t i = 0; i < best_factors.size(); ++i) {
    UPoly cofactor = UPoly::constant(Element::one(fp));
    for (std::size_t j = 0; j < best_factors.size(); ++j)
      if (j != i) cofactor *= best_factors[j];
    lifted.push_back(hensel_lift(target, best_factors[i], cofactor, p, K));
  }

  std::vector<ZPoly> result;
  ZPoly rest = input;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  for (std::size_t size = 1; 2 * size <= remaining.size();) {
    bool found = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      ZPoly cand{rest.back()};
      for (std::size_t i : pick) {
        cand = zmul(cand, lifted[remaining[i]]);
        zmod(cand, modulus);
      }
      zsymmetric(cand, modulus);
      cand = zprimitive(std::move(cand));
      if (cand.size() > 1) {
        if (auto quotient = zdivexact(rest, cand)) {
          result.push_back(cand);
          rest = std::move(*quotient);
          std::vector<std::size_t> kept;
          for (std::size_t i = 0; i < remaining.size(); ++i)
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) kept.push_back(remaining[i]);
          remaining = std::move(kept);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t k = size;
      while (k > 0 && pick[k - 1] == remaining.size() - size + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t i = k; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.size() > 1) result.push_back(zprimitive(std::move(rest)));
  return result;
}

// Monic rational polynomial -> primitive integer polynomial with positive lc.
ZPoly to_primitive_z(const UPoly& a) {
  mpz_class den = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  ZPoly out;
  out.reserve(a.size());
  for (const auto& c : a.coeffs()) out.push_back(c.rational().get_num() * (den / c.rational().get_den()));
  return zprimitive(std::move(out));
}

UPoly to_monic_q(const ZPoly& a) {
  const Field qq = Field::rationals();
  std::vector<Element> coeffs;
  coeffs.reserve(a.size());
  for (const auto& c : a) coeffs.push_back(Element::from_mpz(qq, c));
  return UPoly(qq, std::move(coeffs)).monic();
}

}  // namespace

Factorization factor(const UPoly& a) {
  if (a.is_zero()) throw Error(Errc::ZeroPolynomial, "factorization of the zero polynomial");
  Factorization out{a.leading(), {}};
  if (a.is_constant()) return out;
  std::mt19937_64 rng(fingerprint(a));
  for (const auto& [part, multiplicity] : squarefree_decomposition(a)) {
    if (a.field().is_rationals()) {
      for (const auto& z : factor_squarefree_z(to_primitive_z(part)))
        out.factors.push_back({to_monic_q(z), multiplicity});
    } else {
      for (auto& q : factor_squarefree_fp(part, rng)) out.factors.push_back({std::move(q), multiplicity});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorPower& x, const FactorPower& y) { return canonical_less(x.poly, y.poly); });
  return out;
}

}  // namespace isod
