#include "isodescent/upoly.hpp"

#include <algorithm>
#include <random>

#include "isodescent/error.hpp"
#include "isodescent/expr.hpp"

namespace isod {

UPoly::UPoly(Field field, std::vector<Element> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.field() == field_))
      throw Error(Errc::MixedFields, "coefficient from " + c.field().to_string() +
                                         " in a polynomial over " + field_.to_string());
  trim();
}

UPoly UPoly::constant(const Element& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::monomial(const Element& c, std::size_t exponent) {
  if (c.is_zero()) return UPoly(c.field());
  std::vector<Element> coeffs(exponent + 1, Element::zero(c.field()));
  coeffs.back() = c;
  return UPoly(c.field(), std::move(coeffs));
}

UPoly UPoly::variable(const Field& field) { return monomial(Element::one(field), 1); }

UPoly UPoly::from_ints(const Field& field, std::initializer_list<long long> coeffs) {
  std::vector<Element> out;
  out.reserve(coeffs.size());
  for (long long c : coeffs) out.push_back(Element::from_int(field, c));
  return UPoly(field, std::move(out));
}

UPoly UPoly::parse(const Field& field, std::string_view text) {
  auto sparse = expr::parse(text, field, 1, [](std::string_view name) -> std::optional<std::size_t> {
    if (name == "t") return 0;
    return std::nullopt;
  });
  std::size_t top = 0;
  for (const auto& [m, c] : sparse) top = std::max<std::size_t>(top, m[0]);
  std::vector<Element> coeffs(sparse.empty() ? 0 : top + 1, Element::zero(field));
  for (const auto& [m, c] : sparse) coeffs[m[0]] = c;
  return UPoly(field, std::move(coeffs));
}

std::optional<std::size_t> UPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

bool UPoly::is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }

Element UPoly::coeff(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return Element::zero(field_);
}

const Element& UPoly::leading() const {
  if (coeffs_.empty()) throw Error(Errc::ZeroPolynomial, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

UPoly UPoly::monic() const {
  if (coeffs_.empty() || coeffs_.back().is_one()) return *this;
  return *this * coeffs_.back().inv();
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return UPoly(field_);
  std::vector<Element> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.push_back(coeffs_[i] * Element::from_int(field_, static_cast<long long>(i)));
  return UPoly(field_, std::move(out));
}

Element UPoly::operator()(const Element& x) const {
  Element acc = Element::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::operator-() const {
  UPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void UPoly::require_same_field(const UPoly& other) const {
  if (!(field_ == other.field_))
    throw Error(Errc::MixedFields, "polynomials over " + field_.to_string() + " and " +
                                       other.field_.to_string());
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  require_same_field(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Element::zero(field_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
  require_same_field(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Element::zero(field_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& rhs) {
  require_same_field(rhs);
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Element> out(coeffs_.size() + rhs.coeffs_.size() - 1, Element::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Element& c) {
  if (!(c.field() == field_))
    throw Error(Errc::MixedFields, "scalar from " + c.field().to_string() + " times a polynomial over " +
                                       field_.to_string());
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

bool canonical_less(const UPoly& lhs, const UPoly& rhs) {
  if (lhs.coeffs_.size() != rhs.coeffs_.size()) return lhs.coeffs_.size() < rhs.coeffs_.size();
  for (std::size_t i = lhs.coeffs_.size(); i-- > 0;) {
    auto c = lhs.coeffs_[i] <=> rhs.coeffs_[i];
    if (c != 0) return c < 0;
  }
  return false;
}

std::string UPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Element& c = coeffs_[i];
    if (c.is_zero()) continue;
    bool negative = field_.is_rationals() && sgn(c.rational()) < 0;
    std::string magnitude = negative ? (-c).to_string() : c.to_string();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = magnitude == "1";
    if (i == 0) {
      out += magnitude;
      continue;
    }
    if (!unit) out += magnitude + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

DivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (!(a.field() == b.field()))
    throw Error(Errc::MixedFields, "polynomials over " + a.field().to_string() + " and " +
                                       b.field().to_string());
  const Field& field = a.field();
  if (a.size() < b.size()) return {UPoly(field), a};
  std::vector<Element> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  Element lead_inv = bc.back().inv();
  std::vector<Element> quot(rem.size() - db, Element::zero(field));
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    Element q = rem[k] * lead_inv;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  rem.resize(db);
  return {UPoly(field, std::move(quot)), UPoly(field, std::move(rem))};
}

UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).quotient; }

UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).remainder; }

UPoly pow(const UPoly& base, unsigned exponent) {
  UPoly result = UPoly::constant(Element::one(base.field()));
  UPoly b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

UPoly powmod(const UPoly& base, const mpz_class& exponent, const UPoly& modulus) {
  UPoly result = UPoly::constant(Element::one(base.field())) % modulus;
  UPoly b = base % modulus;
  const auto bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  if (sgn(exponent) == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = (result * b) % modulus;
  }
  return result;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd of two zero polynomials");
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd of two zero polynomials");
  const Field& field = a.field();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(Element::one(field)), s1(field);
  UPoly t0(field), t1 = UPoly::constant(Element::one(field));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Element lc_inv = r0.leading().inv();
  return {r0 * lc_inv, s0 * lc_inv, t0 * lc_inv};
}

namespace {

std::vector<SquarefreePart> yun(const UPoly& monic_input) {
  std::vector<SquarefreePart> out;
  UPoly b = monic_input.derivative();
  UPoly c = gcd(monic_input, b);
  UPoly w = monic_input / c;
  UPoly y = b / c;
  UPoly z = y - w.derivative();
  unsigned i = 1;
  while (!w.is_constant()) {
    UPoly g = gcd(w, z);
    if (!g.is_constant()) out.push_back({g, i});
    w = w / g;
    y = z / g;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

// a(t) = b(t^p) with prime-field coefficients; returns b (coefficient-wise
// p-th roots are the identity on F_p).
UPoly pth_root(const UPoly& a) {
  const auto p = a.field().characteristic();
  std::vector<Element> out;
  for (std::size_t i = 0; i < a.size(); i += p) out.push_back(a.coeffs()[i]);
  return UPoly(a.field(), std::move(out));
}

void squarefree_fp(const UPoly& f, unsigned scale, std::vector<SquarefreePart>& out) {
  const auto p = static_cast<unsigned>(f.field().characteristic());
  UPoly g = f.derivative();
  if (g.is_zero()) {
    squarefree_fp(pth_root(f), scale * p, out);
    return;
  }
  UPoly c = gcd(f, g);
  UPoly w = f / c;
  unsigned i = 1;
  while (!w.is_constant()) {
    UPoly y = gcd(w, c);
    UPoly z = w / y;
    if (!z.is_constant()) out.push_back({z, i * scale});
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_constant()) squarefree_fp(pth_root(c), scale * p, out);
}

}  // namespace

std::vector<SquarefreePart> squarefree_decomposition(const UPoly& a) {
  if (a.is_constant())
    throw Error(Errc::ConstantInput, "squarefree decomposition of a constant");
  UPoly m = a.monic();
  std::vector<SquarefreePart> raw;
  if (m.field().is_rationals()) raw = yun(m);
  else squarefree_fp(m, 1, raw);

  std::sort(raw.begin(), raw.end(),
            [](const auto& x, const auto& y) { return x.multiplicity < y.multiplicity; });
  std::vector<SquarefreePart> merged;
  for (auto& part : raw) {
    if (!merged.empty() && merged.back().multiplicity == part.multiplicity)
      merged.back().part *= part.part;
    else
      merged.push_back(std::move(part));
  }
  return merged;
}

UPoly Factorization::expand() const {
  UPoly out = UPoly::constant(unit);
  for (const auto& f : factors) out *= pow(f.poly, f.exponent);
  return out;
}

bool is_irreducible(const UPoly& a) {
  if (a.is_constant()) throw Error(Errc::ConstantInput, "irreducibility test of a constant");
  const std::size_t n = *a.degree();
  if (n == 1) return true;
  if (a.field().is_rationals()) {
    auto f = factor(a);
    return f.factors.size() == 1 && f.factors.front().exponent == 1;
  }
  // Ben-Or: a has no factor of degree i <= n/2 iff gcd(t^(p^i) - t, a) = 1.
  UPoly m = a.monic();
  const mpz_class p(static_cast<unsigned long>(a.field().characteristic()));
  UPoly t = UPoly::variable(a.field());
  UPoly h = t;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = powmod(h, p, m);
    if (!gcd(m, h - t).is_constant()) return false;
  }
  return true;
}

unsigned valuation(const UPoly& a, const UPoly& p) {
  if (a.is_zero()) throw Error(Errc::ZeroPolynomial, "valuation of the zero polynomial");
  if (p.is_constant() || !is_irreducible(p))
    throw Error(Errc::ReducibleModulus, "valuation at " + p.to_string() + ", which is not irreducible");
  unsigned e = 0;
  UPoly cur = a;
  for (;;) {
    auto [q, r] = divmod(cur, p);
    if (!r.is_zero()) return e;
    cur = std::move(q);
    ++e;
  }
}

UPoly random_irreducible(const Field& field, unsigned degree, std::uint64_t seed, long long height) {
  if (degree == 0) throw Error(Errc::InvalidArgument, "irreducible polynomials have degree >= 1");
  std::mt19937_64 rng(seed);
  const unsigned cap = 64 * degree;
  for (unsigned attempt = 0; attempt < cap; ++attempt) {
    std::vector<Element> coeffs;
    coeffs.reserve(degree + 1);
    for (unsigned i = 0; i < degree; ++i) {
      if (field.is_rationals()) {
        std::uniform_int_distribution<long long> dist(-height, height);
        coeffs.push_back(Element::from_int(field, dist(rng)));
      } else {
        std::uniform_int_distribution<std::uint64_t> dist(0, field.characteristic() - 1);
        coeffs.push_back(Element::from_int(field, static_cast<long long>(dist(rng))));
      }
    }
    coeffs.push_back(Element::one(field));
    UPoly candidate(field, std::move(coeffs));
    if (is_irreducible(candidate)) return candidate;
  }
  throw Error(Errc::CapExceeded, "no irreducible polynomial of degree " + std::to_string(degree) +
                                     " over " + field.to_string() + " found in " +
                                     std::to_string(cap) + " attempts");
}

std::uint64_t fingerprint(const UPoly& a) noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::string_view s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  mix(a.field().to_string());
  for (const auto& c : a.coeffs()) mix(c.to_string());
  return h;
}

}  // namespace isod
