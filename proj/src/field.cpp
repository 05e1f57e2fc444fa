#include "isodescent/field.hpp"

#include <cctype>
#include <charconv>

#include "isodescent/error.hpp"

namespace isod {

namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // p is prime and a != 0, so a^(p-2) would do; extended Euclid is cheaper.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime(p))
    throw Error(Errc::InvalidArgument,
                "field characteristic " + std::to_string(p) +
                    " is not a prime below 2^31");
  return Field(FieldKind::PrimeField, p);
}

Field Field::parse(std::string_view spec) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  spec = trim(spec);
  if (spec == "QQ") return rationals();
  if (spec.size() > 4 && spec.substr(0, 3) == "GF(" && spec.back() == ')') {
    auto digits = trim(spec.substr(3, spec.size() - 4));
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw Error(Errc::InvalidArgument,
              "field spec '" + std::string(spec) + "' is not QQ or GF(p)");
}

std::string Field::to_string() const {
  if (is_rationals()) return "QQ";
  return "GF(" + std::to_string(p_) + ")";
}

Element Element::zero(const Field& field) { return from_int(field, 0); }

Element Element::one(const Field& field) { return from_int(field, 1); }

Element Element::from_int(const Field& field, long long value) {
  if (field.is_rationals()) return Element(field, mpq_class(mpz_class(static_cast<long>(value))));
  auto p = static_cast<long long>(field.characteristic());
  long long r = value % p;
  if (r < 0) r += p;
  return Element(field, static_cast<std::uint64_t>(r));
}

Element Element::from_mpz(const Field& field, const mpz_class& value) {
  if (field.is_rationals()) return Element(field, mpq_class(value));
  return Element(field, reduce_mpz(value, field.characteristic()));
}

Element Element::from_rational(const Field& field, const mpq_class& value) {
  mpq_class canonical(value);
  canonical.canonicalize();
  if (field.is_rationals()) return Element(field, std::move(canonical));
  const auto p = field.characteristic();
  std::uint64_t den = reduce_mpz(canonical.get_den(), p);
  if (den == 0)
    throw Error(Errc::DivisionByZero,
                "denominator of " + canonical.get_str() + " vanishes in " + field.to_string());
  std::uint64_t num = reduce_mpz(canonical.get_num(), p);
  return Element(field, num * mod_inverse(den, p) % p);
}

bool Element::is_zero() const noexcept {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Element::is_one() const noexcept {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Element::residue() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r;
  throw Error(Errc::InvalidArgument, "residue() requested on a rational element");
}

const mpq_class& Element::rational() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(Errc::InvalidArgument, "rational() requested on a prime-field element");
}

void Element::require_same_field(const Element& other) const {
  if (!(field_ == other.field_))
    throw Error(Errc::MixedFields, "cannot combine elements of " + field_.to_string() +
                                       " and " + other.field_.to_string());
}

Element Element::operator-() const {
  if (field_.is_rationals()) return Element(field_, mpq_class(-std::get<mpq_class>(value_)));
  auto r = std::get<std::uint64_t>(value_);
  return Element(field_, r == 0 ? 0 : field_.characteristic() - r);
}

Element Element::inv() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (field_.is_rationals()) return Element(field_, mpq_class(1 / std::get<mpq_class>(value_)));
  return Element(field_, mod_inverse(std::get<std::uint64_t>(value_), field_.characteristic()));
}

Element Element::pow(std::uint64_t exponent) const {
  Element result = one(field_);
  Element base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Element& Element::operator+=(const Element& rhs) {
  require_same_field(rhs);
  if (field_.is_rationals()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + std::get<std::uint64_t>(rhs.value_)) % field_.characteristic();
  }
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_same_field(rhs);
  if (field_.is_rationals()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  } else {
    const auto p = field_.characteristic();
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + p - std::get<std::uint64_t>(rhs.value_)) % p;
  }
  return *this;
}

Element& Element::operator*=(const Element& rhs) {
  require_same_field(rhs);
  if (field_.is_rationals()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = r * std::get<std::uint64_t>(rhs.value_) % field_.characteristic();
  }
  return *this;
}

Element& Element::operator/=(const Element& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inv();
}

bool operator==(const Element& lhs, const Element& rhs) {
  return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
}

std::strong_ordering operator<=>(const Element& lhs, const Element& rhs) {
  lhs.require_same_field(rhs);
  if (lhs.field_.is_rationals()) {
    int c = cmp(std::get<mpq_class>(lhs.value_), std::get<mpq_class>(rhs.value_));
    return c <=> 0;
  }
  return std::get<std::uint64_t>(lhs.value_) <=> std::get<std::uint64_t>(rhs.value_);
}

std::string Element::to_string() const {
  if (field_.is_rationals()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

}  // namespace isod
