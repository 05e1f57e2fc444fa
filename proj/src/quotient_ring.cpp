#include "isodescent/quotient_ring.hpp"

namespace isod {

QuotientRing::QuotientRing(UPoly modulus) {
  if (modulus.is_constant() || !modulus.is_monic())
    throw Error(Errc::InvalidArgument,
                "quotient modulus must be monic of degree >= 1, got " + modulus.to_string());
  modulus_ = std::make_shared<const UPoly>(std::move(modulus));
}

QElem QuotientRing::element(const UPoly& representative) const { return QElem(*this, representative); }

QElem QuotientRing::embed(const Element& c) const { return QElem(*this, UPoly::constant(c)); }

QElem QuotientRing::zero() const { return QElem(*this, UPoly(field())); }

QElem QuotientRing::one() const { return embed(Element::one(field())); }

QElem QuotientRing::generator() const { return QElem(*this, UPoly::variable(field())); }

QElem::QElem(QuotientRing ring, const UPoly& representative)
    : ring_(std::move(ring)), rep_(representative % ring_.modulus()) {}

void QElem::require_same_ring(const QElem& other) const {
  if (!(ring_ == other.ring_))
    throw Error(Errc::MixedFields, "elements of k[t]/(" + ring_.modulus().to_string() + ") and k[t]/(" +
                                       other.ring_.modulus().to_string() + ")");
}

QElem QElem::operator-() const {
  QElem out(*this);
  out.rep_ = -rep_;
  return out;
}

QElem QElem::inv() const {
  if (rep_.is_zero()) throw NotInvertibleError(ring_.modulus(), "inverse of zero in k[t]/(h)");
  ExtendedGcd eg = extended_gcd(rep_, ring_.modulus());
  if (!eg.gcd.is_constant())
    throw NotInvertibleError(eg.gcd, rep_.to_string() + " shares the factor " + eg.gcd.to_string() +
                                         " with the modulus " + ring_.modulus().to_string());
  return QElem(ring_, eg.u);
}

QElem QElem::pow(std::uint64_t exponent) const {
  QElem result = ring_.one();
  QElem base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

QElem& QElem::operator+=(const QElem& rhs) {
  require_same_ring(rhs);
  rep_ += rhs.rep_;
  return *this;
}

QElem& QElem::operator-=(const QElem& rhs) {
  require_same_ring(rhs);
  rep_ -= rhs.rep_;
  return *this;
}

QElem& QElem::operator*=(const QElem& rhs) {
  require_same_ring(rhs);
  rep_ = (rep_ * rhs.rep_) % ring_.modulus();
  return *this;
}

bool operator==(const QElem& a, const QElem& b) { return a.ring_ == b.ring_ && a.rep_ == b.rep_; }

}  // namespace isod
