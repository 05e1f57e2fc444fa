#pragma once

#include <memory>
#include <string>

#include "isodescent/error.hpp"
#include "isodescent/upoly.hpp"

namespace isod {

class QElem;

/// The ring k[t]/(h) for a monic h of degree >= 1. A cheap shared handle;
/// two rings are the same when their moduli are equal.
class QuotientRing {
 public:
  /// Throws InvalidArgument unless modulus is monic of degree >= 1.
  explicit QuotientRing(UPoly modulus);

  const UPoly& modulus() const noexcept { return *modulus_; }
  const Field& field() const noexcept { return modulus_->field(); }
  std::size_t degree() const noexcept { return modulus_->size() - 1; }

  QElem element(const UPoly& representative) const;
  QElem embed(const Element& c) const;
  QElem zero() const;
  QElem one() const;
  /// The class of t.
  QElem generator() const;

  friend bool operator==(const QuotientRing& a, const QuotientRing& b) {
    return a.modulus_ == b.modulus_ || *a.modulus_ == *b.modulus_;
  }

 private:
  std::shared_ptr<const UPoly> modulus_;
};

/// Element of k[t]/(h), held as its canonical remainder.
class QElem {
 public:
  QElem(QuotientRing ring, const UPoly& representative);

  const QuotientRing& ring() const noexcept { return ring_; }
  const UPoly& representative() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }

  QElem operator-() const;
  /// Throws NotInvertibleError carrying gcd(representative, modulus).
  QElem inv() const;
  QElem pow(std::uint64_t exponent) const;

  QElem& operator+=(const QElem& rhs);
  QElem& operator-=(const QElem& rhs);
  QElem& operator*=(const QElem& rhs);

  friend QElem operator+(QElem lhs, const QElem& rhs) { return lhs += rhs; }
  friend QElem operator-(QElem lhs, const QElem& rhs) { return lhs -= rhs; }
  friend QElem operator*(QElem lhs, const QElem& rhs) { return lhs *= rhs; }

  friend bool operator==(const QElem& a, const QElem& b);

  std::string to_string() const { return rep_.to_string(); }

 private:
  void require_same_ring(const QElem& other) const;

  QuotientRing ring_;
  UPoly rep_;
};

class NotInvertibleError : public Error {
 public:
  NotInvertibleError(UPoly common_factor, const std::string& what)
      : Error(Errc::NotInvertible, what), gcd_(std::move(common_factor)) {}

  /// The nontrivial common factor found; it divides the modulus.
  const UPoly& common_factor() const noexcept { return gcd_; }

 private:
  UPoly gcd_;
};

}  // namespace isod
