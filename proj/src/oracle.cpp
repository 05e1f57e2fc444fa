#include "isodescent/oracle.hpp"

#include <map>
#include <memory>

#include "isodescent/quotient_ring.hpp"

namespace isod {

namespace {

constexpr std::uint64_t kMaxTable = 1u << 22;

/// F_q with elements coded as integers sum c_i p^i, where c_i is the
/// coefficient of t^i. Multiplication goes through discrete log tables.
class GfTable {
 public:
  explicit GfTable(const UPoly& modulus) : p_(modulus.field().characteristic()), m_(*modulus.degree()) {
    q_ = 1;
    for (unsigned i = 0; i < m_; ++i) {
      if (q_ > kMaxTable / p_)
        throw Error(Errc::BudgetExceeded, "F_" + std::to_string(p_) + "^" + std::to_string(m_) +
                                              " is too large for the oracle tables");
      q_ *= p_;
    }
    for (unsigned i = 0; i < m_; ++i) low_.push_back(modulus.coeff(i).residue());
    build_logs();
  }

  std::uint64_t q() const noexcept { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    if (m_ == 1) return static_cast<std::uint32_t>((a + b) % p_);
    std::uint64_t out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= static_cast<std::uint32_t>(p_);
      b /= static_cast<std::uint32_t>(p_);
      scale *= p_;
    }
    return static_cast<std::uint32_t>(out);
  }

  std::uint32_t neg(std::uint32_t a) const noexcept {
    std::uint64_t out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
      out += ((p_ - a % p_) % p_) * scale;
      a /= static_cast<std::uint32_t>(p_);
      scale *= p_;
    }
    return static_cast<std::uint32_t>(out);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  UPoly to_poly(std::uint32_t code, const Field& fp) const {
    std::vector<Element> c;
    for (unsigned i = 0; i < m_; ++i) {
      c.push_back(Element::from_int(fp, static_cast<long long>(code % p_)));
      code /= static_cast<std::uint32_t>(p_);
    }
    return UPoly(fp, std::move(c));
  }

 private:
  std::vector<std::uint64_t> digits(std::uint64_t code) const {
    std::vector<std::uint64_t> d(m_);
    for (unsigned i = 0; i < m_; ++i, code /= p_) d[i] = code % p_;
    return d;
  }

  std::uint64_t code(const std::vector<std::uint64_t>& d) const {
    std::uint64_t out = 0;
    for (unsigned i = m_; i-- > 0;) out = out * p_ + d[i];
    return out;
  }

  /// Schoolbook product modulo the monic modulus, only used to build tables.
  std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b) const {
    auto x = digits(a), y = digits(b);
    std::vector<std::uint64_t> prod(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i)
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j] % p_) % p_;
    for (unsigned k = 2 * m_ - 1; k >= m_; --k) {
      std::uint64_t top = prod[k];
      if (top == 0) continue;
      prod[k] = 0;
      // t^m = -(low_0 + low_1 t + ...)
      for (unsigned i = 0; i < m_; ++i) prod[k - m_ + i] = (prod[k - m_ + i] + (p_ - low_[i]) % p_ * top) % p_;
    }
    prod.resize(m_);
    return code(prod);
  }

  void build_logs() {
    const std::uint64_t order = q_ - 1;
    log_.assign(q_, 0);
    exp_.assign(2 * order + 1, 0);
    if (order == 0) return;
    for (std::uint64_t g = 1; g < q_; ++g) {
      std::uint64_t x = 1, k = 0;
      do {
        exp_[k++] = static_cast<std::uint32_t>(x);
        x = slow_mul(x, g);
      } while (x != 1 && k < order);
      if (k != order || x != 1) continue;
      for (std::uint64_t i = 0; i < order; ++i) {
        log_[exp_[i]] = static_cast<std::uint32_t>(i);
        exp_[i + order] = exp_[i];
      }
      return;
    }
    throw Error(Errc::InvalidArgument, "no generator found; the modulus is not irreducible");
  }

  std::uint64_t p_;
  unsigned m_;
  std::uint64_t q_;
  std::vector<std::uint64_t> low_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

struct Gf {
  const GfTable* table;
  std::uint32_t code;

  friend Gf operator+(const Gf& a, const Gf& b) { return {a.table, a.table->add(a.code, b.code)}; }
  friend Gf operator-(const Gf& a, const Gf& b) { return {a.table, a.table->add(a.code, a.table->neg(b.code))}; }
  friend Gf operator*(const Gf& a, const Gf& b) { return {a.table, a.table->mul(a.code, b.code)}; }
};

std::uint64_t saturating_points(std::uint64_t q, std::size_t vars) {
  // 1 + q + ... + q^N, saturated
  unsigned __int128 total = 0, power = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    total += power;
    power *= q;
    if (total > ~std::uint64_t{0} || power > (static_cast<unsigned __int128>(1) << 64)) return ~std::uint64_t{0};
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace

ExtensionSpec::ExtensionSpec(UPoly modulus) : modulus_(std::move(modulus)) {
  if (!modulus_.field().is_prime_field())
    throw Error(Errc::InvalidArgument, "extension modulus must be over a prime field");
  if (modulus_.is_constant() || !modulus_.is_monic() || !is_irreducible(modulus_))
    throw Error(Errc::InvalidArgument, "extension modulus " + modulus_.to_string() + " is not monic irreducible");
}

ExtensionSpec::ExtensionSpec(std::uint64_t p, unsigned m, std::uint64_t seed)
    : ExtensionSpec(random_irreducible(p, m, seed)) {}

UPoly random_irreducible(std::uint64_t p, unsigned m, std::uint64_t seed) {
  return random_irreducible(Field::prime(p), m, seed);
}

IsotropyScan enumerate_isotropic(const Form& phi, const ExtensionSpec& ext, std::uint64_t budget) {
  const Field fp = ext.modulus().field();
  if (!(phi.field() == fp))
    throw Error(Errc::MixedFields, "form over " + phi.field().to_string() + " scanned over an extension of " +
                                       fp.to_string());
  const GfTable table(ext.modulus());
  const std::uint64_t q = table.q();
  const std::size_t vars = phi.num_vars();
  IsotropyScan out;
  out.points = saturating_points(q, vars);

  const Gf one{&table, 1};
  auto embed = [&](const Element& c) { return Gf{&table, static_cast<std::uint32_t>(c.residue())}; };
  std::vector<Gf> x(vars, Gf{&table, 0});
  for (std::size_t lead = 0; lead < vars; ++lead) {
    for (std::size_t j = 0; j < vars; ++j) x[j].code = 0;
    x[lead].code = 1;
    for (;;) {
      if (out.evaluations >= budget)
        throw Error(Errc::BudgetExceeded, "isotropy scan over F_" + std::to_string(ext.p()) + "^" +
                                              std::to_string(ext.m()) + " exceeded the budget of " +
                                              std::to_string(budget) + " evaluations (" +
                                              std::to_string(out.points) + " points)");
      ++out.evaluations;
      if (evaluate_with<Gf>(phi, std::span<const Gf>(x), embed, one).code == 0) {
        std::vector<UPoly> w;
        for (const auto& c : x) w.push_back(table.to_poly(c.code, fp));
        out.witness = std::move(w);
        return out;
      }
      // odometer over the coordinates after `lead`, nearest one fastest
      bool wrapped = true;
      for (std::size_t j = lead + 1; j < vars; ++j) {
        if (++x[j].code < q) {
          wrapped = false;
          break;
        }
        x[j].code = 0;
      }
      if (wrapped) break;
    }
  }
  return out;
}

IsotropyProfile min_isotropy_degree(const Form& phi, unsigned m_max, std::uint64_t seed, std::uint64_t budget) {
  if (!phi.field().is_prime_field()) throw Error(Errc::MixedFields, "isotropy profiles need a form over F_p");
  IsotropyProfile out;
  for (unsigned m = 1; m <= m_max; ++m) {
    ExtensionSpec ext(phi.field().characteristic(), m, seed);
    try {
      out.scans.push_back(enumerate_isotropic(phi, ext, budget));
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded) throw;
      throw Error(Errc::BudgetExceeded, std::string(e.what()) + "; last completed m = " + std::to_string(m - 1));
    }
    out.evaluations += out.scans.back().evaluations;
    if (out.scans.back().witness) {
      out.degree = m;
      break;
    }
  }
  return out;
}

Form norm_form(const UPoly& modulus) {
  const ExtensionSpec ext(modulus);
  const Field fp = modulus.field();
  const unsigned m = ext.m();
  QuotientRing ring(modulus);
  std::map<Exponent, QElem> product;
  product.emplace(Exponent(m, 0), ring.one());
  QElem conj = ring.generator();  // alpha^{p^j}
  for (unsigned j = 0; j < m; ++j) {
    std::map<Exponent, QElem> next;
    QElem power = ring.one();
    for (unsigned i = 0; i < m; ++i) {
      for (const auto& [e, c] : product) {
        Exponent f = e;
        ++f[i];
        QElem term = c * power;
        auto it = next.find(f);
        if (it == next.end())
          next.emplace(f, term);
        else
          it->second += term;
      }
      power *= conj;
    }
    product = std::move(next);
    conj = conj.pow(ext.p());
  }
  FormTerms terms;
  for (const auto& [e, c] : product) {
    if (!c.representative().is_constant())
      throw Error(Errc::VerificationFailed, "norm form coefficient " + c.to_string() + " is not in F_p");
    terms.emplace(e, c.representative().coeff(0));
  }
  return Form(fp, m, m, std::move(terms));
}

Form norm_form(std::uint64_t p, unsigned m, std::uint64_t seed) {
  if (m < 2) throw Error(Errc::InvalidArgument, "norm forms need m >= 2");
  return norm_form(random_irreducible(p, m, seed));
}

}  // namespace isod
