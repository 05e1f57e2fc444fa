#include "isodescent/descent.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "isodescent/partitions.hpp"

namespace isod {

namespace {

[[noreturn]] void premise(const char* which, const std::string& detail) {
  throw Error(Errc::PremiseViolated, std::string("premise '") + which + "' violated: " + detail);
}

bool is_zero_vector(const PolyVector& v) {
  return std::all_of(v.begin(), v.end(), [](const UPoly& c) { return c.is_zero(); });
}

KPoint checked_kpoint(const Form& phi, std::vector<Element> x, KPointSource source) {
  bool nonzero = std::any_of(x.begin(), x.end(), [](const Element& c) { return !c.is_zero(); });
  if (!nonzero || !evaluate(phi, x).is_zero())
    throw Error(Errc::VerificationFailed,
                std::string("k-point from ") + source_name(source) + " failed verification: " + to_string(x));
  return KPoint{std::move(x), source};
}

std::string bad_partition_message(const DegreePair& pair) {
  std::string msg = "bad partitions of nd - n - d = " + std::to_string(pair.bound()) + " exist for d=" +
                    std::to_string(pair.d()) + ", n=" + std::to_string(pair.n());
  if (pair.bound() <= 2000) msg += ", e.g. " + smallest_bad_partition(pair.bound(), pair)->to_string();
  return msg;
}

}  // namespace

const char* source_name(KPointSource s) noexcept {
  switch (s) {
    case KPointSource::MissingDiagonal: return "missing-diagonal";
    case KPointSource::PhiSZeroSpecialized: return "phi-s-zero-specialized";
    case KPointSource::LeadingCancellation: return "leading-cancellation";
    case KPointSource::ConstantS: return "constant-s";
  }
  return "unknown";
}

const char* reason_name(DiagnosticReason r) noexcept {
  switch (r) {
    case DiagnosticReason::BadPartitionsNonempty: return "bad-partitions-nonempty";
    case DiagnosticReason::NoAdmissibleFactor: return "no-admissible-factor";
    case DiagnosticReason::DegreeNotInS: return "degree-not-in-S";
  }
  return "unknown";
}

DescentInput::DescentInput(Form form, UPoly f, PolyVector v)
    : form_(std::move(form)), f_(std::move(f)), v_(std::move(v)) {
  const Field& k = form_.field();
  if (!(f_.field() == k)) premise("field", "f is over " + f_.field().to_string() + ", the form over " + k.to_string());
  for (const auto& c : v_)
    if (!(c.field() == k)) premise("field", "v has a component over " + c.field().to_string());
  if (v_.size() != form_.num_vars())
    premise("arity", "v has " + std::to_string(v_.size()) + " components, the form " +
                         std::to_string(form_.num_vars()) + " variables");
  if (f_.is_zero() || !f_.is_monic()) premise("f-monic", "f = " + f_.to_string() + " is not monic");
  if (*f_.degree() < 2) premise("f-degree", "deg f = " + std::to_string(*f_.degree()) + " < 2");
  if (!is_irreducible(f_)) premise("f-irreducible", "f = " + f_.to_string() + " is reducible");
  if (form_.degree() < 2) premise("coprime", "form degree must be at least 2");
  if (std::gcd(form_.degree(), n()) != 1)
    premise("coprime", "gcd(n, d) = gcd(" + std::to_string(n()) + ", " + std::to_string(d()) + ") != 1");
  if (n() > 1000 || d() > 1000) premise("coprime", "degrees above 1000 are not supported");
  bool divisible = std::all_of(v_.begin(), v_.end(), [&](const UPoly& c) { return (c % f_).is_zero(); });
  if (divisible) premise("v-nonzero", "v = 0 mod f");
  if (!(evaluate(form_, v_) % f_).is_zero()) premise("v-isotropic", "phi(v) is not divisible by f");
}

PolyVector reduce_point(const PolyVector& v, const UPoly& f) {
  if (f.is_constant() || !f.is_monic())
    throw Error(Errc::InvalidArgument, "reduction modulus must be monic of degree >= 1");
  PolyVector s;
  s.reserve(v.size());
  for (const auto& c : v) s.push_back(c % f);
  if (is_zero_vector(s)) throw Error(Errc::PointDivisibleByF, "every component of v is divisible by f");
  return s;
}

UPoly compute_g(const Form& phi, const PolyVector& s, const UPoly& f) {
  UPoly value = evaluate(phi, s);
  if (value.is_zero()) throw Error(Errc::PhiSZero, "phi(s) vanishes identically");
  auto ds = degree(s);
  if (value.degree() != phi.degree() * *ds)
    throw Error(Errc::DegreeLawViolated, "deg phi(s) = " + std::to_string(*value.degree()) + " < d deg s = " +
                                             std::to_string(phi.degree() * *ds));
  auto [g, r] = divmod(value, f);
  if (!r.is_zero()) throw Error(Errc::NotDivisible, "f does not divide phi(s)");
  return g;
}

std::vector<SelectedFactor> select_factors(const Factorization& g, unsigned d, unsigned n) {
  std::vector<SelectedFactor> out;
  for (const auto& [p, e] : g.factors) {
    const unsigned u = static_cast<unsigned>(*p.degree());
    if (std::gcd(u, d) == 1 && std::gcd(e, d) == 1 && u % n != 0) out.push_back({p, e});
  }
  std::stable_sort(out.begin(), out.end(), [](const SelectedFactor& a, const SelectedFactor& b) {
    if (a.p.degree() != b.p.degree()) return *a.p.degree() < *b.p.degree();
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    return canonical_less(a.p, b.p);
  });
  return out;
}

ExtensionWitness extract_witness(const Form& phi, const PolyVector& s, const UPoly& p) {
  UPoly value = evaluate(phi, s);
  if (value.is_zero()) throw Error(Errc::PhiSZero, "phi(s) vanishes identically");
  const unsigned lambda = valuation(value, p);
  unsigned kappa = ~0u;
  for (const auto& c : s)
    if (!c.is_zero()) kappa = std::min(kappa, valuation(c, p));
  if (kappa == ~0u) throw Error(Errc::ZeroVector, "witness from the zero vector");
  const UPoly strip = pow(p, kappa);
  QuotientRing ring(p);
  ExtensionWitness out{p, static_cast<unsigned>(*p.degree()), lambda, {}, false};
  for (const auto& c : s) out.w.push_back(ring.element(c / strip));
  out.verified = verify_witness(phi, p, out.w);
  if (!out.verified)
    throw Error(Errc::VerificationFailed, "witness modulo " + p.to_string() + " is not isotropic");
  return out;
}

std::vector<Element> specialize_witness(const Form& phi, const PolyVector& s) {
  if (is_zero_vector(s)) throw Error(Errc::ZeroVector, "specializing the zero vector");
  UPoly content(phi.field());
  for (const auto& c : s) content = content.is_zero() && c.is_zero() ? content : gcd(content, c);
  std::vector<Element> x;
  for (const auto& c : s) x.push_back((c / content)(Element::zero(phi.field())));
  return checked_kpoint(phi, std::move(x), KPointSource::PhiSZeroSpecialized).x;
}

DescentOutcome descend(const DescentInput& input) {
  const Form& phi = input.form();
  const unsigned d = input.d(), n = input.n();
  const DegreePair pair(d, n);
  if (!bad_partitions_empty(pair.bound(), pair))
    return Diagnostic{DiagnosticReason::BadPartitionsNonempty, bad_partition_message(pair), std::nullopt,
                      std::nullopt};

  if (auto w = missing_diagonal_witness(phi)) return checked_kpoint(phi, *w, KPointSource::MissingDiagonal);

  PolyVector s = reduce_point(input.v(), input.f());
  UPoly value = evaluate(phi, s);
  const std::size_t ds = *degree(s);
  if (ds == 0) {
    std::vector<Element> x;
    for (const auto& c : s) x.push_back(c.coeff(0));
    return checked_kpoint(phi, std::move(x), KPointSource::ConstantS);
  }
  if (value.is_zero()) return KPoint{specialize_witness(phi, s), KPointSource::PhiSZeroSpecialized};
  if (value.degree() != d * ds) return checked_kpoint(phi, leading_vector(phi, s), KPointSource::LeadingCancellation);

  UPoly g = compute_g(phi, s, input.f());
  Factorization fac = factor(g);
  const auto sset = s_set(pair);
  if (!std::binary_search(sset.begin(), sset.end(), static_cast<unsigned>(*g.degree())))
    return Diagnostic{DiagnosticReason::DegreeNotInS,
                      "deg g = " + std::to_string(*g.degree()) + " is not in S for d=" + std::to_string(d) +
                          ", n=" + std::to_string(n),
                      g, fac};

  auto selected = select_factors(fac, d, n);
  if (selected.empty())
    return Diagnostic{DiagnosticReason::NoAdmissibleFactor, "no factor of g = " + g.to_string() + " is admissible", g,
                      fac};

  const auto allowed = degree_set(pair);
  Candidates out{s, g, fac, {}};
  for (const auto& [p, e] : selected) {
    ExtensionWitness w = extract_witness(phi, s, p);
    if (w.exponent != e || !std::binary_search(allowed.begin(), allowed.end(), w.degree))
      throw Error(Errc::VerificationFailed, "candidate " + p.to_string() + " breaks the degree guarantee");
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

bool continues_descent(unsigned degree, unsigned d) {
  if (degree < 2 || d < 2 || std::gcd(degree, d) != 1 || degree > 1000 || d > 1000) return false;
  const DegreePair pair(d, degree);
  return pair.bound() < degree && bad_partitions_empty(pair.bound(), pair);
}

DescentChain iterate_descent(const DescentInput& input, const DescentPolicy& policy) {
  DescentChain chain;
  DescentInput current = input;
  for (;;) {
    if (chain.rounds.size() >= policy.max_rounds)
      throw Error(Errc::MaxRoundsExceeded, "descent did not settle within " + std::to_string(policy.max_rounds) +
                                               " rounds");
    DescentOutcome outcome = descend(current);
    chain.rounds.push_back({current.f(), current.v(), outcome});
    if (auto* kp = std::get_if<KPoint>(&outcome)) {
      chain.final_degree = 1;
      chain.k_point = kp->x;
      return chain;
    }
    if (std::holds_alternative<Diagnostic>(outcome)) return chain;
    const ExtensionWitness& best = std::get<Candidates>(outcome).witnesses.front();
    if (best.degree == 1) {
      std::vector<Element> x;
      for (const auto& c : best.w) x.push_back(c.representative().coeff(0));
      chain.final_degree = 1;
      chain.k_point = checked_kpoint(input.form(), std::move(x), KPointSource::ConstantS).x;
      return chain;
    }
    if (!continues_descent(best.degree, current.d())) {
      chain.final_degree = best.degree;
      return chain;
    }
    PolyVector next;
    for (const auto& c : best.w) next.push_back(c.representative());
    current = DescentInput(input.form(), best.p, std::move(next));
  }
}

bool verify_witness(const Form& phi, const UPoly& p, const std::vector<QElem>& w) {
  if (p.is_constant() || !p.is_monic() || !is_irreducible(p))
    throw Error(Errc::ReducibleModulus, "witness modulus " + p.to_string() + " is not monic irreducible");
  if (w.size() != phi.num_vars())
    throw Error(Errc::ArityMismatch, "witness has " + std::to_string(w.size()) + " components");
  for (const auto& c : w)
    if (!(c.ring().modulus() == p)) throw Error(Errc::MixedFields, "witness component lives modulo another polynomial");
  if (std::all_of(w.begin(), w.end(), [](const QElem& c) { return c.is_zero(); })) return false;
  return evaluate(phi, std::span<const QElem>(w)).is_zero();
}

namespace {

std::vector<Exponent> monomials(unsigned d, std::size_t vars) {
  std::vector<Exponent> out;
  Exponent e(vars, 0);
  auto rec = [&](auto& self, std::size_t j, unsigned left) -> void {
    if (j + 1 == vars) {
      e[j] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[j] = k;
      self(self, j + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Basis of the nullspace of a (rows x cols) matrix via reduced row echelon form.
std::vector<std::vector<Element>> nullspace(std::vector<std::vector<Element>> a, std::size_t cols, const Field& k) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t pick = row;
    while (pick < a.size() && a[pick][col].is_zero()) ++pick;
    if (pick == a.size()) continue;
    std::swap(a[pick], a[row]);
    Element inv = a[row][col].inv();
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Element factor = a[r][col];
      for (std::size_t c = 0; c < cols; ++c) a[r][c] -= factor * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<std::vector<Element>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Element> vec(cols, Element::zero(k));
    vec[free] = Element::one(k);
    for (std::size_t r = 0; r < pivots.size(); ++r) vec[pivots[r]] = -a[r][free];
    basis.push_back(std::move(vec));
  }
  return basis;
}

/// Scales a rational vector to a primitive integer vector.
void make_primitive(std::vector<Element>& c) {
  mpz_class lcm = 1, content = 0;
  for (const auto& x : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.rational().get_den_mpz_t());
  for (auto& x : c) {
    x *= Element::from_mpz(x.field(), lcm);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.rational().get_num_mpz_t());
  }
  if (content == 0) return;
  Element inv = Element::from_mpz(c.front().field(), content).inv();
  for (auto& x : c) x *= inv;
}

void check_forge_premises(unsigned d, std::size_t num_vars, const UPoly& f) {
  if (d < 2) premise("coprime", "form degree must be at least 2");
  if (num_vars == 0) premise("arity", "need at least one variable");
  if (f.is_zero() || !f.is_monic()) premise("f-monic", "f = " + f.to_string() + " is not monic");
  if (*f.degree() < 2) premise("f-degree", "deg f < 2");
  if (!is_irreducible(f)) premise("f-irreducible", "f = " + f.to_string() + " is reducible");
  if (std::gcd(static_cast<std::size_t>(d), *f.degree()) != 1) premise("coprime", "gcd(n, d) != 1");
}

}  // namespace

ForgedInstance forge_instance(unsigned d, std::size_t num_vars, const UPoly& f, const PolyVector& s,
                              std::uint64_t seed) {
  check_forge_premises(d, num_vars, f);
  const Field& k = f.field();
  const std::size_t n = *f.degree();
  if (s.size() != num_vars) premise("arity", "s has " + std::to_string(s.size()) + " components");
  for (const auto& c : s) {
    if (!(c.field() == k)) premise("field", "s is over another field than f");
    if (c.degree() && *c.degree() >= n) premise("s-degree", "deg s must be below deg f");
  }
  if (is_zero_vector(s)) premise("v-nonzero", "s = 0");

  // column for monomial e: s^e mod f, as n coefficients
  const auto monos = monomials(d, num_vars);
  std::vector<std::vector<UPoly>> powers(num_vars);
  for (std::size_t j = 0; j < num_vars; ++j) {
    powers[j].push_back(UPoly::constant(Element::one(k)));
    for (unsigned e = 1; e <= d; ++e) powers[j].push_back((powers[j].back() * s[j]) % f);
  }
  std::vector<std::vector<Element>> system(n, std::vector<Element>(monos.size(), Element::zero(k)));
  for (std::size_t m = 0; m < monos.size(); ++m) {
    UPoly col = UPoly::constant(Element::one(k));
    for (std::size_t j = 0; j < num_vars; ++j)
      if (monos[m][j] > 0) col = (col * powers[j][monos[m][j]]) % f;
    for (std::size_t r = 0; r < n; ++r) system[r][m] = col.coeff(r);
  }
  const auto basis = nullspace(std::move(system), monos.size(), k);
  if (basis.empty())
    throw Error(Errc::UnderdeterminedDegenerate, "only the zero form satisfies f | phi(s) for d=" + std::to_string(d) +
                                                     " in " + std::to_string(num_vars) + " variables");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> small(-9, 9);
  std::uniform_int_distribution<std::uint64_t> residue(0, k.is_prime_field() ? k.characteristic() - 1 : 0);
  for (unsigned attempt = 0; attempt < kForgeRetryCap; ++attempt) {
    std::vector<Element> coeffs(monos.size(), Element::zero(k));
    for (const auto& b : basis) {
      Element lambda = k.is_rationals() ? Element::from_int(k, small(rng))
                                        : Element::from_int(k, static_cast<long long>(residue(rng)));
      for (std::size_t m = 0; m < monos.size(); ++m) coeffs[m] += lambda * b[m];
    }
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Element& c) { return c.is_zero(); })) continue;
    if (k.is_rationals()) make_primitive(coeffs);
    FormTerms terms;
    for (std::size_t m = 0; m < monos.size(); ++m) terms.emplace(monos[m], coeffs[m]);
    Form phi(k, d, num_vars, std::move(terms));
    if (!is_diagonal_full(phi) || evaluate(phi, s).is_zero()) continue;
    return ForgedInstance{std::move(phi), s};
  }
  throw Error(Errc::NoDiagonalFullSolution,
              "no diagonal-full solution with phi(s) != 0 after " + std::to_string(kForgeRetryCap) + " attempts");
}

ForgedInstance forge_instance(unsigned d, std::size_t num_vars, const UPoly& f, std::uint64_t seed) {
  check_forge_premises(d, num_vars, f);
  const Field& k = f.field();
  const std::size_t n = *f.degree();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto draw = [&](bool nonzero) {
    if (k.is_rationals()) {
      std::uniform_int_distribution<long long> dist(-9, 9);
      long long x;
      do x = dist(rng);
      while (nonzero && x == 0);
      return Element::from_int(k, x);
    }
    std::uniform_int_distribution<std::uint64_t> dist(nonzero ? 1 : 0, k.characteristic() - 1);
    return Element::from_int(k, static_cast<long long>(dist(rng)));
  };
  // a degenerate s (e.g. proportional constant components) can force a
  // diagonal coefficient to vanish, so redraw s a few times
  std::optional<Error> last;
  for (unsigned attempt = 0; attempt < 8; ++attempt) {
    PolyVector s;
    for (std::size_t j = 0; j < num_vars; ++j) {
      std::vector<Element> c;
      const std::size_t len = j == 0 ? n : 2 + rng() % (n - 1);
      for (std::size_t i = 0; i < len; ++i) c.push_back(draw(i + 1 == len));
      s.emplace_back(k, std::move(c));
    }
    try {
      return forge_instance(d, num_vars, f, s, seed + attempt);
    } catch (const Error& e) {
      if (e.code() != Errc::NoDiagonalFullSolution && e.code() != Errc::UnderdeterminedDegenerate) throw;
      last = e;
    }
  }
  throw *last;
}

}  // namespace isod
