#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "isodescent/forms.hpp"
#include "isodescent/quotient_ring.hpp"
#include "isodescent/upoly.hpp"

namespace isod {

/// A form phi, the extension k[t]/(f) and a point v with phi(v) = 0 mod f.
class DescentInput {
 public:
  /// Throws PremiseViolated naming the failed hypothesis: field, arity,
  /// f-monic, f-degree, f-irreducible, coprime, v-nonzero or v-isotropic.
  DescentInput(Form form, UPoly f, PolyVector v);

  const Form& form() const noexcept { return form_; }
  const UPoly& f() const noexcept { return f_; }
  const PolyVector& v() const noexcept { return v_; }
  unsigned d() const noexcept { return form_.degree(); }
  unsigned n() const noexcept { return static_cast<unsigned>(*f_.degree()); }

 private:
  Form form_;
  UPoly f_;
  PolyVector v_;
};

/// Isotropic vector over L = k[t]/(p).
struct ExtensionWitness {
  UPoly p;
  unsigned degree;    // deg p
  unsigned exponent;  // multiplicity of p in g
  std::vector<QElem> w;
  bool verified = false;
};

enum class KPointSource { MissingDiagonal, PhiSZeroSpecialized, LeadingCancellation, ConstantS };
const char* source_name(KPointSource s) noexcept;

struct KPoint {
  std::vector<Element> x;
  KPointSource source;
};

struct Candidates {
  PolyVector s;
  UPoly g;
  Factorization factorization;
  std::vector<ExtensionWitness> witnesses;  // ascending degree, exponent, then lex
};

enum class DiagnosticReason { BadPartitionsNonempty, NoAdmissibleFactor, DegreeNotInS };
const char* reason_name(DiagnosticReason r) noexcept;

struct Diagnostic {
  DiagnosticReason reason;
  std::string message;
  std::optional<UPoly> g;
  std::optional<Factorization> factorization;
};

using DescentOutcome = std::variant<KPoint, Candidates, Diagnostic>;

/// v mod f componentwise. Throws PointDivisibleByF when every component vanishes.
PolyVector reduce_point(const PolyVector& v, const UPoly& f);

/// phi(s) / f. Throws PhiSZero, DegreeLawViolated, NotDivisible.
UPoly compute_g(const Form& phi, const PolyVector& s, const UPoly& f);

struct SelectedFactor {
  UPoly p;
  unsigned exponent;
};
/// Factors with gcd(deg, d) = 1, gcd(exponent, d) = 1 and n not dividing deg.
std::vector<SelectedFactor> select_factors(const Factorization& g, unsigned d, unsigned n);

/// Strips the common power of p from s and reduces mod p. Throws
/// VerificationFailed if the result is not isotropic.
ExtensionWitness extract_witness(const Form& phi, const PolyVector& s, const UPoly& p);

/// Primitive part of s evaluated at t = 0. Throws ZeroVector.
std::vector<Element> specialize_witness(const Form& phi, const PolyVector& s);

DescentOutcome descend(const DescentInput& input);

struct DescentPolicy {
  unsigned max_rounds = 8;
};

struct DescentRound {
  UPoly f;
  PolyVector v;
  DescentOutcome outcome;
};

struct DescentChain {
  std::vector<DescentRound> rounds;
  /// Degree of the final field: 1 for a k-point, absent after a diagnostic.
  std::optional<unsigned> final_degree;
  /// Set when the chain reached k itself.
  std::optional<std::vector<Element>> k_point;
};

/// Degree n' at which another round is certain to shrink the field: n' >= 2,
/// gcd(n', d) = 1, no bad partitions of n'd - n' - d and n'd - n' - d < n'.
bool continues_descent(unsigned degree, unsigned d);

/// Repeats descend on the smallest candidate while continues_descent holds.
/// Throws MaxRoundsExceeded.
DescentChain iterate_descent(const DescentInput& input, const DescentPolicy& policy = {});

/// w != 0 and phi(w) = 0 in k[t]/(p). Throws ReducibleModulus.
bool verify_witness(const Form& phi, const UPoly& p, const std::vector<QElem>& w);

struct ForgedInstance {
  Form form;
  PolyVector s;
};

inline constexpr unsigned kForgeRetryCap = 64;

/// Random form of degree d in num_vars variables with f | phi(s), diagonal
/// full and phi(s) != 0. Throws PremiseViolated, UnderdeterminedDegenerate,
/// NoDiagonalFullSolution.
ForgedInstance forge_instance(unsigned d, std::size_t num_vars, const UPoly& f, const PolyVector& s,
                              std::uint64_t seed);
/// Same with a random s of degree deg f - 1.
ForgedInstance forge_instance(unsigned d, std::size_t num_vars, const UPoly& f, std::uint64_t seed);

}  // namespace isod
