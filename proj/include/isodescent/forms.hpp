#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isodescent/error.hpp"
#include "isodescent/field.hpp"
#include "isodescent/quotient_ring.hpp"
#include "isodescent/upoly.hpp"

namespace isod {

/// Exponent vector (i_0, ..., i_N).
using Exponent = std::vector<unsigned>;
/// Monomials ordered with x0^d first.
using FormTerms = std::map<Exponent, Element, std::greater<Exponent>>;

/// Homogeneous form of degree d in x0..xN over a base field. Only nonzero
/// coefficients are stored and the zero form is rejected.
class Form {
 public:
  /// Throws DegreeMismatch, ArityMismatch, MixedFields or ZeroForm. Zero
  /// coefficients in `terms` are dropped.
  Form(Field field, unsigned degree, std::size_t num_vars, FormTerms terms);

  const Field& field() const noexcept { return field_; }
  unsigned degree() const noexcept { return degree_; }
  /// N + 1.
  std::size_t num_vars() const noexcept { return num_vars_; }
  const FormTerms& terms() const noexcept { return terms_; }

  Element coefficient(const Exponent& e) const;
  /// Coefficient of x_i^d.
  Element diagonal(std::size_t i) const;

  friend bool operator==(const Form&, const Form&) = default;

 private:
  Field field_;
  unsigned degree_;
  std::size_t num_vars_;
  FormTerms terms_;
};

/// Vector of N+1 polynomials over a shared field.
using PolyVector = std::vector<UPoly>;
/// Max component degree; absent for the zero vector.
std::optional<std::size_t> degree(const PolyVector& v);
std::string to_string(const PolyVector& v);
std::string to_string(std::span<const Element> v);

/// Evaluates the form over any commutative ring R containing k. `embed`
/// maps base-field coefficients into R and `one` is the unit of R.
template <class R, class Embed>
R evaluate_with(const Form& phi, std::span<const R> x, Embed&& embed, const R& one) {
  if (x.size() != phi.num_vars())
    throw Error(Errc::ArityMismatch, "form in " + std::to_string(phi.num_vars()) + " variables evaluated at " +
                                         std::to_string(x.size()) + " components");
  const unsigned d = phi.degree();
  // powers[j][e] = x_j^e, only for variables that occur
  std::vector<std::vector<R>> powers(x.size());
  for (const auto& [e, c] : phi.terms())
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] > 0 && powers[j].empty()) {
        powers[j].reserve(d + 1);
        powers[j].push_back(one);
        for (unsigned k = 1; k <= d; ++k) powers[j].push_back(powers[j].back() * x[j]);
      }
  R sum = one - one;
  for (const auto& [e, c] : phi.terms()) {
    R term = embed(c);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] > 0) term = term * powers[j][e[j]];
    sum = sum + term;
  }
  return sum;
}

Element evaluate(const Form& phi, std::span<const Element> x);
UPoly evaluate(const Form& phi, const PolyVector& x);
QElem evaluate(const Form& phi, std::span<const QElem> x);

bool is_diagonal_full(const Form& phi) noexcept;

/// Unit vector e_i for the smallest i whose x_i^d coefficient vanishes.
std::optional<std::vector<Element>> missing_diagonal_witness(const Form& phi);

/// Leading coefficients of the components attaining deg(s), zero elsewhere.
/// Throws ZeroVector.
std::vector<Element> leading_vector(const Form& phi, const PolyVector& s);

/// deg phi(s) == d * deg s. Throws PremiseViolated unless phi is
/// diagonal-full, ZeroVector on s = 0.
bool degree_law_check(const Form& phi, const PolyVector& s);

/// Parses text in the variables x0..x{num_vars-1}. Throws SyntaxError,
/// NotHomogeneous, DegreeMismatch, ZeroForm.
Form parse_form(std::string_view text, unsigned degree, std::size_t num_vars, const Field& field);

/// e.g. `x0^3 + 2*x1^3 + 4*x2^3`; parse_form reads it back.
std::string format_form(const Form& phi);

}  // namespace isod
