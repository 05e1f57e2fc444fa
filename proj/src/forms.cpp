#include "isodescent/forms.hpp"

#include <numeric>

#include "isodescent/expr.hpp"

namespace isod {

Form::Form(Field field, unsigned degree, std::size_t num_vars, FormTerms terms)
    : field_(field), degree_(degree), num_vars_(num_vars) {
  if (degree == 0) throw Error(Errc::InvalidArgument, "form degree must be positive");
  if (num_vars == 0) throw Error(Errc::InvalidArgument, "form needs at least one variable");
  for (auto& [e, c] : terms) {
    if (e.size() != num_vars)
      throw Error(Errc::ArityMismatch, "exponent vector of length " + std::to_string(e.size()) + " in a form in " +
                                           std::to_string(num_vars) + " variables");
    if (std::accumulate(e.begin(), e.end(), 0u) != degree)
      throw Error(Errc::DegreeMismatch, "monomial of wrong degree in a degree-" + std::to_string(degree) + " form");
    if (!(c.field() == field)) throw Error(Errc::MixedFields, "coefficient outside " + field.to_string());
    if (!c.is_zero()) terms_.emplace(e, c);
  }
  if (terms_.empty()) throw Error(Errc::ZeroForm, "the zero form is not allowed");
}

Element Form::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Element::zero(field_) : it->second;
}

Element Form::diagonal(std::size_t i) const {
  Exponent e(num_vars_, 0);
  e.at(i) = degree_;
  return coefficient(e);
}

std::optional<std::size_t> degree(const PolyVector& v) {
  std::optional<std::size_t> out;
  for (const auto& c : v)
    if (auto d = c.degree(); d && (!out || *d > *out)) out = d;
  return out;
}

std::string to_string(const PolyVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

std::string to_string(std::span<const Element> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

Element evaluate(const Form& phi, std::span<const Element> x) {
  for (const auto& xi : x)
    if (!(xi.field() == phi.field()))
      throw Error(Errc::MixedFields, "evaluating a form over " + phi.field().to_string() + " at a point over " +
                                         xi.field().to_string());
  return evaluate_with<Element>(phi, x, [](const Element& c) { return c; }, Element::one(phi.field()));
}

UPoly evaluate(const Form& phi, const PolyVector& x) {
  for (const auto& xi : x)
    if (!(xi.field() == phi.field()))
      throw Error(Errc::MixedFields, "evaluating a form over " + phi.field().to_string() + " at a vector over " +
                                         xi.field().to_string() + "[t]");
  return evaluate_with<UPoly>(phi, std::span<const UPoly>(x), [](const Element& c) { return UPoly::constant(c); },
                              UPoly::constant(Element::one(phi.field())));
}

QElem evaluate(const Form& phi, std::span<const QElem> x) {
  if (x.empty()) throw Error(Errc::ArityMismatch, "empty point");
  const QuotientRing& ring = x.front().ring();
  if (!(ring.field() == phi.field()))
    throw Error(Errc::MixedFields, "evaluating a form over " + phi.field().to_string() + " in a quotient of " +
                                       ring.field().to_string() + "[t]");
  return evaluate_with<QElem>(phi, x, [&](const Element& c) { return ring.embed(c); }, ring.one());
}

bool is_diagonal_full(const Form& phi) noexcept {
  for (std::size_t i = 0; i < phi.num_vars(); ++i)
    if (phi.diagonal(i).is_zero()) return false;
  return true;
}

std::optional<std::vector<Element>> missing_diagonal_witness(const Form& phi) {
  for (std::size_t i = 0; i < phi.num_vars(); ++i)
    if (phi.diagonal(i).is_zero()) {
      std::vector<Element> w(phi.num_vars(), Element::zero(phi.field()));
      w[i] = Element::one(phi.field());
      return w;
    }
  return std::nullopt;
}

std::vector<Element> leading_vector(const Form& phi, const PolyVector& s) {
  if (s.size() != phi.num_vars())
    throw Error(Errc::ArityMismatch, "vector of length " + std::to_string(s.size()) + " for a form in " +
                                         std::to_string(phi.num_vars()) + " variables");
  auto top = degree(s);
  if (!top) throw Error(Errc::ZeroVector, "leading vector of the zero vector");
  std::vector<Element> out;
  out.reserve(s.size());
  for (const auto& c : s) out.push_back(c.degree() == top ? c.leading() : Element::zero(phi.field()));
  return out;
}

bool degree_law_check(const Form& phi, const PolyVector& s) {
  if (!is_diagonal_full(phi)) throw Error(Errc::PremiseViolated, "degree law needs a diagonal-full form");
  auto ds = degree(s);
  if (!ds) throw Error(Errc::ZeroVector, "degree law for the zero vector");
  UPoly value = evaluate(phi, s);
  return value.degree() == phi.degree() * *ds;
}

Form parse_form(std::string_view text, unsigned degree, std::size_t num_vars, const Field& field) {
  auto resolve = [num_vars](std::string_view name) -> std::optional<std::size_t> {
    if (name.size() < 2 || name[0] != 'x') return std::nullopt;
    std::size_t i = 0;
    for (char ch : name.substr(1)) {
      if (ch < '0' || ch > '9') return std::nullopt;
      i = i * 10 + static_cast<std::size_t>(ch - '0');
      if (i >= num_vars) return std::nullopt;
    }
    if (name.size() > 2 && name[1] == '0') return std::nullopt;
    return i;
  };
  expr::SparsePoly sparse = expr::parse(text, field, num_vars, resolve);
  if (sparse.empty()) throw Error(Errc::ZeroForm, "form '" + std::string(text) + "' cancels to zero");
  std::optional<unsigned> seen;
  for (const auto& [e, c] : sparse) {
    unsigned total = std::accumulate(e.begin(), e.end(), 0u);
    if (seen && *seen != total)
      throw Error(Errc::NotHomogeneous, "form '" + std::string(text) + "' mixes degrees " + std::to_string(*seen) +
                                            " and " + std::to_string(total));
    seen = total;
  }
  if (*seen != degree)
    throw Error(Errc::DegreeMismatch,
                "form has degree " + std::to_string(*seen) + ", expected " + std::to_string(degree));
  FormTerms terms(sparse.begin(), sparse.end());
  return Form(field, degree, num_vars, std::move(terms));
}

std::string format_form(const Form& phi) {
  const Element one = Element::one(phi.field());
  std::string out;
  for (const auto& [e, c] : phi.terms()) {
    Element mag = c;
    bool negative = phi.field().is_rationals() && sgn(c.rational()) < 0;
    if (negative) mag = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(j);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mag == one)
      out += mono;
    else
      out += mag.to_string() + "*" + mono;
  }
  return out;
}

}  // namespace isod
