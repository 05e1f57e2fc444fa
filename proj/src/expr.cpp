#include "isodescent/expr.hpp"

#include <cctype>
#include <string>

#include "isodescent/error.hpp"

namespace isod::expr {

namespace {

constexpr unsigned kMaxExponent = 4096;

void add_into(SparsePoly& acc, const Monomial& m, const Element& c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  } else if (c.is_zero()) {
    acc.erase(it);
  }
}

SparsePoly add(SparsePoly a, const SparsePoly& b, bool negate) {
  for (const auto& [m, c] : b) add_into(a, m, negate ? -c : c);
  return a;
}

SparsePoly mul(const SparsePoly& a, const SparsePoly& b, std::size_t num_vars) {
  SparsePoly out;
  Monomial m(num_vars);
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      for (std::size_t i = 0; i < num_vars; ++i) m[i] = ma[i] + mb[i];
      add_into(out, m, ca * cb);
    }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Field& field, std::size_t num_vars, const Resolver& resolve)
      : text_(text), field_(field), num_vars_(num_vars), resolve_(resolve) {}

  SparsePoly run() {
    skip_ws();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "empty expression");
    auto result = expression();
    skip_ws();
    if (pos_ != text_.size())
      throw SyntaxError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
    return result;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SparsePoly constant(const Element& c) const {
    SparsePoly p;
    if (!c.is_zero()) p.emplace(Monomial(num_vars_, 0), c);
    return p;
  }

  SparsePoly expression() {
    SparsePoly acc;
    bool negate = false;
    skip_ws();
    if (accept('-')) negate = true;
    else accept('+');
    acc = add(std::move(acc), term(), negate);
    for (;;) {
      if (accept('+')) acc = add(std::move(acc), term(), false);
      else if (accept('-')) acc = add(std::move(acc), term(), true);
      else return acc;
    }
  }

  SparsePoly term() {
    SparsePoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = mul(acc, unary(), num_vars_);
      } else if (accept('/')) {
        skip_ws();
        std::size_t at = pos_;
        SparsePoly divisor = unary();
        if (divisor.empty()) throw Error(Errc::DivisionByZero, "division by zero at position " + std::to_string(at));
        if (divisor.size() != 1 || divisor.begin()->first != Monomial(num_vars_, 0))
          throw SyntaxError(at, "division by a non-constant");
        acc = mul(acc, constant(divisor.begin()->second.inv()), num_vars_);
      } else {
        return acc;
      }
    }
  }

  SparsePoly unary() {
    if (accept('-')) {
      SparsePoly p = unary();
      for (auto& [m, c] : p) c = -c;
      return p;
    }
    if (accept('+')) return unary();
    return power();
  }

  SparsePoly power() {
    SparsePoly base = atom();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t at = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw SyntaxError(at, "expected a nonnegative integer exponent");
    unsigned long long e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (e > kMaxExponent) throw SyntaxError(at, "exponent too large");
      ++pos_;
    }
    SparsePoly result = constant(Element::one(field_));
    for (unsigned long long i = 0; i < e; ++i) result = mul(result, base, num_vars_);
    return result;
  }

  SparsePoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SparsePoly inner = expression();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class value(std::string(text_.substr(start, pos_ - start)), 10);
      return constant(Element::from_mpz(field_, value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto index = resolve_(name);
      if (!index || *index >= num_vars_)
        throw SyntaxError(start, "unknown variable '" + std::string(name) + "'");
      Monomial m(num_vars_, 0);
      m[*index] = 1;
      SparsePoly p;
      p.emplace(std::move(m), Element::one(field_));
      return p;
    }
    throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  Field field_;
  std::size_t num_vars_;
  const Resolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse(std::string_view text, const Field& field, std::size_t num_vars,
                 const Resolver& resolve) {
  try {
    return Parser(text, field, num_vars, resolve).run();
  } catch (const SyntaxError&) {
    throw;
  } catch (const Error& e) {
    // e.g. a literal denominator vanishing in GF(p)
    throw Error(e.code(), std::string(e.what()) + " while parsing '" + std::string(text) + "'");
  }
}

}  // namespace isod::expr
