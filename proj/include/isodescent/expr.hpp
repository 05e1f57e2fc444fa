#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "isodescent/field.hpp"

namespace isod::expr {

using Monomial = std::vector<unsigned>;
/// Sparse multivariate polynomial with no zero coefficients.
using SparsePoly = std::map<Monomial, Element>;

/// Maps an identifier to a variable index, or nothing if unknown.
using Resolver = std::function<std::optional<std::size_t>(std::string_view)>;

/// Parses `+ - * / ^` expressions with parentheses, integer literals and the
/// variables known to the resolver. Division is only by nonzero constants and
/// exponents are nonnegative integer literals. Throws SyntaxError.
SparsePoly parse(std::string_view text, const Field& field, std::size_t num_vars,
                 const Resolver& resolve);

}  // namespace isod::expr
