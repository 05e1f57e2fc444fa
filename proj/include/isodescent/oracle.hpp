#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isodescent/forms.hpp"
#include "isodescent/upoly.hpp"

namespace isod {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// F_{p^m} presented as F_p[t]/(modulus).
class ExtensionSpec {
 public:
  /// Throws InvalidArgument unless the modulus is monic irreducible over a
  /// prime field.
  explicit ExtensionSpec(UPoly modulus);
  /// Uses random_irreducible(p, m, seed).
  ExtensionSpec(std::uint64_t p, unsigned m, std::uint64_t seed = 0);

  std::uint64_t p() const noexcept { return modulus_.field().characteristic(); }
  unsigned m() const noexcept { return static_cast<unsigned>(*modulus_.degree()); }
  const UPoly& modulus() const noexcept { return modulus_; }

 private:
  UPoly modulus_;
};

/// Deterministic monic irreducible of degree m over F_p.
UPoly random_irreducible(std::uint64_t p, unsigned m, std::uint64_t seed);

struct IsotropyScan {
  /// First zero in scan order, coordinates as polynomials in t of degree < m.
  std::optional<std::vector<UPoly>> witness;
  std::uint64_t evaluations = 0;
  /// Projective points in the full space, (q^{N+1} - 1)/(q - 1).
  std::uint64_t points = 0;
};

/// Scans projective points over F_{p^m} with the first nonzero coordinate 1,
/// lead index ascending and the coordinate after the lead varying fastest. Throws
/// BudgetExceeded once more than `budget` evaluations would be needed,
/// MixedFields if the form is not over F_p.
IsotropyScan enumerate_isotropic(const Form& phi, const ExtensionSpec& ext, std::uint64_t budget = kDefaultBudget);

struct IsotropyProfile {
  std::optional<unsigned> degree;
  std::vector<IsotropyScan> scans;  // one per m tried
  std::uint64_t evaluations = 0;
};

/// Smallest m <= m_max with a zero over F_{p^m}. The budget applies per m;
/// BudgetExceeded names the last completed m.
IsotropyProfile min_isotropy_degree(const Form& phi, unsigned m_max, std::uint64_t seed = 0,
                                    std::uint64_t budget = kDefaultBudget);

/// Norm form of F_p[t]/(modulus) over F_p in the basis 1, t, ..., t^{m-1}.
Form norm_form(const UPoly& modulus);
/// Norm form for random_irreducible(p, m, seed).
Form norm_form(std::uint64_t p, unsigned m, std::uint64_t seed = 0);

}  // namespace isod
