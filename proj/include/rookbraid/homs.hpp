#pragma once

#include <array>
#include <string>

#include "rookbraid/braid.hpp"
#include "rookbraid/element.hpp"
#include "rookbraid/report.hpp"

namespace rookbraid {

/// Selects one of the five homomorphism families B_n -> (CP_n)^*.
/// `rescaled` multiplies family 2 by 1/sqrt(cd) (only valid for family 2).
struct FamilySpec {
  int family = 5;
  bool rescaled = false;

  /// Throws BadFamily for family outside 1..5 or rescaled != family 2.
  static FamilySpec make(int family, bool rescaled = false);
  std::string name() const;
};

/// Coefficients (a, b, c, d, e, f) on d1..d6 for the images of sigma_i and
/// sigma_i^{-1}.
struct GeneratorCoefficients {
  std::array<LaurentPoly, 6> positive;
  std::array<LaurentPoly, 6> negative;
};

GeneratorCoefficients family_coefficients(const FamilySpec& spec);

/// The two-strand element sum coef_j d_j.
AlgebraElement p2_element(const std::array<LaurentPoly, 6>& coefficients);

/// Image of sigma_i^{sign} in CP_n. Throws IndexOutOfRange.
AlgebraElement phi_generator(const GeneratorCoefficients& coeffs, int i,
                             int sign, int n);
AlgebraElement phi_generator(const FamilySpec& spec, int i, int sign, int n);

/// Ordered product of generator images; the empty word maps to 1.
AlgebraElement phi_word(const GeneratorCoefficients& coeffs, const BraidWord& w);
AlgebraElement phi_word(const FamilySpec& spec, const BraidWord& w);

/// Braid relation in CP_3, far commutation in CP_4 and generator inverses,
/// all by exact symbolic equality. Failing lines carry RelationFailed detail.
Report verify_braid_relations(const GeneratorCoefficients& coeffs,
                              const std::string& label);
Report verify_braid_relations(const FamilySpec& spec);

/// The exponent substitution c -> 1/d, d -> 1/c, i.e. U -> V^-1, V -> U^-1.
LaurentPoly dual_parameters(const LaurentPoly& p);

/// phi_2^{c,d}(sigma) = phi_3^{1/d,1/c}(sigma^-1) and
/// phi_5^{c,d}(sigma) = phi_4^{1/d,1/c}(sigma^-1), coefficientwise.
Report duality_check();

/// Rank over the fraction field of {phi(sigma_1)^2, phi(sigma_1), 1} in CP_2,
/// via 6-dimensional coefficient vectors. Rank 2 means phi satisfies a
/// quadratic relation with scalar coefficients; rank 3 means it does not.
int quadratic_span_rank(const FamilySpec& spec);

}  // namespace rookbraid
