#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rookbraid/qpoly.hpp"

namespace rookbraid {

using Rational = mpq_class;

/// Exponent vector over the three ring variables.
///
///   U = sqrt(c),  V = sqrt(d),  M = a + c + d - 1
///
/// so c = U^2, d = V^2, sqrt(cd) = UV and sqrt(c/d) = U V^-1.
struct Monomial {
  int u = 0;
  int v = 0;
  int m = 0;

  int degree() const { return u + v + m; }

  friend Monomial operator+(Monomial a, Monomial b) {
    return {a.u + b.u, a.v + b.v, a.m + b.m};
  }
  friend Monomial operator-(Monomial a, Monomial b) {
    return {a.u - b.u, a.v - b.v, a.m - b.m};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded lexicographic order on (u, v, m).
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.u <=> b.u; c != 0) return c;
    if (auto c = a.v <=> b.v; c != 0) return c;
    return a.m <=> b.m;
  }

  /// Componentwise a >= b.
  bool divisible_by(const Monomial& b) const {
    return u >= b.u && v >= b.v && m >= b.m;
  }
};

/// A point at which to specialize U, V, M to rationals.
struct Specialization {
  Rational u;
  Rational v;
  Rational m;
};

/// Sparse Laurent polynomial in U, V, M with exact rational coefficients.
///
/// Terms are kept sorted ascending in graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(int constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& constant);  // NOLINT

  static LaurentPoly monomial(Monomial mono, const Rational& coef = 1);
  static LaurentPoly U(int e = 1) { return monomial({e, 0, 0}); }
  static LaurentPoly V(int e = 1) { return monomial({0, e, 0}); }
  static LaurentPoly M(int e = 1) { return monomial({0, 0, e}); }
  /// (UV)^e, i.e. sqrt(cd)^e.
  static LaurentPoly UV(int e = 1) { return monomial({e, e, 0}); }
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Coefficient of a given monomial (zero if absent).
  Rational coefficient(const Monomial& mono) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) {
    return a *= s;
  }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) {
    return a *= s;
  }
  friend LaurentPoly operator*(LaurentPoly a, int s) { return a *= Rational(s); }
  friend LaurentPoly operator*(int s, LaurentPoly a) { return a *= Rational(s); }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Non-negative power; monomials also accept negative exponents.
  LaurentPoly pow(int e) const;

  /// Multiplies every exponent by a monomial shift.
  LaurentPoly shifted(Monomial by) const;

  /// Ring endomorphism sending each variable to a monomial:
  /// U -> u_image, V -> v_image, M -> m_image.
  LaurentPoly substitute(Monomial u_image, Monomial v_image,
                         Monomial m_image) const;

  /// Componentwise minimum exponent over all terms (zero vector for 0).
  Monomial min_exponents() const;

  /// Evaluates at rational U, V, M. Rejects U = 0 or V = 0 (cd = 0), and
  /// M = 0 when a negative power of M is present.
  Rational evaluate(const Specialization& at) const;

  /// Human-readable text in graded-lex order, e.g. "-U^-1*V^-1 - M + 2*U*V".
  std::string to_string() const;

 private:
  explicit LaurentPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  static std::vector<Term> canonicalize(std::vector<Term> raw);

  std::vector<Term> terms_;
};

/// Returns r with r * divisor == dividend exactly, or throws NotDivisible.
LaurentPoly exact_div(const LaurentPoly& dividend, const LaurentPoly& divisor);

/// True iff every term has e_U == e_V and e_M == 0, i.e. the polynomial lies
/// in the subring generated by (UV)^{+-1}.
bool is_balanced(const LaurentPoly& p);

/// Substitutes q = UV into a balanced polynomial; throws NotBalanced
/// otherwise.
QPoly to_q(const LaurentPoly& p);

/// Inverse of to_q: q^e -> (UV)^e.
LaurentPoly from_q(const QPoly& p);

}  // namespace rookbraid
