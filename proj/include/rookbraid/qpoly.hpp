#pragma once

#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rookbraid {

/// Single-variable Laurent polynomial with rational coefficients. The
/// variable is rendered as `q` by default; the oracles reuse the type for
/// the bracket variable A and the Burau variable t.
class QPoly {
 public:
  using Coeffs = std::map<int, mpq_class>;

  QPoly() = default;
  QPoly(int constant);  // NOLINT(google-explicit-constructor)
  static QPoly monomial(int exponent, const mpq_class& coef = 1);
  static QPoly from_coeffs(const Coeffs& coeffs);

  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  mpq_class coefficient(int exponent) const;
  int lowest_exponent() const;   // requires !is_zero()
  int highest_exponent() const;  // requires !is_zero()
  /// Number of nonzero terms.
  std::size_t size() const { return coeffs_.size(); }

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  QPoly operator-() const;
  friend bool operator==(const QPoly&, const QPoly&) = default;

  QPoly pow(int e) const;  // e >= 0, or any e for a monomial
  /// Multiplies by q^k.
  QPoly shifted(int k) const;
  /// Substitutes q -> q^-1.
  QPoly inverted() const;
  /// Substitutes q -> q^factor (factor may be negative).
  QPoly scaled_exponents(int factor) const;

  /// Renders terms by increasing exponent, e.g. "q^-2 - 1 + q^2".
  std::string to_string(std::string_view var = "q") const;

  /// Parses the to_string format (whitespace-insensitive); throws
  /// Error(CorpusFormat) on malformed input.
  static QPoly parse(std::string_view text, std::string_view var = "q");

 private:
  void prune();
  Coeffs coeffs_;
};

/// Exact quotient in the Laurent ring Q[q, q^-1]; throws NotDivisible.
QPoly exact_div(const QPoly& dividend, const QPoly& divisor);

}  // namespace rookbraid
