#pragma once

#include <map>
#include <random>
#include <string>

#include "rookbraid/diagram.hpp"
#include "rookbraid/poly.hpp"

namespace rookbraid {

/// An element of the planar rook algebra on n strands: a finite
/// LaurentPoly-linear combination of planar diagrams. Zero coefficients are
/// never stored, so equality of elements is equality of term maps.
class AlgebraElement {
 public:
  using Terms = std::map<PlanarDiagram, LaurentPoly>;

  explicit AlgebraElement(int n = 0) : n_(n) {}
  AlgebraElement(const PlanarDiagram& d, LaurentPoly coef = 1);

  static AlgebraElement identity(int n);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const PlanarDiagram& d) const;

  /// Adds coef * d in place.
  void add_term(const PlanarDiagram& d, const LaurentPoly& coef);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const LaurentPoly& scalar);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator*(AlgebraElement a, const LaurentPoly& s) {
    return a *= s;
  }
  friend AlgebraElement operator*(const LaurentPoly& s, AlgebraElement a) {
    return a *= s;
  }
  /// Bilinear extension of diagram composition; throws SizeMismatch.
  friend AlgebraElement operator*(const AlgebraElement& a,
                                  const AlgebraElement& b);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  /// One "(coefficient) * diagram" per line, in diagram order.
  std::string to_string() const;

 private:
  void check_size(const AlgebraElement& other, const char* op) const;

  int n_;
  Terms terms_;
};

/// Bilinear extension of the diagram tensor product.
AlgebraElement tensor(const AlgebraElement& left, const AlgebraElement& right);

/// I^{(i-1)} (x) g (x) I^{(n-i-1)} for an element g on two strands.
/// Throws IndexOutOfRange unless 1 <= i <= n-1, SizeMismatch unless g.n()==2.
AlgebraElement embed_p2(const AlgebraElement& g, int i, int n);

/// Seeded random element: up to `terms` distinct diagrams of P_n, each with
/// a coefficient c * U^i V^j M^k, c in [-3, 3] nonzero, exponents in [-2, 2].
AlgebraElement random_element(int n, int terms, std::mt19937_64& rng);

}  // namespace rookbraid
