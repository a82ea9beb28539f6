#include "rookbraid/poly.hpp"

#include <algorithm>
#include <sstream>

#include "rookbraid/error.hpp"

namespace rookbraid {

namespace {

Rational rational_pow(const Rational& base, int e) {
  Rational result = 1;
  Rational b = e < 0 ? Rational(1 / base) : base;
  for (int k = std::abs(e); k > 0; --k) result *= b;
  return result;
}

void append_factor(std::ostringstream& out, bool& first, char var, int e) {
  if (e == 0) return;
  if (!first) out << '*';
  first = false;
  out << var;
  if (e != 1) out << '^' << e;
}

}  // namespace

LaurentPoly::LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) terms_.push_back({Monomial{}, constant});
}

LaurentPoly LaurentPoly::monomial(Monomial mono, const Rational& coef) {
  if (coef == 0) return {};
  return LaurentPoly(std::vector<Term>{{mono, coef}});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  return LaurentPoly(canonicalize(std::move(terms)));
}

std::vector<LaurentPoly::Term> LaurentPoly::canonicalize(
    std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  out.reserve(raw.size());
  for (auto& t : raw) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return out;
}

Rational LaurentPoly::coefficient(const Monomial& mono) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), mono,
      [](const Term& t, const Monomial& m) { return t.mono < m; });
  if (it != terms_.end() && it->mono == mono) return it->coef;
  return 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (a->mono < b->mono) {
      merged.push_back(std::move(*a++));
    } else if (b->mono < a->mono) {
      merged.push_back(*b++);
    } else {
      Rational s = a->coef + b->coef;
      if (s != 0) merged.push_back({a->mono, std::move(s)});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) merged.push_back(std::move(*a));
  for (; b != other.terms_.end(); ++b) merged.push_back(*b);
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  return *this += -other;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= scalar;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Shifting by a single monomial preserves the graded-lex order.
  if (a.is_monomial() || b.is_monomial()) {
    const auto& single = a.is_monomial() ? a.terms_.front() : b.terms_.front();
    const auto& many = a.is_monomial() ? b : a;
    std::vector<LaurentPoly::Term> out;
    out.reserve(many.terms_.size());
    for (const auto& t : many.terms_) {
      out.push_back({t.mono + single.mono, t.coef * single.coef});
    }
    return LaurentPoly(std::move(out));
  }
  std::vector<LaurentPoly::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      raw.push_back({x.mono + y.mono, x.coef * y.coef});
    }
  }
  return LaurentPoly(LaurentPoly::canonicalize(std::move(raw)));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) {
      throw Error(ErrorCode::NotDivisible,
                  "negative power of a non-monomial: " + to_string());
    }
    const auto& t = terms_.front();
    return monomial({t.mono.u * e, t.mono.v * e, t.mono.m * e},
                    rational_pow(t.coef, e));
  }
  LaurentPoly result = 1;
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(Monomial by) const {
  return *this * monomial(by);
}

LaurentPoly LaurentPoly::substitute(Monomial u_image, Monomial v_image,
                                    Monomial m_image) const {
  std::vector<Term> raw;
  raw.reserve(terms_.size());
  for (const auto& t : terms_) {
    const auto& e = t.mono;
    Monomial img{
        e.u * u_image.u + e.v * v_image.u + e.m * m_image.u,
        e.u * u_image.v + e.v * v_image.v + e.m * m_image.v,
        e.u * u_image.m + e.v * v_image.m + e.m * m_image.m,
    };
    raw.push_back({img, t.coef});
  }
  return LaurentPoly(canonicalize(std::move(raw)));
}

Monomial LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial lo = terms_.front().mono;
  for (const auto& t : terms_) {
    lo.u = std::min(lo.u, t.mono.u);
    lo.v = std::min(lo.v, t.mono.v);
    lo.m = std::min(lo.m, t.mono.m);
  }
  return lo;
}

Rational LaurentPoly::evaluate(const Specialization& at) const {
  if (at.u == 0 || at.v == 0) {
    throw Error(ErrorCode::BadSpecialization, "cd = 0 (U or V is zero)");
  }
  if (at.u * at.u * at.v * at.v == -1) {
    throw Error(ErrorCode::BadSpecialization, "cd = -1");
  }
  Rational sum = 0;
  for (const auto& t : terms_) {
    if (t.mono.m < 0 && at.m == 0) {
      throw Error(ErrorCode::BadSpecialization,
                  "M = 0 with a negative power of M");
    }
    sum += t.coef * rational_pow(at.u, t.mono.u) * rational_pow(at.v, t.mono.v) *
           rational_pow(at.m, t.mono.m);
  }
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first_term = true;
  for (const auto& t : terms_) {
    const bool negative = t.coef < 0;
    if (first_term) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first_term = false;
    Rational mag = abs(t.coef);
    const bool constant = t.mono == Monomial{};
    bool first_factor = true;
    if (constant || mag != 1) {
      out << mag.get_str();
      first_factor = false;
    }
    append_factor(out, first_factor, 'U', t.mono.u);
    append_factor(out, first_factor, 'V', t.mono.v);
    append_factor(out, first_factor, 'M', t.mono.m);
  }
  return out.str();
}

LaurentPoly exact_div(const LaurentPoly& dividend, const LaurentPoly& divisor) {
  if (divisor.is_zero()) {
    throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
  }
  if (dividend.is_zero()) return {};

  // Work in the polynomial ring after clearing monomial factors: the
  // normalized divisor is not divisible by any variable, so divisibility in
  // the Laurent ring is equivalent to polynomial divisibility there, and a
  // single polynomial is always a Groebner basis of its ideal.
  const Monomial dlo = divisor.min_exponents();
  const Monomial plo = dividend.min_exponents();
  const LaurentPoly den = divisor.shifted(Monomial{} - dlo);
  LaurentPoly rem = dividend.shifted(Monomial{} - plo);
  const auto& lead = den.terms().back();

  std::vector<LaurentPoly::Term> quotient;
  while (!rem.is_zero()) {
    const auto& top = rem.terms().back();
    if (!top.mono.divisible_by(lead.mono)) {
      throw Error(ErrorCode::NotDivisible,
                  "(" + dividend.to_string() + ") / (" + divisor.to_string() +
                      ")");
    }
    LaurentPoly step =
        LaurentPoly::monomial(top.mono - lead.mono, top.coef / lead.coef);
    quotient.push_back(step.terms().front());
    rem -= step * den;
  }
  return LaurentPoly::from_terms(std::move(quotient)).shifted(plo - dlo);
}

bool is_balanced(const LaurentPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const LaurentPoly::Term& t) {
                       return t.mono.u == t.mono.v && t.mono.m == 0;
                     });
}

QPoly to_q(const LaurentPoly& p) {
  if (!is_balanced(p)) {
    throw Error(ErrorCode::NotBalanced, p.to_string());
  }
  QPoly::Coeffs coeffs;
  for (const auto& t : p.terms()) coeffs[t.mono.u] = t.coef;
  return QPoly::from_coeffs(coeffs);
}

LaurentPoly from_q(const QPoly& p) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [e, c] : p.coeffs()) terms.push_back({{e, e, 0}, c});
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace rookbraid
