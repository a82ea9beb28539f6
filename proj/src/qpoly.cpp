#include "rookbraid/qpoly.hpp"

#include <sstream>

#include "rookbraid/error.hpp"

namespace rookbraid {

QPoly::QPoly(int constant) {
  if (constant != 0) coeffs_[0] = constant;
}

QPoly QPoly::monomial(int exponent, const mpq_class& coef) {
  QPoly p;
  if (coef != 0) p.coeffs_[exponent] = coef;
  return p;
}

QPoly QPoly::from_coeffs(const Coeffs& coeffs) {
  QPoly p;
  p.coeffs_ = coeffs;
  p.prune();
  return p;
}

void QPoly::prune() {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

mpq_class QPoly::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? mpq_class(0) : it->second;
}

int QPoly::lowest_exponent() const { return coeffs_.begin()->first; }
int QPoly::highest_exponent() const { return coeffs_.rbegin()->first; }

QPoly& QPoly::operator+=(const QPoly& other) {
  for (const auto& [e, c] : other.coeffs_) {
    auto& slot = coeffs_[e];
    slot += c;
    if (slot == 0) coeffs_.erase(e);
  }
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) { return *this += -other; }

QPoly& QPoly::operator*=(const QPoly& other) {
  Coeffs out;
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : other.coeffs_) out[e1 + e2] += c1 * c2;
  }
  coeffs_ = std::move(out);
  prune();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly p = *this;
  for (auto& kv : p.coeffs_) kv.second = -kv.second;
  return p;
}

QPoly QPoly::pow(int e) const {
  if (e < 0) {
    if (coeffs_.size() != 1) {
      throw Error(ErrorCode::NotDivisible, "negative power of " + to_string());
    }
    const auto& [exp, c] = *coeffs_.begin();
    mpq_class inv = 1 / c;
    mpq_class coef = 1;
    for (int k = 0; k < -e; ++k) coef *= inv;
    return monomial(exp * e, coef);
  }
  QPoly result = 1;
  for (int k = 0; k < e; ++k) result *= *this;
  return result;
}

QPoly QPoly::shifted(int k) const {
  QPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e + k] = c;
  return p;
}

QPoly QPoly::inverted() const { return scaled_exponents(-1); }

QPoly QPoly::scaled_exponents(int factor) const {
  QPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e * factor] += c;
  p.prune();
  return p;
}

std::string QPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    mpq_class mag = abs(c);
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << var;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

QPoly QPoly::parse(std::string_view text, std::string_view var) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  }
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::CorpusFormat,
                 "cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  if (s.empty()) throw bad("empty");
  if (s == "0") return {};

  QPoly out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw bad("expected sign");
    }
    // A term ends at the next +/- not directly after '^'.
    std::size_t end = pos;
    while (end < s.size() &&
           !((s[end] == '+' || s[end] == '-') && end > pos && s[end - 1] != '^')) {
      ++end;
    }
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw bad("empty term");

    mpq_class coef = 1;
    int exponent = 0;
    std::string power_part;
    const auto var_at = term.find(var);
    if (var_at == std::string::npos) {
      power_part.clear();
      try {
        coef = mpq_class(term);
      } catch (const std::invalid_argument&) {
        throw bad("bad coefficient '" + term + "'");
      }
    } else {
      std::string coef_part = term.substr(0, var_at);
      if (!coef_part.empty()) {
        if (coef_part.back() != '*') throw bad("missing '*' in '" + term + "'");
        coef_part.pop_back();
        try {
          coef = mpq_class(coef_part);
        } catch (const std::invalid_argument&) {
          throw bad("bad coefficient '" + coef_part + "'");
        }
      }
      power_part = term.substr(var_at + var.size());
      if (power_part.empty()) {
        exponent = 1;
      } else {
        if (power_part.front() != '^') throw bad("bad power in '" + term + "'");
        try {
          std::size_t used = 0;
          exponent = std::stoi(power_part.substr(1), &used);
          if (used != power_part.size() - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw bad("bad exponent in '" + term + "'");
        }
      }
    }
    coef.canonicalize();
    out += monomial(exponent, coef * sign);
  }
  return out;
}

QPoly exact_div(const QPoly& dividend, const QPoly& divisor) {
  if (divisor.is_zero()) {
    throw Error(ErrorCode::NotDivisible, "division by zero");
  }
  if (dividend.is_zero()) return {};
  const int dlo = divisor.lowest_exponent();
  const QPoly den = divisor.shifted(-dlo);
  QPoly rem = dividend.shifted(-dividend.lowest_exponent());
  const int lead_exp = den.highest_exponent();
  const mpq_class lead = den.coefficient(lead_exp);
  QPoly quotient;
  while (!rem.is_zero()) {
    const int top = rem.highest_exponent();
    if (top < lead_exp) {
      throw Error(ErrorCode::NotDivisible,
                  "(" + dividend.to_string() + ") / (" + divisor.to_string() + ")");
    }
    QPoly step = QPoly::monomial(top - lead_exp, rem.coefficient(top) / lead);
    quotient += step;
    rem -= step * den;
  }
  return quotient.shifted(dividend.lowest_exponent() - dlo);
}

}  // namespace rookbraid
