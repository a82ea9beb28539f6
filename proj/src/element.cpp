#include "rookbraid/element.hpp"

#include <sstream>

#include "rookbraid/error.hpp"

namespace rookbraid {

AlgebraElement::AlgebraElement(const PlanarDiagram& d, LaurentPoly coef)
    : n_(d.n()) {
  if (!coef.is_zero()) terms_.emplace(d, std::move(coef));
}

AlgebraElement AlgebraElement::identity(int n) {
  return AlgebraElement(PlanarDiagram::identity(n));
}

LaurentPoly AlgebraElement::coefficient(const PlanarDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void AlgebraElement::add_term(const PlanarDiagram& d, const LaurentPoly& coef) {
  if (d.n() != n_) {
    throw Error(ErrorCode::SizeMismatch,
                "term on " + std::to_string(d.n()) + " strands added to an element on " +
                    std::to_string(n_));
  }
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AlgebraElement::check_size(const AlgebraElement& other,
                                const char* op) const {
  if (other.n_ != n_) {
    throw Error(ErrorCode::SizeMismatch, std::string(op) + ": " +
                                             std::to_string(n_) + " vs " +
                                             std::to_string(other.n_));
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  check_size(other, "add");
  for (const auto& [d, c] : other.terms_) add_term(d, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  check_size(other, "subtract");
  for (const auto& [d, c] : other.terms_) add_term(d, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const LaurentPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= scalar;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_size(b, "multiply");
  AlgebraElement out(a.n_);
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      out.add_term(compose(da, db), ca * cb);
    }
  }
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0\n";
  std::ostringstream out;
  for (const auto& [d, c] : terms_) {
    out << '(' << c.to_string() << ") * " << d.to_string() << '\n';
  }
  return out.str();
}

AlgebraElement tensor(const AlgebraElement& left, const AlgebraElement& right) {
  AlgebraElement out(left.n() + right.n());
  for (const auto& [dl, cl] : left.terms()) {
    for (const auto& [dr, cr] : right.terms()) {
      out.add_term(tensor(dl, dr), cl * cr);
    }
  }
  return out;
}

AlgebraElement embed_p2(const AlgebraElement& g, int i, int n) {
  if (g.n() != 2) {
    throw Error(ErrorCode::SizeMismatch, "embed_p2 expects a 2-strand element");
  }
  if (i < 1 || i > n - 1) {
    throw Error(ErrorCode::IndexOutOfRange,
                "generator index " + std::to_string(i) + " for n = " +
                    std::to_string(n));
  }
  const AlgebraElement left = AlgebraElement::identity(i - 1);
  const AlgebraElement right = AlgebraElement::identity(n - i - 1);
  return tensor(tensor(left, g), right);
}

AlgebraElement random_element(int n, int terms, std::mt19937_64& rng) {
  const auto diagrams = enumerate_planar(n);
  std::uniform_int_distribution<std::size_t> pick(0, diagrams.size() - 1);
  std::uniform_int_distribution<int> exponent(-2, 2);
  std::uniform_int_distribution<int> coef(1, 3);
  std::bernoulli_distribution negative(0.5);
  AlgebraElement out(n);
  for (int t = 0; t < terms; ++t) {
    const int c = negative(rng) ? -coef(rng) : coef(rng);
    const int eu = exponent(rng);
    const int ev = exponent(rng);
    const int em = exponent(rng);
    out.add_term(diagrams[pick(rng)], LaurentPoly::monomial({eu, ev, em}, c));
  }
  return out;
}

}  // namespace rookbraid
