#include "rookbraid/homs.hpp"

#include <map>

#include "rookbraid/error.hpp"

namespace rookbraid {

namespace {

using P = LaurentPoly;

P c() { return P::U(2); }
P d() { return P::V(2); }
P cd() { return P::UV(2); }
P inv_c() { return P::U(-2); }
P inv_d() { return P::V(-2); }
P inv_cd() { return P::UV(-2); }

}  // namespace

FamilySpec FamilySpec::make(int family, bool rescaled) {
  if (family < 1 || family > 5) {
    throw Error(ErrorCode::BadFamily,
                "family must be 1..5, got " + std::to_string(family));
  }
  if (rescaled && family != 2) {
    throw Error(ErrorCode::BadFamily, "only family 2 has a rescaled form");
  }
  return FamilySpec{family, rescaled};
}

std::string FamilySpec::name() const {
  return "phi" + std::to_string(family) + (rescaled ? " (rescaled)" : "");
}

GeneratorCoefficients family_coefficients(const FamilySpec& spec) {
  FamilySpec::make(spec.family, spec.rescaled);
  GeneratorCoefficients out;
  auto& pos = out.positive;
  auto& neg = out.negative;

  // The c and d slots are the parameters themselves; the inverse always has
  // 1/d on the slash 1->2 and 1/c on the slash 2->1.
  pos[2] = c();
  pos[3] = d();
  pos[5] = 1;
  neg[2] = inv_d();
  neg[3] = inv_c();
  neg[5] = 1;

  switch (spec.family) {
    case 1:
      // a is free; a + c + d - 1 = M.
      pos[0] = P::M() + 1 - c() - d();
      pos[1] = -1;
      pos[4] = -1;
      neg[0] = P(1) - inv_d() - inv_c() + P::M(-1);
      neg[1] = -1;
      neg[4] = -1;
      break;
    case 2:
      pos[0] = -c() - d();
      pos[1] = -1;
      pos[4] = -cd();
      neg[0] = -inv_c() - inv_d();
      neg[1] = -inv_cd();
      neg[4] = -1;
      break;
    case 3:
      pos[0] = -c() - d();
      pos[1] = -cd();
      pos[4] = -1;
      neg[0] = -inv_c() - inv_d();
      neg[1] = -1;
      neg[4] = -inv_cd();
      break;
    case 4:
      pos[0] = P(1) - c() - d() + cd();
      pos[1] = -cd();
      pos[4] = -1;
      neg[0] = P(1) - inv_c() - inv_d() + inv_cd();
      neg[1] = -1;
      neg[4] = -inv_cd();
      break;
    case 5:
      pos[0] = P(1) - c() - d() + cd();
      pos[1] = -1;
      pos[4] = -cd();
      neg[0] = P(1) - inv_c() - inv_d() + inv_cd();
      neg[1] = -inv_cd();
      neg[4] = -1;
      break;
  }

  if (spec.rescaled) {
    // sigma scaled by 1/sqrt(cd), sigma^-1 by sqrt(cd).
    for (auto& coef : pos) coef *= P::UV(-1);
    for (auto& coef : neg) coef *= P::UV(1);
  }
  return out;
}

AlgebraElement p2_element(const std::array<LaurentPoly, 6>& coefficients) {
  AlgebraElement out(2);
  const auto& basis = p2_basis();
  for (std::size_t j = 0; j < 6; ++j) out.add_term(basis[j], coefficients[j]);
  return out;
}

AlgebraElement phi_generator(const GeneratorCoefficients& coeffs, int i,
                             int sign, int n) {
  const auto& slot = sign > 0 ? coeffs.positive : coeffs.negative;
  return embed_p2(p2_element(slot), i, n);
}

AlgebraElement phi_generator(const FamilySpec& spec, int i, int sign, int n) {
  return phi_generator(family_coefficients(spec), i, sign, n);
}

AlgebraElement phi_word(const GeneratorCoefficients& coeffs,
                        const BraidWord& w) {
  std::map<int, AlgebraElement> cache;
  AlgebraElement result = AlgebraElement::identity(w.n());
  for (int letter : w.letters()) {
    auto it = cache.find(letter);
    if (it == cache.end()) {
      it = cache
               .emplace(letter, phi_generator(coeffs, std::abs(letter),
                                              letter > 0 ? 1 : -1, w.n()))
               .first;
    }
    result = result * it->second;
  }
  return result;
}

AlgebraElement phi_word(const FamilySpec& spec, const BraidWord& w) {
  return phi_word(family_coefficients(spec), w);
}

Report verify_braid_relations(const GeneratorCoefficients& coeffs,
                              const std::string& label) {
  Report report("braid relations for " + label);
  auto gen = [&](int i, int sign, int n) {
    return phi_generator(coeffs, i, sign, n);
  };

  const auto s1 = gen(1, 1, 3);
  const auto s2 = gen(2, 1, 3);
  const auto lhs = s1 * s2 * s1;
  const auto rhs = s2 * s1 * s2;
  report.add(label + ": s1 s2 s1 = s2 s1 s2 in CP_3", lhs == rhs,
             lhs == rhs ? "" : "RelationFailed: difference has " +
                                   std::to_string((lhs - rhs).terms().size()) +
                                   " diagram terms");

  const auto f1 = gen(1, 1, 4);
  const auto f3 = gen(3, 1, 4);
  const bool commute = f1 * f3 == f3 * f1;
  report.add(label + ": s1 s3 = s3 s1 in CP_4", commute,
             commute ? "" : "RelationFailed: far commutation");

  for (int n = 2; n <= 3; ++n) {
    for (int i = 1; i < n; ++i) {
      const auto prod = gen(i, 1, n) * gen(i, -1, n);
      const auto prod2 = gen(i, -1, n) * gen(i, 1, n);
      const auto one = AlgebraElement::identity(n);
      const bool ok = prod == one && prod2 == one;
      report.add(label + ": s" + std::to_string(i) + " s" + std::to_string(i) +
                     "^-1 = 1 in CP_" + std::to_string(n),
                 ok, ok ? "" : "RelationFailed: inverse formula");
    }
  }
  return report;
}

Report verify_braid_relations(const FamilySpec& spec) {
  return verify_braid_relations(family_coefficients(spec), spec.name());
}

LaurentPoly dual_parameters(const LaurentPoly& p) {
  return p.substitute({0, -1, 0}, {-1, 0, 0}, {0, 0, 1});
}

Report duality_check() {
  Report report("duality");
  auto compare = [&](int forward_family, int dual_family,
                     const std::string& name) {
    const auto fwd = family_coefficients(FamilySpec::make(forward_family));
    const auto dual = family_coefficients(FamilySpec::make(dual_family));
    bool ok = true;
    std::string detail;
    for (std::size_t j = 0; j < 6; ++j) {
      const auto substituted = dual_parameters(dual.negative[j]);
      if (substituted != fwd.positive[j]) {
        ok = false;
        detail = "RelationFailed: d" + std::to_string(j + 1) + " coefficient " +
                 substituted.to_string() + " vs " + fwd.positive[j].to_string();
        break;
      }
    }
    report.add(name, ok, detail);
  };
  compare(2, 3, "phi2^{c,d}(s) = phi3^{1/d,1/c}(s^-1)");
  compare(5, 4, "phi5^{c,d}(s) = phi4^{1/d,1/c}(s^-1)");
  return report;
}

namespace {

LaurentPoly det3(const std::array<std::array<LaurentPoly, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

int quadratic_span_rank(const FamilySpec& spec) {
  const auto gen = phi_generator(spec, 1, 1, 2);
  const std::array<AlgebraElement, 3> rows{gen * gen, gen,
                                           AlgebraElement::identity(2)};
  const auto& basis = p2_basis();
  std::array<std::array<LaurentPoly, 6>, 3> vec;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t j = 0; j < 6; ++j) vec[r][j] = rows[r].coefficient(basis[j]);
  }

  // Rank from nonvanishing minors: the ring is an integral domain.
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = a + 1; b < 6; ++b) {
      for (std::size_t e = b + 1; e < 6; ++e) {
        std::array<std::array<LaurentPoly, 3>, 3> m;
        for (std::size_t r = 0; r < 3; ++r) m[r] = {vec[r][a], vec[r][b], vec[r][e]};
        if (!det3(m).is_zero()) return 3;
      }
    }
  }
  for (std::size_t r1 = 0; r1 < 3; ++r1) {
    for (std::size_t r2 = r1 + 1; r2 < 3; ++r2) {
      for (std::size_t a = 0; a < 6; ++a) {
        for (std::size_t b = a + 1; b < 6; ++b) {
          if (!(vec[r1][a] * vec[r2][b] - vec[r1][b] * vec[r2][a]).is_zero()) {
            return 2;
          }
        }
      }
    }
  }
  for (const auto& row : vec) {
    for (const auto& x : row) {
      if (!x.is_zero()) return 1;
    }
  }
  return 0;
}

}  // namespace rookbraid
