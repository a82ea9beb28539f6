#include "rookbraid/traces.hpp"

#include "rookbraid/error.hpp"
#include "rookbraid/homs.hpp"

namespace rookbraid {

LaurentPoly bubble_trace(const LaurentPoly& beta, const AlgebraElement& x) {
  std::vector<LaurentPoly> powers{LaurentPoly(1)};
  LaurentPoly total;
  for (const auto& [d, coef] : x.terms()) {
    const auto k = static_cast<std::size_t>(d.vertical_line_count());
    while (powers.size() <= k) powers.push_back(powers.back() * beta);
    total += coef * powers[k];
  }
  return total;
}

LaurentPoly single_line_trace(const AlgebraElement& x) {
  LaurentPoly total;
  for (const auto& [d, coef] : x.terms()) {
    if (d.vertical_line_count() == 1) total += coef;
  }
  return total;
}

LaurentPoly jones_bubble_parameter() { return LaurentPoly::UV(-2) + 1; }

LaurentPoly markov_trace_5(const BraidWord& w) {
  const auto image = phi_word(FamilySpec::make(5), w);
  return LaurentPoly::UV(writhe(w) + w.n()) *
         bubble_trace(jones_bubble_parameter(), image);
}

LaurentPoly alexander_normalizer(int n) {
  LaurentPoly sum;
  for (int i = 0; i < n; ++i) sum += LaurentPoly::UV(2 * i);
  LaurentPoly out = LaurentPoly::UV(-(n - 1)) * sum;
  return (n - 1) % 2 == 0 ? out : -out;
}

LaurentPoly trace_2(const BraidWord& w) {
  const auto image = phi_word(FamilySpec::make(2, true), w);
  return exact_div(single_line_trace(image), alexander_normalizer(w.n()));
}

BraidWord coxeter_word(int n) {
  std::vector<int> letters;
  for (int i = 1; i < n; ++i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

Report vip_checks(int n) {
  if (n < 2 || n > kVipCap) {
    throw Error(ErrorCode::CapExceeded,
                "vip_checks needs 2 <= n <= " + std::to_string(kVipCap));
  }
  const auto image = phi_word(FamilySpec::make(2, true), coxeter_word(n));

  LaurentPoly no_lines;
  LaurentPoly only_at_n;
  for (const auto& [d, coef] : image.terms()) {
    const int k = d.vertical_line_count();
    if (k == 0) no_lines += coef;
    if (k == 1 && d.image(n) == n) only_at_n += coef;
  }
  const std::string suffix = " (n=" + std::to_string(n) + ")";
  Report report("closed forms for sigma_1...sigma_{n-1}");
  report.add("claim 1: no-vertical-line coefficients sum to 0" + suffix,
             no_lines.is_zero(),
             no_lines.is_zero() ? "" : "CheckFailed: got " + no_lines.to_string());

  const LaurentPoly expected2 = (n - 1) % 2 == 0 ? LaurentPoly::UV(n - 1)
                                                 : -LaurentPoly::UV(n - 1);
  report.add("claim 2: only-line-at-n coefficients sum to (-UV)^{n-1}" + suffix,
             only_at_n == expected2,
             only_at_n == expected2
                 ? ""
                 : "CheckFailed: got " + only_at_n.to_string() + ", expected " +
                       expected2.to_string());

  const LaurentPoly single = single_line_trace(image);
  const LaurentPoly expected3 = alexander_normalizer(n);
  report.add("claim 3: single-line trace equals closed form" + suffix,
             single == expected3,
             single == expected3 ? ""
                                 : "CheckFailed: got " + single.to_string() +
                                       ", expected " + expected3.to_string());
  return report;
}

BraidWord tau_lambda(const std::vector<int>& parts) {
  if (parts.empty()) throw Error(ErrorCode::BadPartition, "empty partition");
  int n = 0;
  std::vector<int> letters;
  for (int part : parts) {
    if (part < 1) {
      throw Error(ErrorCode::BadPartition,
                  "part " + std::to_string(part) + " is not positive");
    }
    for (int j = 1; j < part; ++j) letters.push_back(n + j);
    n += part;
  }
  return BraidWord(n, std::move(letters));
}

}  // namespace rookbraid
