#include "rookbraid/invariants.hpp"

#include "rookbraid/error.hpp"
#include "rookbraid/poly.hpp"
#include "rookbraid/traces.hpp"

namespace rookbraid {

QPoly jones(const BraidWord& w) {
  // Tr5 of the unknot is (1 + cd)/sqrt(cd) = U^-1 V^-1 + UV.
  const LaurentPoly unknot = LaurentPoly::UV(-1) + LaurentPoly::UV(1);
  return to_q(exact_div(markov_trace_5(w), unknot));
}

QPoly alexander(const BraidWord& w) { return normalize_units(to_q(trace_2(w))); }

QPoly normalize_units(const QPoly& p) {
  if (p.is_zero()) return p;
  const int lo = p.lowest_exponent();
  const int hi = p.highest_exponent();
  bool palindromic = true;
  bool antipalindromic = true;
  for (int e = lo; e <= hi; ++e) {
    const auto a = p.coefficient(e);
    const auto b = p.coefficient(lo + hi - e);
    if (a != b) palindromic = false;
    if (a != -b) antipalindromic = false;
  }
  const int span = hi - lo;
  QPoly out = (palindromic || antipalindromic) && span % 2 == 0
                  ? p.shifted(-(lo + span / 2))
                  : p.shifted(-lo);
  if (out.coefficient(out.highest_exponent()) < 0) out = -out;
  return out;
}

LinkData linking_profile(const BraidWord& w) { return link_data(w); }

}  // namespace rookbraid
