#pragma once

#include <vector>

#include "rookbraid/braid.hpp"
#include "rookbraid/element.hpp"
#include "rookbraid/report.hpp"

namespace rookbraid {

/// sum over terms of coef(d) * beta^{k(d)}, k = vertical line count.
LaurentPoly bubble_trace(const LaurentPoly& beta, const AlgebraElement& x);

/// Sum of the coefficients of diagrams with exactly one vertical line.
LaurentPoly single_line_trace(const AlgebraElement& x);

/// beta = (1 + cd)/cd = U^-2 V^-2 + 1.
LaurentPoly jones_bubble_parameter();

/// (UV)^{writhe + n} * tr^beta(phi_5(w)).
LaurentPoly markov_trace_5(const BraidWord& w);

/// (-1)^{n-1} (UV)^{-(n-1)} * sum_{i<n} (U^2 V^2)^i, the single-line trace of
/// the rescaled phi_2 image of sigma_1 ... sigma_{n-1}.
LaurentPoly alexander_normalizer(int n);

/// Single-line trace of the rescaled phi_2 image, divided exactly by
/// alexander_normalizer(n). NotDivisible indicates an internal fault.
LaurentPoly trace_2(const BraidWord& w);

/// sigma_1 sigma_2 ... sigma_{n-1} in B_n.
BraidWord coxeter_word(int n);

inline constexpr int kVipCap = 7;

/// The three closed-form claims about the rescaled phi_2 image of
/// sigma_1 ... sigma_{n-1}. Throws CapExceeded unless 2 <= n <= kVipCap.
Report vip_checks(int n);

/// Block braid (sigma_1..sigma_{n1-1}) (x) ... (x) (sigma_1..sigma_{nk-1}).
/// Throws BadPartition for an empty list or a part < 1.
BraidWord tau_lambda(const std::vector<int>& parts);

}  // namespace rookbraid
