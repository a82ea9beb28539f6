#pragma once

#include "rookbraid/braid.hpp"
#include "rookbraid/qpoly.hpp"

namespace rookbraid {

/// Jones polynomial of the closure in q = sqrt(cd).
///
/// Convention: q^2 = t and q = -t^{1/2}, so knots come out as the classical
/// V(t) with t = q^2, and the crossing sigma_i is positive. For example
/// sigma_1^3 gives q^2 + q^6 - q^8 (= t + t^3 - t^4) and the two-component
/// unlink gives q^-1 + q.
QPoly jones(const BraidWord& w);

/// Alexander polynomial of the closure in q (t = q^2), normalized up to
/// units by normalize_units.
QPoly alexander(const BraidWord& w);

/// Canonical representative of p up to units +-q^k: if the coefficient
/// sequence is palindromic or antipalindromic, centre it on exponent 0 when
/// the span is even; otherwise shift the lowest exponent to 0. Then make the
/// highest-degree coefficient positive. Zero stays zero.
QPoly normalize_units(const QPoly& p);

/// Components, self-writhes and pairwise linking numbers of the closure.
LinkData linking_profile(const BraidWord& w);

}  // namespace rookbraid
