#pragma once

#include "rookbraid/braid.hpp"
#include "rookbraid/qpoly.hpp"

/// Reference implementations used only for cross-validation. Nothing in here
/// touches diagrams, algebra elements, homomorphisms or traces; the only
/// shared code is the polynomial arithmetic.
namespace rookbraid::oracle {

inline constexpr std::size_t kMaxStateSumCrossings = 24;

/// Kauffman bracket of the closure diagram, summed over all 2^m smoothings
/// with loop value -A^2 - A^-2, normalized by (-A^3)^{-writhe}, then
/// rewritten in q via A^2 = -q^{-1} (so t = A^-4 = q^2). Throws
/// TooManyCrossings above kMaxStateSumCrossings.
QPoly kauffman_jones(const BraidWord& w);

/// The raw normalized bracket polynomial in A (before the change of variable).
QPoly normalized_bracket(const BraidWord& w);

/// Reduced Burau matrix of the word over Z[t, t^-1], row-major, size n-1.
std::vector<std::vector<QPoly>> reduced_burau(const BraidWord& w);

/// det(I - B_red(w)) (1 - t)/(1 - t^n), rewritten with t = q^2. Defined only
/// up to units +-q^k.
QPoly burau_alexander(const BraidWord& w);

/// p = +-q^k r for some k; with allow_inversion also accepts r(q^-1).
bool equal_up_to_units(const QPoly& p, const QPoly& r, bool allow_inversion);

}  // namespace rookbraid::oracle
