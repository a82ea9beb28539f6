#include "rookbraid/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rookbraid/error.hpp"

namespace rookbraid::oracle {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t roots() {
    std::size_t count = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      if (find(i) == i) ++count;
    }
    return count;
  }

 private:
  std::vector<std::size_t> parent_;
};

int exponent_sum(const BraidWord& w) {
  int total = 0;
  for (int k : w.letters()) total += k > 0 ? 1 : -1;
  return total;
}

}  // namespace

QPoly normalized_bracket(const BraidWord& w) {
  const auto& letters = w.letters();
  const std::size_t m = letters.size();
  const auto n = static_cast<std::size_t>(w.n());
  if (m > kMaxStateSumCrossings) {
    throw Error(ErrorCode::TooManyCrossings,
                std::to_string(m) + " crossings exceeds " +
                    std::to_string(kMaxStateSumCrossings));
  }

  // states[a - b][loops] = number of smoothings with that profile
  std::map<int, std::map<std::size_t, long long>> states;
  if (m == 0) {
    states[0][n] = 1;
  } else {
    // Arc segment p at height level l; level m is glued back to level 0.
    auto seg = [&](std::size_t level, std::size_t p) {
      return (level % m) * n + p;
    };
    for (std::uint64_t state = 0; state < (std::uint64_t{1} << m); ++state) {
      DisjointSets arcs(m * n);
      int a_minus_b = 0;
      for (std::size_t j = 0; j < m; ++j) {
        const auto left = static_cast<std::size_t>(std::abs(letters[j]) - 1);
        for (std::size_t p = 0; p < n; ++p) {
          if (p != left && p != left + 1) arcs.unite(seg(j, p), seg(j + 1, p));
        }
        const bool a_smoothing = ((state >> j) & 1u) == 0;
        a_minus_b += a_smoothing ? 1 : -1;
        // For a positive crossing the A-smoothing follows the strands
        // (vertical); for a negative crossing it is the cup-cap one.
        const bool vertical = a_smoothing == (letters[j] > 0);
        if (vertical) {
          arcs.unite(seg(j, left), seg(j + 1, left));
          arcs.unite(seg(j, left + 1), seg(j + 1, left + 1));
        } else {
          arcs.unite(seg(j, left), seg(j, left + 1));
          arcs.unite(seg(j + 1, left), seg(j + 1, left + 1));
        }
      }
      ++states[a_minus_b][arcs.roots()];
    }
  }

  const QPoly loop = -QPoly::monomial(2) - QPoly::monomial(-2);
  std::vector<QPoly> loop_powers{QPoly(1)};
  QPoly bracket;
  for (const auto& [exponent, by_loops] : states) {
    for (const auto& [loops, count] : by_loops) {
      while (loop_powers.size() < loops) loop_powers.push_back(loop_powers.back() * loop);
      bracket += QPoly::monomial(exponent, mpq_class(static_cast<long>(count))) *
                 loop_powers[loops - 1];
    }
  }

  const int wr = exponent_sum(w);
  const mpq_class sign = wr % 2 == 0 ? 1 : -1;
  return QPoly::monomial(-3 * wr, sign) * bracket;
}

QPoly kauffman_jones(const BraidWord& w) {
  const QPoly f = normalized_bracket(w);
  QPoly out;
  for (const auto& [e, c] : f.coeffs()) {
    if (e % 2 != 0) {
      throw Error(ErrorCode::CheckFailed,
                  "odd power of A in normalized bracket of " + w.to_string());
    }
    // A^e = (A^2)^{e/2} = (-q^-1)^{e/2}
    const int half = e / 2;
    out += QPoly::monomial(-half, half % 2 == 0 ? c : mpq_class(-c));
  }
  return out;
}

namespace {

using Matrix = std::vector<std::vector<QPoly>>;

Matrix identity_matrix(std::size_t size) {
  Matrix m(size, std::vector<QPoly>(size));
  for (std::size_t i = 0; i < size; ++i) m[i][i] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t size = a.size();
  Matrix out(size, std::vector<QPoly>(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t l = 0; l < size; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < size; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

Matrix generator_matrix(int n, int letter) {
  const auto size = static_cast<std::size_t>(n - 1);
  const int i = std::abs(letter);
  const bool positive = letter > 0;
  const QPoly t = QPoly::monomial(1);
  const QPoly t_inv = QPoly::monomial(-1);
  Matrix m = identity_matrix(size);
  if (n == 2) {
    m[0][0] = positive ? -t : -t_inv;
    return m;
  }
  if (i == 1) {
    m[0][0] = positive ? -t : -t_inv;
    m[1][0] = positive ? QPoly(1) : t_inv;
    return m;
  }
  if (i == n - 1) {
    const std::size_t r = size - 2;
    m[r][r + 1] = positive ? t : QPoly(1);
    m[r + 1][r + 1] = positive ? -t : -t_inv;
    return m;
  }
  const auto r = static_cast<std::size_t>(i - 2);
  m[r][r + 1] = positive ? t : QPoly(1);
  m[r + 1][r + 1] = positive ? -t : -t_inv;
  m[r + 2][r + 1] = positive ? QPoly(1) : t_inv;
  return m;
}

QPoly determinant(const Matrix& m) {
  const std::size_t size = m.size();
  std::vector<std::size_t> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  QPoly det;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = a + 1; b < size; ++b) {
        if (perm[a] > perm[b]) ++inversions;
      }
    }
    QPoly term = inversions % 2 == 0 ? QPoly(1) : QPoly(-1);
    for (std::size_t r = 0; r < size && !term.is_zero(); ++r) term *= m[r][perm[r]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

std::vector<std::vector<QPoly>> reduced_burau(const BraidWord& w) {
  const auto size = static_cast<std::size_t>(w.n() - 1);
  Matrix product = identity_matrix(size);
  for (int letter : w.letters()) {
    product = multiply(product, generator_matrix(w.n(), letter));
  }
  return product;
}

QPoly burau_alexander(const BraidWord& w) {
  if (w.n() == 1) return 1;
  Matrix m = reduced_burau(w);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (auto& entry : m[i]) entry = -entry;
    m[i][i] += 1;
  }
  QPoly geometric;
  for (int i = 0; i < w.n(); ++i) geometric += QPoly::monomial(i);
  return exact_div(determinant(m), geometric).scaled_exponents(2);
}

bool equal_up_to_units(const QPoly& p, const QPoly& r, bool allow_inversion) {
  auto matches = [&](const QPoly& candidate) {
    if (p.is_zero() || candidate.is_zero()) return p.is_zero() && candidate.is_zero();
    const QPoly aligned =
        candidate.shifted(p.lowest_exponent() - candidate.lowest_exponent());
    return aligned == p || -aligned == p;
  };
  return matches(r) || (allow_inversion && matches(r.inverted()));
}

}  // namespace rookbraid::oracle
