#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rookbraid/braid.hpp"
#include "rookbraid/element.hpp"
#include "rookbraid/homs.hpp"
#include "rookbraid/report.hpp"

namespace rookbraid {

/// Dense square matrix over LaurentPoly acting on V^n_k, the span of the
/// k-subsets of {1..n} (lexicographic basis). Column S holds the image of
/// the basis vector v_S.
class RepMatrix {
 public:
  RepMatrix(int n, int k);
  static RepMatrix identity(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<StrandSet>& basis() const { return basis_; }
  /// Position of S in the basis; throws IndexOutOfRange if |S| != k.
  std::size_t index_of(StrandSet s) const;

  const LaurentPoly& at(std::size_t row, std::size_t col) const {
    return entries_[row * dim() + col];
  }
  LaurentPoly& at(std::size_t row, std::size_t col) {
    return entries_[row * dim() + col];
  }

  LaurentPoly trace() const;

  RepMatrix& operator+=(const RepMatrix& other);
  RepMatrix& operator*=(const LaurentPoly& scalar);
  friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
  friend RepMatrix operator+(RepMatrix a, const RepMatrix& b) { return a += b; }
  friend bool operator==(const RepMatrix&, const RepMatrix&) = default;

  /// Rows of entries, with the basis labels as a header.
  std::string to_string() const;

 private:
  void check_shape(const RepMatrix& other) const;

  int n_;
  int k_;
  std::vector<StrandSet> basis_;
  std::vector<LaurentPoly> entries_;
};

/// rho_k(d) v_S = v_{f(S)} if S is contained in the edge-incident bottom
/// vertices of d, else 0; f sends a bottom vertex to its top neighbour.
RepMatrix rho_diagram(int k, const PlanarDiagram& d);

/// Linear extension of rho_diagram.
RepMatrix rho_element(int k, const AlgebraElement& x);

/// Product of rho_k of the generator images, letter by letter.
RepMatrix rho_word(int k, const BraidWord& w, const FamilySpec& spec);

inline constexpr int kIsomorphismCap = 4;

/// Dimension count, injectivity (and linear independence) of the joint map
/// d -> (rho_0(d), ..., rho_n(d)), and multiplicativity: exhaustive for
/// n <= 3, `random_pairs` seeded pairs for n = 4. Throws CapExceeded for
/// n > kIsomorphismCap.
Report isomorphism_check(int n, std::uint64_t seed = 1,
                         int random_pairs = 300);

/// Target subset and scalar predicted for rho_k(phi_1(w)) v_S.
struct LambdaValue {
  StrandSet target;
  LaurentPoly scalar;
  int red_red = 0;
  int red_green = 0;
};

/// T = pi(w)(S), scalar = M^r (UV)^{r'} (U V^-1)^{sum T - sum S}.
LambdaValue lambda_formula(const BraidWord& w, StrandSet s);

/// Checks rho_k(phi_1(w)) v_S = lambda v_T entrywise for every k and S.
Report colored_formula_check(const BraidWord& w);

/// Both sides of tr^beta(x) = sum_k (beta-1)^k trace(rho_k(x)).
struct TraceDecomposition {
  LaurentPoly bubble;
  LaurentPoly via_matrices;
};
TraceDecomposition trace_decomposition(const LaurentPoly& beta,
                                       const AlgebraElement& x);

/// The decomposition identity on `samples` seeded random elements of CP_n
/// with symbolic beta = M. Throws CapExceeded for n > kIsomorphismCap.
Report trace_decomposition_check(int n, std::uint64_t seed = 1,
                                 int samples = 10);

/// For every k and every S fixed by pi(w): the diagonal entry of
/// rho_k(phi_1(w)) at S matches lambda_formula, and the exponents r, r'
/// recomputed from link_data (component self-writhes and linking numbers)
/// agree with the direct colouring counts.
Report linking_dependence_check(const BraidWord& w);

}  // namespace rookbraid
