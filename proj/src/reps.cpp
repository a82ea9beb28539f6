#include "rookbraid/reps.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "rookbraid/error.hpp"
#include "rookbraid/traces.hpp"

namespace rookbraid {

RepMatrix::RepMatrix(int n, int k)
    : n_(n), k_(k), basis_(k_subsets(n, k)) {
  if (k < 0 || k > n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "k = " + std::to_string(k) + " for n = " + std::to_string(n));
  }
  entries_.resize(basis_.size() * basis_.size());
}

RepMatrix RepMatrix::identity(int n, int k) {
  RepMatrix m(n, k);
  for (std::size_t i = 0; i < m.dim(); ++i) m.at(i, i) = 1;
  return m;
}

std::size_t RepMatrix::index_of(StrandSet s) const {
  // The basis is lexicographic in sorted tuples, which is not bitmask order,
  // so a binary search on StrandSet comparison would be wrong here.
  auto it = std::find(basis_.begin(), basis_.end(), s);
  if (it == basis_.end()) {
    throw Error(ErrorCode::IndexOutOfRange,
                s.to_string() + " is not a " + std::to_string(k_) + "-subset");
  }
  return static_cast<std::size_t>(it - basis_.begin());
}

LaurentPoly RepMatrix::trace() const {
  LaurentPoly t;
  for (std::size_t i = 0; i < dim(); ++i) t += at(i, i);
  return t;
}

void RepMatrix::check_shape(const RepMatrix& other) const {
  if (n_ != other.n_ || k_ != other.k_) {
    throw Error(ErrorCode::SizeMismatch, "representation matrices of different shape");
  }
}

RepMatrix& RepMatrix::operator+=(const RepMatrix& other) {
  check_shape(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

RepMatrix& RepMatrix::operator*=(const LaurentPoly& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
  a.check_shape(b);
  RepMatrix out(a.n_, a.k_);
  const std::size_t dim = a.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t l = 0; l < dim; ++l) {
      const auto& x = a.at(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        const auto& y = b.at(l, j);
        if (!y.is_zero()) out.at(i, j) += x * y;
      }
    }
  }
  return out;
}

std::string RepMatrix::to_string() const {
  std::ostringstream out;
  out << "basis:";
  for (const auto& s : basis_) out << ' ' << s.to_string();
  out << '\n';
  for (std::size_t i = 0; i < dim(); ++i) {
    out << '[';
    for (std::size_t j = 0; j < dim(); ++j) {
      if (j) out << ", ";
      out << at(i, j).to_string();
    }
    out << "]\n";
  }
  return out.str();
}

RepMatrix rho_diagram(int k, const PlanarDiagram& d) {
  RepMatrix m(d.n(), k);
  const StrandSet bottoms(d.bottom_mask());
  for (std::size_t col = 0; col < m.dim(); ++col) {
    const StrandSet s = m.basis()[col];
    if (!s.subset_of(bottoms)) continue;
    StrandSet image;
    for (int b : s.labels()) image.insert(*d.image(b));
    m.at(m.index_of(image), col) = 1;
  }
  return m;
}

RepMatrix rho_element(int k, const AlgebraElement& x) {
  RepMatrix m(x.n(), k);
  for (const auto& [d, coef] : x.terms()) {
    RepMatrix term = rho_diagram(k, d);
    term *= coef;
    m += term;
  }
  return m;
}

RepMatrix rho_word(int k, const BraidWord& w, const FamilySpec& spec) {
  const auto coeffs = family_coefficients(spec);
  RepMatrix m = RepMatrix::identity(w.n(), k);
  for (int letter : w.letters()) {
    m = m * rho_element(k, phi_generator(coeffs, std::abs(letter),
                                         letter > 0 ? 1 : -1, w.n()));
  }
  return m;
}

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Rank over Q of 0/1 rows.
std::size_t rational_rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const mpq_class factor = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Report isomorphism_check(int n, std::uint64_t seed, int random_pairs) {
  if (n < 0 || n > kIsomorphismCap) {
    throw Error(ErrorCode::CapExceeded,
                "isomorphism_check needs n <= " + std::to_string(kIsomorphismCap));
  }
  Report report("direct sum of matrix algebras");
  const std::string tag = " (n=" + std::to_string(n) + ")";
  const auto diagrams = enumerate_planar(n);

  long long dims = 0;
  for (int k = 0; k <= n; ++k) dims += binomial(n, k) * binomial(n, k);
  const auto count = static_cast<long long>(diagrams.size());
  report.add("dimension: sum_k C(n,k)^2 = |P_n| = C(2n,n)" + tag,
             dims == count && count == binomial(2 * n, n),
             std::to_string(dims) + " = " + std::to_string(count) + " = " +
                 std::to_string(binomial(2 * n, n)));

  std::vector<std::vector<RepMatrix>> joint;
  joint.reserve(diagrams.size());
  for (const auto& d : diagrams) {
    std::vector<RepMatrix> images;
    for (int k = 0; k <= n; ++k) images.push_back(rho_diagram(k, d));
    joint.push_back(std::move(images));
  }

  std::set<std::vector<std::vector<int>>> signatures;
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& images : joint) {
    std::vector<std::vector<int>> sig;
    std::vector<mpq_class> row;
    for (const auto& m : images) {
      std::vector<int> flat;
      for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
          const int v = m.at(i, j).is_zero() ? 0 : 1;
          flat.push_back(v);
          row.emplace_back(v);
        }
      }
      sig.push_back(std::move(flat));
    }
    signatures.insert(std::move(sig));
    rows.push_back(std::move(row));
  }
  report.add("joint rho map injective on P_n" + tag,
             static_cast<long long>(signatures.size()) == count,
             std::to_string(signatures.size()) + " distinct images");
  const auto rank = rational_rank(std::move(rows));
  report.add("joint rho images linearly independent" + tag,
             static_cast<long long>(rank) == count,
             "rank " + std::to_string(rank));

  auto multiplicative = [&](std::size_t a, std::size_t b) {
    const auto product = compose(diagrams[a], diagrams[b]);
    for (int k = 0; k <= n; ++k) {
      if (rho_diagram(k, product) != joint[a][k] * joint[b][k]) return false;
    }
    return true;
  };
  std::size_t failures = 0;
  std::size_t checked = 0;
  if (n <= 3) {
    for (std::size_t a = 0; a < diagrams.size(); ++a) {
      for (std::size_t b = 0; b < diagrams.size(); ++b) {
        ++checked;
        if (!multiplicative(a, b)) ++failures;
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, diagrams.size() - 1);
    for (int t = 0; t < random_pairs; ++t) {
      ++checked;
      const std::size_t a = pick(rng);
      const std::size_t b = pick(rng);
      if (!multiplicative(a, b)) ++failures;
    }
  }
  report.add(std::string("rho_k multiplicative on ") +
                 (n <= 3 ? "all pairs" : "random pairs") + tag,
             failures == 0,
             std::to_string(checked) + " pairs, " + std::to_string(failures) +
                 " failures");
  return report;
}

LambdaValue lambda_formula(const BraidWord& w, StrandSet s) {
  const auto counts = colored_counts(w, s);
  LambdaValue out;
  out.target = counts.image;
  out.red_red = counts.red_red;
  out.red_green = counts.red_green;
  const int shift = counts.image.sum() - s.sum();
  out.scalar = LaurentPoly::monomial(
      {counts.red_green + shift, counts.red_green - shift, counts.red_red});
  return out;
}

Report colored_formula_check(const BraidWord& w) {
  Report report("colored braid scalars for " + w.to_string());
  const auto phi1 = FamilySpec::make(1);
  const auto image = phi_word(phi1, w);
  for (int k = 0; k <= w.n(); ++k) {
    const RepMatrix m = rho_element(k, image);
    const bool functorial = m == rho_word(k, w, phi1);
    std::string detail;
    bool ok = functorial;
    if (!functorial) detail = "rho_k(phi(w)) differs from product of generator images";
    for (std::size_t col = 0; col < m.dim() && ok; ++col) {
      const StrandSet s = m.basis()[col];
      const auto lambda = lambda_formula(w, s);
      const std::size_t target = m.index_of(lambda.target);
      for (std::size_t row = 0; row < m.dim(); ++row) {
        const LaurentPoly expected = row == target ? lambda.scalar : LaurentPoly();
        if (m.at(row, col) != expected) {
          ok = false;
          detail = "CheckFailed: S = " + s.to_string() + ", row " +
                   m.basis()[row].to_string() + ": matrix " +
                   m.at(row, col).to_string() + " vs formula " + expected.to_string();
          break;
        }
      }
    }
    report.add("k=" + std::to_string(k), ok, detail);
  }
  return report;
}

TraceDecomposition trace_decomposition(const LaurentPoly& beta,
                                       const AlgebraElement& x) {
  TraceDecomposition out;
  out.bubble = bubble_trace(beta, x);
  const LaurentPoly shifted = beta - 1;
  LaurentPoly power = 1;
  for (int k = 0; k <= x.n(); ++k) {
    out.via_matrices += power * rho_element(k, x).trace();
    power *= shifted;
  }
  return out;
}

Report trace_decomposition_check(int n, std::uint64_t seed, int samples) {
  if (n < 0 || n > kIsomorphismCap) {
    throw Error(ErrorCode::CapExceeded,
                "trace_decomposition_check needs n <= " +
                    std::to_string(kIsomorphismCap));
  }
  Report report("bubble trace as a combination of matrix traces");
  std::mt19937_64 rng(seed);
  const LaurentPoly beta = LaurentPoly::M();
  int failures = 0;
  std::string detail;
  for (int t = 0; t < samples; ++t) {
    const auto x = random_element(n, 8, rng);
    const auto sides = trace_decomposition(beta, x);
    if (sides.bubble != sides.via_matrices) {
      ++failures;
      detail = "CheckFailed: " + sides.bubble.to_string() + " vs " +
               sides.via_matrices.to_string();
    }
  }
  report.add("tr^beta = sum_k (beta-1)^k tr rho_k on " + std::to_string(samples) +
                 " random elements (n=" + std::to_string(n) + ")",
             failures == 0, detail);
  return report;
}

Report linking_dependence_check(const BraidWord& w) {
  Report report("linking-number dependence for " + w.to_string());
  const auto perm = permutation(w);
  const auto links = link_data(w);
  const auto image = phi_word(FamilySpec::make(1), w);

  for (int k = 0; k <= w.n(); ++k) {
    const RepMatrix m = rho_element(k, image);
    bool ok = true;
    std::string detail;
    int fixed = 0;
    for (std::size_t idx = 0; idx < m.dim() && ok; ++idx) {
      const StrandSet s = m.basis()[idx];
      if (apply_permutation(perm, s) != s) continue;
      ++fixed;
      const auto lambda = lambda_formula(w, s);
      const LaurentPoly& diagonal = m.at(idx, idx);
      if (diagonal != lambda.scalar) {
        ok = false;
        detail = "CheckFailed: S = " + s.to_string() + " diagonal " +
                 diagonal.to_string() + " vs formula " + lambda.scalar.to_string();
        break;
      }

      const auto green = links.components_within(s);
      std::vector<bool> is_green(links.components.size(), false);
      for (int c : green) is_green[c] = true;
      Rational red_red = 0;
      Rational red_green = 0;
      for (std::size_t a = 0; a < links.components.size(); ++a) {
        if (!is_green[a]) red_red += links.self_writhe[a];
        for (std::size_t b = a + 1; b < links.components.size(); ++b) {
          const Rational twice = 2 * links.linking[a][b];
          if (!is_green[a] && !is_green[b]) red_red += twice;
          if (is_green[a] != is_green[b]) red_green += twice;
        }
      }
      // T = S here, so the sqrt(c/d) factor is 1.
      const int rg = static_cast<int>(red_green.get_num().get_si());
      const int rr = static_cast<int>(red_red.get_num().get_si());
      const LaurentPoly from_links = LaurentPoly::monomial({rg, rg, rr});
      if (red_red != lambda.red_red || red_green != lambda.red_green ||
          from_links != diagonal) {
        ok = false;
        detail = "CheckFailed: S = " + s.to_string() + " link data gives r = " +
                 red_red.get_str() + ", r' = " + red_green.get_str() +
                 " but colouring gives r = " + std::to_string(lambda.red_red) +
                 ", r' = " + std::to_string(lambda.red_green);
      }
    }
    report.add("k=" + std::to_string(k) + " (" + std::to_string(fixed) +
                   " fixed subsets)",
               ok, detail);
  }
  return report;
}

}  // namespace rookbraid
