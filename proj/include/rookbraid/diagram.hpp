#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace rookbraid {

/// An edge joining bottom vertex `bottom` to top vertex `top` (1-based).
struct Edge {
  int bottom = 0;
  int top = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// True iff the edges form an order-preserving partial injection on
/// {1..n}: labels in range and, sorted by bottom label, both bottom and top
/// labels strictly increasing. This is exactly crossing-free drawability.
bool is_planar(int n, std::vector<Edge> edges);

/// A planar rook diagram on n strands, stored as its sorted edge list.
/// Read as a partial map bottom -> top.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  /// Throws NotPlanar if the edges do not define a planar rook diagram.
  PlanarDiagram(int n, std::vector<Edge> edges);

  static PlanarDiagram identity(int n);
  static PlanarDiagram empty(int n);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Top neighbour of a bottom vertex, if any.
  std::optional<int> image(int bottom) const;
  /// Bitmask of edge-incident bottom vertices (bit i-1 for vertex i).
  unsigned bottom_mask() const;
  unsigned top_mask() const;

  /// Number of edges (i, i).
  int vertical_line_count() const;

  /// "n; b1->t1, b2->t2"
  std::string to_string() const;

  friend auto operator<=>(const PlanarDiagram&, const PlanarDiagram&) = default;

 private:
  struct Trusted {};
  PlanarDiagram(Trusted, int n, std::vector<Edge> edges)
      : n_(n), edges_(std::move(edges)) {}
  friend PlanarDiagram compose(const PlanarDiagram&, const PlanarDiagram&);

  int n_ = 0;
  std::vector<Edge> edges_;
};

/// d1 stacked on top of d2 (the product d1 d2): as partial maps, d1 after d2.
/// Throws SizeMismatch when strand counts differ.
PlanarDiagram compose(const PlanarDiagram& top, const PlanarDiagram& bottom);

/// Places d2 to the right of d1.
PlanarDiagram tensor(const PlanarDiagram& left, const PlanarDiagram& right);

inline constexpr int kDefaultEnumerationCap = 6;

/// All planar rook diagrams on n strands, binomial(2n, n) of them, ordered by
/// edge count, then bottom set, then top set. Throws CapExceeded if n > cap.
std::vector<PlanarDiagram> enumerate_planar(int n,
                                            int cap = kDefaultEnumerationCap);

/// The fixed ordering d1..d6 of P_2:
/// empty, vertical at 1, slash 1->2, slash 2->1, vertical at 2, identity.
const std::array<PlanarDiagram, 6>& p2_basis();

}  // namespace rookbraid
