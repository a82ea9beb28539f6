#include "rookbraid/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "rookbraid/error.hpp"

namespace rookbraid {

bool is_planar(int n, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.bottom < 1 || e.bottom > n || e.top < 1 || e.top > n) return false;
    if (i > 0) {
      const auto& prev = edges[i - 1];
      if (prev.bottom >= e.bottom || prev.top >= e.top) return false;
    }
  }
  return true;
}

PlanarDiagram::PlanarDiagram(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error(ErrorCode::NotPlanar, "negative strand count");
  std::sort(edges_.begin(), edges_.end());
  if (!is_planar(n_, edges_)) {
    throw Error(ErrorCode::NotPlanar, to_string());
  }
}

PlanarDiagram PlanarDiagram::identity(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({i, i});
  return PlanarDiagram(n, std::move(edges));
}

PlanarDiagram PlanarDiagram::empty(int n) { return PlanarDiagram(n, {}); }

std::optional<int> PlanarDiagram::image(int bottom) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), bottom,
      [](const Edge& e, int b) { return e.bottom < b; });
  if (it != edges_.end() && it->bottom == bottom) return it->top;
  return std::nullopt;
}

unsigned PlanarDiagram::bottom_mask() const {
  unsigned mask = 0;
  for (const auto& e : edges_) mask |= 1u << (e.bottom - 1);
  return mask;
}

unsigned PlanarDiagram::top_mask() const {
  unsigned mask = 0;
  for (const auto& e : edges_) mask |= 1u << (e.top - 1);
  return mask;
}

int PlanarDiagram::vertical_line_count() const {
  return static_cast<int>(std::count_if(
      edges_.begin(), edges_.end(),
      [](const Edge& e) { return e.bottom == e.top; }));
}

std::string PlanarDiagram::to_string() const {
  std::ostringstream out;
  out << n_ << ';';
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out << (i == 0 ? " " : ", ") << edges_[i].bottom << "->" << edges_[i].top;
  }
  return out.str();
}

PlanarDiagram compose(const PlanarDiagram& top, const PlanarDiagram& bottom) {
  if (top.n() != bottom.n()) {
    throw Error(ErrorCode::SizeMismatch,
                "compose: " + std::to_string(top.n()) + " vs " +
                    std::to_string(bottom.n()));
  }
  // top's map indexed by its bottom label
  std::vector<int> upper(top.n() + 1, 0);
  for (const auto& e : top.edges()) upper[e.bottom] = e.top;
  std::vector<Edge> edges;
  edges.reserve(bottom.edges().size());
  for (const auto& e : bottom.edges()) {
    if (int t = upper[e.top]; t != 0) edges.push_back({e.bottom, t});
  }
  // Composites of order-preserving maps are order preserving, and the edges
  // come out sorted by bottom label.
  return PlanarDiagram(PlanarDiagram::Trusted{}, top.n(), std::move(edges));
}

PlanarDiagram tensor(const PlanarDiagram& left, const PlanarDiagram& right) {
  std::vector<Edge> edges = left.edges();
  for (const auto& e : right.edges()) {
    edges.push_back({e.bottom + left.n(), e.top + left.n()});
  }
  return PlanarDiagram(left.n() + right.n(), std::move(edges));
}

namespace {

void subsets_of_size(int n, int k, int start, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (int i = start; i <= n; ++i) {
    current.push_back(i);
    subsets_of_size(n, k, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<PlanarDiagram> enumerate_planar(int n, int cap) {
  if (n > cap) {
    throw Error(ErrorCode::CapExceeded,
                "enumerate_planar: n = " + std::to_string(n) + " exceeds cap " +
                    std::to_string(cap));
  }
  std::vector<PlanarDiagram> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<std::vector<int>> sets;
    std::vector<int> current;
    subsets_of_size(n, k, 1, current, sets);
    for (const auto& bottoms : sets) {
      for (const auto& tops : sets) {
        std::vector<Edge> edges;
        for (int i = 0; i < k; ++i) edges.push_back({bottoms[i], tops[i]});
        out.emplace_back(n, std::move(edges));
      }
    }
  }
  return out;
}

const std::array<PlanarDiagram, 6>& p2_basis() {
  static const std::array<PlanarDiagram, 6> basis{
      PlanarDiagram(2, {}),
      PlanarDiagram(2, {{1, 1}}),
      PlanarDiagram(2, {{1, 2}}),
      PlanarDiagram(2, {{2, 1}}),
      PlanarDiagram(2, {{2, 2}}),
      PlanarDiagram(2, {{1, 1}, {2, 2}}),
  };
  return basis;
}

}  // namespace rookbraid
