#pragma once

// Brute-force reference computations used by the unit tests. They work on
// plain std containers and do not call into the library's algorithms.

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace test_oracle {

using PartialMap = std::map<int, int>;  // bottom -> top

inline PartialMap compose_maps(const PartialMap& top, const PartialMap& bottom) {
  PartialMap out;
  for (const auto& [b, mid] : bottom) {
    auto it = top.find(mid);
    if (it != top.end()) out[b] = it->second;
  }
  return out;
}

// Every function {1..n} -> {0..n} (0 meaning "no edge"), kept when it is
// injective on its support and strictly increasing.
inline std::vector<PartialMap> all_planar_maps(int n) {
  std::vector<PartialMap> out;
  std::vector<int> image(n, 0);
  while (true) {
    PartialMap m;
    bool ok = true;
    int last = 0;
    for (int b = 1; b <= n && ok; ++b) {
      const int t = image[b - 1];
      if (t == 0) continue;
      if (t <= last) ok = false;
      last = t;
      m[b] = t;
    }
    if (ok) out.push_back(m);
    int pos = 0;
    while (pos < n && image[pos] == n) image[pos++] = 0;
    if (pos == n) break;
    ++image[pos];
  }
  return out;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace test_oracle
