#include "rookbraid/braid.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "rookbraid/error.hpp"

namespace rookbraid {

StrandSet StrandSet::of(std::initializer_list<int> labels) {
  StrandSet s;
  for (int l : labels) s.insert(l);
  return s;
}

StrandSet StrandSet::from_labels(const std::vector<int>& labels) {
  StrandSet s;
  for (int l : labels) s.insert(l);
  return s;
}

int StrandSet::size() const { return std::popcount(bits_); }

int StrandSet::sum() const {
  int total = 0;
  for (int l : labels()) total += l;
  return total;
}

std::vector<int> StrandSet::labels() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if ((bits_ >> i) & 1u) out.push_back(i + 1);
  }
  return out;
}

std::string StrandSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int l : labels()) {
    if (!first) out << ',';
    first = false;
    out << l;
  }
  out << '}';
  return out.str();
}

std::vector<StrandSet> k_subsets(int n, int k) {
  std::vector<StrandSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    out.push_back(StrandSet::from_labels(idx));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

BraidWord::BraidWord(int n, std::vector<int> letters)
    : n_(n), letters_(std::move(letters)) {
  if (n < 1) {
    throw Error(ErrorCode::GeneratorOutOfRange, "strand count must be >= 1");
  }
  for (int k : letters_) {
    if (k == 0) throw Error(ErrorCode::BadToken, "zero is not a generator");
    if (std::abs(k) >= n) {
      throw Error(ErrorCode::GeneratorOutOfRange,
                  "generator " + std::to_string(k) + " needs |k| < n = " +
                      std::to_string(n));
    }
  }
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  if (u.n_ != v.n_) {
    throw Error(ErrorCode::SizeMismatch, "braid words on different strand counts");
  }
  std::vector<int> letters = u.letters_;
  letters.insert(letters.end(), v.letters_.begin(), v.letters_.end());
  return BraidWord(u.n_, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> letters(letters_.rbegin(), letters_.rend());
  for (int& k : letters) k = -k;
  return BraidWord(n_, std::move(letters));
}

BraidWord BraidWord::mirrored() const {
  std::vector<int> letters = letters_;
  for (int& k : letters) k = -k;
  return BraidWord(n_, std::move(letters));
}

BraidWord BraidWord::with_extra_strand() const {
  return BraidWord(n_ + 1, letters_);
}

BraidWord BraidWord::stabilized(int sign) const {
  std::vector<int> letters = letters_;
  letters.push_back(sign > 0 ? n_ : -n_);
  return BraidWord(n_ + 1, std::move(letters));
}

BraidWord BraidWord::rotated(std::size_t count) const {
  if (letters_.empty()) return *this;
  std::vector<int> letters = letters_;
  std::rotate(letters.begin(),
              letters.begin() + static_cast<long>(count % letters.size()),
              letters.end());
  return BraidWord(n_, std::move(letters));
}

std::string BraidWord::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ' ';
    out << letters_[i];
  }
  return out.str();
}

BraidWord parse_word(std::string_view text, int n) {
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    std::string_view token = text.substr(pos, end - pos);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || value == 0) {
      throw Error(ErrorCode::BadToken, "'" + std::string(token) + "'");
    }
    letters.push_back(value);
    pos = end;
  }
  return BraidWord(n, std::move(letters));
}

int writhe(const BraidWord& w) {
  int total = 0;
  for (int k : w.letters()) total += k > 0 ? 1 : -1;
  return total;
}

namespace {

// Walks the strands from the bottom (last letter) to the top, reporting each
// crossing as (strand at left position, strand at right position, sign)
// before the swap. Returns strand_at[p] = strand occupying top position p+1.
template <typename OnCrossing>
std::vector<int> walk_strands(const BraidWord& w, OnCrossing&& on_crossing) {
  std::vector<int> strand_at(w.n());
  std::iota(strand_at.begin(), strand_at.end(), 1);
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const int i = std::abs(*it) - 1;
    on_crossing(strand_at[i], strand_at[i + 1], *it > 0 ? 1 : -1);
    std::swap(strand_at[i], strand_at[i + 1]);
  }
  return strand_at;
}

}  // namespace

std::vector<int> permutation(const BraidWord& w) {
  const auto strand_at = walk_strands(w, [](int, int, int) {});
  std::vector<int> perm(w.n());
  for (int p = 0; p < w.n(); ++p) perm[strand_at[p] - 1] = p + 1;
  return perm;
}

StrandSet apply_permutation(const std::vector<int>& perm, StrandSet s) {
  StrandSet out;
  for (int l : s.labels()) out.insert(perm[l - 1]);
  return out;
}

std::vector<int> LinkData::components_within(StrandSet s) const {
  std::vector<int> out;
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (s.contains(components[c].front())) out.push_back(static_cast<int>(c));
  }
  return out;
}

LinkData link_data(const BraidWord& w) {
  const int n = w.n();
  const auto perm = permutation(w);

  LinkData data;
  data.component_of.assign(n, -1);
  for (int s = 1; s <= n; ++s) {
    if (data.component_of[s - 1] >= 0) continue;
    std::vector<int> cycle;
    for (int x = s; data.component_of[x - 1] < 0; x = perm[x - 1]) {
      data.component_of[x - 1] = static_cast<int>(data.components.size());
      cycle.push_back(x);
    }
    std::sort(cycle.begin(), cycle.end());
    data.components.push_back(std::move(cycle));
  }

  const std::size_t count = data.components.size();
  data.self_writhe.assign(count, 0);
  std::vector<std::vector<int>> signed_crossings(count,
                                                 std::vector<int>(count, 0));
  walk_strands(w, [&](int a, int b, int sign) {
    const int ca = data.component_of[a - 1];
    const int cb = data.component_of[b - 1];
    if (ca == cb) {
      data.self_writhe[ca] += sign;
    } else {
      signed_crossings[ca][cb] += sign;
      signed_crossings[cb][ca] += sign;
    }
  });

  data.linking.assign(count, std::vector<Rational>(count, 0));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j) continue;
      Rational lk(signed_crossings[i][j], 2);
      lk.canonicalize();
      if (lk.get_den() != 1) {
        throw Error(ErrorCode::CheckFailed,
                    "non-integral linking number in closure of " + w.to_string());
      }
      data.linking[i][j] = lk;
    }
  }
  return data;
}

ColoredCounts colored_counts(const BraidWord& w, StrandSet green) {
  ColoredCounts out;
  walk_strands(w, [&](int a, int b, int sign) {
    const bool ga = green.contains(a);
    const bool gb = green.contains(b);
    if (ga && gb) {
      out.green_green += sign;
    } else if (!ga && !gb) {
      out.red_red += sign;
    } else {
      out.red_green += sign;
    }
  });
  out.image = apply_permutation(permutation(w), green);
  return out;
}

BraidWord random_word(int n, std::size_t length, std::mt19937_64& rng) {
  if (length == 0) return BraidWord(n);
  if (n < 2) {
    throw Error(ErrorCode::GeneratorOutOfRange,
                "random letters need at least two strands");
  }
  std::uniform_int_distribution<int> pick(1, 2 * (n - 1));
  std::vector<int> letters(length);
  for (auto& k : letters) {
    const int r = pick(rng);
    k = r <= n - 1 ? r : -(r - (n - 1));
  }
  return BraidWord(n, std::move(letters));
}

}  // namespace rookbraid
