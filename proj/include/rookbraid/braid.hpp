#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rookbraid/poly.hpp"

namespace rookbraid {

/// A subset of strand labels {1..n}, n <= 31, as a bitmask (bit i-1 <-> i).
class StrandSet {
 public:
  constexpr StrandSet() = default;
  constexpr explicit StrandSet(std::uint32_t bits) : bits_(bits) {}
  static StrandSet of(std::initializer_list<int> labels);
  static StrandSet from_labels(const std::vector<int>& labels);

  std::uint32_t bits() const { return bits_; }
  bool contains(int label) const { return (bits_ >> (label - 1)) & 1u; }
  void insert(int label) { bits_ |= 1u << (label - 1); }
  int size() const;
  /// Sum of the labels.
  int sum() const;
  bool subset_of(StrandSet other) const { return (bits_ & ~other.bits_) == 0; }
  std::vector<int> labels() const;
  /// "{1,3}"
  std::string to_string() const;

  friend auto operator<=>(const StrandSet&, const StrandSet&) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// All k-subsets of {1..n}, lexicographic in their sorted tuples.
std::vector<StrandSet> k_subsets(int n, int k);

/// A braid word on n strands. Letter k > 0 is sigma_k, k < 0 is
/// sigma_{|k|}^{-1}.
///
/// Geometric convention: the word is read top to bottom, matching the
/// algebra product phi(l1) phi(l2) ... where the left factor is stacked on
/// top. Strands start at the bottom, so they meet the last letter first.
class BraidWord {
 public:
  /// Throws BadToken for a zero letter, GeneratorOutOfRange if |k| >= n.
  BraidWord(int n, std::vector<int> letters = {});

  int n() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Concatenation u*v (u on top of v).
  friend BraidWord operator*(const BraidWord& u, const BraidWord& v);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  BraidWord inverse() const;
  /// Every letter's sign flipped (the mirror image).
  BraidWord mirrored() const;
  /// Adds an untouched strand on the right.
  BraidWord with_extra_strand() const;
  /// iota(w) sigma_n^{sign} in B_{n+1}.
  BraidWord stabilized(int sign) const;
  /// Cyclic rotation: moves the first `count` letters to the end.
  BraidWord rotated(std::size_t count) const;

  /// "1 -2 1"
  std::string to_string() const;

 private:
  int n_;
  std::vector<int> letters_;
};

/// Parses whitespace-separated nonzero integers. Throws BadToken or
/// GeneratorOutOfRange.
BraidWord parse_word(std::string_view text, int n);

/// Exponent sum.
int writhe(const BraidWord& w);

/// Underlying permutation as the composite tau_{l1} o ... o tau_{lm} of the
/// letters' adjacent transpositions; result[s-1] is the top position of the
/// strand starting at bottom position s.
std::vector<int> permutation(const BraidWord& w);

StrandSet apply_permutation(const std::vector<int>& perm, StrandSet s);

/// Component and crossing data of the closure.
struct LinkData {
  /// Cycles of the permutation, each sorted, ordered by smallest label.
  std::vector<std::vector<int>> components;
  /// component_of[s-1] = index of the component containing strand s.
  std::vector<int> component_of;
  /// Signed self-crossing count per component.
  std::vector<int> self_writhe;
  /// Half the signed crossing count between distinct components; zero on the
  /// diagonal.
  std::vector<std::vector<Rational>> linking;

  /// Components whose strands all lie in s (s must be a union of components).
  std::vector<int> components_within(StrandSet s) const;
};

LinkData link_data(const BraidWord& w);

/// Crossing counts for the colouring that makes strands starting in S green
/// and the others red.
struct ColoredCounts {
  int red_red = 0;      // r
  int red_green = 0;    // r'
  int green_green = 0;
  StrandSet image;      // T = pi(w)(S)
};

ColoredCounts colored_counts(const BraidWord& w, StrandSet green);

/// Uniformly random nonzero letters in [-(n-1), n-1]. Requires n >= 2 when
/// length > 0.
BraidWord random_word(int n, std::size_t length, std::mt19937_64& rng);

}  // namespace rookbraid
