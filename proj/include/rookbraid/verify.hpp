#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rookbraid/braid.hpp"
#include "rookbraid/corpus.hpp"
#include "rookbraid/report.hpp"

namespace rookbraid {

/// Seeded property suites. Each returns a Report with one line per named
/// property; none of them throws on a failed property.

/// phi_5(x s) - cd phi_5(x s^-1) = (1 - cd) phi_5(x) and, for the rescaled
/// phi_2, phi_2(x s) - phi_2(x s^-1) = (U^-1 V^-1 - UV) phi_2(x), on
/// `samples` random x in B_n with a random generator s.
Report skein_check(int n, int samples, std::uint64_t seed);

/// (phi_5(s) - 1)(phi_5(s) + cd) = 0, plus the rank of
/// {phi(s)^2, phi(s), 1} for every family (rank 3 only for family 1).
Report hecke_check();

/// Tr5 under conjugation u v -> v u and stabilization by sigma_n^{+-1}.
Report markov5_check(int n, int samples, std::uint64_t seed);

/// Tr2: its skein relation, and (empirically) conjugation and
/// stabilization invariance.
Report trace2_check(int n, int samples, std::uint64_t seed);

/// Every ordered composition of n into parts: Tr2 of the block braid is 0
/// unless there is a single part, where it is 1.
Report block_braid_check(int n);

/// bubble and single-line traces satisfy tr(xy) = tr(yx) on random elements.
Report trace_cyclicity_check(int n, int samples, std::uint64_t seed);

/// Jones skein q^-2 J(x s) - q^2 J(x s^-1) = (q^-1 - q) J(x), and the mirror
/// rule J(mirror w)(q) = J(w)(q^-1).
Report jones_relations_check(int n, int samples, std::uint64_t seed);

/// colored_formula_check on random words of B_n.
Report colored_suite(int n, int samples, std::uint64_t seed);

/// linking_dependence_check on random words of B_n.
Report linking_suite(int n, int samples, std::uint64_t seed);

/// All ordered compositions of n.
std::vector<std::vector<int>> compositions(int n);

inline constexpr int kRewriteMaxStrands = 5;
inline constexpr std::size_t kRewriteMaxLength = 12;

/// Applies one to three random Markov moves (rotation, conjugation by a
/// generator, stabilization, destabilization) while keeping n <= 5 and the
/// length <= 12.
BraidWord random_markov_rewrite(const BraidWord& w, std::mt19937_64& rng);

/// For every entry, `rewrites` random rewrites must keep jones exactly and
/// alexander up to units.
Report markov_rewrite_check(const std::vector<CorpusEntry>& entries,
                            int rewrites, std::uint64_t seed);

/// Options for the named CLI suites.
struct SuiteOptions {
  std::string suite;
  int family = 0;  // 0 means every family
  bool rescaled = false;
  int n = 3;
  std::uint64_t seed = 1;
  int samples = 50;
};

/// relations, traces, reps, vip, duality, skein.
const std::vector<std::string>& suite_names();

/// Throws BadFamily / CapExceeded for out-of-range options and CheckFailed
/// for an unknown suite name.
Report run_suite(const SuiteOptions& options);

}  // namespace rookbraid
