#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rookbraid/braid.hpp"
#include "rookbraid/qpoly.hpp"
#include "rookbraid/report.hpp"

namespace rookbraid {

/// A frozen reference record: a named braid word with its oracle-computed
/// Jones polynomial and unit-normalized Alexander polynomial, both in q.
struct CorpusEntry {
  std::string name;
  BraidWord word{1};
  QPoly jones_q;
  QPoly alexander_q;
};

inline constexpr const char* kDefaultCorpusPath = "data/corpus.jsonl";

/// The named words that make up the reference corpus.
std::vector<std::pair<std::string, BraidWord>> standard_links();

/// One JSON object per line:
/// {"name", "n", "word", "jones_q", "alexander_q"}.
/// Blank lines are skipped. Throws CorpusFormat on malformed records.
std::vector<CorpusEntry> parse_corpus(std::istream& in);
std::vector<CorpusEntry> read_corpus(const std::string& path);
void write_corpus(std::ostream& out, const std::vector<CorpusEntry>& entries);

/// Computes every standard link with the state-sum and Burau oracles only.
std::vector<CorpusEntry> oracle_corpus();

/// Recomputes the oracles and compares with the frozen values.
Report check_corpus_against_oracles(const std::vector<CorpusEntry>& entries);

/// Runs the main engine on each record: Jones must match exactly, Alexander
/// up to units +-q^k (and q -> q^-1).
Report check_corpus_against_engine(const std::vector<CorpusEntry>& entries);

}  // namespace rookbraid
