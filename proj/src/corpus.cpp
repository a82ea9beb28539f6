#include "rookbraid/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "rookbraid/error.hpp"
#include "rookbraid/invariants.hpp"
#include "rookbraid/oracle.hpp"

namespace rookbraid {

namespace {

using Json = nlohmann::ordered_json;

CorpusEntry entry_from_json(const Json& record, std::size_t line) {
  const std::string where = "line " + std::to_string(line) + ": ";
  try {
    CorpusEntry entry;
    entry.name = record.at("name").get<std::string>();
    entry.word = BraidWord(record.at("n").get<int>(),
                           record.at("word").get<std::vector<int>>());
    entry.jones_q = QPoly::parse(record.at("jones_q").get<std::string>());
    entry.alexander_q = QPoly::parse(record.at("alexander_q").get<std::string>());
    return entry;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::CorpusFormat, where + e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::CorpusFormat, where + e.what());
  }
}

}  // namespace

std::vector<std::pair<std::string, BraidWord>> standard_links() {
  return {
      {"unknot", BraidWord(1)},
      {"unknot_b2", BraidWord(2, {1})},
      {"unlink2", BraidWord(2)},
      {"unlink3", BraidWord(3)},
      {"hopf_positive", BraidWord(2, {1, 1})},
      {"hopf_negative", BraidWord(2, {-1, -1})},
      {"trefoil_right", BraidWord(2, {1, 1, 1})},
      {"trefoil_left", BraidWord(2, {-1, -1, -1})},
      {"figure_eight", BraidWord(3, {1, -2, 1, -2})},
      {"cinquefoil", BraidWord(2, {1, 1, 1, 1, 1})},
      {"borromean", BraidWord(3, {1, -2, 1, -2, 1, -2})},
  };
}

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> entries;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json record;
    try {
      record = Json::parse(text);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::CorpusFormat,
                  "line " + std::to_string(line) + ": " + e.what());
    }
    entries.push_back(entry_from_json(record, line));
  }
  return entries;
}

std::vector<CorpusEntry> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::CorpusFormat, "cannot open " + path);
  return parse_corpus(in);
}

void write_corpus(std::ostream& out, const std::vector<CorpusEntry>& entries) {
  for (const auto& e : entries) {
    Json record;
    record["name"] = e.name;
    record["n"] = e.word.n();
    record["word"] = e.word.letters();
    record["jones_q"] = e.jones_q.to_string();
    record["alexander_q"] = e.alexander_q.to_string();
    out << record.dump() << '\n';
  }
}

std::vector<CorpusEntry> oracle_corpus() {
  std::vector<CorpusEntry> entries;
  for (const auto& [name, word] : standard_links()) {
    entries.push_back({name, word, oracle::kauffman_jones(word),
                       normalize_units(oracle::burau_alexander(word))});
  }
  return entries;
}

Report check_corpus_against_oracles(const std::vector<CorpusEntry>& entries) {
  Report report("frozen corpus vs oracles");
  for (const auto& e : entries) {
    const QPoly jones = oracle::kauffman_jones(e.word);
    report.add(e.name + " jones (state sum)", jones == e.jones_q,
               "state sum gives " + jones.to_string() + ", frozen " +
                   e.jones_q.to_string());
    const QPoly alex = oracle::burau_alexander(e.word);
    report.add(e.name + " alexander (Burau)",
               oracle::equal_up_to_units(alex, e.alexander_q, true),
               "Burau gives " + alex.to_string() + ", frozen " +
                   e.alexander_q.to_string());
  }
  return report;
}

Report check_corpus_against_engine(const std::vector<CorpusEntry>& entries) {
  Report report("frozen corpus vs engine");
  for (const auto& e : entries) {
    const QPoly j = jones(e.word);
    report.add(e.name + " jones", j == e.jones_q,
               "engine gives " + j.to_string() + ", frozen " +
                   e.jones_q.to_string());
    const QPoly a = alexander(e.word);
    report.add(e.name + " alexander",
               oracle::equal_up_to_units(a, e.alexander_q, true),
               "engine gives " + a.to_string() + ", frozen " +
                   e.alexander_q.to_string());
  }
  return report;
}

}  // namespace rookbraid
