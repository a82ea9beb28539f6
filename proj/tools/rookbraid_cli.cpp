// Command-line front end: invariants of braid closures, algebra images,
// representation matrices, verification suites and the reference corpus.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rookbraid/corpus.hpp"
#include "rookbraid/error.hpp"
#include "rookbraid/homs.hpp"
#include "rookbraid/invariants.hpp"
#include "rookbraid/reps.hpp"
#include "rookbraid/verify.hpp"

namespace {

using namespace rookbraid;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadToken:
    case ErrorCode::GeneratorOutOfRange:
    case ErrorCode::BadFamily:
    case ErrorCode::BadPartition:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::CapExceeded:
    case ErrorCode::SizeMismatch:
      return true;
    default:
      return false;
  }
}

Json linking_json(const LinkData& data) {
  Json rows = Json::array();
  for (const auto& row : data.linking) {
    Json out = Json::array();
    for (const auto& value : row) out.push_back(value.get_num().get_si());
    rows.push_back(out);
  }
  return rows;
}

std::string linking_text(const LinkData& data) {
  std::string out = "components:";
  for (const auto& comp : data.components) {
    out += " {";
    for (std::size_t i = 0; i < comp.size(); ++i) {
      out += (i ? "," : "") + std::to_string(comp[i]);
    }
    out += "}";
  }
  out += "\nself-writhe:";
  for (int s : data.self_writhe) out += " " + std::to_string(s);
  out += "\nlinking:\n";
  for (const auto& row : data.linking) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      out += (j ? " " : "") + row[j].get_str();
    }
    out += "\n";
  }
  return out;
}

int run_invariant(int n, const std::string& text, const std::string& kind,
                  bool as_json) {
  const BraidWord w = parse_word(text, n);
  const LinkData data = linking_profile(w);
  std::string polynomial;
  if (kind == "jones") polynomial = jones(w).to_string();
  if (kind == "alexander") polynomial = alexander(w).to_string();

  if (as_json) {
    Json out;
    out["kind"] = kind;
    out["n"] = n;
    out["word"] = w.letters();
    out["polynomial"] = kind == "linking" ? Json(nullptr) : Json(polynomial);
    out["linking"] = linking_json(data);
    std::cout << out.dump() << '\n';
  } else if (kind == "linking") {
    std::cout << linking_text(data);
  } else {
    std::cout << polynomial << '\n';
  }
  return kExitOk;
}

int print_report(const Report& report) {
  std::cout << report.render();
  std::cout << (report.ok() ? "OK" : "FAILED") << '\n';
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int run_corpus(bool regenerate, const std::string& path,
               const std::string& against) {
  if (regenerate) {
    const auto entries = oracle_corpus();
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::CorpusFormat, "cannot write " + path);
    write_corpus(out, entries);
    std::cout << "wrote " << entries.size() << " records to " << path << '\n';
    return kExitOk;
  }
  const auto entries = read_corpus(path);
  Report report("corpus");
  if (against != "engine") report.merge(check_corpus_against_oracles(entries));
  if (against != "oracles") report.merge(check_corpus_against_engine(entries));
  return print_report(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rookbraid: braid group images in the planar rook algebra and the link "
      "invariants of braid closures.\n"
      "Polynomials are in q = sqrt(cd) with t = q^2 and q = -t^(1/2); sigma_i "
      "is a positive crossing, so sigma_1^3 has Jones q^2 + q^6 - q^8. "
      "Alexander polynomials are reported up to units +-q^k.\n"
      "Words are whitespace-separated signed generator indices; quote them and "
      "use --word=\"-1 2\" when the word starts with a minus sign."};
  app.require_subcommand(1);

  int n = 2;
  std::string word;
  auto add_word_options = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "strand count")->required()->check(CLI::Range(1, 31));
    cmd->add_option("--word", word, "braid word, e.g. \"1 -2 1\"");
  };

  auto* invariant = app.add_subcommand("invariant", "Jones, Alexander or linking data");
  add_word_options(invariant);
  std::string kind = "jones";
  bool as_json = false;
  invariant->add_option("--kind", kind)
      ->check(CLI::IsMember({"jones", "alexander", "linking"}));
  invariant->add_flag("--json", as_json, "machine-readable output");

  auto* image = app.add_subcommand("image", "image of a word in the rook algebra");
  add_word_options(image);
  int family = 5;
  bool rescaled = false;
  image->add_option("--family", family, "homomorphism family 1..5");
  image->add_flag("--rescaled", rescaled, "family 2 scaled by 1/sqrt(cd)");

  auto* rep = app.add_subcommand("rep", "matrix of rho_k applied to a word's image");
  add_word_options(rep);
  int k = 1;
  int rep_family = 1;
  rep->add_option("--k", k, "subset size")->required();
  rep->add_option("--family", rep_family, "homomorphism family 1..5");

  auto* verify = app.add_subcommand("verify", "run a named property suite");
  SuiteOptions suite;
  verify->add_option("--suite", suite.suite)->required()->check(
      CLI::IsMember(suite_names()));
  verify->add_option("--family", suite.family, "0 for every family");
  verify->add_flag("--rescaled", suite.rescaled);
  verify->add_option("--n", suite.n, "strand count");
  verify->add_option("--seed", suite.seed, "seed for randomized checks");
  verify->add_option("--samples", suite.samples, "random cases per property");

  auto* corpus = app.add_subcommand("corpus", "regenerate or check the reference corpus");
  bool regenerate = false;
  bool check = false;
  std::string corpus_path = kDefaultCorpusPath;
  std::string against = "both";
  auto* regen_flag = corpus->add_flag("--regenerate", regenerate,
                                      "recompute every record with the oracles");
  corpus->add_flag("--check", check, "compare the frozen file")->excludes(regen_flag);
  corpus->add_option("--corpus", corpus_path, "JSONL corpus file");
  corpus->add_option("--against", against, "oracles, engine or both")
      ->check(CLI::IsMember({"oracles", "engine", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*invariant) return run_invariant(n, word, kind, as_json);
    if (*image) {
      const FamilySpec spec = FamilySpec::make(family, rescaled);
      std::cout << phi_word(spec, parse_word(word, n)).to_string();
      return kExitOk;
    }
    if (*rep) {
      if (k < 0 || k > n) {
        throw Error(ErrorCode::IndexOutOfRange, "--k must lie in 0..n");
      }
      const FamilySpec spec = FamilySpec::make(rep_family);
      std::cout << rho_word(k, parse_word(word, n), spec).to_string();
      return kExitOk;
    }
    if (*verify) return print_report(run_suite(suite));
    if (*corpus) {
      if (!regenerate && !check) {
        std::cerr << "corpus: pass --regenerate or --check\n";
        return kExitUsage;
      }
      return run_corpus(regenerate, corpus_path, against);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_usage_error(e.code()) ? kExitUsage : kExitCheckFailed;
  }
  return kExitUsage;
}
