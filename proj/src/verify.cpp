#include "rookbraid/verify.hpp"

#include <algorithm>

#include "rookbraid/error.hpp"
#include "rookbraid/homs.hpp"
#include "rookbraid/invariants.hpp"
#include "rookbraid/oracle.hpp"
#include "rookbraid/reps.hpp"
#include "rookbraid/traces.hpp"

namespace rookbraid {

namespace {

// Collects many instances of one property into a single report line.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void record(bool ok, const std::string& context) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (first_failure_.empty()) first_failure_ = context;
  }

  void flush(Report& report) const {
    const std::string label = name_ + " [" + std::to_string(checked_) + " cases]";
    report.add(label, failed_ == 0 && checked_ > 0,
               checked_ == 0 ? "no cases ran"
                             : std::to_string(failed_) + " failed, first: " +
                                   first_failure_);
  }

 private:
  std::string name_;
  int checked_ = 0;
  int failed_ = 0;
  std::string first_failure_;
};

std::string describe(const BraidWord& w) {
  return "n=" + std::to_string(w.n()) + " word=[" + w.to_string() + "]";
}

int random_generator(int n, std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(1, n - 1)(rng);
}

BraidWord random_word_upto(int n, std::size_t max_length, std::mt19937_64& rng) {
  if (n < 2) return BraidWord(n);
  // Length at least one so that no sampled case is vacuous.
  const auto length =
      std::uniform_int_distribution<std::size_t>(1, max_length)(rng);
  return random_word(n, length, rng);
}

void require_strands(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw Error(ErrorCode::CapExceeded,
                std::string(what) + " needs " + std::to_string(lo) +
                    " <= n <= " + std::to_string(hi));
  }
}

constexpr std::size_t kSkeinWordLength = 8;
constexpr std::size_t kMarkovWordLength = 6;

}  // namespace

Report skein_check(int n, int samples, std::uint64_t seed) {
  require_strands(n, 2, 5, "skein_check");
  std::mt19937_64 rng(seed);
  const auto jones_coeffs = family_coefficients(FamilySpec::make(5));
  const auto alex_coeffs = family_coefficients(FamilySpec::make(2, true));
  const LaurentPoly cd = LaurentPoly::UV(2);
  const LaurentPoly alex_scalar = LaurentPoly::UV(-1) - LaurentPoly::UV(1);

  Tally jones_skein("phi5 skein: X s - cd X s^-1 = (1 - cd) X, n=" +
                    std::to_string(n));
  Tally alex_skein("rescaled phi2 skein: X s - X s^-1 = (1/UV - UV) X, n=" +
                   std::to_string(n));
  for (int sample = 0; sample < samples; ++sample) {
    const BraidWord x = random_word_upto(n, kSkeinWordLength, rng);
    const int i = random_generator(n, rng);
    const std::string ctx = describe(x) + " i=" + std::to_string(i);

    const AlgebraElement p5 = phi_word(jones_coeffs, x);
    const AlgebraElement lhs5 = p5 * phi_generator(jones_coeffs, i, 1, n) -
                                cd * (p5 * phi_generator(jones_coeffs, i, -1, n));
    jones_skein.record(lhs5 == (1 - cd) * p5, ctx);

    const AlgebraElement p2 = phi_word(alex_coeffs, x);
    const AlgebraElement lhs2 = p2 * phi_generator(alex_coeffs, i, 1, n) -
                                p2 * phi_generator(alex_coeffs, i, -1, n);
    alex_skein.record(lhs2 == alex_scalar * p2, ctx);
  }
  Report report("skein relations");
  jones_skein.flush(report);
  alex_skein.flush(report);
  return report;
}

Report hecke_check() {
  Report report("quadratic relations");
  const AlgebraElement one = AlgebraElement::identity(2);
  const AlgebraElement s = phi_generator(FamilySpec::make(5), 1, 1, 2);
  const AlgebraElement product = (s - one) * (s + LaurentPoly::UV(2) * one);
  report.add("(phi5(s) - 1)(phi5(s) + cd) = 0", product.is_zero(),
             "product is\n" + product.to_string());

  for (int family = 1; family <= 5; ++family) {
    const int rank = quadratic_span_rank(FamilySpec::make(family));
    const int expected = family == 1 ? 3 : 2;
    report.add("rank of {phi" + std::to_string(family) + "(s)^2, phi" +
                   std::to_string(family) + "(s), 1} is " +
                   std::to_string(expected),
               rank == expected, "rank " + std::to_string(rank));
  }
  return report;
}

Report markov5_check(int n, int samples, std::uint64_t seed) {
  require_strands(n, 1, 4, "markov5_check");
  std::mt19937_64 rng(seed);
  Tally conj("Tr5 conjugation, n=" + std::to_string(n));
  Tally stab_pos("Tr5 positive stabilization, n=" + std::to_string(n));
  Tally stab_neg("Tr5 negative stabilization, n=" + std::to_string(n));
  for (int sample = 0; sample < samples; ++sample) {
    const BraidWord u = random_word_upto(n, kMarkovWordLength, rng);
    const BraidWord v = random_word_upto(n, kMarkovWordLength, rng);
    conj.record(markov_trace_5(u * v) == markov_trace_5(v * u),
                describe(u) + " | " + describe(v));
    const LaurentPoly base = markov_trace_5(u);
    stab_pos.record(markov_trace_5(u.stabilized(1)) == base, describe(u));
    stab_neg.record(markov_trace_5(u.stabilized(-1)) == base, describe(u));
  }
  Report report("Tr5 Markov moves");
  conj.flush(report);
  stab_pos.flush(report);
  stab_neg.flush(report);
  return report;
}

Report trace2_check(int n, int samples, std::uint64_t seed) {
  require_strands(n, 2, 4, "trace2_check");
  std::mt19937_64 rng(seed);
  const LaurentPoly scalar = LaurentPoly::UV(-1) - LaurentPoly::UV(1);
  Tally skein("Tr2 skein, n=" + std::to_string(n));
  Tally conj("Tr2 conjugation (empirical), n=" + std::to_string(n));
  Tally stab("Tr2 stabilization (empirical), n=" + std::to_string(n));
  for (int sample = 0; sample < samples; ++sample) {
    const BraidWord x = random_word_upto(n, kMarkovWordLength, rng);
    const int i = random_generator(n, rng);
    const BraidWord pos(n, {i});
    const BraidWord neg(n, {-i});
    const LaurentPoly base = trace_2(x);
    skein.record(trace_2(x * pos) - trace_2(x * neg) == scalar * base,
                 describe(x) + " i=" + std::to_string(i));

    const BraidWord v = random_word_upto(n, kMarkovWordLength, rng);
    conj.record(trace_2(x * v) == trace_2(v * x), describe(x) + " | " + describe(v));
    const int sign = sample % 2 == 0 ? 1 : -1;
    stab.record(trace_2(x.stabilized(sign)) == base,
                describe(x) + " sign=" + std::to_string(sign));
  }
  Report report("Tr2 relations");
  skein.flush(report);
  conj.flush(report);
  stab.flush(report);
  return report;
}

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n < 1) return out;
  // Each of the n-1 gaps between consecutive points is either a cut or not.
  for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    std::vector<int> parts;
    int current = 1;
    for (int gap = 0; gap < n - 1; ++gap) {
      if ((cuts >> gap) & 1u) {
        parts.push_back(current);
        current = 1;
      } else {
        ++current;
      }
    }
    parts.push_back(current);
    out.push_back(std::move(parts));
  }
  return out;
}

Report block_braid_check(int n) {
  require_strands(n, 1, 5, "block_braid_check");
  Report report("Tr2 of block braids, n=" + std::to_string(n));
  Tally vanishing("Tr2(tau) = 0 for compositions with several parts, n=" +
                  std::to_string(n));
  for (const auto& parts : compositions(n)) {
    const BraidWord tau = tau_lambda(parts);
    const LaurentPoly value = trace_2(tau);
    std::string ctx = "parts";
    for (int p : parts) ctx += " " + std::to_string(p);
    ctx += " gave " + value.to_string();
    if (parts.size() == 1) {
      report.add("Tr2(tau_(" + std::to_string(n) + ")) = 1", value == 1, ctx);
    } else {
      vanishing.record(value.is_zero(), ctx);
    }
  }
  if (n > 1) vanishing.flush(report);
  return report;
}

Report trace_cyclicity_check(int n, int samples, std::uint64_t seed) {
  require_strands(n, 1, 4, "trace_cyclicity_check");
  std::mt19937_64 rng(seed);
  Tally bubble("bubble trace tr(xy) = tr(yx), n=" + std::to_string(n));
  Tally single("single-line trace tr(xy) = tr(yx), n=" + std::to_string(n));
  const LaurentPoly beta = LaurentPoly::M();
  for (int sample = 0; sample < samples; ++sample) {
    const AlgebraElement x = random_element(n, 4, rng);
    const AlgebraElement y = random_element(n, 4, rng);
    const AlgebraElement xy = x * y;
    const AlgebraElement yx = y * x;
    const std::string ctx = "sample " + std::to_string(sample);
    bubble.record(bubble_trace(beta, xy) == bubble_trace(beta, yx), ctx);
    single.record(single_line_trace(xy) == single_line_trace(yx), ctx);
  }
  Report report("trace cyclicity");
  bubble.flush(report);
  single.flush(report);
  return report;
}

Report jones_relations_check(int n, int samples, std::uint64_t seed) {
  require_strands(n, 2, 5, "jones_relations_check");
  std::mt19937_64 rng(seed);
  Tally skein("Jones skein, n=" + std::to_string(n));
  Tally mirror("Jones mirror rule, n=" + std::to_string(n));
  const QPoly scalar = QPoly::monomial(-1) - QPoly::monomial(1);
  for (int sample = 0; sample < samples; ++sample) {
    const BraidWord x = random_word_upto(n, kMarkovWordLength, rng);
    const int i = random_generator(n, rng);
    const QPoly base = jones(x);
    const QPoly lhs = QPoly::monomial(-2) * jones(x * BraidWord(n, {i})) -
                      QPoly::monomial(2) * jones(x * BraidWord(n, {-i}));
    skein.record(lhs == scalar * base, describe(x) + " i=" + std::to_string(i));
    mirror.record(jones(x.mirrored()) == base.inverted(), describe(x));
  }
  Report report("Jones relations");
  skein.flush(report);
  mirror.flush(report);
  return report;
}

Report colored_suite(int n, int samples, std::uint64_t seed) {
  require_strands(n, 1, 4, "colored_suite");
  std::mt19937_64 rng(seed);
  Tally formula("rho_k(phi1(w)) v_S = lambda v_T, n=" + std::to_string(n));
  for (int sample = 0; sample < samples; ++sample) {
    const BraidWord w = random_word_upto(n, kSkeinWordLength, rng);
    const Report r = colored_formula_check(w);
    std::string detail = describe(w);
    for (const auto& o : r.outcomes()) {
      if (!o.passed) {
        detail += ": " + o.name + " " + o.detail;
        break;
      }
    }
    formula.record(r.ok(), detail);
  }
  Report report("colored crossing formula");
  formula.flush(report);
  return report;
}

Report linking_suite(int n, int samples, std::uint64_t seed) {
  require_strands(n, 1, 4, "linking_suite");
  std::mt19937_64 rng(seed);
  Tally linking("diagonal scalars from linking data, n=" + std::to_string(n));
  for (int sample = 0; sample < samples; ++sample) {
    const BraidWord w = random_word_upto(n, kSkeinWordLength, rng);
    const Report r = linking_dependence_check(w);
    std::string detail = describe(w);
    for (const auto& o : r.outcomes()) {
      if (!o.passed) {
        detail += ": " + o.name + " " + o.detail;
        break;
      }
    }
    linking.record(r.ok(), detail);
  }
  Report report("linking-number dependence");
  linking.flush(report);
  return report;
}

BraidWord random_markov_rewrite(const BraidWord& w, std::mt19937_64& rng) {
  BraidWord current = w;
  const int moves = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int step = 0; step < moves; ++step) {
    const int n = current.n();
    const auto& letters = current.letters();
    std::vector<int> options;  // 0 rotate, 1 conjugate, 2 stabilize, 3 destabilize
    if (current.length() > 1) options.push_back(0);
    if (n >= 2 && current.length() + 2 <= kRewriteMaxLength) options.push_back(1);
    if (n < kRewriteMaxStrands && current.length() + 1 <= kRewriteMaxLength) {
      options.push_back(2);
    }
    if (n >= 2 && !letters.empty() && std::abs(letters.back()) == n - 1 &&
        std::count_if(letters.begin(), letters.end(),
                      [n](int k) { return std::abs(k) == n - 1; }) == 1) {
      options.push_back(3);
    }
    if (options.empty()) break;
    const int move = options[std::uniform_int_distribution<std::size_t>(
        0, options.size() - 1)(rng)];
    switch (move) {
      case 0:
        current = current.rotated(std::uniform_int_distribution<std::size_t>(
            1, current.length() - 1)(rng));
        break;
      case 1: {
        const int g = random_generator(n, rng) *
                      (std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1);
        current = BraidWord(n, {g}) * current * BraidWord(n, {-g});
        break;
      }
      case 2:
        current = current.stabilized(
            std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1);
        break;
      default: {
        std::vector<int> shorter(letters.begin(), letters.end() - 1);
        current = BraidWord(n - 1, std::move(shorter));
        break;
      }
    }
  }
  return current;
}

Report markov_rewrite_check(const std::vector<CorpusEntry>& entries,
                            int rewrites, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Report report("invariants under random Markov rewrites");
  for (const auto& entry : entries) {
    Tally j(entry.name + " jones unchanged");
    Tally a(entry.name + " alexander unchanged up to units");
    const QPoly jones_ref = jones(entry.word);
    const QPoly alex_ref = alexander(entry.word);
    for (int r = 0; r < rewrites; ++r) {
      const BraidWord rewritten = random_markov_rewrite(entry.word, rng);
      const QPoly jv = jones(rewritten);
      const QPoly av = alexander(rewritten);
      j.record(jv == jones_ref, describe(rewritten) + " gave " + jv.to_string());
      a.record(oracle::equal_up_to_units(av, alex_ref, true),
               describe(rewritten) + " gave " + av.to_string());
    }
    j.flush(report);
    a.flush(report);
  }
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "traces", "reps",
                                              "vip",       "duality", "skein"};
  return names;
}

Report run_suite(const SuiteOptions& o) {
  if (o.suite == "relations") {
    Report report("braid relations");
    if (o.family == 0) {
      for (int f = 1; f <= 5; ++f) {
        report.merge(verify_braid_relations(FamilySpec::make(f)));
      }
      report.merge(verify_braid_relations(FamilySpec::make(2, true)));
    } else {
      report.merge(verify_braid_relations(FamilySpec::make(o.family, o.rescaled)));
    }
    return report;
  }
  if (o.suite == "traces") {
    require_strands(o.n, 2, 4, "traces suite");
    Report report("trace properties");
    report.merge(markov5_check(o.n, o.samples, o.seed));
    report.merge(trace2_check(o.n, o.samples, o.seed + 1));
    report.merge(block_braid_check(o.n));
    report.merge(trace_cyclicity_check(o.n, o.samples, o.seed + 2));
    return report;
  }
  if (o.suite == "reps") {
    require_strands(o.n, 1, kIsomorphismCap, "reps suite");
    Report report("representations");
    report.merge(isomorphism_check(o.n, o.seed));
    report.merge(trace_decomposition_check(o.n, o.seed));
    report.merge(colored_suite(o.n, o.samples, o.seed));
    report.merge(linking_suite(o.n, o.samples, o.seed + 1));
    return report;
  }
  if (o.suite == "vip") {
    require_strands(o.n, 2, kVipCap, "vip suite");
    Report report("closed forms");
    for (int k = 2; k <= o.n; ++k) report.merge(vip_checks(k));
    return report;
  }
  if (o.suite == "duality") return duality_check();
  if (o.suite == "skein") {
    Report report("skein and quadratic relations");
    report.merge(skein_check(o.n, o.samples, o.seed));
    report.merge(hecke_check());
    report.merge(jones_relations_check(o.n, o.samples, o.seed + 1));
    return report;
  }
  throw Error(ErrorCode::CheckFailed, "unknown suite '" + o.suite + "'");
}

}  // namespace rookbraid
