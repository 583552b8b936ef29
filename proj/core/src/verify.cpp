#include "splab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <thread>

#include "splab/insertion.hpp"
#include "splab/mixed_jdt.hpp"
#include "splab/sagan_worley.hpp"
#include "splab/symfunc.hpp"

namespace splab {

namespace {

struct Case {
  std::string input;
  // Returns a failure reason; adds the number of checked items to `units`.
  std::function<std::optional<std::string>(long& units)> check;
};

struct Bounds {
  int n = 0;
  int len = 0;
  int size = 0;
};

std::vector<Word> all_words(int n, int min_len, int max_len) {
  std::vector<Word> out;
  for (int len = min_len; len <= max_len; ++len) {
    Word w(static_cast<std::size_t>(len), 1);
    while (true) {
      out.push_back(w);
      int i = len - 1;
      while (i >= 0 && w[static_cast<std::size_t>(i)] == n) w[static_cast<std::size_t>(i--)] = 1;
      if (i < 0) break;
      ++w[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

std::vector<std::pair<StrictPartition, StrictPartition>> skew_pairs(int max_size) {
  std::vector<std::pair<StrictPartition, StrictPartition>> out;
  for (int s = 0; s <= max_size; ++s)
    for (const auto& nu : strict_partitions_of(s))
      for (const auto& mu : strict_partitions_inside(nu)) out.emplace_back(nu, mu);
  return out;
}

std::string pair_input(const StrictPartition& nu, const StrictPartition& mu, int n) {
  return to_string(make_skew(nu, mu)) + " n=" + std::to_string(n);
}

std::vector<Case> mixed_jdt_cases(const Bounds& b) {
  std::vector<Case> cases;
  for (Word& w : all_words(b.n, 1, b.len)) {
    cases.push_back({to_string(w), [w](long& units) -> std::optional<std::string> {
                       ++units;
                       ShiftedTableau rect = mixed_rectify(staircase(w));
                       ShiftedTableau ins = mixed_insert_word(w);
                       if (rect == ins) return std::nullopt;
                       return "rectification " + to_inline(rect) + " but insertion " + to_inline(ins);
                     }});
  }
  return cases;
}

std::vector<Case> invariant_cases(const Bounds& b) {
  std::vector<Case> cases;
  for (Word& w : all_words(b.n, 1, b.len)) {
    cases.push_back({to_string(w), [w](long& units) -> std::optional<std::string> {
                       ++units;
                       const HoleTableau start = staircase(w);
                       MixedAudit audit = audit_mixed_rectification(start);
                       if (!audit.ok()) return audit.violations.front();
                       MixedRun run = mixed_rectify_traced(start);
                       if (replay_letters(start, run.trace) != letters_of(run.states.back()))
                         return std::string("replaying the trace does not reach the final state");
                       return std::nullopt;
                     }});
  }
  return cases;
}

std::vector<Case> relation_cases(const Bounds& b) {
  constexpr int kContext = 4;
  std::vector<Case> cases;
  const auto& rels = plactic_relations();
  for (std::size_t k = 0; k < rels.size(); ++k) {
    const PlacticRelation& rel = rels[k];
    for (int a = 1; a <= b.n; ++a)
      for (int bb = 1; bb <= b.n; ++bb)
        for (int c = 1; c <= b.n; ++c)
          for (int d = 1; d <= b.n; ++d) {
            if (!rel.admits(a, bb, c, d)) continue;
            const int val[4] = {a, bb, c, d};
            auto spell = [&](std::string_view pat) {
              Word w;
              for (char ch : pat) w.push_back(val[ch - 'a']);
              return w;
            };
            const Word lhs = spell(rel.lhs), rhs = spell(rel.rhs);
            std::string input = std::string(rel.lhs) + "~" + std::string(rel.rhs) + " a=" +
                                std::to_string(a) + " b=" + std::to_string(bb) + " c=" +
                                std::to_string(c) + " d=" + std::to_string(d);
            cases.push_back({input, [lhs, rhs](long& units) -> std::optional<std::string> {
                               for (int left = 0; left <= kContext; ++left) {
                                 for (int right = 0; right <= kContext; ++right) {
                                   Word u, v;
                                   if (left) u.push_back(left);
                                   u.insert(u.end(), lhs.begin(), lhs.end());
                                   if (right) u.push_back(right);
                                   if (left) v.push_back(left);
                                   v.insert(v.end(), rhs.begin(), rhs.end());
                                   if (right) v.push_back(right);
                                   ++units;
                                   if (!(mixed_insert_word(u) == mixed_insert_word(v)))
                                     return to_string(u) + " and " + to_string(v) +
                                            " insert differently";
                                 }
                               }
                               return std::nullopt;
                             }});
          }
  }
  return cases;
}

std::vector<Case> completeness_cases(const Bounds& b) {
  auto groups = std::make_shared<std::map<ShiftedTableau, std::set<Word>>>();
  std::vector<Word> words = all_words(b.n, 1, b.len);
  for (const Word& w : words) (*groups)[mixed_insert_word(w)].insert(w);
  std::vector<Case> cases;
  for (Word& w : words) {
    cases.push_back({to_string(w), [w, groups](long& units) -> std::optional<std::string> {
                       ++units;
                       const auto& same = groups->at(mixed_insert_word(w));
                       const auto reach = relation_class(w);
                       for (const Word& v : same)
                         if (!reach.count(v))
                           return "same insertion tableau as " + to_string(v) +
                                  " but not connected by relations";
                       for (const Word& v : reach)
                         if (!same.count(v)) return "connected to " + to_string(v) + " with a different tableau";
                       return std::nullopt;
                     }});
  }
  return cases;
}

std::vector<Case> sw_marker_cases(const Bounds& b) {
  std::vector<Case> cases;
  const int n = b.n;
  for (auto& [nu, mu] : skew_pairs(b.size)) {
    const SkewShape shape = make_skew(nu, mu);
    cases.push_back({pair_input(nu, mu, n), [shape, n](long& units) -> std::optional<std::string> {
                       std::optional<std::string> failure;
                       for_each_tableau(shape, n, FillMode::qtableau, [&](const ShiftedTableau& s) {
                         if (failure) return;
                         ++units;
                         std::vector<std::optional<Marker>> start;
                         for (int x = 1; x <= n; ++x) start.push_back(southwestmost_marker(s, x));
                         auto audit = [&](const HoleTableau& u) {
                           for (int x = 1; x <= n && !failure; ++x)
                             if (southwestmost_marker(u, x) != start[static_cast<std::size_t>(x - 1)])
                               failure = "southwestmost " + std::to_string(x) + " changed marker in\n" +
                                         print_tableau(s) + "at\n" + print_holes(u);
                         };
                         const ShiftedTableau rect = sw_rectify(s, CornerOrder::lowest_row_first, audit);
                         if (failure) return;
                         if (!(sw_rectify(s, CornerOrder::highest_row_first) == rect)) {
                           failure = "corner order changes the rectification of\n" + print_tableau(s);
                           return;
                         }
                         if (!is_q_tableau(rect) || !rect.shape().straight()) {
                           failure = "rectification is not a straight Q-tableau:\n" + print_tableau(s);
                           return;
                         }
                         bool all_high = std::all_of(start.begin(), start.end(), [](auto m) {
                           return !m || *m == Marker::high;
                         });
                         if (all_high && !is_semistandard(rect))
                           failure = "every southwestmost letter is high but the rectification is "
                                     "not semistandard:\n" + print_tableau(s);
                       });
                       return failure;
                     }});
  }
  return cases;
}

std::vector<Case> sw_count_cases(const Bounds& b) {
  std::vector<Case> cases;
  for (int n = 1; n <= b.n; ++n) {
    for (auto& [nu, mu] : skew_pairs(b.size)) {
      cases.push_back({pair_input(nu, mu, n), [nu, mu, n](long& units) -> std::optional<std::string> {
                         const SkewShape shape = make_skew(nu, mu);
                         const auto counts = rectification_counts(shape, n);
                         const CoeffMap b = b_coeffs(nu, mu);
                         long seen = 0;
                         for (const auto& lambda : strict_partitions_of(shape.size())) {
                           auto it = b.find(lambda);
                           const BigInt want = it == b.end() ? BigInt(0) : it->second;
                           std::optional<std::string> failure;
                           for_each_tableau(SkewShape(lambda), n, FillMode::qtableau,
                                            [&](const ShiftedTableau& t) {
                                              ++units;
                                              auto c = counts.find(t);
                                              const long got = c == counts.end() ? 0 : c->second;
                                              seen += got;
                                              if (!failure && BigInt(got) != want)
                                                failure = "target " + to_inline(t) + " has " +
                                                          std::to_string(got) + " preimages, b = " +
                                                          want.str();
                                            });
                           if (failure) return failure;
                         }
                         long total = 0;
                         for (const auto& [t, k] : counts) total += k;
                         if (total != seen) return std::string("some rectification is not a straight Q-tableau");
                         return std::nullopt;
                       }});
    }
  }
  return cases;
}

std::vector<Case> cho_cases(const Bounds& b) {
  std::vector<Case> cases;
  for (int n = 1; n <= b.n; ++n) {
    for (auto& [nu, mu] : skew_pairs(b.size)) {
      cases.push_back({pair_input(nu, mu, n), [nu, mu, n](long& units) -> std::optional<std::string> {
                         const SkewShape shape = make_skew(nu, mu);
                         const FormalPlacticSum sum = skew_plactic_schur_P(shape, n);
                         const CoeffMap b = b_coeffs(nu, mu);
                         const int diag = diagonal_count(shape);
                         std::size_t matched = 0;
                         for (const auto& lambda : strict_partitions_of(shape.size())) {
                           auto it = b.find(lambda);
                           const BigInt bl = it == b.end() ? BigInt(0) : it->second;
                           const Dyadic want((bl << lambda.length()), diag);
                           std::optional<std::string> failure;
                           for_each_tableau(SkewShape(lambda), n, FillMode::semistandard,
                                            [&](const ShiftedTableau& t) {
                                              ++units;
                                              auto s = sum.find(t);
                                              const Dyadic got = s == sum.end() ? Dyadic() : s->second;
                                              if (s != sum.end()) ++matched;
                                              if (!failure && !(got == want))
                                                failure = "class " + to_inline(t) + " has coefficient " +
                                                          got.to_string() + ", expected " +
                                                          want.to_string();
                                            });
                           if (failure) return failure;
                         }
                         if (matched != sum.size())
                           return std::string("sum contains a class that is not a straight semistandard tableau");
                         return std::nullopt;
                       }});
    }
  }
  return cases;
}

std::vector<Case> qp_cases(const Bounds& b) {
  std::vector<Case> cases;
  for (int n = 1; n <= b.n; ++n) {
    for (auto& [nu, mu] : skew_pairs(b.size)) {
      cases.push_back({pair_input(nu, mu, n), [nu, mu, n](long& units) -> std::optional<std::string> {
                         ++units;
                         (void)schur_Q_poly(make_skew(nu, mu), n);
                         return std::nullopt;
                       }});
    }
  }
  return cases;
}

std::vector<Case> free_schur_cases(const Bounds& b) {
  std::vector<Case> cases;
  for (int n = 1; n <= b.n; ++n) {
    for (int s = 0; s <= b.size; ++s) {
      for (const auto& lambda : strict_partitions_of(s)) {
        cases.push_back({to_string(lambda) + " n=" + std::to_string(n),
                         [lambda, n](long& units) -> std::optional<std::string> {
                           ++units;
                           SymPoly image(n);
                           SymPoly::Exponent e(static_cast<std::size_t>(n));
                           for (const Word& w : enumerate_hook_set(lambda, n)) {
                             std::fill(e.begin(), e.end(), 0);
                             for (int v : w) ++e[static_cast<std::size_t>(v - 1)];
                             image.add_term(e, 1);
                           }
                           const SymPoly p = schur_P_poly(SkewShape(lambda), n);
                           if (image == p) return std::nullopt;
                           return "hook words give " + to_string(image) + " but P = " + to_string(p);
                         }});
      }
    }
  }
  return cases;
}

int brute_longest_hook(const Word& w) {
  const unsigned n = static_cast<unsigned>(w.size());
  int best = 0;
  Word sub;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int k = std::popcount(mask);
    if (k <= best) continue;
    sub.clear();
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(w[i]);
    if (is_hook_word(sub)) best = k;
  }
  return best;
}

std::vector<Case> hook_oracle_cases(const Bounds& b) {
  if (b.len > 20) throw std::invalid_argument("the subword oracle is limited to length 20");
  std::vector<Case> cases;
  for (Word& w : all_words(b.n, 0, b.len)) {
    cases.push_back({to_string(w), [w](long& units) -> std::optional<std::string> {
                       ++units;
                       const int dp = longest_hook_subword_length(w), brute = brute_longest_hook(w);
                       if (dp == brute) return std::nullopt;
                       return "dynamic programming gives " + std::to_string(dp) + ", subwords give " +
                              std::to_string(brute);
                     }});
  }
  return cases;
}

struct SuiteDef {
  std::string name;
  Bounds defaults;
  bool uses_len;
  bool uses_size;
  std::vector<Case> (*build)(const Bounds&);
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs = {
      {"mixed-jdt", {3, 6, 0}, true, false, mixed_jdt_cases},
      {"plactic-relations", {5, 0, 0}, false, false, relation_cases},
      {"plactic-completeness", {3, 5, 0}, true, false, completeness_cases},
      {"sw-marker", {3, 0, 6}, false, true, sw_marker_cases},
      {"sw-count", {3, 0, 6}, false, true, sw_count_cases},
      {"cho", {3, 0, 6}, false, true, cho_cases},
      {"qp-identity", {3, 0, 6}, false, true, qp_cases},
      {"free-schur", {3, 0, 5}, false, true, free_schur_cases},
      {"invariants", {3, 6, 0}, true, false, invariant_cases},
      {"hook-oracle", {3, 10, 0}, true, false, hook_oracle_cases},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& d : suites()) out.push_back(d.name);
    return out;
  }();
  return names;
}

bool is_known_suite(const std::string& name) {
  const auto& names = known_suites();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const VerifyConfig& config) {
  auto def = std::find_if(suites().begin(), suites().end(),
                          [&](const SuiteDef& d) { return d.name == config.suite; });
  if (def == suites().end()) throw std::invalid_argument("unknown suite '" + config.suite + "'");
  if (config.n < 0 || config.max_len < 0 || config.max_size < 0 || config.jobs < 0)
    throw std::invalid_argument("bounds must be positive");

  Bounds b = def->defaults;
  if (config.n > 0) b.n = config.n;
  if (config.max_len > 0) b.len = config.max_len;
  if (config.max_size > 0) b.size = config.max_size;

  SuiteReport report;
  report.suite = def->name;
  report.bounds = "n=" + std::to_string(b.n);
  if (def->uses_len) report.bounds += " len=" + std::to_string(b.len);
  if (def->uses_size) report.bounds += " size=" + std::to_string(b.size);

  const std::vector<Case> cases = def->build(b);
  std::vector<std::optional<std::string>> failures(cases.size());
  std::vector<long> units(cases.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        failures[i] = cases[i].check(units[i]);
      } catch (const std::exception& ex) {
        failures[i] = std::string("exception: ") + ex.what();
      }
    }
  };
  const unsigned jobs = config.jobs > 0 ? static_cast<unsigned>(config.jobs) : 1;
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < cases.size(); ++i) {
    report.tested += units[i];
    if (failures[i]) {
      ++report.failed;
      if (!report.counterexample) {
        report.counterexample = cases[i].input;
        report.reason = failures[i];
      }
    }
  }
  return report;
}

}  // namespace splab
