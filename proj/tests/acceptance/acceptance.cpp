// One line per acceptance criterion: PASS or FAIL, the criterion number and
// what was checked. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "splab/cli.hpp"
#include "splab/insertion.hpp"
#include "splab/mixed_jdt.hpp"
#include "splab/sagan_worley.hpp"
#include "splab/symfunc.hpp"
#include "splab/verify.hpp"

using namespace splab;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string data(const std::string& name) { return std::string(SPLAB_TEST_DATA) + "/" + name; }

std::string lines(const std::vector<std::string>& rows) {
  std::string out;
  for (const auto& r : rows) out += r + '\n';
  return out;
}

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

SuiteReport suite(const std::string& name, int n = 0, int len = 0, int size = 0) {
  VerifyConfig c{name};
  c.n = n;
  c.max_len = len;
  c.max_size = size;
  c.jobs = jobs();
  return run_suite(c);
}

std::string describe(const SuiteReport& r) {
  std::string s = r.suite + " [" + r.bounds + "] tested " + std::to_string(r.tested) + ", failed " +
                  std::to_string(r.failed);
  if (r.counterexample) s += "; first counterexample " + *r.counterexample + ": " + r.reason.value_or("");
  return s;
}

// Runs the CLI with --trace --states and checks that the displays occur in
// order among the printed configurations and that the result is `want`.
Outcome traced_cli_run(const std::string& file, const std::vector<std::string>& displays,
                       const std::string& want) {
  const char* argv[] = {"splab", "--trace", "rectify-mixed", "--states", file.c_str()};
  std::ostringstream out, err;
  if (run_cli(5, argv, out, err) != 0) return {false, "cli failed: " + err.str()};
  const std::string text = out.str();
  std::size_t at = 0;
  for (std::size_t k = 0; k < displays.size(); ++k) {
    // Each state is printed followed by a blank line.
    std::size_t hit = std::string::npos;
    for (std::size_t p = text.find(displays[k], at); p != std::string::npos; p = text.find(displays[k], p + 1)) {
      if ((p == 0 || text.compare(p - 2, 2, "\n\n") == 0) && text.compare(p + displays[k].size(), 1, "\n") == 0) {
        hit = p;
        break;
      }
    }
    if (hit == std::string::npos) return {false, "display " + std::to_string(k + 1) + " missing"};
    at = hit + displays[k].size();
  }
  if (text.size() < want.size() || text.compare(text.size() - want.size(), want.size(), want) != 0)
    return {false, "final tableau differs"};
  if (text.find("pass=1 coll=") == std::string::npos) return {false, "no trace events"};
  return {true, std::to_string(displays.size()) + " displays in order"};
}

Outcome criterion1() {
  std::ifstream in(data("insert_base.tab"));
  std::stringstream buf;
  buf << in.rdbuf();
  ShiftedTableau t = parse_tableau(buf.str());
  ShiftedTableau got = mixed_insert_letter(t, Letter::high(1));
  ShiftedTableau want = parse_tableau("1 1 4' 6'\n2 5\n");
  return {got == want, "insert 1 into " + to_inline(t) + " gives " + to_inline(got)};
}

Outcome criterion2() {
  const std::vector<std::string> skew = {
      lines({". . . . 1", "* 2 4", "3"}), lines({". . . . 1", "2 * 4", "3"}),
      lines({". . . . 1", "2 3' 4"}),     lines({"* * * * 1", "2 3' 4"}),
      lines({"1 * * *", "2 3' 4"}),       lines({"1 2' * *", "* 3' 4"}),
      lines({"1 2' 3' *", "* * 4"}),      lines({"1 2' 3'", "4"}),
  };
  const std::vector<std::string> stair = {
      lines({". . . . . . 4", ". . . . 9", "* * 3", "7"}),
      lines({". . . . . . 4", ". . . . 9", "* 3", "7"}),
      lines({". . . . . . 4", "* * * * 9", "3 7'"}),
      lines({". . . . . . 4", "3 * * * 9", "* 7'"}),
      lines({". . . . . . 4", "3 7' * * 9"}),
      lines({"* * * * * * 4", "3 7' 9"}),
      lines({"3 * * * * * 4", "* 7' 9"}),
      lines({"3 4 * *", "* 7' 9"}),
      lines({"3 4 7' *", "* * 9"}),
      lines({"3 4 7'", "* 9"}),
      lines({"3 4 7'", "9"}),
  };
  Outcome a = traced_cli_run(data("skew_example.tab"), skew, lines({"1 2' 3'", "4"}));
  Outcome b = traced_cli_run(data("staircase_7394.tab"), stair, lines({"3 4 7'", "9"}));
  const bool staircase_ok = staircase({7, 3, 9, 4}) == HoleTableau(parse_tableau(lines({". . . . . . 4", ". . . . 9", ". . 3", "7"})));
  const bool insertion_ok = mixed_insert_word({7, 3, 9, 4}) == parse_tableau("3 4 7'\n9\n");
  return {a.pass && b.pass && staircase_ok && insertion_ok,
          "skew example: " + a.detail + "; word 7 3 9 4: " + b.detail +
              (staircase_ok ? "" : "; staircase mismatch") + (insertion_ok ? "" : "; insertion mismatch")};
}

Outcome from_reports(const std::vector<SuiteReport>& reports, const std::vector<long>& expected_counts = {}) {
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    ok = ok && reports[i].ok() && reports[i].tested > 0;
    if (i < expected_counts.size() && reports[i].tested != expected_counts[i]) {
      ok = false;
      detail += "(expected " + std::to_string(expected_counts[i]) + " cases) ";
    }
    if (i) detail += "; ";
    detail += describe(reports[i]);
  }
  return {ok, detail};
}

Outcome criterion9() {
  Outcome sweep = from_reports({suite("cho", 3, 0, 6)});
  const FormalPlacticSum sum = skew_plactic_schur_P(make_skew({2, 1}, {1}), 2);
  bool instance = true;
  std::size_t classes = 0;
  for (const auto& t : enumerate_tableaux(SkewShape({2}), 2, FillMode::semistandard)) {
    ++classes;
    auto it = sum.find(t);
    instance = instance && it != sum.end() && it->second == Dyadic(1);
  }
  instance = instance && sum.size() == classes;
  return {sweep.pass && instance,
          sweep.detail + "; (2,1)/(1) gives coefficient 1 on all " + std::to_string(classes) +
              " classes of shape (2): " + (instance ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"mixed insertion example", criterion1},
      {"mixed rectification examples with trace", criterion2},
      {"rectification equals insertion",
       [] { return from_reports({suite("mixed-jdt", 3, 6), suite("mixed-jdt", 4, 6)}, {1092, 5460}); }},
      {"mixed jeu de taquin invariants", [] { return from_reports({suite("invariants", 3, 6)}, {1092}); }},
      {"plactic relation soundness", [] { return from_reports({suite("plactic-relations", 5)}); }},
      {"plactic completeness", [] { return from_reports({suite("plactic-completeness", 3, 5)}, {363}); }},
      {"southwestmost marker invariance", [] { return from_reports({suite("sw-marker", 3, 0, 6)}); }},
      {"preimage counts equal b", [] { return from_reports({suite("sw-count", 3, 0, 6)}); }},
      {"skew plactic P coefficients", criterion9},
      {"generating function identities",
       [] { return from_reports({suite("qp-identity", 3, 0, 6), suite("free-schur", 3, 0, 5)}); }},
      {"hook subword oracle agreement", [] { return from_reports({suite("hook-oracle", 3, 10)}, {88573}); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << "  " << criteria[i].first << "  ("
              << time.str() << " s)  " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
