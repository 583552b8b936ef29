#include "splab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "splab/errors.hpp"
#include "splab/insertion.hpp"
#include "splab/mixed_jdt.hpp"
#include "splab/sagan_worley.hpp"
#include "splab/symfunc.hpp"
#include "splab/verify.hpp"

namespace splab {

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kFailure = 1, kBadInput = 2, kUnknownSuite = 3 };

struct Options {
  bool json = false;
  bool trace = false;
  int jobs = 1;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

json tableau_json(const ShiftedTableau& t) {
  json rows = json::array();
  const SkewShape& s = t.shape();
  for (int r = 1; r <= s.rows(); ++r) {
    json row = json::array();
    for (int c = r; c <= s.last_col(r); ++c)
      row.push_back(s.in_inner({r, c}) ? std::string(".") : to_string(t.at({r, c})));
    rows.push_back(std::move(row));
  }
  return {{"shape", to_string(s)}, {"rows", std::move(rows)}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_insert(const Options& opt, const std::vector<std::string>& args, std::ostream& out) {
  std::string text;
  for (const auto& a : args) text += a + ' ';
  const Word w = parse_word(text);
  const ShiftedTableau t = mixed_insert_word(w);
  if (opt.json)
    emit(out, {{"word", w}, {"tableau", tableau_json(t)}});
  else
    out << print_tableau(t);
  return kOk;
}

int cmd_rectify_mixed(const Options& opt, const std::string& file, bool states, std::ostream& out) {
  const ShiftedTableau t = parse_tableau(read_input(file));
  if (!is_semistandard(t)) throw std::invalid_argument("input tableau is not semistandard");
  const MixedRun run = mixed_rectify_traced(HoleTableau(t));
  if (opt.json) {
    json j{{"result", tableau_json(run.result)}};
    if (opt.trace) {
      json events = json::array();
      for (const auto& e : run.trace) events.push_back(format_event(e));
      j["trace"] = std::move(events);
    }
    if (states) {
      json all = json::array();
      for (const auto& s : run.states) all.push_back(print_holes(s));
      j["states"] = std::move(all);
    }
    emit(out, j);
    return kOk;
  }
  if (opt.trace) {
    for (const auto& e : run.trace) out << format_event(e) << '\n';
    out << '\n';
  }
  if (states) {
    for (const auto& s : run.states) out << print_holes(s) << '\n';
  }
  out << print_tableau(run.result);
  return kOk;
}

ShiftedTableau read_q_tableau(const std::string& file) {
  const ShiftedTableau t = parse_tableau(read_input(file));
  if (!is_q_tableau(t)) throw std::invalid_argument("input is not a Q-tableau");
  return t;
}

int cmd_rectify_sw(const Options& opt, const std::string& file, std::ostream& out) {
  const ShiftedTableau r = sw_rectify(read_q_tableau(file));
  if (opt.json)
    emit(out, {{"result", tableau_json(r)}});
  else
    out << print_tableau(r);
  return kOk;
}

int cmd_standardize(const Options& opt, const std::string& file, std::ostream& out) {
  const ShiftedTableau r = standardize(read_q_tableau(file));
  if (opt.json)
    emit(out, {{"result", tableau_json(r)}});
  else
    out << print_tableau(r);
  return kOk;
}

int cmd_enumerate(const Options& opt, const std::string& shape, int n, const std::string& mode,
                  std::ostream& out) {
  const SkewShape s = parse_skew(shape);
  const FillMode m = mode == "qtableau" ? FillMode::qtableau : FillMode::semistandard;
  json all = json::array();
  long count = 0;
  for_each_tableau(s, n, m, [&](const ShiftedTableau& t) {
    ++count;
    if (opt.json)
      all.push_back(tableau_json(t));
    else
      out << to_inline(t) << '\n';
  });
  if (opt.json) emit(out, {{"shape", to_string(s)}, {"n", n}, {"mode", mode}, {"count", count}, {"tableaux", all}});
  return kOk;
}

std::string partition_text(const StrictPartition& p) { return p.empty() ? "0" : to_string(p); }

int cmd_expand_skew(const Options& opt, const std::string& shape, bool check_sw, int n,
                    std::ostream& out) {
  const SkewShape s = parse_skew(shape);
  const CoeffMap b = b_coeffs(s.outer(), s.inner());
  if (!check_sw) {
    if (opt.json) {
      json terms = json::array();
      for (const auto& [lambda, c] : b) terms.push_back({{"lambda", partition_text(lambda)}, {"b", c.str()}});
      emit(out, {{"shape", to_string(s)}, {"terms", terms}});
    } else {
      for (const auto& [lambda, c] : b) out << partition_text(lambda) << '\t' << c << '\n';
    }
    return kOk;
  }

  if (n <= 0) n = std::max(1, s.outer().length());
  const auto counts = rectification_counts(s, n);
  bool all_pass = true;
  json terms = json::array();
  auto shapes = strict_partitions_of(s.size());
  std::sort(shapes.begin(), shapes.end());
  for (const auto& lambda : shapes) {
    if (lambda.length() > n) continue;
    auto it = b.find(lambda);
    const BigInt want = it == b.end() ? BigInt(0) : it->second;
    bool pass = true;
    for_each_tableau(SkewShape(lambda), n, FillMode::qtableau, [&](const ShiftedTableau& t) {
      auto c = counts.find(t);
      if (BigInt(c == counts.end() ? 0 : c->second) != want) pass = false;
    });
    all_pass = all_pass && pass;
    if (want == 0 && pass) continue;
    if (opt.json)
      terms.push_back({{"lambda", partition_text(lambda)}, {"b", want.str()}, {"check", pass ? "PASS" : "FAIL"}});
    else
      out << partition_text(lambda) << '\t' << want << '\t' << (pass ? "PASS" : "FAIL") << '\n';
  }
  if (opt.json) emit(out, {{"shape", to_string(s)}, {"n", n}, {"terms", terms}});
  return all_pass ? kOk : kFailure;
}

int cmd_plactic_skew(const Options& opt, const std::string& shape, int n, std::ostream& out) {
  const SkewShape s = parse_skew(shape);
  const FormalPlacticSum sum = skew_plactic_schur_P(s, n);
  if (opt.json) {
    json terms = json::array();
    for (const auto& [t, c] : sum) terms.push_back({{"tableau", to_inline(t)}, {"coefficient", c.to_string()}});
    emit(out, {{"shape", to_string(s)}, {"n", n}, {"terms", terms}});
  } else {
    for (const auto& [t, c] : sum) out << to_inline(t) << '\t' << c.to_string() << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& opt, VerifyConfig config, std::ostream& out, std::ostream& err) {
  if (!is_known_suite(config.suite)) {
    err << "unknown suite '" << config.suite << "'; known suites:";
    for (const auto& s : known_suites()) err << ' ' << s;
    err << '\n';
    return kUnknownSuite;
  }
  config.jobs = opt.jobs;
  const SuiteReport r = run_suite(config);
  if (opt.json) {
    json j{{"suite", r.suite}, {"bounds", r.bounds}, {"tested", r.tested}, {"failed", r.failed}};
    if (r.counterexample) {
      j["counterexample"] = *r.counterexample;
      j["reason"] = *r.reason;
    }
    emit(out, j);
  } else {
    out << r.suite << " [" << r.bounds << "]: tested " << r.tested << ", failed " << r.failed << '\n';
    if (r.counterexample) out << "counterexample: " << *r.counterexample << '\n' << *r.reason << '\n';
  }
  return r.ok() ? kOk : kFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shifted tableaux: mixed insertion, mixed jeu de taquin, Sagan-Worley rectification"};
  app.name("splab");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_flag("--trace", opt.trace, "Print slide events (rectify-mixed)");
  app.add_option("--jobs", opt.jobs, "Worker threads for verify")->check(CLI::PositiveNumber);

  std::vector<std::string> word;
  auto* insert = app.add_subcommand("insert", "Mixed insertion of a word of high letters");
  insert->add_option("word", word, "Letters, space or comma separated");

  std::string file;
  bool states = false;
  auto* rect_mixed = app.add_subcommand("rectify-mixed", "Mixed jeu de taquin rectification of a tableau file");
  rect_mixed->add_option("file", file, "Tableau file, - for stdin")->required();
  rect_mixed->add_flag("--states", states, "Print every intermediate configuration");

  auto* rect_sw = app.add_subcommand("rectify-sw", "Sagan-Worley rectification of a Q-tableau file");
  rect_sw->add_option("file", file, "Tableau file, - for stdin")->required();

  auto* stand = app.add_subcommand("standardize", "Standardize a Q-tableau file");
  stand->add_option("file", file, "Tableau file, - for stdin")->required();

  std::string shape;
  int n = 0;
  std::string mode = "semistandard";
  auto* enumerate = app.add_subcommand("enumerate", "List tableaux of a shape with values <= n");
  enumerate->add_option("shape", shape, "e.g. 3,1 or 4,2/1")->required();
  enumerate->add_option("--n,-n", n, "Largest value")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--mode", mode, "semistandard or qtableau")
      ->check(CLI::IsMember({"semistandard", "qtableau"}));

  bool check_sw = false;
  auto* expand = app.add_subcommand("expand-skew", "Shifted Littlewood-Richardson numbers of a skew shape");
  expand->add_option("shape", shape, "outer/inner")->required();
  expand->add_flag("--check-sw", check_sw, "Compare with Sagan-Worley preimage counts");
  expand->add_option("--n,-n", n, "Largest value for --check-sw")->check(CLI::PositiveNumber);

  auto* plactic = app.add_subcommand("plactic-skew", "Skew plactic Schur P-function as a sum of classes");
  plactic->add_option("shape", shape, "outer/inner")->required();
  plactic->add_option("--n,-n", n, "Largest value")->required()->check(CLI::PositiveNumber);

  VerifyConfig config;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify->add_option("suite", config.suite, "Suite name")->required();
  verify->add_option("--n,-n", config.n, "Largest letter value")->check(CLI::PositiveNumber);
  verify->add_option("--len", config.max_len, "Longest word")->check(CLI::PositiveNumber);
  verify->add_option("--max-size", config.max_size, "Largest shape size")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*insert) return cmd_insert(opt, word, out);
    if (*rect_mixed) return cmd_rectify_mixed(opt, file, states, out);
    if (*rect_sw) return cmd_rectify_sw(opt, file, out);
    if (*stand) return cmd_standardize(opt, file, out);
    if (*enumerate) return cmd_enumerate(opt, shape, n, mode, out);
    if (*expand) return cmd_expand_skew(opt, shape, check_sw, n, out);
    if (*plactic) return cmd_plactic_skew(opt, shape, n, out);
    if (*verify) return cmd_verify(opt, config, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailure;
  }
  return kBadInput;
}

}  // namespace splab
