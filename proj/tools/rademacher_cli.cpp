// rademacher: command-line front end.
//
//   rademacher symbol    --p 2 --q 3 --word "S U" [--format json|csv]
//   rademacher verify    --p 3 --q 5 --max-r 2 --seed 1 [--suite all|lemmas|theorem|classical|cocycle|linking|words]
//   rademacher table     --p 2 --q 5 --max-r 1 [--format csv|json]
//   rademacher decompose --p 2 --q 3 --matrix '{"a":-1,"b":0,"c":1,"d":-1}' [--max-syllables 8]
//
// Exit codes: 0 success, 1 disagreement / failed check, 2 bad input, 3 no word found.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rademacher/serialize.hpp"
#include "rademacher/verify.hpp"

namespace {

using namespace rademacher;

constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNotFound = 3;

struct GroupArgs {
  int p = 2;
  int q = 3;
};

void add_group_options(CLI::App* cmd, GroupArgs& args) {
  cmd->add_option("--p", args.p, "torsion order of S (p >= 2)")->required();
  cmd->add_option("--q", args.q, "torsion order of U (q > p, gcd(p, q) = 1)")->required();
}

std::string optional_string(const std::optional<long>& v) { return v ? std::to_string(*v) : std::string(); }

int run_symbol(const GroupArgs& g, const std::string& text, const std::string& format) {
  const TriangleGroup group(g.p, g.q);
  const Word w = parse_word(text);
  const SymbolReport report = make_report(w, group);
  if (format == "csv") {
    std::cout << csv_row({"p", "q", "word", "psi", "Psi_cocycle", "Psi_formula", "Psi_classical", "trace_sign",
                          "linking", "agreement"});
    std::cout << csv_row({std::to_string(report.p), std::to_string(report.q), to_string(report.word),
                          std::to_string(report.psi), std::to_string(report.Psi_cocycle),
                          optional_string(report.Psi_formula), optional_string(report.Psi_classical),
                          std::to_string(report.trace_sign),
                          report.linking ? rational_string(*report.linking) : std::string(),
                          report.agreement ? "true" : "false"});
  } else {
    std::cout << to_json(report).dump(2) << '\n';
  }
  return report.agreement ? 0 : kExitFailure;
}

int run_verify(const GroupArgs& g, const std::string& suite_text, const VerifyOptions& options) {
  const auto suite = parse_suite(suite_text);
  if (!suite) {
    std::cerr << "error: unknown suite '" << suite_text << "'\n";
    return kExitBadInput;
  }
  const TriangleGroup group(g.p, g.q);
  const SuiteReport report = run_verification(group, *suite, options);
  std::size_t checks = 0, failures = 0;
  for (const auto& r : report.results) {
    checks += r.checks;
    failures += r.failures;
    std::cout << (r.passed() ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.checks - r.failures << "/" << r.checks
              << " passed\n";
    if (r.first_counterexample) std::cout << "       first counterexample: " << *r.first_counterexample << '\n';
  }
  std::cout << "suite " << suite_name(*suite) << " on (" << g.p << "," << g.q << "), max-r " << options.max_r
            << ", seed " << options.seed << ": " << checks - failures << "/" << checks << " checks passed\n";
  return report.passed() ? 0 : kExitFailure;
}

int run_table(const GroupArgs& g, int max_r, const std::string& format, int threads) {
  const TriangleGroup group(g.p, g.q);
  const WordEnumeration words(group, max_r, /*positive_only=*/true);
  struct Row {
    std::string word;
    long psi = 0, Psi = 0;
    int trace_sign = 0;
    std::string linking;
  };
  std::vector<Row> rows(words.size());
  const long n = static_cast<long>(words.size());
  const int workers = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(workers)
  for (long i = 0; i < n; ++i) {
    const Word w = words[static_cast<std::size_t>(i)];
    const SymbolValue v = evaluate_symbol(w, group);
    rows[i] = {to_string(w), v.psi, v.Psi, v.trace_sign,
               rational_string(dehornoy_linking(cyclic_key(w, group), group))};
  }
  if (format == "json") {
    Json out = Json::array();
    for (const auto& r : rows)
      out.push_back({{"word", r.word}, {"psi", r.psi}, {"Psi", r.Psi}, {"trace_sign", r.trace_sign},
                     {"linking", r.linking}});
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << csv_row({"word", "psi", "Psi", "trace_sign", "linking"});
    for (const auto& r : rows)
      std::cout << csv_row(
          {r.word, std::to_string(r.psi), std::to_string(r.Psi), std::to_string(r.trace_sign), r.linking});
  }
  return 0;
}

int run_decompose(const GroupArgs& g, const std::string& matrix_text, int max_syllables, const std::string& format) {
  const TriangleGroup group(g.p, g.q);
  std::string source = matrix_text;
  if (!source.empty() && source.front() == '@') {
    std::ifstream in(source.substr(1));
    if (!in) {
      std::cerr << "error: cannot read " << source.substr(1) << '\n';
      return kExitBadInput;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    source = buffer.str();
  }
  const GroupMatrix m = matrix_from_json(Json::parse(source), group);
  try {
    const Word w = matrix_to_word(m, group, max_syllables);
    if (format == "json")
      std::cout << to_json(w).dump() << '\n';
    else
      std::cout << to_string(w) << '\n';
  } catch (const NotFound& e) {
    std::cerr << "NotFound: " << e.what() << '\n';
    return kExitNotFound;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rademacher symbols on the triangle groups Gamma_{p,q}"};
  app.require_subcommand(1);

  GroupArgs symbol_group, verify_group, table_group, decompose_group;
  std::string word_text, symbol_format = "json";
  auto* symbol = app.add_subcommand("symbol", "compute psi, Psi and the linking number of one word");
  add_group_options(symbol, symbol_group);
  symbol->add_option("--word", word_text, "word such as \"-S^2 U S U^3\"")->required();
  symbol->add_option("--format", symbol_format)->check(CLI::IsMember({"json", "csv"}));

  VerifyOptions verify_options;
  verify_options.log_precision_bits = log_precision_from_env();
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run the property suites over enumerated words");
  add_group_options(verify, verify_group);
  verify->add_option("--max-r", verify_options.max_r, "largest number of S^n U^m blocks")->check(CLI::Range(1, 8));
  verify->add_option("--seed", verify_options.seed, "seed for the random conjugators and pairs");
  verify->add_option("--suite", suite, "all|lemmas|theorem|classical|cocycle|linking|words");
  verify->add_option("--trials", verify_options.trials, "seeded trials per randomized property");
  verify->add_option("--log-pairs", verify_options.log_pairs, "pairs for the logarithmic cross-check");
  verify->add_option("--threads", verify_options.threads, "worker threads (default: number of processors)");
  bool serial = false;
  verify->add_flag("--serial", serial, "use the serial reference loop");

  int table_max_r = 1, table_threads = 0;
  std::string table_format = "csv";
  auto* table = app.add_subcommand("table", "tabulate Psi and the linking number of enumerated words");
  add_group_options(table, table_group);
  table->add_option("--max-r", table_max_r)->check(CLI::Range(1, 8));
  table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--threads", table_threads);

  std::string matrix_text, decompose_format = "text";
  int max_syllables = 8;
  auto* decompose = app.add_subcommand("decompose", "write a matrix as a word in S and U");
  add_group_options(decompose, decompose_group);
  decompose->add_option("--matrix", matrix_text, "GroupMatrix JSON, or @file")->required();
  decompose->add_option("--max-syllables", max_syllables)->check(CLI::NonNegativeNumber);
  decompose->add_option("--format", decompose_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*symbol) return run_symbol(symbol_group, word_text, symbol_format);
    if (*verify) {
      verify_options.parallel = !serial;
      return run_verify(verify_group, suite, verify_options);
    }
    if (*table) return run_table(table_group, table_max_r, table_format, table_threads);
    if (*decompose) return run_decompose(decompose_group, matrix_text, max_syllables, decompose_format);
  } catch (const NonIntegral& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
