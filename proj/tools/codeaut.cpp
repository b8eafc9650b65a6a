// codeaut: construct binary codes, compute automorphism groups, survey
// cyclic codes and run the acceptance checks.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "codeaut/error.hpp"
#include "codeaut/json_io.hpp"
#include "codeaut/verify.hpp"

namespace {

using namespace codeaut;

struct GlobalOptions {
  std::uint64_t cap = std::uint64_t{1} << 26;
  std::uint64_t element_cap = 10'000'000;
  double time_budget = 0;  // seconds per code, 0 = unlimited
  unsigned workers = 1;
  std::string out;
  std::uint64_t seed = 0x5eed;

  SurveyConfig config() const {
    SurveyConfig c;
    c.limits.codeword_cap = cap;
    c.element_cap = element_cap;
    if (time_budget > 0) c.time_budget = std::chrono::milliseconds(static_cast<long long>(time_budget * 1000));
    c.workers = workers;
    c.seed = seed;
    c.validate();
    return c;
  }
};

// Writes to --out when given (appending for JSON Lines), else stdout.
class Output {
 public:
  Output(const std::string& path, bool append) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, append ? std::ios::app : std::ios::trunc);
    if (!*file_) throw Error(ErrorKind::InvalidArgument, "cannot open output file " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

CodeSource resolve_source(const std::vector<std::string>& tokens) {
  if (!tokens.empty() && tokens[0] == "file") {
    if (tokens.size() != 2) throw Error(ErrorKind::InvalidArgument, "usage: file PATH");
    std::ifstream in(tokens[1]);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + tokens[1]);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::InvalidArgument, std::string("invalid JSON in ") + tokens[1] + ": " + e.what());
    }
    return ExplicitCode{"file " + tokens[1], code_from_json(j)};
  }
  return parse_code_source(tokens);
}

std::size_t parse_length(const std::string& text) {
  std::size_t used = 0;
  std::size_t n = 0;
  try {
    n = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw Error(ErrorKind::InvalidArgument, "expected a length, got '" + text + "'");
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary linear codes: parameters, automorphism groups and cyclicity"};
  app.name("codeaut");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with default option values");

  GlobalOptions g;
  app.add_option("--cap", g.cap, "Maximum number of codewords enumerated per pass")->envname("CODEAUT_CAP");
  app.add_option("--element-cap", g.element_cap, "Maximum group order for element enumeration")
      ->envname("CODEAUT_ELEMENT_CAP");
  app.add_option("--time-budget", g.time_budget, "Seconds allowed per automorphism search (0 = unlimited)")
      ->envname("CODEAUT_TIME_BUDGET");
  app.add_option("--workers", g.workers, "Worker threads for surveys")->envname("CODEAUT_WORKERS");
  app.add_option("--out", g.out, "Write output to this file instead of stdout")->envname("CODEAUT_OUT");
  app.add_option("--seed", g.seed, "Seed for the root-of-unity search")->envname("CODEAUT_SEED");

  std::vector<std::string> source_tokens;
  auto* construct = app.add_subcommand("construct", "Print a code as JSON");
  construct->add_option("source", source_tokens, "c0 A B | c1 A B | k N1,N2,.. | elementary KIND N | hamming R | golay | cyclic N POLY | file PATH")
      ->required();

  auto* analyze = app.add_subcommand("analyze", "Analyze one code and print a JSON record");
  analyze->add_option("source", source_tokens, "Code source, as for construct")->required();
  bool with_group = false;
  analyze->add_flag("--group", with_group, "Also print the automorphism group as JSON on a second line");

  std::string length_text;
  auto* factor = app.add_subcommand("factor", "Factor X^N - 1 over GF(2) for odd N");
  factor->add_option("N", length_text, "Odd length")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List every cyclic code of odd length N");
  enumerate->add_option("N", length_text, "Odd length")->required();

  auto* survey = app.add_subcommand("survey-prime", "Analyze every cyclic code of prime length p");
  survey->add_option("p", length_text, "Odd prime")->required();

  std::string tier_name = "fast";
  bool json_report = false;
  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance checks");
  verify->add_option("--tier", tier_name, "fast, full or extended")->envname("CODEAUT_TIER");
  verify->add_flag("--json", json_report, "Print a JSON report instead of text lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const SurveyConfig config = g.config();
    if (construct->parsed()) {
      const LinearCode c = build_code(resolve_source(source_tokens));
      Output out(g.out, false);
      out.stream() << code_to_json(c).dump() << "\n";
    } else if (analyze->parsed()) {
      const CodeSource source = resolve_source(source_tokens);
      const CodeRecord record = analyze_code(source, config);
      Output out(g.out, true);
      out.stream() << record_to_json(record).dump() << "\n";
      if (with_group) {
        const AutReport report = automorphism_group(build_code(source), AutOptions{config.limits, config.time_budget});
        out.stream() << group_to_json(report.group).dump() << "\n";
      }
      std::cerr << summary_table({record});
    } else if (factor->parsed()) {
      Output out(g.out, false);
      out.stream() << factorization_to_json(factor_cyclotomic(parse_length(length_text), config.seed)).dump() << "\n";
    } else if (enumerate->parsed()) {
      const std::size_t n = parse_length(length_text);
      const Factorization f = factor_cyclotomic(n, config.seed);
      Json codes = Json::array();
      for (const auto& e : enumerate_cyclic_codes(n, 20, config.seed)) codes.push_back(cyclic_code_to_json(e, f));
      Output out(g.out, false);
      out.stream() << Json{{"N", n}, {"count", codes.size()}, {"codes", std::move(codes)}}.dump() << "\n";
    } else if (survey->parsed()) {
      const auto records = survey_prime(parse_length(length_text), config);
      Output out(g.out, true);
      for (const auto& r : records) out.stream() << record_to_json(r).dump() << "\n";
      std::cerr << summary_table(records);
    } else if (verify->parsed()) {
      const Tier tier = parse_tier(tier_name);
      Output out(g.out, false);
      bool all_passed = true;
      Json report = Json::array();
      run_verification(tier, [&](const CriterionResult& r) {
        all_passed = all_passed && r.passed;
        if (json_report) {
          report.push_back(Json{{"criterion", r.id},
                                {"title", r.title},
                                {"passed", r.passed},
                                {"detail", r.detail},
                                {"seconds", r.seconds},
                                {"limit_seconds", r.limit_seconds}});
        } else {
          out.stream() << format_result_line(r) << std::endl;
        }
      });
      if (json_report) out.stream() << Json{{"tier", tier_name}, {"passed", all_passed}, {"criteria", report}}.dump(2) << "\n";
      return all_passed ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.tag() << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}
