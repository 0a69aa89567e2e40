// serrant: type grammatical-error edits and report type distributions.
//
//   serrant classify --orig FILE --cor FILE [...]
//   serrant retype   --m2 FILE [...]
//   serrant stats    --m2 FILE [--annotator N] [--report-format tsv|json]
//   serrant corrected --m2 FILE      (corrected sentences, retype order)

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "serrant/serrant.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitConfig = 2;

struct OutputOptions {
  std::string out;
  std::string report;
  serrant::ReportFormat report_format = serrant::ReportFormat::Tsv;
  std::size_t jobs = 1;
};

const std::map<std::string, serrant::ReportFormat> kReportFormats = {
    {"tsv", serrant::ReportFormat::Tsv}, {"json", serrant::ReportFormat::Json}};

void write_text(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw serrant::ConfigError("cannot write " + path);
  out << body;
}

void add_type_options(CLI::App* cmd, serrant::PipelineConfig& config, OutputOptions& output,
                      std::optional<std::string>& conllu_orig, std::optional<std::string>& conllu_cor) {
  static const std::map<std::string, serrant::Granularity> kGranularity = {
      {"upos", serrant::Granularity::Upos}, {"upos-feats", serrant::Granularity::UposFeats}};
  static const std::map<std::string, serrant::ArrowStyle> kArrow = {{"ascii", serrant::ArrowStyle::Ascii},
                                                                    {"unicode", serrant::ArrowStyle::Unicode}};
  auto* co = cmd->add_option("--conllu-orig", conllu_orig, "CoNLL-U annotation of the original sentences");
  auto* cc = cmd->add_option("--conllu-cor", conllu_cor, "CoNLL-U annotation of the corrected sentences");
  co->needs(cc);
  cc->needs(co);
  cmd->add_option("--wordlist", config.wordlist_path, "Valid words, one per line (or $SERRANT_WORDLIST)");
  cmd->add_option("--lexicon", config.lexicon_path, "TSV lexicon for the built-in fallback annotator");
  cmd->add_option("--granularity", config.granularity, "SErCl granularity")
      ->transform(CLI::CheckedTransformer(kGranularity, CLI::ignore_case));
  cmd->add_option("--arrow", config.arrow, "Arrow used in two-sided types")
      ->transform(CLI::CheckedTransformer(kArrow, CLI::ignore_case));
  cmd->add_option("--out", output.out, "Typed M2 output (default stdout)");
  cmd->add_option("--report", output.report, "Write a type distribution report here");
  cmd->add_option("--report-format", output.report_format, "tsv or json")
      ->transform(CLI::CheckedTransformer(kReportFormats, CLI::ignore_case));
  cmd->add_option("--jobs", output.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

int run_typing(serrant::PipelineConfig config, const OutputOptions& output) {
  if (!config.wordlist_path) {
    if (const char* env = std::getenv("SERRANT_WORDLIST"); env != nullptr && *env != '\0') {
      config.wordlist_path = env;
    } else {
      std::cerr << "serrant: no wordlist given; spelling errors will not be detected\n";
    }
  }
  const auto inputs = serrant::load_inputs(config);
  const auto records = serrant::classify_corpus_parallel(config, inputs, output.jobs);
  write_text(output.out, serrant::emit_m2(records));
  if (!output.report.empty()) {
    write_text(output.report, serrant::emit_report(serrant::type_distribution(records), output.report_format));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grammatical error type classification"};
  app.require_subcommand(1);

  serrant::PipelineConfig classify_cfg;
  classify_cfg.mode = serrant::Mode::Classify;
  OutputOptions classify_out;
  std::string orig_path, cor_path;
  std::optional<std::string> classify_co, classify_cc;
  auto* classify = app.add_subcommand("classify", "Extract and type edits from parallel text");
  classify->add_option("--orig", orig_path, "Original sentences, one per line")->required();
  classify->add_option("--cor", cor_path, "Corrected sentences, one per line")->required();
  classify->add_option("--annotator", classify_cfg.annotator_id, "Annotator id for emitted edits")
      ->check(CLI::NonNegativeNumber);
  add_type_options(classify, classify_cfg, classify_out, classify_co, classify_cc);

  serrant::PipelineConfig retype_cfg;
  retype_cfg.mode = serrant::Mode::Retype;
  OutputOptions retype_out;
  std::string retype_m2;
  std::optional<std::string> retype_co, retype_cc;
  auto* retype = app.add_subcommand("retype", "Recompute the types of an existing M2 file");
  retype->add_option("--m2", retype_m2, "M2 input")->required();
  add_type_options(retype, retype_cfg, retype_out, retype_co, retype_cc);

  std::string stats_m2;
  std::optional<int> stats_annotator;
  serrant::ReportFormat stats_format = serrant::ReportFormat::Tsv;
  auto* stats = app.add_subcommand("stats", "Type distribution of an M2 file");
  stats->add_option("--m2", stats_m2, "M2 input")->required();
  stats->add_option("--annotator", stats_annotator, "Only count this annotator")->check(CLI::NonNegativeNumber);
  stats->add_option("--report-format", stats_format, "tsv or json")
      ->transform(CLI::CheckedTransformer(kReportFormats, CLI::ignore_case));

  std::string corrected_m2;
  auto* corrected = app.add_subcommand("corrected", "Print corrected sentences in the order retype expects");
  corrected->add_option("--m2", corrected_m2, "M2 input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*classify) {
      classify_cfg.orig_path = orig_path;
      classify_cfg.cor_path = cor_path;
      classify_cfg.conllu_orig_path = classify_co;
      classify_cfg.conllu_cor_path = classify_cc;
      return run_typing(classify_cfg, classify_out);
    }
    if (*retype) {
      retype_cfg.m2_path = retype_m2;
      retype_cfg.conllu_orig_path = retype_co;
      retype_cfg.conllu_cor_path = retype_cc;
      return run_typing(retype_cfg, retype_out);
    }
    if (*stats) {
      const auto records = serrant::parse_m2(serrant::text::read_file(stats_m2));
      std::cout << serrant::emit_report(serrant::type_distribution(records, stats_annotator), stats_format);
      return kExitOk;
    }
    if (*corrected) {
      const auto records = serrant::parse_m2(serrant::text::read_file(corrected_m2));
      for (const auto& sentence : serrant::corrected_sentences(records)) {
        std::cout << serrant::text::join(sentence, " ") << '\n';
      }
      return kExitOk;
    }
  } catch (const serrant::ConfigError& e) {
    std::cerr << "serrant: configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "serrant: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
