#pragma once

// End-to-end orchestration: ingest, annotate, extract or reuse edits, type
// every edit and hand back M2 records in input order.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "serrant/alignment.hpp"
#include "serrant/base_classifier.hpp"
#include "serrant/combiner.hpp"
#include "serrant/corpus_io.hpp"
#include "serrant/errors.hpp"
#include "serrant/sercl.hpp"
#include "serrant/text.hpp"
#include "serrant/ud.hpp"

namespace serrant {

enum class Mode { Classify, Retype };
enum class ArrowStyle { Ascii, Unicode };

inline std::string_view arrow_text(ArrowStyle s) { return s == ArrowStyle::Unicode ? kUnicodeArrow : kAsciiArrow; }

struct PipelineConfig {
  Mode mode = Mode::Classify;
  Granularity granularity = Granularity::Upos;
  ArrowStyle arrow = ArrowStyle::Ascii;
  int annotator_id = 0;
  std::optional<std::string> orig_path;
  std::optional<std::string> cor_path;
  std::optional<std::string> m2_path;
  std::optional<std::string> conllu_orig_path;
  std::optional<std::string> conllu_cor_path;
  std::optional<std::string> wordlist_path;
  std::optional<std::string> lexicon_path;
};

struct PipelineInputs {
  std::string original;
  std::string corrected;
  std::string m2;
  std::optional<std::string> conllu_orig;
  std::optional<std::string> conllu_cor;
  std::optional<Wordlist> wordlist;  // spell detection is off without one
  Lexicon lexicon = default_lexicon();
};

// Reads every file named by the config. Missing input files raise
// IngestionError; unusable wordlist or lexicon files raise ConfigError.
inline PipelineInputs load_inputs(const PipelineConfig& config) {
  PipelineInputs in;
  if (config.mode == Mode::Classify) {
    if (!config.orig_path || !config.cor_path) throw ConfigError("classify needs both parallel text files");
    in.original = text::read_file(*config.orig_path);
    in.corrected = text::read_file(*config.cor_path);
  } else {
    if (!config.m2_path) throw ConfigError("retype needs an M2 file");
    in.m2 = text::read_file(*config.m2_path);
  }
  if (config.conllu_orig_path.has_value() != config.conllu_cor_path.has_value()) {
    throw ConfigError("CoNLL-U annotations must be given for both sides or neither");
  }
  if (config.conllu_orig_path) in.conllu_orig = text::read_file(*config.conllu_orig_path);
  if (config.conllu_cor_path) in.conllu_cor = text::read_file(*config.conllu_cor_path);
  try {
    if (config.wordlist_path) {
      in.wordlist = Wordlist::parse(text::read_file(*config.wordlist_path));
      if (in.wordlist->empty()) throw ConfigError("wordlist " + *config.wordlist_path + " is empty");
    }
    if (config.lexicon_path) in.lexicon = Lexicon::parse(text::read_file(*config.lexicon_path));
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return in;
}

inline SerrantType classify_edit(const Edit& edit, const AnnotatedSentence& src, const AnnotatedSentence& trg,
                                 const Wordlist* wordlist, Granularity granularity) {
  const BaseType base = classify_base(edit, &src, &trg, wordlist);
  const SerclType sercl = classify_sercl(edit, &src, &trg, granularity);
  return combine(base, sercl, make_context(edit, &src, &trg));
}

// Distinct annotators with at least one real (non-noop, non-empty) edit, ascending.
inline std::vector<int> correction_groups(const M2Record& rec) {
  std::vector<int> ids;
  for (const auto& e : rec.edits) {
    const bool empty = e.span.start == e.span.end && e.span.correction.empty();
    if (!e.span.is_noop() && !empty) ids.push_back(e.annotator);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

namespace detail {

struct AnnotatorEdits {
  std::vector<std::size_t> positions;  // indices into M2Record::edits
  std::vector<Edit> edits;
  std::vector<std::string> corrected;
};

inline AnnotatorEdits collect_edits(const M2Record& rec, int annotator) {
  AnnotatorEdits out;
  for (std::size_t k = 0; k < rec.edits.size(); ++k) {
    const auto& e = rec.edits[k];
    const bool empty = e.span.start == e.span.end && e.span.correction.empty();
    if (e.annotator == annotator && !e.span.is_noop() && !empty) out.positions.push_back(k);
  }
  std::stable_sort(out.positions.begin(), out.positions.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = rec.edits[a].span;
    const auto& y = rec.edits[b].span;
    return std::pair(x.start, x.end) < std::pair(y.start, y.end);
  });
  for (std::size_t k : out.positions) out.edits.push_back(Edit{rec.edits[k].span, {}, 0});
  try {
    out.corrected = place_edits(rec.source_tokens, out.edits);
  } catch (const ContractViolation&) {
    throw Error("annotator " + std::to_string(annotator) + " has overlapping edits");
  }
  return out;
}

inline std::vector<AnnotatedSentence> parse_annotations(const std::optional<std::string>& text, const char* what) {
  if (!text) return {};
  try {
    return parse_conllu(*text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), std::string(what) + " CoNLL-U: " + e.what());
  }
}

// Runs task(i) for i in [0, n) on up to workers threads; output order is
// index order and the lowest-index failure is rethrown.
template <typename T>
std::vector<T> ordered_map(std::size_t n, std::size_t workers, const std::function<T(std::size_t)>& task) {
  std::vector<T> results(n);
  std::vector<std::exception_ptr> errors(n);
  auto work = [&](std::atomic<std::size_t>& next) {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::atomic<std::size_t> next{0};
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    work(next);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, std::ref(next));
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

template <typename F>
auto for_sentence(std::size_t i, F&& f) {
  try {
    return f();
  } catch (const PipelineError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError(i, e.what());
  }
}

inline std::vector<M2Record> classify_parallel_text(const PipelineConfig& config, const PipelineInputs& in,
                                                    std::size_t workers) {
  const auto pairs = read_parallel(in.original, in.corrected);
  const auto orig_ann = parse_annotations(in.conllu_orig, "original");
  const auto cor_ann = parse_annotations(in.conllu_cor, "corrected");
  for (const auto* ann : {&orig_ann, &cor_ann}) {
    const bool given = ann == &orig_ann ? in.conllu_orig.has_value() : in.conllu_cor.has_value();
    if (given && ann->size() != pairs.size()) {
      throw PipelineError(std::min(ann->size(), pairs.size()),
                          "annotation has " + std::to_string(ann->size()) + " sentences, text has " +
                              std::to_string(pairs.size()));
    }
  }
  const Wordlist* wordlist = in.wordlist ? &*in.wordlist : nullptr;
  const std::string arrow(arrow_text(config.arrow));

  return ordered_map<M2Record>(pairs.size(), workers, [&](std::size_t i) {
    return for_sentence(i, [&]() {
      const auto& [src_tokens, trg_tokens] = pairs[i];
      const AnnotatedSentence src = in.conllu_orig ? attach(orig_ann[i], src_tokens)
                                                   : fallback_annotate(src_tokens, in.lexicon);
      const AnnotatedSentence trg = in.conllu_cor ? attach(cor_ann[i], trg_tokens)
                                                  : fallback_annotate(trg_tokens, in.lexicon);
      const auto src_lemmas = src.lemmas();
      const auto trg_lemmas = trg.lemmas();
      M2Record rec;
      rec.source_tokens = src_tokens;
      for (const auto& edit : extract_edits(src_tokens, trg_tokens, {src_lemmas, trg_lemmas})) {
        const auto type = classify_edit(edit, src, trg, wordlist, config.granularity);
        rec.edits.push_back({edit.span, render(type, arrow), config.annotator_id});
      }
      return rec;
    });
  });
}

inline std::vector<M2Record> retype_m2(const PipelineConfig& config, const PipelineInputs& in, std::size_t workers) {
  const auto records = parse_m2(in.m2);
  const auto orig_ann = parse_annotations(in.conllu_orig, "original");
  const auto cor_ann = parse_annotations(in.conllu_cor, "corrected");

  std::vector<std::size_t> first_group(records.size() + 1, 0);
  for (std::size_t i = 0; i < records.size(); ++i) {
    first_group[i + 1] = first_group[i] + correction_groups(records[i]).size();
  }
  if (in.conllu_orig && orig_ann.size() != records.size()) {
    throw PipelineError(std::min(orig_ann.size(), records.size()),
                        "original annotation has " + std::to_string(orig_ann.size()) + " sentences, M2 has " +
                            std::to_string(records.size()));
  }
  if (in.conllu_cor && cor_ann.size() != first_group.back()) {
    const auto& fg = first_group;
    const auto bad = static_cast<std::size_t>(std::upper_bound(fg.begin(), fg.end(), cor_ann.size()) - fg.begin());
    throw PipelineError(bad == 0 ? 0 : bad - 1,
                        "corrected annotation has " + std::to_string(cor_ann.size()) + " sentences, expected " +
                            std::to_string(first_group.back()));
  }
  const Wordlist* wordlist = in.wordlist ? &*in.wordlist : nullptr;
  const std::string arrow(arrow_text(config.arrow));

  return ordered_map<M2Record>(records.size(), workers, [&](std::size_t i) {
    return for_sentence(i, [&]() {
      M2Record rec = records[i];
      const auto groups = correction_groups(rec);
      if (groups.empty()) return rec;
      const AnnotatedSentence src = in.conllu_orig ? attach(orig_ann[i], rec.source_tokens)
                                                   : fallback_annotate(rec.source_tokens, in.lexicon);
      for (std::size_t g = 0; g < groups.size(); ++g) {
        auto collected = collect_edits(rec, groups[g]);
        const AnnotatedSentence trg = in.conllu_cor ? attach(cor_ann[first_group[i] + g], collected.corrected)
                                                    : fallback_annotate(collected.corrected, in.lexicon);
        for (std::size_t k = 0; k < collected.edits.size(); ++k) {
          const auto type = classify_edit(collected.edits[k], src, trg, wordlist, config.granularity);
          rec.edits[collected.positions[k]].type = render(type, arrow);
        }
      }
      return rec;
    });
  });
}

}  // namespace detail

// Corrected sentences in the order retype expects corrected-side CoNLL-U
// blocks: per record, one per annotator group, groups ascending.
inline std::vector<std::vector<std::string>> corrected_sentences(const std::vector<M2Record>& records) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (int id : correction_groups(records[i])) {
      detail::for_sentence(i, [&]() { out.push_back(detail::collect_edits(records[i], id).corrected); });
    }
  }
  return out;
}

// Same output as run() for any worker count.
inline std::vector<M2Record> classify_corpus_parallel(const PipelineConfig& config, const PipelineInputs& inputs,
                                                      std::size_t worker_count) {
  if (worker_count == 0) throw ContractViolation("worker_count must be at least 1");
  if (config.mode == Mode::Classify) return detail::classify_parallel_text(config, inputs, worker_count);
  return detail::retype_m2(config, inputs, worker_count);
}

inline std::vector<M2Record> run(const PipelineConfig& config, const PipelineInputs& inputs) {
  return classify_corpus_parallel(config, inputs, 1);
}

}  // namespace serrant
