#include <gtest/gtest.h>

#include "serrant/pipeline.hpp"
#include "support/generators.hpp"

namespace serrant {
namespace {

PipelineConfig classify_config() {
  PipelineConfig c;
  c.mode = Mode::Classify;
  return c;
}

PipelineConfig retype_config() {
  PipelineConfig c;
  c.mode = Mode::Retype;
  return c;
}

TEST(Run, ClassifySpelling) {
  PipelineInputs in;
  in.original = "I werk\n";
  in.corrected = "I work\n";
  in.wordlist = Wordlist({"i", "work"});
  auto recs = run(classify_config(), in);
  ASSERT_EQ(recs.size(), 1u);
  ASSERT_EQ(recs[0].edits.size(), 1u);
  EXPECT_EQ(recs[0].edits[0].type, "R:Spell");
  EXPECT_EQ(recs[0].edits[0].span, (EditSpan{1, 2, {"work"}}));
}

TEST(Run, IdenticalPairHasNoEdits) {
  PipelineInputs in;
  in.original = "Fine .\n";
  in.corrected = "Fine .\n";
  auto recs = run(classify_config(), in);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_TRUE(recs[0].edits.empty());
}

TEST(Run, AnnotatorIdAndArrow) {
  PipelineInputs in;
  in.original = "He founded apple .\n";
  in.corrected = "He founded Apple .\n";
  auto cfg = classify_config();
  cfg.annotator_id = 3;
  cfg.arrow = ArrowStyle::Unicode;
  auto recs = run(cfg, in);
  ASSERT_EQ(recs[0].edits.size(), 1u);
  EXPECT_EQ(recs[0].edits[0].type, "R:Noun→Propn");
  EXPECT_EQ(recs[0].edits[0].annotator, 3);
}

TEST(Run, RetypeKeepsNoopAndSpans) {
  PipelineInputs in;
  in.m2 =
      "S A b\nA -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0\n\n"
      "S I ride the my bike .\nA 2 3|||X||||||REQUIRED|||-NONE-|||0\nA 1 2|||X|||drive|||REQUIRED|||-NONE-|||1\n";
  auto recs = run(retype_config(), in);
  const auto original = parse_m2(in.m2);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0], original[0]);
  ASSERT_EQ(recs[1].edits.size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_EQ(recs[1].edits[k].span, original[1].edits[k].span);
    EXPECT_EQ(recs[1].edits[k].annotator, original[1].edits[k].annotator);
  }
  EXPECT_EQ(recs[1].edits[0].type, "U:Det");
  EXPECT_EQ(recs[1].edits[1].type, "R:Noun:WC");  // fallback tags unknown words as nouns
}

TEST(Run, RetypeWithAnnotationsUsesGroupOrder) {
  PipelineInputs in;
  in.m2 = "S a cat\nA 1 2|||X|||cats|||REQUIRED|||-NONE-|||1\nA 1 2|||X|||dog|||REQUIRED|||-NONE-|||0\n";
  const auto sentences = corrected_sentences(parse_m2(in.m2));
  ASSERT_EQ(sentences.size(), 2u);
  EXPECT_EQ(sentences[0], (std::vector<std::string>{"a", "dog"}));
  EXPECT_EQ(sentences[1], (std::vector<std::string>{"a", "cats"}));
  in.conllu_orig = "1\ta\ta\tDET\t_\t_\t2\tdet\t_\t_\n2\tcat\tcat\tNOUN\t_\tNumber=Sing\t0\troot\t_\t_\n\n";
  in.conllu_cor =
      "1\ta\ta\tDET\t_\t_\t2\tdet\t_\t_\n2\tdog\tdog\tNOUN\t_\tNumber=Sing\t0\troot\t_\t_\n\n"
      "1\ta\ta\tDET\t_\t_\t2\tdet\t_\t_\n2\tcats\tcat\tNOUN\t_\tNumber=Plur\t0\troot\t_\t_\n\n";
  auto cfg = retype_config();
  cfg.granularity = Granularity::UposFeats;
  auto recs = run(cfg, in);
  EXPECT_EQ(recs[0].edits[0].type, "R:Noun:Num");
  EXPECT_EQ(recs[0].edits[1].type, "R:Noun:WC");
}

TEST(Run, Errors) {
  PipelineInputs in;
  in.original = "a b\nc\n";
  in.corrected = "a c\nc\n";
  in.conllu_orig = "1\ta\ta\tDET\t_\t_\t2\tdet\t_\t_\n2\tb\tb\tNOUN\t_\t_\t0\troot\t_\t_\n\n";
  in.conllu_cor = in.conllu_orig;
  try {
    run(classify_config(), in);
    FAIL();
  } catch (const PipelineError& e) {
    EXPECT_EQ(e.sentence(), 1u);
  }
  // form mismatch on the corrected side of sentence 0
  in.original = "a b\n";
  in.corrected = "a c\n";
  try {
    run(classify_config(), in);
    FAIL();
  } catch (const PipelineError& e) {
    EXPECT_EQ(e.sentence(), 0u);
  }
  PipelineInputs overlap;
  overlap.m2 = "S a b c\nA 0 2|||X|||d|||REQUIRED|||-NONE-|||0\nA 1 3|||X|||e|||REQUIRED|||-NONE-|||0\n";
  EXPECT_THROW(run(retype_config(), overlap), PipelineError);
  PipelineInputs bad_m2;
  bad_m2.m2 = "A 0 1|||X|||d|||REQUIRED|||-NONE-|||0\n";
  EXPECT_THROW(run(retype_config(), bad_m2), ParseError);
  PipelineInputs lines;
  lines.original = "a\nb\n";
  lines.corrected = "a\n";
  EXPECT_THROW(run(classify_config(), lines), IngestionError);
  EXPECT_THROW(classify_corpus_parallel(classify_config(), PipelineInputs{}, 0), ContractViolation);
}

TEST(LoadInputs, Configuration) {
  auto cfg = classify_config();
  EXPECT_THROW(load_inputs(cfg), ConfigError);
  cfg.orig_path = "/nonexistent/orig.txt";
  cfg.cor_path = "/nonexistent/cor.txt";
  EXPECT_THROW(load_inputs(cfg), IngestionError);
  auto r = retype_config();
  r.m2_path = "/dev/null";
  r.conllu_orig_path = "/dev/null";
  EXPECT_THROW(load_inputs(r), ConfigError);
  r.conllu_orig_path.reset();
  r.wordlist_path = "/dev/null";
  EXPECT_THROW(load_inputs(r), ConfigError);
}

std::string synthetic_corpus(gen::Rng& rng, std::size_t n, std::string& corrected) {
  std::string original;
  for (std::size_t i = 0; i < n; ++i) {
    auto src = gen::sentence(rng, 10);
    auto trg = src;
    for (int k = 0; k < 2; ++k) {
      if (!trg.empty() && gen::coin(rng)) trg[gen::below(rng, trg.size())] = gen::pick(rng, gen::words());
      if (gen::coin(rng, 0.3)) trg.insert(trg.begin() + static_cast<long>(gen::below(rng, trg.size() + 1)), "the");
      if (!trg.empty() && gen::coin(rng, 0.3)) trg.erase(trg.begin() + static_cast<long>(gen::below(rng, trg.size())));
    }
    original += text::join(src, " ") + "\n";
    corrected += text::join(trg, " ") + "\n";
  }
  return original;
}

TEST(ClassifyCorpusParallel, MatchesSequential) {
  gen::Rng rng(47);
  PipelineInputs in;
  in.original = synthetic_corpus(rng, 300, in.corrected);
  in.wordlist = Wordlist(gen::words());
  const auto seq = run(classify_config(), in);
  for (std::size_t w : {2u, 3u, 8u}) EXPECT_EQ(classify_corpus_parallel(classify_config(), in, w), seq);
  PipelineInputs empty;
  EXPECT_TRUE(classify_corpus_parallel(classify_config(), empty, 4).empty());
}

TEST(ClassifyCorpusParallel, FirstErrorIsDeterministic) {
  PipelineInputs in;
  in.m2 = "S a\n\nS a b\nA 0 2|||X|||d|||REQUIRED|||-NONE-|||0\nA 1 2|||X|||e|||REQUIRED|||-NONE-|||0\n\n"
          "S c d\nA 0 2|||X|||d|||REQUIRED|||-NONE-|||0\nA 0 1|||X|||e|||REQUIRED|||-NONE-|||0\n";
  for (std::size_t w : {1u, 4u}) {
    try {
      classify_corpus_parallel(retype_config(), in, w);
      FAIL();
    } catch (const PipelineError& e) {
      EXPECT_EQ(e.sentence(), 1u);
    }
  }
}

}  // namespace
}  // namespace serrant
