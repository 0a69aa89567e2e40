#pragma once

#include <string>
#include <vector>

#include "serrant/serrant.hpp"

namespace fixture {

struct Tok {
  std::string form;
  std::string lemma;
  serrant::Upos upos;
  std::string feats = "_";
};

// Flat tree rooted at the last token.
inline serrant::AnnotatedSentence sentence(const std::vector<Tok>& toks) {
  serrant::AnnotatedSentence s;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    serrant::Token t;
    t.index = i;
    t.form = toks[i].form;
    t.lemma = serrant::text::to_lower(toks[i].lemma);
    t.upos = toks[i].upos;
    t.feats = serrant::parse_feats(toks[i].feats);
    t.head = i + 1 == toks.size() ? serrant::kRootHead : static_cast<int>(toks.size() - 1);
    s.tokens.push_back(std::move(t));
  }
  return s;
}

// The single edit between two annotated sentences.
inline serrant::Edit only_edit(const serrant::AnnotatedSentence& src, const serrant::AnnotatedSentence& trg) {
  const auto a = src.forms(), b = trg.forms();
  const auto la = src.lemmas(), lb = trg.lemmas();
  auto edits = serrant::extract_edits(a, b, {la, lb});
  if (edits.size() != 1) throw std::runtime_error("expected exactly one edit, got " + std::to_string(edits.size()));
  return edits[0];
}

inline std::string type_of(const serrant::AnnotatedSentence& src, const serrant::AnnotatedSentence& trg,
                           const serrant::Wordlist* wordlist = nullptr,
                           serrant::Granularity g = serrant::Granularity::Upos) {
  return serrant::render(serrant::classify_edit(only_edit(src, trg), src, trg, wordlist, g));
}

}  // namespace fixture
