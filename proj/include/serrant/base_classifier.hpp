#pragma once

// ERRANT-style base typing of an edit. A fixed cascade; the first step that
// matches decides the category.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "serrant/alignment.hpp"
#include "serrant/errors.hpp"
#include "serrant/text.hpp"
#include "serrant/ud.hpp"

namespace serrant {

enum class BaseCategory {
  Spell, Orth, Morph, VerbTense, VerbForm, VerbInfl, VerbSva, NounNum, AdjForm, Pos, Other
};

struct BaseType {
  BaseCategory category = BaseCategory::Other;
  std::optional<Upos> pos;  // set iff category == Pos; AUX is stored as VERB

  static BaseType of(BaseCategory c) { return {c, std::nullopt}; }
  static BaseType part_of_speech(Upos tag) { return {BaseCategory::Pos, tag == Upos::AUX ? Upos::VERB : tag}; }
  bool is_pos(Upos tag) const { return category == BaseCategory::Pos && pos == tag; }

  friend bool operator==(const BaseType&, const BaseType&) = default;
};

// ERRANT-flavoured POS label: ADP is "Prep", both conjunction tags are "Conj".
inline std::string_view surface_pos(Upos tag) {
  switch (tag) {
    case Upos::ADP: return "Prep";
    case Upos::CCONJ:
    case Upos::SCONJ: return "Conj";
    case Upos::AUX: return "Verb";
    default: return title_case(tag);
  }
}

inline std::string to_string(const BaseType& b) {
  switch (b.category) {
    case BaseCategory::Spell: return "Spell";
    case BaseCategory::Orth: return "Orth";
    case BaseCategory::Morph: return "Morph";
    case BaseCategory::VerbTense: return "Verb:Tense";
    case BaseCategory::VerbForm: return "Verb:Form";
    case BaseCategory::VerbInfl: return "Verb:Infl";
    case BaseCategory::VerbSva: return "Verb:SVA";
    case BaseCategory::NounNum: return "Noun:Num";
    case BaseCategory::AdjForm: return "Adj:Form";
    case BaseCategory::Pos: return std::string(surface_pos(b.pos.value_or(Upos::X)));
    case BaseCategory::Other: return "Other";
  }
  return "Other";
}

class Wordlist {
 public:
  Wordlist() = default;
  explicit Wordlist(const std::vector<std::string>& words) {
    for (const auto& w : words) add(w);
  }

  void add(std::string_view word) { entries_.insert(text::to_lower(word)); }
  bool contains(std::string_view word) const { return entries_.count(text::to_lower(word)) > 0; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  // One word per line; blank lines are ignored.
  static Wordlist parse(std::string_view input) {
    Wordlist w;
    for (auto line : text::lines(input)) {
      for (const auto& tok : text::split_whitespace(line)) w.add(tok);
    }
    return w;
  }

 private:
  std::unordered_set<std::string> entries_;
};

namespace detail {

inline std::string squash_lower(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    for (char c : text::to_lower(t)) {
      if (!text::is_space(c)) out += c;
    }
  }
  return out;
}

inline Upos fold_aux(Upos tag) { return tag == Upos::AUX ? Upos::VERB : tag; }

inline bool is_verbal(Upos tag) { return tag == Upos::VERB || tag == Upos::AUX; }

inline bool shares_upos(const AnnotatedSentence& s, std::size_t begin, std::size_t end, Upos tag) {
  for (std::size_t i = begin; i < end; ++i) {
    if (fold_aux(s[i].upos) != tag) return false;
  }
  return true;
}

inline void require_covers(const AnnotatedSentence* s, std::size_t end, const char* side) {
  if (s == nullptr) throw AnnotationMissingError(std::string("no annotation for the ") + side + " sentence");
  if (end > s->size()) {
    throw AnnotationMissingError(std::string(side) + " annotation is shorter than the edit span");
  }
}

}  // namespace detail

// Case or whitespace difference only.
inline bool detect_orthography(const Edit& edit) {
  if (!edit.is_replacement()) return false;
  return detail::squash_lower(edit.src_tokens) == detail::squash_lower(edit.span.correction);
}

inline std::size_t spelling_threshold(std::string_view correction) {
  const auto len = text::code_points(correction).size();
  return std::max<std::size_t>(1, (len + 3) / 4);
}

inline bool detect_spelling(const Edit& edit, const Wordlist* wordlist) {
  if (wordlist == nullptr || wordlist->empty()) throw ConfigError("spell detection needs a non-empty wordlist");
  if (edit.src_tokens.size() != 1 || edit.span.correction.size() != 1) return false;
  const std::string src = text::to_lower(edit.src_tokens[0]);
  const std::string cor = text::to_lower(edit.span.correction[0]);
  if (wordlist->contains(src) || !wordlist->contains(cor)) return false;
  return text::edit_distance(src, cor) <= spelling_threshold(cor);
}

// Spell detection is skipped when wordlist is null.
inline BaseType classify_base(const Edit& edit, const AnnotatedSentence* src, const AnnotatedSentence* trg,
                              const Wordlist* wordlist) {
  if (edit.is_insertion() && edit.is_deletion()) throw ContractViolation("edit has two empty sides");

  // (1) missing or unnecessary tokens
  if (edit.is_insertion() || edit.is_deletion()) {
    const bool ins = edit.is_insertion();
    const AnnotatedSentence* side = ins ? trg : src;
    const std::size_t begin = ins ? edit.trg_start : edit.start();
    const std::size_t end = ins ? edit.trg_end() : edit.end();
    detail::require_covers(side, end, ins ? "corrected" : "source");
    const Token& head = span_head(*side, begin, end);
    if (end - begin == 1 || detail::shares_upos(*side, begin, end, detail::fold_aux(head.upos))) {
      return BaseType::part_of_speech(head.upos);
    }
    return BaseType::of(BaseCategory::Other);
  }

  detail::require_covers(src, edit.end(), "source");
  detail::require_covers(trg, edit.trg_end(), "corrected");

  // (2), (3)
  if (detect_orthography(edit)) return BaseType::of(BaseCategory::Orth);
  if (wordlist != nullptr && detect_spelling(edit, wordlist)) return BaseType::of(BaseCategory::Spell);

  const Token& o = span_head(*src, edit.start(), edit.end());
  const Token& c = span_head(*trg, edit.trg_start, edit.trg_end());
  const Upos ot = detail::fold_aux(o.upos);
  const Upos ct = detail::fold_aux(c.upos);

  if (edit.src_tokens.size() == 1 && edit.span.correction.size() == 1) {
    const bool same_lemma = text::to_lower(o.lemma) == text::to_lower(c.lemma);
    // (4)
    if (same_lemma && ot == ct) {
      auto differs = [&](std::string_view f) { return o.feat(f) != c.feat(f); };
      if (ot == Upos::NOUN && differs("Number")) return BaseType::of(BaseCategory::NounNum);
      if (ot == Upos::VERB) {
        if (differs("Tense")) return BaseType::of(BaseCategory::VerbTense);
        if (differs("VerbForm")) return BaseType::of(BaseCategory::VerbForm);
        if (differs("Person") || differs("Number")) return BaseType::of(BaseCategory::VerbSva);
        if (o.feats == c.feats && o.form != c.form) return BaseType::of(BaseCategory::VerbInfl);
      }
      if (ot == Upos::ADJ && differs("Degree")) return BaseType::of(BaseCategory::AdjForm);
      return BaseType::part_of_speech(o.upos);
    }
    // (5), (6)
    if (same_lemma) return BaseType::of(BaseCategory::Morph);
    if (ot == ct) return BaseType::part_of_speech(o.upos);
    return BaseType::of(BaseCategory::Other);
  }

  // (7) multi-token replacement
  if (detail::is_verbal(o.upos) && detail::is_verbal(c.upos) && o.feat("Tense") != c.feat("Tense")) {
    return BaseType::of(BaseCategory::VerbTense);
  }
  if (ot == ct && detail::shares_upos(*src, edit.start(), edit.end(), ot) &&
      detail::shares_upos(*trg, edit.trg_start, edit.trg_end(), ot)) {
    return BaseType::part_of_speech(o.upos);
  }
  // (8)
  return BaseType::of(BaseCategory::Other);
}

}  // namespace serrant
