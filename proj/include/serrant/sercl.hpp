#pragma once

// SErCl typing: the UD description of the source span head paired with the
// UD description of the correction span head.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "serrant/alignment.hpp"
#include "serrant/errors.hpp"
#include "serrant/text.hpp"
#include "serrant/ud.hpp"

namespace serrant {

enum class Granularity { Upos, UposFeats };

inline constexpr std::string_view kAsciiArrow = "->";
inline constexpr std::string_view kUnicodeArrow = "→";

struct SerclSide {
  std::optional<Upos> tag;  // empty for an empty span
  std::vector<std::string> qualifiers;

  friend bool operator==(const SerclSide&, const SerclSide&) = default;
};

struct SerclType {
  SerclSide left;
  SerclSide right;
  bool collapsed = false;

  static SerclType make(SerclSide left, SerclSide right) {
    if (!left.tag && !right.tag) throw ContractViolation("SErCl type with two empty sides");
    SerclType t{std::move(left), std::move(right), false};
    t.collapsed = t.left == t.right;
    return t;
  }
  static SerclType pair(Upos left, Upos right) { return make({left, {}}, {right, {}}); }

  bool qualified() const { return !left.qualifiers.empty() || !right.qualifiers.empty(); }

  friend bool operator==(const SerclType&, const SerclType&) = default;
};

// Readable feature values: Sing -> singular, Past -> past.
inline std::string describe_feature_value(std::string_view value) {
  struct Name {
    std::string_view ud;
    std::string_view text;
  };
  static constexpr Name kNames[] = {
      {"Sing", "singular"},     {"Plur", "plural"},       {"Dual", "dual"},
      {"Pres", "present"},      {"Past", "past"},         {"Fut", "future"},
      {"Pqp", "pluperfect"},    {"Fin", "finite"},        {"Inf", "infinitive"},
      {"Ger", "gerund"},        {"Part", "participle"},   {"Conv", "converb"},
      {"Pos", "positive"},      {"Cmp", "comparative"},   {"Sup", "superlative"},
      {"Ind", "indicative"},    {"Imp", "imperative"},    {"Sub", "subjunctive"},
      {"Cnd", "conditional"},   {"Nom", "nominative"},    {"Acc", "accusative"},
      {"Gen", "genitive"},      {"Dat", "dative"},        {"Def", "definite"},
      {"Prs", "personal"},      {"Dem", "demonstrative"}, {"Art", "article"},
      {"Int", "interrogative"}, {"Rel", "relative"},      {"Neg", "negative"},
      {"Masc", "masculine"},    {"Fem", "feminine"},      {"Neut", "neuter"},
      {"Perf", "perfect"},      {"Prog", "progressive"},  {"Act", "active"},
      {"Pass", "passive"}};
  for (const auto& n : kNames) {
    if (n.ud == value) return std::string(n.text);
  }
  return text::to_lower(value);
}

namespace detail {

inline SerclSide describe_span(const AnnotatedSentence* s, std::size_t begin, std::size_t end, const char* side) {
  if (begin == end) return {};
  if (s == nullptr) throw AnnotationMissingError(std::string("no annotation for the ") + side + " sentence");
  if (end > s->size()) throw AnnotationMissingError(std::string(side) + " annotation is shorter than the span");
  return {span_head(*s, begin, end).upos, {}};
}

}  // namespace detail

inline SerclType classify_sercl(const Edit& edit, const AnnotatedSentence* src, const AnnotatedSentence* trg,
                                Granularity granularity) {
  if (edit.is_insertion() && edit.is_deletion()) throw ContractViolation("edit has two empty sides");
  SerclSide left = detail::describe_span(src, edit.start(), edit.end(), "source");
  SerclSide right = detail::describe_span(trg, edit.trg_start, edit.trg_end(), "corrected");
  if (granularity == Granularity::UposFeats && left.tag && right.tag) {
    const Token& o = span_head(*src, edit.start(), edit.end());
    const Token& c = span_head(*trg, edit.trg_start, edit.trg_end());
    // Features are sorted by name.
    for (const auto& [name, value] : o.feats) {
      auto other = c.feats.find(name);
      if (other != c.feats.end() && other->second != value) {
        left.qualifiers.push_back(describe_feature_value(value));
        right.qualifiers.push_back(describe_feature_value(other->second));
      }
    }
  }
  return SerclType::make(std::move(left), std::move(right));
}

inline std::string render(const SerclSide& side) {
  if (!side.tag) return "None";
  std::string out(title_case(*side.tag));
  for (const auto& q : side.qualifiers) out += ":" + q;
  return out;
}

inline std::string render(const SerclType& t, std::string_view arrow = kAsciiArrow) {
  if (t.collapsed) return render(t.left);
  return render(t.left) + std::string(arrow) + render(t.right);
}

}  // namespace serrant
