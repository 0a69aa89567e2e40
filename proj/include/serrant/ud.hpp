#pragma once

// Universal Dependencies annotations: tokens, CoNLL-U reading and writing,
// span heads, and a lexicon-driven fallback annotator.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "serrant/corpus_io.hpp"
#include "serrant/errors.hpp"
#include "serrant/text.hpp"

namespace serrant {

enum class Upos : std::uint8_t {
  ADJ, ADP, ADV, AUX, CCONJ, DET, INTJ, NOUN, NUM, PART, PRON, PROPN, PUNCT, SCONJ, SYM, VERB, X
};

inline constexpr std::array<Upos, 17> kAllUpos = {
    Upos::ADJ,  Upos::ADP,  Upos::ADV,   Upos::AUX,   Upos::CCONJ, Upos::DET,
    Upos::INTJ, Upos::NOUN, Upos::NUM,   Upos::PART,  Upos::PRON,  Upos::PROPN,
    Upos::PUNCT, Upos::SCONJ, Upos::SYM, Upos::VERB, Upos::X};

namespace detail {
inline constexpr std::array<std::string_view, 17> kUposNames = {
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X"};
inline constexpr std::array<std::string_view, 17> kUposTitles = {
    "Adj", "Adp", "Adv", "Aux", "Cconj", "Det", "Intj", "Noun", "Num",
    "Part", "Pron", "Propn", "Punct", "Sconj", "Sym", "Verb", "X"};
}  // namespace detail

// "NOUN"
inline std::string_view to_string(Upos tag) { return detail::kUposNames[static_cast<std::size_t>(tag)]; }
// "Noun"
inline std::string_view title_case(Upos tag) { return detail::kUposTitles[static_cast<std::size_t>(tag)]; }

inline std::optional<Upos> parse_upos(std::string_view s) {
  for (std::size_t i = 0; i < detail::kUposNames.size(); ++i) {
    if (detail::kUposNames[i] == s) return static_cast<Upos>(i);
  }
  return std::nullopt;
}

using Features = std::map<std::string, std::string, std::less<>>;

inline constexpr int kRootHead = -1;

struct Token {
  std::size_t index = 0;
  std::string form;
  std::string lemma;  // lowercased
  Upos upos = Upos::X;
  Features feats;
  int head = kRootHead;  // 0-based, or kRootHead
  std::string deprel;

  std::string_view feat(std::string_view name) const {
    auto it = feats.find(name);
    return it == feats.end() ? std::string_view{} : std::string_view{it->second};
  }

  friend bool operator==(const Token&, const Token&) = default;
};

struct AnnotatedSentence {
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  const Token& operator[](std::size_t i) const { return tokens[i]; }
  std::vector<std::string> forms() const {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.form);
    return out;
  }
  std::vector<std::string> lemmas() const {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.lemma);
    return out;
  }

  friend bool operator==(const AnnotatedSentence&, const AnnotatedSentence&) = default;
};

// Empty string when the tree is well formed: heads in range, no self loops,
// exactly one root, acyclic.
inline std::string tree_problem(const AnnotatedSentence& s) {
  const auto n = static_cast<int>(s.size());
  if (n == 0) return {};
  int roots = 0;
  for (const auto& t : s.tokens) {
    if (t.head == kRootHead) {
      ++roots;
    } else if (t.head < 0 || t.head >= n) {
      return "head of token " + std::to_string(t.index + 1) + " out of range";
    } else if (t.head == static_cast<int>(t.index)) {
      return "token " + std::to_string(t.index + 1) + " heads itself";
    }
  }
  if (roots != 1) return std::to_string(roots) + " root tokens, expected 1";
  for (int start = 0; start < n; ++start) {
    int cur = start;
    for (int steps = 0; cur != kRootHead; ++steps) {
      if (steps > n) return "dependency cycle through token " + std::to_string(start + 1);
      cur = s.tokens[static_cast<std::size_t>(cur)].head;
    }
  }
  return {};
}

inline Features parse_feats(std::string_view column) {
  Features feats;
  if (column.empty() || column == "_") return feats;
  for (const auto& pair : text::split(column, "|")) {
    auto eq = pair.find('=');
    if (eq == std::string::npos || eq == 0) throw Error("bad feature '" + pair + "'");
    feats.emplace(pair.substr(0, eq), pair.substr(eq + 1));
  }
  return feats;
}

inline std::string format_feats(const Features& feats) {
  if (feats.empty()) return "_";
  std::string out;
  for (const auto& [k, v] : feats) {
    if (!out.empty()) out += '|';
    out += k + "=" + v;
  }
  return out;
}

inline std::vector<AnnotatedSentence> parse_conllu(std::string_view input) {
  std::vector<AnnotatedSentence> out;
  AnnotatedSentence current;
  std::size_t block_start = 0;
  std::vector<std::size_t> token_lines;

  auto finish = [&]() {
    if (current.tokens.empty()) return;
    for (std::size_t i = 0; i < current.tokens.size(); ++i) {
      if (current.tokens[i].head >= static_cast<int>(current.tokens.size())) {
        throw ParseError(token_lines[i], "head out of range");
      }
    }
    if (auto problem = tree_problem(current); !problem.empty()) throw ParseError(block_start, problem);
    out.push_back(std::move(current));
    current = {};
    token_lines.clear();
  };

  auto all = text::lines(input);
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::string_view line = all[i];
    const std::size_t line_no = i + 1;
    if (line.empty()) {
      finish();
      continue;
    }
    if (line.front() == '#') continue;
    auto cols = text::split(line, "\t");
    if (cols.size() != 10) {
      throw ParseError(line_no, "expected 10 columns, found " + std::to_string(cols.size()));
    }
    const std::string& id = cols[0];
    if (id.find('-') != std::string::npos || id.find('.') != std::string::npos) continue;
    int id_value = 0;
    if (!detail::parse_int(id, id_value)) throw ParseError(line_no, "non-integer id '" + id + "'");
    if (current.tokens.empty()) block_start = line_no;
    if (id_value != static_cast<int>(current.tokens.size()) + 1) {
      throw ParseError(line_no, "id " + id + " out of sequence");
    }
    Token tok;
    tok.index = current.tokens.size();
    tok.form = cols[1];
    tok.lemma = text::to_lower(cols[2]);
    auto upos = parse_upos(cols[3]);
    if (!upos) throw ParseError(line_no, "unknown UPOS '" + cols[3] + "'");
    tok.upos = *upos;
    try {
      tok.feats = parse_feats(cols[5]);
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    int head = 0;
    if (!detail::parse_int(cols[6], head) || head < 0) {
      throw ParseError(line_no, "bad head '" + cols[6] + "'");
    }
    tok.head = head - 1;  // 0 (root) becomes kRootHead
    tok.deprel = cols[7];
    current.tokens.push_back(std::move(tok));
    token_lines.push_back(line_no);
  }
  finish();
  return out;
}

inline std::string to_conllu(const AnnotatedSentence& s) {
  std::string out;
  for (const auto& t : s.tokens) {
    out += std::to_string(t.index + 1) + '\t' + t.form + '\t' + t.lemma + '\t' +
           std::string(to_string(t.upos)) + "\t_\t" + format_feats(t.feats) + '\t' +
           std::to_string(t.head + 1) + '\t' + (t.deprel.empty() ? "_" : t.deprel) + "\t_\t_\n";
  }
  out += '\n';
  return out;
}

inline std::string to_conllu(const std::vector<AnnotatedSentence>& sentences) {
  std::string out;
  for (const auto& s : sentences) out += to_conllu(s);
  return out;
}

inline const AnnotatedSentence& attach(const AnnotatedSentence& annotated,
                                       const std::vector<std::string>& surface) {
  const std::size_t common = std::min(annotated.size(), surface.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (annotated[i].form != surface[i]) {
      throw AttachError(i, "annotation form '" + annotated[i].form + "' does not match '" + surface[i] + "'");
    }
  }
  if (annotated.size() != surface.size()) {
    throw AttachError(common, "annotation has " + std::to_string(annotated.size()) +
                                  " tokens, sentence has " + std::to_string(surface.size()));
  }
  return annotated;
}

// The token in [start, end) whose head lies outside the span; leftmost wins.
inline const Token& span_head(const AnnotatedSentence& s, std::size_t start, std::size_t end) {
  if (start >= end || end > s.size()) {
    throw ContractViolation("span_head needs a non-empty span inside the sentence");
  }
  for (std::size_t i = start; i < end; ++i) {
    const int h = s[i].head;
    if (h == kRootHead || static_cast<std::size_t>(h) < start || static_cast<std::size_t>(h) >= end) {
      return s[i];
    }
  }
  throw ContractViolation("span has no external head; the tree is cyclic");
}

struct LexiconEntry {
  std::string lemma;
  Upos upos = Upos::X;
  Features feats;
};

// Word form -> annotation. Lookup tries the exact form, then the lowercased
// form unless the word is capitalized mid-sentence.
class Lexicon {
 public:
  void add(std::string form, LexiconEntry entry) { entries_.insert_or_assign(std::move(form), std::move(entry)); }
  std::size_t size() const { return entries_.size(); }

  const LexiconEntry* find(std::string_view form) const {
    auto it = entries_.find(std::string(form));
    return it == entries_.end() ? nullptr : &it->second;
  }

  // TSV: form, lemma, upos, feats. Blank lines and '#' comments are skipped.
  static Lexicon parse(std::string_view tsv) {
    Lexicon lex;
    auto all = text::lines(tsv);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i].empty() || all[i].front() == '#') continue;
      auto cols = text::split(all[i], "\t");
      if (cols.size() != 4) throw ParseError(i + 1, "lexicon line needs 4 columns");
      auto upos = parse_upos(cols[2]);
      if (!upos) throw ParseError(i + 1, "unknown UPOS '" + cols[2] + "'");
      LexiconEntry e{text::to_lower(cols[1]), *upos, {}};
      try {
        e.feats = parse_feats(cols[3]);
      } catch (const Error& err) {
        throw ParseError(i + 1, err.what());
      }
      lex.add(cols[0], std::move(e));
    }
    return lex;
  }

 private:
  std::unordered_map<std::string, LexiconEntry> entries_;
};

namespace detail {

inline bool has_suffix(std::string_view word, std::string_view suffix, std::size_t min_stem) {
  return word.size() >= suffix.size() + min_stem && word.ends_with(suffix);
}

inline bool is_punctuation(std::string_view form) {
  return !form.empty() && std::all_of(form.begin(), form.end(), [](unsigned char c) {
    return c < 0x80 && std::ispunct(c);
  });
}

inline LexiconEntry guess(std::string_view form, bool sentence_initial) {
  const std::string lower = text::to_lower(form);
  if (is_punctuation(form)) return {lower, Upos::PUNCT, {}};
  if (has_suffix(lower, "ing", 2)) return {lower.substr(0, lower.size() - 3), Upos::VERB, {{"VerbForm", "Ger"}}};
  if (has_suffix(lower, "ed", 2)) return {lower.substr(0, lower.size() - 2), Upos::VERB, {{"Tense", "Past"}}};
  if (has_suffix(lower, "ly", 2)) return {lower, Upos::ADV, {}};
  if (has_suffix(lower, "s", 2)) {
    return {lower.substr(0, lower.size() - 1), Upos::NOUN, {{"Number", "Plur"}}};
  }
  const auto first = static_cast<unsigned char>(form.front());
  if (!sentence_initial && first >= 'A' && first <= 'Z') return {lower, Upos::PROPN, {{"Number", "Sing"}}};
  return {lower, Upos::NOUN, {{"Number", "Sing"}}};
}

}  // namespace detail

// Crude annotator for demos and tests: lexicon lookup, suffix guesses, flat tree.
inline AnnotatedSentence fallback_annotate(const std::vector<std::string>& tokens, const Lexicon& lexicon) {
  AnnotatedSentence s;
  s.tokens.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& form = tokens[i];
    const auto first = form.empty() ? 0 : static_cast<unsigned char>(form.front());
    const bool capital_mid = i > 0 && first >= 'A' && first <= 'Z';
    const LexiconEntry* hit = lexicon.find(form);
    if (!hit && !capital_mid) hit = lexicon.find(text::to_lower(form));
    LexiconEntry entry = hit ? *hit : detail::guess(form.empty() ? std::string_view{"_"} : form, i == 0);
    Token tok;
    tok.index = i;
    tok.form = form;
    tok.lemma = std::move(entry.lemma);
    tok.upos = entry.upos;
    tok.feats = std::move(entry.feats);
    s.tokens.push_back(std::move(tok));
  }
  if (s.tokens.empty()) return s;
  std::size_t root = s.size() - 1;
  for (std::size_t i = s.size(); i-- > 0;) {
    if (s[i].upos != Upos::PUNCT) {
      root = i;
      break;
    }
  }
  for (auto& t : s.tokens) {
    t.head = t.index == root ? kRootHead : static_cast<int>(root);
    t.deprel = t.index == root ? "root" : "dep";
  }
  return s;
}

// Closed-class English words so the fallback annotator gets function words right.
inline Lexicon default_lexicon() {
  static constexpr std::string_view kTable =
      "the\tthe\tDET\tDefinite=Def|PronType=Art\n"
      "a\ta\tDET\tDefinite=Ind|PronType=Art\n"
      "an\ta\tDET\tDefinite=Ind|PronType=Art\n"
      "this\tthis\tDET\tNumber=Sing|PronType=Dem\n"
      "that\tthat\tSCONJ\t_\n"
      "these\tthis\tDET\tNumber=Plur|PronType=Dem\n"
      "those\tthat\tDET\tNumber=Plur|PronType=Dem\n"
      "some\tsome\tDET\t_\n"
      "any\tany\tDET\t_\n"
      "every\tevery\tDET\t_\n"
      "my\tmy\tPRON\tPerson=1|Poss=Yes|PronType=Prs\n"
      "your\tyour\tPRON\tPerson=2|Poss=Yes|PronType=Prs\n"
      "his\the\tPRON\tGender=Masc|Person=3|Poss=Yes|PronType=Prs\n"
      "her\tshe\tPRON\tGender=Fem|Person=3|Poss=Yes|PronType=Prs\n"
      "its\tit\tPRON\tPerson=3|Poss=Yes|PronType=Prs\n"
      "our\twe\tPRON\tPerson=1|Poss=Yes|PronType=Prs\n"
      "their\tthey\tPRON\tPerson=3|Poss=Yes|PronType=Prs\n"
      "i\ti\tPRON\tCase=Nom|Number=Sing|Person=1|PronType=Prs\n"
      "I\ti\tPRON\tCase=Nom|Number=Sing|Person=1|PronType=Prs\n"
      "me\ti\tPRON\tCase=Acc|Number=Sing|Person=1|PronType=Prs\n"
      "you\tyou\tPRON\tPerson=2|PronType=Prs\n"
      "he\the\tPRON\tCase=Nom|Number=Sing|Person=3|PronType=Prs\n"
      "him\the\tPRON\tCase=Acc|Number=Sing|Person=3|PronType=Prs\n"
      "she\tshe\tPRON\tCase=Nom|Number=Sing|Person=3|PronType=Prs\n"
      "it\tit\tPRON\tNumber=Sing|Person=3|PronType=Prs\n"
      "we\twe\tPRON\tCase=Nom|Number=Plur|Person=1|PronType=Prs\n"
      "us\twe\tPRON\tCase=Acc|Number=Plur|Person=1|PronType=Prs\n"
      "they\tthey\tPRON\tCase=Nom|Number=Plur|Person=3|PronType=Prs\n"
      "them\tthey\tPRON\tCase=Acc|Number=Plur|Person=3|PronType=Prs\n"
      "is\tbe\tAUX\tMood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin\n"
      "am\tbe\tAUX\tMood=Ind|Number=Sing|Person=1|Tense=Pres|VerbForm=Fin\n"
      "are\tbe\tAUX\tMood=Ind|Tense=Pres|VerbForm=Fin\n"
      "was\tbe\tAUX\tMood=Ind|Number=Sing|Tense=Past|VerbForm=Fin\n"
      "were\tbe\tAUX\tMood=Ind|Tense=Past|VerbForm=Fin\n"
      "be\tbe\tAUX\tVerbForm=Inf\n"
      "been\tbe\tAUX\tTense=Past|VerbForm=Part\n"
      "being\tbe\tAUX\tVerbForm=Ger\n"
      "have\thave\tAUX\tMood=Ind|Tense=Pres|VerbForm=Fin\n"
      "has\thave\tAUX\tMood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin\n"
      "had\thave\tAUX\tMood=Ind|Tense=Past|VerbForm=Fin\n"
      "do\tdo\tAUX\tMood=Ind|Tense=Pres|VerbForm=Fin\n"
      "does\tdo\tAUX\tMood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin\n"
      "did\tdo\tAUX\tMood=Ind|Tense=Past|VerbForm=Fin\n"
      "can\tcan\tAUX\tVerbForm=Fin\n"
      "could\tcould\tAUX\tVerbForm=Fin\n"
      "may\tmay\tAUX\tVerbForm=Fin\n"
      "might\tmight\tAUX\tVerbForm=Fin\n"
      "shall\tshall\tAUX\tVerbForm=Fin\n"
      "should\tshould\tAUX\tVerbForm=Fin\n"
      "will\twill\tAUX\tVerbForm=Fin\n"
      "would\twould\tAUX\tVerbForm=Fin\n"
      "must\tmust\tAUX\tVerbForm=Fin\n"
      "in\tin\tADP\t_\n"
      "on\ton\tADP\t_\n"
      "at\tat\tADP\t_\n"
      "of\tof\tADP\t_\n"
      "for\tfor\tADP\t_\n"
      "to\tto\tADP\t_\n"
      "with\twith\tADP\t_\n"
      "from\tfrom\tADP\t_\n"
      "by\tby\tADP\t_\n"
      "about\tabout\tADP\t_\n"
      "into\tinto\tADP\t_\n"
      "as\tas\tADP\t_\n"
      "and\tand\tCCONJ\t_\n"
      "or\tor\tCCONJ\t_\n"
      "but\tbut\tCCONJ\t_\n"
      "because\tbecause\tSCONJ\t_\n"
      "if\tif\tSCONJ\t_\n"
      "when\twhen\tSCONJ\t_\n"
      "not\tnot\tPART\tPolarity=Neg\n"
      "very\tvery\tADV\t_\n"
      "also\talso\tADV\t_\n";
  return Lexicon::parse(kTable);
}

}  // namespace serrant
