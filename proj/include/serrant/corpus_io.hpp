#pragma once

// M2 reading/writing and parallel plain-text ingestion.
//
// Block layout:
//   S tok tok tok
//   A <start> <end>|||<type>|||<correction>|||REQUIRED|||-NONE-|||<annotator>
// Blocks are separated by one blank line. Offsets index source tokens;
// "-1 -1" marks a noop annotation.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "serrant/errors.hpp"
#include "serrant/text.hpp"

namespace serrant {

inline constexpr int kNoopOffset = -1;
inline constexpr std::string_view kNoneField = "-NONE-";

struct EditSpan {
  int start = 0;
  int end = 0;  // exclusive
  std::vector<std::string> correction;

  bool is_noop() const { return start == kNoopOffset && end == kNoopOffset; }
  bool is_insertion() const { return start == end && !is_noop(); }
  bool is_deletion() const { return start < end && correction.empty(); }

  friend bool operator==(const EditSpan&, const EditSpan&) = default;
};

struct M2Edit {
  EditSpan span;
  std::string type;
  int annotator = 0;

  friend bool operator==(const M2Edit&, const M2Edit&) = default;
};

struct M2Record {
  std::vector<std::string> source_tokens;
  std::vector<M2Edit> edits;

  friend bool operator==(const M2Record&, const M2Record&) = default;
};

namespace detail {

inline bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

inline bool offsets_valid(const EditSpan& span, std::size_t sentence_len) {
  if (span.is_noop()) return true;
  return span.start >= 0 && span.start <= span.end &&
         static_cast<std::size_t>(span.end) <= sentence_len;
}

inline bool token_valid(std::string_view tok) {
  if (tok.empty() || tok.find("|||") != std::string_view::npos) return false;
  return std::none_of(tok.begin(), tok.end(), text::is_space);
}

inline M2Edit parse_a_line(std::string_view body, std::size_t line_no, std::size_t sentence_len) {
  auto fields = text::split(body, "|||");
  if (fields.size() != 6) {
    throw ParseError(line_no, "A-line has " + std::to_string(fields.size()) + " fields, expected 6");
  }
  auto offsets = text::split(fields[0], " ");
  M2Edit edit;
  if (offsets.size() != 2 || !parse_int(offsets[0], edit.span.start) ||
      !parse_int(offsets[1], edit.span.end)) {
    throw ParseError(line_no, "bad span '" + fields[0] + "'");
  }
  if (!offsets_valid(edit.span, sentence_len)) {
    throw ParseError(line_no, "span " + fields[0] + " out of range for " +
                                  std::to_string(sentence_len) + " tokens");
  }
  edit.type = fields[1];
  if (!fields[2].empty() && fields[2] != kNoneField) edit.span.correction = text::split(fields[2], " ");
  if (!parse_int(fields[5], edit.annotator) || edit.annotator < 0) {
    throw ParseError(line_no, "bad annotator id '" + fields[5] + "'");
  }
  return edit;
}

}  // namespace detail

inline std::vector<M2Record> parse_m2(std::string_view input) {
  std::vector<M2Record> records;
  bool in_block = false;
  auto all = text::lines(input);
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::string_view line = all[i];
    std::size_t line_no = i + 1;
    if (line.empty()) {
      in_block = false;
      continue;
    }
    if (line == "S" || line.starts_with("S ")) {
      M2Record rec;
      if (line.size() > 2) rec.source_tokens = text::split(line.substr(2), " ");
      records.push_back(std::move(rec));
      in_block = true;
    } else if (line.starts_with("A ")) {
      if (!in_block) throw ParseError(line_no, "A-line outside of a sentence block");
      auto& rec = records.back();
      rec.edits.push_back(detail::parse_a_line(line.substr(2), line_no, rec.source_tokens.size()));
    } else {
      throw ParseError(line_no, "unrecognized line prefix");
    }
  }
  return records;
}

// Throws ValidationError naming the offending record.
inline void validate(const M2Record& rec, std::size_t index) {
  for (const auto& tok : rec.source_tokens) {
    if (!detail::token_valid(tok)) throw ValidationError(index, "invalid source token '" + tok + "'");
  }
  for (const auto& e : rec.edits) {
    if (!detail::offsets_valid(e.span, rec.source_tokens.size())) {
      throw ValidationError(index, "edit span " + std::to_string(e.span.start) + " " +
                                       std::to_string(e.span.end) + " out of range");
    }
    if (e.annotator < 0) throw ValidationError(index, "negative annotator id");
    if (e.type.find("|||") != std::string::npos ||
        std::any_of(e.type.begin(), e.type.end(), [](char c) { return c == '\n' || c == '\r'; })) {
      throw ValidationError(index, "invalid type label '" + e.type + "'");
    }
    if (e.span.correction.size() == 1 && e.span.correction[0] == kNoneField) {
      throw ValidationError(index, "correction token collides with -NONE-");
    }
    for (const auto& tok : e.span.correction) {
      if (!detail::token_valid(tok)) throw ValidationError(index, "invalid correction token '" + tok + "'");
    }
  }
}

// Empty corrections are written as "-NONE-" on noop lines and as an empty
// field on deletions.
inline std::string emit_m2(const std::vector<M2Record>& records) {
  std::string out;
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& rec = records[r];
    validate(rec, r);
    if (r > 0) out += '\n';
    out += "S ";
    out += text::join(rec.source_tokens, " ");
    out += '\n';
    for (const auto& e : rec.edits) {
      out += "A ";
      out += std::to_string(e.span.start);
      out += ' ';
      out += std::to_string(e.span.end);
      out += "|||";
      out += e.type;
      out += "|||";
      if (e.span.correction.empty()) {
        if (e.span.is_noop()) out += kNoneField;
      } else {
        out += text::join(e.span.correction, " ");
      }
      out += "|||REQUIRED|||-NONE-|||";
      out += std::to_string(e.annotator);
      out += '\n';
    }
  }
  return out;
}

using TokenPair = std::pair<std::vector<std::string>, std::vector<std::string>>;

inline std::vector<TokenPair> read_parallel(std::string_view original, std::string_view corrected) {
  auto orig = text::lines(original);
  auto cor = text::lines(corrected);
  if (orig.size() != cor.size()) {
    throw IngestionError("line count mismatch: original has " + std::to_string(orig.size()) +
                         ", corrected has " + std::to_string(cor.size()));
  }
  std::vector<TokenPair> pairs;
  pairs.reserve(orig.size());
  for (std::size_t i = 0; i < orig.size(); ++i) {
    pairs.emplace_back(text::split_whitespace(orig[i]), text::split_whitespace(cor[i]));
  }
  return pairs;
}

}  // namespace serrant
