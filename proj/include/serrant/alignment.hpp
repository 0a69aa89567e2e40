#pragma once

// Token alignment of a source/target sentence pair and run-merging of the
// alignment into edits.

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "serrant/corpus_io.hpp"
#include "serrant/errors.hpp"
#include "serrant/text.hpp"

namespace serrant {

struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

enum class OpKind { Match, Substitute, Insert, Delete, Transpose };

struct AlignmentOp {
  OpKind kind = OpKind::Match;
  IndexRange src;
  IndexRange trg;
  friend bool operator==(const AlignmentOp&, const AlignmentOp&) = default;
};

// Source tokens, correction and position of the correction in the target.
struct Edit {
  EditSpan span;
  std::vector<std::string> src_tokens;
  std::size_t trg_start = 0;

  std::size_t start() const { return static_cast<std::size_t>(span.start); }
  std::size_t end() const { return static_cast<std::size_t>(span.end); }
  std::size_t trg_end() const { return trg_start + span.correction.size(); }
  bool is_insertion() const { return src_tokens.empty(); }
  bool is_deletion() const { return span.correction.empty(); }
  bool is_replacement() const { return !is_insertion() && !is_deletion(); }

  friend bool operator==(const Edit&, const Edit&) = default;
};

// Optional lemma columns; both must be empty or both sized like their sentences.
struct AlignLemmas {
  std::span<const std::string> src;
  std::span<const std::string> trg;
};

namespace detail {

struct AlignCosts {
  static constexpr int kInsert = 1;
  static constexpr int kDelete = 1;
  static constexpr int kCheapSubstitute = 1;
  static constexpr int kSubstitute = 2;
  static constexpr int kTranspose = 1;
};

class AlignContext {
 public:
  AlignContext(std::span<const std::string> src, std::span<const std::string> trg, AlignLemmas lemmas)
      : src_(src), trg_(trg) {
    use_lemmas_ = !lemmas.src.empty() || !lemmas.trg.empty();
    if (use_lemmas_ && (lemmas.src.size() != src.size() || lemmas.trg.size() != trg.size())) {
      throw ContractViolation("lemma columns must match sentence lengths");
    }
    src_lower_.reserve(src.size());
    trg_lower_.reserve(trg.size());
    for (const auto& t : src) src_lower_.push_back(text::to_lower(t));
    for (const auto& t : trg) trg_lower_.push_back(text::to_lower(t));
    if (use_lemmas_) {
      for (const auto& l : lemmas.src) src_lemma_.push_back(text::to_lower(l));
      for (const auto& l : lemmas.trg) trg_lemma_.push_back(text::to_lower(l));
    }
  }

  bool same(std::size_t i, std::size_t j) const { return src_[i] == trg_[j]; }

  int substitute_cost(std::size_t i, std::size_t j) const {
    if (src_lower_[i] == trg_lower_[j]) return AlignCosts::kCheapSubstitute;
    if (use_lemmas_ && src_lemma_[i] == trg_lemma_[j]) {
      return AlignCosts::kCheapSubstitute;
    }
    return AlignCosts::kSubstitute;
  }

  // Adjacent pair swapped: a b -> b a, with a != b.
  bool transposable(std::size_t i, std::size_t j) const {
    return i + 1 < src_.size() && j + 1 < trg_.size() && src_[i] != src_[i + 1] &&
           src_[i] == trg_[j + 1] && src_[i + 1] == trg_[j];
  }

  std::size_t n() const { return src_.size(); }
  std::size_t m() const { return trg_.size(); }

 private:
  std::span<const std::string> src_;
  std::span<const std::string> trg_;
  bool use_lemmas_ = false;
  std::vector<std::string> src_lower_;
  std::vector<std::string> trg_lower_;
  std::vector<std::string> src_lemma_;
  std::vector<std::string> trg_lemma_;
};

}  // namespace detail

// Cost of a single operation under the alignment cost model.
inline int op_cost(const AlignmentOp& op, std::span<const std::string> src, std::span<const std::string> trg,
                   AlignLemmas lemmas = {}) {
  switch (op.kind) {
    case OpKind::Match: return 0;
    case OpKind::Insert: return detail::AlignCosts::kInsert;
    case OpKind::Delete: return detail::AlignCosts::kDelete;
    case OpKind::Transpose: return detail::AlignCosts::kTranspose;
    case OpKind::Substitute: {
      const std::size_t i = op.src.begin;
      const std::size_t j = op.trg.begin;
      if (text::to_lower(src[i]) == text::to_lower(trg[j])) return detail::AlignCosts::kCheapSubstitute;
      if (!lemmas.src.empty() && !lemmas.trg.empty() &&
          text::to_lower(lemmas.src[i]) == text::to_lower(lemmas.trg[j])) {
        return detail::AlignCosts::kCheapSubstitute;
      }
      return detail::AlignCosts::kSubstitute;
    }
  }
  return 0;
}

inline int alignment_cost(const std::vector<AlignmentOp>& ops, std::span<const std::string> src,
                          std::span<const std::string> trg, AlignLemmas lemmas = {}) {
  int total = 0;
  for (const auto& op : ops) total += op_cost(op, src, trg, lemmas);
  return total;
}

// Minimal-cost alignment. Costs: match 0, insert 1, delete 1, adjacent
// transpose 1, substitute 1 when the lowercased forms or the lemmas agree and
// 2 otherwise. Among optimal alignments the earliest operation is chosen by
// preference match > substitute > transpose > delete > insert.
inline std::vector<AlignmentOp> align(std::span<const std::string> src, std::span<const std::string> trg,
                                      AlignLemmas lemmas = {}) {
  detail::AlignContext ctx(src, trg, lemmas);
  const std::size_t n = ctx.n();
  const std::size_t m = ctx.m();
  const std::size_t width = m + 1;
  // rest[i * width + j] = cost of aligning src[i..] with trg[j..]
  std::vector<int> rest((n + 1) * width, 0);
  auto at = [&](std::size_t i, std::size_t j) -> int& { return rest[i * width + j]; };

  for (std::size_t i = n + 1; i-- > 0;) {
    for (std::size_t j = m + 1; j-- > 0;) {
      if (i == n && j == m) continue;
      int best = std::numeric_limits<int>::max();
      if (i < n && j < m) {
        best = std::min(best, (ctx.same(i, j) ? 0 : ctx.substitute_cost(i, j)) + at(i + 1, j + 1));
        if (ctx.transposable(i, j)) best = std::min(best, detail::AlignCosts::kTranspose + at(i + 2, j + 2));
      }
      if (i < n) best = std::min(best, detail::AlignCosts::kDelete + at(i + 1, j));
      if (j < m) best = std::min(best, detail::AlignCosts::kInsert + at(i, j + 1));
      at(i, j) = best;
    }
  }

  std::vector<AlignmentOp> ops;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    const int target = at(i, j);
    if (i < n && j < m && ctx.same(i, j) && at(i + 1, j + 1) == target) {
      ops.push_back({OpKind::Match, {i, i + 1}, {j, j + 1}});
      ++i, ++j;
    } else if (i < n && j < m && !ctx.same(i, j) && ctx.substitute_cost(i, j) + at(i + 1, j + 1) == target) {
      ops.push_back({OpKind::Substitute, {i, i + 1}, {j, j + 1}});
      ++i, ++j;
    } else if (i < n && j < m && ctx.transposable(i, j) &&
               detail::AlignCosts::kTranspose + at(i + 2, j + 2) == target) {
      ops.push_back({OpKind::Transpose, {i, i + 2}, {j, j + 2}});
      i += 2, j += 2;
    } else if (i < n && detail::AlignCosts::kDelete + at(i + 1, j) == target) {
      ops.push_back({OpKind::Delete, {i, i + 1}, {j, j}});
      ++i;
    } else {
      ops.push_back({OpKind::Insert, {i, i}, {j, j + 1}});
      ++j;
    }
  }
  return ops;
}

// Collapses every maximal run of non-match operations into one edit.
inline std::vector<Edit> merge(const std::vector<AlignmentOp>& ops, std::span<const std::string> src,
                               std::span<const std::string> trg) {
  std::vector<Edit> edits;
  std::size_t k = 0;
  while (k < ops.size()) {
    if (ops[k].kind == OpKind::Match) {
      ++k;
      continue;
    }
    const std::size_t first = k;
    while (k < ops.size() && ops[k].kind != OpKind::Match) ++k;
    const auto& a = ops[first];
    const auto& b = ops[k - 1];
    Edit e;
    e.span.start = static_cast<int>(a.src.begin);
    e.span.end = static_cast<int>(b.src.end);
    e.span.correction.assign(trg.begin() + static_cast<std::ptrdiff_t>(a.trg.begin),
                             trg.begin() + static_cast<std::ptrdiff_t>(b.trg.end));
    e.src_tokens.assign(src.begin() + static_cast<std::ptrdiff_t>(a.src.begin),
                        src.begin() + static_cast<std::ptrdiff_t>(b.src.end));
    e.trg_start = a.trg.begin;
    edits.push_back(std::move(e));
  }
  return edits;
}

inline std::vector<Edit> extract_edits(std::span<const std::string> src, std::span<const std::string> trg,
                                       AlignLemmas lemmas = {}) {
  return merge(align(src, trg, lemmas), src, trg);
}

// Applies non-overlapping edits sorted by source position.
inline std::vector<std::string> apply_edits(std::span<const std::string> src, const std::vector<Edit>& edits) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (const auto& e : edits) {
    if (e.start() < pos || e.end() > src.size()) throw ContractViolation("edits overlap or are unsorted");
    out.insert(out.end(), src.begin() + static_cast<std::ptrdiff_t>(pos),
               src.begin() + static_cast<std::ptrdiff_t>(e.start()));
    out.insert(out.end(), e.span.correction.begin(), e.span.correction.end());
    pos = e.end();
  }
  out.insert(out.end(), src.begin() + static_cast<std::ptrdiff_t>(pos), src.end());
  return out;
}

// Builds edits for pre-existing spans (as read from M2) and fills each
// edit's position in the corrected sentence. Spans must be sorted and
// non-overlapping; returns the corrected tokens.
inline std::vector<std::string> place_edits(std::span<const std::string> src, std::vector<Edit>& edits) {
  long delta = 0;
  std::size_t pos = 0;
  for (auto& e : edits) {
    if (e.span.start < 0 || e.start() < pos || e.end() > src.size() || e.start() > e.end()) {
      throw ContractViolation("edits overlap or are unsorted");
    }
    e.src_tokens.assign(src.begin() + static_cast<std::ptrdiff_t>(e.start()),
                        src.begin() + static_cast<std::ptrdiff_t>(e.end()));
    e.trg_start = static_cast<std::size_t>(static_cast<long>(e.start()) + delta);
    delta += static_cast<long>(e.span.correction.size()) - static_cast<long>(e.end() - e.start());
    pos = e.end();
  }
  return apply_edits(src, edits);
}

}  // namespace serrant
