#include <gtest/gtest.h>

#include "serrant/alignment.hpp"
#include "support/alignment_oracle.hpp"
#include "support/generators.hpp"

namespace serrant {
namespace {

using Tokens = std::vector<std::string>;

std::vector<OpKind> kinds(const std::vector<AlignmentOp>& ops) {
  std::vector<OpKind> out;
  for (const auto& op : ops) out.push_back(op.kind);
  return out;
}

TEST(Align, DeleteInMiddle) {
  Tokens a{"a", "b", "c"}, b{"a", "c"};
  auto ops = align(a, b);
  EXPECT_EQ(kinds(ops), (std::vector<OpKind>{OpKind::Match, OpKind::Delete, OpKind::Match}));
  EXPECT_EQ(ops[1].src, (IndexRange{1, 2}));
  EXPECT_EQ(oracle::enumerate_min_cost({a, b, {}, {}}), 1);
}

TEST(Align, Identity) {
  Tokens x{"x"};
  EXPECT_EQ(kinds(align(x, x)), (std::vector<OpKind>{OpKind::Match}));
  EXPECT_TRUE(align(Tokens{}, Tokens{}).empty());
}

TEST(Align, Transpose) {
  Tokens a{"a", "b"}, b{"b", "a"};
  auto ops = align(a, b);
  ASSERT_EQ(ops.size(), 1u);
  EXPECT_EQ(ops[0].kind, OpKind::Transpose);
  EXPECT_EQ(ops[0].src, (IndexRange{0, 2}));
  EXPECT_EQ(oracle::enumerate_min_cost({a, b, {}, {}}), 1);
}

TEST(Align, TieBreakPrefersSubstitution) {
  // substitute (2) ties with delete + insert (2)
  Tokens a{"werk"}, b{"work"};
  EXPECT_EQ(kinds(align(a, b)), (std::vector<OpKind>{OpKind::Substitute}));
  // delete before insert
  Tokens c{"x", "y"}, d{"y", "z"};
  EXPECT_EQ(kinds(align(c, d)), (std::vector<OpKind>{OpKind::Delete, OpKind::Match, OpKind::Insert}));
}

TEST(Align, LemmasMakeSubstitutionCheap) {
  Tokens a{"I", "eat", "x"}, b{"I", "x", "ate"};
  Tokens la{"i", "eat", "x"}, lb{"i", "x", "eat"};
  EXPECT_EQ(alignment_cost(align(a, b), a, b), oracle::min_cost({a, b, {}, {}}));
  auto with = align(a, b, {la, lb});
  EXPECT_EQ(alignment_cost(with, a, b, {la, lb}), oracle::min_cost({a, b, la, lb}));
  Tokens s{"eat"}, t{"ate"};
  Tokens ls{"eat"}, lt{"eat"};
  EXPECT_EQ(alignment_cost(align(s, t, {ls, lt}), s, t, {ls, lt}), 1);
  EXPECT_EQ(alignment_cost(align(s, t), s, t), 2);
  EXPECT_THROW(align(s, t, {ls, {}}), ContractViolation);
}

TEST(Merge, Runs) {
  Tokens a{"a", "b", "c"}, b{"a", "c"};
  auto edits = merge(align(a, b), a, b);
  ASSERT_EQ(edits.size(), 1u);
  EXPECT_EQ(edits[0].span, (EditSpan{1, 2, {}}));
  EXPECT_EQ(edits[0].src_tokens, Tokens{"b"});

  std::vector<AlignmentOp> sub_ins = {{OpKind::Match, {0, 1}, {0, 1}},
                                      {OpKind::Substitute, {1, 2}, {1, 2}},
                                      {OpKind::Insert, {2, 2}, {2, 3}}};
  Tokens s{"a", "b"}, t{"a", "x", "y"};
  auto merged = merge(sub_ins, s, t);
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged[0].src_tokens.size(), 1u);
  EXPECT_EQ(merged[0].span.correction, (Tokens{"x", "y"}));
  EXPECT_EQ(merged[0].trg_start, 1u);

  EXPECT_TRUE(merge(align(a, a), a, a).empty());
}

TEST(Merge, TransposeBecomesReplacement) {
  Tokens a{"go", "quickly", "home"}, b{"quickly", "go", "home"};
  auto edits = extract_edits(a, b);
  ASSERT_EQ(edits.size(), 1u);
  EXPECT_EQ(edits[0].span, (EditSpan{0, 2, {"quickly", "go"}}));
}

TEST(PlaceEdits, TargetOffsets) {
  Tokens src{"I", "drive", "the", "my", "bike"};
  std::vector<Edit> edits = {{{1, 2, {"ride"}}, {}, 0}, {{2, 3, {}}, {}, 0}, {{5, 5, {"."}}, {}, 0}};
  auto cor = place_edits(src, edits);
  EXPECT_EQ(cor, (Tokens{"I", "ride", "my", "bike", "."}));
  EXPECT_EQ(edits[1].trg_start, 2u);
  EXPECT_EQ(edits[2].trg_start, 4u);
  EXPECT_EQ(edits[1].src_tokens, Tokens{"the"});
  std::vector<Edit> overlap = {{{1, 3, {"x"}}, {}, 0}, {{2, 4, {}}, {}, 0}};
  EXPECT_THROW(place_edits(src, overlap), ContractViolation);
}

void check_pair(const Tokens& a, const Tokens& b, const Tokens& la = {}, const Tokens& lb = {}) {
  AlignLemmas lemmas{la, lb};
  const auto ops = align(a, b, lemmas);
  // ops tile both sequences in order
  std::size_t i = 0, j = 0;
  for (const auto& op : ops) {
    ASSERT_EQ(op.src.begin, i);
    ASSERT_EQ(op.trg.begin, j);
    if (op.kind == OpKind::Match) {
      ASSERT_EQ(a[i], b[j]);
    }
    i = op.src.end;
    j = op.trg.end;
  }
  ASSERT_EQ(i, a.size());
  ASSERT_EQ(j, b.size());
  ASSERT_EQ(alignment_cost(ops, a, b, lemmas), oracle::min_cost({a, b, la, lb}));
  const auto edits = merge(ops, a, b);
  ASSERT_EQ(apply_edits(a, edits), b);
  for (std::size_t k = 1; k < edits.size(); ++k) {
    // at least one matched token separates neighbouring edits
    ASSERT_GT(edits[k].start(), edits[k - 1].end());
    ASSERT_GT(edits[k].trg_start, edits[k - 1].trg_end());
  }
}

TEST(AlignProperties, EnumerationAgreesForShortInputs) {
  const Tokens alphabet{"a", "A", "b", "c"};
  gen::Rng rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    Tokens a(gen::below(rng, 5)), b(gen::below(rng, 5));
    for (auto& t : a) t = gen::pick(rng, alphabet);
    for (auto& t : b) t = gen::pick(rng, alphabet);
    const auto ops = align(a, b);
    ASSERT_EQ(alignment_cost(ops, a, b), oracle::enumerate_min_cost({a, b, {}, {}}));
  }
}

TEST(AlignProperties, RandomSentencesWithLemmas) {
  gen::Rng rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = gen::sentence(rng, 10);
    auto b = gen::sentence(rng, 10);
    if (gen::coin(rng)) {
      auto la = gen::annotated(rng, a).lemmas();
      auto lb = gen::annotated(rng, b).lemmas();
      check_pair(a, b, la, lb);
    } else {
      check_pair(a, b);
    }
  }
}

}  // namespace
}  // namespace serrant
