#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "serrant/report.hpp"
#include "support/generators.hpp"

namespace serrant {
namespace {

std::vector<M2Record> sample() {
  return {M2Record{{"a", "b", "c"},
                   {{{0, 1, {"x"}}, "R:Spell", 0}, {{1, 2, {}}, "U:Det", 0}, {{-1, -1, {}}, "noop", 1}}},
          M2Record{{"d"}, {{{0, 1, {"e"}}, "R:Spell", 0}}}};
}

TEST(TypeDistribution, Counts) {
  auto d = type_distribution(sample());
  EXPECT_EQ(d.total, 3u);
  EXPECT_EQ(d.counts.at("R:Spell"), 2u);
  EXPECT_EQ(d.counts.at("U:Det"), 1u);
  EXPECT_EQ(d.counts.count("noop"), 0u);
  EXPECT_EQ(type_distribution({}).total, 0u);
  EXPECT_EQ(type_distribution(sample(), 1).total, 0u);
  EXPECT_EQ(type_distribution(sample(), 0).total, 3u);
}

TEST(EmitReport, Tsv) {
  auto d = type_distribution(sample());
  EXPECT_EQ(emit_report(d, ReportFormat::Tsv), "type\tcount\tfraction\nR:Spell\t2\t0.6667\nU:Det\t1\t0.3333\n");
  TypeDistribution tie{{{"b", 1}, {"a", 1}}, 2};
  EXPECT_EQ(emit_report(tie, ReportFormat::Tsv), "type\tcount\tfraction\na\t1\t0.5000\nb\t1\t0.5000\n");
  EXPECT_EQ(emit_report(TypeDistribution{}, ReportFormat::Tsv), "type\tcount\tfraction\n");
}

TEST(EmitReport, Json) {
  auto j = nlohmann::json::parse(emit_report(type_distribution(sample()), ReportFormat::Json));
  EXPECT_EQ(j["total"], 3);
  ASSERT_EQ(j["types"].size(), 2u);
  EXPECT_EQ(j["types"][0]["type"], "R:Spell");
  EXPECT_EQ(j["types"][0]["count"], 2);
  EXPECT_DOUBLE_EQ(j["types"][0]["fraction"].get<double>(), 0.6667);
  const std::string empty = emit_report(TypeDistribution{}, ReportFormat::Json);
  EXPECT_EQ(nlohmann::json::parse(empty)["types"].size(), 0u);
}

TEST(EmitReport, FractionsSumToOne) {
  gen::Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    TypeDistribution d;
    const std::size_t types = 1 + gen::below(rng, 40);
    for (std::size_t t = 0; t < types; ++t) {
      const std::size_t c = 1 + gen::below(rng, 1000);
      d.counts["T" + std::to_string(t)] = c;
      d.total += c;
    }
    const std::string tsv = emit_report(d, ReportFormat::Tsv);
    double sum = 0;
    for (auto line : text::lines(tsv)) {
      auto cols = text::split(line, "\t");
      if (cols[0] == "type") continue;
      sum += std::stod(cols[2]);
    }
    EXPECT_NEAR(sum, 1.0, 5e-4);
    EXPECT_EQ(emit_report(d, ReportFormat::Tsv), tsv);
  }
}

}  // namespace
}  // namespace serrant
