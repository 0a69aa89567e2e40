#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "serrant/corpus_io.hpp"

namespace serrant {

struct TypeDistribution {
  std::map<std::string, std::size_t> counts;
  std::size_t total = 0;

  friend bool operator==(const TypeDistribution&, const TypeDistribution&) = default;
};

enum class ReportFormat { Tsv, Json };

inline TypeDistribution type_distribution(const std::vector<M2Record>& records,
                                          std::optional<int> annotator = std::nullopt) {
  TypeDistribution dist;
  for (const auto& rec : records) {
    for (const auto& e : rec.edits) {
      if (e.span.is_noop() || e.type == "noop") continue;
      if (annotator && e.annotator != *annotator) continue;
      ++dist.counts[e.type];
      ++dist.total;
    }
  }
  return dist;
}

struct ReportRow {
  std::string type;
  std::size_t count = 0;
  long ten_thousandths = 0;  // fraction * 10^4, rounded so the column sums to 1
};

// Descending count, then type. Fractions use largest-remainder rounding to
// four decimals.
inline std::vector<ReportRow> report_rows(const TypeDistribution& dist) {
  std::vector<ReportRow> rows;
  for (const auto& [type, count] : dist.counts) rows.push_back({type, count, 0});
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return a.count != b.count ? a.count > b.count : a.type < b.type;
  });
  if (dist.total == 0) return rows;
  constexpr long kScale = 10000;
  std::vector<std::pair<std::size_t, std::size_t>> remainders;  // (remainder numerator, row)
  long assigned = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto scaled = static_cast<unsigned long long>(rows[r].count) * kScale;
    rows[r].ten_thousandths = static_cast<long>(scaled / dist.total);
    assigned += rows[r].ten_thousandths;
    remainders.emplace_back(static_cast<std::size_t>(scaled % dist.total), r);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < kScale && k < remainders.size(); ++k, ++assigned) {
    ++rows[remainders[k].second].ten_thousandths;
  }
  return rows;
}

inline std::string format_fraction(long ten_thousandths) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%ld.%04ld", ten_thousandths / 10000, ten_thousandths % 10000);
  return buf;
}

inline std::string emit_report(const TypeDistribution& dist, ReportFormat format) {
  const auto rows = report_rows(dist);
  if (format == ReportFormat::Tsv) {
    std::string out = "type\tcount\tfraction\n";
    for (const auto& r : rows) {
      out += r.type + '\t' + std::to_string(r.count) + '\t' + format_fraction(r.ten_thousandths) + '\n';
    }
    return out;
  }
  nlohmann::ordered_json j;
  j["total"] = dist.total;
  j["types"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["type"] = r.type;
    row["count"] = r.count;
    row["fraction"] = static_cast<double>(r.ten_thousandths) / 10000.0;
    j["types"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

}  // namespace serrant
