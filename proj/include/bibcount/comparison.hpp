#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "bibcount/format.hpp"
#include "bibcount/indicators.hpp"

namespace bibcount {

enum class Indicator { paper_count, citation_count, cpp, h_index };

inline constexpr std::array<Indicator, 4> kAllIndicators = {
    Indicator::paper_count, Indicator::citation_count, Indicator::cpp,
    Indicator::h_index};

inline std::string to_string(Indicator ind) {
  switch (ind) {
    case Indicator::paper_count: return "paper_count";
    case Indicator::citation_count: return "citation_count";
    case Indicator::cpp: return "cpp";
    default: return "h_index";
  }
}

inline std::string display_name(Indicator ind) {
  switch (ind) {
    case Indicator::paper_count: return "Paper count";
    case Indicator::citation_count: return "Citation count";
    case Indicator::cpp: return "CPP";
    default: return "h-index";
  }
}

// Ordinal ranks, descending by value. Ties break by the other method's
// value for the same indicator, then whole-counting paper credit, then
// country name.
inline std::map<std::string, int> rank_countries(
    const std::map<std::string, double>& values,
    const std::map<std::string, double>& other_method_values,
    const std::map<std::string, double>& wc_paper_credit) {
  std::vector<std::string> order;
  order.reserve(values.size());
  for (const auto& [country, _] : values) order.push_back(country);
  auto key = [&](const std::map<std::string, double>& m,
                 const std::string& c) {
    auto it = m.find(c);
    return it == m.end() ? 0.0 : it->second;
  };
  std::sort(order.begin(), order.end(),
            [&](const std::string& a, const std::string& b) {
              double va = values.at(a), vb = values.at(b);
              if (va != vb) return va > vb;
              double oa = key(other_method_values, a);
              double ob = key(other_method_values, b);
              if (oa != ob) return oa > ob;
              double pa = key(wc_paper_credit, a), pb = key(wc_paper_credit, b);
              if (pa != pb) return pa > pb;
              return a < b;
            });
  std::map<std::string, int> ranks;
  for (std::size_t i = 0; i < order.size(); ++i)
    ranks[order[i]] = static_cast<int>(i + 1);
  return ranks;
}

inline double inflation_rate(double value_wc, double value_wnc) {
  if (value_wnc <= 0.0)
    throw IndicatorDomainError(
        "inflation undefined for non-positive whole-normalized value");
  return value_wc / value_wnc;
}

struct ComparisonRow {
  std::string country;
  Indicator indicator = Indicator::paper_count;
  double value_wc = 0.0;
  double value_wnc = 0.0;
  int rank_wc = 0;
  int rank_wnc = 0;
  double inflation = 0.0;
};

struct ComparisonTable {
  Indicator indicator = Indicator::paper_count;
  std::vector<ComparisonRow> rows;  // in WC rank order
};

inline double indicator_value(const CountryIndicators& ind, Indicator which) {
  switch (which) {
    case Indicator::paper_count: return ind.papers;
    case Indicator::citation_count: return ind.citations;
    case Indicator::cpp: return ind.cpp;
    default: return ind.h_model;
  }
}

// One dual-ranked table per indicator, rows in WC rank order.
inline std::array<ComparisonTable, 4> build_comparison(
    const std::vector<IndicatorPair>& pairs) {
  std::map<std::string, double> wc_papers;
  for (const auto& p : pairs) wc_papers[p.country] = p.wc.papers;

  std::array<ComparisonTable, 4> tables;
  for (std::size_t t = 0; t < kAllIndicators.size(); ++t) {
    Indicator ind = kAllIndicators[t];
    std::map<std::string, double> wc_vals, wnc_vals;
    for (const auto& p : pairs) {
      wc_vals[p.country] = indicator_value(p.wc, ind);
      wnc_vals[p.country] = indicator_value(p.wnc, ind);
    }
    auto rank_wc = rank_countries(wc_vals, wnc_vals, wc_papers);
    auto rank_wnc = rank_countries(wnc_vals, wc_vals, wc_papers);

    ComparisonTable table;
    table.indicator = ind;
    for (const auto& p : pairs) {
      ComparisonRow row;
      row.country = p.country;
      row.indicator = ind;
      row.value_wc = wc_vals[p.country];
      row.value_wnc = wnc_vals[p.country];
      row.rank_wc = rank_wc[p.country];
      row.rank_wnc = rank_wnc[p.country];
      // NaN marks an undefined quotient (zero WNC credit)
      row.inflation = row.value_wnc > 0.0
                          ? inflation_rate(row.value_wc, row.value_wnc)
                          : std::numeric_limits<double>::quiet_NaN();
      table.rows.push_back(std::move(row));
    }
    std::sort(table.rows.begin(), table.rows.end(),
              [](const auto& a, const auto& b) { return a.rank_wc < b.rank_wc; });
    tables[t] = std::move(table);
  }
  return tables;
}

struct InflationStats {
  double lowest = 0.0;
  double highest = 0.0;
  double average = 0.0;
};

struct InflationSummary {
  std::array<InflationStats, 4> per_indicator;  // kAllIndicators order

  const InflationStats& of(Indicator ind) const {
    return per_indicator[static_cast<std::size_t>(ind)];
  }
};

// Min / max / mean of the inflation column per indicator. The paper's
// convention averages the 2-decimal display values; `rounded=false` gives
// the full-precision variant.
inline InflationSummary inflation_summary(
    const std::array<ComparisonTable, 4>& tables, bool rounded = true) {
  InflationSummary summary;
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const auto& rows = tables[t].rows;
    if (rows.empty())
      throw IndicatorDomainError("inflation summary of an empty table");
    InflationStats s;
    s.lowest = std::numeric_limits<double>::infinity();
    s.highest = -std::numeric_limits<double>::infinity();
    KahanSum total;
    std::size_t counted = 0;
    for (const auto& row : rows) {
      if (!std::isfinite(row.inflation)) continue;  // undefined quotient
      double v = rounded ? round2(row.inflation) : row.inflation;
      s.lowest = std::min(s.lowest, v);
      s.highest = std::max(s.highest, v);
      total.add(v);
      ++counted;
    }
    if (counted == 0)
      throw IndicatorDomainError("inflation summary: no defined inflation values");
    s.average = total.value() / static_cast<double>(counted);
    summary.per_indicator[t] = s;
  }
  return summary;
}

}  // namespace bibcount
