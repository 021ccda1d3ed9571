#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bibcount/comparison.hpp"
#include "bibcount/format.hpp"
#include "bibcount/indicators.hpp"
#include "bibcount/stats.hpp"

namespace bibcount {

enum class OutputFormat { tsv, markdown, json };

inline OutputFormat format_from_name(std::string_view name) {
  std::string n = ascii_lower(trim(name));
  if (n == "tsv") return OutputFormat::tsv;
  if (n == "markdown" || n == "md") return OutputFormat::markdown;
  if (n == "json") return OutputFormat::json;
  throw SchemaError("unknown output format '" + n + "'");
}

inline std::string_view extension(OutputFormat f) {
  switch (f) {
    case OutputFormat::tsv: return "tsv";
    case OutputFormat::markdown: return "md";
    default: return "json";
  }
}

// One Table-6 style line: correlations and t-test for one indicator.
struct StatLine {
  Indicator indicator = Indicator::paper_count;
  bool available = false;
  stats::CorrelationResult pearson;
  stats::CorrelationResult spearman;
  stats::TTestResult ttest;
  bool significant = false;  // p < 0.05
};

namespace detail {

template <typename Cells>
void emit_table(std::ostream& out, OutputFormat f,
                const std::vector<std::string>& header, const Cells& rows) {
  if (f == OutputFormat::markdown) {
    out << '|';
    for (const auto& h : header) out << ' ' << h << " |";
    out << "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) out << " --- |";
    out << '\n';
    for (const auto& row : rows) {
      out << '|';
      for (const auto& cell : row) out << ' ' << cell << " |";
      out << '\n';
    }
  } else {
    for (std::size_t i = 0; i < header.size(); ++i)
      out << header[i] << (i + 1 < header.size() ? '\t' : '\n');
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << row[i] << (i + 1 < row.size() ? '\t' : '\n');
    }
  }
}

}  // namespace detail

// --- indicator table -------------------------------------------------

inline nlohmann::json indicator_table_to_json(
    const std::vector<IndicatorPair>& pairs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : pairs)
    arr.push_back({{"country", p.country},
                   {"P_wc", p.wc.papers},
                   {"P_wnc", p.wnc.papers},
                   {"C_wc", p.wc.citations},
                   {"C_wnc", p.wnc.citations},
                   {"cpp_wc", p.wc.cpp},
                   {"cpp_wnc", p.wnc.cpp},
                   {"h_wc", p.wc.h_model},
                   {"h_wnc", p.wnc.h_model}});
  return arr;
}

inline std::vector<IndicatorPair> indicator_table_from_json(
    const nlohmann::json& arr) {
  std::vector<IndicatorPair> pairs;
  for (const auto& j : arr) {
    IndicatorPair p;
    p.country = j.at("country").get<std::string>();
    p.wc.country = p.wnc.country = p.country;
    p.wc.method = CountingMethod::whole;
    p.wnc.method = CountingMethod::whole_normalized;
    p.wc.papers = j.at("P_wc").get<double>();
    p.wnc.papers = j.at("P_wnc").get<double>();
    p.wc.citations = j.at("C_wc").get<double>();
    p.wnc.citations = j.at("C_wnc").get<double>();
    p.wc.cpp = j.at("cpp_wc").get<double>();
    p.wnc.cpp = j.at("cpp_wnc").get<double>();
    p.wc.h_model = j.at("h_wc").get<double>();
    p.wnc.h_model = j.at("h_wnc").get<double>();
    pairs.push_back(std::move(p));
  }
  return pairs;
}

inline void write_indicator_table(std::ostream& out,
                                  const std::vector<IndicatorPair>& pairs,
                                  OutputFormat f) {
  if (f == OutputFormat::json) {
    out << indicator_table_to_json(pairs).dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : pairs)
    rows.push_back({p.country, fmt2(p.wc.papers), fmt2(p.wnc.papers),
                    fmt2(p.wc.citations), fmt2(p.wnc.citations),
                    fmt2(p.wc.cpp), fmt2(p.wnc.cpp), fmt2(p.wc.h_model),
                    fmt2(p.wnc.h_model)});
  detail::emit_table(out, f,
                     {"country", "P_wc", "P_wnc", "C_wc", "C_wnc", "cpp_wc",
                      "cpp_wnc", "h_wc", "h_wnc"},
                     rows);
}

// --- comparison tables ------------------------------------------------

inline nlohmann::json comparison_table_to_json(const ComparisonTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table.rows)
    rows.push_back({{"country", r.country},
                    {"value_wc", r.value_wc},
                    {"value_wnc", r.value_wnc},
                    {"rank_wc", r.rank_wc},
                    {"rank_wnc", r.rank_wnc},
                    {"inflation", r.inflation}});
  return {{"indicator", to_string(table.indicator)}, {"rows", rows}};
}

inline ComparisonTable comparison_table_from_json(const nlohmann::json& j) {
  ComparisonTable table;
  std::string ind = j.at("indicator").get<std::string>();
  for (Indicator i : kAllIndicators)
    if (to_string(i) == ind) table.indicator = i;
  for (const auto& rj : j.at("rows")) {
    ComparisonRow r;
    r.indicator = table.indicator;
    r.country = rj.at("country").get<std::string>();
    r.value_wc = rj.at("value_wc").get<double>();
    r.value_wnc = rj.at("value_wnc").get<double>();
    r.rank_wc = rj.at("rank_wc").get<int>();
    r.rank_wnc = rj.at("rank_wnc").get<int>();
    r.inflation = rj.at("inflation").get<double>();
    table.rows.push_back(std::move(r));
  }
  return table;
}

inline void write_comparison_table(std::ostream& out,
                                   const ComparisonTable& table,
                                   OutputFormat f) {
  if (f == OutputFormat::json) {
    out << comparison_table_to_json(table).dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : table.rows)
    rows.push_back({r.country, fmt2(r.value_wc), fmt2(r.value_wnc),
                    std::to_string(r.rank_wc), std::to_string(r.rank_wnc),
                    fmt2(r.inflation)});
  detail::emit_table(
      out, f, {"country", "value_wc", "value_wnc", "rank_wc", "rank_wnc",
               "inflation"},
      rows);
}

// --- inflation summary -------------------------------------------------

inline nlohmann::json inflation_summary_to_json(const InflationSummary& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < kAllIndicators.size(); ++i)
    arr.push_back({{"indicator", to_string(kAllIndicators[i])},
                   {"lowest", s.per_indicator[i].lowest},
                   {"highest", s.per_indicator[i].highest},
                   {"average", s.per_indicator[i].average}});
  return arr;
}

inline void write_inflation_summary(std::ostream& out,
                                    const InflationSummary& s,
                                    OutputFormat f) {
  if (f == OutputFormat::json) {
    out << inflation_summary_to_json(s).dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < kAllIndicators.size(); ++i)
    rows.push_back({display_name(kAllIndicators[i]),
                    fmt2(s.per_indicator[i].lowest),
                    fmt2(s.per_indicator[i].highest),
                    fmt2(s.per_indicator[i].average)});
  detail::emit_table(out, f,
                     {"indicator", "lowest_inflation", "highest_inflation",
                      "average_inflation"},
                     rows);
}

// --- statistics report ---------------------------------------------------

inline nlohmann::json stats_report_to_json(const std::vector<StatLine>& lines) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& l : lines) {
    nlohmann::json j = {{"indicator", to_string(l.indicator)},
                        {"available", l.available}};
    if (l.available) {
      j["pearson"] = l.pearson.coefficient;
      j["pearson_p"] = l.pearson.p_two_tailed;
      j["spearman"] = l.spearman.coefficient;
      j["spearman_p"] = l.spearman.p_two_tailed;
      j["t"] = l.ttest.t;
      j["df"] = l.ttest.df;
      j["t_p"] = l.ttest.p_two_tailed;
      j["significant"] = l.significant;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

inline void write_stats_report(std::ostream& out,
                               const std::vector<StatLine>& lines,
                               OutputFormat f) {
  if (f == OutputFormat::json) {
    out << stats_report_to_json(lines).dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  char buf[64];
  auto fmt = [&](double v, const char* spec) {
    std::snprintf(buf, sizeof(buf), spec, v);
    return std::string(buf);
  };
  for (const auto& l : lines) {
    if (!l.available) {
      rows.push_back({display_name(l.indicator), "n/a", "n/a", "n/a", ""});
      continue;
    }
    rows.push_back(
        {display_name(l.indicator),
         fmt(l.pearson.coefficient, "%.3f") + " (" +
             fmt(l.pearson.p_two_tailed, "%.5f") + ")",
         fmt(l.spearman.coefficient, "%.3f") + " (" +
             fmt(l.spearman.p_two_tailed, "%.5f") + ")",
         "t = " + fmt(l.ttest.t, "%.3f") + " (p = " +
             fmt(l.ttest.p_two_tailed, "%.5f") + ")",
         l.significant ? "**" : ""});
  }
  detail::emit_table(out, f,
                     {"indicator", "pearson", "spearman", "t_test",
                      "significance"},
                     rows);
  if (f != OutputFormat::json)
    out << "** statistically significant difference at the p < 0.05 level\n";
}

}  // namespace bibcount
