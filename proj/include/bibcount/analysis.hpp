#pragma once

#include <array>
#include <vector>

#include "bibcount/comparison.hpp"
#include "bibcount/corpus.hpp"
#include "bibcount/crediting.hpp"
#include "bibcount/indicators.hpp"
#include "bibcount/report.hpp"
#include "bibcount/stats.hpp"

namespace bibcount {

struct AnalysisOptions {
  CorpusFilter filter;
  double threshold = 100.0;
  double c_constant = 1.0;
  stats::TieMode spearman_ties = stats::TieMode::ordinal;
  stats::TTestVariant ttest = stats::TTestVariant::pooled;
};

struct AnalysisResult {
  SelectionReport selection;
  CreditLedger wc{CountingMethod::whole};
  CreditLedger wnc{CountingMethod::whole_normalized};
  std::vector<IndicatorPair> indicators;
  std::array<ComparisonTable, 4> tables;
  InflationSummary summary;            // rounded-average convention
  InflationSummary summary_unrounded;
  std::vector<StatLine> stat_lines;
};

// Statistical comparison of the WC and WNC columns of one table. Ordinal
// Spearman reuses the table's cascade ranks.
inline StatLine stat_line_for_table(const ComparisonTable& table,
                                    stats::TieMode ties,
                                    stats::TTestVariant variant) {
  StatLine line;
  line.indicator = table.indicator;
  std::vector<double> x, y, rx, ry;
  for (const auto& r : table.rows) {
    x.push_back(r.value_wc);
    y.push_back(r.value_wnc);
    rx.push_back(r.rank_wc);
    ry.push_back(r.rank_wnc);
  }
  try {
    line.pearson = stats::pearson(x, y);
    line.spearman =
        ties == stats::TieMode::ordinal
            ? stats::spearman_from_ranks(rx, ry,
                                         stats::CorrelationKind::spearman_ordinal)
            : stats::spearman(x, y, stats::TieMode::average_ranks);
    line.ttest = stats::t_test(x, y, variant);
    line.significant = line.ttest.p_two_tailed < 0.05;
    line.available = true;
  } catch (const std::exception&) {
    line.available = false;  // too few or degenerate countries
  }
  return line;
}

// Full pipeline over an already-parsed corpus whose countries are derived:
// filter, credit under both methods, indicators, comparisons, statistics.
inline AnalysisResult run_analysis(const std::vector<BibRecord>& records,
                                   const AnalysisOptions& opts) {
  AnalysisResult result;
  auto [selected, selection] = filter_corpus(records, opts.filter);
  result.selection = selection;
  if (selected.empty()) return result;

  result.wc = accumulate_ledger(selected, CountingMethod::whole);
  result.wnc = accumulate_ledger(selected, CountingMethod::whole_normalized);
  result.indicators = build_indicator_table(result.wc, result.wnc,
                                            opts.threshold, opts.c_constant);
  if (result.indicators.empty()) return result;

  result.tables = build_comparison(result.indicators);
  result.summary = inflation_summary(result.tables, /*rounded=*/true);
  result.summary_unrounded = inflation_summary(result.tables, /*rounded=*/false);
  for (const auto& table : result.tables)
    result.stat_lines.push_back(
        stat_line_for_table(table, opts.spearman_ties, opts.ttest));
  return result;
}

}  // namespace bibcount
