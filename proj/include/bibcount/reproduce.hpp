#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "bibcount/analysis.hpp"
#include "bibcount/comparison.hpp"
#include "bibcount/fixture.hpp"
#include "bibcount/format.hpp"
#include "bibcount/indicators.hpp"

namespace bibcount {

struct CellMismatch {
  std::string where;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
};

struct ReproductionResult {
  std::vector<std::string> lines;      // one human-readable line per check group
  std::vector<CellMismatch> failures;
  std::vector<IndicatorPair> indicators;
  std::array<ComparisonTable, 4> tables;
  InflationSummary summary;
  std::vector<StatLine> stat_lines;

  bool ok() const { return failures.empty(); }
};

// Indicator pairs recomputed at full precision from the fixture's base
// paper and citation credits.
inline std::vector<IndicatorPair> fixture_indicator_pairs(
    std::span<const fixture::CountryRow> rows = fixture::kCountries) {
  std::vector<IndicatorPair> pairs;
  for (const auto& r : rows) {
    IndicatorPair p;
    p.country = std::string(r.country);
    auto fill = [&](CountryIndicators& ind, CountingMethod m, double papers,
                    double citations) {
      ind.country = p.country;
      ind.method = m;
      ind.papers = papers;
      ind.citations = citations;
      ind.cpp = citations_per_paper(papers, citations);
      ind.h_model = gs_h_index(papers, ind.cpp, 1.0);
    };
    fill(p.wc, CountingMethod::whole, r.p_wc, r.c_wc);
    fill(p.wnc, CountingMethod::whole_normalized, r.p_wnc, r.c_wnc);
    pairs.push_back(std::move(p));
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (a.wc.papers != b.wc.papers) return a.wc.papers > b.wc.papers;
    return a.country < b.country;
  });
  return pairs;
}

// Regenerate every derived cell of the published tables from the fixture
// base values and compare against the published cells, with per-cell
// tolerances. Exact means equal after half-up rounding to 2 decimals.
inline ReproductionResult run_reproduction(
    std::span<const fixture::CountryRow> rows = fixture::kCountries) {
  ReproductionResult res;
  res.indicators = fixture_indicator_pairs(rows);
  res.tables = build_comparison(res.indicators);
  res.summary = inflation_summary(res.tables, /*rounded=*/true);
  for (const auto& t : res.tables)
    res.stat_lines.push_back(stat_line_for_table(
        t, stats::TieMode::ordinal, stats::TTestVariant::pooled));

  auto fail = [&](std::string where, double expected, double actual,
                  double tol) {
    res.failures.push_back({std::move(where), expected, actual, tol});
  };
  auto check_rounded = [&](const std::string& where, double expected,
                           double actual) {
    bool ok = round2(actual) == expected;
    if (!ok) fail(where, expected, round2(actual), 0.0);
    return ok;
  };
  auto check_tol = [&](const std::string& where, double expected,
                       double actual, double tol) {
    bool ok = std::fabs(actual - expected) <= tol;
    if (!ok) fail(where, expected, actual, tol);
    return ok;
  };

  auto find_row = [&](std::string_view country) {
    for (const auto& r : rows)
      if (r.country == country) return &r;
    return static_cast<const fixture::CountryRow*>(nullptr);
  };

  // CPP cells (Table 3) and h cells (Table 4)
  bool cpp_ok = true, h_ok = true;
  for (const auto& p : res.indicators) {
    const auto* r = find_row(p.country);
    cpp_ok &= check_rounded("CPP WC " + p.country, r->cpp_wc, p.wc.cpp);
    cpp_ok &= check_rounded("CPP WNC " + p.country, r->cpp_wnc, p.wnc.cpp);
    h_ok &= check_tol("h WC " + p.country, r->h_wc, p.wc.h_model, 0.02);
    h_ok &= check_tol("h WNC " + p.country, r->h_wnc, p.wnc.h_model, 0.02);
  }
  res.lines.push_back(std::string("Table 3 CPP cells: ") +
                      (cpp_ok ? "match" : "MISMATCH"));
  res.lines.push_back(std::string("Table 4 h cells: ") +
                      (h_ok ? "match" : "MISMATCH"));

  // rank columns and inflation columns of Tables 1-4
  for (const auto& table : res.tables) {
    bool ranks_ok = true, infl_ok = true;
    for (const auto& row : table.rows) {
      const auto* r = find_row(row.country);
      int exp_wc = 0, exp_wnc = 0;
      double exp_infl = 0.0;
      switch (table.indicator) {
        case Indicator::paper_count:
          exp_wc = r->rank_p_wc; exp_wnc = r->rank_p_wnc; exp_infl = r->infl_p;
          break;
        case Indicator::citation_count:
          exp_wc = r->rank_c_wc; exp_wnc = r->rank_c_wnc; exp_infl = r->infl_c;
          break;
        case Indicator::cpp:
          exp_wc = r->rank_cpp_wc; exp_wnc = r->rank_cpp_wnc;
          exp_infl = r->infl_cpp;
          break;
        default:
          exp_wc = r->rank_h_wc; exp_wnc = r->rank_h_wnc; exp_infl = r->infl_h;
      }
      std::string tag = display_name(table.indicator) + " " + row.country;
      if (row.rank_wc != exp_wc) {
        fail("rank WC " + tag, exp_wc, row.rank_wc, 0.0);
        ranks_ok = false;
      }
      if (row.rank_wnc != exp_wnc) {
        fail("rank WNC " + tag, exp_wnc, row.rank_wnc, 0.0);
        ranks_ok = false;
      }
      infl_ok &= check_rounded("inflation " + tag, exp_infl, row.inflation);
    }
    res.lines.push_back(display_name(table.indicator) + " ranks: " +
                        (ranks_ok ? "match" : "MISMATCH"));
    res.lines.push_back(display_name(table.indicator) + " inflation: " +
                        (infl_ok ? "match" : "MISMATCH"));
  }

  // inflation summary (Table 5)
  for (std::size_t i = 0; i < kAllIndicators.size(); ++i) {
    const auto& pub = fixture::kInflationSummary[i];
    const auto& got = res.summary.per_indicator[i];
    std::string tag = display_name(kAllIndicators[i]);
    bool ok = check_rounded("summary lowest " + tag, pub.lowest, got.lowest) &
              check_rounded("summary highest " + tag, pub.highest, got.highest) &
              check_rounded("summary average " + tag, pub.average, got.average);
    res.lines.push_back("Table 5 " + tag + ": " + fmt2(got.lowest) + " / " +
                        fmt2(got.highest) + " / " + fmt2(got.average) +
                        (ok ? " - match" : " - MISMATCH"));
  }

  // statistical tests (Table 6)
  for (std::size_t i = 0; i < kAllIndicators.size(); ++i) {
    const auto& pub = fixture::kStatTests[i];
    const auto& got = res.stat_lines[i];
    std::string tag = display_name(kAllIndicators[i]);
    bool ok = got.available;
    if (!ok) {
      fail("stats unavailable " + tag, 1, 0, 0);
    } else {
      // published paper-count and citation-count Pearson display as 1
      double pearson_tol = pub.pearson >= 1.0 ? 0.0005 : 0.002;
      if (kAllIndicators[i] == Indicator::h_index) pearson_tol = 0.001;
      ok &= check_tol("pearson " + tag, pub.pearson, got.pearson.coefficient,
                      pearson_tol);
      ok &= check_tol("spearman " + tag, pub.spearman,
                      got.spearman.coefficient, 0.002);
      ok &= check_tol("t " + tag, pub.t, got.ttest.t, 0.02);
      ok &= check_tol("p " + tag, pub.p, got.ttest.p_two_tailed, 0.002);
      if (got.significant != pub.significant) {
        fail("significance " + tag, pub.significant, got.significant, 0.0);
        ok = false;
      }
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "Table 6 %s: t = %.3f, p = %.5f - %s",
                  tag.c_str(), got.ttest.t, got.ttest.p_two_tailed,
                  ok ? "match" : "MISMATCH");
    res.lines.emplace_back(buf);
  }

  return res;
}

}  // namespace bibcount
