// Acceptance suite: regenerates every published table cell from the
// embedded fixture and exercises the synthetic-corpus properties, printing
// one pass/fail line per criterion.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bibcount/bibcount.hpp"
#include "support/oracles.hpp"

using namespace bibcount;

namespace {

int g_failures_in_criterion = 0;

void expect(bool ok, const std::string& detail) {
  if (!ok) {
    ++g_failures_in_criterion;
    std::printf("    failed: %s\n", detail.c_str());
  }
}

bool run_criterion(int number, const std::string& title,
                   const std::function<void()>& body) {
  g_failures_in_criterion = 0;
  try {
    body();
  } catch (const std::exception& e) {
    ++g_failures_in_criterion;
    std::printf("    exception: %s\n", e.what());
  }
  bool ok = g_failures_in_criterion == 0;
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number,
              title.c_str());
  return ok;
}

const fixture::CountryRow& fixture_row(const std::string& country) {
  for (const auto& r : fixture::kCountries)
    if (r.country == country) return r;
  throw std::logic_error("unknown fixture country " + country);
}

}  // namespace

int main() {
  auto pairs = fixture_indicator_pairs();
  auto tables = build_comparison(pairs);
  auto corpus = testsupport::make_corpus(1000, 2026);
  std::vector<BibRecord> credited;
  for (const auto& r : corpus.records)
    if (!r.countries.empty()) credited.push_back(r);

  int failed = 0;
  auto criterion = [&](int n, const std::string& title,
                       const std::function<void()>& body) {
    if (!run_criterion(n, title, body)) ++failed;
  };

  criterion(1, "all 44 CPP cells match after half-up 2-decimal rounding", [&] {
    expect(pairs.size() == 22, "expected 22 countries");
    for (const auto& p : pairs) {
      const auto& row = fixture_row(p.country);
      expect(round2(p.wc.cpp) == row.cpp_wc, "CPP WC " + p.country);
      expect(round2(p.wnc.cpp) == row.cpp_wnc, "CPP WNC " + p.country);
    }
  });

  criterion(2, "all 44 model h cells match within 0.02", [&] {
    for (const auto& p : pairs) {
      const auto& row = fixture_row(p.country);
      expect(std::fabs(p.wc.h_model - row.h_wc) <= 0.02, "h WC " + p.country);
      expect(std::fabs(p.wnc.h_model - row.h_wnc) <= 0.02,
             "h WNC " + p.country);
    }
  });

  criterion(3, "all 88 per-row inflation values match after rounding", [&] {
    for (const auto& table : tables) {
      for (const auto& r : table.rows) {
        const auto& row = fixture_row(r.country);
        double expected = 0.0;
        switch (table.indicator) {
          case Indicator::paper_count: expected = row.infl_p; break;
          case Indicator::citation_count: expected = row.infl_c; break;
          case Indicator::cpp: expected = row.infl_cpp; break;
          default: expected = row.infl_h;
        }
        expect(round2(r.inflation) == expected,
               "inflation " + to_string(table.indicator) + " " + r.country);
      }
    }
    // spot values called out in the published tables
    auto spot = [&](const ComparisonTable& t, const std::string& c) {
      for (const auto& r : t.rows)
        if (r.country == c) return round2(r.inflation);
      return -1.0;
    };
    expect(spot(tables[0], "United States") == 2.11, "US paper inflation");
    expect(spot(tables[2], "Switzerland") == 0.97, "Swiss CPP inflation");
    expect(spot(tables[3], "Netherlands") == 1.37, "Dutch h inflation");
  });

  criterion(4, "inflation summary matches exactly under the rounded-average convention", [&] {
    auto s = inflation_summary(tables, /*rounded=*/true);
    for (std::size_t i = 0; i < kAllIndicators.size(); ++i) {
      const auto& pub = fixture::kInflationSummary[i];
      const auto& got = s.per_indicator[i];
      std::string tag = to_string(kAllIndicators[i]);
      expect(round2(got.lowest) == pub.lowest, "lowest " + tag);
      expect(round2(got.highest) == pub.highest, "highest " + tag);
      expect(round2(got.average) == pub.average, "average " + tag);
    }
  });

  criterion(5, "correlations and t-tests reproduce the published statistics", [&] {
    std::vector<StatLine> lines;
    for (const auto& t : tables)
      lines.push_back(stat_line_for_table(t, stats::TieMode::ordinal,
                                          stats::TTestVariant::pooled));
    for (std::size_t i = 0; i < kAllIndicators.size(); ++i) {
      const auto& pub = fixture::kStatTests[i];
      const auto& got = lines[i];
      std::string tag = to_string(kAllIndicators[i]);
      expect(got.available, "stats available " + tag);
      if (!got.available) continue;
      if (kAllIndicators[i] == Indicator::paper_count ||
          kAllIndicators[i] == Indicator::citation_count)
        expect(got.pearson.coefficient >= 0.9995, "pearson " + tag);
      else if (kAllIndicators[i] == Indicator::cpp)
        expect(std::fabs(got.pearson.coefficient - 0.995) <= 0.002,
               "pearson " + tag);
      else
        expect(std::fabs(got.pearson.coefficient - 0.999) <= 0.001,
               "pearson " + tag);
      expect(std::fabs(got.spearman.coefficient - pub.spearman) <= 0.002,
             "spearman " + tag);
      expect(std::fabs(got.ttest.t - pub.t) <= 0.02, "t " + tag);
      expect(std::fabs(got.ttest.p_two_tailed - pub.p) <= 0.002, "p " + tag);
      expect(got.significant == pub.significant, "significance flag " + tag);
    }
  });

  criterion(6, "rank columns of the paper, citation and h tables match row-for-row", [&] {
    auto check_ranks = [&](const ComparisonTable& t,
                           auto wc_of, auto wnc_of) {
      for (const auto& r : t.rows) {
        const auto& row = fixture_row(r.country);
        expect(r.rank_wc == wc_of(row),
               "rank WC " + to_string(t.indicator) + " " + r.country);
        expect(r.rank_wnc == wnc_of(row),
               "rank WNC " + to_string(t.indicator) + " " + r.country);
      }
    };
    check_ranks(tables[0],
                [](const auto& r) { return r.rank_p_wc; },
                [](const auto& r) { return r.rank_p_wnc; });
    check_ranks(tables[1],
                [](const auto& r) { return r.rank_c_wc; },
                [](const auto& r) { return r.rank_c_wnc; });
    check_ranks(tables[3],
                [](const auto& r) { return r.rank_h_wc; },
                [](const auto& r) { return r.rank_h_wnc; });
  });

  criterion(7, "synthetic conservation and brute-force ledger equality", [&] {
    auto ledger = accumulate_ledger(credited, CountingMethod::whole_normalized);
    KahanSum papers, citations;
    long long total_citations = 0;
    for (const auto& r : credited) total_citations += r.citations;
    for (const auto& [_, e] : ledger.entries()) {
      papers.add(e.paper.value());
      citations.add(e.citation.value());
    }
    expect(std::fabs(papers.value() - static_cast<double>(credited.size())) <=
               1e-9,
           "paper credit conservation");
    expect(std::fabs(citations.value() -
                     static_cast<double>(total_citations)) <= 1e-9,
           "citation credit conservation");

    auto oracle = testsupport::brute_force_ledger(credited, true);
    expect(ledger.entries().size() == oracle.paper.size(),
           "country set matches oracle");
    for (const auto& [country, sum] : oracle.paper) {
      expect(ledger.paper_credit(country) == sum,
             "paper credit " + country);
      expect(ledger.citation_credit(country) == oracle.citation.at(country),
             "citation credit " + country);
    }
  });

  criterion(8, "inflation identities hold within 1e-9 (fixture and synthetic)", [&] {
    auto check_identities = [&](const std::array<ComparisonTable, 4>& ts) {
      std::map<std::string, std::array<double, 4>> by_country;
      for (std::size_t t = 0; t < 4; ++t)
        for (const auto& r : ts[t].rows) by_country[r.country][t] = r.inflation;
      for (const auto& [country, inf] : by_country) {
        if (!std::isfinite(inf[0]) || !std::isfinite(inf[1])) continue;
        expect(std::fabs(inf[2] - inf[1] / inf[0]) <= 1e-9,
               "CPP identity " + country);
        expect(std::fabs(inf[3] -
                         std::cbrt(inf[0]) * std::pow(inf[2], 2.0 / 3.0)) <=
                   1e-9,
               "h identity " + country);
      }
    };
    check_identities(tables);

    std::vector<BibRecord> intl;
    for (const auto& r : credited)
      if (r.countries.size() >= 2) intl.push_back(r);
    auto wc = accumulate_ledger(intl, CountingMethod::whole);
    auto wnc = accumulate_ledger(intl, CountingMethod::whole_normalized);
    check_identities(build_comparison(build_indicator_table(wc, wnc, 0.0)));
  });

  criterion(9, "t p-value engine agrees with the quadrature oracle within 1e-8", [&] {
    for (double t : {0.1, 0.5, 1.0, 2.0, 2.611, 5.0})
      for (double df : {1.0, 5.0, 20.0, 42.0, 100.0}) {
        double oracle = testsupport::quadrature_t_two_tailed_p(t, df);
        double got = stats::t_two_tailed_p(t, df);
        expect(std::fabs(got - oracle) <= 1e-8,
               "t=" + std::to_string(t) + " df=" + std::to_string(df));
      }
  });

  criterion(10, "selection funnel is non-increasing and matches generator bookkeeping", [&] {
    CorpusFilter filter;
    filter.year_min = 1998;
    filter.year_max = 2012;
    auto [selected, rep] = filter_corpus(corpus.records, filter);
    expect(rep.after_year == corpus.in_year_window, "year stage");
    expect(rep.after_doc_type == corpus.and_doc_type, "doc-type stage");
    expect(rep.after_country == corpus.and_has_country, "country stage");
    expect(rep.after_international == corpus.and_international,
           "international stage");
    std::size_t prev = rep.input;
    for (std::size_t s : rep.stages()) {
      expect(s <= prev, "stage counts must not increase");
      prev = s;
    }
  });

  if (failed > 0) {
    std::printf("%d criterion(s) failed\n", failed);
    return 1;
  }
  std::printf("all 10 acceptance criteria passed\n");
  return 0;
}
