#pragma once

#include <array>
#include <string_view>

namespace bibcount::fixture {

// Country-level base values (paper and citation credit under both counting
// methods) for the 22 countries of the 1998-2012 tribology study, together
// with the published downstream cells used to verify the reproduction:
// ranks, CPP, model h, and per-row inflation for all four indicators.
struct CountryRow {
  std::string_view country;
  double p_wc, p_wnc;      // paper credit
  double c_wc, c_wnc;      // citation credit
  int rank_p_wc, rank_p_wnc;
  int rank_c_wc, rank_c_wnc;
  int rank_cpp_wc, rank_cpp_wnc;
  int rank_h_wc, rank_h_wnc;
  double cpp_wc, cpp_wnc;  // published, 2 decimals
  double h_wc, h_wnc;      // published, 2 decimals
  double infl_p, infl_c, infl_cpp, infl_h;  // published, 2 decimals
};

inline constexpr std::array<CountryRow, 22> kCountries = {{
    {"United States", 1098, 519.58, 15503, 7283.6, 1, 1, 1, 1, 6, 6, 1, 1,
     14.12, 14.02, 60.27, 46.74, 2.11, 2.13, 1.01, 1.29},
    {"China", 719, 348.27, 8526, 4031.88, 2, 2, 2, 2, 11, 12, 4, 4,
     11.86, 11.58, 46.59, 36.01, 2.06, 2.11, 1.02, 1.29},
    {"Germany", 594, 277.28, 6586, 2999.97, 3, 3, 5, 5, 15, 15, 5, 6,
     11.09, 10.82, 41.80, 31.90, 2.14, 2.20, 1.02, 1.31},
    {"United Kingdom", 578, 269.58, 8469, 3984.37, 4, 4, 3, 3, 4, 4, 2, 2,
     14.65, 14.78, 49.88, 38.91, 2.14, 2.13, 0.99, 1.28},
    {"France", 522, 245, 7497, 3566.65, 5, 5, 4, 4, 5, 5, 3, 3,
     14.36, 14.56, 47.57, 37.31, 2.13, 2.10, 0.99, 1.28},
    {"Japan", 431, 199.33, 4167, 1904.52, 6, 6, 6, 6, 17, 17, 8, 8,
     9.67, 9.55, 34.28, 26.30, 2.16, 2.19, 1.01, 1.30},
    {"Canada", 248, 114.38, 3130, 1416.02, 7, 7, 8, 8, 8, 7, 9, 9,
     12.62, 12.38, 34.06, 25.98, 2.17, 2.21, 1.02, 1.31},
    {"Spain", 229, 104.92, 2732, 1257.98, 8, 8, 10, 10, 10, 9, 10, 10,
     11.93, 11.99, 31.94, 24.71, 2.18, 2.17, 1.00, 1.29},
    {"South Korea", 204, 98.08, 1517, 721.5, 9, 9, 16, 15, 22, 22, 20, 20,
     7.44, 7.36, 22.43, 17.44, 2.08, 2.10, 1.01, 1.29},
    {"India", 201, 95.88, 1845, 861.38, 10, 10, 13, 12, 19, 18, 16, 15,
     9.18, 8.98, 25.68, 19.78, 2.10, 2.14, 1.02, 1.30},
    {"Poland", 188, 87.25, 1566, 692.2, 11, 11, 15, 16, 21, 21, 19, 19,
     8.33, 7.93, 23.54, 17.64, 2.15, 2.26, 1.05, 1.33},
    {"Italy", 185, 84.7, 2085, 948.17, 12, 12, 11, 11, 14, 13, 12, 12,
     11.27, 11.19, 28.64, 21.98, 2.18, 2.20, 1.01, 1.30},
    {"Switzerland", 182, 82.4, 3538, 1650.27, 13, 13, 7, 7, 1, 1, 6, 5,
     19.44, 20.03, 40.97, 32.09, 2.21, 2.14, 0.97, 1.28},
    {"Russian Federation", 181, 82.03, 2917, 1346.45, 14, 14, 9, 9, 2, 2, 7, 7,
     16.12, 16.41, 36.09, 28.06, 2.21, 2.17, 0.98, 1.29},
    {"Austria", 136, 62.37, 1570, 735.07, 15, 15, 14, 14, 12, 11, 15, 13,
     11.54, 11.79, 26.27, 20.54, 2.18, 2.14, 0.98, 1.28},
    {"Australia", 134, 62.37, 1369, 627, 16, 16, 19, 18, 16, 16, 18, 17,
     10.22, 10.05, 24.09, 18.47, 2.15, 2.18, 1.02, 1.30},
    {"Hong Kong", 121, 58.5, 1071, 524.83, 19, 17, 21, 21, 20, 20, 22, 22,
     8.85, 8.97, 21.16, 16.76, 2.07, 2.04, 0.99, 1.26},
    {"Brazil", 115, 58.5, 1071, 524.83, 20, 18, 22, 22, 18, 19, 21, 21,
     9.31, 8.97, 21.53, 16.76, 1.97, 2.04, 1.04, 1.28},
    {"Belgium", 126, 57.17, 1517, 684.07, 17, 19, 17, 17, 9, 10, 14, 14,
     12.04, 11.97, 26.34, 20.15, 2.20, 2.22, 1.01, 1.31},
    {"Sweden", 125, 55.67, 1905, 859.35, 18, 20, 12, 13, 3, 3, 11, 11,
     15.24, 15.44, 30.73, 23.67, 2.25, 2.22, 0.99, 1.30},
    {"Portugal", 112, 50.75, 1267, 564.42, 21, 21, 20, 20, 13, 14, 17, 18,
     11.31, 11.12, 24.29, 18.45, 2.21, 2.24, 1.02, 1.32},
    {"Netherlands", 107, 49.28, 1414, 597.3, 22, 22, 18, 19, 7, 8, 13, 16,
     13.21, 12.12, 26.54, 19.35, 2.17, 2.37, 1.09, 1.37},
}};

// Published inflation summary (lowest / highest / average), one row per
// indicator in the order paper count, citation count, CPP, h-index.
struct InflationRow {
  double lowest, highest, average;
};
inline constexpr std::array<InflationRow, 4> kInflationSummary = {{
    {1.97, 2.25, 2.15},
    {2.04, 2.37, 2.17},
    {0.97, 1.09, 1.01},
    {1.26, 1.37, 1.30},
}};

// Published statistical test results, same indicator order.
struct StatRow {
  double pearson;
  double spearman;
  double t;
  double p;
  bool significant;  // p < 0.05
};
inline constexpr std::array<StatRow, 4> kStatTests = {{
    {1.0, 0.990, 2.611, 0.01246, true},
    {1.0, 0.996, 2.344, 0.02385, true},
    {0.995, 0.995, 0.092, 0.92743, false},
    {0.999, 0.990, 2.589, 0.01316, true},
}};

// Selection funnel reported by the study; not recomputable without the
// source database, documented for reference only.
inline constexpr std::size_t kPapersRetrieved = 27952;
inline constexpr std::size_t kPapersWithCountry = 27252;
inline constexpr std::size_t kPapersInternational = 3789;
inline constexpr int kYearMin = 1998;
inline constexpr int kYearMax = 2012;
inline constexpr double kPaperThreshold = 100.0;

}  // namespace bibcount::fixture
