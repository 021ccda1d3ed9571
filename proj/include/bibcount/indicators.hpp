#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "bibcount/crediting.hpp"
#include "bibcount/errors.hpp"

namespace bibcount {

// Citations per paper.
inline double citations_per_paper(double papers, double citations) {
  if (papers <= 0.0)
    throw IndicatorDomainError("CPP undefined for non-positive paper count");
  if (citations < 0.0)
    throw IndicatorDomainError("CPP undefined for negative citation count");
  return citations / papers;
}

// Glanzel-Schubert h-index model: h = c * P^(1/3) * CPP^(2/3).
// c = 1 for countries, 0.9 for journals.
inline double gs_h_index(double papers, double cpp, double c_constant = 1.0) {
  if (papers <= 0.0)
    throw IndicatorDomainError("h model undefined for non-positive paper count");
  if (cpp < 0.0 || c_constant < 0.0)
    throw IndicatorDomainError("h model undefined for negative inputs");
  // c multiplies last so that scaling in c is exact
  return c_constant * (std::cbrt(papers) * std::pow(cpp, 2.0 / 3.0));
}

// Hirsch h-index: largest h with at least h entries >= h.
inline int empirical_h_index(std::span<const long long> citations) {
  std::vector<long long> sorted(citations.begin(), citations.end());
  for (long long c : sorted)
    if (c < 0)
      throw IndicatorDomainError("empirical h-index: negative citation count");
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  int h = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] >= static_cast<long long>(i + 1))
      h = static_cast<int>(i + 1);
    else
      break;
  return h;
}

struct CountryIndicators {
  std::string country;
  CountingMethod method = CountingMethod::whole;
  double papers = 0.0;     // P
  double citations = 0.0;  // C
  double cpp = 0.0;
  double h_model = 0.0;
  double c_constant = 1.0;
};

struct IndicatorPair {
  std::string country;
  CountryIndicators wc;
  CountryIndicators wnc;
};

// Countries whose whole-counting paper credit meets the threshold, with
// both methods' indicators computed side by side. Rows sorted by WC paper
// credit descending, name ascending on ties.
inline std::vector<IndicatorPair> build_indicator_table(
    const CreditLedger& wc_ledger, const CreditLedger& wnc_ledger,
    double threshold, double c_constant = 1.0) {
  if (wc_ledger.entries().size() != wnc_ledger.entries().size())
    throw std::logic_error(
        "whole and whole-normalized ledgers cover different country sets");
  std::vector<IndicatorPair> out;
  for (const auto& [country, e] : wc_ledger.entries()) {
    if (!wnc_ledger.entries().contains(country))
      throw std::logic_error("country '" + country +
                             "' missing from whole-normalized ledger");
    double p_wc = e.paper.value();
    if (p_wc < threshold) continue;
    IndicatorPair pair;
    pair.country = country;
    auto fill = [&](CountryIndicators& ind, CountingMethod m, double p,
                    double c) {
      ind.country = country;
      ind.method = m;
      ind.papers = p;
      ind.citations = c;
      ind.c_constant = c_constant;
      ind.cpp = citations_per_paper(p, c);
      ind.h_model = gs_h_index(p, ind.cpp, c_constant);
    };
    fill(pair.wc, CountingMethod::whole, p_wc, e.citation.value());
    fill(pair.wnc, CountingMethod::whole_normalized,
         wnc_ledger.paper_credit(country), wnc_ledger.citation_credit(country));
    out.push_back(std::move(pair));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.wc.papers != b.wc.papers) return a.wc.papers > b.wc.papers;
    return a.country < b.country;
  });
  return out;
}

}  // namespace bibcount
