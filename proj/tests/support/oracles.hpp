// Test-only helpers: a synthetic corpus generator that keeps its own
// bookkeeping, and independent brute-force oracles. Nothing here reuses the
// library's crediting, filtering, or p-value code paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bibcount/corpus.hpp"

namespace testsupport {

struct SyntheticCorpus {
  std::vector<bibcount::BibRecord> records;
  // funnel bookkeeping for the default filter (1998-2012, article /
  // conference-paper / review, country required, international required),
  // maintained by the generator itself
  std::size_t in_year_window = 0;
  std::size_t and_doc_type = 0;
  std::size_t and_has_country = 0;
  std::size_t and_international = 0;
  long long total_citations_international = 0;
};

inline SyntheticCorpus make_corpus(std::size_t n, unsigned seed) {
  static const std::vector<std::string> pool = {
      "United States", "China",  "Germany", "France",  "Japan",
      "Brazil",        "India",  "Sweden",  "Belgium", "Hong Kong"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> year_dist(1995, 2015);
  std::uniform_int_distribution<int> type_dist(0, 3);
  std::uniform_int_distribution<int> k_dist(0, 4);
  std::uniform_int_distribution<long long> cit_dist(0, 200);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);

  SyntheticCorpus corpus;
  for (std::size_t i = 0; i < n; ++i) {
    bibcount::BibRecord r;
    r.id = "syn-" + std::to_string(i);
    r.year = year_dist(rng);
    switch (type_dist(rng)) {
      case 0: r.doc_type = bibcount::DocType::article; break;
      case 1: r.doc_type = bibcount::DocType::conference_paper; break;
      case 2: r.doc_type = bibcount::DocType::review; break;
      default: r.doc_type = bibcount::DocType::other;
    }
    int k = k_dist(rng);
    std::set<std::string> chosen;
    while (static_cast<int>(chosen.size()) < k) chosen.insert(pool[pick(rng)]);
    r.countries.assign(chosen.begin(), chosen.end());
    r.citations = cit_dist(rng);
    corpus.records.push_back(r);

    bool y = r.year >= 1998 && r.year <= 2012;
    bool t = r.doc_type != bibcount::DocType::other;
    bool c = !r.countries.empty();
    bool intl = r.countries.size() >= 2;
    if (y) ++corpus.in_year_window;
    if (y && t) ++corpus.and_doc_type;
    if (y && t && c) ++corpus.and_has_country;
    if (y && t && c && intl) {
      ++corpus.and_international;
      corpus.total_citations_international += r.citations;
    }
  }
  return corpus;
}

// Naive re-derivation of per-country credit sums. Deduplicates countries
// itself and uses its own compensated accumulation loop.
struct OracleSums {
  std::map<std::string, double> paper;
  std::map<std::string, double> citation;
};

inline OracleSums brute_force_ledger(
    const std::vector<bibcount::BibRecord>& records, bool normalized) {
  std::map<std::string, double> psum, pcomp, csum, ccomp;
  auto add = [](std::map<std::string, double>& sum,
                std::map<std::string, double>& comp, const std::string& key,
                double x) {
    double y = x - comp[key];
    double t = sum[key] + y;
    comp[key] = (t - sum[key]) - y;
    sum[key] = t;
  };
  for (const auto& r : records) {
    std::vector<std::string> uniq;
    for (const auto& c : r.countries)
      if (std::find(uniq.begin(), uniq.end(), c) == uniq.end())
        uniq.push_back(c);
    if (uniq.empty()) continue;
    double share = normalized ? 1.0 / static_cast<double>(uniq.size()) : 1.0;
    for (const auto& c : uniq) {
      add(psum, pcomp, c, share);
      add(csum, ccomp, c, share * static_cast<double>(r.citations));
    }
  }
  OracleSums out;
  for (auto& [k, v] : psum) out.paper[k] = v - pcomp[k];
  for (auto& [k, v] : csum) out.citation[k] = v - ccomp[k];
  return out;
}

// Definition-level h-index: scan h = 0..n and keep the largest h with at
// least h entries >= h.
inline int brute_force_h_index(const std::vector<long long>& citations) {
  int best = 0;
  for (int h = 0; h <= static_cast<int>(citations.size()); ++h) {
    int at_least = 0;
    for (long long c : citations)
      if (c >= h) ++at_least;
    if (at_least >= h) best = h;
  }
  return best;
}

// Definitional Pearson, no clamping or shortcuts.
inline double naive_pearson(const std::vector<double>& x,
                            const std::vector<double>& y) {
  double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double cov = 0, vx = 0, vy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cov += (x[i] - mx) * (y[i] - my);
    vx += (x[i] - mx) * (x[i] - mx);
    vy += (y[i] - my) * (y[i] - my);
  }
  return cov / std::sqrt(vx * vy);
}

// Adaptive Simpson quadrature.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double eps, int depth = 40) {
  auto simpson = [&](double lo, double hi) {
    double mid = 0.5 * (lo + hi);
    return (hi - lo) / 6.0 * (f(lo) + 4.0 * f(mid) + f(hi));
  };
  std::function<double(double, double, double, int)> recurse =
      [&](double lo, double hi, double whole, int d) -> double {
    double mid = 0.5 * (lo + hi);
    double left = simpson(lo, mid);
    double right = simpson(mid, hi);
    if (d <= 0 || std::fabs(left + right - whole) < 15.0 * eps)
      return left + right + (left + right - whole) / 15.0;
    return recurse(lo, mid, left, d - 1) + recurse(mid, hi, right, d - 1);
  };
  return recurse(a, b, simpson(a, b), depth);
}

// Two-tailed Student-t p by numerical integration of the density over
// [0, |t|]; relies on std::lgamma, not the library's special functions.
inline double quadrature_t_two_tailed_p(double t, double df) {
  double ln_norm = std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0) -
                   0.5 * std::log(df * M_PI);
  auto pdf = [&](double x) {
    return std::exp(ln_norm - (df + 1.0) / 2.0 * std::log1p(x * x / df));
  };
  double body = adaptive_simpson(pdf, 0.0, std::fabs(t), 1e-12);
  return 1.0 - 2.0 * body;
}

}  // namespace testsupport
