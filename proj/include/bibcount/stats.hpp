#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "bibcount/errors.hpp"

namespace bibcount::stats {

// Lanczos approximation (g = 7, n = 9), accurate to ~1e-14 for x > 0.
inline double log_gamma(double x) {
  if (x <= 0.0)
    throw IndicatorDomainError("log_gamma defined for positive arguments only");
  static constexpr double coeff[9] = {
      0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
      771.32342877765313,   -176.61502916214059, 12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // reflection
    return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
  }
  double z = x - 1.0;
  double a = coeff[0];
  double t = z + 7.5;
  for (int i = 1; i < 9; ++i) a += coeff[i] / (z + i);
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(a);
}

namespace detail {

// Continued fraction for the incomplete beta (modified Lentz).
inline double betacf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 1e-14;
  constexpr double kTiny = 1e-300;
  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw IndicatorDomainError("incomplete beta continued fraction did not converge");
}

}  // namespace detail

// Regularized incomplete beta I_x(a, b).
inline double regularized_incomplete_beta(double a, double b, double x) {
  if (a <= 0.0 || b <= 0.0)
    throw IndicatorDomainError("incomplete beta requires positive parameters");
  if (x < 0.0 || x > 1.0)
    throw IndicatorDomainError("incomplete beta requires x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  double ln_front = log_gamma(a + b) - log_gamma(a) - log_gamma(b) +
                    a * std::log(x) + b * std::log(1.0 - x);
  double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * detail::betacf(a, b, x) / a;
  return 1.0 - front * detail::betacf(b, a, 1.0 - x) / b;
}

// Two-tailed Student-t tail probability: p = I_{df/(df+t^2)}(df/2, 1/2).
inline double t_two_tailed_p(double t, double df) {
  if (!std::isfinite(t))
    throw IndicatorDomainError("t statistic must be finite");
  if (df <= 0.0)
    throw IndicatorDomainError("degrees of freedom must be positive");
  double x = df / (df + t * t);
  return regularized_incomplete_beta(df / 2.0, 0.5, x);
}

enum class CorrelationKind { pearson, spearman_ordinal, spearman_average_ranks };

struct CorrelationResult {
  double coefficient = 0.0;
  std::size_t n = 0;
  double p_two_tailed = 1.0;
  CorrelationKind kind = CorrelationKind::pearson;
};

namespace detail {

inline void check_paired(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("correlation: vector lengths differ");
  if (x.size() < 3)
    throw std::invalid_argument("correlation: need at least 3 pairs");
}

inline double mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

inline double correlation_p(double r, std::size_t n) {
  double denom = 1.0 - r * r;
  if (denom <= 0.0) return 0.0;
  double t = r * std::sqrt((static_cast<double>(n) - 2.0) / denom);
  return t_two_tailed_p(t, static_cast<double>(n) - 2.0);
}

}  // namespace detail

inline CorrelationResult pearson(std::span<const double> x,
                                 std::span<const double> y) {
  detail::check_paired(x, y);
  double mx = detail::mean(x), my = detail::mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw IndicatorDomainError("correlation undefined for a constant vector");
  double r = sxy / std::sqrt(sxx * syy);
  r = std::clamp(r, -1.0, 1.0);
  return {r, x.size(), detail::correlation_p(r, x.size()),
          CorrelationKind::pearson};
}

enum class TieMode { ordinal, average_ranks };

namespace detail {

// Ordinal ranks descending by value; ties break by the paired vector's
// value descending, then by original position.
inline std::vector<double> ordinal_ranks(std::span<const double> v,
                                         std::span<const double> paired) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (v[a] != v[b]) return v[a] > v[b];
    if (paired[a] != paired[b]) return paired[a] > paired[b];
    return a < b;
  });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    ranks[idx[i]] = static_cast<double>(i + 1);
  return ranks;
}

// Descending ranks with ties given the mean of their rank positions.
inline std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  std::vector<double> ranks(v.size());
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

}  // namespace detail

// Spearman over already-assigned ranks (e.g. the comparison tables').
inline CorrelationResult spearman_from_ranks(std::span<const double> rank_x,
                                             std::span<const double> rank_y,
                                             CorrelationKind kind) {
  CorrelationResult r = pearson(rank_x, rank_y);
  r.kind = kind;
  return r;
}

inline CorrelationResult spearman(std::span<const double> x,
                                  std::span<const double> y,
                                  TieMode mode = TieMode::ordinal) {
  detail::check_paired(x, y);
  std::vector<double> rx, ry;
  CorrelationKind kind;
  if (mode == TieMode::ordinal) {
    rx = detail::ordinal_ranks(x, y);
    ry = detail::ordinal_ranks(y, x);
    kind = CorrelationKind::spearman_ordinal;
  } else {
    rx = detail::average_ranks(x);
    ry = detail::average_ranks(y);
    kind = CorrelationKind::spearman_average_ranks;
  }
  return spearman_from_ranks(rx, ry, kind);
}

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p_two_tailed = 1.0;
  double mean_x = 0.0;
  double mean_y = 0.0;
  double pooled_sd = 0.0;
};

enum class TTestVariant { pooled, welch };

namespace detail {

inline double sample_var(std::span<const double> v, double m) {
  double s = 0.0;
  for (double a : v) s += (a - m) * (a - m);
  return s / (static_cast<double>(v.size()) - 1.0);
}

}  // namespace detail

// Independent two-sample t-test.
inline TTestResult t_test(std::span<const double> x, std::span<const double> y,
                          TTestVariant variant = TTestVariant::pooled) {
  if (x.size() < 2 || y.size() < 2)
    throw std::invalid_argument("t-test: each sample needs at least 2 values");
  double nx = static_cast<double>(x.size());
  double ny = static_cast<double>(y.size());
  TTestResult r;
  r.mean_x = detail::mean(x);
  r.mean_y = detail::mean(y);
  double vx = detail::sample_var(x, r.mean_x);
  double vy = detail::sample_var(y, r.mean_y);
  if (vx == 0.0 && vy == 0.0) {
    if (r.mean_x == r.mean_y) {
      // both constant and equal: t = 0 by convention
      r.df = nx + ny - 2.0;
      r.p_two_tailed = 1.0;
      return r;
    }
    throw IndicatorDomainError(
        "t-test undefined: both samples constant with different means");
  }
  if (variant == TTestVariant::pooled) {
    double sp2 = ((nx - 1.0) * vx + (ny - 1.0) * vy) / (nx + ny - 2.0);
    r.pooled_sd = std::sqrt(sp2);
    r.t = (r.mean_x - r.mean_y) / (r.pooled_sd * std::sqrt(1.0 / nx + 1.0 / ny));
    r.df = nx + ny - 2.0;
  } else {
    double se2 = vx / nx + vy / ny;
    r.pooled_sd = std::sqrt(se2);
    r.t = (r.mean_x - r.mean_y) / std::sqrt(se2);
    r.df = se2 * se2 /
           (vx * vx / (nx * nx * (nx - 1.0)) + vy * vy / (ny * ny * (ny - 1.0)));
  }
  r.p_two_tailed = t_two_tailed_p(r.t, r.df);
  return r;
}

inline TTestResult t_test_pooled(std::span<const double> x,
                                 std::span<const double> y) {
  return t_test(x, y, TTestVariant::pooled);
}

}  // namespace bibcount::stats
