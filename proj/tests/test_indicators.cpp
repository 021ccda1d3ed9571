#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "bibcount/fixture.hpp"
#include "bibcount/format.hpp"
#include "bibcount/indicators.hpp"
#include "support/oracles.hpp"

using namespace bibcount;

namespace {

// Ledgers seeded straight from the fixture's base credits.
std::pair<CreditLedger, CreditLedger> fixture_ledgers() {
  CreditLedger wc(CountingMethod::whole);
  CreditLedger wnc(CountingMethod::whole_normalized);
  for (const auto& row : fixture::kCountries) {
    wc.add_credit(std::string(row.country), row.p_wc, row.c_wc);
    wnc.add_credit(std::string(row.country), row.p_wnc, row.c_wnc);
  }
  return {std::move(wc), std::move(wnc)};
}

}  // namespace

TEST_CASE("citations per paper") {
  CHECK(round2(citations_per_paper(1098, 15503)) == 14.12);
  CHECK(citations_per_paper(1, 0) == 0.0);
  CHECK(round2(citations_per_paper(82.4, 1650.27)) == 20.03);
  CHECK_THROWS_AS(citations_per_paper(0, 10), IndicatorDomainError);
  CHECK_THROWS_AS(citations_per_paper(-1, 10), IndicatorDomainError);
}

TEST_CASE("model h-index reproduces the published country cells") {
  CHECK(gs_h_index(1098, 14.12, 1.0) == Catch::Approx(60.27).margin(0.02));
  CHECK(gs_h_index(519.58, 14.02, 1.0) == Catch::Approx(46.74).margin(0.02));
  CHECK(gs_h_index(1, 1, 1) == Catch::Approx(1.0));
  CHECK(gs_h_index(10, 0, 1) == 0.0);  // no citations, no impact
  CHECK_THROWS_AS(gs_h_index(0, 1, 1), IndicatorDomainError);
  CHECK_THROWS_AS(gs_h_index(10, -1, 1), IndicatorDomainError);
}

TEST_CASE("model h-index is homogeneous in the constant and monotone") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(0.1, 500.0);
  for (int i = 0; i < 200; ++i) {
    double p = dist(rng), cpp = dist(rng), c = dist(rng) / 100.0;
    CHECK(gs_h_index(p, cpp, c) == c * gs_h_index(p, cpp, 1.0));
    CHECK(gs_h_index(p * 1.5, cpp, 1.0) > gs_h_index(p, cpp, 1.0));
    CHECK(gs_h_index(p, cpp * 1.5, 1.0) > gs_h_index(p, cpp, 1.0));
  }
}

TEST_CASE("empirical h-index follows the Hirsch definition") {
  std::vector<long long> cites = {10, 8, 5, 4, 3};
  CHECK(testsupport::brute_force_h_index(cites) == 4);
  CHECK(empirical_h_index(cites) == 4);
  CHECK(empirical_h_index(std::vector<long long>{}) == 0);
  CHECK(empirical_h_index(std::vector<long long>{0, 0, 0}) == 0);
  CHECK_THROWS_AS(empirical_h_index(std::vector<long long>{3, -1}),
                  IndicatorDomainError);
}

TEST_CASE("empirical h-index agrees with brute force on random lists") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long long> cit(0, 30);
  std::uniform_int_distribution<std::size_t> len(0, 40);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<long long> cites(len(rng));
    for (auto& c : cites) c = cit(rng);
    int expected = testsupport::brute_force_h_index(cites);
    CHECK(empirical_h_index(cites) == expected);

    // bounded by list length and max entry, permutation invariant
    long long max_entry = cites.empty() ? 0 : *std::max_element(cites.begin(), cites.end());
    CHECK(expected <= static_cast<int>(cites.size()));
    CHECK(expected <= max_entry);
    std::shuffle(cites.begin(), cites.end(), rng);
    CHECK(empirical_h_index(cites) == expected);
  }
}

TEST_CASE("indicator table applies the whole-counting threshold") {
  auto [wc, wnc] = fixture_ledgers();

  auto all22 = build_indicator_table(wc, wnc, 100.0);
  CHECK(all22.size() == 22);

  auto top = build_indicator_table(wc, wnc, 600.0);
  REQUIRE(top.size() == 2);
  CHECK(top[0].country == "United States");
  CHECK(top[1].country == "China");
}

TEST_CASE("indicator table keeps everything at threshold zero") {
  CreditLedger wc(CountingMethod::whole), wnc(CountingMethod::whole_normalized);
  for (const char* c : {"A", "B", "C"}) {
    wc.add_credit(c, 2, 10);
    wnc.add_credit(c, 1, 5);
  }
  CHECK(build_indicator_table(wc, wnc, 0.0).size() == 3);
}

TEST_CASE("indicator table refuses mismatched ledgers") {
  CreditLedger wc(CountingMethod::whole), wnc(CountingMethod::whole_normalized);
  wc.add_credit("A", 2, 10);
  wnc.add_credit("B", 1, 5);
  CHECK_THROWS_AS(build_indicator_table(wc, wnc, 0.0), std::logic_error);
}

TEST_CASE("included countries satisfy cpp * P = C") {
  auto [wc, wnc] = fixture_ledgers();
  for (const auto& pair : build_indicator_table(wc, wnc, 100.0)) {
    CHECK(pair.wc.cpp * pair.wc.papers ==
          Catch::Approx(pair.wc.citations).margin(1e-9));
    CHECK(pair.wnc.cpp * pair.wnc.papers ==
          Catch::Approx(pair.wnc.citations).margin(1e-9));
  }
}

TEST_CASE("all 44 published CPP cells rebuild from the base credits") {
  auto [wc, wnc] = fixture_ledgers();
  auto pairs = build_indicator_table(wc, wnc, 100.0);
  REQUIRE(pairs.size() == 22);
  for (const auto& pair : pairs) {
    const fixture::CountryRow* row = nullptr;
    for (const auto& r : fixture::kCountries)
      if (r.country == pair.country) row = &r;
    REQUIRE(row != nullptr);
    CHECK(round2(pair.wc.cpp) == row->cpp_wc);
    CHECK(round2(pair.wnc.cpp) == row->cpp_wnc);
  }
}
