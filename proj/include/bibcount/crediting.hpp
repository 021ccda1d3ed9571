#pragma once

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bibcount/corpus.hpp"
#include "bibcount/errors.hpp"

namespace bibcount {

enum class CountingMethod { whole, whole_normalized };

inline std::string to_string(CountingMethod m) {
  return m == CountingMethod::whole ? "whole" : "whole-normalized";
}

// Parse a method name. Straight and complete-normalized counting are
// registered names but not implemented in this artifact.
inline CountingMethod method_from_name(std::string_view name) {
  std::string n = ascii_lower(trim(name));
  if (n == "whole" || n == "wc") return CountingMethod::whole;
  if (n == "whole-normalized" || n == "wnc" || n == "fractional")
    return CountingMethod::whole_normalized;
  if (n == "straight" || n == "complete-normalized")
    throw NotImplementedError("counting method '" + n + "' is registered but not implemented");
  throw SchemaError("unknown counting method '" + n + "'");
}

// Kahan compensated accumulator.
class KahanSum {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  void merge(const KahanSum& other) {
    add(other.sum_);
    add(-other.comp_);
  }
  double value() const { return sum_ - comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Credit {
  double paper = 0.0;
  double citation = 0.0;
};

// Per-country credit for one record under one method.
struct CreditVector {
  std::map<std::string, Credit> credits;
  std::size_t unique_countries = 0;
};

inline CreditVector credit_whole(const BibRecord& record) {
  if (record.countries.empty())
    throw std::invalid_argument("record '" + record.id +
                                "' has no countries; filter it out upstream");
  CreditVector cv;
  cv.unique_countries = record.countries.size();
  for (const auto& c : record.countries)
    cv.credits[c] = {1.0, static_cast<double>(record.citations)};
  return cv;
}

inline CreditVector credit_whole_normalized(const BibRecord& record) {
  if (record.countries.empty())
    throw std::invalid_argument("record '" + record.id +
                                "' has no countries; filter it out upstream");
  CreditVector cv;
  cv.unique_countries = record.countries.size();
  double share = 1.0 / static_cast<double>(cv.unique_countries);
  for (const auto& c : record.countries)
    cv.credits[c] = {share, share * static_cast<double>(record.citations)};
  return cv;
}

inline CreditVector credit_record(const BibRecord& record, CountingMethod m) {
  return m == CountingMethod::whole ? credit_whole(record)
                                    : credit_whole_normalized(record);
}

// Per-country running sums for one counting method. Mergeable across
// corpus partitions.
class CreditLedger {
 public:
  struct Entry {
    KahanSum paper;
    KahanSum citation;
  };

  explicit CreditLedger(CountingMethod method) : method_(method) {}

  CountingMethod method() const { return method_; }
  std::size_t records_counted() const { return records_counted_; }

  void add_record(const BibRecord& record) {
    CreditVector cv = credit_record(record, method_);
    for (const auto& [country, credit] : cv.credits) {
      auto& e = entries_[country];
      e.paper.add(credit.paper);
      e.citation.add(credit.citation);
    }
    ++records_counted_;
  }

  // Direct credit injection, used when loading a serialized ledger.
  void add_credit(const std::string& country, double paper, double citation) {
    auto& e = entries_[country];
    e.paper.add(paper);
    e.citation.add(citation);
  }

  void merge(const CreditLedger& other) {
    if (other.method_ != method_)
      throw std::invalid_argument("cannot merge ledgers of different methods");
    for (const auto& [country, e] : other.entries_) {
      auto& mine = entries_[country];
      mine.paper.merge(e.paper);
      mine.citation.merge(e.citation);
    }
    records_counted_ += other.records_counted_;
  }

  double paper_credit(const std::string& country) const {
    auto it = entries_.find(country);
    return it == entries_.end() ? 0.0 : it->second.paper.value();
  }
  double citation_credit(const std::string& country) const {
    auto it = entries_.find(country);
    return it == entries_.end() ? 0.0 : it->second.citation.value();
  }

  const std::map<std::string, Entry>& entries() const { return entries_; }

  void write_tsv(std::ostream& out) const {
    out << "country\tpaper_credit\tcitation_credit\tmethod\n";
    for (const auto& [country, e] : entries_)
      out << country << '\t' << e.paper.value() << '\t' << e.citation.value()
          << '\t' << to_string(method_) << '\n';
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [country, e] : entries_)
      arr.push_back({{"country", country},
                     {"paper_credit", e.paper.value()},
                     {"citation_credit", e.citation.value()},
                     {"method", to_string(method_)}});
    return arr;
  }

 private:
  CountingMethod method_;
  std::map<std::string, Entry> entries_;
  std::size_t records_counted_ = 0;
};

inline CreditLedger accumulate_ledger(std::span<const BibRecord> records,
                                      CountingMethod method) {
  CreditLedger ledger(method);
  for (const auto& r : records) ledger.add_record(r);
  return ledger;
}

}  // namespace bibcount
