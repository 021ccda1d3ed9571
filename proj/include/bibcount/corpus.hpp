#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "bibcount/csv.hpp"
#include "bibcount/errors.hpp"

namespace bibcount {

enum class DocType { article, conference_paper, review, other };

inline std::string to_string(DocType t) {
  switch (t) {
    case DocType::article: return "article";
    case DocType::conference_paper: return "conference-paper";
    case DocType::review: return "review";
    default: return "other";
  }
}

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline DocType doc_type_from_token(std::string_view token) {
  std::string t = ascii_lower(trim(token));
  std::replace(t.begin(), t.end(), ' ', '-');
  std::replace(t.begin(), t.end(), '_', '-');
  if (t == "article") return DocType::article;
  if (t == "conference-paper") return DocType::conference_paper;
  if (t == "review") return DocType::review;
  return DocType::other;
}

// One publication record.
struct BibRecord {
  std::string id;
  int year = 0;
  DocType doc_type = DocType::other;
  std::vector<std::string> raw_affiliations;
  std::vector<std::string> countries;  // normalized, duplicate-free, ordered
  long long citations = 0;
};

// Case-folded alias -> canonical country name. Canonical names always map
// to themselves, so normalization is idempotent.
class CountryAliasTable {
 public:
  void add(std::string_view alias, std::string_view canonical) {
    std::string canon = trim(canonical);
    if (canon.empty())
      throw SchemaError("alias table: empty canonical name for alias '" +
                        std::string(alias) + "'");
    map_[ascii_lower(trim(alias))] = canon;
    map_[ascii_lower(canon)] = canon;
  }

  std::optional<std::string> lookup(std::string_view folded) const {
    auto it = map_.find(std::string(folded));
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const { return map_.size(); }

  static CountryAliasTable from_csv(std::istream& in) {
    CountryAliasTable table;
    csv::Reader reader(in);
    while (auto row = reader.next()) {
      if (row->fields.size() == 1 && trim(row->fields[0]).empty()) continue;
      if (row->fields.size() < 2)
        throw SchemaError("alias table line " + std::to_string(row->line) +
                          ": expected two columns alias,canonical");
      if (ascii_lower(trim(row->fields[0])) == "alias") continue;  // header
      table.add(row->fields[0], row->fields[1]);
    }
    return table;
  }

  // Covers the 22 countries of the study plus common export variants.
  static CountryAliasTable builtin() {
    CountryAliasTable t;
    static constexpr std::array<const char*, 22> canon = {
        "United States", "China",       "Germany",   "United Kingdom",
        "France",        "Japan",       "Canada",    "Spain",
        "South Korea",   "India",       "Poland",    "Italy",
        "Switzerland",   "Russian Federation", "Austria", "Australia",
        "Hong Kong",     "Brazil",      "Belgium",   "Sweden",
        "Portugal",      "Netherlands"};
    for (const char* c : canon) t.add(c, c);
    t.add("USA", "United States");
    t.add("U.S.A", "United States");
    t.add("US", "United States");
    t.add("United States of America", "United States");
    t.add("UK", "United Kingdom");
    t.add("U.K", "United Kingdom");
    t.add("Great Britain", "United Kingdom");
    t.add("England", "United Kingdom");
    t.add("Scotland", "United Kingdom");
    t.add("Wales", "United Kingdom");
    t.add("PRC", "China");
    t.add("People's Republic of China", "China");
    t.add("Peoples R China", "China");
    t.add("Republic of Korea", "South Korea");
    t.add("Korea", "South Korea");
    t.add("Russia", "Russian Federation");
    t.add("The Netherlands", "Netherlands");
    t.add("Holland", "Netherlands");
    return t;
  }

 private:
  std::unordered_map<std::string, std::string> map_;
};

// Trim, case-fold, strip trailing punctuation, then consult the table.
inline std::optional<std::string> normalize_country(
    std::string_view raw, const CountryAliasTable& table) {
  std::string token = trim(raw);
  while (!token.empty()) {
    char c = token.back();
    if (c == '.' || c == ',' || c == ';' || c == ':' || c == '!' || c == '?')
      token.pop_back();
    else
      break;
  }
  token = trim(token);
  if (token.empty()) return std::nullopt;
  return table.lookup(ascii_lower(token));
}

struct RowError {
  std::size_t line = 0;
  std::string message;
};

// Counts surviving each selection stage, in application order.
struct SelectionReport {
  std::size_t input = 0;
  std::size_t after_year = 0;
  std::size_t after_doc_type = 0;
  std::size_t after_country = 0;
  std::size_t after_international = 0;

  std::vector<std::size_t> stages() const {
    return {after_year, after_doc_type, after_country, after_international};
  }
};

struct IngestReport {
  std::size_t rows_read = 0;
  std::size_t records_parsed = 0;
  std::vector<RowError> rejected_rows;
  std::map<std::string, std::size_t> unknown_country_tokens;
  SelectionReport selection;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["rows_read"] = rows_read;
    j["records_parsed"] = records_parsed;
    j["rejected_rows"] = nlohmann::json::array();
    for (const auto& e : rejected_rows)
      j["rejected_rows"].push_back({{"line", e.line}, {"message", e.message}});
    j["unknown_country_tokens"] = unknown_country_tokens;
    j["selection"] = {{"input", selection.input},
                      {"after_year", selection.after_year},
                      {"after_doc_type", selection.after_doc_type},
                      {"after_country", selection.after_country},
                      {"after_international", selection.after_international}};
    return j;
  }
};

struct ParseOptions {
  std::string cell_separator = ";";
};

namespace detail {

inline std::vector<std::string> split_cell(std::string_view cell,
                                           std::string_view sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= cell.size()) {
    auto next = cell.find(sep, pos);
    std::string_view part = (next == std::string_view::npos)
                                ? cell.substr(pos)
                                : cell.substr(pos, next - pos);
    std::string t = trim(part);
    if (!t.empty()) out.push_back(std::move(t));
    if (next == std::string_view::npos) break;
    pos = next + sep.size();
  }
  return out;
}

inline std::optional<long long> parse_int(std::string_view s) {
  std::string t = trim(s);
  if (t.empty()) return std::nullopt;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return std::nullopt;
  for (std::size_t k = i; k < t.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(t[k]))) return std::nullopt;
  try {
    return std::stoll(t);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace detail

// Read bibliographic records from a delimiter-separated stream.
// Header row is mandatory and must name id, year, type, citations and one
// of affiliations / countries. Malformed rows are reported, not dropped
// silently; a missing mandatory column is a schema error.
inline std::vector<BibRecord> parse_records(std::istream& in,
                                            IngestReport& report,
                                            const ParseOptions& opts = {}) {
  csv::Reader reader(in);
  auto header = reader.next();
  if (!header) throw SchemaError("empty input: header row required");

  std::map<std::string, std::size_t> cols;
  for (std::size_t i = 0; i < header->fields.size(); ++i)
    cols.emplace(ascii_lower(trim(header->fields[i])), i);

  auto need = [&](const std::string& name) {
    auto it = cols.find(name);
    if (it == cols.end())
      throw SchemaError("missing mandatory column: " + name);
    return it->second;
  };
  std::size_t col_id = need("id");
  std::size_t col_year = need("year");
  std::size_t col_type = need("type");
  std::size_t col_cit = need("citations");
  std::optional<std::size_t> col_aff, col_countries;
  if (auto it = cols.find("affiliations"); it != cols.end())
    col_aff = it->second;
  if (auto it = cols.find("countries"); it != cols.end())
    col_countries = it->second;
  if (!col_aff && !col_countries)
    throw SchemaError("missing mandatory column: affiliations (or countries)");

  std::vector<BibRecord> records;
  std::unordered_set<std::string> seen_ids;
  while (auto row = reader.next()) {
    ++report.rows_read;
    auto reject = [&](std::string msg) {
      report.rejected_rows.push_back({row->line, std::move(msg)});
    };
    std::size_t needed = std::max({col_id, col_year, col_type, col_cit,
                                   col_aff.value_or(0),
                                   col_countries.value_or(0)});
    if (row->fields.size() <= needed) {
      reject("too few fields");
      continue;
    }
    BibRecord rec;
    rec.id = trim(row->fields[col_id]);
    if (rec.id.empty()) {
      reject("empty id");
      continue;
    }
    if (!seen_ids.insert(rec.id).second) {
      reject("duplicate id '" + rec.id + "'");
      continue;
    }
    auto year = detail::parse_int(row->fields[col_year]);
    if (!year) {
      reject("unparsable year '" + trim(row->fields[col_year]) + "'");
      seen_ids.erase(rec.id);
      continue;
    }
    rec.year = static_cast<int>(*year);
    rec.doc_type = doc_type_from_token(row->fields[col_type]);
    auto cit = detail::parse_int(row->fields[col_cit]);
    if (!cit) {
      reject("unparsable citations '" + trim(row->fields[col_cit]) + "'");
      seen_ids.erase(rec.id);
      continue;
    }
    if (*cit < 0) {
      reject("negative citations");
      seen_ids.erase(rec.id);
      continue;
    }
    rec.citations = *cit;
    if (col_aff)
      rec.raw_affiliations =
          detail::split_cell(row->fields[*col_aff], opts.cell_separator);
    if (col_countries && rec.raw_affiliations.empty()) {
      // Curated input: the cell already holds country names, one per entry.
      for (auto& name :
           detail::split_cell(row->fields[*col_countries], opts.cell_separator))
        rec.raw_affiliations.push_back(std::move(name));
    }
    records.push_back(std::move(rec));
    ++report.records_parsed;
  }
  return records;
}

// Normalize the trailing comma segment of every affiliation string.
// Unknown segments are skipped and tallied in the report. First-occurrence
// order is kept, duplicates removed.
inline std::vector<std::string> extract_countries(const BibRecord& record,
                                                  const CountryAliasTable& table,
                                                  IngestReport* report = nullptr) {
  std::vector<std::string> out;
  for (const auto& aff : record.raw_affiliations) {
    auto pos = aff.find_last_of(',');
    std::string_view tail =
        (pos == std::string::npos) ? std::string_view(aff)
                                   : std::string_view(aff).substr(pos + 1);
    auto canon = normalize_country(tail, table);
    if (!canon) {
      std::string token = trim(tail);
      if (report && !token.empty()) ++report->unknown_country_tokens[token];
      continue;
    }
    if (std::find(out.begin(), out.end(), *canon) == out.end())
      out.push_back(*canon);
  }
  return out;
}

inline void derive_countries(std::vector<BibRecord>& records,
                             const CountryAliasTable& table,
                             IngestReport* report = nullptr) {
  for (auto& r : records) r.countries = extract_countries(r, table, report);
}

inline bool is_international(const BibRecord& record) {
  return record.countries.size() >= 2;
}

struct CorpusFilter {
  int year_min = std::numeric_limits<int>::min();
  int year_max = std::numeric_limits<int>::max();
  std::set<DocType> doc_types = {DocType::article, DocType::conference_paper,
                                 DocType::review};
  bool require_country = true;
  bool require_international = true;
  double min_papers_threshold = 100.0;  // applied later, per country
};

// Apply the selection pipeline: year window, document type, country
// presence, international collaboration. The per-country paper threshold
// is not applied here.
inline std::pair<std::vector<BibRecord>, SelectionReport> filter_corpus(
    const std::vector<BibRecord>& records, const CorpusFilter& filter) {
  if (filter.year_min > filter.year_max)
    throw SchemaError("corpus filter: year_min exceeds year_max");
  SelectionReport report;
  report.input = records.size();
  std::vector<BibRecord> out;
  for (const auto& r : records)
    if (r.year >= filter.year_min && r.year <= filter.year_max)
      out.push_back(r);
  report.after_year = out.size();
  std::erase_if(out, [&](const BibRecord& r) {
    return !filter.doc_types.contains(r.doc_type);
  });
  report.after_doc_type = out.size();
  if (filter.require_country)
    std::erase_if(out, [](const BibRecord& r) { return r.countries.empty(); });
  report.after_country = out.size();
  if (filter.require_international)
    std::erase_if(out, [](const BibRecord& r) { return !is_international(r); });
  report.after_international = out.size();
  return {std::move(out), report};
}

}  // namespace bibcount
