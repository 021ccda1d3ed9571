// Command-line front end: analyze a bibliographic CSV corpus, validate an
// input file, or regenerate the study's published tables from the embedded
// fixture and diff them cell by cell.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bibcount/bibcount.hpp"

namespace fs = std::filesystem;
using namespace bibcount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSchema = 2;
constexpr int kExitEmptySelection = 3;
constexpr int kExitReproductionMismatch = 4;

struct CommonArgs {
  std::string input;
  std::string aliases;
};

CountryAliasTable load_aliases(const std::string& path) {
  if (path.empty()) return CountryAliasTable::builtin();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open alias table: " + path);
  return CountryAliasTable::from_csv(in);
}

std::vector<BibRecord> load_corpus(const std::string& path,
                                   const CountryAliasTable& aliases,
                                   IngestReport& report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open input: " + path);
  auto records = parse_records(in, report);
  derive_countries(records, aliases, &report);
  return records;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

template <typename Fn>
std::string render(Fn&& fn) {
  std::ostringstream os;
  fn(os);
  return os.str();
}

void print_funnel(std::ostream& out, const SelectionReport& s) {
  out << "selection funnel: input " << s.input << " -> year " << s.after_year
      << " -> doc-type " << s.after_doc_type << " -> with-country "
      << s.after_country << " -> international " << s.after_international
      << "\n";
}

int cmd_analyze(const CommonArgs& common, const AnalysisOptions& opts,
                const std::string& format_name, const std::string& out_dir) {
  auto aliases = load_aliases(common.aliases);
  IngestReport ingest;
  auto records = load_corpus(common.input, aliases, ingest);

  AnalysisResult result = run_analysis(records, opts);
  ingest.selection = result.selection;
  print_funnel(std::cout, result.selection);

  if (result.selection.after_international == 0) {
    std::cerr << "error: empty selection after filtering; nothing to analyze\n";
    return kExitEmptySelection;
  }
  if (result.indicators.empty()) {
    std::cerr << "error: no country meets the paper threshold of "
              << opts.threshold << "\n";
    return kExitEmptySelection;
  }

  OutputFormat fmt = format_from_name(format_name);
  fs::path dir(out_dir);
  fs::create_directories(dir);
  std::string ext = "." + std::string(extension(fmt));

  write_file(dir / "ingest_report.json", ingest.to_json().dump(2) + "\n");
  write_file(dir / ("indicators" + ext), render([&](std::ostream& os) {
               write_indicator_table(os, result.indicators, fmt);
             }));
  for (const auto& table : result.tables)
    write_file(dir / ("comparison_" + to_string(table.indicator) + ext),
               render([&](std::ostream& os) {
                 write_comparison_table(os, table, fmt);
               }));
  write_file(dir / ("inflation_summary" + ext), render([&](std::ostream& os) {
               write_inflation_summary(os, result.summary, fmt);
             }));
  write_file(dir / ("statistics" + ext), render([&](std::ostream& os) {
               write_stats_report(os, result.stat_lines, fmt);
             }));
  std::cout << "reports written to " << dir.string() << "\n";
  return kExitOk;
}

int cmd_reproduce(const std::string& format_name, const std::string& out_dir) {
  ReproductionResult res = run_reproduction();
  for (const auto& line : res.lines) std::cout << line << "\n";

  if (!out_dir.empty()) {
    OutputFormat fmt = format_from_name(format_name);
    fs::path dir(out_dir);
    fs::create_directories(dir);
    std::string ext = "." + std::string(extension(fmt));
    write_file(dir / ("indicators" + ext), render([&](std::ostream& os) {
                 write_indicator_table(os, res.indicators, fmt);
               }));
    for (const auto& table : res.tables)
      write_file(dir / ("comparison_" + to_string(table.indicator) + ext),
                 render([&](std::ostream& os) {
                   write_comparison_table(os, table, fmt);
                 }));
    write_file(dir / ("inflation_summary" + ext),
               render([&](std::ostream& os) {
                 write_inflation_summary(os, res.summary, fmt);
               }));
    write_file(dir / ("statistics" + ext), render([&](std::ostream& os) {
                 write_stats_report(os, res.stat_lines, fmt);
               }));
  }

  if (!res.ok()) {
    std::cerr << res.failures.size() << " cell(s) out of tolerance:\n";
    for (const auto& f : res.failures)
      std::cerr << "  " << f.where << ": expected " << f.expected << ", got "
                << f.actual << " (tolerance " << f.tolerance << ")\n";
    return kExitReproductionMismatch;
  }
  std::cout << "all published cells reproduced within tolerance\n";
  return kExitOk;
}

int cmd_validate(const CommonArgs& common) {
  auto aliases = load_aliases(common.aliases);
  IngestReport ingest;
  auto records = load_corpus(common.input, aliases, ingest);
  auto [selected, selection] = filter_corpus(records, CorpusFilter{});
  ingest.selection = selection;

  std::cout << ingest.to_json().dump(2) << "\n";
  print_funnel(std::cout, selection);
  if (!ingest.unknown_country_tokens.empty()) {
    std::cout << "unknown country tokens:\n";
    for (const auto& [token, count] : ingest.unknown_country_tokens)
      std::cout << "  " << token << " x" << count << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "bibcount: country-level whole vs whole-normalized counting analysis "
      "of bibliographic corpora"};
  app.require_subcommand(1);

  CommonArgs common;
  AnalysisOptions opts;
  std::string format_name = "tsv";
  std::string out_dir = "reports";
  std::string doc_types = "article,conference-paper,review";
  std::string ties = "ordinal";
  std::string ttest = "pooled";
  bool intl_only = true;

  auto* analyze = app.add_subcommand("analyze", "run the full pipeline");
  analyze->add_option("--input", common.input, "input CSV file")->required();
  analyze->add_option("--aliases", common.aliases,
                      "country alias table CSV (default: built-in)");
  analyze->add_option("--year-min", opts.filter.year_min, "inclusive lower year bound");
  analyze->add_option("--year-max", opts.filter.year_max, "inclusive upper year bound");
  analyze->add_option("--doc-types", doc_types,
                      "comma-separated document types to keep");
  analyze->add_flag("--intl-only,!--no-intl-only", intl_only,
                    "keep internationally collaborated papers only (default on)");
  analyze->add_option("--threshold", opts.threshold,
                      "minimum whole-counting paper credit per country");
  analyze->add_option("--format", format_name, "tsv | markdown | json");
  analyze->add_option("--out-dir", out_dir, "directory for report files");
  analyze->add_option("--spearman-ties", ties, "ordinal | average");
  analyze->add_option("--ttest", ttest, "pooled | welch");

  auto* reproduce = app.add_subcommand(
      "reproduce", "regenerate the published tables from the embedded fixture");
  std::string rep_out_dir;
  std::string rep_format = "tsv";
  reproduce->add_option("--out-dir", rep_out_dir,
                        "also write the regenerated tables here");
  reproduce->add_option("--format", rep_format, "tsv | markdown | json");

  auto* validate =
      app.add_subcommand("validate", "schema check and ingest census only");
  validate->add_option("--input", common.input, "input CSV file")->required();
  validate->add_option("--aliases", common.aliases,
                       "country alias table CSV (default: built-in)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      opts.filter.require_international = intl_only;
      opts.filter.doc_types.clear();
      std::stringstream ss(doc_types);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!trim(tok).empty())
          opts.filter.doc_types.insert(doc_type_from_token(tok));
      opts.spearman_ties = ascii_lower(trim(ties)) == "average"
                               ? stats::TieMode::average_ranks
                               : stats::TieMode::ordinal;
      opts.ttest = ascii_lower(trim(ttest)) == "welch"
                       ? stats::TTestVariant::welch
                       : stats::TTestVariant::pooled;
      return cmd_analyze(common, opts, format_name, out_dir);
    }
    if (reproduce->parsed()) return cmd_reproduce(rep_format, rep_out_dir);
    return cmd_validate(common);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
