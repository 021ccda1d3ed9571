#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bibcount/errors.hpp"

namespace bibcount::csv {

// One parsed row. `line` is the 1-based line number of the row's first line.
struct Row {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

inline bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    auto b = static_cast<std::uint8_t>(s[i]);
    std::size_t extra;
    if (b < 0x80) {
      extra = 0;
    } else if ((b >> 5) == 0x6) {
      extra = 1;
    } else if ((b >> 4) == 0xE) {
      extra = 2;
    } else if ((b >> 3) == 0x1E) {
      extra = 3;
    } else {
      return false;
    }
    for (std::size_t k = 1; k <= extra; ++k) {
      if (i + k >= s.size()) return false;
      if ((static_cast<std::uint8_t>(s[i + k]) >> 6) != 0x2) return false;
    }
    i += extra + 1;
  }
  return true;
}

// RFC-4180 style reader: comma delimiter, double-quote quoting with
// doubled-quote escaping, quoted fields may span lines. Input must be
// UTF-8; a leading UTF-8 BOM is stripped, UTF-16/32 BOMs are rejected.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::optional<Row> next() {
    int c = in_.peek();
    if (c == std::char_traits<char>::eof()) return std::nullopt;

    if (at_start_) {
      at_start_ = false;
      check_encoding_preamble();
      if (in_.peek() == std::char_traits<char>::eof()) return std::nullopt;
    }

    Row row;
    row.line = line_;
    std::string field;
    bool quoted = false;
    bool any = false;
    while (true) {
      c = in_.get();
      if (c == std::char_traits<char>::eof()) {
        if (quoted) throw SchemaError("unterminated quoted field at end of input");
        if (!any && row.fields.empty()) return std::nullopt;
        break;
      }
      any = true;
      if (quoted) {
        if (c == '"') {
          if (in_.peek() == '"') {
            in_.get();
            field.push_back('"');
          } else {
            quoted = false;
          }
        } else {
          if (c == '\n') ++line_;
          field.push_back(static_cast<char>(c));
        }
      } else if (c == '"' && field.empty()) {
        quoted = true;
      } else if (c == ',') {
        row.fields.push_back(std::move(field));
        field.clear();
      } else if (c == '\n') {
        ++line_;
        break;
      } else if (c == '\r') {
        if (in_.peek() == '\n') {
          in_.get();
          ++line_;
        }
        break;
      } else {
        field.push_back(static_cast<char>(c));
      }
    }
    row.fields.push_back(std::move(field));
    for (const auto& f : row.fields)
      if (!valid_utf8(f))
        throw SchemaError("input is not valid UTF-8 near line " +
                          std::to_string(row.line));
    return row;
  }

 private:
  void check_encoding_preamble() {
    char head[4] = {0, 0, 0, 0};
    in_.read(head, 4);
    auto got = in_.gcount();
    auto u = [&](int i) { return static_cast<std::uint8_t>(head[i]); };
    if (got >= 2 && ((u(0) == 0xFF && u(1) == 0xFE) ||
                     (u(0) == 0xFE && u(1) == 0xFF)))
      throw SchemaError("input appears to be UTF-16; only UTF-8 is accepted");
    if (got >= 4 && u(0) == 0x00 && u(1) == 0x00 && u(2) == 0xFE && u(3) == 0xFF)
      throw SchemaError("input appears to be UTF-32; only UTF-8 is accepted");
    std::size_t skip = 0;
    if (got >= 3 && u(0) == 0xEF && u(1) == 0xBB && u(2) == 0xBF) skip = 3;
    in_.clear();
    for (auto i = got; i > static_cast<std::streamsize>(skip); --i)
      in_.putback(head[i - 1]);
  }

  std::istream& in_;
  std::size_t line_ = 1;
  bool at_start_ = true;
};

inline std::string escape(std::string_view field) {
  bool need = field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!need) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

inline void write_row(std::ostream& out, std::span<const std::string> fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << escape(fields[i]);
  }
  out << '\n';
}

}  // namespace bibcount::csv
