#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "xifeq/special_functions.hpp"

namespace xifeq {

// One output record: an ordered list of named fields. All records emitted
// by one command share the same keys, which makes the CSV header and the
// json-lines keys line up.
using field_value = std::variant<double, long long, bool, std::string>;

struct record {
  std::vector<std::pair<std::string, field_value>> fields;

  void add(std::string key, double v) { fields.emplace_back(std::move(key), v); }
  void add(std::string key, long long v) { fields.emplace_back(std::move(key), v); }
  void add(std::string key, bool v) { fields.emplace_back(std::move(key), v); }
  void add(std::string key, std::string v) { fields.emplace_back(std::move(key), std::move(v)); }
  // Complex values serialize as two fields, key_re and key_im.
  void add(std::string key, cplx v) {
    add(key + "_re", v.real());
    add(key + "_im", v.imag());
  }
};

// Doubles are written with 17 significant digits in both encodings, so the
// two formats round-trip to identical values.
void write_csv(std::ostream& os, const std::vector<record>& records);
void write_jsonl(std::ostream& os, const std::vector<record>& records);

// Parses complex literals of the form "re+imi": "2", "-0.5", "1+2i",
// "1.5-3i", "2i", "i", "-i", with exponent notation allowed in both parts.
// Throws std::invalid_argument on malformed input.
cplx parse_complex(std::string_view text);
std::vector<cplx> parse_complex_list(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);
std::pair<double, double> parse_range(std::string_view text);  // "LO:HI"

// Full command-line entry point. Exit codes: 0 all checks passed, 1 a
// numerical check failed or a cell errored, 2 usage error.
int run_cli(int argc, const char* const* argv);

}  // namespace xifeq
