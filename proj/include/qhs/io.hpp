#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qhs/enumerate.hpp"

namespace qhs {

// Machine-readable row; round-trips losslessly through both formats. Values
// are 64-bit here: enumeration output is small by construction (the library
// itself stays exact).
struct OutputRow {
  int n = 0;
  std::vector<long long> v;  // ascending
  long long d = 0;
  long long mu = 0;
  std::vector<std::string> kappa_types;
  std::vector<std::pair<long long, long long>> charpoly;  // (m, mult), ascending m
  bool reduced = true;
  bool v_lt_half_d = true;

  friend bool operator==(const OutputRow&, const OutputRow&) = default;
};

OutputRow to_output_row(const EnumerationRecord& rec);

void write_jsonl(const std::vector<OutputRow>& rows, std::ostream& out);
void write_csv(const std::vector<OutputRow>& rows, std::ostream& out);

std::vector<OutputRow> read_jsonl(std::istream& in);
std::vector<OutputRow> read_csv(std::istream& in);

}  // namespace qhs
