#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qhb/bacon_shor.hpp"
#include "qhb/bounds.hpp"
#include "qhb/proof_chain.hpp"

namespace qhb::cli {

using Json = nlohmann::ordered_json;

/// Exact sides and verdict of one bound, as carried by scan output.
struct BoundSummary {
  BigInt lhs;
  BigInt rhs;
  bool satisfied = false;
  double margin_bits = 0.0;

  static BoundSummary from(const BoundReport& report);
  friend bool operator==(const BoundSummary&, const BoundSummary&) = default;
};

/// One family member with both bound verdicts.
struct ScanRecord {
  std::string family;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::optional<std::uint64_t> t;
  CodeParams params;
  BoundSummary hamming;
  BoundSummary singleton;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

ScanRecord make_record(std::string family, std::uint64_t a, std::uint64_t b,
                       std::optional<std::uint64_t> t, const CodeParams& params);

/// margin_bits rounded to 3 decimals, never negative zero.
double display_margin(double bits);
/// "+0.807" / "-1.000"
std::string format_margin(double bits);

/// Decimal string, shortened to its first 30 digits plus "…(N digits)" when
/// longer.
std::string abbreviate(const BigInt& value);

// Integers travel as decimal strings; margin_bits is rounded to 3 decimals.
Json to_json(const BoundSummary& s);
Json to_json(const ScanRecord& r);
ScanRecord record_from_json(const Json& j);
Json to_json(const BoundReport& report);
Json to_json(const ChainReport& row);

/// Dimensions, generator strings and derived parameters of a code.
Json to_json(const SubsystemCode& code);

std::string csv_header();
std::string to_csv(const ScanRecord& r);

/// Fixed-width table with right-aligned columns. Cells are preformatted.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

void print_scan_table(std::ostream& out, const std::vector<ScanRecord>& records);
void print_scan_json(std::ostream& out, const std::vector<ScanRecord>& records);
void print_scan_csv(std::ostream& out, const std::vector<ScanRecord>& records);

}  // namespace qhb::cli
