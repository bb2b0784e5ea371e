#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qhb::cli {

namespace {

constexpr std::size_t kMaxDigits = 30;

// Display width in code points, so the ellipsis counts as one column.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

BigInt parse_bigint(const Json& j) {
  const auto text = j.get<std::string>();
  BigInt out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: \"" + text + "\"");
  }
  return out;
}

BoundSummary summary_from_json(const Json& j) {
  BoundSummary s;
  s.lhs = parse_bigint(j.at("lhs"));
  s.rhs = parse_bigint(j.at("rhs"));
  s.satisfied = j.at("satisfied").get<bool>();
  s.margin_bits = j.at("margin_bits").get<double>();
  return s;
}

}  // namespace

BoundSummary BoundSummary::from(const BoundReport& report) {
  return BoundSummary{report.lhs, report.rhs, report.satisfied, report.margin_bits};
}

ScanRecord make_record(std::string family, std::uint64_t a, std::uint64_t b,
                       std::optional<std::uint64_t> t, const CodeParams& params) {
  ScanRecord r;
  r.family = std::move(family);
  r.a = a;
  r.b = b;
  r.t = t;
  r.params = params;
  r.hamming = BoundSummary::from(hamming_check(params));
  r.singleton = BoundSummary::from(singleton_check(params));
  return r;
}

double display_margin(double bits) {
  double rounded = std::round(bits * 1000.0) / 1000.0;
  return rounded == 0.0 ? 0.0 : rounded;
}

std::string format_margin(double bits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.3f", display_margin(bits));
  return buf;
}

std::string abbreviate(const BigInt& value) {
  std::string digits = value.get_str(10);
  const bool negative = !digits.empty() && digits.front() == '-';
  const std::size_t count = digits.size() - (negative ? 1 : 0);
  if (count <= kMaxDigits) return digits;
  return digits.substr(0, kMaxDigits + (negative ? 1 : 0)) + "…(" + std::to_string(count) +
         " digits)";
}

Json to_json(const BoundSummary& s) {
  Json j;
  j["lhs"] = s.lhs.get_str(10);
  j["rhs"] = s.rhs.get_str(10);
  j["satisfied"] = s.satisfied;
  j["margin_bits"] = display_margin(s.margin_bits);
  return j;
}

Json to_json(const ScanRecord& r) {
  Json j;
  j["family"] = r.family;
  j["a"] = r.a;
  j["b"] = r.b;
  j["t"] = r.t ? Json(*r.t) : Json(nullptr);
  j["n"] = r.params.n;
  j["k"] = r.params.k;
  j["r"] = r.params.r;
  j["d"] = r.params.d;
  j["hamming"] = to_json(r.hamming);
  j["singleton"] = to_json(r.singleton);
  return j;
}

ScanRecord record_from_json(const Json& j) {
  ScanRecord r;
  r.family = j.at("family").get<std::string>();
  r.a = j.at("a").get<std::uint64_t>();
  r.b = j.at("b").get<std::uint64_t>();
  if (!j.at("t").is_null()) r.t = j.at("t").get<std::uint64_t>();
  r.params = CodeParams{j.at("n").get<std::uint64_t>(), j.at("k").get<std::uint64_t>(),
                        j.at("r").get<std::uint64_t>(), j.at("d").get<std::uint64_t>()};
  r.hamming = summary_from_json(j.at("hamming"));
  r.singleton = summary_from_json(j.at("singleton"));
  return r;
}

Json to_json(const BoundReport& report) {
  Json j = to_json(BoundSummary::from(report));
  j["note"] = report.note;
  return j;
}

Json to_json(const ChainReport& row) {
  Json j;
  j["t"] = row.t;
  j["quadratic_ok"] = row.quadratic_ok;
  j["power_ok"] = row.power_ok;
  j["binomial_ok"] = row.binomial_ok;
  j["suffices_ok"] = row.suffices_ok;
  j["full_violation_ok"] = row.full_violation_ok;
  j["implications_ok"] = row.implications_hold();
  j["margin_bits"] = display_margin(row.margin_bits);
  j["hamming_lhs"] = row.hamming_lhs.get_str(10);
  j["hamming_rhs"] = row.hamming_rhs.get_str(10);
  return j;
}

Json to_json(const SubsystemCode& code) {
  Json j;
  j["a"] = code.a;
  j["b"] = code.b;
  j["n"] = code.n;
  j["k"] = code.k;
  j["r"] = code.r;
  j["s"] = code.s;
  Json gauge = Json::array();
  for (const auto& g : code.gauge) gauge.push_back(g.to_string());
  Json stabilizer = Json::array();
  for (const auto& g : code.stabilizer) stabilizer.push_back(g.to_string());
  j["gauge"] = std::move(gauge);
  j["stabilizer"] = std::move(stabilizer);
  return j;
}

std::string csv_header() {
  return "family,a,b,t,n,k,r,d,hamming_lhs,hamming_rhs,hamming_satisfied,hamming_margin_bits,"
         "singleton_lhs,singleton_rhs,singleton_satisfied,singleton_margin_bits";
}

std::string to_csv(const ScanRecord& r) {
  auto summary = [](const BoundSummary& s) {
    char margin[64];
    std::snprintf(margin, sizeof margin, "%.3f", display_margin(s.margin_bits));
    return s.lhs.get_str(10) + "," + s.rhs.get_str(10) + "," + (s.satisfied ? "true" : "false") +
           "," + margin;
  };
  return r.family + "," + std::to_string(r.a) + "," + std::to_string(r.b) + "," +
         (r.t ? std::to_string(*r.t) : std::string()) + "," + std::to_string(r.params.n) + "," +
         std::to_string(r.params.k) + "," + std::to_string(r.params.r) + "," +
         std::to_string(r.params.d) + "," + summary(r.hamming) + "," + summary(r.singleton);
}

void Table::print(std::ostream& out) const {
  std::vector<std::size_t> widths(header_.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
      widths[i] = std::max(widths[i], display_width(row[i]));
    }
  };
  widen(header_);
  for (const auto& row : rows_) widen(row);

  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line.append(widths[i] - display_width(row[i]), ' ');
      line += row[i];
    }
    out << line << '\n';
  };
  emit(header_);
  for (const auto& row : rows_) emit(row);
}

void print_scan_table(std::ostream& out, const std::vector<ScanRecord>& records) {
  Table table({"family", "a", "b", "t", "n", "k", "r", "d", "hamming_lhs", "hamming_rhs", "hamming",
               "margin_bits", "singleton_lhs", "singleton_rhs", "singleton"});
  for (const auto& r : records) {
    table.add_row({r.family, std::to_string(r.a), std::to_string(r.b),
                   r.t ? std::to_string(*r.t) : "-", std::to_string(r.params.n),
                   std::to_string(r.params.k), std::to_string(r.params.r),
                   std::to_string(r.params.d), abbreviate(r.hamming.lhs), abbreviate(r.hamming.rhs),
                   r.hamming.satisfied ? "holds" : "VIOLATED", format_margin(r.hamming.margin_bits),
                   abbreviate(r.singleton.lhs), abbreviate(r.singleton.rhs),
                   r.singleton.satisfied ? "holds" : "VIOLATED"});
  }
  table.print(out);
  const auto violated = std::count_if(records.begin(), records.end(),
                                      [](const ScanRecord& r) { return !r.hamming.satisfied; });
  out << records.size() << " record(s), " << violated << " violating the Hamming bound\n";
}

void print_scan_json(std::ostream& out, const std::vector<ScanRecord>& records) {
  out << "[";
  for (std::size_t i = 0; i < records.size(); ++i) {
    out << (i ? ",\n  " : "\n  ") << to_json(records[i]).dump();
  }
  out << (records.empty() ? "]\n" : "\n]\n");
}

void print_scan_csv(std::ostream& out, const std::vector<ScanRecord>& records) {
  out << csv_header() << '\n';
  for (const auto& r : records) out << to_csv(r) << '\n';
}

}  // namespace qhb::cli
