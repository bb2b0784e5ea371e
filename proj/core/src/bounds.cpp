#include "qhb/bounds.hpp"

#include <stdexcept>

namespace qhb {

void validate(const CodeParams& p) {
  if (p.n < 1) throw std::invalid_argument("invalid parameters: n >= 1 violated (n=0)");
  if (p.d < 1) {
    throw std::invalid_argument("invalid parameters " + to_string(p) + ": d >= 1 violated");
  }
  if (p.d > p.n) {
    throw std::invalid_argument("invalid parameters " + to_string(p) + ": d <= n violated");
  }
  if (p.k > p.n || p.r > p.n - p.k) {
    throw std::invalid_argument("invalid parameters " + to_string(p) + ": k + r <= n violated");
  }
}

std::string to_string(const CodeParams& p) {
  return "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.r) +
         "," + std::to_string(p.d) + "]]";
}

std::string_view to_string(Bound b) {
  switch (b) {
    case Bound::Hamming:
      return "hamming";
    case Bound::Singleton:
      return "singleton";
  }
  return "unknown";
}

namespace {

void append_note(std::string& note, std::string_view text) {
  if (!note.empty()) note += "; ";
  note += text;
}

}  // namespace

BoundReport hamming_check(const CodeParams& p) {
  validate(p);
  BoundReport report;
  report.params = p;
  report.bound = Bound::Hamming;
  const std::uint64_t t = (p.d - 1) / 2;
  report.lhs = power(2, p.n - p.k - p.r);
  report.rhs = sphere_volume(p.n, t);
  report.satisfied = report.lhs >= report.rhs;
  report.margin_bits = log2_margin(report.lhs, report.rhs);
  if (t == 0) append_note(report.note, "t = 0: sphere volume is 1, bound holds trivially");
  if (p.k == 0) append_note(report.note, "k = 0: code encodes no logical qubits");
  return report;
}

BoundReport singleton_check(const CodeParams& p) {
  validate(p);
  BoundReport report;
  report.params = p;
  report.bound = Bound::Singleton;
  report.lhs = BigInt(p.n) - 2 * (BigInt(p.d) - 1);
  report.rhs = BigInt(p.k) + BigInt(p.r);
  report.satisfied = report.lhs >= report.rhs;
  const BigInt gap = report.rhs - report.lhs;
  report.margin_bits = gap.get_d();
  if (report.lhs < 0) append_note(report.note, "n - 2(d-1) is negative");
  if (p.k == 0) append_note(report.note, "k = 0: code encodes no logical qubits");
  return report;
}

}  // namespace qhb
