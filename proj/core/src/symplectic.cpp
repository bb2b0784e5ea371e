#include "qhb/symplectic.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qhb {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

void require_same_n(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": qubit counts differ (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

PauliVector::PauliVector(std::size_t n) : n_(n), x_(words_for(n), 0), z_(words_for(n), 0) {}

PauliVector PauliVector::from_string(std::string_view text) {
  PauliVector p(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) p.set_letter(q, text[q]);
  return p;
}

PauliVector PauliVector::single(std::size_t n, std::size_t q, char letter) {
  if (q >= n) throw std::out_of_range("PauliVector::single: qubit index out of range");
  PauliVector p(n);
  p.set_letter(q, letter);
  return p;
}

void PauliVector::set(std::size_t q, bool x_bit, bool z_bit) {
  const std::uint64_t mask = std::uint64_t{1} << (q % 64);
  x_[q / 64] = x_bit ? (x_[q / 64] | mask) : (x_[q / 64] & ~mask);
  z_[q / 64] = z_bit ? (z_[q / 64] | mask) : (z_[q / 64] & ~mask);
}

char PauliVector::letter(std::size_t q) const {
  static constexpr char kLetters[] = {'I', 'X', 'Z', 'Y'};
  return kLetters[(x(q) ? 1 : 0) | (z(q) ? 2 : 0)];
}

void PauliVector::set_letter(std::size_t q, char letter) {
  switch (letter) {
    case 'I':
    case '_':
      set(q, false, false);
      break;
    case 'X':
      set(q, true, false);
      break;
    case 'Y':
      set(q, true, true);
      break;
    case 'Z':
      set(q, false, true);
      break;
    default:
      throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
  }
}

bool PauliVector::is_identity() const {
  return std::all_of(x_.begin(), x_.end(), [](auto w) { return w == 0; }) &&
         std::all_of(z_.begin(), z_.end(), [](auto w) { return w == 0; });
}

std::optional<std::size_t> PauliVector::lowest_set_bit() const {
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (x_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(x_[i]));
  }
  for (std::size_t i = 0; i < z_.size(); ++i) {
    if (z_[i]) return n_ + i * 64 + static_cast<std::size_t>(std::countr_zero(z_[i]));
  }
  return std::nullopt;
}

PauliVector& PauliVector::operator*=(const PauliVector& other) {
  require_same_n(n_, other.n_, "Pauli product");
  for (std::size_t i = 0; i < x_.size(); ++i) {
    x_[i] ^= other.x_[i];
    z_[i] ^= other.z_[i];
  }
  return *this;
}

std::string PauliVector::to_string() const {
  std::string out(n_, 'I');
  for (std::size_t q = 0; q < n_; ++q) out[q] = letter(q);
  return out;
}

int symplectic_product(const PauliVector& u, const PauliVector& v) {
  require_same_n(u.num_qubits(), v.num_qubits(), "symplectic_product");
  const auto ux = u.x_words(), uz = u.z_words(), vx = v.x_words(), vz = v.z_words();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < ux.size(); ++i) acc ^= (ux[i] & vz[i]) ^ (uz[i] & vx[i]);
  return std::popcount(acc) & 1;
}

std::size_t weight(const PauliVector& u) {
  const auto ux = u.x_words(), uz = u.z_words();
  std::size_t w = 0;
  for (std::size_t i = 0; i < ux.size(); ++i) w += static_cast<std::size_t>(std::popcount(ux[i] | uz[i]));
  return w;
}

GeneratorSet::GeneratorSet(std::size_t n, std::vector<PauliVector> gens) : n_(n) {
  gens_.reserve(gens.size());
  for (auto& g : gens) add(std::move(g));
}

void GeneratorSet::add(PauliVector g) {
  require_same_n(n_, g.num_qubits(), "GeneratorSet::add");
  gens_.push_back(std::move(g));
}

SpanBasis::SpanBasis(const GeneratorSet& gs) : n_(gs.num_qubits()) {
  for (const auto& g : gs) insert(g);
}

PauliVector SpanBasis::reduce(PauliVector v) const {
  require_same_n(n_, v.num_qubits(), "SpanBasis::reduce");
  // A row never has bits below its pivot, so sweeping in ascending pivot
  // order clears every pivot coordinate of v.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v.coordinate(pivots_[i])) v *= rows_[i];
  }
  return v;
}

bool SpanBasis::insert(const PauliVector& v) {
  PauliVector reduced = reduce(v);
  const auto pivot = reduced.lowest_set_bit();
  if (!pivot) return false;
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), *pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, *pivot);
  rows_.insert(rows_.begin() + pos, std::move(reduced));
  return true;
}

bool SpanBasis::contains(const PauliVector& v) const { return reduce(v).is_identity(); }

std::size_t gf2_rank(const GeneratorSet& gs) { return SpanBasis(gs).rank(); }

bool in_span(const PauliVector& u, const GeneratorSet& gs) {
  require_same_n(u.num_qubits(), gs.num_qubits(), "in_span");
  return SpanBasis(gs).contains(u);
}

namespace {

using BitRow = std::vector<std::uint64_t>;

bool get_bit(const BitRow& row, std::size_t i) { return (row[i / 64] >> (i % 64)) & 1u; }
void flip_bit(BitRow& row, std::size_t i) { row[i / 64] ^= std::uint64_t{1} << (i % 64); }

// Basis of { c : M c = 0 } for a square GF(2) matrix M given by rows.
std::vector<BitRow> null_space(std::vector<BitRow> rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && !get_bit(rows[sel], col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && get_bit(rows[i], col)) {
        for (std::size_t w = 0; w < rows[i].size(); ++w) rows[i][w] ^= rows[rank][w];
      }
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<BitRow> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    BitRow v(words_for(cols), 0);
    flip_bit(v, free);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      if (get_bit(rows[r], free)) flip_bit(v, pivot_cols[r]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

GeneratorSet center(const GeneratorSet& gs) {
  const std::size_t n = gs.num_qubits();
  std::vector<PauliVector> independent;
  SpanBasis basis(n);
  for (const auto& g : gs) {
    if (basis.insert(g)) independent.push_back(g);
  }

  const std::size_t m = independent.size();
  std::vector<BitRow> gram(m, BitRow(words_for(m), 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (symplectic_product(independent[i], independent[j])) {
        flip_bit(gram[i], j);
        flip_bit(gram[j], i);
      }
    }
  }

  GeneratorSet out(n);
  for (const auto& coeffs : null_space(std::move(gram), m)) {
    PauliVector v(n);
    for (std::size_t i = 0; i < m; ++i) {
      if (get_bit(coeffs, i)) v *= independent[i];
    }
    out.add(std::move(v));
  }
  return out;
}

}  // namespace qhb
