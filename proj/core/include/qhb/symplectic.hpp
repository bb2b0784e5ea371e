#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qhb {

/// Projective n-qubit Pauli operator in binary symplectic form (x | z).
///
/// Bits are packed into 64-bit words with qubit q at bit q % 64 of word
/// q / 64. Phases are not tracked. As a vector in GF(2)^{2n} the coordinate
/// order is x_0 .. x_{n-1}, z_0 .. z_{n-1}; that order defines pivots.
class PauliVector {
 public:
  PauliVector() = default;
  /// Identity on n qubits.
  explicit PauliVector(std::size_t n);

  /// Parses a string over {I, X, Y, Z}, qubit 0 first.
  static PauliVector from_string(std::string_view text);
  /// Single-qubit letter ('X', 'Y' or 'Z') on qubit q of n.
  static PauliVector single(std::size_t n, std::size_t q, char letter);

  std::size_t num_qubits() const { return n_; }

  bool x(std::size_t q) const { return (x_[q / 64] >> (q % 64)) & 1u; }
  bool z(std::size_t q) const { return (z_[q / 64] >> (q % 64)) & 1u; }
  void set(std::size_t q, bool x_bit, bool z_bit);
  /// 'I', 'X', 'Y' or 'Z'.
  char letter(std::size_t q) const;
  void set_letter(std::size_t q, char letter);

  std::span<const std::uint64_t> x_words() const { return x_; }
  std::span<const std::uint64_t> z_words() const { return z_; }

  bool is_identity() const;
  /// Coordinate of the lowest set bit in (x | z) order, or nullopt for identity.
  std::optional<std::size_t> lowest_set_bit() const;
  /// Bit at symplectic coordinate `index` in [0, 2n).
  bool coordinate(std::size_t index) const { return index < n_ ? x(index) : z(index - n_); }

  /// Projective product (componentwise XOR).
  PauliVector& operator*=(const PauliVector& other);
  friend PauliVector operator*(PauliVector lhs, const PauliVector& rhs) { return lhs *= rhs; }

  std::string to_string() const;

  friend bool operator==(const PauliVector&, const PauliVector&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

/// 0 if u and v commute, 1 if they anticommute. Throws on mismatched n.
int symplectic_product(const PauliVector& u, const PauliVector& v);

/// Number of qubits acted on non-trivially.
std::size_t weight(const PauliVector& u);

/// Ordered generators on a common number of qubits.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::size_t n) : n_(n) {}
  GeneratorSet(std::size_t n, std::vector<PauliVector> gens);

  std::size_t num_qubits() const { return n_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const PauliVector& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<PauliVector>& generators() const { return gens_; }
  auto begin() const { return gens_.begin(); }
  auto end() const { return gens_.end(); }

  /// Throws std::invalid_argument if g acts on a different number of qubits.
  void add(PauliVector g);

 private:
  std::size_t n_ = 0;
  std::vector<PauliVector> gens_;
};

/// Row-echelon basis of a subspace of GF(2)^{2n}. Every row's pivot is its
/// lowest set bit and rows are kept sorted by pivot. Mutating scratch is
/// local to each call, so a const basis can be shared across threads.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t n) : n_(n) {}
  explicit SpanBasis(const GeneratorSet& gs);

  /// Adds v if independent; returns whether it was added.
  bool insert(const PauliVector& v);
  bool contains(const PauliVector& v) const;
  /// v reduced against the basis (identity iff v is in the span).
  PauliVector reduce(PauliVector v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t num_qubits() const { return n_; }
  const std::vector<PauliVector>& rows() const { return rows_; }

 private:
  std::size_t n_;
  std::vector<PauliVector> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t gf2_rank(const GeneratorSet& gs);

/// Whether u lies in the group generated by gs, modulo phase.
bool in_span(const PauliVector& u, const GeneratorSet& gs);

/// Basis of the projective center of the group generated by gs: the span
/// elements that commute with every generator. The basis is built from the
/// null space of the symplectic Gram matrix over the independent generators
/// (kept in input order), so its order is deterministic.
GeneratorSet center(const GeneratorSet& gs);

}  // namespace qhb
