#include "qhb/bacon_shor.hpp"

#include <stdexcept>
#include <string>

#include "qhb/families.hpp"

namespace qhb {

SubsystemCode build_bacon_shor(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) {
    throw std::invalid_argument("build_bacon_shor: lattice dimensions must be positive (got " +
                                std::to_string(a) + "x" + std::to_string(b) + ")");
  }
  SubsystemCode c;
  c.a = a;
  c.b = b;
  c.n = a * b;
  c.gauge = GeneratorSet(c.n);
  c.stabilizer = GeneratorSet(c.n);

  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j + 1 < b; ++j) {
      PauliVector g(c.n);
      g.set_letter(site(c, i, j), 'X');
      g.set_letter(site(c, i, j + 1), 'X');
      c.gauge.add(std::move(g));
    }
  }
  for (std::size_t i = 0; i + 1 < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      PauliVector g(c.n);
      g.set_letter(site(c, i, j), 'Z');
      g.set_letter(site(c, i + 1, j), 'Z');
      c.gauge.add(std::move(g));
    }
  }

  for (std::size_t j = 0; j + 1 < b; ++j) {
    PauliVector g(c.n);
    for (std::size_t i = 0; i < a; ++i) {
      g.set_letter(site(c, i, j), 'X');
      g.set_letter(site(c, i, j + 1), 'X');
    }
    c.stabilizer.add(std::move(g));
  }
  for (std::size_t i = 0; i + 1 < a; ++i) {
    PauliVector g(c.n);
    for (std::size_t j = 0; j < b; ++j) {
      g.set_letter(site(c, i, j), 'Z');
      g.set_letter(site(c, i + 1, j), 'Z');
    }
    c.stabilizer.add(std::move(g));
  }

  const std::size_t gauge_rank = gf2_rank(c.gauge);
  c.s = center(c.gauge).size();
  if ((gauge_rank - c.s) % 2 != 0) {
    throw std::logic_error("build_bacon_shor: rank(gauge) - s is odd");
  }
  c.r = (gauge_rank - c.s) / 2;
  c.k = c.n - c.s - c.r;
  return c;
}

bool certify_parameters(const SubsystemCode& c) {
  const CodeParams expected = rect_family(c.a, c.b);
  if (c.n != expected.n || c.k != expected.k || c.r != expected.r) return false;
  if (c.k + c.r + c.s != c.n) return false;

  for (const auto& stab : c.stabilizer) {
    for (const auto& g : c.gauge) {
      if (symplectic_product(stab, g) != 0) return false;
    }
  }

  // The explicit generators and the computed center must span the same space.
  const GeneratorSet computed = center(c.gauge);
  const SpanBasis explicit_span(c.stabilizer);
  const SpanBasis computed_span(computed);
  if (explicit_span.rank() != computed.size()) return false;
  for (const auto& v : computed) {
    if (!explicit_span.contains(v)) return false;
  }
  for (const auto& v : c.stabilizer) {
    if (!computed_span.contains(v)) return false;
  }
  const SpanBasis gauge_span(c.gauge);
  for (const auto& v : c.stabilizer) {
    if (!gauge_span.contains(v)) return false;
  }
  return true;
}

}  // namespace qhb
