#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qhb/bacon_shor.hpp"
#include "qhb/symplectic.hpp"

namespace qhb {
namespace {

PauliVector P(const char* s) { return PauliVector::from_string(s); }

PauliVector random_pauli(std::mt19937_64& rng, std::size_t n, double density = 0.5) {
  std::bernoulli_distribution on(density);
  std::uniform_int_distribution<int> letter(0, 2);
  PauliVector p(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (on(rng)) p.set_letter(q, "XZY"[letter(rng)]);
  }
  return p;
}

GeneratorSet random_set(std::mt19937_64& rng, std::size_t n, std::size_t count) {
  GeneratorSet gs(n);
  for (std::size_t i = 0; i < count; ++i) gs.add(random_pauli(rng, n, 0.3));
  return gs;
}

std::vector<oracle::SmallPauli> small(const GeneratorSet& gs) {
  std::vector<oracle::SmallPauli> out;
  for (const auto& g : gs) out.push_back(oracle::parse(g.to_string()));
  return out;
}

TEST(PauliVector, TextRoundTripAndLetters) {
  const auto p = P("IXYZ");
  EXPECT_EQ(p.num_qubits(), 4u);
  EXPECT_EQ(p.to_string(), "IXYZ");
  EXPECT_TRUE(p.x(1) && !p.z(1));
  EXPECT_TRUE(p.x(2) && p.z(2));
  EXPECT_TRUE(!p.x(3) && p.z(3));
  EXPECT_THROW(P("XQ"), std::invalid_argument);
  EXPECT_EQ(PauliVector::single(3, 1, 'Y').to_string(), "IYI");
}

TEST(PauliVector, WideOperatorsCrossWordBoundaries) {
  PauliVector p(130);
  p.set_letter(0, 'X');
  p.set_letter(64, 'Z');
  p.set_letter(129, 'Y');
  EXPECT_EQ(weight(p), 3u);
  EXPECT_EQ(p.lowest_set_bit(), 0u);
  PauliVector q(130);
  q.set_letter(64, 'Z');
  EXPECT_EQ(q.lowest_set_bit(), 130u + 64u);
  EXPECT_EQ(PauliVector::from_string(p.to_string()), p);
}

TEST(PauliVector, ProductIsProjective) {
  EXPECT_EQ((P("XZI") * P("ZZX")).to_string(), "YIX");
  EXPECT_TRUE((P("XYZ") * P("XYZ")).is_identity());
  EXPECT_THROW(P("XX") * P("XXX"), std::invalid_argument);
}

TEST(SymplecticProduct, Examples) {
  EXPECT_EQ(symplectic_product(P("X"), P("Z")), 1);
  EXPECT_EQ(symplectic_product(P("XI"), P("IX")), 0);
  EXPECT_EQ(symplectic_product(P("XX"), P("ZZ")), 0);
  EXPECT_EQ(symplectic_product(P("Y"), P("Y")), 0);
  EXPECT_EQ(symplectic_product(P("Y"), P("X")), 1);
  EXPECT_THROW(symplectic_product(P("X"), P("XX")), std::invalid_argument);
}

TEST(SymplecticProduct, SymmetricBilinearAndMatchesOracle) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + rng() % 20;
    const auto u = random_pauli(rng, n), v = random_pauli(rng, n), w = random_pauli(rng, n);
    ASSERT_EQ(symplectic_product(u, v), symplectic_product(v, u));
    ASSERT_EQ(symplectic_product(u * v, w), symplectic_product(u, w) ^ symplectic_product(v, w));
    ASSERT_EQ(symplectic_product(u, v) == 0,
              oracle::commute(oracle::parse(u.to_string()), oracle::parse(v.to_string()), n));
  }
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight(PauliVector(5)), 0u);
  EXPECT_EQ(weight(P("IYI")), 1u);
  EXPECT_EQ(weight(P("XX")), 2u);
}

TEST(GeneratorSet, RejectsMismatchedQubitCount) {
  GeneratorSet gs(3);
  gs.add(P("XXI"));
  EXPECT_THROW(gs.add(P("XX")), std::invalid_argument);
}

TEST(Rank, Examples) {
  EXPECT_EQ(gf2_rank(GeneratorSet(4)), 0u);
  EXPECT_EQ(gf2_rank(GeneratorSet(3, {P("XXI"), P("IZZ"), P("XXI")})), 2u);
  EXPECT_EQ(gf2_rank(GeneratorSet(3, {P("XXI"), P("IXX"), P("XIX")})), 2u);
  EXPECT_EQ(gf2_rank(build_bacon_shor(3, 3).gauge), 12u);
}

TEST(Rank, MatchesSpanEnumeration) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const auto gs = random_set(rng, n, rng() % 12);
    const auto group = oracle::span(small(gs));
    ASSERT_EQ(std::size_t{1} << gf2_rank(gs), group.size());
  }
}

TEST(InSpan, Examples) {
  const auto gauge = build_bacon_shor(3, 3).gauge;
  EXPECT_TRUE(in_span(PauliVector(9), gauge));
  for (const auto& g : gauge) EXPECT_TRUE(in_span(g, gauge));
  EXPECT_FALSE(in_span(PauliVector::single(9, 0, 'X'), gauge));
  EXPECT_THROW(in_span(P("X"), gauge), std::invalid_argument);
}

TEST(InSpan, MatchesOracleAndIgnoresOrder) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 5;
    const auto gs = random_set(rng, n, rng() % 8);
    auto shuffled = gs.generators();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const GeneratorSet reordered(n, shuffled);
    const auto group = oracle::span(small(gs));
    for (int j = 0; j < 20; ++j) {
      const auto u = random_pauli(rng, n);
      const bool member = in_span(u, gs);
      ASSERT_EQ(member, group.count(oracle::parse(u.to_string()).key()) == 1);
      ASSERT_EQ(member, in_span(u, reordered));
    }
  }
}

TEST(Center, Examples) {
  EXPECT_TRUE(center(GeneratorSet(1, {P("X"), P("Z")})).empty());
  const auto abelian = center(GeneratorSet(1, {P("X")}));
  ASSERT_EQ(abelian.size(), 1u);
  EXPECT_EQ(abelian[0].to_string(), "X");
  EXPECT_EQ(center(build_bacon_shor(3, 3).gauge).size(), 4u);
  EXPECT_TRUE(center(GeneratorSet(2)).empty());
}

TEST(Center, PropertiesAgainstSpanEnumeration) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 5;
    const auto gs = random_set(rng, n, rng() % 9);
    const auto c = center(gs);
    // Every center vector commutes with every generator and lies in the span.
    for (const auto& v : c) {
      ASSERT_TRUE(in_span(v, gs));
      for (const auto& g : gs) ASSERT_EQ(symplectic_product(v, g), 0);
    }
    ASSERT_EQ(gf2_rank(c), c.size());
    ASSERT_EQ((gf2_rank(gs) - c.size()) % 2, 0u);

    const auto gens = small(gs);
    std::size_t commuting = 0;
    for (const auto key : oracle::span(gens)) {
      const oracle::SmallPauli p{static_cast<std::uint32_t>(key >> 32), static_cast<std::uint32_t>(key)};
      if (std::all_of(gens.begin(), gens.end(), [&](const auto& g) { return oracle::commute(p, g, n); })) {
        ++commuting;
      }
    }
    ASSERT_EQ(std::size_t{1} << c.size(), commuting);
  }
}

TEST(Center, BaconShor3x3MatchesBruteForceCount) {
  const auto gauge = build_bacon_shor(3, 3).gauge;
  const auto gens = small(gauge);
  std::size_t commuting = 0;
  for (const auto key : oracle::span(gens)) {
    const oracle::SmallPauli p{static_cast<std::uint32_t>(key >> 32), static_cast<std::uint32_t>(key)};
    if (std::all_of(gens.begin(), gens.end(), [&](const auto& g) { return oracle::commute(p, g, 9); })) {
      ++commuting;
    }
  }
  EXPECT_EQ(commuting, 16u);  // 2^4
}

}  // namespace
}  // namespace qhb
