#include <gtest/gtest.h>

#include "qhb/bacon_shor.hpp"
#include "qhb/families.hpp"

namespace qhb {
namespace {

TEST(BaconShor, ThreeByThree) {
  const auto c = build_bacon_shor(3, 3);
  EXPECT_EQ(c.n, 9u);
  EXPECT_EQ(c.gauge.size(), 12u);
  EXPECT_EQ(c.s, 4u);
  EXPECT_EQ(c.r, 4u);
  EXPECT_EQ(c.k, 1u);
  EXPECT_EQ(c.gauge[0].to_string(), "XXIIIIIII");
  EXPECT_EQ(c.gauge[6].to_string(), "ZIIZIIIII");
  EXPECT_EQ(c.stabilizer[0].to_string(), "XXIXXIXXI");
  EXPECT_EQ(c.stabilizer[2].to_string(), "ZZZZZZIII");
  EXPECT_TRUE(certify_parameters(c));
}

TEST(BaconShor, SingleQubit) {
  const auto c = build_bacon_shor(1, 1);
  EXPECT_EQ(c.n, 1u);
  EXPECT_TRUE(c.gauge.empty());
  EXPECT_EQ(c.s, 0u);
  EXPECT_EQ(c.r, 0u);
  EXPECT_EQ(c.k, 1u);
  EXPECT_TRUE(certify_parameters(c));
}

TEST(BaconShor, TwoByThree) {
  const auto c = build_bacon_shor(2, 3);
  EXPECT_EQ(c.n, 6u);
  EXPECT_EQ(c.gauge.size(), 7u);
  EXPECT_EQ(c.s, 3u);
  EXPECT_EQ(c.r, 2u);
  EXPECT_EQ(c.k, 1u);
  const auto family = rect_family(2, 3);
  EXPECT_EQ(family, (CodeParams{6, 1, 2, 2}));
  EXPECT_TRUE(certify_parameters(c));
}

TEST(BaconShor, RectangularInstanceCertifies) {
  const auto c = build_bacon_shor(3, 4);
  EXPECT_EQ(c.n, 12u);
  EXPECT_EQ(c.k, 1u);
  EXPECT_EQ(c.r, 6u);
  EXPECT_TRUE(certify_parameters(c));
}

TEST(BaconShor, OneRowLattices) {
  for (std::size_t b = 1; b <= 8; ++b) {
    const auto c = build_bacon_shor(1, b);
    EXPECT_EQ(c.stabilizer.size(), b - 1);
    EXPECT_EQ(c.r, 0u);
    EXPECT_TRUE(certify_parameters(c));
  }
}

TEST(BaconShor, RejectsZeroDimensions) {
  EXPECT_THROW(build_bacon_shor(0, 3), std::invalid_argument);
  EXPECT_THROW(build_bacon_shor(3, 0), std::invalid_argument);
}

TEST(BaconShor, CountsAndCommutationUpToSix) {
  for (std::size_t a = 1; a <= 6; ++a) {
    for (std::size_t b = 1; b <= 6; ++b) {
      const auto c = build_bacon_shor(a, b);
      const std::size_t count = a * (b - 1) + (a - 1) * b;
      ASSERT_EQ(c.gauge.size(), count);
      ASSERT_EQ(count, 2 * a * b - a - b);
      ASSERT_EQ(gf2_rank(c.gauge), count);
      ASSERT_EQ(c.s, a + b - 2);
      ASSERT_EQ(c.k + c.r + c.s, c.n);
      ASSERT_EQ(c.n - c.k - c.r, a + b - 2);
      for (const auto& s : c.stabilizer) {
        for (const auto& g : c.gauge) ASSERT_EQ(symplectic_product(s, g), 0);
      }
      ASSERT_TRUE(certify_parameters(c)) << a << "x" << b;

      const auto t = build_bacon_shor(b, a);
      ASSERT_EQ(std::tie(c.n, c.k, c.r, c.s), std::tie(t.n, t.k, t.r, t.s));
    }
  }
}

TEST(BaconShor, CertifyCatchesCorruptedStabilizer) {
  auto c = build_bacon_shor(3, 3);
  GeneratorSet broken(c.n);
  for (std::size_t i = 0; i + 1 < c.stabilizer.size(); ++i) broken.add(c.stabilizer[i]);
  broken.add(PauliVector::from_string("ZZZIIIIII"));  // not a stabilizer
  c.stabilizer = broken;
  EXPECT_FALSE(certify_parameters(c));
}

TEST(BaconShor, CertifyCatchesMissingStabilizer) {
  auto c = build_bacon_shor(3, 3);
  GeneratorSet partial(c.n);
  for (std::size_t i = 1; i < c.stabilizer.size(); ++i) partial.add(c.stabilizer[i]);
  c.stabilizer = partial;
  EXPECT_FALSE(certify_parameters(c));
}

TEST(BaconShor, CertifyCatchesWrongParameters) {
  auto c = build_bacon_shor(3, 3);
  c.r = 3;
  c.k = 2;
  EXPECT_FALSE(certify_parameters(c));
}

}  // namespace
}  // namespace qhb
