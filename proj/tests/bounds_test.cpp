#include <gtest/gtest.h>

#include "qhb/bounds.hpp"
#include "qhb/families.hpp"

namespace qhb {
namespace {

TEST(HammingCheck, FirstViolatingInstance) {
  const auto rep = hamming_check({9, 1, 4, 3});
  EXPECT_EQ(rep.lhs, 16);
  EXPECT_EQ(rep.rhs, 28);
  EXPECT_FALSE(rep.satisfied);
  EXPECT_NEAR(rep.margin_bits, 0.807, 0.001);
  EXPECT_EQ(rep.bound, Bound::Hamming);
}

TEST(HammingCheck, RectangularInstance) {
  const auto rep = hamming_check({12, 1, 6, 3});
  EXPECT_EQ(rep.lhs, 32);
  EXPECT_EQ(rep.rhs, 37);
  EXPECT_FALSE(rep.satisfied);
}

TEST(HammingCheck, EqualityCountsAsSatisfied) {
  const auto rep = hamming_check({5, 1, 0, 3});
  EXPECT_EQ(rep.lhs, 16);
  EXPECT_EQ(rep.rhs, 16);
  EXPECT_TRUE(rep.satisfied);
  EXPECT_EQ(rep.margin_bits, 0.0);
}

TEST(HammingCheck, DistanceOneIsTrivialAndNoted) {
  const auto rep = hamming_check({1, 1, 0, 1});
  EXPECT_EQ(rep.lhs, 1);
  EXPECT_EQ(rep.rhs, 1);
  EXPECT_TRUE(rep.satisfied);
  EXPECT_NE(rep.note.find("t = 0"), std::string::npos);
}

TEST(HammingCheck, ZeroLogicalQubitsNoted) {
  const auto rep = hamming_check({5, 0, 0, 3});
  EXPECT_EQ(rep.lhs, 32);
  EXPECT_NE(rep.note.find("k = 0"), std::string::npos);
}

TEST(HammingCheck, RejectsMalformedParameters) {
  EXPECT_THROW(hamming_check({0, 0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(hamming_check({5, 1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(hamming_check({5, 1, 0, 6}), std::invalid_argument);
  EXPECT_THROW(hamming_check({5, 3, 3, 1}), std::invalid_argument);
  try {
    hamming_check({5, 3, 3, 1});
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("k + r <= n"), std::string::npos);
  }
}

TEST(HammingCheck, InvariantUnderSwappingKAndR) {
  for (std::uint64_t n = 1; n <= 20; ++n) {
    for (std::uint64_t d = 1; d <= n; ++d) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        for (std::uint64_t r = 0; k + r <= n; ++r) {
          const auto a = hamming_check({n, k, r, d});
          const auto b = hamming_check({n, r, k, d});
          ASSERT_EQ(a.satisfied, b.satisfied);
          ASSERT_EQ(a.lhs, b.lhs);
          ASSERT_EQ(a.rhs, b.rhs);
        }
      }
    }
  }
}

TEST(HammingCheck, GrowingDistanceNeverRestoresTheBound) {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    for (std::uint64_t k = 0; k <= 2 && k <= n; ++k) {
      for (std::uint64_t r = 0; k + r <= n; r += 3) {
        bool violated = false;
        for (std::uint64_t d = 1; d <= n; ++d) {
          const auto rep = hamming_check({n, k, r, d});
          if (violated) ASSERT_FALSE(rep.satisfied) << to_string(rep.params);
          violated = violated || !rep.satisfied;
        }
      }
    }
  }
}

TEST(HammingCheck, SatisfiedIffLhsAtLeastRhsAndMarginSignAgrees) {
  for (std::uint64_t n = 1; n <= 25; ++n) {
    for (std::uint64_t d = 1; d <= n; ++d) {
      for (std::uint64_t s = 0; s <= n; ++s) {
        const auto rep = hamming_check({n, n - s, 0, d});
        ASSERT_EQ(rep.satisfied, rep.lhs >= rep.rhs);
        ASSERT_EQ(rep.margin_bits > 0, rep.rhs > rep.lhs);
        ASSERT_EQ(rep.margin_bits == 0, rep.rhs == rep.lhs);
      }
    }
  }
}

TEST(HammingCheck, OddSquareFamilyViolatesForT1To200) {
  for (std::uint64_t t = 1; t <= 200; ++t) {
    ASSERT_FALSE(hamming_check(odd_family(t)).satisfied) << "t=" << t;
  }
}

TEST(SingletonCheck, Examples) {
  auto rep = singleton_check({9, 1, 4, 3});
  EXPECT_EQ(rep.lhs, 5);
  EXPECT_EQ(rep.rhs, 5);
  EXPECT_TRUE(rep.satisfied);
  EXPECT_EQ(rep.margin_bits, 0.0);

  rep = singleton_check({12, 1, 6, 3});
  EXPECT_EQ(rep.lhs, 8);
  EXPECT_EQ(rep.rhs, 7);
  EXPECT_TRUE(rep.satisfied);
  EXPECT_EQ(rep.margin_bits, -1.0);

  for (std::uint64_t n = 1; n <= 10; ++n) {
    rep = singleton_check({n, n, 0, 1});
    EXPECT_EQ(rep.lhs, BigInt(n));
    EXPECT_EQ(rep.rhs, BigInt(n));
    EXPECT_TRUE(rep.satisfied);
  }
}

TEST(SingletonCheck, NegativeLhsIsReportedAndViolates) {
  const auto rep = singleton_check({5, 0, 0, 5});
  EXPECT_EQ(rep.lhs, -3);
  EXPECT_EQ(rep.rhs, 0);
  EXPECT_FALSE(rep.satisfied);
  EXPECT_EQ(rep.margin_bits, 3.0);
  EXPECT_NE(rep.note.find("negative"), std::string::npos);
}

TEST(SingletonCheck, RectFamilyHoldsWithEqualityOnlyOnSquares) {
  for (std::uint64_t a = 1; a <= 50; ++a) {
    for (std::uint64_t b = 1; b <= 50; ++b) {
      const auto rep = singleton_check(rect_family(a, b));
      ASSERT_TRUE(rep.satisfied);
      ASSERT_EQ(rep.lhs == rep.rhs, a == b);
    }
  }
}

TEST(CodeParams, ToString) { EXPECT_EQ(to_string(CodeParams{12, 1, 6, 3}), "[[12,1,6,3]]"); }

}  // namespace
}  // namespace qhb
