#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "boolfun/dense_function.hpp"
#include "boolfun/errors.hpp"
#include "boolfun/hypercube.hpp"
#include "boolfun/rng.hpp"
#include "boolfun/value_set.hpp"

namespace boolfun {
namespace {

// Independent character oracle: sum_{i : y_i = 1} x_i over Z_2, bit by
// bit, as the definition reads.
double char_oracle(GroupPoint y, GroupPoint x, int n) {
  int sum = 0;
  for (int i = 0; i < n; ++i) {
    if ((y >> i) & 1) sum ^= static_cast<int>((x >> i) & 1);
  }
  return sum ? -1.0 : 1.0;
}

// f = x1 + x2 on n = 2, tabulated by hand over the +-1 cube.
DenseFunction two_coordinate_sum() {
  return DenseFunction(2, {2.0, 0.0, 0.0, -2.0});
}

TEST(CharEval, ZeroMaskAndSingleCoordinate) {
  for (GroupPoint x = 0; x < 8; ++x) {
    EXPECT_EQ(char_eval(0, x, 3), 1.0);
  }
  // n=2, y = "11" (both coordinates), x = "10" (coordinate 1 set)
  EXPECT_EQ(char_eval(0b11, 0b01, 2), -1.0);
}

TEST(CharEval, EvenOverlapGivesPlusOne) {
  // printed mask 011 = bits {1,2}; popcount(x AND y) = 2, even
  EXPECT_EQ(char_eval(0b110, 0b110, 3), 1.0);
  EXPECT_EQ(char_eval(0b110, 0b110, 3), char_oracle(0b110, 0b110, 3));
}

TEST(CharEval, MatchesDefinitionOracleExhaustively) {
  for (int n : {1, 2, 3, 4, 5, 6}) {
    const GroupPoint points = domain_size(n);
    for (GroupPoint y = 0; y < points; ++y) {
      for (GroupPoint x = 0; x < points; ++x) {
        ASSERT_EQ(char_eval(y, x, n), char_oracle(y, x, n))
            << "n=" << n << " y=" << y << " x=" << x;
      }
    }
  }
}

TEST(CharEval, SymmetryAndMultiplicativity) {
  for (int n : {2, 5, 8}) {
    const GroupPoint points = domain_size(n);
    for (GroupPoint y = 0; y < points; ++y) {
      for (GroupPoint x = 0; x < points; ++x) {
        ASSERT_EQ(char_sign(y, x), char_sign(x, y));
      }
    }
  }
  // multiplicativity in the second argument: exhaustive triples up to
  // n = 5, sampled at n = 8
  for (int n : {1, 3, 5}) {
    const GroupPoint points = domain_size(n);
    for (GroupPoint y = 0; y < points; ++y) {
      for (GroupPoint x = 0; x < points; ++x) {
        for (GroupPoint z = 0; z < points; ++z) {
          ASSERT_EQ(char_sign(y, x ^ z), char_sign(y, x) * char_sign(y, z));
        }
      }
    }
  }
  Rng rng(7);
  for (int trial = 0; trial < 50000; ++trial) {
    const GroupPoint y = rng.next_below(256);
    const GroupPoint x = rng.next_below(256);
    const GroupPoint z = rng.next_below(256);
    ASSERT_EQ(char_sign(y, x ^ z), char_sign(y, x) * char_sign(y, z));
  }
}

TEST(CharEval, RejectsOutOfRangeMasks) {
  EXPECT_THROW(char_eval(4, 0, 2), std::invalid_argument);
  EXPECT_THROW(char_eval(0, 4, 2), std::invalid_argument);
  EXPECT_THROW(char_eval(0, 0, 0), std::invalid_argument);
}

TEST(GroupPointEncoding, XorGroupLaws) {
  Rng rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const GroupPoint a = rng.next_u64();
    const GroupPoint b = rng.next_u64();
    const GroupPoint c = rng.next_u64();
    ASSERT_EQ((a ^ b) ^ c, a ^ (b ^ c));
    ASSERT_EQ(a ^ a, 0u);
    ASSERT_EQ(a ^ 0u, a);
  }
}

TEST(DenseFunction, ValidatesShapeAndEntries) {
  EXPECT_THROW(DenseFunction(2, {1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(DenseFunction(1, {1.0, std::nan("")}), std::invalid_argument);
  EXPECT_THROW(DenseFunction(0, {}), std::invalid_argument);
  EXPECT_THROW(DenseFunction(27, {}, 26), ResourceLimitError);
  const DenseFunction f = DenseFunction::delta(3);
  EXPECT_EQ(f.size(), 8u);
  EXPECT_EQ(f[0], 1.0);
  EXPECT_EQ(f[5], 0.0);
}

TEST(L2Norm, KnownValues) {
  EXPECT_DOUBLE_EQ(l2_norm(DenseFunction::delta(4)), 1.0);
  EXPECT_DOUBLE_EQ(l2_norm(DenseFunction::constant(3, 1.0)), std::sqrt(8.0));
  EXPECT_DOUBLE_EQ(l2_norm(two_coordinate_sum()), std::sqrt(8.0));
}

TEST(Support, KnownValues) {
  EXPECT_EQ(support(DenseFunction::delta(3), 0.0),
            std::vector<GroupPoint>{0});
  EXPECT_EQ(support(DenseFunction::constant(2, 1.0), 0.0).size(), 4u);
  // x1 + x2 vanishes exactly where the two coordinates differ
  EXPECT_EQ(support(two_coordinate_sum(), 0.0),
            (std::vector<GroupPoint>{0, 3}));
  EXPECT_THROW(support(DenseFunction::delta(1), -1.0), std::invalid_argument);
}

TEST(Entropy, KnownValues) {
  EXPECT_DOUBLE_EQ(entropy(DenseFunction::delta(5)), 0.0);
  for (int n : {1, 3, 6}) {
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(domain_size(n)));
    EXPECT_NEAR(entropy(DenseFunction::constant(n, amplitude)), n, 1e-12);
  }
  const double half = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(entropy(DenseFunction(2, {half, half, 0.0, 0.0})), 1.0, 1e-12);
}

TEST(Entropy, BoundedByLogSupport) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(8));
    std::vector<double> values(domain_size(n));
    for (double& v : values) {
      v = rng.next_below(3) == 0 ? 0.0 : rng.next_uniform(-2.0, 2.0);
    }
    const DenseFunction f(n, values);
    const auto supp = support(f, 0.0);
    if (supp.empty()) continue;
    const double h = entropy(normalized(f));
    ASSERT_LE(h, std::log2(static_cast<double>(supp.size())) + 1e-9);
  }
}

TEST(BooleanDistance, KnownValues) {
  EXPECT_DOUBLE_EQ(boolean_distance(DenseFunction::constant(3, 1.0)), 0.0);
  EXPECT_DOUBLE_EQ(boolean_distance(DenseFunction::constant(2, -1.0)), 0.0);
  EXPECT_DOUBLE_EQ(boolean_distance(DenseFunction::zeros(4)), 1.0);
  // (x1+x2)/sqrt2: f^2 - 1 = x1 x2, which squares to 1 everywhere
  const double root2 = std::sqrt(2.0);
  const DenseFunction f(2, {root2, 0.0, 0.0, -root2});
  EXPECT_NEAR(boolean_distance(f), 1.0, 1e-12);
}

TEST(NonBooleanFraction, KnownValues) {
  const ValueSet boolean = ValueSet::boolean_pair();
  EXPECT_EQ(non_boolean_fraction(DenseFunction::constant(3, -1.0), boolean), 0.0);
  EXPECT_EQ(non_boolean_fraction(two_coordinate_sum(), boolean), 1.0);
  EXPECT_EQ(non_boolean_fraction(DenseFunction::constant(1, 2.0),
                                 ValueSet({-1.0, 1.0, 2.0})),
            0.0);
  // values within the membership radius count as inside
  EXPECT_EQ(non_boolean_fraction(DenseFunction::constant(1, 1.0 + 5e-10), boolean),
            0.0);
  EXPECT_EQ(non_boolean_fraction(DenseFunction::constant(1, 1.0 + 5e-9), boolean),
            1.0);
}

TEST(PointwiseProduct, KnownValues) {
  const DenseFunction f = two_coordinate_sum();
  const DenseFunction ones = DenseFunction::constant(2, 1.0);
  EXPECT_EQ(pointwise_product(f, ones).values(), f.values());

  const DenseFunction delta = DenseFunction::delta(2);
  EXPECT_EQ(pointwise_product(delta, delta).values(), delta.values());

  // (x1+x2)(x1-x2) = x1^2 - x2^2 = 0 on the +-1 cube
  const DenseFunction difference(2, {0.0, -2.0, 2.0, 0.0});
  const DenseFunction product = pointwise_product(f, difference);
  for (double v : product.values()) {
    EXPECT_EQ(v, 0.0);
  }
  EXPECT_THROW(pointwise_product(f, DenseFunction::delta(3)),
               std::invalid_argument);
}

TEST(ValueSet, ValidatesSeparationAndMembership) {
  EXPECT_THROW(ValueSet({}), std::invalid_argument);
  EXPECT_THROW(ValueSet({1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(ValueSet({0.0, 1e-10}), std::invalid_argument);
  const ValueSet set({-1.0, 1.0, 2.5});
  EXPECT_TRUE(set.contains(1.0));
  EXPECT_TRUE(set.contains(2.5 + 1e-10));
  EXPECT_FALSE(set.contains(0.0));
  EXPECT_FALSE(set.contains(1.0 + 1e-8));
}

TEST(DistanceAndFraction, VanishTogetherOnExactFunctions) {
  const ValueSet boolean = ValueSet::boolean_pair();
  const std::vector<DenseFunction> boolean_fns = {
      DenseFunction::constant(2, 1.0),
      DenseFunction(3, {1, 1, 1, -1, 1, -1, -1, -1}),  // majority
      DenseFunction(2, {1, -1, -1, 1}),                // x1 x2
  };
  for (const auto& f : boolean_fns) {
    EXPECT_EQ(boolean_distance(f), 0.0);
    EXPECT_EQ(non_boolean_fraction(f, boolean), 0.0);
  }
  const std::vector<DenseFunction> non_boolean_fns = {
      two_coordinate_sum(),
      DenseFunction::zeros(2),
      DenseFunction::constant(1, 2.0),
  };
  for (const auto& f : non_boolean_fns) {
    EXPECT_GT(boolean_distance(f), 0.0);
    EXPECT_GT(non_boolean_fraction(f, boolean), 0.0);
  }
}

}  // namespace
}  // namespace boolfun
