#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "nihopp/field.hpp"
#include "oracles.hpp"

using namespace nihopp;

namespace {

const Field& gf16() {
  static const Field f = Field::make(4);
  return f;
}

Element E(std::uint32_t v) { return Element(v); }

}  // namespace

TEST(MakeField, SmallDegreeExamples) {
  EXPECT_EQ(Field::make(2).modulus(), 0b111u);
  EXPECT_EQ(Field::make(4).modulus(), 0b10011u);
  EXPECT_EQ(Field::make(4).generator(), E(0x2));
}

// Frozen from a trial-division scan (tests/support/oracles.hpp).
TEST(MakeField, ModuliMatchTrialDivisionScan) {
  const std::uint64_t expected[] = {0x7,   0xb,    0x13,   0x25,   0x43,    0x83,    0x11b,   0x203,
                                    0x409, 0x805,  0x1009, 0x201b, 0x4021,  0x8003,  0x1002b};
  for (int n = 2; n <= 16; ++n) {
    EXPECT_EQ(Field::make(n).modulus(), expected[n - 2]) << "n=" << n;
    EXPECT_EQ(oracle::smallest_irreducible(n), expected[n - 2]) << "n=" << n;
  }
}

TEST(MakeField, LargeDegreesHaveIrreducibleModulusAndPrimitiveGenerator) {
  for (int n : {17, 20, 24, 31, 32}) {
    const Field F = Field::make(n);
    EXPECT_EQ(gf2::degree(F.modulus()), n);
    EXPECT_TRUE(gf2::is_irreducible(F.modulus()));
    EXPECT_FALSE(F.has_tables());
    EXPECT_EQ(F.multiplicative_order(F.generator()), F.order()) << "n=" << n;
  }
  // Rabin agrees with trial division on every degree-8 polynomial.
  for (std::uint64_t p = 0x100; p < 0x200; ++p) {
    EXPECT_EQ(gf2::is_irreducible(p), oracle::irreducible_by_trial_division(p)) << std::hex << p;
  }
}

TEST(MakeField, GeneratorIsSmallestPrimitive) {
  for (int n = 2; n <= 12; ++n) {
    const Field F = Field::make(n);
    EXPECT_EQ(F.multiplicative_order(F.generator()), F.order());
    for (std::uint32_t g = 2; g < F.generator().bits; ++g) EXPECT_LT(F.multiplicative_order(E(g)), F.order());
  }
}

TEST(MakeField, RejectsOutOfRangeDegree) {
  EXPECT_THROW(Field::make(1), std::out_of_range);
  EXPECT_THROW(Field::make(33), std::out_of_range);
}

TEST(MakeField, LogTablesAreMutuallyInverse) {
  for (int n : {2, 5, 8, 16}) {
    const Field F = Field::make(n);
    ASSERT_TRUE(F.has_tables());
    const auto& log = *F.log_table();
    const auto& alog = *F.antilog_table();
    for (std::uint64_t v = 1; v < F.size(); ++v) ASSERT_EQ(alog[log[v]], v);
    for (std::uint64_t e = 0; e < F.order(); ++e) ASSERT_EQ(log[alog[e]], e);
  }
}

TEST(Mul, Examples) {
  const Field& F = gf16();
  EXPECT_EQ(F.mul(E(0x2), E(0x9)), E(0x1));
  for (std::uint32_t a = 0; a < 16; ++a) {
    EXPECT_EQ(F.mul(E(a), kZero), kZero);
    EXPECT_EQ(F.mul(E(a), kOne), E(a));
  }
}

TEST(Mul, AgreesWithPolynomialOracle) {
  for (int n : {3, 4, 6}) {
    const Field F = Field::make(n);
    for (std::uint32_t a = 0; a < F.size(); ++a) {
      for (std::uint32_t b = 0; b < F.size(); ++b) {
        ASSERT_EQ(F.mul(E(a), E(b)).bits, oracle::mulmod(a, b, F.modulus()));
      }
    }
  }
}

TEST(Mul, TableAndCarryLessAgreeExhaustively) {
  for (int n = 2; n <= 10; ++n) {
    const Field F = Field::make(n);
    for (std::uint32_t a = 0; a < F.size(); ++a) {
      for (std::uint32_t b = 0; b < F.size(); ++b) ASSERT_EQ(F.mul_table(E(a), E(b)), F.mul_clmul(E(a), E(b)));
    }
  }
}

TEST(Mul, TableAndCarryLessAgreeOnRandomPairs) {
  std::mt19937_64 rng(7);
  for (int n = 11; n <= 16; ++n) {
    const Field F = Field::make(n);
    std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(F.size() - 1));
    for (int t = 0; t < 100000; ++t) {
      const Element a(dist(rng)), b(dist(rng));
      ASSERT_EQ(F.mul_table(a, b), F.mul_clmul(a, b));
    }
  }
}

TEST(FieldAxioms, ExhaustiveUpToDegreeEight) {
  for (int n = 2; n <= 8; ++n) {
    const Field F = Field::make(n);
    const auto all = F.elements();
    // Commutativity, distributivity and unique inverses over all pairs;
    // associativity over all triples for n <= 6.
    for (Element a : all) {
      int inverses = 0;
      for (Element b : all) {
        ASSERT_EQ(F.mul(a, b), F.mul(b, a));
        if (F.mul(a, b) == kOne) ++inverses;
        if (n <= 6) {
          for (Element c : all) {
            ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
            ASSERT_EQ(F.mul(a, b + c), F.mul(a, b) + F.mul(a, c));
          }
        }
      }
      ASSERT_EQ(inverses, a.is_zero() ? 0 : 1);
    }
    if (n > 6) {
      std::mt19937 rng(n);
      std::uniform_int_distribution<std::uint32_t> d(0, static_cast<std::uint32_t>(F.size() - 1));
      for (int t = 0; t < 200000; ++t) {
        const Element a(d(rng)), b(d(rng)), c(d(rng));
        ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
        ASSERT_EQ(F.mul(a, b + c), F.mul(a, b) + F.mul(a, c));
      }
    }
  }
}

TEST(Pow, Examples) {
  const Field& F = gf16();
  EXPECT_EQ(F.pow(E(0x2), 15), kOne);
  EXPECT_EQ(F.pow(kZero, 7), kZero);
  EXPECT_EQ(F.pow(E(0x2), 7), E(0xB));
  EXPECT_EQ(F.pow(kZero, 0), kOne);
  EXPECT_EQ(F.pow(E(0x7), 0), kOne);
}

TEST(Pow, ExponentsBeyondGroupOrderReduce) {
  const Field& F = gf16();
  for (std::uint32_t a = 1; a < 16; ++a) {
    for (std::uint64_t e = 0; e < 40; ++e) {
      EXPECT_EQ(F.pow(E(a), e + 15), F.pow(E(a), e));
      EXPECT_EQ(F.pow(E(a), e).bits, oracle::powmod(a, e, F.modulus()));
    }
  }
  EXPECT_EQ(F.pow(E(0x2), 0xFFFFFFFFFFFFFFFFull), F.pow(E(0x2), 0xFFFFFFFFFFFFFFFFull % 15));
}

TEST(Pow, FermatExhaustiveUpToTwelve) {
  for (int n = 2; n <= 12; ++n) {
    const Field F = Field::make(n);
    for (Element x : F.elements()) {
      ASSERT_EQ(F.pow(x, F.size()), x);
      ASSERT_EQ(F.pow_square_multiply(x, F.size()), x);
    }
  }
  std::mt19937_64 rng(3);
  for (int n : {20, 32}) {
    const Field F = Field::make(n);
    for (int t = 0; t < 200; ++t) {
      const Element x(static_cast<std::uint32_t>(rng() & (F.size() - 1)));
      ASSERT_EQ(F.pow(x, F.size()), x);
    }
  }
}

TEST(Pow, TableAndSquareMultiplyAgree) {
  for (int n : {4, 9, 14}) {
    const Field F = Field::make(n);
    std::mt19937_64 rng(n);
    for (int t = 0; t < 5000; ++t) {
      const Element a(static_cast<std::uint32_t>(rng() & (F.size() - 1)));
      const std::uint64_t e = rng() >> (rng() % 60);
      ASSERT_EQ(F.pow_table(a, e), F.pow_square_multiply(a, e));
    }
  }
}

TEST(Inv, Examples) {
  const Field& F = gf16();
  EXPECT_EQ(F.inv(E(0x2)), E(0x9));
  EXPECT_EQ(F.inv(kOne), kOne);
  EXPECT_THROW(F.inv(kZero), std::domain_error);
}

TEST(Inv, AgreesWithPolynomialEuclid) {
  for (int n : {2, 5, 8, 11}) {
    const Field F = Field::make(n);
    for (std::uint32_t a = 1; a < F.size(); ++a) {
      ASSERT_EQ(F.inv(E(a)).bits, oracle::inverse_by_euclid(a, F.modulus()).value());
    }
  }
  const Field big = Field::make(32);
  for (std::uint32_t a : {1u, 2u, 0xdeadbeefu, 0xffffffffu}) {
    EXPECT_EQ(big.inv(E(a)).bits, oracle::inverse_by_euclid(a, big.modulus()).value());
  }
}

TEST(Conjugate, Examples) {
  const Field& F = gf16();
  EXPECT_EQ(F.conjugate(E(0x2), 2), E(0x3));
  for (Element x : F.elements()) EXPECT_EQ(F.conjugate(F.conjugate(x, 2), 2), x);
  for (Element x : F.subfield_elements(2)) EXPECT_EQ(F.conjugate(x, 2), x);
  EXPECT_THROW(F.conjugate(E(1), 3), std::invalid_argument);
  EXPECT_THROW(Field::make(5).conjugate(E(1), 2), std::invalid_argument);
}

TEST(Conjugate, IsAFieldAutomorphism) {
  for (int m : {1, 2, 3, 4}) {
    const Field F = Field::make(2 * m);
    for (Element a : F.elements()) {
      EXPECT_EQ(F.conjugate(a, m), F.frobenius(a, m));
      for (Element b : F.elements()) {
        ASSERT_EQ(F.conjugate(F.mul(a, b), m), F.mul(F.conjugate(a, m), F.conjugate(b, m)));
        ASSERT_EQ(F.conjugate(a + b, m), F.conjugate(a, m) + F.conjugate(b, m));
      }
    }
  }
}

TEST(Conjugate, TableMatchesRepeatedSquaringWithoutTables) {
  const Field F = Field::make(18);
  std::mt19937 rng(1);
  for (int t = 0; t < 1000; ++t) {
    const Element x(rng() & 0x3ffff);
    EXPECT_EQ(F.conjugate(F.conjugate(x, 9), 9), x);
    EXPECT_EQ(F.mul(x, F.conjugate(x, 9)), F.conjugate(F.mul(x, F.conjugate(x, 9)), 9));
  }
}

TEST(Trace, AbsoluteTraceExamples) {
  for (int n : {2, 3, 4, 7, 10}) {
    const Field F = Field::make(n);
    EXPECT_EQ(F.abs_trace(kZero), 0);
    int ones = 0;
    for (Element x : F.elements()) {
      const int t = F.abs_trace(x);
      ASSERT_TRUE(t == 0 || t == 1);
      ones += t;
      ASSERT_EQ(t, F.abs_trace(F.square(x)));
    }
    EXPECT_EQ(ones, static_cast<int>(F.size() / 2)) << "n=" << n;
  }
}

TEST(Trace, AbsoluteTraceIsAdditive) {
  const Field F = Field::make(6);
  for (Element a : F.elements()) {
    for (Element b : F.elements()) ASSERT_EQ(F.abs_trace(a + b), F.abs_trace(a) ^ F.abs_trace(b));
  }
}

TEST(Trace, SubfieldTraceCensus) {
  for (int m : {1, 2, 3, 5}) {
    const Field F = Field::make(2 * m);
    int ones = 0;
    for (Element y : F.subfield_elements(m)) ones += F.subfield_trace(y, m);
    EXPECT_EQ(ones, 1 << (m - 1));
  }
}

TEST(Trace, RelativeTrace) {
  const Field& F = gf16();
  EXPECT_EQ(F.rel_trace(E(0x2), 2), E(0x1));
  for (Element x : F.subfield_elements(2)) EXPECT_EQ(F.rel_trace(x, 2), kZero);
  for (int m : {2, 3, 4}) {
    const Field G = Field::make(2 * m);
    for (Element x : G.elements()) {
      ASSERT_TRUE(G.in_subfield(G.rel_trace(x, m), m));
      ASSERT_TRUE(G.in_subfield(G.norm(x, m), m));
    }
  }
  EXPECT_THROW(F.rel_trace(E(1), 1), std::invalid_argument);
}

TEST(Subfield, Examples) {
  const Field& F = gf16();
  const auto sub = F.subfield_elements(2);
  ASSERT_EQ(sub.size(), 4u);
  EXPECT_TRUE(std::is_sorted(sub.begin(), sub.end()));
  EXPECT_EQ(sub.front(), kZero);
  EXPECT_EQ(sub[1], kOne);
  for (Element x : sub) EXPECT_EQ(F.pow(x, 4), x);
}

TEST(Subfield, ClosedUnderFieldOperations) {
  for (int m : {1, 2, 3, 4, 5}) {
    const Field F = Field::make(2 * m);
    const auto sub = F.subfield_elements(m);
    ASSERT_EQ(sub.size(), std::size_t{1} << m);
    for (Element a : sub) {
      for (Element b : sub) {
        ASSERT_TRUE(std::binary_search(sub.begin(), sub.end(), a + b));
        ASSERT_TRUE(std::binary_search(sub.begin(), sub.end(), F.mul(a, b)));
      }
    }
  }
}

TEST(UnitCircle, Examples) {
  const Field& F = gf16();
  const std::vector<Element> expected{E(0x1), E(0x8), E(0xC), E(0xA), E(0xF)};
  EXPECT_EQ(F.unit_circle(2), expected);
}

TEST(UnitCircle, SizeMembershipAndIntersection) {
  for (int m = 1; m <= 7; ++m) {
    const Field F = Field::make(2 * m);
    auto circle = F.unit_circle(m);
    ASSERT_EQ(circle.size(), (std::size_t{1} << m) + 1);
    for (Element l : circle) ASSERT_EQ(F.mul(l, F.conjugate(l, m)), kOne);
    std::sort(circle.begin(), circle.end());
    EXPECT_EQ(std::adjacent_find(circle.begin(), circle.end()), circle.end());
    const auto sub = F.subfield_elements(m);
    std::vector<Element> common;
    std::set_intersection(circle.begin(), circle.end(), sub.begin(), sub.end(), std::back_inserter(common));
    EXPECT_EQ(common, std::vector<Element>{kOne});
  }
}

TEST(Hex, RoundTripAndErrors) {
  EXPECT_EQ(to_hex(E(0xB)), "b");
  EXPECT_EQ(to_hex(E(0)), "0");
  EXPECT_EQ(parse_hex_element("0x1f"), E(0x1f));
  EXPECT_EQ(parse_hex_element("AB"), E(0xab));
  EXPECT_THROW(parse_hex_element("xyz"), std::invalid_argument);
  EXPECT_THROW(parse_hex_element(""), std::invalid_argument);
}
