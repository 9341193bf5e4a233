#include <gtest/gtest.h>

#include <set>

#include "ffsmooth/gf.hpp"

using namespace ffsmooth;
using namespace ffsmooth::gf;

namespace {

// Brute-force multiplicative order by repeated multiplication.
u64 brute_order(const Field& F, Elem a) {
  Elem x = a;
  u64 k = 1;
  while (x != 1) {
    x = F.mul(x, a);
    ++k;
  }
  return k;
}

}  // namespace

TEST(Field, PrimeFieldConstruction) {
  auto F = make_field(7, 1);
  EXPECT_EQ(F->q(), 7u);
  EXPECT_TRUE(F->modulus().empty());
  EXPECT_EQ(F->describe(), "q=7^1;modulus=[]");
}

TEST(Field, ExtensionWithGivenModulus) {
  // Y^3 + Y + 1 has no root in F_2, so a cubic with no roots is irreducible.
  const std::vector<u32> m{1, 1, 0, 1};
  for (u32 y = 0; y < 2; ++y) EXPECT_NE((y * y * y + y + 1) % 2, 0u);
  auto F = make_field(2, 3, m);
  EXPECT_EQ(F->q(), 8u);
  EXPECT_EQ(F->describe(), "q=2^3;modulus=[1,1,0,1]");
}

TEST(Field, RejectsBadInput) {
  EXPECT_THROW(make_field(4, 1), std::invalid_argument);
  EXPECT_THROW(make_field(2, 2, std::vector<u32>{1, 0, 1}), std::invalid_argument);  // (Y+1)^2
  EXPECT_THROW(make_field(2, 3, std::vector<u32>{1, 1, 1}), std::invalid_argument);  // wrong degree
  EXPECT_THROW(make_field(3, 2, std::vector<u32>{1, 0, 2}), std::invalid_argument);  // not monic
  EXPECT_THROW(make_field(2, 11), std::invalid_argument);                            // too large
}

TEST(Field, DefaultModulusIsFirstIrreducibleInOrder) {
  EXPECT_EQ(make_field(2, 2)->modulus(), (std::vector<u32>{1, 1, 1}));
  EXPECT_EQ(make_field(2, 3)->modulus(), (std::vector<u32>{1, 1, 0, 1}));
  EXPECT_EQ(make_field(3, 2)->modulus(), (std::vector<u32>{1, 0, 1}));
  EXPECT_EQ(make_field(5, 2)->modulus(), (std::vector<u32>{2, 0, 1}));
}

TEST(Field, InverseInF7) {
  auto F = make_field(7, 1);
  EXPECT_EQ(F->inv(3), 5);
  EXPECT_THROW(F->inv(0), std::domain_error);
}

TEST(Field, ReductionInF8) {
  auto F = make_field(2, 3, std::vector<u32>{1, 1, 0, 1});
  const Elem y = F->from_coeffs(std::vector<u32>{0, 1});
  const Elem y2 = F->from_coeffs(std::vector<u32>{0, 0, 1});
  EXPECT_EQ(F->mul(y, y2), F->from_coeffs(std::vector<u32>{1, 1}));
}

TEST(Field, AxiomsExhaustive) {
  for (u64 q : {2, 3, 4, 5, 7, 8, 9}) {
    auto F = make_field_of_order(q);
    for (u64 a = 0; a < q; ++a) {
      const Elem ea = static_cast<Elem>(a);
      if (a) {
        EXPECT_EQ(F->pow(ea, q - 1), 1) << q;
        EXPECT_EQ(F->mul(ea, F->inv(ea)), 1) << q;
      }
      EXPECT_EQ(F->add(ea, F->neg(ea)), 0);
      for (u64 b = 0; b < q; ++b) {
        const Elem eb = static_cast<Elem>(b);
        EXPECT_EQ(F->mul(ea, eb), F->mul(eb, ea));
        EXPECT_EQ(F->add(ea, eb), F->add(eb, ea));
        EXPECT_LT(F->add(ea, eb), q);
        for (u64 c = 0; c < q; ++c) {
          const Elem ec = static_cast<Elem>(c);
          EXPECT_EQ(F->mul(ea, F->add(eb, ec)), F->add(F->mul(ea, eb), F->mul(ea, ec)));
          EXPECT_EQ(F->mul(ea, F->mul(eb, ec)), F->mul(F->mul(ea, eb), ec));
        }
      }
    }
  }
}

TEST(Field, Enumeration) {
  auto e2 = enumerate_field(make_field(2, 1));
  ASSERT_EQ(e2.size(), 2u);
  EXPECT_EQ(e2[0].value(), 0);
  EXPECT_EQ(e2[1].value(), 1);
  auto e4 = enumerate_field(make_field(2, 2));
  ASSERT_EQ(e4.size(), 4u);
  EXPECT_TRUE(e4[0].is_zero());
  EXPECT_EQ(e4[1].value(), 1);
  EXPECT_EQ(e4[1].coeffs(), (std::vector<u32>{1, 0}));
}

TEST(Field, Generators) {
  auto F7 = make_field(7, 1);
  // Least primitive root mod 7 by brute-force orders.
  Elem least = 0;
  for (Elem a = 1; a < 7; ++a)
    if (brute_order(*F7, a) == 6) {
      least = a;
      break;
    }
  EXPECT_EQ(least, 3);
  EXPECT_EQ(find_generator(F7).value(), least);
  EXPECT_EQ(find_generator(make_field(2, 1)).value(), 1);
  auto F9 = make_field(3, 2);
  EXPECT_EQ(brute_order(*F9, find_generator(F9).value()), 8u);
}

TEST(Field, GeneratorPowersCoverGroup) {
  for (u64 q : prime_powers_in(3, 64)) {
    auto F = make_field_of_order(q);
    const Elem g = find_generator(F).value();
    std::set<Elem> seen;
    Elem x = 1;
    for (u64 k = 0; k + 1 < q; ++k) {
      seen.insert(x);
      x = F->mul(x, g);
    }
    EXPECT_EQ(seen.size(), q - 1) << q;
    EXPECT_EQ(element_order(*F, g), q - 1);
  }
}

TEST(Field, DescriptionRoundTrip) {
  for (u64 q : {7, 8, 9, 25, 64}) {
    auto F = make_field_of_order(q);
    auto G = parse_field_description(F->describe());
    EXPECT_TRUE(F->same_as(*G));
  }
  EXPECT_THROW(parse_field_description("q=4^1;modulus=[]"), std::invalid_argument);
}

TEST(FFElement, MixedFieldsRejected) {
  auto F7 = make_field(7, 1);
  auto F5 = make_field(5, 1);
  FFElement a(F7, 3), b(F5, 3);
  EXPECT_THROW(a + b, std::invalid_argument);
  FFElement c(F7, 5);
  EXPECT_EQ((a * c).value(), 1);
  EXPECT_EQ(a.inverse(), c);
  EXPECT_EQ(a.pow(6).value(), 1);
  EXPECT_THROW(FFElement(F7, 0).inverse(), std::domain_error);
}
