#include <gtest/gtest.h>

#include "bredonk/cyclotomic.hpp"
#include "bredonk/errors.hpp"

using namespace bredonk;

namespace {

std::vector<long> as_longs(const std::vector<mpz_class>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

Cyclotomic z(unsigned e, unsigned k = 1) { return Cyclotomic::root_of_unity(e, k); }

}  // namespace

TEST(CyclotomicPolynomial, SmallCases) {
  EXPECT_EQ(as_longs(cyclotomic_polynomial(1)), (std::vector<long>{-1, 1}));
  EXPECT_EQ(as_longs(cyclotomic_polynomial(2)), (std::vector<long>{1, 1}));
  EXPECT_EQ(as_longs(cyclotomic_polynomial(4)), (std::vector<long>{1, 0, 1}));
  EXPECT_EQ(as_longs(cyclotomic_polynomial(6)), (std::vector<long>{1, -1, 1}));
  EXPECT_EQ(as_longs(cyclotomic_polynomial(12)), (std::vector<long>{1, 0, -1, 0, 1}));
}

TEST(CyclotomicPolynomial, DegreeIsTotient) {
  const std::vector<std::size_t> phi = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8, 8, 16, 6, 18, 8, 12, 10, 22, 8};
  for (unsigned e = 1; e < phi.size(); ++e) EXPECT_EQ(cyclotomic_polynomial(e).size() - 1, phi[e]) << e;
}

TEST(Cyclotomic, RootsOfUnity) {
  for (unsigned e : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
    Cyclotomic p = 1, sum = 0;
    for (unsigned k = 0; k < e; ++k) {
      sum += z(e, k);
      p *= z(e);
    }
    EXPECT_EQ(p, Cyclotomic(1)) << e;
    EXPECT_EQ(sum, Cyclotomic(e == 1 ? 1 : 0)) << e;
  }
}

TEST(Cyclotomic, ConductorLifting) {
  EXPECT_EQ(z(2), Cyclotomic(-1));
  EXPECT_EQ(z(4) * z(4), Cyclotomic(-1));
  EXPECT_EQ(z(6, 2), z(3));
  EXPECT_EQ(z(3) + z(4), z(12, 4) + z(12, 3));
  EXPECT_EQ(z(3).lift_to(12), z(12, 4));
}

TEST(Cyclotomic, ConjugationAndRationality) {
  const Cyclotomic w = z(3);
  EXPECT_EQ(w.conjugate(), z(3, 2));
  EXPECT_TRUE((w + w.conjugate()).is_rational_integer());
  EXPECT_EQ((w + w.conjugate()).to_rational(), -1);
  EXPECT_FALSE(w.is_rational());
  EXPECT_THROW(w.to_rational(), NonRationalProduct);
  const Cyclotomic root2 = z(8) + z(8, 7);
  EXPECT_FALSE(root2.is_rational());
  EXPECT_EQ(root2 * root2, Cyclotomic(2));
  EXPECT_TRUE(Cyclotomic(mpq_class(1, 2)).is_rational());
  EXPECT_FALSE(Cyclotomic(mpq_class(1, 2)).is_rational_integer());
}

TEST(Cyclotomic, FieldAxiomsOnSamples) {
  const std::vector<Cyclotomic> xs = {Cyclotomic(3), z(3), z(4) - 2, z(5, 2) * z(3), z(8) + z(8, 3), mpq_class(-1, 3)};
  for (const auto& a : xs)
    for (const auto& b : xs)
      for (const auto& c : xs) {
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a - a, Cyclotomic(0));
      }
}

TEST(Cyclotomic, Rendering) {
  EXPECT_EQ(Cyclotomic(-4).to_string(), "-4");
  EXPECT_EQ(Cyclotomic(mpq_class(3, 2)).to_string(), "3/2");
  EXPECT_EQ((Cyclotomic(-1) - z(3) * 2).to_string(), "-1 - 2*z3");
  EXPECT_EQ(z(3, 2).to_string(), "-1 - z3");
}
