#include "mfx/poly_io.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace mfx {
namespace {

using testing::P;
using testing::QI;

PolyRingPtr xuvt() { return make_poly_ring({"x", "u", "v", "t"}); }

TEST(FieldTest, GaussianUnitSquaresToMinusOne) {
  auto i = *QI::imaginary_unit();
  EXPECT_EQ(i * i, QI(-1));
  EXPECT_FALSE(Rational::imaginary_unit().has_value());
  auto j = *PrimeField<13>::imaginary_unit();
  EXPECT_EQ(j * j, PrimeField<13>(-1));
  EXPECT_FALSE(PrimeField<7>::imaginary_unit().has_value());
}

TEST(FieldTest, ExactCancellation) {
  QI a(mpq_class(1, 3), mpq_class(-2, 7)), b(mpq_class(5, 11), mpq_class(3));
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ((a / b) * b, a);
  EXPECT_THROW(a / QI(0L), ArithmeticError);
}

TEST(FieldTest, RootsOfSplitPolynomial) {
  // (T - 1/2)^2 (T + i) (T - 3)
  auto i = *QI::imaginary_unit();
  std::vector<QI> p{QI(1)};
  auto mul = [&](QI r) {
    std::vector<QI> out(p.size() + 1, QI(0L));
    for (std::size_t k = 0; k < p.size(); ++k) {
      out[k + 1] += p[k];
      out[k] -= p[k] * r;
    }
    p = out;
  };
  mul(QI(mpq_class(1, 2), 0));
  mul(QI(mpq_class(1, 2), 0));
  mul(-i);
  mul(QI(3));
  auto roots = QI::roots_of(p);
  EXPECT_EQ(roots.size(), 3u);
  for (const auto& r : roots) EXPECT_TRUE(detail::horner(p, r).is_zero());
}

TEST(RingArithmeticTest, SpecExamples) {
  auto s = make_poly_ring({"x", "y", "t"});
  EXPECT_EQ(P<QI>(s, "x + t") + P<QI>(s, "-x"), P<QI>(s, "t"));
  EXPECT_EQ(P<QI>(s, "x + (i)*y") * P<QI>(s, "x - (i)*y"), P<QI>(s, "x^2 + y^2"));
  EXPECT_TRUE((P<QI>(s, "x") * Polynomial<QI>(s)).is_zero());
}

TEST(RingArithmeticTest, ArityMismatchThrows) {
  auto a = make_poly_ring({"x", "t"});
  auto b = make_poly_ring({"x", "y", "t"});
  EXPECT_THROW(P<QI>(a, "x") + P<QI>(b, "x"), ArityError);
  // Structurally equal rings are compatible.
  auto a2 = make_poly_ring({"x", "t"});
  EXPECT_EQ(P<QI>(a, "x") + P<QI>(a2, "t"), P<QI>(a, "x + t"));
}

TEST(RingArithmeticTest, ProductOfHomogeneousIsHomogeneous) {
  auto s = xuvt();
  std::mt19937 rng(11);
  for (int k = 0; k < 50; ++k) {
    int d1 = 1 + k % 3, d2 = 1 + k % 4;
    auto p = testing::random_homogeneous<QI>(s, d1, rng);
    auto q = testing::random_homogeneous<QI>(s, d2, rng);
    auto pq = p * q;
    if (pq.is_zero()) continue;
    EXPECT_TRUE(pq.is_homogeneous());
    EXPECT_EQ(pq.degree(), d1 + d2);
  }
}

TEST(GroebnerTest, SingleGenerator) {
  auto s = xuvt();
  auto gb = groebner_basis<QI>({P<QI>(s, "x^2 + u*v")}, s);
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb[0], P<QI>(s, "x^2 + u*v"));
}

TEST(GroebnerTest, LinearIdealWithHypersurfaceLift) {
  auto s = xuvt();
  auto gb = groebner_basis<QI>({P<QI>(s, "x"), P<QI>(s, "u"), P<QI>(s, "x^2 + u*v")}, s);
  ASSERT_EQ(gb.size(), 2u);
  std::vector<std::string> leads;
  for (const auto& g : gb) leads.push_back(s->monomial_string(g.leading_monomial()));
  std::sort(leads.begin(), leads.end());
  EXPECT_EQ(leads, (std::vector<std::string>{"u", "x"}));
}

TEST(GroebnerTest, EmptyIdeal) {
  auto s = xuvt();
  EXPECT_TRUE(groebner_basis<QI>({}, s).empty());
}

TEST(GroebnerTest, RejectsNonHomogeneous) {
  auto s = xuvt();
  EXPECT_THROW(groebner_basis<QI>({P<QI>(s, "x^2 + u")}, s), NonHomogeneousError);
}

TEST(GroebnerTest, NormalFormExamples) {
  auto s = xuvt();
  std::vector<Polynomial<QI>> b{P<QI>(s, "x^2 + u*v")};
  EXPECT_EQ(normal_form(P<QI>(s, "x^2"), b), P<QI>(s, "-u*v"));
  EXPECT_EQ(normal_form(P<QI>(s, "x"), b), P<QI>(s, "x"));
  EXPECT_TRUE(normal_form(P<QI>(s, "u*v + x^2"), b).is_zero());
}

template <Field K>
void check_groebner_properties(std::uint32_t seed) {
  auto s = make_poly_ring({"x", "y", "z", "w"});
  std::mt19937 rng(seed);
  for (int round = 0; round < 8; ++round) {
    std::vector<Polynomial<K>> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testing::random_homogeneous<K>(s, 2, rng));
    auto gb = groebner_basis<K>(gens, s);
    // S-pairs reduce to zero.
    for (std::size_t a = 0; a < gb.size(); ++a)
      for (std::size_t b = a + 1; b < gb.size(); ++b)
        EXPECT_TRUE(normal_form(s_polynomial(gb[a], gb[b]), gb).is_zero());
    // Idempotent.
    EXPECT_EQ(groebner_basis<K>(gb, s), gb);
    // Random ideal members reduce to zero; normal forms are idempotent.
    for (int k = 0; k < 5; ++k) {
      Polynomial<K> member(s);
      for (const auto& g : gens) member += testing::random_homogeneous<K>(s, 1, rng) * g;
      EXPECT_TRUE(normal_form(member, gb).is_zero());
      auto p = testing::random_homogeneous<K>(s, 3, rng, 5);
      auto nf = normal_form(p, gb);
      EXPECT_EQ(normal_form(nf, gb), nf);
      EXPECT_TRUE(normal_form(p - nf, gb).is_zero());
      auto q = testing::random_homogeneous<K>(s, 2, rng);
      EXPECT_TRUE(normal_form(p * q - q * p, gb).is_zero());
    }
  }
}

TEST(GroebnerTest, PropertiesOverGaussianRationals) { check_groebner_properties<QI>(1); }
TEST(GroebnerTest, PropertiesOverPrimeField) { check_groebner_properties<PrimeField<13>>(2); }
TEST(GroebnerTest, PropertiesOverRationals) { check_groebner_properties<Rational>(3); }

TEST(GroebnerTest, NonMemberDetectedByBruteForce) {
  // x*y is not in (x^2, y^2): no linear combination with degree-0 coefficients exists.
  auto s = make_poly_ring({"x", "y"});
  auto gb = groebner_basis<QI>({P<QI>(s, "x^2"), P<QI>(s, "y^2")}, s);
  EXPECT_FALSE(normal_form(P<QI>(s, "x*y"), gb).is_zero());
}

TEST(GradedRingTest, HypersurfaceFlagAndHilbert) {
  auto s = xuvt();
  GradedRing<QI> r(s, {P<QI>(s, "x^2 + u*v")});
  EXPECT_TRUE(r.is_hypersurface());
  EXPECT_FALSE(r.free().is_hypersurface());
  // dim (S/(q))_d = C(d+3,3) - C(d+1,3)
  for (int d = 0; d <= 8; ++d) {
    long full = (d + 3L) * (d + 2) * (d + 1) / 6;
    long sub = d >= 2 ? (d + 1L) * d * (d - 1) / 6 : 0;
    EXPECT_EQ(r.hilbert_value(d), full - sub) << d;
  }
  EXPECT_THROW(GradedRing<QI>(s, {P<QI>(s, "x^2 + u")}), NonHomogeneousError);
}

TEST(PolyIoTest, ParsesGrammar) {
  auto s = xuvt();
  EXPECT_EQ(P<QI>(s, "x^2 + u*v"), P<QI>(s, "u * v+x ^ 2"));
  EXPECT_EQ(format_polynomial(P<QI>(s, "3/6*x*u - (1/2+2i)*t^3")), "(-1/2-2i)*t^3 + 1/2*x*u");
  EXPECT_EQ(format_polynomial(P<QI>(s, "(i)*x - (i)*x")), "0");
  EXPECT_EQ(format_polynomial(P<QI>(s, "-(-i)*x")), "(i)*x");
  EXPECT_THROW(P<QI>(s, "x + y"), ParseError);
  EXPECT_THROW(P<QI>(s, "x ++"), ParseError);
  EXPECT_THROW(parse_polynomial<Rational>(s, "(i)*x"), ParseError);
}

TEST(PolyIoTest, RoundTripProperty) {
  auto s = make_poly_ring({"x", "y", "u", "v", "t"});
  std::mt19937 rng(5);
  auto i = *QI::imaginary_unit();
  for (int k = 0; k < 100; ++k) {
    auto p = testing::random_homogeneous<QI>(s, 1 + k % 4, rng, 4);
    p = p + testing::random_homogeneous<QI>(s, 1 + k % 4, rng, 2).scale(i * QI(mpq_class(k, 7), mpq_class(1, 3)));
    auto text = format_polynomial(p);
    EXPECT_EQ(P<QI>(s, text), p) << text;
    EXPECT_EQ(format_polynomial(P<QI>(s, text)), text);
  }
}

TEST(PolyIoTest, RingBlockRoundTrip) {
  std::string text = "vars: x,u,v,t\ndegs: 1,1,1,1\nmod: x^2 + u*v\n";
  auto r = parse_ring<QI>(text);
  EXPECT_TRUE(r.is_hypersurface());
  EXPECT_EQ(format_ring_block(r), text);
  std::string weighted = "vars: a,b\ndegs: 1,2\norder: lex\n";
  EXPECT_EQ(format_ring_block(parse_ring<QI>(weighted)), weighted);
  EXPECT_THROW(parse_ring<QI>("vars: x\ndegs: 0\n"), ParseError);
}

}  // namespace
}  // namespace mfx
