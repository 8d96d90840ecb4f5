#include "mfx/acceptance.hpp"
#include "mfx/catalog.hpp"
#include "mfx/mfx_io.hpp"
#include "mfx/random_mf.hpp"
#include "linear_oracle.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace mfx {
namespace {

using testing::P;
using testing::QI;

PolyRingPtr xt() { return make_poly_ring({"x", "t"}); }

MatrixFactorization<QI> one_by_one(const PolyRingPtr& r, const std::string& f, const std::string& phi,
                                   const std::string& psi, int row, int col) {
  return {r, P<QI>(r, f), {{P<QI>(r, phi)}}, {{P<QI>(r, psi)}}, {row}, {col}};
}

std::vector<MatrixFactorization<QI>> catalog_sample() {
  std::vector<MatrixFactorization<QI>> out;
  for (const auto& n : mf_template_names())
    for (int l = 1; l <= (mf_has_ell(n) ? 2 : 1); ++l) out.push_back(get_mf(n, l));
  return out;
}

TEST(VerifyMf, SquareZeroOnTheLine) {
  auto r = xt();
  EXPECT_TRUE(verify_mf(one_by_one(r, "x^2", "x^2", "1", 0, 2)));
  EXPECT_TRUE(verify_mf(one_by_one(r, "x^2", "x", "x", 0, 1)));
}

TEST(VerifyMf, WrongPotentialFailsAtFirstEntry) {
  auto r = xt();
  auto rep = verify_mf(one_by_one(r, "x^3", "x", "x", 0, 1));
  ASSERT_FALSE(rep);
  EXPECT_NE(rep.failure.find("(1,1)"), std::string::npos) << rep.failure;
}

TEST(VerifyMf, ConeDisplayPasses) {
  auto m = get_mf("cone-4x4", 1);
  EXPECT_TRUE(verify_mf(m));
  EXPECT_EQ(m.f, P<QI>(m.ring, "x^2 + u*v"));
}

TEST(VerifyMf, GradingViolationIsReported) {
  auto r = xt();
  auto rep = verify_mf(one_by_one(r, "x^2", "x", "x", 0, 2));
  ASSERT_FALSE(rep);
  EXPECT_NE(rep.failure.find("grading"), std::string::npos);
}

TEST(VerifyMf, SizeMismatchIsMalformed) {
  auto m = get_mf("bgs-iii", 1);
  m.psi.pop_back();
  EXPECT_THROW(verify_mf(m), MalformedError);
  auto n = get_mf("bgs-iii", 1);
  n.cols.push_back(3);
  EXPECT_THROW(verify_mf(n), MalformedError);
}

TEST(DualMf, OneByOneIsSelfDual) {
  auto r = xt();
  auto m = one_by_one(r, "x^2", "x", "x", 0, 1);
  auto d = dual_mf(m);
  EXPECT_EQ(d.phi, m.phi);
  EXPECT_EQ(d.psi, m.psi);
  EXPECT_TRUE(verify_mf(d));
}

TEST(DualMf, InvolutionOnCatalog) {
  for (const auto& m : catalog_sample()) {
    auto d = dual_mf(m);
    EXPECT_TRUE(verify_mf(d));
    EXPECT_EQ(dual_mf(d), m);
  }
}

TEST(DualMf, TypeThreeIsTransposed) {
  auto m = get_mf("bgs-iii", 1);
  auto d = dual_mf(m);
  EXPECT_EQ(d.phi[0][1], m.psi[1][0]);
  EXPECT_EQ(d.phi[1][0], m.psi[0][1]);
  EXPECT_TRUE(verify_mf(d));
}

TEST(TwistMf, ShiftsTwistsOnly) {
  auto r = xt();
  auto m = one_by_one(r, "x^2", "x", "x", 0, 1);
  EXPECT_EQ(twist_mf(m, 0), m);
  EXPECT_EQ(twist_mf(twist_mf(m, -1), 1), m);
  auto c = twist_mf(get_mf("cone-4x4", 2), 3);
  EXPECT_TRUE(verify_mf(c));
  EXPECT_EQ(c.rows[0], 4);
}

TEST(DirectSumMf, DiagonalBlocks) {
  auto s1 = template_ring("S1");
  auto [target, sub] = ab_substitution(s1);
  auto ab = direct_sum_mf(change_of_variables(get_mf("r1-b"), target, sub),
                          change_of_variables(get_mf("r1-c"), target, sub));
  EXPECT_TRUE(verify_mf(ab));
  EXPECT_EQ(ab.phi[0][0], P<QI>(target, "a"));
  EXPECT_EQ(ab.phi[1][1], P<QI>(target, "b"));
  EXPECT_TRUE(ab.phi[0][1].is_zero());
  EXPECT_EQ(ab.psi[0][0], P<QI>(target, "b"));
}

TEST(DirectSumMf, EmptyIsNeutral) {
  auto m = get_mf("bgs-iii", 2);
  EXPECT_EQ(direct_sum_mf(m, empty_mf(m.ring, m.f)), m);
  EXPECT_EQ(direct_sum_mf(empty_mf(m.ring, m.f), m), m);
}

TEST(DirectSumMf, DPlusEVerifies) {
  auto s = direct_sum_mf(get_mf("r1-d", 1), get_mf("r1-e", 1));
  EXPECT_EQ(s.size(), 4u);
  EXPECT_TRUE(verify_mf(s));
}

TEST(DirectSumMf, MismatchedPotentialThrows) {
  EXPECT_THROW(direct_sum_mf(get_mf("bgs-ii"), get_mf("r1-a")), MalformedError);
}

TEST(DirectSumMf, HilbertAdditivity) {
  auto a = get_mf("bgs-iii", 1), b = twist_mf(get_mf("bgs-i"), 1);
  auto ca = cokernel_module(a), cb = cokernel_module(b), cs = cokernel_module(direct_sum_mf(a, b));
  for (int d = 0; d <= 12; ++d) EXPECT_EQ(cs.hilbert(d), ca.hilbert(d) + cb.hilbert(d)) << d;
}

TEST(Knoerrer, LineOnTheCone) {
  auto r = xt();
  auto k = knoerrer_periodicity(one_by_one(r, "x^2", "x", "x", 0, 1), "u", "v");
  auto R = k.ring;
  EXPECT_EQ(k.f, P<QI>(R, "x^2 + u*v"));
  PolyMatrix<QI> phi{{P<QI>(R, "u"), P<QI>(R, "x")}, {P<QI>(R, "x"), P<QI>(R, "-v")}};
  PolyMatrix<QI> psi{{P<QI>(R, "v"), P<QI>(R, "x")}, {P<QI>(R, "x"), P<QI>(R, "-u")}};
  EXPECT_EQ(k.phi, phi);
  EXPECT_EQ(k.psi, psi);
  EXPECT_TRUE(verify_mf(k));
}

TEST(Knoerrer, FreeBlock) {
  auto r = xt();
  auto k = knoerrer_periodicity(one_by_one(r, "x^2", "x^2", "1", 0, 2), "u", "v");
  auto R = k.ring;
  EXPECT_EQ(k.phi[0][1], P<QI>(R, "1"));
  EXPECT_EQ(k.phi[1][0], P<QI>(R, "x^2"));
  EXPECT_EQ(k.psi[1][1], P<QI>(R, "-u"));
  EXPECT_TRUE(verify_mf(k));
}

TEST(Knoerrer, TypeThreeGivesConeDisplayUpToPermutation) {
  for (int l = 1; l <= 4; ++l) {
    auto k = knoerrer_periodicity(get_mf("bgs-iii", l), "u", "v", template_ring("S2"));
    EXPECT_TRUE(find_permutation(k, get_mf("cone-4x4", l)).has_value()) << l;
  }
}

TEST(Knoerrer, ExistingVariableIsRejected) {
  auto m = get_mf("bgs-ii");
  EXPECT_ANY_THROW(knoerrer_periodicity(m, "x", "v"));
}

TEST(DoubleCover, LineGivesPlanePair) {
  auto r = xt();
  auto c = double_branched_cover(one_by_one(r, "x^2", "x", "x", 0, 1), "y");
  auto R = c.ring;
  EXPECT_EQ(c.f, P<QI>(R, "x^2 + y^2"));
  PolyMatrix<QI> phi{{P<QI>(R, "y"), P<QI>(R, "x")}, {P<QI>(R, "x"), P<QI>(R, "-y")}};
  EXPECT_EQ(c.phi, phi);
  EXPECT_EQ(c.psi, phi);
  EXPECT_TRUE(verify_mf(c));
}

TEST(DoubleCover, FreeBlockAndTypeThree) {
  auto r = xt();
  auto c = double_branched_cover(one_by_one(r, "x^2", "x^2", "1", 0, 2), "y");
  EXPECT_EQ(c.phi[1][0], P<QI>(c.ring, "x^2"));
  EXPECT_EQ(c.phi[0][1], P<QI>(c.ring, "1"));
  auto t = double_branched_cover(get_mf("bgs-iii", 1), "y");
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.phi, t.psi);
  EXPECT_TRUE(verify_mf(t));
}

TEST(DoubleCover, OddPotentialRejected) {
  auto r = xt();
  EXPECT_THROW(double_branched_cover(one_by_one(r, "x^3", "x", "x^2", 0, 1), "y"), MalformedError);
}

TEST(TransformSoundness, RandomFactorizations) {
  std::mt19937 rng(11);
  for (int k = 0; k < 12; ++k) {
    auto m = random_factorization(rng, k % 2 ? "r1" : "bgs");
    ASSERT_TRUE(verify_mf(m));
    auto u = fresh_variable(m.ring, "u"), v = fresh_variable(m.ring, "v"), y = fresh_variable(m.ring, "y");
    auto kn = knoerrer_periodicity(m, u, v);
    EXPECT_TRUE(verify_mf(kn));
    EXPECT_EQ(kn.f, m.f.map_to(kn.ring) + Polynomial<QI>::variable(kn.ring, u) * Polynomial<QI>::variable(kn.ring, v));
    auto dc = double_branched_cover(m, y);
    EXPECT_TRUE(verify_mf(dc));
    auto Y = Polynomial<QI>::variable(dc.ring, y);
    EXPECT_EQ(dc.f, m.f.map_to(dc.ring) + Y * Y);
  }
}

TEST(ChangeOfVariables, IdentityAndScaling) {
  auto m = get_mf("bgs-iii", 2);
  EXPECT_EQ(change_of_variables(m, m.ring, {}), m);
  auto s = change_of_variables(m, m.ring, {{"x", P<QI>(m.ring, "2*x")}});
  EXPECT_EQ(s.f, P<QI>(m.ring, "4*x^2"));
  EXPECT_EQ(s.phi[0][0], P<QI>(m.ring, "2*x"));
  EXPECT_TRUE(verify_mf(s));
}

TEST(ChangeOfVariables, GaussianSubstitution) {
  auto s1 = template_ring("S1");
  auto [target, sub] = ab_substitution(s1);
  auto m = change_of_variables(get_mf("r1-a"), target, sub);
  EXPECT_EQ(m.f, P<QI>(target, "a*b"));
  EXPECT_TRUE(verify_mf(m));
}

TEST(ChangeOfVariables, SingularSubstitutionRejected) {
  auto m = get_mf("bgs-iii", 1);
  EXPECT_THROW(change_of_variables(m, m.ring, {{"x", P<QI>(m.ring, "t")}}), MalformedError);
}

TEST(TrySplit, CoverOfLineSplitsIntoPlanes) {
  auto s1 = template_ring("S1");
  auto [target, sub] = ab_substitution(s1);
  auto dc = double_branched_cover(get_mf("bgs-ii"), "y", s1);
  auto blocks = try_split(dc, target, sub);
  ASSERT_TRUE(blocks.has_value());
  ASSERT_EQ(blocks->size(), 2u);
  auto a = P<QI>(target, "a"), b = P<QI>(target, "b");
  auto p0 = (*blocks)[0].phi[0][0], p1 = (*blocks)[1].phi[0][0];
  EXPECT_TRUE((p0 == a && p1 == b) || (p0 == b && p1 == a));
}

TEST(TrySplit, ReconstructionPreservesHilbertFunction) {
  auto s1 = template_ring("S1");
  auto [target, sub] = ab_substitution(s1);
  for (int l = 1; l <= 2; ++l) {
    auto m = change_of_variables(double_branched_cover(get_mf("bgs-iii", l), "y", s1), target, sub);
    auto blocks = try_split(m);
    ASSERT_TRUE(blocks.has_value()) << l;
    auto sum = empty_mf(m.ring, m.f);
    for (const auto& b : *blocks) {
      EXPECT_TRUE(verify_mf(b));
      sum = direct_sum_mf(sum, b);
    }
    EXPECT_TRUE(verify_mf(sum));
    auto c0 = cokernel_module(m), c1 = cokernel_module(sum);
    for (int d = 0; d <= 12; ++d) EXPECT_EQ(c0.hilbert(d), c1.hilbert(d)) << "l=" << l << " d=" << d;
  }
}

TEST(TrySplit, IndecomposableReportsNoSplit) {
  EXPECT_FALSE(try_split(get_mf("bgs-iii", 1)).has_value());
}

TEST(Cokernel, LineModule) {
  auto r = xt();
  auto c = cokernel_module(one_by_one(r, "x^2", "x", "x", 0, 1));
  for (int d = 0; d <= 8; ++d) EXPECT_EQ(c.hilbert(d), 1) << d;
}

TEST(Cokernel, UnitRelationKillsGenerator) {
  auto r = xt();
  auto free = cokernel_module(one_by_one(r, "x^2", "x^2", "1", 0, 2));
  auto zero = cokernel_module(one_by_one(r, "x^2", "1", "x^2", 0, 0));
  for (int d = 0; d <= 6; ++d) {
    EXPECT_EQ(free.hilbert(d), d + 1 - std::max(0, d - 1)) << d;
    EXPECT_EQ(zero.hilbert(d), 0) << d;
  }
}

TEST(Cokernel, KnoerrerImageOfLineIsIdealXU) {
  auto r = xt();
  auto k = knoerrer_periodicity(one_by_one(r, "x^2", "x", "x", 0, 1), "u", "v", template_ring("S2"));
  auto c = cokernel_module(k);
  const auto& il = get_model("quadric-cone-p3").module("I_L");
  EXPECT_EQ(c.gens(), il.gens());
  for (int d = 0; d <= 10; ++d) EXPECT_EQ(c.hilbert(d), il.hilbert(d)) << d;
  EXPECT_FALSE(hom_basis(il, c).empty());
}

TEST(PeriodicResolution, LineExact) {
  auto r = xt();
  EXPECT_TRUE(periodic_resolution_check(one_by_one(r, "x^2", "x", "x", 0, 1), 4, 10));
  EXPECT_TRUE(periodic_resolution_check(get_mf("cone-4x4", 1), 4, 10));
}

TEST(PeriodicResolution, CorruptedEntryFailsAtStepOne) {
  auto m = get_mf("cone-4x4", 1);
  m.phi[0][0] = P<QI>(m.ring, "u + t");
  auto rep = periodic_resolution_check(m, 4, 10);
  ASSERT_FALSE(rep);
  EXPECT_EQ(rep.failure.rfind("step 1", 0), 0u) << rep.failure;
}

// The degree-e pieces of the periodic complex computed without Groebner bases.
void oracle_check(const MatrixFactorization<QI>& m, int cutoff) {
  testing::DegreeOracle<QI> o(m.ring, m.f);
  int d = m.f.degree();
  std::vector<int> rows_d, cols_d;
  for (int r : m.rows) rows_d.push_back(r + d);
  for (int c : m.cols) cols_d.push_back(c + d);
  auto pq = matmul(m.ring, m.phi, m.psi), qp = matmul(m.ring, m.psi, m.phi);
  auto coker = cokernel_module(m);
  for (int e = 0; e <= cutoff; ++e) {
    EXPECT_EQ(o.rank(pq, m.rows, rows_d, e), 0) << "phi*psi, degree " << e;
    EXPECT_EQ(o.rank(qp, m.cols, cols_d, e), 0) << "psi*phi, degree " << e;
    long phi_e = o.rank(m.phi, m.rows, m.cols, e);
    long psi_e = o.rank(m.psi, m.cols, rows_d, e);
    EXPECT_EQ(o.dim_free(m.cols, e) - phi_e, psi_e) << "exact at F1, degree " << e;
    EXPECT_EQ(o.dim_free(rows_d, e) - psi_e, o.rank(m.phi, m.rows, m.cols, e - d)) << "exact at F0(-d), degree " << e;
    EXPECT_EQ(o.dim_free(m.rows, e) - phi_e, coker.hilbert(e)) << "coker, degree " << e;
  }
}

TEST(PeriodicResolution, AgreesWithLinearAlgebraOracle) {
  for (const auto* n : {"bgs-ii", "bgs-iii", "cone-4x4", "r1-d"}) {
    auto m = get_mf(n, mf_has_ell(n) ? 2 : 1);
    SCOPED_TRACE(n);
    EXPECT_TRUE(periodic_resolution_check(m, 4, 7));
    oracle_check(m, 7);
  }
}

TEST(PeriodicResolution, OracleSeesCorruptionToo) {
  auto m = get_mf("bgs-iii", 1);
  m.phi[1][1] = Polynomial<QI>(m.ring);
  testing::DegreeOracle<QI> o(m.ring, m.f);
  std::vector<int> rows_d{m.rows[0] + 2, m.rows[1] + 2};
  // Dimension counts alone match here; only the composition exposes the damage.
  auto pq = matmul(m.ring, m.phi, m.psi), qp = matmul(m.ring, m.psi, m.phi);
  std::vector<int> cols_d{m.cols[0] + 2, m.cols[1] + 2};
  bool all_exact = true;
  for (int e = 0; e <= 6; ++e) {
    all_exact &= o.rank(pq, m.rows, rows_d, e) == 0 && o.rank(qp, m.cols, cols_d, e) == 0;
    long psi_e = o.rank(m.psi, m.cols, rows_d, e);
    all_exact &= o.dim_free(m.cols, e) - o.rank(m.phi, m.rows, m.cols, e) == psi_e;
    all_exact &= o.dim_free(rows_d, e) - psi_e == o.rank(m.phi, m.rows, m.cols, e - 2);
  }
  EXPECT_FALSE(all_exact);
  EXPECT_FALSE(periodic_resolution_check(m, 4, 6));
}

TEST(MfxFormat, RoundTrip) {
  for (const auto& m : catalog_sample()) {
    auto text = format_mf(m);
    auto back = parse_mf<QI>(text);
    EXPECT_EQ(format_mf(back), text);
    EXPECT_TRUE(verify_mf(back));
  }
}

TEST(MfxFormat, RejectsTruncatedMatrix) {
  auto text = format_mf(get_mf("bgs-iii", 1));
  text = text.substr(0, text.rfind('\n', text.size() - 2) + 1);
  EXPECT_ANY_THROW(parse_mf<QI>(text));
}

}  // namespace
}  // namespace mfx
