#include "mfx/catalog.hpp"
#include "mfx/catalog_files.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <filesystem>

namespace mfx {
namespace {

using testing::P;
using testing::QI;

namespace fs = std::filesystem;

TEST(Models, Rings) {
  const auto& qs = get_model("quadric-surface");
  EXPECT_EQ(qs.ring.ideal(), std::vector<Polynomial<QI>>{P<QI>(qs.ring.ambient(), "x*w - y*z")});
  const auto& cone = get_model("quadric-cone-p3");
  EXPECT_EQ(cone.ring.ideal(), std::vector<Polynomial<QI>>{P<QI>(cone.ring.ambient(), "x^2 + u*v")});
  const auto& tf = get_model("quadric-threefold-cone");
  EXPECT_EQ(tf.ring.ideal(), std::vector<Polynomial<QI>>{P<QI>(tf.ring.ambient(), "x^2 + y^2 + u*v")});
  EXPECT_EQ(get_model("cubic-scroll").ring.ideal().size(), 3u);
  EXPECT_EQ(get_model("veronese").ring.ideal().size(), 6u);
  EXPECT_THROW(get_model("quartic"), CatalogError);
}

TEST(Models, RankOneIdeals) {
  const auto& qs = get_model("quadric-surface");
  auto r = qs.ring.ambient();
  // Relations of (x,y) over xw - yz: the Koszul pair and (w,-z).
  EXPECT_EQ(qs.module("I_L").num_gens(), 2u);
  EXPECT_EQ(qs.module("I_L").num_relations(), 2u);
  GradedModuleMap<QI> inc{qs.module("I_L"), qs.module("O"), {{P<QI>(r, "x"), P<QI>(r, "y")}}, 0};
  EXPECT_TRUE(check_map(inc));

  const auto& tf = get_model("quadric-threefold-cone");
  auto t = tf.ring.ambient();
  GradedModuleMap<QI> d{tf.module("I_D"), tf.module("O"), {{P<QI>(t, "x + (0+1i)*y"), P<QI>(t, "u")}}, 0};
  EXPECT_TRUE(check_map(d));
}

TEST(Models, QuadricRulingsInOneFamilyAreDisjoint) {
  // (x,y) and (z,w) lie in one ruling: together they cut out nothing.
  const auto& qs = get_model("quadric-surface");
  auto r = qs.ring.ambient();
  GradedModulePresentation<QI> both(qs.ring, {0}, {{P<QI>(r, "x"), P<QI>(r, "y"), P<QI>(r, "z"), P<QI>(r, "w")}});
  GradedModulePresentation<QI> meet(qs.ring, {0}, {{P<QI>(r, "x"), P<QI>(r, "y"), P<QI>(r, "z")}});
  EXPECT_EQ(both.hilbert(3), 0);
  EXPECT_EQ(meet.hilbert(3), 1);
}

TEST(Templates, AllVerify) {
  for (const auto& n : mf_template_names())
    for (int l = 1; l <= (mf_has_ell(n) ? 4 : 1); ++l) EXPECT_TRUE(verify_mf(get_mf(n, l))) << n << " " << l;
}

TEST(Templates, TypeThreeDisplay) {
  auto m = get_mf("bgs-iii", 2);
  PolyMatrix<QI> want{{P<QI>(m.ring, "x"), P<QI>(m.ring, "t^2")}, {P<QI>(m.ring, "0"), P<QI>(m.ring, "-x")}};
  EXPECT_EQ(m.phi, want);
  EXPECT_EQ(m.psi, want);
}

TEST(Templates, PlaneTypeD) {
  auto m = get_mf("r1-d", 1);
  auto [target, sub] = ab_substitution(m.ring);
  auto ab = change_of_variables(m, target, sub);
  PolyMatrix<QI> phi{{P<QI>(target, "a"), P<QI>(target, "-t")}, {P<QI>(target, "0"), P<QI>(target, "b")}};
  PolyMatrix<QI> psi{{P<QI>(target, "b"), P<QI>(target, "t")}, {P<QI>(target, "0"), P<QI>(target, "a")}};
  EXPECT_EQ(ab.phi, phi);
  EXPECT_EQ(ab.psi, psi);
}

TEST(Templates, ConeDisplayEntries) {
  auto m = get_mf("cone-4x4", 1);
  EXPECT_EQ(m.phi[0][0], P<QI>(m.ring, "u"));
  EXPECT_EQ(m.phi[0][3], P<QI>(m.ring, "t"));
  EXPECT_EQ(m.phi[3][3], P<QI>(m.ring, "-v"));
  EXPECT_EQ(m.psi[2][2], P<QI>(m.ring, "-u"));
}

TEST(Templates, InvalidParameters) {
  EXPECT_THROW(get_mf("bgs-iii", 0), CatalogError);
  EXPECT_THROW(get_mf("bgs-i", 2), CatalogError);
  EXPECT_THROW(get_mf("r2-z"), CatalogError);
}

// The permuted cone display, transcribed entry by entry.
MatrixFactorization<QI> permuted_cone_display(int l, const std::string& last_psi_entry) {
  auto r = template_ring("S2");
  auto T = "t^" + std::to_string(l);
  auto mat = [&](std::vector<std::vector<std::string>> rows) {
    PolyMatrix<QI> out;
    for (const auto& row : rows) {
      out.emplace_back();
      for (const auto& e : row) out.back().push_back(P<QI>(r, e));
    }
    return out;
  };
  MatrixFactorization<QI> m;
  m.ring = r;
  m.f = P<QI>(r, "x^2 + u*v");
  m.phi = mat({{"u", "x", "0", T}, {"x", "-v", T, "0"}, {"0", "0", "u", "-x"}, {"0", "0", "-x", "-v"}});
  m.psi = mat({{"v", "x", "0", T}, {"x", "-u", T, "0"}, {"0", "0", "v", "-x"}, {"0", "0", "-x", last_psi_entry}});
  m.rows = {1, 1, l, l};
  m.cols = {2, 2, l + 1, l + 1};
  return m;
}

TEST(Templates, PermutedConeDisplayNeedsSignFix) {
  for (int l = 1; l <= 4; ++l) {
    EXPECT_FALSE(verify_mf(permuted_cone_display(l, "u"))) << l;
    auto fixed = permuted_cone_display(l, "-u");
    EXPECT_TRUE(verify_mf(fixed)) << l;
    auto perm = find_permutation(get_mf("cone-4x4", l), fixed);
    ASSERT_TRUE(perm.has_value()) << l;
    EXPECT_EQ(perm->first, (std::vector<std::size_t>{0, 2, 1, 3}));
    EXPECT_EQ(perm->second, (std::vector<std::size_t>{0, 2, 1, 3}));
  }
}

TEST(Templates, ConeIsKnoerrerOfTypeThree) {
  for (int l = 1; l <= 4; ++l)
    EXPECT_TRUE(find_permutation(knoerrer_periodicity(get_mf("bgs-iii", l), "u", "v", template_ring("S2")),
                                 get_mf("cone-4x4", l))
                    .has_value())
        << l;
}

TEST(Templates, CoverOfLineSplitsIntoPlaneBlocks) {
  auto s1 = template_ring("S1");
  auto [target, sub] = ab_substitution(s1);
  auto blocks = try_split(double_branched_cover(get_mf("bgs-ii"), "y", s1), target, sub);
  ASSERT_TRUE(blocks && blocks->size() == 2);
  auto b = change_of_variables(get_mf("r1-b"), target, sub), c = change_of_variables(get_mf("r1-c"), target, sub);
  auto twisted = [](const MatrixFactorization<QI>& m) { return twist_mf(m, 1); };
  bool direct = are_equivalent((*blocks)[0], twisted(b)) && are_equivalent((*blocks)[1], twisted(c));
  bool swapped = are_equivalent((*blocks)[0], twisted(c)) && are_equivalent((*blocks)[1], twisted(b));
  EXPECT_TRUE(direct || swapped);
}

// The displayed 4x4 for type (d) is the Knoerrer image of (e), so its cokernel
// contains I_E rather than I_D.
TEST(Templates, ThreefoldDisplayOrientation) {
  const auto& tf = get_model("quadric-threefold-cone");
  auto s3 = template_ring("S3");
  for (int l = 1; l <= 2; ++l) {
    auto disp = get_mf("r3-d", l);
    EXPECT_TRUE(are_equivalent(disp, knoerrer_periodicity(get_mf("r1-e", l), "u", "v", s3))) << l;
    auto m = cokernel_module(disp);
    EXPECT_TRUE(hom_basis(tf.module("I_D"), m).empty()) << l;
    auto rep = check_extension<QI>(m, tf.module("I_E"), tf.module("I_D").twisted(1 - l), 10);
    EXPECT_TRUE(rep) << l << ": " << rep.failure;
    auto ext = get_sequence("threefold-ext", l);
    EXPECT_TRUE(certify_sequence(ext, 10)) << l;
  }
}

TEST(Sequences, AllCertify) {
  for (const auto& n : sequence_names()) {
    auto rep = certify_sequence(get_sequence(n, 1), 10);
    EXPECT_TRUE(rep) << n << ": " << rep.failure;
  }
  EXPECT_THROW(get_sequence("scroll-9"), CatalogError);
}

TEST(Sequences, E0SequencesStayOutOfGprime) {
  EXPECT_FALSE(get_sequence("scroll-E0").in_gprime);
  EXPECT_FALSE(get_sequence("veronese-E0").in_gprime);
  EXPECT_TRUE(get_sequence("scroll-1").in_gprime);
}

TEST(E0, ScrollConsistencyWithExtension) {
  const auto& md = get_model("cubic-scroll");
  const auto& e0 = md.module("E0");
  EXPECT_EQ(module_rank(e0), 2);
  // Degree-0 endomorphisms are the scalars, so E0 is indecomposable.
  EXPECT_EQ(hom_basis(e0, e0).size(), 1u);
  // Sequence (1) makes E0 an extension of I_{H-2F}(-1) by I_F(-1).
  auto s = get_sequence("scroll-1");
  for (int d = 0; d <= 10; ++d) EXPECT_EQ(e0.hilbert(d), s.sub.hilbert(d) + s.quot.hilbert(d)) << d;
  auto c1 = c1_of_vector(md.classes, parse_sheaf_vector("E0"));
  auto layers = c1_of_vector(md.classes, parse_sheaf_vector("I_F(-1) + I_{H-2F}(-1)"));
  EXPECT_EQ(c1.coords, layers.coords);
}

TEST(E0, VeroneseSyzygyIsRankTwo) {
  const auto& e0 = get_model("veronese").module("E0");
  EXPECT_EQ(module_rank(e0), 2);
  EXPECT_EQ(hom_basis(e0, e0).size(), 1u);
}

TEST(Patterns, OrientableOnBothSidesAfterNormalizing) {
  const auto& m = get_model("veronese").classes;
  for (const auto& n : resolution_pattern_names()) {
    for (int k : {2, 4}) {
      if (n != "determinantal" && k == 4) continue;
      auto p = get_resolution_pattern(n, k);
      bool plain = is_orientable(m, p.e) && is_orientable(m, p.n);
      auto e = p.e, nn = p.n;
      e.add("I_C");
      nn.add("I_C");
      EXPECT_TRUE(plain || (is_orientable(m, e) && is_orientable(m, nn))) << n;
      EXPECT_EQ(rank_of(m, p.n), rank_of(m, p.e) + 1) << n;
    }
  }
  EXPECT_FALSE(is_orientable(m, get_resolution_pattern("two-points").e));
}

TEST(Patterns, DeterminantalShape) {
  auto p = get_resolution_pattern("determinantal", 4);
  EXPECT_EQ(p.e.count("I_C"), 4);
  EXPECT_EQ(p.n.count("O"), 5);
  EXPECT_EQ(p.e.entries[0].second, -2);
  EXPECT_THROW(get_resolution_pattern("determinantal", 0), CatalogError);
  EXPECT_THROW(get_resolution_pattern("seven-points"), CatalogError);
}

TEST(Rao, HilbertFunctionIsBlockOfOnes) {
  for (int d = 1; d <= 5; ++d) {
    auto m = rao_module(d);
    for (int e = 0; e <= 7; ++e) EXPECT_EQ(m.hilbert(e), e < d ? 1 : 0) << d << " " << e;
  }
  EXPECT_THROW(rao_module(0), CatalogError);
}

TEST(Files, RoundTripAndCount) {
  auto files = catalog_files();
  EXPECT_EQ(files.size(), 50u);
  for (const auto& f : files) {
    if (f.name.ends_with(".mfx"))
      EXPECT_EQ(format_mf(parse_mf<QI>(f.text)), f.text) << f.name;
    else
      EXPECT_EQ(format_module(parse_module<QI>(f.text)), f.text) << f.name;
  }
}

TEST(Files, DataDirectoryMatches) {
  auto rep = check_data_dir(MFX_DATA_DIR);
  EXPECT_TRUE(rep) << rep.failure;
}

TEST(Files, TamperingIsNamed) {
  auto dir = fs::temp_directory_path() / "mfx-tamper-test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto& f : catalog_files()) write_file((dir / f.name).string(), f.text);
  EXPECT_TRUE(check_data_dir(dir.string()));
  write_file((dir / "bgs-iii-l2.mfx").string(), format_mf(twist_mf(get_mf("bgs-iii", 2), 1)));
  auto rep = check_data_dir(dir.string());
  ASSERT_FALSE(rep);
  EXPECT_NE(rep.failure.find("bgs-iii-l2.mfx"), std::string::npos) << rep.failure;
  fs::remove(dir / "rao-d3.mod");
  auto rep2 = check_data_dir(dir.string());
  bool named = false;
  for (const auto& l : rep2.lines) named |= l.find("missing") != std::string::npos && l.find("rao-d3.mod") != std::string::npos;
  EXPECT_TRUE(named);
  fs::remove_all(dir);
}

TEST(Files, DumpByNameOrModel) {
  EXPECT_TRUE(catalog_dump("cone-4x4-l1").has_value());
  EXPECT_TRUE(catalog_dump("bgs-i.mfx").has_value());
  auto all = catalog_dump("cubic-scroll");
  ASSERT_TRUE(all.has_value());
  EXPECT_NE(all->find("cubic-scroll.E0.mod"), std::string::npos);
  EXPECT_FALSE(catalog_dump("nothing-here").has_value());
}

}  // namespace
}  // namespace mfx
