#include "mfx/catalog.hpp"
#include "mfx/mfx_io.hpp"
#include "linear_oracle.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace mfx {
namespace {

using testing::P;
using testing::QI;

testing::DegreeOracle<QI> oracle_for(const GradedRing<QI>& r) { return {r.ambient(), r.ideal()}; }

PolyMatrix<QI> identity(const PolyRingPtr& r, std::size_t n) {
  return identity_matrix<QI>(r, n, Polynomial<QI>::constant(r, QI(1)));
}

struct Case {
  std::string model, label;
  int top;
};

TEST(HilbertFunction, MatchesLinearAlgebraOracle) {
  std::vector<Case> cases = {{"quadric-surface", "I_L", 6}, {"quadric-surface", "I_M", 6},
                             {"quadric-cone-p3", "I_L", 6}, {"quadric-threefold-cone", "I_D", 5},
                             {"quadric-threefold-cone", "I_E", 5}, {"cubic-scroll", "I_F", 5},
                             {"cubic-scroll", "I_{H-F}", 5}, {"cubic-scroll", "I_{H-2F}", 5},
                             {"cubic-scroll", "E0", 4}, {"veronese", "I_C", 4},
                             {"veronese", "E0", 3}};
  for (const auto& c : cases) {
    const auto& md = get_model(c.model);
    const auto& m = md.module(c.label);
    auto o = oracle_for(md.ring);
    for (int d = 0; d <= c.top; ++d)
      EXPECT_EQ(m.hilbert(d), o.module_dim(m.gens(), m.relations(), d)) << c.model << " " << c.label << " d=" << d;
  }
}

TEST(HilbertFunction, ScrollRankOneValues) {
  const auto& md = get_model("cubic-scroll");
  EXPECT_EQ(md.module("O").twisted(-2).hilbert(2), 1);
  EXPECT_EQ(md.module("I_F").twisted(-1).hilbert(2), 3);
  EXPECT_EQ(md.module("I_{H-F}").twisted(-1).hilbert(2), 2);
  EXPECT_EQ(md.module("I_{H-2F}").twisted(-1).hilbert(2), 3);
}

TEST(HilbertFunction, ScrollExtensionModule) {
  const auto& f = get_model("cubic-scroll").module("E0");
  EXPECT_EQ(f.hilbert(1), 0);
  EXPECT_EQ(f.hilbert(2), 6);
}

TEST(HilbertFunction, ZeroModule) {
  const auto& md = get_model("quadric-cone-p3");
  GradedModulePresentation<QI> z(md.ring, {0, 1}, identity(md.ring.ambient(), 2));
  for (int d = 0; d <= 8; ++d) EXPECT_EQ(z.hilbert(d), 0);
}

TEST(HilbertFunction, DirectSumAdds) {
  const auto& md = get_model("cubic-scroll");
  auto a = md.module("I_F"), b = md.module("I_{H-2F}").twisted(2);
  auto s = direct_sum(a, b);
  for (int d = 0; d <= 12; ++d) EXPECT_EQ(s.hilbert(d), a.hilbert(d) + b.hilbert(d)) << d;
}

TEST(Syzygy, ScrollFiberGivesRankTwo) {
  const auto& md = get_model("cubic-scroll");
  auto syz = syzygy_module(md.module("I_F"));
  EXPECT_EQ(module_rank(syz.module), 2);
  for (int d : syz.module.gens()) EXPECT_EQ(d, 2);
  const auto& e0 = md.module("E0");
  for (int d = 0; d <= 10; ++d) EXPECT_EQ(syz.module.hilbert(d), e0.hilbert(d)) << d;
}

TEST(Syzygy, VeroneseConicGivesRankTwo) {
  const auto& md = get_model("veronese");
  auto syz = syzygy_module(md.module("I_C"));
  EXPECT_EQ(module_rank(syz.module), 2);
  for (int d : syz.module.gens()) EXPECT_EQ(d, 2);
}

TEST(Syzygy, FreeModuleHasNone) {
  const auto& md = get_model("quadric-surface");
  auto syz = syzygy_module(free_module(md.ring, {0, 1}));
  EXPECT_EQ(syz.module.num_gens(), 0u);
}

TEST(Syzygy, MiddleHomologyVanishes) {
  for (const auto& [model, label] : std::vector<std::pair<std::string, std::string>>{
           {"cubic-scroll", "I_{H-2F}"}, {"quadric-threefold-cone", "I_D"}, {"veronese", "I_C"}}) {
    const auto& m = get_model(model).module(label);
    auto syz = syzygy_module(m);
    auto cover = free_module(m.ring(), m.gens());
    GradedModuleMap<QI> proj{cover, m, identity(m.ambient(), m.num_gens()), 0};
    EXPECT_TRUE(is_sequence_exact(syz.inclusion, proj, 12)) << model << " " << label;
  }
}

TEST(SequenceExact, QuadricSurfaceRulings) {
  auto s = get_sequence("quadric-surface-C");
  GradedModuleMap<QI> f{s.sub, s.middle, *s.first, 0}, g{s.middle, s.quot, *s.second, 0};
  auto rep = is_sequence_exact(f, g, 10);
  EXPECT_TRUE(rep) << rep.failure;
}

TEST(SequenceExact, IdentityWithZeroKernel) {
  const auto& md = get_model("quadric-cone-p3");
  const auto& m = md.module("I_L");
  auto zero = free_module(md.ring, {});
  GradedModuleMap<QI> f{zero, m, PolyMatrix<QI>(m.num_gens()), 0};
  GradedModuleMap<QI> g{m, m, identity(m.ambient(), m.num_gens()), 0};
  EXPECT_TRUE(is_sequence_exact(f, g, 10));
}

TEST(SequenceExact, ScrollFiberSequence) {
  auto s = get_sequence("scroll-2");
  GradedModuleMap<QI> f{s.sub, s.middle, *s.first, 0}, g{s.middle, s.quot, *s.second, 0};
  EXPECT_TRUE(is_sequence_exact(f, g, 10));
}

TEST(SequenceExact, DimensionsAddByOracle) {
  for (const auto* n : {"quadric-surface-C", "scroll-2", "scroll-3", "threefold-C"}) {
    auto s = get_sequence(n);
    auto o = oracle_for(get_model(s.model).ring);
    for (int d = 0; d <= 4; ++d) {
      long a = o.module_dim(s.sub.gens(), s.sub.relations(), d);
      long e = o.module_dim(s.middle.gens(), s.middle.relations(), d);
      long b = o.module_dim(s.quot.gens(), s.quot.relations(), d);
      EXPECT_EQ(e, a + b) << n << " d=" << d;
    }
  }
}

TEST(SequenceExact, ReportsFailingCondition) {
  auto s = get_sequence("quadric-surface-C");
  auto r = s.middle.ambient();
  GradedModuleMap<QI> f{s.sub, s.middle, *s.first, 0};
  GradedModuleMap<QI> swapped{s.middle, s.quot, {{P<QI>(r, "0"), P<QI>(r, "1")}, {P<QI>(r, "1"), P<QI>(r, "0")}}, 0};
  auto rep = is_sequence_exact(f, swapped, 10);
  EXPECT_FALSE(rep);

  auto zero_first = *s.first;
  for (auto& row : zero_first)
    for (auto& p : row) p = Polynomial<QI>(r);
  GradedModuleMap<QI> z{s.sub, s.middle, zero_first, 0}, g{s.middle, s.quot, *s.second, 0};
  auto rep2 = is_sequence_exact(z, g, 10);
  ASSERT_FALSE(rep2);
  EXPECT_NE(rep2.failure.find("injective"), std::string::npos) << rep2.failure;
}

TEST(MapCheck, RelationMustMapToZero) {
  const auto& md = get_model("quadric-surface");
  const auto& il = md.module("I_L");
  auto r = md.ring.ambient();
  GradedModuleMap<QI> bad{il, md.module("O"), {{P<QI>(r, "x"), P<QI>(r, "x")}}, 0};
  auto rep = check_map(bad);
  ASSERT_FALSE(rep);
  EXPECT_NE(rep.failure.find("relation"), std::string::npos);
  GradedModuleMap<QI> wrong_degree{il, md.module("O"), {{P<QI>(r, "x^2"), P<QI>(r, "y")}}, 0};
  EXPECT_FALSE(check_map(wrong_degree));
}

TEST(Extension, ConeIdealsStack) {
  const auto& md = get_model("quadric-cone-p3");
  for (int l = 1; l <= 2; ++l) {
    auto m = cokernel_module(get_mf("cone-4x4", l));
    auto rep = check_extension<QI>(m, md.module("I_L"), md.module("I_L").twisted(1 - l), 12);
    EXPECT_TRUE(rep) << l << ": " << rep.failure;
    EXPECT_TRUE(rep.embedding.has_value());
    EXPECT_TRUE(rep.surjection.has_value());
  }
}

TEST(Extension, ThreefoldPlanes) {
  auto s = get_sequence("threefold-ext", 1);
  auto rep = certify_sequence(s, 12);
  EXPECT_TRUE(rep) << rep.failure;
}

TEST(Extension, SplitCase) {
  const auto& md = get_model("cubic-scroll");
  auto a = md.module("I_F"), b = md.module("I_{H-F}").twisted(1);
  auto rep = check_extension<QI>(direct_sum(a, b), a, b, 10);
  EXPECT_TRUE(rep) << rep.failure;
}

TEST(Extension, SuppliedEmbeddingIsChecked) {
  const auto& md = get_model("cubic-scroll");
  auto a = md.module("I_F"), b = md.module("I_{H-F}").twisted(1);
  auto r = md.ring.ambient();
  auto inc = zero_matrix<QI>(r, a.num_gens() + b.num_gens(), a.num_gens());
  for (std::size_t i = 0; i < a.num_gens(); ++i) inc[i][i] = Polynomial<QI>::constant(r, QI(1));
  EXPECT_TRUE(check_extension<QI>(direct_sum(a, b), a, b, 8, inc));
  auto zero = zero_matrix<QI>(r, a.num_gens() + b.num_gens(), a.num_gens());
  EXPECT_FALSE(check_extension<QI>(direct_sum(a, b), a, b, 8, zero));
}

TEST(Extension, WrongQuotientFails) {
  const auto& md = get_model("quadric-cone-p3");
  auto m = cokernel_module(get_mf("cone-4x4", 2));
  EXPECT_FALSE(check_extension<QI>(m, md.module("I_L"), md.module("I_L"), 10));
}

TEST(ModuleFormat, RoundTrip) {
  for (const auto& name : model_names())
    for (const auto& [label, m] : get_model(name).modules) {
      auto text = format_module(m);
      auto back = parse_module<QI>(text);
      EXPECT_EQ(format_module(back), text) << name << " " << label;
      for (int d = 0; d <= 3; ++d) EXPECT_EQ(back.hilbert(d), m.hilbert(d));
    }
}

TEST(ModuleFormat, RaggedRelationsRejected) {
  auto text = format_module(get_model("quadric-surface").module("I_L"));
  auto pos = text.rfind('\n', text.size() - 2);
  text = text.substr(0, pos + 1) + "x\n";
  EXPECT_ANY_THROW(parse_module<QI>(text));
}

}  // namespace
}  // namespace mfx
