#pragma once

// The ten acceptance criteria as bounded, seeded checks. Shared by the
// selftest verb and the acceptance test binary.

#include "mfx/catalog.hpp"
#include "mfx/catalog_files.hpp"
#include "mfx/kgroup.hpp"
#include "mfx/random_mf.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace mfx {

struct Criterion {
  std::string id;
  std::string name;
  Report report;
  std::string summary;
};

struct AcceptanceOptions {
  unsigned seed = 1;
  std::string data_dir;
};

inline std::string fresh_variable(const PolyRingPtr& ring, const std::string& base) {
  if (!ring->index_of(base)) return base;
  for (int k = 1;; ++k)
    if (!ring->index_of(base + std::to_string(k))) return base + std::to_string(k);
}

struct TemplateInstance {
  std::string name;
  int ell;
  MatrixFactorization<CK> mf;
};

inline std::vector<TemplateInstance> all_templates() {
  std::vector<TemplateInstance> out;
  for (const auto& n : mf_template_names())
    for (int l = 1; l <= (mf_has_ell(n) ? 4 : 1); ++l) out.push_back({n, l, get_mf(n, l)});
  return out;
}

inline std::string tag(const std::string& name, int ell) {
  return mf_has_ell(name) ? name + "[l=" + std::to_string(ell) + "]" : name;
}

namespace acceptance {

inline Criterion ac1() {
  Criterion c{"AC1", "mf-verification", {}, {}};
  int verified = 0, detected = 0, tried = 0;
  for (const auto& t : all_templates()) {
    if (c.report.expect(static_cast<bool>(verify_mf(t.mf)), tag(t.name, t.ell) + " verifies")) ++verified;
    auto tv = Polynomial<CK>::variable(t.mf.ring, "t");
    for (std::size_t i = 0; i < t.mf.size(); ++i)
      for (std::size_t j = 0; j < t.mf.size(); ++j) {
        int d = t.mf.cols[j] - t.mf.rows[i];
        if (d < 0) continue;
        auto bad = t.mf;
        bad.phi[i][j] = bad.phi[i][j] + tv.pow(d);
        ++tried;
        if (c.report.expect(!verify_mf(bad), tag(t.name, t.ell) + " perturbed phi(" + std::to_string(i + 1) + "," +
                                                 std::to_string(j + 1) + ") rejected"))
          ++detected;
      }
  }
  c.summary = std::to_string(verified) + " template instances verify; " + std::to_string(detected) + "/" +
              std::to_string(tried) + " single-entry perturbations detected";
  return c;
}

inline Criterion ac2(unsigned seed) {
  Criterion c{"AC2", "knoerrer-soundness", {}, {}};
  std::vector<std::pair<std::string, MatrixFactorization<CK>>> inputs;
  for (const auto& t : all_templates()) inputs.push_back({tag(t.name, t.ell), t.mf});
  std::mt19937 rng(seed);
  for (int k = 0; k < 100; ++k) inputs.push_back({"random#" + std::to_string(k), random_factorization(rng, k % 2 ? "r1" : "bgs")});
  int ok = 0;
  for (const auto& [name, m] : inputs) {
    bool good = c.report.expect(static_cast<bool>(verify_mf(m)), name + " verifies");
    auto u = fresh_variable(m.ring, "u"), v = fresh_variable(m.ring, "v"), y = fresh_variable(m.ring, "y");
    auto k = knoerrer_periodicity(m, u, v);
    auto uv = Polynomial<CK>::variable(k.ring, u) * Polynomial<CK>::variable(k.ring, v);
    good &= c.report.expect(verify_mf(k) && k.f == m.f.map_to(k.ring) + uv, name + " periodicity image verifies for f+" + u + v);
    auto d = double_branched_cover(m, y);
    auto yy = Polynomial<CK>::variable(d.ring, y).pow(2);
    good &= c.report.expect(verify_mf(d) && d.f == m.f.map_to(d.ring) + yy, name + " double cover verifies for f+" + y + "^2");
    if (good) ++ok;
  }
  c.summary = std::to_string(ok) + "/" + std::to_string(inputs.size()) + " factorizations (catalog plus 100 seeded random)";
  return c;
}

inline Criterion ac3(unsigned seed) {
  Criterion c{"AC3", "split-reconstruction", {}, {}};
  auto s1 = template_ring("S1");
  auto [target, sub] = ab_substitution(s1);
  auto image = [&](const std::string& n, int l) { return change_of_variables(twist_mf(get_mf(n, l), 1), target, sub); };
  auto matches = [&](const std::vector<MatrixFactorization<CK>>& blocks, const MatrixFactorization<CK>& p,
                     const MatrixFactorization<CK>& q) {
    return blocks.size() == 2 && ((are_equivalent(blocks[0], p, seed) && are_equivalent(blocks[1], q, seed)) ||
                                  (are_equivalent(blocks[0], q, seed) && are_equivalent(blocks[1], p, seed)));
  };
  int ok = 0;
  {
    auto dc = double_branched_cover(get_mf("bgs-ii"), "y", s1);
    auto blocks = try_split(dc, target, sub, seed);
    bool diag = blocks && blocks->size() == 2;
    if (diag) {
      auto a = Polynomial<CK>::variable(target, "a"), b = Polynomial<CK>::variable(target, "b");
      std::vector<Polynomial<CK>> phis;
      for (const auto& blk : *blocks) {
        diag &= blk.size() == 1;
        if (blk.size() == 1) phis.push_back(blk.phi[0][0]);
      }
      diag &= phis.size() == 2 && ((phis[0] == a && phis[1] == b) || (phis[0] == b && phis[1] == a));
    }
    bool good = c.report.expect(diag, "double cover of bgs-ii splits into diagonal blocks (a),(b)") &&
                c.report.expect(matches(*blocks, image("r1-b", 1), image("r1-c", 1)), "bgs-ii blocks match r1-b + r1-c");
    if (good) ++ok;
  }
  for (int l = 1; l <= 4; ++l) {
    auto dc = double_branched_cover(get_mf("bgs-iii", l), "y", s1);
    auto blocks = try_split(dc, target, sub, seed);
    std::string at = "bgs-iii[l=" + std::to_string(l) + "]";
    bool good = c.report.expect(blocks && blocks->size() == 2, at + " double cover splits in two") &&
                c.report.expect(matches(*blocks, image("r1-d", l), image("r1-e", l)), at + " blocks match r1-d + r1-e");
    if (good) ++ok;
  }
  c.summary = std::to_string(ok) + "/5 double covers split as expected";
  return c;
}

inline Criterion ac4(unsigned seed) {
  Criterion c{"AC4", "extensions", {}, {}};
  int ok = 0, total = 0;
  for (const auto* n : {"cone-ext", "threefold-ext", "threefold-ext'"})
    for (int l = 1; l <= 4; ++l) {
      auto s = get_sequence(n, l);
      ++total;
      auto r = certify_sequence(s, 12, seed);
      std::string at = std::string(n) + "[l=" + std::to_string(l) + "]";
      if (c.report.expect(r.ok, at + (r.ok ? " certified through degree 12" : ": " + r.failure))) ++ok;
    }
  c.summary = std::to_string(ok) + "/" + std::to_string(total) + " extensions certified (cutoff 12)";
  return c;
}

inline Criterion ac5() {
  Criterion c{"AC5", "exact-sequences", {}, {}};
  int ok = 0, total = 0;
  for (const auto* n : {"quadric-surface-C", "scroll-1", "scroll-2", "scroll-3", "cone-C", "threefold-C"}) {
    auto r = certify_sequence(get_sequence(n), 12);
    ++total;
    if (c.report.expect(r.ok, std::string(n) + (r.ok ? " exact through degree 12" : ": " + r.failure))) ++ok;
  }
  c.summary = std::to_string(ok) + "/" + std::to_string(total) + " sequences exact (cutoff 12)";
  return c;
}

inline Criterion ac6() {
  Criterion c{"AC6", "hilbert-numerics", {}, {}};
  const auto& m = get_model("cubic-scroll");
  const auto& f = m.module("E0");
  bool ok = c.report.expect(f.hilbert(1) == 0, "h0(F(1)) = " + std::to_string(f.hilbert(1)) + ", expected 0");
  ok &= c.report.expect(f.hilbert(2) == 6, "h0(F(2)) = " + std::to_string(f.hilbert(2)) + ", expected 6");
  // L(2) for L = O(-2), I_F(-1), I_{H-F}(-1), I_{H-2F}(-1).
  std::vector<std::pair<std::string, int>> ls = {{"O", -2}, {"I_F", -1}, {"I_{H-F}", -1}, {"I_{H-2F}", -1}};
  std::vector<long> expected = {1, 3, 2, 3};
  std::string got;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    long h = m.module(ls[i].first).twisted(ls[i].second).hilbert(2);
    got += (i ? "," : "") + std::to_string(h);
    ok &= c.report.expect(h == expected[i], "h0(" + ls[i].first + "(" + std::to_string(ls[i].second) + ")(2)) = " +
                                                std::to_string(h) + ", expected " + std::to_string(expected[i]));
  }
  c.summary = "h0(F(1)),h0(F(2)) = " + std::to_string(f.hilbert(1)) + "," + std::to_string(f.hilbert(2)) +
              "; h0(L(2)) = " + got;
  (void)ok;
  return c;
}

inline bool witness_checks(const GroupPresentation& g, const KModel& m, const SheafClassVector& v,
                           const ConditionCResult& r) {
  auto target = class_in_Gprime(g, v);
  target[g.index("O")] -= rank_of(m, v);
  std::vector<long long> sum(target.size(), 0);
  for (std::size_t j = 0; j < r.witness.size(); ++j)
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += r.witness[j] * g.relations[j][i];
  return sum == target;
}

inline Criterion ac7(unsigned seed) {
  Criterion c{"AC7", "condition-C", {}, {}};
  auto check = [&](const std::string& model, const CertifiedGprime& g, const std::string& vec, bool expected) {
    const auto& km = get_model(model).classes;
    auto v = parse_sheaf_vector(vec);
    auto r = check_condition_C(km, g.group, v);
    bool good = r.holds == expected && (!r.holds || witness_checks(g.group, km, v, r));
    c.report.expect(good, model + " {" + vec + "}: condition C " + (r.holds ? "holds (" + r.explanation + ")" : "fails"));
    return good;
  };
  int ok = 0, total = 0;
  auto qs = certified_gprime("quadric-surface", 12, seed);
  auto cone = certified_gprime("quadric-cone-p3", 12, seed);
  auto scroll = certified_gprime("cubic-scroll", 12, seed);
  auto ver = certified_gprime("veronese", 12, seed);
  for (const auto* g : {&qs, &cone, &scroll, &ver}) c.report.absorb(g->report, "G': ");
  total++, ok += check("quadric-surface", qs, "I_L + I_M", true);
  for (int n = -3; n <= 3; ++n) total++, ok += check("quadric-cone-p3", cone, "I_L + I_L(" + std::to_string(n) + ")", true);
  total++, ok += check("veronese", ver, "2*I_C", false);

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> count(0, 3), twist(-2, 2), e0(0, 1);
  const auto& km = get_model("cubic-scroll").classes;
  int scroll_ok = 0;
  for (int k = 0; k < 50; ++k) {
    int hf = count(rng), h2f = count(rng), e = e0(rng), o = count(rng) % 3;
    int f = hf + 2 * h2f + e;
    if (f + hf + h2f + e + o == 0) o = 1;
    SheafClassVector v;
    v.add("I_F", twist(rng), f);
    for (int j = 0; j < hf; ++j) v.add("I_{H-F}", twist(rng));
    for (int j = 0; j < h2f; ++j) v.add("I_{H-2F}", twist(rng));
    for (int j = 0; j < e; ++j) v.add("E0", twist(rng));
    for (int j = 0; j < o; ++j) v.add("O", twist(rng));
    if (!c.report.expect(is_orientable(km, v), "scroll vector " + format_sheaf_vector(v) + " orientable")) continue;
    auto r = check_condition_C(km, scroll.group, v);
    bool good = r.holds && witness_checks(scroll.group, km, v, r);
    if (c.report.expect(good, "scroll {" + format_sheaf_vector(v) + "} reduces to " + std::to_string(rank_of(km, v)) +
                                  "*O, " + r.explanation))
      ++scroll_ok;
  }
  ok += scroll_ok;
  total += 50;
  c.summary = std::to_string(ok) + "/" + std::to_string(total) + " instances as expected (" + std::to_string(scroll_ok) +
              "/50 random orientable scroll vectors with verified witnesses)";
  return c;
}

inline Criterion ac8(unsigned seed) {
  Criterion c{"AC8", "m-invariant", {}, {}};
  const auto& km = get_model("veronese").classes;
  struct Case {
    std::string name;
    int n;
    long expected;
  };
  std::vector<Case> cases = {{"point", 0, 2},       {"two-points", 0, 0},   {"three-general", 0, -2},
                             {"three-collinear", 0, 2}, {"six-points", 0, 4}, {"determinantal", 2, -2},
                             {"determinantal", 4, -4}};
  std::string got;
  int ok = 0;
  for (const auto& cs : cases) {
    auto p = get_resolution_pattern(cs.name, cs.n);
    long m = veronese_m_invariant(km, p.e, p.n);
    std::string at = cs.name + (cs.n ? "(" + std::to_string(cs.n) + ")" : "");
    got += (got.empty() ? "" : " ") + at + "=" + std::to_string(m);
    if (c.report.expect(m == cs.expected && m % 2 == 0,
                        at + ": m = " + std::to_string(m) + ", expected " + std::to_string(cs.expected)))
      ++ok;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, cases.size() - 1);
  std::uniform_int_distribution<int> twist(-3, 3), reps(1, 2);
  int inv = 0;
  for (int k = 0; k < 50; ++k) {
    const auto& cs = cases[pick(rng)];
    auto p = get_resolution_pattern(cs.name, cs.n);
    int b = twist(rng), r = reps(rng);
    auto e = p.e, n = p.n;
    e.add("O", b, r);
    n.add("O", b, r);
    long m = veronese_m_invariant(km, e, n);
    if (c.report.expect(m == cs.expected, cs.name + " with " + std::to_string(r) + "*O(" + std::to_string(b) +
                                              ") appended: m = " + std::to_string(m)))
      ++inv;
  }
  c.summary = got + "; invariant under " + std::to_string(inv) + "/50 common dissocie summands";
  (void)ok;
  return c;
}

inline Criterion ac9() {
  Criterion c{"AC9", "periodic-resolutions", {}, {}};
  int ok = 0, total = 0;
  for (const auto& t : all_templates()) {
    auto r = periodic_resolution_check(t.mf, 4, 10);
    ++total;
    if (c.report.expect(r.ok, tag(t.name, t.ell) + (r.ok ? " periodic resolution exact (4 steps, cutoff 10)" : ": " + r.failure)))
      ++ok;
  }
  std::string rao;
  for (int d = 1; d <= 5; ++d) {
    auto m = rao_module(d);
    bool good = true;
    std::string hf;
    for (int e = 0; e <= d + 3; ++e) {
      long h = m.hilbert(e);
      good &= h == (e < d ? 1 : 0);
      hf += (e ? "," : "") + std::to_string(h);
    }
    if (c.report.expect(good, "rao module M_" + std::to_string(d) + " HF = " + hf)) ++ok;
    ++total;
  }
  c.summary = std::to_string(ok) + "/" + std::to_string(total) + " (catalog cokernels and Rao modules d=1..5)";
  return c;
}

inline Criterion ac10(const std::string& data_dir) {
  Criterion c{"AC10", "round-trip", {}, {}};
  int ok = 0, total = 0;
  for (const auto& f : catalog_files()) {
    ++total;
    std::string canonical;
    try {
      if (f.name.ends_with(".mfx"))
        canonical = format_mf(parse_mf<CK>(f.text));
      else
        canonical = format_module(parse_module<CK>(f.text));
    } catch (const std::exception& e) {
      c.report.fail(f.name + ": " + e.what());
      continue;
    }
    if (c.report.expect(canonical == f.text, f.name + " format(parse(text)) is byte-identical")) ++ok;
  }
  if (!data_dir.empty()) c.report.absorb(check_data_dir(data_dir));
  c.summary = std::to_string(ok) + "/" + std::to_string(total) + " catalog files round-trip" +
              (data_dir.empty() ? "" : "; data directory checked");
  return c;
}

}  // namespace acceptance

inline std::vector<std::string> criterion_titles() {
  return {"mf-verification", "knoerrer-soundness", "split-reconstruction", "extensions",          "exact-sequences",
          "hilbert-numerics", "condition-C",       "m-invariant",          "periodic-resolutions", "round-trip"};
}

/// Runs criterion `k` (1-based).
inline Criterion run_criterion(int k, const AcceptanceOptions& opt) {
  Criterion c;
  try {
    switch (k) {
      case 1: return acceptance::ac1();
      case 2: return acceptance::ac2(opt.seed);
      case 3: return acceptance::ac3(opt.seed);
      case 4: return acceptance::ac4(opt.seed);
      case 5: return acceptance::ac5();
      case 6: return acceptance::ac6();
      case 7: return acceptance::ac7(opt.seed);
      case 8: return acceptance::ac8(opt.seed);
      case 9: return acceptance::ac9();
      case 10: return acceptance::ac10(opt.data_dir);
      default: throw std::out_of_range("no criterion " + std::to_string(k));
    }
  } catch (const std::out_of_range&) {
    throw;
  } catch (const std::exception& e) {
    c.id = "AC" + std::to_string(k);
    c.name = criterion_titles()[k - 1];
    c.report.fail(std::string("exception: ") + e.what());
    c.summary = c.report.failure;
  }
  return c;
}

inline std::string criterion_line(const Criterion& c) {
  return c.id + " " + (c.report.ok ? "PASS" : "FAIL") + " " + c.name + ": " +
         (c.report.ok ? c.summary : c.report.failure);
}

}  // namespace mfx
