#pragma once

// Coordinate-explicit models: rings, rank-one modules, factorization
// templates, sequences and resolution patterns. Everything lives over Q(i).

#include "mfx/kgroup.hpp"
#include "mfx/matfac.hpp"
#include "mfx/modres.hpp"
#include "mfx/poly_io.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace mfx {

using CK = GaussianRational;

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ModelDescriptor {
  std::string name;
  GradedRing<CK> ring;
  std::map<std::string, GradedModulePresentation<CK>> modules;  // untwisted, keyed by label
  KModel classes;
  std::vector<std::string> sequences;
  std::vector<std::string> mf_templates;

  const GradedModulePresentation<CK>& module(const std::string& label) const {
    auto it = modules.find(label);
    if (it == modules.end()) throw CatalogError("model " + name + " has no module " + label);
    return it->second;
  }
};

struct SequenceInstance {
  std::string name;
  std::string model;
  int ell = 0;  // 0 when the sequence has no parameter
  SequenceClass classes;
  GradedModulePresentation<CK> sub, middle, quot;
  std::optional<PolyMatrix<CK>> first, second;  // explicit maps; absent for extensions
  bool in_gprime = true;
};

namespace catalog_detail {

inline GradedRing<CK> ring(std::vector<std::string> vars, const std::vector<std::string>& ideal) {
  auto s = make_poly_ring(std::move(vars));
  std::vector<Polynomial<CK>> gens;
  for (const auto& g : ideal) gens.push_back(parse_polynomial<CK>(s, g));
  return GradedRing<CK>(s, std::move(gens));
}

// Parses text in which a and b stand for x + iy and x - iy when the ring has x, y but no a, b.
inline Polynomial<CK> poly(const PolyRingPtr& r, const std::string& text) {
  if (!r->index_of("x") || !r->index_of("y") || r->index_of("a") || r->index_of("b"))
    return parse_polynomial<CK>(r, text);
  auto names = r->names();
  names.push_back("a");
  names.push_back("b");
  auto aux = make_poly_ring(names);
  std::vector<Polynomial<CK>> images;
  for (int i = 0; i < r->nvars(); ++i) images.push_back(Polynomial<CK>::variable(r, i));
  images.push_back(parse_polynomial<CK>(r, "x + i*y"));
  images.push_back(parse_polynomial<CK>(r, "x - i*y"));
  return parse_polynomial<CK>(aux, text).substitute(images);
}

inline PolyMatrix<CK> matrix(const PolyRingPtr& r, const std::vector<std::vector<std::string>>& rows) {
  PolyMatrix<CK> m;
  for (const auto& row : rows) {
    std::vector<Polynomial<CK>> out;
    for (const auto& e : row) out.push_back(poly(r, e));
    m.push_back(std::move(out));
  }
  return m;
}

inline GradedModulePresentation<CK> ideal(const GradedRing<CK>& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial<CK>> ps;
  for (const auto& g : gens) ps.push_back(poly(r.ambient(), g));
  return ideal_module(r, ps).module;
}

inline KModel::Label label(std::string name, int rank, std::vector<long long> c1) {
  return {std::move(name), rank, std::move(c1)};
}

inline std::string subst(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size())) s.replace(p, from.size(), to);
  return s;
}

// Scroll rank-two module E0 inside O(-1)^3 mapping onto I_F = (x0,x1,x3).
inline std::vector<std::vector<std::string>> scroll_e0_columns() {
  return {{"x1", "-x0", "0"}, {"x3", "0", "-x0"}, {"0", "x3", "-x1"},
          {"x2", "-x1", "0"}, {"x4", "0", "-x1"}, {"0", "x4", "-x2"}};
}

inline constexpr int max_ell = 4;

}  // namespace catalog_detail

inline const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names = {"quadric-surface", "quadric-cone-p3", "quadric-threefold-cone",
                                                 "cubic-scroll", "veronese"};
  return names;
}

inline const std::vector<std::string>& mf_template_names() {
  static const std::vector<std::string> names = {"bgs-i", "bgs-ii", "bgs-iii", "cone-4x4", "r1-a", "r1-b",
                                                 "r1-c",  "r1-d",   "r1-e",    "r3-d",     "r3-e"};
  return names;
}

inline bool mf_has_ell(const std::string& name) {
  return name == "bgs-iii" || name == "cone-4x4" || name == "r1-d" || name == "r1-e" || name == "r3-d" ||
         name == "r3-e";
}

namespace catalog_detail {

inline ModelDescriptor build_model(const std::string& name) {
  ModelDescriptor m;
  m.name = name;
  auto& k = m.classes;
  k.name = name;
  if (name == "quadric-surface") {
    m.ring = ring({"x", "y", "z", "w"}, {"x*w - y*z"});
    m.modules["I_L"] = ideal(m.ring, {"x", "y"});
    m.modules["I_M"] = ideal(m.ring, {"x", "z"});
    k.basis = {"L", "M"};
    k.hyperplane = {1, 1};
    k.labels = {label("O", 1, {0, 0}), label("I_L", 1, {-1, 0}), label("I_M", 1, {0, -1})};
    m.sequences = {"quadric-surface-C"};
  } else if (name == "quadric-cone-p3") {
    m.ring = ring({"x", "u", "v", "t"}, {"x^2 + u*v"});
    m.modules["I_L"] = ideal(m.ring, {"x", "u"});
    k.basis = {"L"};
    k.hyperplane = {2};
    k.labels = {label("O", 1, {0}), label("I_L", 1, {-1})};
    // E_l: I_L + I_L(1-l)
    for (int l = 1; l <= max_ell; ++l) k.labels.push_back(label("E_" + std::to_string(l), 2, {-2LL * l}));
    m.sequences = {"cone-C", "cone-ext"};
    m.mf_templates = {"bgs-i", "bgs-ii", "bgs-iii", "cone-4x4"};
  } else if (name == "quadric-threefold-cone") {
    m.ring = ring({"x", "y", "u", "v", "t"}, {"x^2 + y^2 + u*v"});
    m.modules["I_D"] = ideal(m.ring, {"a", "u"});
    m.modules["I_E"] = ideal(m.ring, {"a", "v"});
    k.basis = {"D", "E"};
    k.hyperplane = {1, 1};
    k.labels = {label("O", 1, {0, 0}), label("I_D", 1, {-1, 0}), label("I_E", 1, {0, -1})};
    for (int l = 1; l <= max_ell; ++l) {
      k.labels.push_back(label("E_" + std::to_string(l), 2, {-l, -l}));
      k.labels.push_back(label("E'_" + std::to_string(l), 2, {-l, -l}));
    }
    m.sequences = {"threefold-C", "threefold-ext", "threefold-ext'"};
    m.mf_templates = {"r1-a", "r1-b", "r1-c", "r1-d", "r1-e", "r3-d", "r3-e"};
  } else if (name == "cubic-scroll") {
    m.ring = ring({"x0", "x1", "x2", "x3", "x4"}, {"x0*x2 - x1^2", "x0*x4 - x1*x3", "x1*x4 - x2*x3"});
    m.modules["I_F"] = ideal(m.ring, {"x0", "x1", "x3"});
    m.modules["I_{H-F}"] = ideal(m.ring, {"x3", "x4"});
    m.modules["I_{H-2F}"] = ideal(m.ring, {"x0", "x1", "x2"});
    std::vector<std::vector<Polynomial<CK>>> cols;
    for (const auto& c : scroll_e0_columns()) cols.push_back(matrix(m.ring.ambient(), {c})[0]);
    m.modules["E0"] = submodule_presentation(m.ring, {1, 1, 1}, cols).module;
    k.basis = {"H", "F"};
    k.hyperplane = {1, 0};
    k.labels = {label("O", 1, {0, 0}), label("I_F", 1, {0, -1}), label("I_{H-F}", 1, {-1, 1}),
                label("I_{H-2F}", 1, {-1, 2}), label("E0", 2, {-3, 1})};
    m.sequences = {"scroll-1", "scroll-2", "scroll-3", "scroll-E0"};
  } else if (name == "veronese") {
    m.ring = ring({"z00", "z01", "z02", "z11", "z12", "z22"},
                  {"z00*z11 - z01^2", "z00*z12 - z01*z02", "z00*z22 - z02^2", "z01*z12 - z02*z11",
                   "z01*z22 - z02*z12", "z11*z22 - z12^2"});
    m.modules["I_C"] = ideal(m.ring, {"z00", "z01", "z02"});
    m.modules["E0"] = syzygy_module(m.module("I_C")).module;
    k.basis = {"C"};
    k.hyperplane = {2};
    k.labels = {label("O", 1, {0}), label("I_C", 1, {-1})};
    m.sequences = {"veronese-E0"};
  } else {
    throw CatalogError("unknown model '" + name + "'");
  }
  m.modules["O"] = free_module(m.ring, {0});
  return m;
}

}  // namespace catalog_detail

/// Models are built once and shared; descriptors are immutable afterwards.
inline const ModelDescriptor& get_model(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<ModelDescriptor>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[name];
  if (!slot) {
    try {
      slot = std::make_unique<ModelDescriptor>(catalog_detail::build_model(name));
    } catch (...) {
      cache.erase(name);
      throw;
    }
  }
  return *slot;
}

// ---------------------------------------------------------------------------
// Factorization templates.

/// Polynomial rings of the templates: S = k[x,t], S1 = k[x,y,t], S2 = k[x,u,v,t], S3 = k[x,y,u,v,t].
inline PolyRingPtr template_ring(const std::string& which) {
  static const PolyRingPtr s = make_poly_ring({"x", "t"});
  static const PolyRingPtr s1 = make_poly_ring({"x", "y", "t"});
  static const PolyRingPtr s2 = make_poly_ring({"x", "u", "v", "t"});
  static const PolyRingPtr s3 = make_poly_ring({"x", "y", "u", "v", "t"});
  if (which == "S") return s;
  if (which == "S1") return s1;
  if (which == "S2") return s2;
  if (which == "S3") return s3;
  throw CatalogError("unknown template ring " + which);
}

/// The substitution x = (a+b)/2, y = (a-b)/(2i) from k[x,y,...] to k[a,b,...].
inline std::pair<PolyRingPtr, std::map<std::string, Polynomial<CK>>> ab_substitution(const PolyRingPtr& src) {
  std::vector<std::string> names;
  for (int i = 0; i < src->nvars(); ++i) {
    auto n = src->names()[i];
    names.push_back(n == "x" ? "a" : n == "y" ? "b" : n);
  }
  auto target = make_poly_ring(names);
  std::map<std::string, Polynomial<CK>> sub;
  sub.emplace("x", parse_polynomial<CK>(target, "1/2*a + 1/2*b"));
  sub.emplace("y", parse_polynomial<CK>(target, "(-1/2i)*a + (1/2i)*b"));
  return {target, sub};
}

inline MatrixFactorization<CK> get_mf(const std::string& name, int ell = 1) {
  using catalog_detail::matrix;
  using catalog_detail::subst;
  if (mf_has_ell(name)) {
    if (ell < 1) throw CatalogError("invalid l = " + std::to_string(ell) + " for " + name + " (need l >= 1)");
  } else if (ell != 1) {
    throw CatalogError(name + " takes no l parameter");
  }
  std::string tl = "t^" + std::to_string(ell);
  auto T = [&](std::vector<std::vector<std::string>> rows) {
    for (auto& r : rows)
      for (auto& e : r) e = subst(e, "T", tl);
    return rows;
  };

  MatrixFactorization<CK> m;
  std::vector<std::vector<std::string>> phi, psi;
  std::string f;
  if (name == "bgs-i" || name == "bgs-ii" || name == "bgs-iii") {
    m.ring = template_ring("S");
    f = "x^2";
    if (name == "bgs-i") {
      phi = {{"x^2"}}, psi = {{"1"}};
      m.rows = {0}, m.cols = {2};
    } else if (name == "bgs-ii") {
      phi = psi = {{"x"}};
      m.rows = {0}, m.cols = {1};
    } else {
      phi = psi = T({{"x", "T"}, {"0", "-x"}});
      m.rows = {0, ell - 1}, m.cols = {1, ell};
    }
  } else if (name == "cone-4x4") {
    m.ring = template_ring("S2");
    f = "x^2 + u*v";
    phi = T({{"u", "0", "x", "T"}, {"0", "u", "0", "-x"}, {"x", "T", "-v", "0"}, {"0", "-x", "0", "-v"}});
    psi = T({{"v", "0", "x", "T"}, {"0", "v", "0", "-x"}, {"x", "T", "-u", "0"}, {"0", "-x", "0", "-u"}});
    m.rows = {1, ell, 1, ell}, m.cols = {2, ell + 1, 2, ell + 1};
  } else if (name.rfind("r1-", 0) == 0) {
    m.ring = template_ring("S1");
    f = "x^2 + y^2";
    if (name == "r1-a") {
      phi = {{"x^2 + y^2"}}, psi = {{"1"}};
      m.rows = {0}, m.cols = {2};
    } else if (name == "r1-b" || name == "r1-c") {
      phi = {{name == "r1-b" ? "a" : "b"}};
      psi = {{name == "r1-b" ? "b" : "a"}};
      m.rows = {0}, m.cols = {1};
    } else if (name == "r1-d") {
      phi = T({{"a", "-T"}, {"0", "b"}});
      psi = T({{"b", "T"}, {"0", "a"}});
      m.rows = {0, ell - 1}, m.cols = {1, ell};
    } else if (name == "r1-e") {
      phi = T({{"b", "-T"}, {"0", "a"}});
      psi = T({{"a", "T"}, {"0", "b"}});
      m.rows = {0, ell - 1}, m.cols = {1, ell};
    } else {
      throw CatalogError("unknown factorization template '" + name + "'");
    }
  } else if (name == "r3-d" || name == "r3-e") {
    m.ring = template_ring("S3");
    f = "x^2 + y^2 + u*v";
    std::string p = name == "r3-d" ? "a" : "b", q = name == "r3-d" ? "b" : "a";
    auto fill = [&](std::vector<std::vector<std::string>> rows) {
      for (auto& r : rows)
        for (auto& e : r) e = subst(subst(e, "P", p), "Q", q);
      return T(rows);
    };
    phi = fill({{"u", "0", "P", "-T"}, {"0", "u", "0", "Q"}, {"Q", "T", "-v", "0"}, {"0", "P", "0", "-v"}});
    psi = fill({{"v", "0", "P", "-T"}, {"0", "v", "0", "Q"}, {"Q", "T", "-u", "0"}, {"0", "P", "0", "-u"}});
    m.rows = {1, ell, 1, ell}, m.cols = {2, ell + 1, 2, ell + 1};
  } else {
    throw CatalogError("unknown factorization template '" + name + "'");
  }
  m.f = catalog_detail::poly(m.ring, f);
  m.phi = matrix(m.ring, phi);
  m.psi = matrix(m.ring, psi);
  auto rep = verify_mf(m);
  if (!rep) throw CatalogError("template " + name + " failed verification: " + rep.failure);
  return m;
}

/// File stem used for a template in the data directory.
inline std::string mf_file_stem(const std::string& name, int ell) {
  return mf_has_ell(name) ? name + "-l" + std::to_string(ell) : name;
}

// ---------------------------------------------------------------------------
// Sequences.

inline std::vector<std::string> sequence_names() {
  std::vector<std::string> out;
  for (const auto& m : model_names())
    for (const auto& s : get_model(m).sequences) out.push_back(s);
  return out;
}

inline bool sequence_has_ell(const std::string& name) {
  return name == "cone-ext" || name == "threefold-ext" || name == "threefold-ext'";
}

inline SequenceInstance get_sequence(const std::string& name, int ell = 1) {
  using catalog_detail::matrix;
  SequenceInstance s;
  s.name = name;
  s.ell = sequence_has_ell(name) ? ell : 0;
  if (sequence_has_ell(name) && ell < 1) throw CatalogError("invalid l for " + name);
  auto set_classes = [&](const std::string& a, const std::string& e, const std::string& b) {
    s.classes = {name, parse_sheaf_vector(a), parse_sheaf_vector(e), parse_sheaf_vector(b)};
  };
  auto lname = [&](const std::string& base) { return base + "_" + std::to_string(ell); };
  auto tw = std::to_string(1 - ell);

  if (name == "quadric-surface-C") {
    const auto& md = get_model(s.model = "quadric-surface");
    auto r = md.ring.ambient();
    s.sub = md.module("I_L");
    s.middle = free_module(md.ring, {0, 0});
    s.quot = md.module("I_M").twisted(1);
    s.first = matrix(r, {{"z", "w"}, {"-x", "-y"}});
    s.second = matrix(r, {{"1", "0"}, {"0", "1"}});
    set_classes("I_L", "2*O", "I_M(1)");
  } else if (name == "cone-C") {
    const auto& md = get_model(s.model = "quadric-cone-p3");
    auto r = md.ring.ambient();
    s.sub = md.module("I_L");
    s.middle = free_module(md.ring, {0, 0});
    s.quot = md.module("I_L").twisted(1);
    s.first = matrix(r, {{"x", "u"}, {"v", "-x"}});
    s.second = matrix(r, {{"1", "0"}, {"0", "1"}});
    set_classes("I_L", "2*O", "I_L(1)");
  } else if (name == "threefold-C") {
    const auto& md = get_model(s.model = "quadric-threefold-cone");
    auto r = md.ring.ambient();
    s.sub = md.module("I_D");
    s.middle = free_module(md.ring, {0, 0});
    s.quot = md.module("I_E").twisted(1);
    s.first = matrix(r, {{"v", "-b"}, {"-a", "-u"}});
    s.second = matrix(r, {{"1", "0"}, {"0", "1"}});
    set_classes("I_D", "2*O", "I_E(1)");
  } else if (name == "scroll-1") {
    const auto& md = get_model(s.model = "cubic-scroll");
    auto r = md.ring.ambient();
    s.sub = md.module("I_F").twisted(-1);
    s.middle = md.module("E0");
    s.quot = md.module("I_{H-2F}").twisted(-1);
    // x0 -> k01, x1 -> r1, x3 -> r2 - k13 in the generator order of E0.
    s.first = matrix(r, {{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "-1"},
                         {"0", "1", "0"}, {"0", "0", "1"},  {"0", "0", "0"}});
    s.second = matrix(r, {{"0", "1", "0", "0", "0", "0"}, {"0", "0", "1", "0", "1", "0"},
                          {"0", "0", "0", "0", "0", "1"}});
    set_classes("I_F(-1)", "E0", "I_{H-2F}(-1)");
  } else if (name == "scroll-2") {
    const auto& md = get_model(s.model = "cubic-scroll");
    auto r = md.ring.ambient();
    s.sub = md.module("I_F");
    s.middle = free_module(md.ring, {0, 0});
    s.quot = md.module("I_{H-F}").twisted(1);
    s.first = matrix(r, {{"x1", "x2", "x4"}, {"-x0", "-x1", "-x3"}});
    s.second = matrix(r, {{"1", "0"}, {"0", "1"}});
    set_classes("I_F", "2*O", "I_{H-F}(1)");
  } else if (name == "scroll-3") {
    const auto& md = get_model(s.model = "cubic-scroll");
    auto r = md.ring.ambient();
    s.sub = md.module("I_F");
    s.middle = direct_sum(md.module("O"), md.module("I_{H-F}").twisted(1));
    s.quot = md.module("I_{H-2F}").twisted(1);
    s.first = matrix(r, {{"x0", "x1", "x3"}, {"-x2", "0", "0"}, {"0", "-x2", "-x4"}});
    s.second = matrix(r, {{"0", "1", "0"}, {"0", "0", "1"}, {"1", "0", "0"}});
    set_classes("I_F", "O + I_{H-F}(1)", "I_{H-2F}(1)");
  } else if (name == "scroll-E0" || name == "veronese-E0") {
    bool scroll = name == "scroll-E0";
    const auto& md = get_model(s.model = scroll ? "cubic-scroll" : "veronese");
    auto r = md.ring.ambient();
    s.sub = md.module("E0");
    s.middle = free_module(md.ring, {1, 1, 1});
    s.quot = md.module(scroll ? "I_F" : "I_C");
    if (scroll) {
      std::vector<std::vector<std::string>> rows(3);
      for (const auto& c : catalog_detail::scroll_e0_columns())
        for (int i = 0; i < 3; ++i) rows[i].push_back(c[i]);
      s.first = matrix(r, rows);
    } else {
      s.first = syzygy_module(md.module("I_C")).inclusion.matrix;
    }
    s.second = matrix(r, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
    s.in_gprime = false;
    s.classes = {name, parse_sheaf_vector("E0"), {}, parse_sheaf_vector(scroll ? "I_F" : "I_C")};
    s.classes.middle.add("O", -1, 3);
  } else if (name == "cone-ext") {
    const auto& md = get_model(s.model = "quadric-cone-p3");
    s.sub = md.module("I_L");
    s.middle = cokernel_module(get_mf("cone-4x4", ell));
    s.quot = md.module("I_L").twisted(1 - ell);
    set_classes("I_L", lname("E"), "I_L(" + tw + ")");
  } else if (name == "threefold-ext" || name == "threefold-ext'") {
    bool plain = name == "threefold-ext";
    const auto& md = get_model(s.model = "quadric-threefold-cone");
    s.sub = md.module(plain ? "I_D" : "I_E");
    // M_l is the Knoerrer image of type (d); the displayed 4x4 for (d) is the image of (e) up to sign.
    s.middle = cokernel_module(knoerrer_periodicity(get_mf(plain ? "r1-d" : "r1-e", ell), "u", "v", template_ring("S3")));
    s.quot = md.module(plain ? "I_E" : "I_D").twisted(1 - ell);
    set_classes(plain ? "I_D" : "I_E", lname(plain ? "E" : "E'"), std::string(plain ? "I_E" : "I_D") + "(" + tw + ")");
  } else {
    throw CatalogError("unknown sequence '" + name + "'");
  }
  return s;
}

/// Bounded certificate for a catalog sequence: explicit maps go through
/// is_sequence_exact, extensions through check_extension.
inline Report certify_sequence(const SequenceInstance& s, int cutoff, unsigned seed = 1) {
  if (s.first && s.second) {
    GradedModuleMap<CK> f{s.sub, s.middle, *s.first, 0};
    GradedModuleMap<CK> g{s.middle, s.quot, *s.second, 0};
    return is_sequence_exact(f, g, cutoff);
  }
  return check_extension<CK>(s.middle, s.sub, s.quot, cutoff, std::nullopt, seed);
}

/// Every sequence instance of a model (parameterized ones for l = 1..4).
inline std::vector<SequenceInstance> model_sequences(const std::string& model) {
  std::vector<SequenceInstance> out;
  for (const auto& n : get_model(model).sequences) {
    if (sequence_has_ell(n))
      for (int l = 1; l <= catalog_detail::max_ell; ++l) out.push_back(get_sequence(n, l));
    else
      out.push_back(get_sequence(n));
  }
  return out;
}

struct CertifiedGprime {
  GroupPresentation group;
  Report report;
};

/// G' of a model from the sequences that pass certification at the cutoff.
inline CertifiedGprime certified_gprime(const std::string& model, int cutoff, unsigned seed = 1) {
  CertifiedGprime out;
  std::vector<SequenceClass> ok;
  for (const auto& s : model_sequences(model)) {
    if (!s.in_gprime) continue;
    auto r = certify_sequence(s, cutoff, seed);
    std::string tag = s.ell ? s.name + "[l=" + std::to_string(s.ell) + "]" : s.name;
    if (r) {
      out.report.note("certified " + tag);
      auto c = s.classes;
      c.name = tag;
      ok.push_back(c);
    } else {
      out.report.fail(tag + ": " + r.failure);
    }
  }
  out.group = build_Gprime(get_model(model).classes, ok);
  return out;
}

// ---------------------------------------------------------------------------
// Resolution patterns on the Veronese surface and the Rao modules.

struct ResolutionPattern {
  SheafClassVector e, n;
};

inline const std::vector<std::string>& resolution_pattern_names() {
  static const std::vector<std::string> names = {"point", "two-points", "three-general", "three-collinear",
                                                 "six-points", "determinantal"};
  return names;
}

inline ResolutionPattern get_resolution_pattern(const std::string& name, int n = 0) {
  auto v = [](const std::string& s) { return parse_sheaf_vector(s); };
  if (name == "point") return {v("O(-1)"), v("2*I_C")};
  if (name == "two-points") return {v("I_C(-1)"), v("O(-1) + I_C")};
  if (name == "three-general") return {v("2*I_C(-1)"), v("3*O(-1)")};
  if (name == "three-collinear") return {v("O(-2)"), v("I_C + I_C(-1)")};
  if (name == "six-points") return {v("3*O(-1)"), v("4*I_C")};
  if (name == "determinantal") {
    if (n <= 0 || n % 2 != 0) throw CatalogError("determinantal(n) needs n even and positive, got " + std::to_string(n));
    ResolutionPattern p;
    p.e.add("I_C", -n / 2, n);
    p.n.add("O", -n / 2, n + 1);
    return p;
  }
  throw CatalogError("unknown resolution pattern '" + name + "'");
}

/// S3/(x,y,u,v,t^d) as a module over the threefold cone ring.
inline GradedModulePresentation<CK> rao_module(int d) {
  if (d < 1) throw CatalogError("rao module needs d >= 1");
  const auto& md = get_model("quadric-threefold-cone");
  return GradedModulePresentation<CK>(
      md.ring, {0}, catalog_detail::matrix(md.ring.ambient(), {{"x", "y", "u", "v", "t^" + std::to_string(d)}}));
}

}  // namespace mfx
