#pragma once

// Finitely presented graded modules over a GradedRing R = S/I.
//
// A presentation is a list of generator degrees g_1..g_k and a k x n relation
// matrix whose columns are relations. The module is S^k / (columns + I*S^k),
// so all Groebner work happens in the free S-module with the ideal folded in.

#include "mfx/graded_ring.hpp"
#include "mfx/linalg.hpp"
#include "mfx/report.hpp"

#include <mutex>
#include <random>
#include <stdexcept>

namespace mfx {

template <Field K>
class GradedModulePresentation {
 public:
  GradedModulePresentation() = default;
  GradedModulePresentation(GradedRing<K> ring, std::vector<int> gens, PolyMatrix<K> rels)
      : ring_(std::move(ring)), gens_(std::move(gens)), rels_(std::move(rels)) {
    if (rels_.empty()) rels_.assign(gens_.size(), {});
    if (rels_.size() != gens_.size()) throw std::invalid_argument("relation matrix needs one row per generator");
    std::size_t n = rels_.empty() ? 0 : rels_[0].size();
    for (const auto& row : rels_)
      if (row.size() != n) throw std::invalid_argument("ragged relation matrix");
    for (std::size_t c = 0; c < n; ++c) (void)relation_degree(c);
  }

  const GradedRing<K>& ring() const { return ring_; }
  const PolyRingPtr& ambient() const { return ring_.ambient(); }
  const std::vector<int>& gens() const { return gens_; }
  const PolyMatrix<K>& relations() const { return rels_; }
  std::size_t num_gens() const { return gens_.size(); }
  std::size_t num_relations() const { return rels_.empty() ? 0 : rels_[0].size(); }

  std::vector<Polynomial<K>> relation(std::size_t c) const {
    std::vector<Polynomial<K>> col;
    for (const auto& row : rels_) col.push_back(row[c]);
    return col;
  }

  /// Degree of relation column c; throws if the column is not homogeneous.
  int relation_degree(std::size_t c) const {
    std::optional<int> d;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      const auto& p = rels_[i][c];
      if (p.is_zero()) continue;
      if (!same_ring(p.ring(), ambient())) throw ArityError("relation entry from a different ring");
      if (!p.is_homogeneous()) throw NonHomogeneousError("relation entry is not homogeneous");
      int e = p.degree() + gens_[i];
      if (d && *d != e) throw NonHomogeneousError("relation column " + std::to_string(c) + " is not homogeneous");
      d = e;
    }
    return d.value_or(0);
  }

  ModuleOrder order() const { return ModuleOrder::plain(ambient(), gens_); }

  /// Groebner basis of the relation submodule plus I*S^k, computed once.
  const GroebnerBasis<K>& basis() const {
    std::call_once(cache_->once, [this] {
      auto ord = order();
      std::vector<ModuleVector<K>> vs;
      for (std::size_t c = 0; c < num_relations(); ++c) vs.push_back(ModuleVector<K>::from_column(ord, relation(c)));
      for (std::size_t i = 0; i < gens_.size(); ++i)
        for (const auto& g : ring_.ideal()) {
          std::vector<Polynomial<K>> col(gens_.size(), ring_.zero());
          col[i] = g;
          vs.push_back(ModuleVector<K>::from_column(ord, col));
        }
      cache_->gb = groebner_basis<K>(ord, std::move(vs));
    });
    return cache_->gb;
  }

  long hilbert(int d) const { return basis().hilbert_value(d); }

  ModuleVector<K> reduce(const std::vector<Polynomial<K>>& col) const {
    return basis().reduce(ModuleVector<K>::from_column(order(), col));
  }
  bool is_zero_element(const std::vector<Polynomial<K>>& col) const { return reduce(col).is_zero(); }

  /// M(k): generator degrees lowered by k.
  GradedModulePresentation twisted(int k) const {
    auto g = gens_;
    for (auto& x : g) x -= k;
    return GradedModulePresentation(ring_, std::move(g), rels_);
  }

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis<K> gb;
  };

  GradedRing<K> ring_;
  std::vector<int> gens_;
  PolyMatrix<K> rels_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

template <Field K>
GradedModulePresentation<K> free_module(const GradedRing<K>& ring, std::vector<int> shifts) {
  return GradedModulePresentation<K>(ring, std::move(shifts), {});
}

template <Field K>
GradedModulePresentation<K> direct_sum(const GradedModulePresentation<K>& a, const GradedModulePresentation<K>& b) {
  auto gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  std::size_t na = a.num_relations(), nb = b.num_relations();
  auto rels = zero_matrix<K>(a.ambient(), gens.size(), na + nb);
  for (std::size_t i = 0; i < a.num_gens(); ++i)
    for (std::size_t c = 0; c < na; ++c) rels[i][c] = a.relations()[i][c];
  for (std::size_t i = 0; i < b.num_gens(); ++i)
    for (std::size_t c = 0; c < nb; ++c) rels[a.num_gens() + i][na + c] = b.relations()[i][c];
  return GradedModulePresentation<K>(a.ring(), std::move(gens), std::move(rels));
}

/// Adds columns to the relation matrix (the quotient by the submodule they generate).
template <Field K>
GradedModulePresentation<K> quotient(const GradedModulePresentation<K>& m, const PolyMatrix<K>& cols) {
  auto rels = m.relations();
  for (std::size_t i = 0; i < rels.size(); ++i) rels[i].insert(rels[i].end(), cols[i].begin(), cols[i].end());
  return GradedModulePresentation<K>(m.ring(), m.gens(), std::move(rels));
}

/// Degree-`shift` homomorphism: generator j of the source goes to column j.
template <Field K>
struct GradedModuleMap {
  GradedModulePresentation<K> source;
  GradedModulePresentation<K> target;
  PolyMatrix<K> matrix;  // target.num_gens() x source.num_gens()
  int shift = 0;

  std::vector<Polynomial<K>> column(std::size_t j) const {
    std::vector<Polynomial<K>> col;
    for (const auto& row : matrix) col.push_back(row[j]);
    return col;
  }

  /// Image of an element of the source free cover.
  std::vector<Polynomial<K>> apply(const std::vector<Polynomial<K>>& v) const {
    std::vector<Polynomial<K>> out(target.num_gens(), target.ring().zero());
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero() && !matrix[i][j].is_zero()) out[i] += matrix[i][j] * v[j];
    return out;
  }
};

template <Field K>
Report check_map(const GradedModuleMap<K>& f) {
  Report r;
  if (f.matrix.size() != f.target.num_gens()) {
    r.fail("matrix has wrong number of rows");
    return r;
  }
  for (std::size_t i = 0; i < f.matrix.size(); ++i) {
    if (f.matrix[i].size() != f.source.num_gens()) {
      r.fail("matrix has wrong number of columns");
      return r;
    }
    for (std::size_t j = 0; j < f.matrix[i].size(); ++j) {
      const auto& p = f.matrix[i][j];
      if (p.is_zero()) continue;
      int want = f.source.gens()[j] + f.shift - f.target.gens()[i];
      if (!p.is_homogeneous() || p.degree() != want) {
        r.fail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") has wrong degree");
        return r;
      }
    }
  }
  for (std::size_t c = 0; c < f.source.num_relations(); ++c)
    if (!f.target.is_zero_element(f.apply(f.source.relation(c)))) {
      r.fail("relation " + std::to_string(c + 1) + " does not map to zero");
      return r;
    }
  r.note("ok map well defined");
  return r;
}

template <Field K>
GradedModuleMap<K> compose(const GradedModuleMap<K>& g, const GradedModuleMap<K>& f) {
  return {f.source, g.target, matmul(f.source.ambient(), g.matrix, f.matrix), f.shift + g.shift};
}

/// Cokernel of f as a presentation (target with the image columns adjoined).
template <Field K>
GradedModulePresentation<K> cokernel(const GradedModuleMap<K>& f) {
  return quotient(f.target, f.matrix);
}

// ---------------------------------------------------------------------------
// Submodules of free modules and syzygies.

template <Field K>
struct Submodule {
  GradedModulePresentation<K> module;
  GradedModuleMap<K> inclusion;  // into the free module
};

namespace detail {

template <Field K>
int column_degree(const std::vector<Polynomial<K>>& col, const std::vector<int>& shifts) {
  for (std::size_t i = 0; i < col.size(); ++i)
    if (!col[i].is_zero()) return col[i].degree() + shifts[i];
  return INT_MIN;
}

// Minimal homogeneous generators of (cols + I*S^k) / I*S^k, graded Nakayama style.
template <Field K>
std::vector<std::vector<Polynomial<K>>> minimalize(const GradedRing<K>& ring, const std::vector<int>& shifts,
                                                   std::vector<std::vector<Polynomial<K>>> cols) {
  std::vector<std::pair<int, std::vector<Polynomial<K>>>> byd;
  for (auto& c : cols) {
    int d = column_degree(c, shifts);
    if (d != INT_MIN) byd.push_back({d, std::move(c)});
  }
  std::stable_sort(byd.begin(), byd.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<Polynomial<K>>> kept;
  PolyMatrix<K> kept_matrix(shifts.size());
  for (auto& [d, c] : byd) {
    GradedModulePresentation<K> current(ring, shifts, kept_matrix);
    if (current.is_zero_element(c)) continue;
    for (std::size_t i = 0; i < shifts.size(); ++i) kept_matrix[i].push_back(c[i]);
    kept.push_back(std::move(c));
  }
  return kept;
}

template <Field K>
PolyMatrix<K> columns_to_matrix(const PolyRingPtr& ring, std::size_t rows,
                                const std::vector<std::vector<Polynomial<K>>>& cols) {
  auto m = zero_matrix<K>(ring, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  return m;
}

}  // namespace detail

/// Presentation of the submodule of R^k (generator shifts `shifts`) generated
/// by the given columns, with minimal generators and minimal relations.
template <Field K>
Submodule<K> submodule_presentation(const GradedRing<K>& ring, const std::vector<int>& shifts,
                                    const std::vector<std::vector<Polynomial<K>>>& columns) {
  auto gens = detail::minimalize(ring, shifts, columns);
  std::vector<int> degs;
  for (const auto& g : gens) degs.push_back(detail::column_degree(g, shifts));

  std::vector<std::vector<Polynomial<K>>> ideal_rels;
  for (std::size_t i = 0; i < shifts.size(); ++i)
    for (const auto& g : ring.ideal()) {
      std::vector<Polynomial<K>> col(shifts.size(), ring.zero());
      col[i] = g;
      ideal_rels.push_back(std::move(col));
    }
  auto syz = kernel_generators<K>(ring.ambient(), shifts, ideal_rels, gens, degs);
  auto rels = detail::minimalize(ring, degs, std::move(syz));

  GradedModulePresentation<K> m(ring, degs, detail::columns_to_matrix(ring.ambient(), degs.size(), rels));
  auto free = free_module(ring, shifts);
  GradedModuleMap<K> inc{m, free, detail::columns_to_matrix(ring.ambient(), shifts.size(), gens), 0};
  return {std::move(m), std::move(inc)};
}

/// The ideal generated by `gens` as an R-module, generators in their own degrees.
template <Field K>
Submodule<K> ideal_module(const GradedRing<K>& ring, const std::vector<Polynomial<K>>& gens) {
  std::vector<std::vector<Polynomial<K>>> cols;
  for (const auto& g : gens) cols.push_back({g});
  return submodule_presentation(ring, {0}, cols);
}

/// First syzygy: the kernel of the free cover R^k -> M, as a submodule of R^k.
template <Field K>
Submodule<K> syzygy_module(const GradedModulePresentation<K>& m) {
  std::vector<std::vector<Polynomial<K>>> cols;
  for (std::size_t c = 0; c < m.num_relations(); ++c) cols.push_back(m.relation(c));
  return submodule_presentation(m.ring(), m.gens(), cols);
}

/// Generic rank, read off from finite differences of Hilbert functions
/// against the ring's up to degree `hi`.
template <Field K>
std::optional<long> module_rank(const GradedModulePresentation<K>& m, int hi = 14) {
  std::vector<long> hm, hr;
  auto r = free_module(m.ring(), {0});
  for (int d = 0; d <= hi; ++d) {
    hm.push_back(m.hilbert(d));
    hr.push_back(r.hilbert(d));
  }
  // Difference until the ring's function is constant near the top.
  for (int t = 0; t < hi - 3; ++t) {
    std::size_t n = hr.size();
    if (hr[n - 1] == hr[n - 2] && hr[n - 2] == hr[n - 3]) {
      if (hr[n - 1] == 0 || hm[n - 1] % hr[n - 1] != 0 || hm[n - 1] != hm[n - 2]) return std::nullopt;
      return hm[n - 1] / hr[n - 1];
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      hr[i] = hr[i + 1] - hr[i];
      hm[i] = hm[i + 1] - hm[i];
    }
    hr.pop_back();
    hm.pop_back();
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Homomorphism search.

/// A k-basis of degree-`shift` homomorphisms A -> E.
template <Field K>
std::vector<PolyMatrix<K>> hom_basis(const GradedModulePresentation<K>& a, const GradedModulePresentation<K>& e,
                                     int shift = 0) {
  const auto& ring = e.ambient();
  const auto& gb = e.basis();
  auto ord = e.order();
  struct Unknown {
    std::size_t gen;
    Monomial mono;
    int comp;
  };
  std::vector<Unknown> unknowns;
  for (std::size_t j = 0; j < a.num_gens(); ++j)
    for (const auto& [m, c] : gb.standard_monomials(a.gens()[j] + shift)) unknowns.push_back({j, m, c});
  if (unknowns.empty()) return {};

  // Row index per (relation, module term) occurring in a normal form.
  std::map<std::tuple<std::size_t, int, std::vector<int>>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, K>>> cols(unknowns.size());
  for (std::size_t rel = 0; rel < a.num_relations(); ++rel) {
    auto col = a.relation(rel);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      const auto& p = col[unknowns[u].gen];
      if (p.is_zero()) continue;
      std::vector<Polynomial<K>> v(e.num_gens(), Polynomial<K>(ring));
      v[unknowns[u].comp] = p.mul_term(unknowns[u].mono, K::one());
      auto nf = gb.reduce(ModuleVector<K>::from_column(ord, v));
      for (const auto& t : nf.terms()) {
        std::vector<int> key(t.mono.exp.begin(), t.mono.exp.end());
        auto [it, fresh] = row_of.try_emplace({rel, t.comp, key}, row_of.size());
        cols[u].push_back({it->second, t.coef});
      }
    }
  }
  auto mat = zeros<K>(row_of.size(), unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (const auto& [r, c] : cols[u]) mat[r][u] += c;
  std::vector<std::vector<K>> null;
  if (row_of.empty()) {
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      std::vector<K> v(unknowns.size(), K::zero());
      v[u] = K::one();
      null.push_back(std::move(v));
    }
  } else {
    null = nullspace(std::move(mat), unknowns.size());
  }

  std::vector<PolyMatrix<K>> out;
  for (const auto& v : null) {
    auto m = zero_matrix<K>(ring, e.num_gens(), a.num_gens());
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      if (!v[u].is_zero()) m[unknowns[u].comp][unknowns[u].gen] += Polynomial<K>::term(ring, unknowns[u].mono, v[u]);
    out.push_back(std::move(m));
  }
  return out;
}

/// Random k-linear combination of a Hom basis with small integer coefficients.
template <Field K>
PolyMatrix<K> random_combination(const std::vector<PolyMatrix<K>>& basis, std::mt19937& rng) {
  std::uniform_int_distribution<long> coef(-40, 40);
  PolyMatrix<K> out = basis.front();
  for (auto& row : out)
    for (auto& p : row) p = p.scale(K::zero());
  for (const auto& b : basis) {
    K c = K::from_int(coef(rng));
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] += b[i][j].scale(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degreewise certificates.

/// f is injective in degree d iff dim A_d equals dim (im f)_d = dim E_d - dim (E/im f)_d.
template <Field K>
bool injective_in_degree(const GradedModuleMap<K>& f, const GradedModulePresentation<K>& coker, int d) {
  return f.source.hilbert(d) == f.target.hilbert(d + f.shift) - coker.hilbert(d + f.shift);
}

/// Bounded certificate that 0 -> A -f-> E -g-> B -> 0 is exact in degrees 0..cutoff.
template <Field K>
Report is_sequence_exact(const GradedModuleMap<K>& f, const GradedModuleMap<K>& g, int cutoff) {
  Report r;
  r.absorb(check_map(f), "first map: ");
  r.absorb(check_map(g), "second map: ");
  if (!r) return r;
  auto gf = compose(g, f);
  std::vector<int> bad_degrees;
  for (std::size_t j = 0; j < f.source.num_gens(); ++j)
    if (!g.target.is_zero_element(gf.column(j))) bad_degrees.push_back(f.source.gens()[j]);
  auto cf = cokernel(f), cg = cokernel(g);
  int s = f.shift, t = g.shift;
  for (int d = 0; d <= cutoff; ++d) {
    std::string at = "degree " + std::to_string(d) + ": ";
    bool comp_ok = std::find(bad_degrees.begin(), bad_degrees.end(), d) == bad_degrees.end();
    if (!r.expect(comp_ok, at + "composition is zero")) return r;
    long a = f.source.hilbert(d), e = f.target.hilbert(d + s), b = g.target.hilbert(d + s + t);
    if (!r.expect(a == e - cf.hilbert(d + s), at + "first map injective")) return r;
    if (!r.expect(cg.hilbert(d + s + t) == 0, at + "second map surjective")) return r;
    if (!r.expect(e == a + b, at + "dimensions add (" + std::to_string(e) + " = " + std::to_string(a) + " + " +
                                  std::to_string(b) + ")"))
      return r;
  }
  if (!bad_degrees.empty()) r.fail("composition is non-zero in degree " + std::to_string(bad_degrees.front()));
  return r;
}

template <Field K>
struct ExtensionReport : Report {
  std::optional<GradedModuleMap<K>> embedding;
  std::optional<GradedModuleMap<K>> surjection;  // B -> E / A
};

/// Certifies 0 -> A -> E -> B -> 0 up to the cutoff: an injective embedding
/// (supplied or found among degree-0 maps), equal Hilbert functions of E/A
/// and B, and an explicit surjection B -> E/A.
template <Field K>
ExtensionReport<K> check_extension(const GradedModulePresentation<K>& e, const GradedModulePresentation<K>& a,
                                   const GradedModulePresentation<K>& b, int cutoff,
                                   std::optional<PolyMatrix<K>> embedding = std::nullopt, unsigned seed = 1) {
  ExtensionReport<K> r;
  std::mt19937 rng(seed);
  auto injective = [&](const GradedModuleMap<K>& f) {
    auto c = cokernel(f);
    for (int d = 0; d <= cutoff; ++d)
      if (!injective_in_degree(f, c, d)) return false;
    return true;
  };

  if (embedding) {
    GradedModuleMap<K> f{a, e, *embedding, 0};
    r.absorb(check_map(f), "embedding: ");
    if (!r) return r;
    if (!r.expect(injective(f), "supplied embedding injective through degree " + std::to_string(cutoff))) return r;
    r.embedding = f;
  } else {
    auto homs = hom_basis(a, e);
    r.note("hom space A -> E has dimension " + std::to_string(homs.size()));
    if (homs.empty()) {
      r.fail("no embedding found: no degree-0 maps A -> E");
      return r;
    }
    for (int attempt = 0; attempt < 6 && !r.embedding; ++attempt) {
      GradedModuleMap<K> f{a, e, random_combination(homs, rng), 0};
      if (injective(f)) r.embedding = f;
    }
    if (!r.expect(r.embedding.has_value(), "injective embedding found")) return r;
  }

  auto q = cokernel(*r.embedding);
  for (int d = 0; d <= cutoff; ++d)
    if (!r.expect(q.hilbert(d) == b.hilbert(d), "degree " + std::to_string(d) + ": dim (E/A)_d = dim B_d = " +
                                                    std::to_string(b.hilbert(d))))
      return r;

  auto homs = hom_basis(b, q);
  if (!r.expect(!homs.empty(), "degree-0 maps B -> E/A exist")) return r;
  for (int attempt = 0; attempt < 6 && !r.surjection; ++attempt) {
    GradedModuleMap<K> g{b, q, random_combination(homs, rng), 0};
    auto c = cokernel(g);
    bool onto = true;
    for (int d = 0; d <= cutoff && onto; ++d) onto = c.hilbert(d) == 0;
    if (onto) r.surjection = g;
  }
  r.expect(r.surjection.has_value(), "surjection B -> E/A through degree " + std::to_string(cutoff));
  return r;
}

}  // namespace mfx
