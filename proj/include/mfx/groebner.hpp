#pragma once

// Groebner bases for graded submodules of free modules S^m.
//
// Ideals are the rank-one case. Module terms are ordered by block
// (lower block index dominates), then by weighted degree including the
// component shift, then by the ring's monomial order, then by component.
// Blocks give elimination orders for kernel computations; within a block
// the order is degree-compatible.

#include "mfx/polynomial.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace mfx {

class NonHomogeneousError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Term order on S^m.
struct ModuleOrder {
  PolyRingPtr ring;
  std::vector<int> shifts;  // degree of each basis vector e_c
  std::vector<int> blocks;  // elimination block of each component

  static ModuleOrder plain(PolyRingPtr ring, std::vector<int> shifts) {
    std::vector<int> blocks(shifts.size(), 0);
    return {std::move(ring), std::move(shifts), std::move(blocks)};
  }

  int rank() const { return static_cast<int>(shifts.size()); }

  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
    if (blocks[ca] != blocks[cb]) return blocks[ca] < blocks[cb] ? 1 : -1;
    int da = a.deg + shifts[ca], db = b.deg + shifts[cb];
    if (da != db) return da > db ? 1 : -1;
    int c = ring->compare(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
};

template <Field K>
struct ModuleTerm {
  Monomial mono;
  int comp = 0;
  K coef;
};

/// Element of S^m stored as a sorted list of terms (strictly decreasing, non-zero).
template <Field K>
class ModuleVector {
 public:
  using Term = ModuleTerm<K>;

  ModuleVector() = default;

  static ModuleVector from_column(const ModuleOrder& ord, const std::vector<Polynomial<K>>& col,
                                  int offset = 0) {
    ModuleVector v;
    for (std::size_t c = 0; c < col.size(); ++c)
      for (const auto& [m, k] : col[c].terms()) v.terms_.push_back({m, static_cast<int>(c) + offset, k});
    v.sort(ord);
    return v;
  }
  static ModuleVector from_terms(const ModuleOrder& ord, std::vector<Term> terms) {
    ModuleVector v;
    v.terms_ = std::move(terms);
    v.sort(ord);
    return v;
  }

  std::vector<Polynomial<K>> to_column(const PolyRingPtr& ring, int rank, int offset = 0) const {
    std::vector<std::vector<typename Polynomial<K>::Term>> parts(rank);
    for (const auto& t : terms_) {
      int c = t.comp - offset;
      if (c >= 0 && c < rank) parts[c].push_back({t.mono, t.coef});
    }
    std::vector<Polynomial<K>> col;
    col.reserve(rank);
    for (auto& p : parts) col.push_back(Polynomial<K>::from_terms(ring, std::move(p)));
    return col;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const { return terms_.front(); }
  std::size_t size() const { return terms_.size(); }

  /// Degree of the leading term including the component shift.
  int degree(const ModuleOrder& ord) const {
    return terms_.empty() ? -1 : terms_.front().mono.deg + ord.shifts[terms_.front().comp];
  }
  bool is_homogeneous(const ModuleOrder& ord) const {
    for (const auto& t : terms_)
      if (t.mono.deg + ord.shifts[t.comp] != degree(ord)) return false;
    return true;
  }

  void make_monic() {
    if (terms_.empty() || terms_.front().coef.is_one()) return;
    K inv = terms_.front().coef.inverse();
    for (auto& t : terms_) t.coef = t.coef * inv;
  }

  ModuleVector scaled(const K& c) const {
    ModuleVector r;
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef = t.coef * c;
    return r;
  }

  /// this - c * m * g
  void sub_multiple(const ModuleOrder& ord, const K& c, const Monomial& m, const ModuleVector& g) {
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.push_back(std::move(terms_[i++]));
        continue;
      }
      Monomial gm = g.terms_[j].mono * m;
      int gc = g.terms_[j].comp;
      int cmp = i == terms_.size() ? -1 : ord.compare(terms_[i].mono, terms_[i].comp, gm, gc);
      if (cmp > 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (cmp < 0) {
        out.push_back({gm, gc, -(c * g.terms_[j].coef)});
        ++j;
      } else {
        K s = terms_[i].coef - c * g.terms_[j].coef;
        if (!s.is_zero()) out.push_back({gm, gc, std::move(s)});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  void add(const ModuleOrder& ord, const ModuleVector& g) { sub_multiple(ord, -K::one(), Monomial{}, g); }

  ModuleVector times(const Monomial& m, const K& c) const {
    ModuleVector r;
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.comp, t.coef * c});
    return r;
  }

  /// Multiplies by a polynomial.
  ModuleVector times(const ModuleOrder& ord, const Polynomial<K>& p) const {
    ModuleVector r;
    for (const auto& [m, c] : p.terms()) r.add(ord, times(m, c));
    return r;
  }

  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      const auto &x = a.terms_[i], &y = b.terms_[i];
      if (x.comp != y.comp || !(x.mono == y.mono) || !(x.coef == y.coef)) return false;
    }
    return true;
  }

  // Pops the leading term.
  Term pop_lead() {
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
  }

 private:
  void sort(const ModuleOrder& ord) {
    std::sort(terms_.begin(), terms_.end(), [&ord](const Term& a, const Term& b) {
      return ord.compare(a.mono, a.comp, b.mono, b.comp) > 0;
    });
    std::vector<Term> out;
    for (auto& t : terms_) {
      if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
        out.back().coef += t.coef;
      } else {
        if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

/// A Groebner basis together with the order it was computed for.
template <Field K>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(ModuleOrder order, std::vector<ModuleVector<K>> elems, int degree_bound)
      : order_(std::move(order)), elems_(std::move(elems)), degree_bound_(degree_bound) {
    index();
  }

  const ModuleOrder& order() const { return order_; }
  const std::vector<ModuleVector<K>>& elements() const { return elems_; }
  /// Elements are complete up to this degree (INT_MAX for a full basis).
  int degree_bound() const { return degree_bound_; }
  bool complete() const { return degree_bound_ == INT_MAX; }

  const ModuleVector<K>* find_divisor(const Monomial& m, int comp) const {
    if (comp >= static_cast<int>(by_comp_.size())) return nullptr;
    for (int idx : by_comp_[comp]) {
      const auto& lt = elems_[idx].lead();
      if (lt.mono.deg <= m.deg && lt.mono.divides(m)) return &elems_[idx];
    }
    return nullptr;
  }

  /// Full normal form: no term of the result is divisible by a leading term.
  ModuleVector<K> reduce(ModuleVector<K> v) const {
    std::vector<ModuleTerm<K>> rest;
    while (!v.is_zero()) {
      const auto& lt = v.lead();
      if (const auto* g = find_divisor(lt.mono, lt.comp)) {
        K c = lt.coef;  // g is monic
        Monomial q = lt.mono / g->lead().mono;
        v.sub_multiple(order_, c, q, *g);
      } else {
        rest.push_back(v.pop_lead());
      }
    }
    return ModuleVector<K>::from_terms(order_, std::move(rest));
  }

  bool is_standard(const Monomial& m, int comp) const { return find_divisor(m, comp) == nullptr; }

  /// Leading monomials per component.
  std::vector<std::vector<Monomial>> leading_monomials() const {
    std::vector<std::vector<Monomial>> out(order_.rank());
    for (const auto& e : elems_) out[e.lead().comp].push_back(e.lead().mono);
    return out;
  }

  /// Standard module monomials of total degree d (basis of the degree-d piece of S^m / M).
  std::vector<std::pair<Monomial, int>> standard_monomials(int d) const {
    std::vector<std::pair<Monomial, int>> out;
    for (int c = 0; c < order_.rank(); ++c)
      for (const auto& m : order_.ring->monomials_of_degree(d - order_.shifts[c]))
        if (is_standard(m, c)) out.push_back({m, c});
    return out;
  }

  /// dim_k (S^m / M)_d.
  long hilbert_value(int d) const {
    long n = 0;
    for (int c = 0; c < order_.rank(); ++c)
      for (const auto& m : order_.ring->monomials_of_degree(d - order_.shifts[c]))
        if (is_standard(m, c)) ++n;
    return n;
  }

 private:
  void index() {
    by_comp_.assign(order_.rank(), {});
    for (std::size_t i = 0; i < elems_.size(); ++i) by_comp_[elems_[i].lead().comp].push_back(static_cast<int>(i));
  }

  ModuleOrder order_;
  std::vector<ModuleVector<K>> elems_;
  std::vector<std::vector<int>> by_comp_;
  int degree_bound_ = INT_MAX;
};

namespace detail {

struct CriticalPair {
  int i, j;
  Monomial lcm;
  int comp;
  int degree;
};

}  // namespace detail

/// Degree-by-degree Buchberger for homogeneous input. With a finite
/// degree_bound the result is a truncated basis, exact in degrees <= bound.
template <Field K>
GroebnerBasis<K> groebner_basis(const ModuleOrder& ord, std::vector<ModuleVector<K>> gens,
                                int degree_bound = INT_MAX, bool interreduce = true) {
  const auto& ring = ord.ring;
  std::vector<std::pair<int, ModuleVector<K>>> pending;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous(ord)) throw NonHomogeneousError("generator is not homogeneous");
    int d = g.degree(ord);
    if (d <= degree_bound) pending.push_back({d, std::move(g)});
  }
  std::stable_sort(pending.begin(), pending.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<ModuleVector<K>> basis;
  std::vector<detail::CriticalPair> pairs;
  bool ideal_case = ord.rank() == 1;

  auto lm = [&](int k) -> const Monomial& { return basis[k].lead().mono; };
  auto lc = [&](int k) { return basis[k].lead().comp; };

  auto add_element = [&](ModuleVector<K> h) {
    h.make_monic();
    basis.push_back(std::move(h));
    int t = static_cast<int>(basis.size()) - 1;
    const Monomial& lt = lm(t);
    int ct = lc(t);
    // Gebauer-Moeller: drop old pairs made redundant by the new element.
    std::vector<detail::CriticalPair> kept;
    kept.reserve(pairs.size());
    for (auto& p : pairs) {
      if (p.comp == ct && lt.divides(p.lcm)) {
        Monomial li = ring->lcm(lm(p.i), lt), lj = ring->lcm(lm(p.j), lt);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      kept.push_back(p);
    }
    pairs = std::move(kept);
    // New pairs, pruned by the chain criterion among themselves.
    std::vector<detail::CriticalPair> fresh;
    for (int i = 0; i < t; ++i) {
      if (lc(i) != ct) continue;
      Monomial l = ring->lcm(lm(i), lt);
      int d = l.deg + ord.shifts[ct];
      fresh.push_back({i, t, l, ct, d});
    }
    std::vector<bool> drop(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      for (std::size_t b = 0; b < fresh.size() && !drop[a]; ++b) {
        if (a == b || drop[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) drop[a] = true;
        else if (fresh[b].lcm == fresh[a].lcm && b < a) drop[a] = true;
      }
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (drop[a]) continue;
      const auto& p = fresh[a];
      if (ideal_case && lm(p.i).coprime(lt)) continue;
      if (p.degree > degree_bound) continue;
      pairs.push_back(p);
    }
  };

  auto reduce_against_basis = [&](ModuleVector<K> v) {
    std::vector<ModuleTerm<K>> rest;
    while (!v.is_zero()) {
      const auto& lt = v.lead();
      const ModuleVector<K>* div = nullptr;
      for (const auto& g : basis) {
        const auto& gl = g.lead();
        if (gl.comp == lt.comp && gl.mono.deg <= lt.mono.deg && gl.mono.divides(lt.mono)) {
          div = &g;
          break;
        }
      }
      if (div) {
        K c = lt.coef;
        Monomial q = lt.mono / div->lead().mono;
        v.sub_multiple(ord, c, q, *div);
      } else {
        rest.push_back(v.pop_lead());
      }
    }
    return ModuleVector<K>::from_terms(ord, std::move(rest));
  };

  std::size_t next_gen = 0;
  while (next_gen < pending.size() || !pairs.empty()) {
    int d = INT_MAX;
    if (next_gen < pending.size()) d = pending[next_gen].first;
    for (const auto& p : pairs) d = std::min(d, p.degree);
    if (d > degree_bound) break;

    std::vector<ModuleVector<K>> todo;
    std::vector<detail::CriticalPair> later;
    std::vector<detail::CriticalPair> now;
    for (auto& p : pairs) (p.degree == d ? now : later).push_back(p);
    pairs = std::move(later);
    std::sort(now.begin(), now.end(), [&](const auto& a, const auto& b) {
      int c = ord.compare(a.lcm, a.comp, b.lcm, b.comp);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    for (const auto& p : now) {
      Monomial qi = p.lcm / lm(p.i), qj = p.lcm / lm(p.j);
      ModuleVector<K> s = basis[p.i].times(qi, K::one());
      s.sub_multiple(ord, K::one(), qj, basis[p.j]);
      todo.push_back(std::move(s));
    }
    while (next_gen < pending.size() && pending[next_gen].first == d)
      todo.push_back(std::move(pending[next_gen++].second));

    for (auto& v : todo) {
      auto r = reduce_against_basis(std::move(v));
      if (!r.is_zero()) add_element(std::move(r));
    }
  }

  if (!interreduce) return GroebnerBasis<K>(ord, std::move(basis), degree_bound);

  // Minimal basis, then tail reduction.
  std::vector<ModuleVector<K>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || basis[j].lead().comp != basis[i].lead().comp) continue;
      const auto &a = basis[j].lead().mono, &b = basis[i].lead().mono;
      if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
    return ord.compare(a.lead().mono, a.lead().comp, b.lead().mono, b.lead().comp) < 0;
  });
  GroebnerBasis<K> leads(ord, minimal, degree_bound);
  std::vector<ModuleVector<K>> reduced;
  reduced.reserve(minimal.size());
  for (const auto& g : minimal) {
    auto head = g.lead();
    ModuleVector<K> tail = g;
    tail.pop_lead();
    auto nf = leads.reduce(std::move(tail));
    std::vector<ModuleTerm<K>> terms{head};
    for (const auto& t : nf.terms()) terms.push_back(t);
    reduced.push_back(ModuleVector<K>::from_terms(ord, std::move(terms)));
  }
  return GroebnerBasis<K>(ord, std::move(reduced), degree_bound);
}

// ---------------------------------------------------------------------------
// Ideal-level convenience wrappers.

template <Field K>
ModuleVector<K> as_vector(const ModuleOrder& ord, const Polynomial<K>& p) {
  return ModuleVector<K>::from_column(ord, {p});
}

template <Field K>
std::vector<Polynomial<K>> groebner_basis(const std::vector<Polynomial<K>>& gens, const PolyRingPtr& ring) {
  auto ord = ModuleOrder::plain(ring, {0});
  std::vector<ModuleVector<K>> vs;
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw ArityError("generator from a different ring");
    if (!g.is_homogeneous()) throw NonHomogeneousError("ideal generator is not homogeneous");
    vs.push_back(as_vector(ord, g));
  }
  auto gb = groebner_basis<K>(ord, std::move(vs));
  std::vector<Polynomial<K>> out;
  for (const auto& e : gb.elements()) out.push_back(e.to_column(ring, 1)[0]);
  return out;
}

/// Normal form of p with respect to a list that is assumed to be a Groebner basis.
template <Field K>
Polynomial<K> normal_form(const Polynomial<K>& p, const std::vector<Polynomial<K>>& basis) {
  auto ord = ModuleOrder::plain(p.ring(), {0});
  std::vector<ModuleVector<K>> vs;
  for (const auto& b : basis) {
    if (!same_ring(b.ring(), p.ring())) throw ArityError("basis element from a different ring");
    auto v = as_vector(ord, b);
    if (v.is_zero()) continue;
    v.make_monic();
    vs.push_back(std::move(v));
  }
  GroebnerBasis<K> gb(ord, std::move(vs), INT_MAX);
  return gb.reduce(as_vector(ord, p)).to_column(p.ring(), 1)[0];
}

template <Field K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  const auto& ring = f.ring();
  Monomial l = ring->lcm(f.leading_monomial(), g.leading_monomial());
  auto a = f.mul_term(l / f.leading_monomial(), f.leading_coefficient().inverse());
  auto b = g.mul_term(l / g.leading_monomial(), g.leading_coefficient().inverse());
  return a - b;
}

// ---------------------------------------------------------------------------
// Kernels by elimination.

/// Generators of ker(S^k -> S^m / N), e_j -> images[j].
/// `relations` generates N. The result is not minimised.
template <Field K>
std::vector<std::vector<Polynomial<K>>> kernel_generators(
    const PolyRingPtr& ring, const std::vector<int>& target_shifts,
    const std::vector<std::vector<Polynomial<K>>>& relations,
    const std::vector<std::vector<Polynomial<K>>>& images, const std::vector<int>& source_shifts,
    int degree_bound = INT_MAX) {
  int m = static_cast<int>(target_shifts.size());
  int k = static_cast<int>(source_shifts.size());
  ModuleOrder ord{ring, target_shifts, std::vector<int>(m, 0)};
  for (int s : source_shifts) {
    ord.shifts.push_back(s);
    ord.blocks.push_back(1);
  }
  std::vector<ModuleVector<K>> gens;
  for (int j = 0; j < k; ++j) {
    auto v = ModuleVector<K>::from_column(ord, images[j]);
    Monomial one;
    v.add(ord, ModuleVector<K>::from_terms(ord, {{one, m + j, K::one()}}));
    gens.push_back(std::move(v));
  }
  for (const auto& r : relations) gens.push_back(ModuleVector<K>::from_column(ord, r));
  auto gb = groebner_basis<K>(ord, std::move(gens), degree_bound);
  std::vector<std::vector<Polynomial<K>>> out;
  for (const auto& e : gb.elements())
    if (e.lead().comp >= m) out.push_back(e.to_column(ring, k, m));
  return out;
}

}  // namespace mfx
