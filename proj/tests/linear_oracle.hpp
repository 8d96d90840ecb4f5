#pragma once

// Degreewise ranks over R = S/J by plain linear algebra on monomial
// coordinates of S. Shares no code with the Groebner machinery.

#include "mfx/linalg.hpp"
#include "mfx/polynomial.hpp"

#include <map>

namespace mfx::testing {

template <Field K>
class DegreeOracle {
 public:
  DegreeOracle(PolyRingPtr ring, std::vector<Polynomial<K>> ideal) : ring_(std::move(ring)), ideal_(std::move(ideal)) {}
  DegreeOracle(PolyRingPtr ring, Polynomial<K> f) : DegreeOracle(std::move(ring), std::vector<Polynomial<K>>{f}) {}

  long dim_S(int d) const { return d < 0 ? 0 : static_cast<long>(ring_->monomials_of_degree(d).size()); }

  long dim_R(int d) const {
    if (d < 0) return 0;
    PolyMatrix<K> none(1);
    return dim_S(d) - rank_with(none, {0}, {}, d).second;
  }

  /// dim of (R(-s_1) + ... + R(-s_n)) in degree e.
  long dim_free(const std::vector<int>& shifts, int e) const {
    long n = 0;
    for (int s : shifts) n += dim_R(e - s);
    return n;
  }

  /// Rank over k of the degree-e part of the R-linear map given by `a`
  /// (target shifts `tgt` index rows, source shifts `src` index columns).
  long rank(const PolyMatrix<K>& a, const std::vector<int>& tgt, const std::vector<int>& src, int e) const {
    auto [all, ideal_part] = rank_with(a, tgt, src, e);
    return all - ideal_part;
  }

  /// dim M_e for M = coker(rels) with generators in degrees `gens`.
  long module_dim(const std::vector<int>& gens, const PolyMatrix<K>& rels, int e) const {
    std::vector<int> src;
    std::size_t nrel = rels.empty() ? 0 : rels[0].size();
    for (std::size_t c = 0; c < nrel; ++c) {
      int d = 0;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (!rels[i][c].is_zero()) d = rels[i][c].degree() + gens[i];
      src.push_back(d);
    }
    return dim_free(gens, e) - rank(rels, gens, src, e);
  }

 private:
  std::pair<long, long> rank_with(const PolyMatrix<K>& a, const std::vector<int>& tgt, const std::vector<int>& src,
                                  int e) const {
    std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> index;
    for (std::size_t i = 0; i < tgt.size(); ++i)
      for (const auto& m : monos(e - tgt[i])) index.emplace(std::make_pair(i, key(m)), index.size());
    std::vector<std::vector<K>> icols;
    auto to_vec = [&](const std::vector<Polynomial<K>>& col) {
      std::vector<K> v(index.size(), K::zero());
      for (std::size_t i = 0; i < col.size(); ++i)
        for (const auto& [m, c] : col[i].terms()) v[index.at({i, key(m)})] += c;
      return v;
    };
    for (std::size_t i = 0; i < tgt.size(); ++i)
      for (const auto& g : ideal_)
        for (const auto& m : monos(e - tgt[i] - g.degree())) {
          std::vector<Polynomial<K>> col(tgt.size(), Polynomial<K>(ring_));
          col[i] = g.mul_term(m, K::one());
          icols.push_back(to_vec(col));
        }
    auto allcols = icols;
    for (std::size_t j = 0; j < src.size(); ++j)
      for (const auto& m : monos(e - src[j])) {
        std::vector<Polynomial<K>> col;
        for (std::size_t i = 0; i < tgt.size(); ++i) col.push_back(a[i][j].mul_term(m, K::one()));
        allcols.push_back(to_vec(col));
      }
    return {col_rank(allcols, index.size()), col_rank(icols, index.size())};
  }

  std::vector<Monomial> monos(int d) const { return d < 0 ? std::vector<Monomial>{} : ring_->monomials_of_degree(d); }
  std::vector<int> key(const Monomial& m) const { return std::vector<int>(m.exp.begin(), m.exp.begin() + ring_->nvars()); }
  static long col_rank(const std::vector<std::vector<K>>& cols, std::size_t rows) {
    if (cols.empty() || rows == 0) return 0;
    Matrix<K> m(rows, std::vector<K>(cols.size(), K::zero()));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
    return static_cast<long>(mfx::rank(m));
  }

  PolyRingPtr ring_;
  std::vector<Polynomial<K>> ideal_;
};

}  // namespace mfx::testing
