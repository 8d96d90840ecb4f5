#pragma once

// Random factorizations with known structure: direct sums of catalog blocks,
// conjugated by graded unipotent matrices whose entries have degree <= 1.

#include "mfx/catalog.hpp"

#include <random>

namespace mfx {

namespace detail {

template <Field K>
Polynomial<K> random_form(const PolyRingPtr& ring, int d, std::mt19937& rng) {
  auto p = Polynomial<K>::constant(ring, K::zero());
  std::uniform_int_distribution<int> coef(-3, 3);
  for (const auto& mono : ring->monomials_of_degree(d)) {
    int c = coef(rng);
    if (c != 0) p = p + Polynomial<K>::term(ring, mono, K::from_int(c));
  }
  return p;
}

// Strictly upper triangular, entry (i,k) of degree shifts[k] - shifts[i] when that is 0 or 1.
template <Field K>
PolyMatrix<K> random_nilpotent(const PolyRingPtr& ring, const std::vector<int>& shifts, std::mt19937& rng) {
  std::size_t n = shifts.size();
  auto nil = zero_matrix<K>(ring, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      int d = shifts[k] - shifts[i];
      if (d == 0 || d == 1) nil[i][k] = random_form<K>(ring, d, rng);
    }
  return nil;
}

// (I + N)^-1 = I - N + N^2 - ... for nilpotent N.
template <Field K>
PolyMatrix<K> unipotent_inverse(const PolyRingPtr& ring, const PolyMatrix<K>& nil) {
  std::size_t n = nil.size();
  auto out = identity_matrix<K>(ring, n, Polynomial<K>::constant(ring, K::one())), power = out;
  auto minus = scale(nil, -K::one());
  for (std::size_t k = 1; k < n; ++k) {
    power = matmul(ring, power, minus);
    out = add(out, power);
  }
  return out;
}

}  // namespace detail

/// Conjugate m by graded unipotent changes of basis on both sides; the
/// result is equivalent to m and has the same twist vectors.
template <Field K>
MatrixFactorization<K> conjugate_randomly(const MatrixFactorization<K>& m, std::mt19937& rng) {
  auto id = identity_matrix<K>(m.ring, m.size(), Polynomial<K>::constant(m.ring, K::one()));
  auto np = detail::random_nilpotent<K>(m.ring, m.rows, rng);
  auto nq = detail::random_nilpotent<K>(m.ring, m.cols, rng);
  auto out = m;
  out.phi = matmul(m.ring, matmul(m.ring, detail::add(id, np), m.phi), detail::add(id, nq));
  out.psi = matmul(m.ring, matmul(m.ring, detail::unipotent_inverse(m.ring, nq), m.psi),
                   detail::unipotent_inverse(m.ring, np));
  return out;
}

/// A random verified factorization of x^2 over k[x,t] (family "bgs") or of
/// x^2 + y^2 over k[x,y,t] (family "r1"), with 1 to 3 catalog blocks.
inline MatrixFactorization<CK> random_factorization(std::mt19937& rng, const std::string& family = "bgs") {
  std::vector<std::string> kinds = family == "bgs" ? std::vector<std::string>{"bgs-i", "bgs-ii", "bgs-iii"}
                                                   : std::vector<std::string>{"r1-a", "r1-b", "r1-c", "r1-d", "r1-e"};
  std::uniform_int_distribution<std::size_t> pick(0, kinds.size() - 1);
  std::uniform_int_distribution<int> blocks(1, 3), ell(1, 3), twist(-1, 2);
  int nb = blocks(rng);
  std::optional<MatrixFactorization<CK>> acc;
  for (int b = 0; b < nb; ++b) {
    auto name = kinds[pick(rng)];
    auto block = twist_mf(get_mf(name, mf_has_ell(name) ? ell(rng) : 1), twist(rng));
    acc = acc ? direct_sum_mf(*acc, block) : block;
  }
  return conjugate_randomly(*acc, rng);
}

}  // namespace mfx
