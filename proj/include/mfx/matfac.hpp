#pragma once

// Graded matrix factorizations (phi, psi) of a homogeneous f over a polynomial ring S.
//
// Twist convention: phi : F1 -> F0 with F0 = sum S(-rows[i]), F1 = sum S(-cols[j]),
// so phi[i][j] has degree cols[j] - rows[i]; psi : F0(-deg f) -> F1, so
// psi[j][i] has degree rows[i] + deg f - cols[j].

#include "mfx/linalg.hpp"
#include "mfx/modres.hpp"

#include <numeric>

namespace mfx {

class MalformedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <Field K>
struct MatrixFactorization {
  PolyRingPtr ring;
  Polynomial<K> f;
  PolyMatrix<K> phi, psi;
  std::vector<int> rows, cols;

  std::size_t size() const { return rows.size(); }
  int potential_degree() const { return f.degree(); }

  friend bool operator==(const MatrixFactorization& a, const MatrixFactorization& b) {
    return same_ring(a.ring, b.ring) && a.f == b.f && a.phi == b.phi && a.psi == b.psi && a.rows == b.rows &&
           a.cols == b.cols;
  }
};

template <Field K>
MatrixFactorization<K> empty_mf(const PolyRingPtr& ring, const Polynomial<K>& f) {
  return {ring, f, {}, {}, {}, {}};
}

namespace detail {

inline std::string entry_name(const char* what, std::size_t i, std::size_t j) {
  return std::string(what) + " entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

template <Field K>
void check_shape(const MatrixFactorization<K>& m) {
  std::size_t n = m.rows.size();
  if (m.cols.size() != n) throw MalformedError("row and column twist vectors differ in length");
  auto square = [n](const PolyMatrix<K>& a, const char* name) {
    if (a.size() != n) throw MalformedError(std::string(name) + " is not " + std::to_string(n) + "x" + std::to_string(n));
    for (const auto& r : a)
      if (r.size() != n) throw MalformedError(std::string(name) + " is not square");
  };
  square(m.phi, "phi");
  square(m.psi, "psi");
}

}  // namespace detail

/// phi*psi = psi*phi = f*I and every entry has the degree its twists force.
template <Field K>
Report verify_mf(const MatrixFactorization<K>& m) {
  detail::check_shape(m);
  Report r;
  std::size_t n = m.size();
  int d = m.f.is_zero() ? 0 : m.f.degree();
  if (!m.f.is_zero() && !m.f.is_homogeneous()) {
    r.fail("potential is not homogeneous");
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = m.phi[i][j];
      if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != m.cols[j] - m.rows[i])) {
        r.fail("grading of " + detail::entry_name("phi", i, j));
        return r;
      }
      const auto& q = m.psi[j][i];
      if (!q.is_zero() && (!q.is_homogeneous() || q.degree() != m.rows[i] + d - m.cols[j])) {
        r.fail("grading of " + detail::entry_name("psi", j, i));
        return r;
      }
    }
  auto fi = identity_matrix<K>(m.ring, n, m.f);
  auto pq = matmul(m.ring, m.phi, m.psi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(pq[i][j] == fi[i][j])) {
        r.fail(detail::entry_name("phi*psi", i, j));
        return r;
      }
  auto qp = matmul(m.ring, m.psi, m.phi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(qp[i][j] == fi[i][j])) {
        r.fail(detail::entry_name("psi*phi", i, j));
        return r;
      }
  r.note("ok phi*psi = psi*phi = f*I, " + std::to_string(n) + "x" + std::to_string(n));
  return r;
}

/// (psi^T, phi^T) with rows -r and cols deg f - c; an involution.
template <Field K>
MatrixFactorization<K> dual_mf(const MatrixFactorization<K>& m) {
  detail::check_shape(m);
  int d = m.f.degree();
  MatrixFactorization<K> out{m.ring, m.f, transpose(m.ring, m.psi), transpose(m.ring, m.phi), m.rows, m.cols};
  for (auto& x : out.rows) x = -x;
  for (auto& x : out.cols) x = d - x;
  return out;
}

template <Field K>
MatrixFactorization<K> twist_mf(MatrixFactorization<K> m, int shift) {
  for (auto& x : m.rows) x += shift;
  for (auto& x : m.cols) x += shift;
  return m;
}

template <Field K>
MatrixFactorization<K> direct_sum_mf(const MatrixFactorization<K>& a, const MatrixFactorization<K>& b) {
  if (a.size() == 0) return b;
  if (b.size() == 0) return a;
  if (!same_ring(a.ring, b.ring) || !(a.f == b.f)) throw MalformedError("direct sum needs the same ring and potential");
  std::size_t n = a.size(), k = b.size();
  MatrixFactorization<K> out{a.ring, a.f, zero_matrix<K>(a.ring, n + k, n + k), zero_matrix<K>(a.ring, n + k, n + k),
                             a.rows, a.cols};
  out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
  out.cols.insert(out.cols.end(), b.cols.begin(), b.cols.end());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.phi[i][j] = a.phi[i][j];
      out.psi[i][j] = a.psi[i][j];
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      out.phi[n + i][n + j] = b.phi[i][j];
      out.psi[n + i][n + j] = b.psi[i][j];
    }
  return out;
}

namespace detail {

// Target ring: the given one, or the source ring with new variables appended.
inline PolyRingPtr extend_ring(const PolyRingPtr& src, const std::vector<std::string>& names,
                               const std::vector<int>& degs, const PolyRingPtr& target) {
  for (const auto& n : names)
    if (src->index_of(n)) throw MalformedError("variable " + n + " already occurs in the ring");
  if (target) {
    for (const auto& n : src->names())
      if (!target->index_of(n)) throw ArityError("target ring lacks variable " + n);
    for (std::size_t k = 0; k < names.size(); ++k) {
      auto idx = target->index_of(names[k]);
      if (!idx) throw ArityError("target ring lacks variable " + names[k]);
      if (target->degrees()[*idx] != degs[k]) throw MalformedError("variable " + names[k] + " has the wrong degree");
    }
    return target;
  }
  auto all = src->names();
  auto d = src->degrees();
  all.insert(all.end(), names.begin(), names.end());
  d.insert(d.end(), degs.begin(), degs.end());
  return make_poly_ring(all, d, src->order());
}

template <Field K>
PolyMatrix<K> map_matrix(const PolyMatrix<K>& a, const PolyRingPtr& target) {
  PolyMatrix<K> out;
  for (const auto& row : a) {
    out.emplace_back();
    for (const auto& p : row) out.back().push_back(p.map_to(target));
  }
  return out;
}

// [[A, B], [C, D]] from n x n blocks.
template <Field K>
PolyMatrix<K> blocks(const PolyRingPtr& ring, const PolyMatrix<K>& a, const PolyMatrix<K>& b, const PolyMatrix<K>& c,
                     const PolyMatrix<K>& d) {
  std::size_t n = a.size();
  auto out = zero_matrix<K>(ring, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out[i][j] = a[i][j];
      out[i][n + j] = b[i][j];
      out[n + i][j] = c[i][j];
      out[n + i][n + j] = d[i][j];
    }
  return out;
}

}  // namespace detail

/// ((u psi; phi -v), (v psi; phi -u)) over S[u,v], potential f + uv.
/// u gets degree 1 and v degree deg f - 1 unless a target ring fixes them.
template <Field K>
MatrixFactorization<K> knoerrer_periodicity(const MatrixFactorization<K>& m, const std::string& u = "u",
                                            const std::string& v = "v", PolyRingPtr target = nullptr) {
  detail::check_shape(m);
  int d = m.f.degree();
  int du = 1;
  if (target && target->index_of(u)) du = target->degrees()[*target->index_of(u)];
  int dv = d - du;
  if (dv < 1) throw MalformedError("potential degree too small for a second variable");
  auto ring = detail::extend_ring(m.ring, {u, v}, {du, dv}, target);
  std::size_t n = m.size();
  auto U = Polynomial<K>::variable(ring, u), V = Polynomial<K>::variable(ring, v);
  auto phi = detail::map_matrix(m.phi, ring), psi = detail::map_matrix(m.psi, ring);
  MatrixFactorization<K> out;
  out.ring = ring;
  out.f = m.f.map_to(ring) + U * V;
  out.phi = detail::blocks(ring, identity_matrix<K>(ring, n, U), psi, phi, identity_matrix<K>(ring, n, -V));
  out.psi = detail::blocks(ring, identity_matrix<K>(ring, n, V), psi, phi, identity_matrix<K>(ring, n, -U));
  out.rows = m.cols;
  for (int r : m.rows) out.rows.push_back(r + du);
  for (int c : m.cols) out.cols.push_back(c + du);
  for (int r : m.rows) out.cols.push_back(r + d);
  return out;
}

/// ((y psi; phi -y), ditto) over S[y], potential f + y^2; needs deg f even.
template <Field K>
MatrixFactorization<K> double_branched_cover(const MatrixFactorization<K>& m, const std::string& y = "y",
                                             PolyRingPtr target = nullptr) {
  detail::check_shape(m);
  int d = m.f.degree();
  if (d % 2 != 0) throw MalformedError("double branched cover needs a potential of even degree");
  int dy = d / 2;
  auto ring = detail::extend_ring(m.ring, {y}, {dy}, target);
  std::size_t n = m.size();
  auto Y = Polynomial<K>::variable(ring, y);
  auto phi = detail::map_matrix(m.phi, ring), psi = detail::map_matrix(m.psi, ring);
  MatrixFactorization<K> out;
  out.ring = ring;
  out.f = m.f.map_to(ring) + Y * Y;
  out.phi = detail::blocks(ring, identity_matrix<K>(ring, n, Y), psi, phi, identity_matrix<K>(ring, n, -Y));
  out.psi = out.phi;
  out.rows = m.cols;
  for (int r : m.rows) out.rows.push_back(r + dy);
  for (int c : m.cols) out.cols.push_back(c + dy);
  for (int r : m.rows) out.cols.push_back(r + d);
  return out;
}

/// Linear substitution: each source variable goes to `images[name]` (default:
/// the same-named target variable). The substitution must be an invertible
/// linear change of coordinates preserving degrees.
template <Field K>
MatrixFactorization<K> change_of_variables(const MatrixFactorization<K>& m, const PolyRingPtr& target,
                                           const std::map<std::string, Polynomial<K>>& images) {
  detail::check_shape(m);
  const auto& src = m.ring;
  if (src->nvars() != target->nvars()) throw MalformedError("substitution must be invertible: variable counts differ");
  std::vector<Polynomial<K>> imgs;
  auto jac = zeros<K>(src->nvars(), target->nvars());
  for (int i = 0; i < src->nvars(); ++i) {
    const auto& name = src->names()[i];
    Polynomial<K> img(target);
    if (auto it = images.find(name); it != images.end())
      img = it->second;
    else if (target->index_of(name))
      img = Polynomial<K>::variable(target, name);
    else
      throw MalformedError("no image for variable " + name);
    if (!same_ring(img.ring(), target)) throw ArityError("image of " + name + " is not in the target ring");
    if (img.is_zero() || !img.is_homogeneous() || img.degree() != src->degrees()[i])
      throw MalformedError("image of " + name + " does not preserve its degree");
    for (const auto& [mono, c] : img.terms()) {
      int var = -1, total = 0;
      for (int k = 0; k < target->nvars(); ++k)
        if (mono.exp[k]) {
          var = k;
          total += mono.exp[k];
        }
      if (total != 1) throw MalformedError("image of " + name + " is not linear");
      jac[i][var] = c;
    }
    imgs.push_back(std::move(img));
  }
  if (determinant(jac).is_zero()) throw MalformedError("substitution is not invertible");
  auto sub = [&](const PolyMatrix<K>& a) {
    PolyMatrix<K> out;
    for (const auto& row : a) {
      out.emplace_back();
      for (const auto& p : row) out.back().push_back(p.substitute(imgs));
    }
    return out;
  };
  return {target, m.f.substitute(imgs), sub(m.phi), sub(m.psi), m.rows, m.cols};
}

/// coker(phi) over S/(f): generators in degrees rows, relations the columns of phi.
template <Field K>
GradedModulePresentation<K> cokernel_module(const MatrixFactorization<K>& m) {
  GradedRing<K> r(m.ring, {m.f});
  return GradedModulePresentation<K>(r, m.rows, m.phi);
}

/// Bounded check that ... -> F1(-d) -phi-> F0(-d) -psi-> F1 -phi-> F0 -> coker -> 0
/// is a complex and exact at each of the first `steps` free modules in degrees <= cutoff.
/// Step 1 is F1 (ker phi = im psi), step 2 is F0(-d), and so on.
template <Field K>
Report periodic_resolution_check(const MatrixFactorization<K>& m, int steps, int cutoff) {
  detail::check_shape(m);
  Report r;
  GradedRing<K> ring(m.ring, {m.f});
  int d = m.f.degree();
  auto reduce_matrix_zero = [&](const PolyMatrix<K>& a) {
    for (const auto& row : a)
      for (const auto& p : row)
        if (!ring.is_zero_mod(p)) return false;
    return true;
  };
  bool phipsi = reduce_matrix_zero(matmul(m.ring, m.phi, m.psi));
  bool psiphi = reduce_matrix_zero(matmul(m.ring, m.psi, m.phi));

  GradedModulePresentation<K> cphi(ring, m.rows, m.phi), cpsi(ring, m.cols, m.psi);
  auto hr = [&](int e) { return e < 0 ? 0L : ring.hilbert_value(e); };
  auto free_dim = [&](const std::vector<int>& shifts, int e) {
    long s = 0;
    for (int t : shifts) s += hr(e - t);
    return s;
  };
  auto hc = [](const GradedModulePresentation<K>& c, int e) { return c.hilbert(e); };

  for (int k = 1; k <= steps; ++k) {
    std::string step = "step " + std::to_string(k);
    bool odd = k % 2 == 1;
    if (!r.expect(odd ? phipsi : psiphi, step + ": composition " + (odd ? "phi*psi" : "psi*phi") + " = 0 mod f"))
      return r;
    int s = odd ? (k - 1) / 2 * d : k / 2 * d;
    for (int e = 0; e <= cutoff; ++e) {
      long lhs, rhs;
      if (odd) {
        lhs = hc(cpsi, e - s);
        rhs = free_dim(m.rows, e - s) - hc(cphi, e - s);
      } else {
        lhs = hc(cphi, e - s);
        rhs = free_dim(m.cols, e - s + d) - hc(cpsi, e - s + d);
      }
      if (!r.expect(lhs == rhs, step + " degree " + std::to_string(e) + ": dim ker = dim im (" + std::to_string(rhs) +
                                    " vs " + std::to_string(lhs) + ")"))
        return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Morphisms of factorizations and splitting.

/// A degree-0 morphism (alpha on F0, beta on F1) with alpha*phi1 = phi2*beta.
template <Field K>
struct MfMorphism {
  PolyMatrix<K> alpha, beta;
};

namespace detail {

template <Field K>
Matrix<K> constant_part(const PolyMatrix<K>& a) {
  auto out = zeros<K>(a.size(), a.empty() ? 0 : a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] = a[i][j].constant_term();
  return out;
}

template <Field K>
PolyMatrix<K> lift(const PolyRingPtr& ring, const Matrix<K>& a) {
  auto out = zero_matrix<K>(ring, a.size(), a.empty() ? 0 : a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] = Polynomial<K>::constant(ring, a[i][j]);
  return out;
}

template <Field K>
PolyMatrix<K> add(const PolyMatrix<K>& a, const PolyMatrix<K>& b, const K& cb = K::one()) {
  auto out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!b[i][j].is_zero()) out[i][j] += b[i][j].scale(cb);
  return out;
}

template <Field K>
PolyMatrix<K> scale(const PolyMatrix<K>& a, const K& c) {
  auto out = a;
  for (auto& row : out)
    for (auto& p : row) p = p.scale(c);
  return out;
}

template <Field K>
bool is_zero_matrix(const PolyMatrix<K>& a) {
  for (const auto& row : a)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

/// Inverse of a graded automorphism whose constant part is invertible.
template <Field K>
std::optional<PolyMatrix<K>> graded_inverse(const PolyRingPtr& ring, const PolyMatrix<K>& p) {
  std::size_t n = p.size();
  auto c = constant_part(p);
  auto cinv = inverse(c);
  if (!cinv) return std::nullopt;
  auto ci = lift(ring, *cinv);
  // p = c (I + N) with N nilpotent, so p^-1 = (I - N + N^2 - ...) c^-1.
  auto nmat = matmul(ring, ci, add(p, lift(ring, c), -K::one()));
  auto id = identity_matrix<K>(ring, n, Polynomial<K>::constant(ring, K::one()));
  auto sum = id, term = id;
  for (std::size_t k = 0; k < n + 1; ++k) {
    term = scale(matmul(ring, term, nmat), -K::one());
    if (is_zero_matrix(term)) break;
    sum = add(sum, term);
  }
  auto inv = matmul(ring, sum, ci);
  if (!(matmul(ring, inv, p) == id)) return std::nullopt;
  return inv;
}

}  // namespace detail

/// k-basis of degree-0 morphisms a -> b.
template <Field K>
std::vector<MfMorphism<K>> mf_hom_basis(const MatrixFactorization<K>& a, const MatrixFactorization<K>& b) {
  const auto& ring = a.ring;
  if (!same_ring(a.ring, b.ring)) throw MalformedError("morphisms need a common ring");
  std::size_t na = a.size(), nb = b.size();
  struct Unknown {
    bool is_beta;
    std::size_t i, j;
    Monomial mono;
  };
  std::vector<Unknown> unk;
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (const auto& mono : ring->monomials_of_degree(a.rows[j] - b.rows[i])) unk.push_back({false, i, j, mono});
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (const auto& mono : ring->monomials_of_degree(a.cols[j] - b.cols[i])) unk.push_back({true, i, j, mono});
  if (unk.empty()) return {};

  // alpha*phi_a - phi_b*beta = 0, coefficientwise.
  std::map<std::tuple<std::size_t, std::size_t, std::vector<int>>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, K>>> cols(unk.size());
  auto record = [&](std::size_t u, std::size_t i, std::size_t j, const Polynomial<K>& p, const K& sign) {
    for (const auto& [mono, c] : p.terms()) {
      std::vector<int> key(mono.exp.begin(), mono.exp.end());
      auto [it, fresh] = row_of.try_emplace({i, j, key}, row_of.size());
      cols[u].push_back({it->second, sign * c});
    }
  };
  for (std::size_t u = 0; u < unk.size(); ++u) {
    const auto& x = unk[u];
    if (!x.is_beta) {
      // alpha[i][j] contributes to row i of alpha*phi_a: alpha[i][j] * phi_a[j][col].
      for (std::size_t col = 0; col < na; ++col)
        if (!a.phi[x.j][col].is_zero()) record(u, x.i, col, a.phi[x.j][col].mul_term(x.mono, K::one()), K::one());
    } else {
      // beta[i][j] contributes phi_b[row][i] * beta[i][j] at (row, j).
      for (std::size_t row = 0; row < nb; ++row)
        if (!b.phi[row][x.i].is_zero()) record(u, row, x.j, b.phi[row][x.i].mul_term(x.mono, K::one()), -K::one());
    }
  }
  auto mat = zeros<K>(row_of.size(), unk.size());
  for (std::size_t u = 0; u < unk.size(); ++u)
    for (const auto& [r, c] : cols[u]) mat[r][u] += c;
  std::vector<std::vector<K>> null;
  if (row_of.empty()) {
    for (std::size_t u = 0; u < unk.size(); ++u) {
      std::vector<K> v(unk.size(), K::zero());
      v[u] = K::one();
      null.push_back(std::move(v));
    }
  } else {
    null = nullspace(std::move(mat), unk.size());
  }
  std::vector<MfMorphism<K>> out;
  for (const auto& v : null) {
    MfMorphism<K> h{zero_matrix<K>(ring, nb, na), zero_matrix<K>(ring, nb, na)};
    for (std::size_t u = 0; u < unk.size(); ++u) {
      if (v[u].is_zero()) continue;
      auto& target = unk[u].is_beta ? h.beta : h.alpha;
      target[unk[u].i][unk[u].j] += Polynomial<K>::term(ring, unk[u].mono, v[u]);
    }
    out.push_back(std::move(h));
  }
  return out;
}

template <Field K>
MfMorphism<K> random_morphism(const std::vector<MfMorphism<K>>& basis, std::mt19937& rng, bool sparse = false) {
  std::uniform_int_distribution<long> coef(-20, 20);
  std::bernoulli_distribution keep(0.3);
  MfMorphism<K> out{detail::scale(basis.front().alpha, K::zero()), detail::scale(basis.front().beta, K::zero())};
  for (const auto& b : basis) {
    if (sparse && !keep(rng)) continue;
    K c = K::from_int(coef(rng));
    out.alpha = detail::add(out.alpha, b.alpha, c);
    out.beta = detail::add(out.beta, b.beta, c);
  }
  return out;
}

/// True with a witness when a and b are isomorphic by a degree-0 change of bases.
template <Field K>
std::optional<MfMorphism<K>> find_equivalence(const MatrixFactorization<K>& a, const MatrixFactorization<K>& b,
                                              unsigned seed = 1) {
  if (a.size() != b.size() || !same_ring(a.ring, b.ring) || !(a.f == b.f)) return std::nullopt;
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(a.rows) != sorted(b.rows) || sorted(a.cols) != sorted(b.cols)) return std::nullopt;
  if (a.size() == 0) return MfMorphism<K>{};
  auto homs = mf_hom_basis(a, b);
  if (homs.empty()) return std::nullopt;
  std::mt19937 rng(seed);
  for (int attempt = 0; attempt < 6; ++attempt) {
    auto h = random_morphism(homs, rng);
    if (!determinant(detail::constant_part(h.alpha)).is_zero() &&
        !determinant(detail::constant_part(h.beta)).is_zero())
      return h;
  }
  return std::nullopt;
}

template <Field K>
bool are_equivalent(const MatrixFactorization<K>& a, const MatrixFactorization<K>& b, unsigned seed = 1) {
  return find_equivalence(a, b, seed).has_value();
}

/// Row permutation sigma and column permutation tau with b.phi[i][j] = a.phi[sigma i][tau j]
/// (and the matching statement for psi and the twists), by exhaustive search.
template <Field K>
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> find_permutation(
    const MatrixFactorization<K>& a, const MatrixFactorization<K>& b) {
  std::size_t n = a.size();
  if (n != b.size() || !(a.f == b.f) || n > 7) return std::nullopt;
  std::vector<std::size_t> sigma(n), tau(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool rows_ok = true;
    for (std::size_t i = 0; i < n && rows_ok; ++i) rows_ok = b.rows[i] == a.rows[sigma[i]];
    if (!rows_ok) continue;
    std::iota(tau.begin(), tau.end(), 0);
    do {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) ok = b.cols[j] == a.cols[tau[j]];
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j)
          ok = b.phi[i][j] == a.phi[sigma[i]][tau[j]] && b.psi[j][i] == a.psi[tau[j]][sigma[i]];
      if (ok) return std::make_pair(sigma, tau);
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

namespace detail {

template <Field K>
PolyMatrix<K> eval_poly(const PolyRingPtr& ring, const std::vector<K>& p, const PolyMatrix<K>& a) {
  std::size_t n = a.size();
  auto acc = zero_matrix<K>(ring, n, n);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = matmul(ring, acc, a);
    for (std::size_t i = 0; i < n; ++i) acc[i][i] += Polynomial<K>::constant(ring, *it);
  }
  return acc;
}

// s, t with s*a + t*b = gcd (monic), univariate dense, low to high.
template <Field K>
std::vector<K> crt_idempotent(const std::vector<K>& a, const std::vector<K>& b) {
  // Returns t*b where s*a + t*b = 1, so the result is 1 mod a and 0 mod b.
  using V = std::vector<K>;
  auto sub = [](V x, const V& y) {
    if (y.size() > x.size()) x.resize(y.size(), K::zero());
    for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
    trim(x);
    return x;
  };
  auto mul = [](const V& x, const V& y) {
    if (x.empty() || y.empty()) return V{};
    V out(x.size() + y.size() - 1, K::zero());
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
    trim(out);
    return out;
  };
  V r0 = a, r1 = b, t0{}, t1{K::one()};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto q = poly_divexact(r0, r1);  // quotient; remainder computed below
    auto r2 = sub(r0, mul(q, r1));
    auto t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw ArithmeticError("factors are not coprime");
  K inv = r0[0].inverse();
  for (auto& c : t0) c = c * inv;
  return mul(t0, b);
}

template <Field K>
std::vector<K> linear_power(const K& root, int m) {
  std::vector<K> p{K::one()};
  for (int k = 0; k < m; ++k) {
    std::vector<K> next(p.size() + 1, K::zero());
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= p[i] * root;
    }
    p = std::move(next);
  }
  return p;
}

// Columns of `e` (then of `f`) whose constant parts are independent.
template <Field K>
std::vector<std::pair<int, std::size_t>> choose_columns(const Matrix<K>& e, const Matrix<K>& f) {
  std::vector<std::pair<int, std::size_t>> chosen;
  Matrix<K> acc;
  std::size_t n = e.size();
  auto try_add = [&](const Matrix<K>& src, int which) {
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<K> col;
      for (std::size_t r = 0; r < n; ++r) col.push_back(src[r][c]);
      auto trial = acc;
      trial.push_back(col);
      if (rank(trial) == trial.size()) {
        acc = std::move(trial);
        chosen.push_back({which, c});
      }
    }
  };
  try_add(e, 0);
  try_add(f, 1);
  return chosen;
}

template <Field K>
std::optional<std::pair<MatrixFactorization<K>, MatrixFactorization<K>>> split_with(
    const MatrixFactorization<K>& m, const MfMorphism<K>& z) {
  const auto& ring = m.ring;
  std::size_t n = m.size();
  auto za = constant_part(z.alpha), zb = constant_part(z.beta);
  auto big = zeros<K>(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      big[i][j] = za[i][j];
      big[n + i][n + j] = zb[i][j];
    }
  auto chi = characteristic_polynomial(big);
  auto roots = K::roots_of(chi);
  if (roots.size() < 2) return std::nullopt;
  const K& lambda = roots.front();
  int mult = 0;
  auto rest = chi;
  while (true) {
    auto lin = linear_power(lambda, 1);
    if (!poly_mod(rest, lin).empty()) break;
    rest = poly_divexact(rest, lin);
    ++mult;
  }
  auto p = crt_idempotent(linear_power(lambda, mult), rest);

  auto ea = eval_poly(ring, p, z.alpha), eb = eval_poly(ring, p, z.beta);
  for (int it = 0; it < 12; ++it) {
    auto ea2 = matmul(ring, ea, ea), eb2 = matmul(ring, eb, eb);
    if (ea2 == ea && eb2 == eb) break;
    ea = add(scale(ea2, K::from_int(3)), matmul(ring, ea2, ea), K::from_int(-2));
    eb = add(scale(eb2, K::from_int(3)), matmul(ring, eb2, eb), K::from_int(-2));
  }
  if (!(matmul(ring, ea, ea) == ea) || !(matmul(ring, eb, eb) == eb)) return std::nullopt;

  auto one = identity_matrix<K>(ring, n, Polynomial<K>::constant(ring, K::one()));
  auto basis_change = [&](const PolyMatrix<K>& e, const std::vector<int>& twists)
      -> std::optional<std::tuple<PolyMatrix<K>, std::vector<int>, std::size_t>> {
    auto comp = add(one, e, -K::one());
    auto chosen = choose_columns(constant_part(e), constant_part(comp));
    if (chosen.size() != n) return std::nullopt;
    auto pm = zero_matrix<K>(ring, n, n);
    std::vector<int> tw;
    std::size_t first = 0;
    for (std::size_t c = 0; c < n; ++c) {
      auto [which, col] = chosen[c];
      if (which == 0) ++first;
      const auto& src = which == 0 ? e : comp;
      for (std::size_t r = 0; r < n; ++r) pm[r][c] = src[r][col];
      tw.push_back(twists[col]);
    }
    return std::make_tuple(pm, tw, first);
  };
  auto bp = basis_change(ea, m.rows), bq = basis_change(eb, m.cols);
  if (!bp || !bq) return std::nullopt;
  auto& [P, rows, r0] = *bp;
  auto& [Q, cols, r1] = *bq;
  if (r0 != r1 || r0 == 0 || r0 == n) return std::nullopt;
  auto pinv = graded_inverse(ring, P), qinv = graded_inverse(ring, Q);
  if (!pinv || !qinv) return std::nullopt;
  auto phi = matmul(ring, matmul(ring, *pinv, m.phi), Q);
  auto psi = matmul(ring, matmul(ring, *qinv, m.psi), P);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i < r0) != (j < r0) && (!phi[i][j].is_zero() || !psi[i][j].is_zero())) return std::nullopt;
  auto block = [&](std::size_t lo, std::size_t hi) {
    MatrixFactorization<K> b{ring, m.f, zero_matrix<K>(ring, hi - lo, hi - lo), zero_matrix<K>(ring, hi - lo, hi - lo),
                             {}, {}};
    for (std::size_t i = lo; i < hi; ++i) {
      b.rows.push_back(rows[i]);
      b.cols.push_back(cols[i]);
      for (std::size_t j = lo; j < hi; ++j) {
        b.phi[i - lo][j - lo] = phi[i][j];
        b.psi[i - lo][j - lo] = psi[i][j];
      }
    }
    // 1x1 blocks: make phi monic.
    if (b.size() == 1 && !b.phi[0][0].is_zero()) {
      K c = b.phi[0][0].leading_coefficient();
      b.phi[0][0] = b.phi[0][0].scale(c.inverse());
      b.psi[0][0] = b.psi[0][0].scale(c);
    }
    return b;
  };
  return std::make_pair(block(0, r0), block(r0, n));
}

}  // namespace detail

/// Splits m into indecomposable-looking blocks by searching for idempotents in
/// its degree-0 endomorphism algebra. Returns nullopt when no split is found;
/// that is a heuristic outcome, not a proof of indecomposability.
template <Field K>
std::optional<std::vector<MatrixFactorization<K>>> try_split(const MatrixFactorization<K>& m, unsigned seed = 1) {
  if (!verify_mf(m)) return std::nullopt;
  if (m.size() <= 1) return std::nullopt;
  auto homs = mf_hom_basis(m, m);
  if (homs.size() < 2) return std::nullopt;
  std::mt19937 rng(seed);
  std::optional<std::pair<MatrixFactorization<K>, MatrixFactorization<K>>> halves;
  for (int attempt = 0; attempt < 4 && !halves; ++attempt) halves = detail::split_with(m, random_morphism(homs, rng));
  for (std::size_t k = 0; k < homs.size() && !halves; ++k) halves = detail::split_with(m, homs[k]);
  for (int attempt = 0; attempt < 8 && !halves; ++attempt)
    halves = detail::split_with(m, random_morphism(homs, rng, true));
  if (!halves) return std::nullopt;
  std::vector<MatrixFactorization<K>> out;
  for (const auto* part : {&halves->first, &halves->second}) {
    if (auto sub = try_split(*part, seed + 1))
      out.insert(out.end(), sub->begin(), sub->end());
    else
      out.push_back(*part);
  }
  return out;
}

/// try_split after a change of variables.
template <Field K>
std::optional<std::vector<MatrixFactorization<K>>> try_split(const MatrixFactorization<K>& m, const PolyRingPtr& target,
                                                             const std::map<std::string, Polynomial<K>>& substitution,
                                                             unsigned seed = 1) {
  return try_split(change_of_variables(m, target, substitution), seed);
}

}  // namespace mfx
