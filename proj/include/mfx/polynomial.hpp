#pragma once

#include "mfx/field.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mfx {

/// Raised when polynomials from different ambient rings meet.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxVars = 12;

/// Exponent vector plus its weighted degree (kept in sync by PolyRing).
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  int deg = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }

  bool divides(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }
  bool is_one() const {
    for (auto e : exp)
      if (e) return false;
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i] && other.exp[i]) return false;
    return true;
  }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  m.deg = a.deg + b.deg;
  return m;
}

/// a / b, assuming b divides a.
inline Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  m.deg = a.deg - b.deg;
  return m;
}

enum class MonomialOrder { GRevLex, Lex };

inline std::string to_string(MonomialOrder o) { return o == MonomialOrder::Lex ? "lex" : "grevlex"; }

/// Ambient polynomial ring k[x_1..x_n]: variable names, positive weights, order.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, std::vector<int> degrees,
           MonomialOrder order = MonomialOrder::GRevLex)
      : names_(std::move(names)), degrees_(std::move(degrees)), order_(order) {
    if (names_.size() > static_cast<std::size_t>(kMaxVars))
      throw ArityError("too many variables (max " + std::to_string(kMaxVars) + ")");
    if (degrees_.empty()) degrees_.assign(names_.size(), 1);
    if (degrees_.size() != names_.size()) throw ArityError("variable/degree count mismatch");
    for (int d : degrees_)
      if (d <= 0) throw std::invalid_argument("variable degrees must be positive");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
  }

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& degrees() const { return degrees_; }
  MonomialOrder order() const { return order_; }

  std::optional<int> index_of(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  int weighted_degree(const Monomial& m) const {
    int d = 0;
    for (int i = 0; i < nvars(); ++i) d += degrees_[i] * m.exp[i];
    return d;
  }

  Monomial variable(int i) const {
    Monomial m;
    m.exp[i] = 1;
    m.deg = degrees_[i];
    return m;
  }

  Monomial make(const std::vector<int>& exps) const {
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) m.exp[i] = static_cast<std::uint16_t>(exps[i]);
    m.deg = weighted_degree(m);
    return m;
  }

  Monomial lcm(const Monomial& a, const Monomial& b) const {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.exp[i] = std::max(a.exp[i], b.exp[i]);
    m.deg = weighted_degree(m);
    return m;
  }

  /// Three-way comparison: positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (order_ == MonomialOrder::GRevLex) {
      if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
      for (int i = nvars() - 1; i >= 0; --i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
      return 0;
    }
    for (int i = 0; i < nvars(); ++i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
    return 0;
  }

  /// All monomials of weighted degree d.
  std::vector<Monomial> monomials_of_degree(int d) const {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur;
    enumerate(0, d, cur, out);
    std::sort(out.begin(), out.end(),
              [this](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
    return out;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
      if (!m.exp[i]) continue;
      if (!s.empty()) s += "*";
      s += names_[i];
      if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
    }
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.names_ == b.names_ && a.degrees_ == b.degrees_ && a.order_ == b.order_;
  }

 private:
  void enumerate(int var, int remaining, Monomial& cur, std::vector<Monomial>& out) const {
    if (var == nvars()) {
      if (remaining == 0) {
        cur.deg = weighted_degree(cur);
        out.push_back(cur);
      }
      return;
    }
    for (int e = 0; e * degrees_[var] <= remaining; ++e) {
      cur.exp[var] = static_cast<std::uint16_t>(e);
      enumerate(var + 1, remaining - e * degrees_[var], cur, out);
    }
    cur.exp[var] = 0;
  }

  std::vector<std::string> names_;
  std::vector<int> degrees_;
  MonomialOrder order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

inline PolyRingPtr make_poly_ring(std::vector<std::string> names, std::vector<int> degrees = {},
                                  MonomialOrder order = MonomialOrder::GRevLex) {
  return std::make_shared<const PolyRing>(std::move(names), std::move(degrees), order);
}

inline bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Sparse polynomial; terms strictly decreasing in the ring's order, no zero coefficients.
template <Field K>
class Polynomial {
 public:
  using Term = std::pair<Monomial, K>;

  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(PolyRingPtr ring, const K& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static Polynomial variable(PolyRingPtr ring, int i) {
    Polynomial p(ring);
    p.terms_.push_back({ring->variable(i), K::one()});
    return p;
  }
  static Polynomial variable(PolyRingPtr ring, const std::string& name) {
    auto idx = ring->index_of(name);
    if (!idx) throw ArityError("unknown variable " + name);
    return variable(std::move(ring), *idx);
  }
  static Polynomial term(PolyRingPtr ring, const Monomial& m, const K& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  /// Builds from arbitrary (possibly repeated, unordered) terms.
  static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Monomial& leading_monomial() const { return terms_.front().first; }
  const K& leading_coefficient() const { return terms_.front().second; }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  K constant_term() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return K::zero();
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.first.deg != terms_.front().first.deg) return false;
    return true;
  }
  /// Weighted degree of the leading term (the degree, for homogeneous input); -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first.deg);
    return d;
  }

  K coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.first == m) return t.second;
    return K::zero();
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const auto& ring = check(a, b);
    Polynomial r(ring);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = ring->compare(a.terms_[i].first, b.terms_[j].first);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        K s = a.terms_[i].second + b.terms_[j].second;
        if (!s.is_zero()) r.terms_.push_back({a.terms_[i].first, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
  }
  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const auto& ring = check(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(ring);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second);
    std::vector<Term> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) acc.push_back({ma * mb, ca * cb});
    return from_terms(ring, std::move(acc));
  }
  friend Polynomial operator*(const K& c, const Polynomial& p) { return p.scale(c); }
  friend Polynomial operator*(const Polynomial& p, const K& c) { return p.scale(c); }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scale(const K& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.second = t.second * c;
    return r;
  }
  Polynomial mul_term(const Monomial& m, const K& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    // Multiplication by a monomial preserves the order of terms.
    for (const auto& t : terms_) r.terms_.push_back({t.first * m, t.second * c});
    return r;
  }
  Polynomial pow(int e) const {
    Polynomial r = constant(ring_, K::one());
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scale(leading_coefficient().inverse());
  }

  /// Degree-d homogeneous component.
  Polynomial component(int d) const {
    Polynomial r(ring_);
    for (const auto& t : terms_)
      if (t.first.deg == d) r.terms_.push_back(t);
    return r;
  }

  /// Substitutes images[i] for variable i; images live in the target ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != ring_->nvars())
      throw ArityError("substitution needs one image per variable");
    PolyRingPtr target = images.empty() ? ring_ : images.front().ring();
    Polynomial r(target);
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(target, c);
      for (int i = 0; i < ring_->nvars(); ++i) {
        int e = m.exp[i];
        if (!e) continue;
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(target, K::one()));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
        t = t * cache[e];
      }
      r += t;
    }
    return r;
  }

  /// Re-expresses in another ring whose variables include ours, matching by name.
  Polynomial map_to(const PolyRingPtr& target) const {
    if (same_ring(ring_, target)) {
      Polynomial r(*this);
      r.ring_ = target;
      return r;
    }
    std::vector<int> where(ring_->nvars());
    for (int i = 0; i < ring_->nvars(); ++i) {
      auto idx = target->index_of(ring_->names()[i]);
      if (!idx) throw ArityError("variable " + ring_->names()[i] + " missing from target ring");
      where[i] = *idx;
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Monomial n;
      for (int i = 0; i < ring_->nvars(); ++i) n.exp[where[i]] = m.exp[i];
      n.deg = target->weighted_degree(n);
      out.push_back({n, c});
    }
    return from_terms(target, std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second))
        return false;
    return a.is_zero() || same_ring(a.ring_, b.ring_);
  }

 private:
  static const PolyRingPtr& check(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_ || !b.ring_) {
      if (a.ring_) return a.ring_;
      if (b.ring_) return b.ring_;
      throw ArityError("polynomial without ring");
    }
    if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_))
      throw ArityError("polynomials belong to different rings");
    return a.ring_;
  }

  void normalize() {
    const auto& ring = ring_;
    std::sort(terms_.begin(), terms_.end(),
              [&ring](const Term& x, const Term& y) { return ring->compare(x.first, y.first) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

/// Dense matrix of polynomials, row-major.
template <Field K>
using PolyMatrix = std::vector<std::vector<Polynomial<K>>>;

template <Field K>
PolyMatrix<K> zero_matrix(const PolyRingPtr& ring, std::size_t rows, std::size_t cols) {
  return PolyMatrix<K>(rows, std::vector<Polynomial<K>>(cols, Polynomial<K>(ring)));
}

template <Field K>
PolyMatrix<K> identity_matrix(const PolyRingPtr& ring, std::size_t n, const Polynomial<K>& diag) {
  auto m = zero_matrix<K>(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = diag;
  return m;
}

template <Field K>
PolyMatrix<K> matmul(const PolyRingPtr& ring, const PolyMatrix<K>& a, const PolyMatrix<K>& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  auto out = zero_matrix<K>(ring, n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw ArityError("matrix shapes do not compose");
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l)
        if (!a[i][l].is_zero() && !b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
  }
  return out;
}

template <Field K>
PolyMatrix<K> transpose(const PolyRingPtr& ring, const PolyMatrix<K>& a) {
  std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
  auto out = zero_matrix<K>(ring, m, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out[j][i] = a[i][j];
  return out;
}

}  // namespace mfx
