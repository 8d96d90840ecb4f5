#pragma once

// Exact coefficient fields: Q, Q(i) and GF(p) with p = 1 mod 4.
//
// Every field type exposes the same small surface so that polynomials,
// Groebner bases and linear algebra can be written once as templates:
//   zero(), one(), from_int(), from_rational(), imaginary_unit(),
//   is_zero(), arithmetic operators, to_string(), roots_of().

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfx {

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Continued-fraction approximation with bounded denominator.
inline mpq_class best_rational(long double x, long max_den) {
  long double r = x;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int it = 0; it < 64; ++it) {
    long double a = std::floor(r);
    if (std::fabs(a) > 1e15L) break;
    mpz_class ai = static_cast<long>(a);
    mpz_class h2 = ai * h1 + h0;
    mpz_class k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    long double frac = r - a;
    if (std::fabs(frac) < 1e-12L) break;
    r = 1.0L / frac;
  }
  if (k1 == 0) return mpq_class(0);
  mpq_class q(h1, k1);
  q.canonicalize();
  return q;
}

// Durand-Kerner on a monic-normalised complex polynomial, coefficients low to high.
inline std::vector<std::complex<long double>> approximate_roots(
    std::vector<std::complex<long double>> c) {
  while (!c.empty() && std::abs(c.back()) == 0.0L) c.pop_back();
  int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  auto lead = c.back();
  for (auto& x : c) x /= lead;
  std::vector<std::complex<long double>> z(n);
  std::complex<long double> seed(0.4L, 0.9L);
  for (int i = 0; i < n; ++i) z[i] = std::pow(seed, i);
  for (int it = 0; it < 2000; ++it) {
    long double delta = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<long double> p = c[n];
      for (int k = n - 1; k >= 0; --k) p = p * z[i] + c[k];
      std::complex<long double> q = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) q *= (z[i] - z[j]);
      if (std::abs(q) < 1e-300L) q = 1e-30L;
      auto step = p / q;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-18L) break;
  }
  return z;
}

}  // namespace detail

/// Exact rational numbers.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT: implicit integer promotion is convenient in tests
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational zero() { return Rational(0L); }
  static Rational one() { return Rational(1L); }
  static Rational from_int(long v) { return Rational(v); }
  static Rational from_rational(const mpq_class& q) { return Rational(q); }
  static std::optional<Rational> imaginary_unit() { return std::nullopt; }
  static constexpr const char* name() { return "QQ"; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  const mpq_class& value() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

  Rational inverse() const { return one() / *this; }

  /// Rational coefficients print as `c` or `c/d`.
  std::string to_string() const { return detail::rational_to_string(v_); }
  /// True when the printed form needs a leading minus sign.
  bool is_negative_real() const { return sgn(v_) < 0; }

  std::complex<long double> to_complex() const { return {static_cast<long double>(v_.get_d()), 0.0L}; }

  // Roots in Q of a polynomial with coefficients low-to-high, found by
  // numeric approximation, rounding and exact confirmation.
  static std::vector<Rational> roots_of(const std::vector<Rational>& coeffs);

 private:
  mpq_class v_{0};
};

/// Gaussian rationals Q(i); the catalog computes over this field throughout.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational zero() { return GaussianRational(0L); }
  static GaussianRational one() { return GaussianRational(1L); }
  static GaussianRational from_int(long v) { return GaussianRational(v); }
  static GaussianRational from_rational(const mpq_class& q) { return GaussianRational(q, mpq_class(0)); }
  static std::optional<GaussianRational> imaginary_unit() { return GaussianRational(mpq_class(0), mpq_class(1)); }
  static constexpr const char* name() { return "QQ[i]"; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    if (a.is_real() && b.is_real()) return {a.re_ * b.re_, mpq_class(0)};
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero");
    if (b.is_real()) return {a.re_ / b.re_, a.im_ / b.re_};
    mpq_class n = b.re_ * b.re_ + b.im_ * b.im_;
    return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
  }
  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  GaussianRational inverse() const { return one() / *this; }
  GaussianRational conj() const { return {re_, -im_}; }

  /// `c`, `c/d`, or parenthesised `(a+bi)` when the imaginary part is non-zero.
  std::string to_string() const {
    if (is_real()) return detail::rational_to_string(re_);
    std::string out = "(";
    if (sgn(re_) != 0) out += detail::rational_to_string(re_);
    mpq_class mag = abs(im_);
    if (sgn(im_) < 0)
      out += "-";
    else if (sgn(re_) != 0)
      out += "+";
    if (mag != 1) out += detail::rational_to_string(mag);
    out += "i)";
    return out;
  }
  bool is_negative_real() const { return is_real() && sgn(re_) < 0; }

  std::complex<long double> to_complex() const {
    return {static_cast<long double>(re_.get_d()), static_cast<long double>(im_.get_d())};
  }

  static std::vector<GaussianRational> roots_of(const std::vector<GaussianRational>& coeffs);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Prime field GF(P). Only P = 1 (mod 4) carries a square root of -1.
template <std::uint32_t P>
class PrimeField {
  static_assert(P > 2, "characteristic 2 is not supported");

 public:
  PrimeField() = default;
  PrimeField(long v) : v_(reduce(v)) {}  // NOLINT

  static PrimeField zero() { return PrimeField(0L); }
  static PrimeField one() { return PrimeField(1L); }
  static PrimeField from_int(long v) { return PrimeField(v); }
  static PrimeField from_rational(const mpq_class& q) {
    mpz_class n = q.get_num() % P;
    mpz_class d = q.get_den() % P;
    if (d == 0) throw ArithmeticError("denominator vanishes modulo p");
    return PrimeField(n.get_si()) / PrimeField(d.get_si());
  }
  static std::optional<PrimeField> imaginary_unit() {
    if (P % 4 != 1) return std::nullopt;
    for (std::uint64_t a = 2; a < P; ++a) {
      PrimeField c = pow(PrimeField(static_cast<long>(a)), (P - 1) / 4);
      if ((c * c).v_ == P - 1) return c;
    }
    return std::nullopt;
  }
  static std::string name() { return "GF(" + std::to_string(P) + ")"; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::uint64_t value() const { return v_; }

  friend PrimeField operator+(PrimeField a, PrimeField b) { return raw((a.v_ + b.v_) % P); }
  friend PrimeField operator-(PrimeField a, PrimeField b) { return raw((a.v_ + P - b.v_) % P); }
  friend PrimeField operator*(PrimeField a, PrimeField b) { return raw((a.v_ * b.v_) % P); }
  friend PrimeField operator/(PrimeField a, PrimeField b) {
    if (b.is_zero()) throw ArithmeticError("division by zero");
    return a * pow(b, P - 2);
  }
  PrimeField operator-() const { return raw((P - v_) % P); }
  PrimeField& operator+=(PrimeField o) { return *this = *this + o; }
  PrimeField& operator-=(PrimeField o) { return *this = *this - o; }
  PrimeField& operator*=(PrimeField o) { return *this = *this * o; }
  friend bool operator==(PrimeField a, PrimeField b) { return a.v_ == b.v_; }

  PrimeField inverse() const { return one() / *this; }

  std::string to_string() const { return std::to_string(v_); }
  bool is_negative_real() const { return false; }
  std::complex<long double> to_complex() const { return {static_cast<long double>(v_), 0.0L}; }

  // Exhaustive search; fine for the small primes used in tests.
  static std::vector<PrimeField> roots_of(const std::vector<PrimeField>& coeffs) {
    std::vector<PrimeField> out;
    for (std::uint64_t a = 0; a < P; ++a) {
      PrimeField x = raw(a), acc = zero();
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
      if (acc.is_zero()) out.push_back(x);
    }
    return out;
  }

  static PrimeField pow(PrimeField b, std::uint64_t e) {
    PrimeField r = one();
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

 private:
  static std::uint64_t reduce(long v) {
    long m = v % static_cast<long>(P);
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<long>(P) : m);
  }
  static PrimeField raw(std::uint64_t v) {
    PrimeField f;
    f.v_ = v;
    return f;
  }
  std::uint64_t v_ = 0;
};

template <class K>
concept Field = requires(const K a, const K b, long n, const mpq_class q) {
  { K::zero() } -> std::same_as<K>;
  { K::one() } -> std::same_as<K>;
  { K::from_int(n) } -> std::same_as<K>;
  { K::from_rational(q) } -> std::same_as<K>;
  { K::imaginary_unit() } -> std::same_as<std::optional<K>>;
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

namespace detail {

template <class K>
K horner(const std::vector<K>& coeffs, const K& x) {
  K acc = K::zero();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Dense univariate helpers, coefficients low to high.
template <class K>
void trim(std::vector<K>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

template <class K>
std::vector<K> poly_mod(std::vector<K> a, std::vector<K> b) {
  trim(a);
  trim(b);
  if (b.empty()) throw ArithmeticError("univariate division by zero");
  while (a.size() >= b.size()) {
    K q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

template <class K>
std::vector<K> poly_divexact(std::vector<K> a, std::vector<K> b) {
  trim(a);
  trim(b);
  std::vector<K> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, K::zero());
  while (a.size() >= b.size() && !a.empty()) {
    K c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

template <class K>
std::vector<K> poly_gcd(std::vector<K> a, std::vector<K> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    K lead = a.back();
    for (auto& c : a) c = c / lead;
  }
  return a;
}

// p / gcd(p, p'); valid in characteristic zero.
template <class K>
std::vector<K> squarefree_part(std::vector<K> p) {
  trim(p);
  if (p.size() <= 2) return p;
  std::vector<K> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * K::from_int(static_cast<long>(i)));
  auto g = poly_gcd(p, d);
  if (g.size() <= 1) return p;
  return poly_divexact(p, g);
}

}  // namespace detail

inline std::vector<Rational> Rational::roots_of(const std::vector<Rational>& input) {
  auto coeffs = detail::squarefree_part(input);
  std::vector<std::complex<long double>> c;
  for (const auto& a : coeffs) c.push_back(a.to_complex());
  std::vector<Rational> out;
  for (const auto& z : detail::approximate_roots(c)) {
    if (std::fabs(z.imag()) > 1e-6L) continue;
    Rational cand(detail::best_rational(z.real(), 100000));
    if (!detail::horner(coeffs, cand).is_zero()) continue;
    bool seen = false;
    for (const auto& r : out) seen = seen || r == cand;
    if (!seen) out.push_back(cand);
  }
  return out;
}

inline std::vector<GaussianRational> GaussianRational::roots_of(
    const std::vector<GaussianRational>& input) {
  auto coeffs = detail::squarefree_part(input);
  std::vector<std::complex<long double>> c;
  for (const auto& a : coeffs) c.push_back(a.to_complex());
  std::vector<GaussianRational> out;
  for (const auto& z : detail::approximate_roots(c)) {
    GaussianRational cand(detail::best_rational(z.real(), 100000),
                          detail::best_rational(z.imag(), 100000));
    if (!detail::horner(coeffs, cand).is_zero()) continue;
    bool seen = false;
    for (const auto& r : out) seen = seen || r == cand;
    if (!seen) out.push_back(cand);
  }
  return out;
}

}  // namespace mfx
