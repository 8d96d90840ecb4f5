#pragma once

// Text grammar for polynomials and ring descriptor blocks.
//
//   polynomial:  terms joined by + / -, each term a `*`-separated product of
//                coefficients (`c`, `c/d`, `(a+bi)`) and powers `x^e`.
//   ring block:  vars: x,u,v,t
//                degs: 1,1,1,1
//                order: lex            (only when not grevlex)
//                mod: x^2 + u*v        (comma-separated generators; omitted when free)

#include "mfx/graded_ring.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mfx {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim_copy(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim_copy(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim_copy(cur));
  return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (trim_copy(s).empty()) return out;
  for (const auto& part : split(s, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size()) throw ParseError("bad integer '" + part + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + part + "'");
    }
  }
  return out;
}

inline std::string format_int_list(const std::vector<int>& v) {
  std::vector<std::string> parts;
  for (int x : v) parts.push_back(std::to_string(x));
  return join(parts, ",");
}

template <Field K>
class PolyParser {
 public:
  PolyParser(const PolyRingPtr& ring, std::string_view text) : ring_(ring) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  Polynomial<K> parse() {
    if (s_.empty()) throw ParseError("empty polynomial");
    Polynomial<K> acc(ring_);
    bool first = true;
    while (pos_ < s_.size()) {
      K sign = K::one();
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -sign;
        ++pos_;
      } else if (!first) {
        fail("expected + or -");
      }
      acc += parse_term().scale(sign);
      first = false;
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  Polynomial<K> parse_term() {
    Polynomial<K> t = Polynomial<K>::constant(ring_, K::one());
    t = t * parse_factor();
    while (peek() == '*') {
      ++pos_;
      t = t * parse_factor();
    }
    return t;
  }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  mpq_class parse_rational() {
    mpz_class num = parse_integer();
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos_;
      den = parse_integer();
      if (den == 0) fail("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  K imaginary() const {
    auto i = K::imaginary_unit();
    if (!i) throw ParseError("coefficient field has no square root of -1");
    return *i;
  }

  // (a+bi), (i), (-2/3i), ...
  K parse_complex() {
    K acc = K::zero();
    bool first = true;
    while (peek() != ')') {
      if (pos_ >= s_.size()) fail("unterminated coefficient");
      K sign = K::one();
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -sign;
        ++pos_;
      } else if (!first) {
        fail("expected + or - inside coefficient");
      }
      K part = K::one();
      if (std::isdigit(static_cast<unsigned char>(peek()))) part = K::from_rational(parse_rational());
      if (peek() == 'i') {
        ++pos_;
        part = part * imaginary();
      } else if (!std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) {
        fail("expected number or i");
      }
      acc = acc + sign * part;
      first = false;
    }
    ++pos_;
    return acc;
  }

  Polynomial<K> parse_factor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Polynomial<K>::constant(ring_, K::from_rational(parse_rational()));
    if (c == '(') {
      ++pos_;
      return Polynomial<K>::constant(ring_, parse_complex());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        mpz_class ez = parse_integer();
        if (ez > 4000) fail("exponent too large");
        e = static_cast<int>(ez.get_si());
      }
      auto idx = ring_->index_of(name);
      if (!idx) {
        if (name == "i" && K::imaginary_unit()) return Polynomial<K>::constant(ring_, imaginary()).pow(e);
        throw ParseError("unknown variable '" + name + "'");
      }
      return Polynomial<K>::variable(ring_, *idx).pow(e);
    }
    fail("unexpected character");
  }

  PolyRingPtr ring_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <Field K>
Polynomial<K> parse_polynomial(const PolyRingPtr& ring, std::string_view text) {
  return detail::PolyParser<K>(ring, text).parse();
}

/// Canonical text form; parse_polynomial(format_polynomial(p)) == p.
template <Field K>
std::string format_polynomial(const Polynomial<K>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = c.is_negative_real();
    K mag = neg ? -c : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (m.is_one()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += p.ring()->monomial_string(m);
    } else {
      out += mag.to_string() + "*" + p.ring()->monomial_string(m);
    }
  }
  return out;
}

/// Sequential reader over `key: value` lines.
class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines_.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur += c;
      }
    }
    if (!cur.empty()) lines_.push_back(cur);
  }

  bool done() const { return pos_ >= lines_.size(); }
  std::size_t line_number() const { return pos_ + 1; }

  std::string next_raw() {
    if (done()) throw ParseError("unexpected end of input");
    return lines_[pos_++];
  }

  /// Value of a `key:` line; throws if the next line has another key.
  std::string expect(const std::string& key) {
    auto v = maybe(key);
    if (!v) throw ParseError("line " + std::to_string(line_number()) + ": expected '" + key + ":'");
    return *v;
  }

  std::optional<std::string> maybe(const std::string& key) {
    if (done()) return std::nullopt;
    const auto& line = lines_[pos_];
    auto colon = line.find(':');
    if (colon == std::string::npos || detail::trim_copy(line.substr(0, colon)) != key) return std::nullopt;
    ++pos_;
    return detail::trim_copy(line.substr(colon + 1));
  }

  void expect_word(const std::string& word) {
    if (done() || detail::trim_copy(lines_[pos_]) != word)
      throw ParseError("line " + std::to_string(line_number()) + ": expected '" + word + "'");
    ++pos_;
  }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

template <Field K>
std::vector<Polynomial<K>> parse_polynomial_list(const PolyRingPtr& ring, const std::string& s) {
  std::vector<Polynomial<K>> out;
  if (detail::trim_copy(s).empty()) return out;
  for (const auto& part : detail::split(s, ',')) out.push_back(parse_polynomial<K>(ring, part));
  return out;
}

template <Field K>
std::string format_polynomial_list(const std::vector<Polynomial<K>>& ps) {
  std::vector<std::string> parts;
  for (const auto& p : ps) parts.push_back(format_polynomial(p));
  return detail::join(parts, ", ");
}

template <Field K>
GradedRing<K> read_ring_block(LineReader& in) {
  auto names = detail::split(in.expect("vars"), ',');
  auto degs = detail::parse_int_list(in.expect("degs"));
  MonomialOrder order = MonomialOrder::GRevLex;
  if (auto o = in.maybe("order")) {
    if (*o == "lex")
      order = MonomialOrder::Lex;
    else if (*o != "grevlex")
      throw ParseError("unknown monomial order '" + *o + "'");
  }
  PolyRingPtr ring;
  try {
    ring = make_poly_ring(names, degs, order);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  std::vector<Polynomial<K>> ideal;
  if (auto m = in.maybe("mod")) ideal = parse_polynomial_list<K>(ring, *m);
  return GradedRing<K>(ring, std::move(ideal));
}

template <Field K>
std::string format_ring_block(const GradedRing<K>& r) {
  std::string out = "vars: " + detail::join(r.ambient()->names(), ",") + "\n";
  out += "degs: " + detail::format_int_list(r.ambient()->degrees()) + "\n";
  if (r.ambient()->order() != MonomialOrder::GRevLex) out += "order: " + to_string(r.ambient()->order()) + "\n";
  if (!r.ideal().empty()) out += "mod: " + format_polynomial_list(r.ideal()) + "\n";
  return out;
}

template <Field K>
GradedRing<K> parse_ring(std::string_view text) {
  LineReader in(text);
  return read_ring_block<K>(in);
}

}  // namespace mfx
