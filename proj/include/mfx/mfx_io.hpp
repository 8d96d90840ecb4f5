#pragma once

// Text formats.
//
//   mf                         module
//   vars: x,t                  vars: x,u,v,t
//   degs: 1,1                  degs: 1,1,1,1
//   f: x^2                     mod: x^2 + u*v
//   rows: 0                    gens: 1,1
//   cols: 2                    rels:
//   phi:                       <one line per generator, comma-separated>
//   x^2
//   psi:
//   1
//
// format() is canonical, so parse(format(x)) == x and format(parse(text)) == text
// for every canonical text.

#include "mfx/matfac.hpp"
#include "mfx/poly_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace mfx {

namespace detail {

template <Field K>
PolyMatrix<K> read_matrix(LineReader& in, const PolyRingPtr& ring, std::size_t rows, std::size_t cols,
                          const std::string& what) {
  PolyMatrix<K> m;
  for (std::size_t i = 0; i < rows; ++i) {
    auto row = parse_polynomial_list<K>(ring, in.next_raw());
    if (row.size() != cols)
      throw ParseError(what + " row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(cols));
    m.push_back(std::move(row));
  }
  return m;
}

template <Field K>
void write_matrix(std::ostringstream& out, const PolyMatrix<K>& m) {
  for (const auto& row : m) out << format_polynomial_list(row) << "\n";
}

}  // namespace detail

template <Field K>
std::string format_mf(const MatrixFactorization<K>& m) {
  std::ostringstream out;
  out << "mf\n" << format_ring_block(GradedRing<K>(m.ring)) << "f: " << format_polynomial(m.f) << "\n";
  out << "rows: " << detail::format_int_list(m.rows) << "\n";
  out << "cols: " << detail::format_int_list(m.cols) << "\n";
  out << "phi:\n";
  detail::write_matrix(out, m.phi);
  out << "psi:\n";
  detail::write_matrix(out, m.psi);
  return out.str();
}

template <Field K>
MatrixFactorization<K> parse_mf(std::string_view text) {
  LineReader in(text);
  in.expect_word("mf");
  auto ring = read_ring_block<K>(in);
  if (!ring.ideal().empty()) throw ParseError("a factorization lives over a polynomial ring (no mod: line)");
  MatrixFactorization<K> m;
  m.ring = ring.ambient();
  m.f = parse_polynomial<K>(m.ring, in.expect("f"));
  m.rows = detail::parse_int_list(in.expect("rows"));
  m.cols = detail::parse_int_list(in.expect("cols"));
  if (m.rows.size() != m.cols.size()) throw ParseError("rows and cols differ in length");
  std::size_t n = m.rows.size();
  if (in.expect("phi") != "") throw ParseError("phi: takes no inline value");
  m.phi = detail::read_matrix<K>(in, m.ring, n, n, "phi");
  if (in.expect("psi") != "") throw ParseError("psi: takes no inline value");
  m.psi = detail::read_matrix<K>(in, m.ring, n, n, "psi");
  if (!in.done()) throw ParseError("trailing content after psi");
  return m;
}

template <Field K>
std::string format_module(const GradedModulePresentation<K>& m) {
  std::ostringstream out;
  out << "module\n" << format_ring_block(m.ring());
  out << "gens: " << detail::format_int_list(m.gens()) << "\n";
  out << "rels:\n";
  detail::write_matrix(out, m.relations());
  return out.str();
}

template <Field K>
GradedModulePresentation<K> parse_module(std::string_view text) {
  LineReader in(text);
  in.expect_word("module");
  auto ring = read_ring_block<K>(in);
  auto gens = detail::parse_int_list(in.expect("gens"));
  if (in.expect("rels") != "") throw ParseError("rels: takes no inline value");
  PolyMatrix<K> rels;
  std::optional<std::size_t> width;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto row = parse_polynomial_list<K>(ring.ambient(), in.next_raw());
    if (width && row.size() != *width) throw ParseError("relation rows differ in length");
    width = row.size();
    rels.push_back(std::move(row));
  }
  if (!in.done()) throw ParseError("trailing content after relations");
  return GradedModulePresentation<K>(ring, gens, rels);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

/// 64-bit FNV-1a, used for input digests in reports.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 15];
  return s;
}

}  // namespace mfx
