#pragma once

// Class bookkeeping for ACM sheaves: first Chern classes, the quotient
// Grothendieck group G' (twists erased, so O(a) = O), condition (C) by Smith
// normal form, and the Veronese invariant m.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfx {

class KGroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using IntMatrix = std::vector<std::vector<long long>>;

/// Multiset of twisted labels, e.g. 2*I_C + O(-1) + I_F(2).
struct SheafClassVector {
  std::vector<std::pair<std::string, int>> entries;

  void add(const std::string& label, int twist = 0, long count = 1) {
    for (long k = 0; k < count; ++k) entries.push_back({label, twist});
  }
  SheafClassVector twisted(int k) const {
    SheafClassVector v = *this;
    for (auto& e : v.entries) e.second += k;
    return v;
  }
  friend SheafClassVector operator+(SheafClassVector a, const SheafClassVector& b) {
    a.entries.insert(a.entries.end(), b.entries.begin(), b.entries.end());
    return a;
  }
  long count(const std::string& label) const {
    return std::count_if(entries.begin(), entries.end(), [&](const auto& e) { return e.first == label; });
  }
};

inline SheafClassVector parse_sheaf_vector(const std::string& text) {
  SheafClassVector v;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "0") return v;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw KGroupError(what + " at position " + std::to_string(pos) + " in '" + text + "'");
  };
  auto read_int = [&]() {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) fail("expected integer");
    return std::stol(s.substr(start, pos - start));
  };
  bool first = true;
  while (pos < s.size()) {
    if (!first) {
      if (s[pos] != '+') fail("expected +");
      ++pos;
    }
    first = false;
    long count = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      count = read_int();
      if (pos >= s.size() || s[pos] != '*') fail("expected *");
      ++pos;
    }
    std::size_t start = pos;
    int depth = 0;
    while (pos < s.size()) {
      char c = s[pos];
      if (c == '{') ++depth;
      else if (c == '}') --depth;
      else if (depth == 0 && (c == '(' || c == '+')) break;
      else if (depth == 0 && !(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) fail("bad label character");
      ++pos;
    }
    if (pos == start || depth != 0) fail("expected label");
    std::string label = s.substr(start, pos - start);
    int twist = 0;
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      twist = static_cast<int>(read_int());
      if (pos >= s.size() || s[pos] != ')') fail("expected )");
      ++pos;
    }
    if (count < 0) fail("negative multiplicity");
    v.add(label, twist, count);
  }
  return v;
}

inline std::string format_sheaf_vector(const SheafClassVector& v) {
  if (v.entries.empty()) return "0";
  std::vector<std::pair<std::string, int>> order;
  std::map<std::pair<std::string, int>, long> counts;
  for (const auto& e : v.entries)
    if (counts[e]++ == 0) order.push_back(e);
  std::string out;
  for (const auto& e : order) {
    if (!out.empty()) out += " + ";
    long c = counts[e];
    if (c > 1) out += std::to_string(c) + "*";
    out += e.first;
    if (e.second != 0) out += "(" + std::to_string(e.second) + ")";
  }
  return out;
}

/// Divisor class in a model-specific basis.
struct DivisorClass {
  std::vector<long long> coords;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// The class data of one catalog model.
struct KModel {
  struct Label {
    std::string name;
    int rank = 1;
    std::vector<long long> c1;  // first Chern class of the untwisted sheaf
  };
  std::string name;
  std::vector<std::string> basis;
  std::vector<long long> hyperplane;
  std::vector<Label> labels;  // "O" first, then rank-one labels, then higher-rank ones

  const Label& label(const std::string& n) const {
    for (const auto& l : labels)
      if (l.name == n) return l;
    throw KGroupError("unknown label '" + n + "' for model " + name);
  }
  std::string format_class(const DivisorClass& c) const {
    std::string out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      long long k = c.coords[i];
      if (k == 0) continue;
      if (!out.empty()) out += k < 0 ? " - " : " + ";
      else if (k < 0) out += "-";
      long long a = std::llabs(k);
      if (a != 1) out += std::to_string(a);
      out += basis[i];
    }
    return out.empty() ? "0" : out;
  }
};

inline long rank_of(const KModel& m, const SheafClassVector& v) {
  long r = 0;
  for (const auto& [l, t] : v.entries) r += m.label(l).rank;
  return r;
}

/// c1 = sum over entries of (c1 of the label + rank * twist * H).
inline DivisorClass c1_of_vector(const KModel& m, const SheafClassVector& v) {
  DivisorClass c{std::vector<long long>(m.basis.size(), 0)};
  for (const auto& [l, t] : v.entries) {
    const auto& lab = m.label(l);
    for (std::size_t i = 0; i < c.coords.size(); ++i) c.coords[i] += lab.c1[i] + 1LL * lab.rank * t * m.hyperplane[i];
  }
  return c;
}

/// The n with c = n*H, if any.
inline std::optional<long long> hyperplane_multiple(const KModel& m, const DivisorClass& c) {
  std::optional<long long> n;
  for (std::size_t i = 0; i < c.coords.size(); ++i) {
    long long h = m.hyperplane[i];
    if (h == 0) {
      if (c.coords[i] != 0) return std::nullopt;
      continue;
    }
    if (c.coords[i] % h != 0) return std::nullopt;
    long long q = c.coords[i] / h;
    if (n && *n != q) return std::nullopt;
    n = q;
  }
  return n.value_or(0);
}

inline bool is_orientable(const KModel& m, const SheafClassVector& v) {
  return hyperplane_multiple(m, c1_of_vector(m, v)).has_value();
}

// ---------------------------------------------------------------------------

/// Short exact sequence 0 -> sub -> middle -> quot -> 0 at the level of classes.
struct SequenceClass {
  std::string name;
  SheafClassVector sub, middle, quot;
};

struct GroupPresentation {
  std::vector<std::string> generators;  // "O" and the rank-one labels
  std::vector<std::string> relation_names;
  IntMatrix relations;  // one vector per relation, indexed like generators
  std::map<std::string, std::vector<long long>> expansions;  // higher-rank labels
  std::vector<std::string> warnings;

  std::size_t index(const std::string& g) const {
    auto it = std::find(generators.begin(), generators.end(), g);
    if (it == generators.end()) throw KGroupError("'" + g + "' is not a generator of G'");
    return static_cast<std::size_t>(it - generators.begin());
  }
};

/// Class of v in Z^generators; higher-rank labels are replaced by their layers.
inline std::vector<long long> class_in_Gprime(const GroupPresentation& g, const SheafClassVector& v) {
  std::vector<long long> out(g.generators.size(), 0);
  for (const auto& [l, t] : v.entries) {
    if (auto it = g.expansions.find(l); it != g.expansions.end()) {
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += it->second[i];
    } else {
      out[g.index(l)] += 1;
    }
  }
  return out;
}

/// G' from certified sequences. A sequence whose middle is a single
/// higher-rank label with rank-one ends defines that label's layers;
/// every other sequence contributes the relation sub + quot - middle.
inline GroupPresentation build_Gprime(const KModel& m, const std::vector<SequenceClass>& certified) {
  GroupPresentation g;
  for (const auto& l : m.labels)
    if (l.rank == 1) g.generators.push_back(l.name);
  auto rank_one = [&](const SheafClassVector& v) {
    for (const auto& e : v.entries)
      if (m.label(e.first).rank != 1) return false;
    return true;
  };
  for (const auto& s : certified) {
    if (s.middle.entries.size() == 1 && m.label(s.middle.entries[0].first).rank > 1 && rank_one(s.sub) &&
        rank_one(s.quot))
      g.expansions[s.middle.entries[0].first] = class_in_Gprime(g, s.sub + s.quot);
  }
  for (const auto& s : certified) {
    if (s.middle.entries.size() == 1 && g.expansions.count(s.middle.entries[0].first)) continue;
    auto a = class_in_Gprime(g, s.sub + s.quot), b = class_in_Gprime(g, s.middle);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    g.relation_names.push_back(s.name);
    g.relations.push_back(std::move(a));
  }
  if (certified.empty()) g.warnings.push_back("model " + m.name + " has no certified sequences; G' is free");
  return g;
}

// ---------------------------------------------------------------------------

struct SmithForm {
  IntMatrix u, d, v;  // u * a * v = d
};

namespace detail {

inline IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace detail

inline IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner = 0) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  if (k == 0) k = inner;
  IntMatrix out(n, std::vector<long long>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
  return out;
}

/// Smith normal form of an r x c integer matrix: diagonal entries are
/// non-negative and each divides the next.
inline SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols_if_empty = 0) {
  std::size_t r = a.size(), c = r ? a[0].size() : cols_if_empty;
  SmithForm s{detail::int_identity(r), a, detail::int_identity(c)};
  auto& d = s.d;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : d) std::swap(row[i], row[j]);
    for (auto& row : s.v) std::swap(row[i], row[j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, long long k) {  // row dst += k * row src
    for (std::size_t j = 0; j < c; ++j) d[dst][j] += k * d[src][j];
    for (std::size_t j = 0; j < r; ++j) s.u[dst][j] += k * s.u[src][j];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, long long k) {
    for (std::size_t i = 0; i < r; ++i) d[i][dst] += k * d[i][src];
    for (std::size_t i = 0; i < c; ++i) s.v[i][dst] += k * s.v[i][src];
  };

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    // Pivot: smallest non-zero absolute value in the remaining block.
    while (true) {
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (d[i][j] != 0 && (pi == r || std::llabs(d[i][j]) < std::llabs(d[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == r) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        long long q = d[i][t] / d[t][t];
        if (q) add_row(i, t, -q);
        if (d[i][t]) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        long long q = d[t][j] / d[t][t];
        if (q) add_col(j, t, -q);
        if (d[t][j]) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold in any entry the pivot does not divide.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c && divides; ++j)
          if (d[i][j] % d[t][t] != 0) {
            add_row(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (t < r && t < c && d[t][t] < 0) {
      for (std::size_t j = 0; j < c; ++j) d[t][j] = -d[t][j];
      for (std::size_t j = 0; j < r; ++j) s.u[t][j] = -s.u[t][j];
    }
  }
  return s;
}

/// Some integer x with a * x = b, if one exists.
inline std::optional<std::vector<long long>> solve_integer(const IntMatrix& a, const std::vector<long long>& b,
                                                           std::size_t cols) {
  auto s = smith_normal_form(a, cols);
  std::size_t r = a.size();
  std::vector<long long> y(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) y[i] += s.u[i][j] * b[j];
  std::vector<long long> z(cols, 0);
  for (std::size_t i = 0; i < r; ++i) {
    long long di = i < cols ? s.d[i][i] : 0;
    if (di == 0) {
      if (y[i] != 0) return std::nullopt;
    } else {
      if (y[i] % di != 0) return std::nullopt;
      z[i] = y[i] / di;
    }
  }
  std::vector<long long> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j) x[i] += s.v[i][j] * z[j];
  return x;
}

struct ConditionCResult {
  bool holds = false;
  std::vector<long long> witness;  // multiplicity per relation
  std::string explanation;
};

/// Condition (C) for one orientable vector: its class in G' equals rank * O.
inline ConditionCResult check_condition_C(const KModel& m, const GroupPresentation& g, const SheafClassVector& v) {
  if (!is_orientable(m, v))
    throw KGroupError("vector is not orientable: c1 = " + m.format_class(c1_of_vector(m, v)));
  auto target = class_in_Gprime(g, v);
  target[g.index("O")] -= rank_of(m, v);
  std::size_t ng = g.generators.size(), nr = g.relations.size();
  IntMatrix a(ng, std::vector<long long>(nr, 0));  // columns are relations
  for (std::size_t j = 0; j < nr; ++j)
    for (std::size_t i = 0; i < ng; ++i) a[i][j] = g.relations[j][i];
  ConditionCResult res;
  if (std::all_of(target.begin(), target.end(), [](long long x) { return x == 0; })) {
    res.holds = true;
    res.witness.assign(nr, 0);
    res.explanation = "zero witness";
    return res;
  }
  if (nr == 0) {
    res.explanation = "no relations in G'";
    return res;
  }
  auto x = solve_integer(a, target, nr);
  if (!x) {
    res.explanation = "class minus rank * O is outside the relation lattice";
    return res;
  }
  res.holds = true;
  res.witness = *x;
  std::string w;
  for (std::size_t j = 0; j < nr; ++j) {
    if ((*x)[j] == 0) continue;
    if (!w.empty()) w += ", ";
    w += std::to_string((*x)[j]) + " x " + g.relation_names[j];
  }
  res.explanation = "witness: " + w;
  return res;
}

/// m(Z) = copies of I_C in N minus copies in E, for a resolution 0 -> E -> N -> I_Z(a) -> 0.
/// When E and N are not orientable but c1(N) - c1(E) is a multiple of H, one
/// common I_C summand is appended to both, which leaves m unchanged.
inline long veronese_m_invariant(const KModel& m, SheafClassVector e, SheafClassVector n) {
  const std::string ic = "I_C";
  if (rank_of(m, n) != rank_of(m, e) + 1) throw KGroupError("rank(N) must be rank(E) + 1");
  auto ce = c1_of_vector(m, e), cn = c1_of_vector(m, n);
  DivisorClass diff{cn.coords};
  for (std::size_t i = 0; i < diff.coords.size(); ++i) diff.coords[i] -= ce.coords[i];
  if (!hyperplane_multiple(m, diff)) throw KGroupError("c1(N) - c1(E) is not a multiple of H");
  if (!is_orientable(m, e) || !is_orientable(m, n)) {
    e.add(ic);
    n.add(ic);
  }
  if (!is_orientable(m, e) || !is_orientable(m, n)) throw KGroupError("E and N are not orientable");
  for (const auto& v : {e, n})
    for (const auto& [l, t] : v.entries)
      if (l != ic && l != "O") throw KGroupError("resolution terms must be sums of O(a) and I_C(b)");
  return n.count(ic) - e.count(ic);
}

}  // namespace mfx
