#pragma once

// Vertical strip LLT diagrams: reading order, attacking pairs, the associated
// Schroeder path, and a brute-force tableau generating function.
//
// Conventions. A strip (d, h) is a column of h cells on diagonals
// d, d+1, ..., d+h-1 (the diagonal index grows by one per cell upward).
// Cells are read by increasing diagonal, ties broken by strip index. Cell
// positions in reading order are 1-based, so position 1 is the first
// cell read. A pair p < r (reading order) attacks when the two cells lie on
// the same diagonal, or when r is one diagonal above p and p belongs to a
// later strip. A filling has an inversion on an attacking pair (p, r) when
// T(p) < T(r).

#include "vsllt/path_word.hpp"
#include "vsllt/qpoly.hpp"
#include "vsllt/rewrite.hpp"
#include "vsllt/symfunc.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vsllt {

struct Strip {
  int bottom = 0;  // diagonal of the lowest cell
  int height = 1;

  friend bool operator==(const Strip&, const Strip&) = default;
};

using StripTuple = std::vector<Strip>;

inline int cell_count(const StripTuple& t) {
  int n = 0;
  for (const auto& s : t) n += s.height;
  return n;
}

/// Parses "d:h;d:h;..." (e.g. "0:2;-2:2;-1:1"). The empty string is the
/// empty tuple.
inline StripTuple parse_strip_tuple(std::string_view text) {
  StripTuple out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](bool allow_sign) {
    skip_ws();
    const std::size_t start = i;
    bool neg = false;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    const std::size_t digits = i;
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) throw ParseError("number too large", start);
      ++i;
    }
    if (i == digits) throw ParseError("expected an integer", start);
    skip_ws();
    return static_cast<int>(neg ? -v : v);
  };
  skip_ws();
  if (i == text.size()) return out;
  for (;;) {
    const std::size_t item = i;
    Strip s;
    s.bottom = read_int(true);
    if (i >= text.size() || text[i] != ':') throw ParseError("expected ':'", i);
    ++i;
    s.height = read_int(false);
    if (s.height < 1) throw ParseError("strip height must be positive", item);
    out.push_back(s);
    if (i == text.size()) break;
    if (text[i] != ';') throw ParseError("expected ';'", i);
    ++i;
  }
  return out;
}

inline std::string strip_tuple_str(const StripTuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(t[i].bottom) + ":" + std::to_string(t[i].height);
  }
  return s;
}

/// Every tuple of at most max_strips strips with bottoms in [lo, hi] and at
/// most max_cells cells in total, the empty tuple included.
inline std::vector<StripTuple> enumerate_strip_tuples(int max_cells, int max_strips, int lo, int hi) {
  std::vector<StripTuple> out;
  StripTuple cur;
  std::function<void(int)> rec = [&](int room) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_strips) return;
    for (int d = lo; d <= hi; ++d)
      for (int h = 1; h <= room; ++h) {
        cur.push_back({d, h});
        rec(room - h);
        cur.pop_back();
      }
  };
  rec(max_cells);
  return out;
}

struct Cell {
  int strip = 1;  // 1-based index into the tuple
  int diagonal = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Cells sorted by (diagonal, strip).
inline std::vector<Cell> reading_order(const StripTuple& t) {
  std::vector<Cell> cells;
  for (std::size_t s = 0; s < t.size(); ++s)
    for (int j = 0; j < t[s].height; ++j)
      cells.push_back({static_cast<int>(s) + 1, t[s].bottom + j});
  std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return a.diagonal != b.diagonal ? a.diagonal < b.diagonal : a.strip < b.strip;
  });
  return cells;
}

/// 1-based reading-order positions (p, r), p < r.
using CellPair = std::pair<int, int>;

inline bool attacks(const Cell& p, const Cell& r) {
  return (p.diagonal == r.diagonal && p.strip < r.strip) ||
         (r.diagonal == p.diagonal + 1 && p.strip > r.strip);
}

inline std::vector<CellPair> attack_pairs(const StripTuple& t) {
  const auto cells = reading_order(t);
  std::vector<CellPair> out;
  for (std::size_t r = 0; r < cells.size(); ++r)
    for (std::size_t p = 0; p < r; ++p)
      if (attacks(cells[p], cells[r]))
        out.emplace_back(static_cast<int>(p) + 1, static_cast<int>(r) + 1);
  std::sort(out.begin(), out.end());
  return out;
}

struct AreaData {
  std::vector<int> area;          // a_1..a_n
  std::vector<CellPair> crosses;  // (p, r): r sits directly above p in one strip
};

/// Row r of the grid has one dot per attacker of r; those attackers are
/// always the a_r letters just before r. Throws std::logic_error if the
/// geometry breaks that shape.
inline AreaData dyck_area_and_crosses(const StripTuple& t) {
  const auto cells = reading_order(t);
  const int n = static_cast<int>(cells.size());
  AreaData out;
  out.area.assign(n, 0);
  for (int r = 0; r < n; ++r) {
    int count = 0;
    for (int p = 0; p < r; ++p) count += attacks(cells[p], cells[r]);
    for (int p = 0; p < r; ++p) {
      const bool expected = p >= r - count;
      if (attacks(cells[p], cells[r]) != expected)
        throw std::logic_error("attackers of cell " + std::to_string(r + 1) +
                               " are not a contiguous run ending just before it");
    }
    if (r > 0 && count > out.area[r - 1] + 1)
      throw std::logic_error("area sequence grows by more than one at " + std::to_string(r + 1));
    out.area[r] = count;
    for (int p = 0; p < r; ++p)
      if (cells[p].strip == cells[r].strip && cells[r].diagonal == cells[p].diagonal + 1)
        out.crosses.emplace_back(p + 1, r + 1);
  }
  std::sort(out.crosses.begin(), out.crosses.end());
  return out;
}

/// Dyck path whose row r has its north step at x = r - 1 - a_r, with each
/// crossed valley (east step into (p, r-1) followed by a north step)
/// replaced by a diagonal step.
inline PathWord to_schroeder_word(const StripTuple& t) {
  const AreaData data = dyck_area_and_crosses(t);
  const int n = static_cast<int>(data.area.size());
  struct Edge {
    Step step;
    int x, y;  // end vertex
  };
  std::vector<Edge> path;
  int x = 0, y = 0;
  for (int r = 1; r <= n; ++r) {
    const int target = r - 1 - data.area[r - 1];
    while (x < target) path.push_back({Step::East, ++x, y});
    path.push_back({Step::North, x, ++y});
  }
  while (x < n) path.push_back({Step::East, ++x, y});

  std::vector<bool> diagonal_at(path.size(), false);
  for (const auto& [p, r] : data.crosses) {
    bool found = false;
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      if (path[j].step == Step::East && path[j].x == p && path[j].y == r - 1 &&
          path[j + 1].step == Step::North) {
        diagonal_at[j] = true;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("cross (" + std::to_string(p) + "," + std::to_string(r) +
                             ") does not sit on a valley");
  }
  PathWord out;
  for (std::size_t j = 0; j < path.size(); ++j) {
    if (diagonal_at[j]) {
      out.push_back(Step::Diagonal);
      ++j;  // the north step of the valley
    } else {
      out.push_back(path[j].step);
    }
  }
  return out;
}

namespace detail {

// Visits every filling with values in 1..nvars, strictly increasing up each
// strip, calling f(values, inv). If `content` is non-null, only fillings
// using value v exactly content[v-1] times are visited.
template <typename Visit>
void for_each_filling(const StripTuple& t, int nvars, const std::vector<int>* content,
                      Visit&& f) {
  const auto cells = reading_order(t);
  const int n = static_cast<int>(cells.size());
  std::vector<int> below(n, -1);  // reading index of the cell just below, same strip
  std::vector<std::vector<int>> attackers(n);
  for (int r = 0; r < n; ++r)
    for (int p = 0; p < r; ++p) {
      if (cells[p].strip == cells[r].strip && cells[r].diagonal == cells[p].diagonal + 1)
        below[r] = p;
      if (attacks(cells[p], cells[r])) attackers[r].push_back(p);
    }
  std::vector<int> remaining = content ? *content : std::vector<int>{};
  std::vector<int> value(n, 0);
  std::function<void(int, int)> rec = [&](int r, int inv) {
    if (r == n) {
      f(value, inv);
      return;
    }
    const int lo = below[r] >= 0 ? value[below[r]] + 1 : 1;
    for (int v = lo; v <= nvars; ++v) {
      if (content && remaining[v - 1] == 0) continue;
      int extra = 0;
      for (int p : attackers[r]) extra += value[p] < v;
      value[r] = v;
      if (content) --remaining[v - 1];
      rec(r + 1, inv + extra);
      if (content) ++remaining[v - 1];
    }
    value[r] = 0;
  };
  rec(0, 0);
}

inline QPoly poly_from_counts(const std::vector<long>& byinv) {
  std::vector<Rational> coeffs;
  for (long c : byinv) coeffs.emplace_back(c);
  return QPoly::from_coeffs(std::move(coeffs));
}

}  // namespace detail

/// Sum over fillings of q^inv x^T in x_1..x_nvars.
inline VarPoly ssyt_generating_function(const StripTuple& t, int nvars) {
  if (nvars < 1) throw std::invalid_argument("ssyt_generating_function: need nvars >= 1");
  std::map<std::vector<int>, std::vector<long>> counts;  // content -> count per inv
  std::vector<int> content(nvars);
  detail::for_each_filling(t, nvars, nullptr, [&](const std::vector<int>& values, int inv) {
    std::fill(content.begin(), content.end(), 0);
    for (int v : values) ++content[v - 1];
    auto& c = counts[content];
    if (static_cast<int>(c.size()) <= inv) c.resize(inv + 1, 0);
    ++c[inv];
  });
  VarPoly out;
  for (const auto& [exps, byinv] : counts) add_to(out, exps, detail::poly_from_counts(byinv));
  return out;
}

/// Coefficient of x^alpha in the generating function, enumerating only
/// fillings with that content.
inline QPoly ssyt_monomial_coefficient(const StripTuple& t, const std::vector<int>& alpha) {
  std::vector<long> byinv;
  const int total = std::accumulate(alpha.begin(), alpha.end(), 0);
  if (total != cell_count(t)) return QPoly{};
  detail::for_each_filling(t, static_cast<int>(alpha.size()), &alpha,
                           [&](const std::vector<int>&, int inv) {
                             if (static_cast<int>(byinv.size()) <= inv) byinv.resize(inv + 1, 0);
                             ++byinv[inv];
                           });
  return detail::poly_from_counts(byinv);
}

struct OracleResult {
  bool match = false;
  int nvars = 0;
  /// True when only the coefficients of x^lambda for partitions lambda were
  /// compared (both sides are symmetric, so this determines them).
  bool dominant_only = false;
  EExpansion expansion;
  VarPoly operator_side;
  VarPoly tableau_side;
};

/// Up to this many cells, oracle_compare expands both sides completely.
inline constexpr int kFullOracleCells = 7;

/// Compares the e-expansion obtained by rewriting the strip tuple's path word
/// against the tableau generating function. With nvars unset, n = cell
/// count variables are used (complete for degree n); above kFullOracleCells
/// the comparison is restricted to dominant monomials.
inline OracleResult oracle_compare(const StripTuple& t, std::optional<int> nvars = std::nullopt) {
  const int n = cell_count(t);
  OracleResult res;
  res.expansion = e_expansion(to_schroeder_word(t));
  const GradedSym p_form = e_to_p(res.expansion, n);
  res.nvars = nvars.value_or(std::max(n, 1));
  if (nvars || n <= kFullOracleCells) {
    res.operator_side = expand_in_vars(p_form, res.nvars);
    res.tableau_side = ssyt_generating_function(t, res.nvars);
    res.match = res.operator_side == res.tableau_side;
    return res;
  }
  res.dominant_only = true;
  res.match = true;
  for (const auto& lambda : partitions_of(n)) {
    std::vector<int> alpha(lambda.begin(), lambda.end());
    alpha.resize(res.nvars, 0);
    QPoly lhs = monomial_coefficient(p_form, alpha);
    QPoly rhs = ssyt_monomial_coefficient(t, alpha);
    add_to(res.operator_side, alpha, lhs);
    add_to(res.tableau_side, alpha, rhs);
    res.match = res.match && lhs == rhs;
  }
  return res;
}

}  // namespace vsllt
