#pragma once

// Direct evaluation of the Dyck path algebra operators T_i, d+, d-, phi on
// V_k = Lambda[y_1..y_k].
//
// Elements are truncated by total degree (y-degree plus symmetric degree).
// Every operator here is homogeneous of degree 0 (T_i, d+) or 1 (d-, phi), so
// the truncation commutes with all of them and identities between operators
// hold exactly on truncated elements.

#include "vsllt/op_word.hpp"
#include "vsllt/qpoly.hpp"
#include "vsllt/symfunc.hpp"

#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vsllt {

/// Exponent vector of a monomial in y_1..y_k.
using YMonomial = std::vector<int>;

inline int total_degree(const YMonomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

class VElement {
 public:
  VElement(int k, int truncation) : k_(k), trunc_(truncation) {
    if (k < 0) throw std::invalid_argument("VElement: negative k");
    if (truncation < 0) throw std::invalid_argument("VElement: negative truncation");
  }

  static VElement one(int k, int truncation) {
    VElement r(k, truncation);
    r.add(YMonomial(k, 0), GradedSym::one(truncation));
    return r;
  }

  /// F[X] viewed in V_k.
  static VElement from_sym(const GradedSym& f, int k = 0) {
    VElement r(k, f.truncation());
    r.add(YMonomial(k, 0), f);
    return r;
  }

  /// c * y^exps (as an element of V_{exps.size()}).
  static VElement monomial(const YMonomial& exps, const GradedSym& coeff) {
    VElement r(static_cast<int>(exps.size()), coeff.truncation());
    r.add(exps, coeff);
    return r;
  }

  int k() const noexcept { return k_; }
  int truncation() const noexcept { return trunc_; }
  const std::map<YMonomial, GradedSym>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// this += c * y^m * g, dropping anything above the total-degree truncation.
  void add(const YMonomial& m, const GradedSym& g, const QPoly& c = QPoly(1)) {
    if (static_cast<int>(m.size()) != k_)
      throw std::invalid_argument("VElement: monomial length does not match k");
    const int room = trunc_ - total_degree(m);
    if (room < 0 || g.is_zero() || c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      GradedSym part(trunc_);
      part.add_scaled(g, c, room);
      if (!part.is_zero()) terms_.emplace(m, std::move(part));
      return;
    }
    it->second.add_scaled(g, c, room);
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// Adds a single p_mu term.
  void add_term(const YMonomial& m, const Partition& mu, const QPoly& c) {
    if (c.is_zero()) return;
    if (total_degree(m) + mu.size() > trunc_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) it = terms_.emplace(m, GradedSym(trunc_)).first;
    it->second.add_term(mu, c);
    if (it->second.is_zero()) terms_.erase(it);
  }

  VElement& operator+=(const VElement& o) {
    check_compatible(o);
    for (const auto& [m, g] : o.terms_) add(m, g);
    return *this;
  }

  VElement& operator-=(const VElement& o) {
    check_compatible(o);
    for (const auto& [m, g] : o.terms_) add(m, g, QPoly(-1));
    return *this;
  }

  friend VElement operator+(VElement a, const VElement& b) { return a += b; }
  friend VElement operator-(VElement a, const VElement& b) { return a -= b; }

  VElement scaled(const QPoly& c) const {
    VElement r(k_, trunc_);
    for (const auto& [m, g] : terms_) r.add(m, g, c);
    return r;
  }

  /// The y-free part, i.e. the symmetric function when k == 0.
  GradedSym constant_part() const {
    auto it = terms_.find(YMonomial(k_, 0));
    return it == terms_.end() ? GradedSym(trunc_) : it->second;
  }

  friend bool operator==(const VElement& a, const VElement& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, g] : terms_) {
      if (!first) s += " + ";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        mono += "*y" + std::to_string(i + 1);
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      s += "[" + g.str() + "]" + mono;
    }
    return s;
  }

 private:
  void check_compatible(const VElement& o) const {
    if (o.k_ != k_) throw std::invalid_argument("VElement: mismatched k");
  }

  int k_;
  int trunc_;
  std::map<YMonomial, GradedSym> terms_;
};

namespace detail {

inline const QPoly& q_power_minus_one(int m) {
  static const std::vector<QPoly> table = [] {
    std::vector<QPoly> t;
    for (int i = 0; i <= 64; ++i) t.push_back(QPoly::monomial(1, i) - QPoly(1));
    return t;
  }();
  if (m < 0 || m >= static_cast<int>(table.size()))
    throw std::out_of_range("power sum degree too large");
  return table[m];
}

// Calls f(chosen_sum, factor, remaining) for every sub-multiset of the parts of
// mu (counted with multiplicity, as a product expansion), where
// factor = prod over chosen parts m of sign * (q^m - 1).
template <typename F>
void for_each_shift_term(const Partition& mu, int sign, F&& f) {
  const auto& parts = mu.parts();
  const std::size_t len = parts.size();
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    int chosen = 0;
    QPoly factor(1);
    std::vector<int> rest;
    rest.reserve(len);
    for (std::size_t j = 0; j < len; ++j) {
      if (mask & (1u << j)) {
        chosen += parts[j];
        factor *= sign > 0 ? q_power_minus_one(parts[j]) : -q_power_minus_one(parts[j]);
      } else {
        rest.push_back(parts[j]);
      }
    }
    Partition remaining;
    if (!rest.empty()) remaining = Partition(std::move(rest));
    f(chosen, factor, remaining);
  }
}

}  // namespace detail

/// T_i acting on y_i = u, y_{i+1} = v, 1 <= i <= k-1:
///
///   T P = ((q-1) u P(u,v) + (v - q u) P(v,u)) / (v - u)
///       = (q-1) u dd(P) + P(v,u),   dd(P) = (P(u,v) - P(v,u)) / (v - u).
///
/// This is the normalization with T(1) = 1 and (T - 1)(T + q) = 0. The
/// variant with (q-1) v in the numerator satisfies (T - q)(T + 1) = 0
/// instead and is q T^{-1} of this one.
inline VElement op_t(int i, const VElement& f) {
  if (f.k() < 2 || i < 1 || i > f.k() - 1)
    throw std::invalid_argument("op_t: index " + std::to_string(i) + " out of range for k = " +
                                std::to_string(f.k()));
  const QPoly q_minus_one = QPoly::q() - QPoly(1);
  const QPoly one_minus_q = -q_minus_one;
  const QPoly one(1);
  VElement out(f.k(), f.truncation());
  const std::size_t u = static_cast<std::size_t>(i - 1), v = u + 1;
  for (const auto& [m, g] : f.terms()) {
    const int a = m[u], b = m[v];
    YMonomial swapped = m;
    std::swap(swapped[u], swapped[v]);
    out.add(swapped, g, one);
    if (a == b) continue;
    // u * dd(u^a v^b) = +-(u^hi v^lo + u^{hi-1} v^{lo+1} + ... + u^{lo+1} v^{hi-1})
    const int lo = std::min(a, b), hi = std::max(a, b);
    const QPoly& c = a > b ? one_minus_q : q_minus_one;
    YMonomial t = m;
    for (int j = 0; j < hi - lo; ++j) {
      t[u] = hi - j;
      t[v] = lo + j;
      out.add(t, g, c);
    }
  }
  return out;
}

/// d+ : V_k -> V_{k+1}, F |-> T_1 ... T_k (F[X + (q-1) y_{k+1}]).
inline VElement op_dplus(const VElement& f) {
  const int k = f.k();
  VElement shifted(k + 1, f.truncation());
  for (const auto& [m, g] : f.terms()) {
    YMonomial ext = m;
    ext.push_back(0);
    for (const auto& [mu, c] : g.terms()) {
      detail::for_each_shift_term(mu, +1, [&](int chosen, const QPoly& factor,
                                              const Partition& rest) {
        ext.back() = chosen;
        shifted.add_term(ext, rest, c * factor);
      });
    }
  }
  for (int i = k; i >= 1; --i) shifted = op_t(i, shifted);
  return shifted;
}

/// d- : V_k -> V_{k-1}, F |-> -F[X - (q-1) y_k] sum_i (-1/y_k)^i e_i[X],
/// keeping the coefficient of y_k^{-1}. A term y_k^a G contributes
/// (-1)^a e_{a+1} G.
inline VElement op_dminus(const VElement& f) {
  const int k = f.k();
  if (k < 1) throw std::invalid_argument("op_dminus: needs k >= 1");
  const int n = f.truncation();
  // (remaining monomial, total y_k exponent) -> symmetric coefficient
  std::map<std::pair<YMonomial, int>, GradedSym> grouped;
  for (const auto& [m, g] : f.terms()) {
    YMonomial head(m.begin(), m.end() - 1);
    const int a0 = m.back();
    for (const auto& [mu, c] : g.terms()) {
      detail::for_each_shift_term(mu, -1, [&](int chosen, const QPoly& factor,
                                              const Partition& rest) {
        auto key = std::make_pair(head, a0 + chosen);
        auto it = grouped.find(key);
        if (it == grouped.end()) it = grouped.emplace(key, GradedSym(n)).first;
        it->second.add_term(rest, c * factor);
      });
    }
  }
  VElement out(k - 1, n);
  for (const auto& [key, g] : grouped) {
    const auto& [head, a] = key;
    const int room = n - total_degree(head);
    if (a + 1 > room || g.is_zero()) continue;
    GradedSym prod = mul_limited(e_in_p(a + 1, n), g, room);
    out.add(head, prod, QPoly(a % 2 == 0 ? 1 : -1));
  }
  return out;
}

/// phi : V_k -> V_k, F |-> T_1 ... T_{k-1} (-y_k F).
inline VElement op_phi(const VElement& f) {
  const int k = f.k();
  if (k < 1) throw std::invalid_argument("op_phi: needs k >= 1");
  VElement out(k, f.truncation());
  for (const auto& [m, g] : f.terms()) {
    YMonomial t = m;
    ++t.back();
    out.add(t, g, QPoly(-1));
  }
  for (int i = k - 1; i >= 1; --i) out = op_t(i, out);
  return out;
}

/// phi as (d- d+ - d+ d-) / (q - 1). Throws std::logic_error if some
/// coefficient is not divisible by q - 1.
inline VElement op_phi_commutator(const VElement& f) {
  if (f.k() < 1) throw std::invalid_argument("op_phi_commutator: needs k >= 1");
  VElement diff = op_dminus(op_dplus(f)) - op_dplus(op_dminus(f));
  VElement out(f.k(), f.truncation());
  for (const auto& [m, g] : diff.terms()) {
    for (const auto& [mu, c] : g.terms()) {
      auto quot = c.divided_by_q_minus_one();
      if (!quot) throw std::logic_error("op_phi_commutator: coefficient " + c.str() +
                                        " is not divisible by q - 1");
      out.add_term(m, mu, *quot);
    }
  }
  return out;
}

/// Applies the letters of `w` right to left. f must lie in V_k with
/// k = input_degree(w).
inline VElement apply_word(const OpWord& w, VElement f) {
  if (f.k() != input_degree(w))
    throw std::invalid_argument("apply_word: input lies in V_" + std::to_string(f.k()) +
                                ", word expects V_" + std::to_string(input_degree(w)));
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    switch (it->kind) {
      case OpLetter::Kind::DMinus: f = op_dminus(f); break;
      case OpLetter::Kind::Phi: f = op_phi(f); break;
      case OpLetter::Kind::DPlus: f = op_dplus(f); break;
      case OpLetter::Kind::T: f = op_t(it->index, f); break;
    }
  }
  return f;
}

/// d_P(1) for a path word, with truncation degree equal to its semilength.
inline GradedSym eval_word(const PathWord& w) {
  if (long bad = first_violation(w); bad >= 0)
    throw std::invalid_argument("eval_word: malformed path word at step " + std::to_string(bad));
  const int n = semilength(w);
  return apply_word(to_op_word(w), VElement::one(0, n)).constant_part();
}

}  // namespace vsllt
