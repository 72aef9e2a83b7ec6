#pragma once

// Symbolic normalization of path operator words into linear combinations of
// concatenated blocks d- phi^m d+, each of which multiplies by e_{m+1}.
//
// A step always targets the leftmost d+ of degree >= 1. If it is preceded by
// d-, the pair is rewritten with phi = (d- d+ - d+ d-)/(q-1). If it is
// preceded by phi, phi d+ = T_1 d+ phi + (q-1) d+ phi introduces a T letter,
// which is then moved left with
//
//   phi T_i   = T_{i+1} phi          (i <= k-2)
//   phi^2 T_{k-1} = T_1 phi^2
//   d- T_i    = T_i d-               (i <= k-2)
//
// until it disappears through one of
//
//   d-^2 T_{k-1}    = d-^2
//   d- phi T_{k-1}  = q phi d-
//   phi d- T_{k-1}  = d- phi - (q-1) phi d-
//
// where k is the degree of the V_k the T acts on.

#include "vsllt/op_word.hpp"
#include "vsllt/path_word.hpp"
#include "vsllt/qpoly.hpp"
#include "vsllt/symfunc.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vsllt {

/// Formal Q[q]-linear combination of operator words. No zero coefficients.
using LinComb = std::map<OpWord, QPoly>;

inline void add_to(LinComb& lc, const OpWord& w, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = lc.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) lc.erase(it);
  }
}

inline std::string lincomb_str(const LinComb& lc) {
  if (lc.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : lc) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.str() + ")*" + compact_str(w);
  }
  return s;
}

/// Internal failure of a rewrite rule (a configuration the rules cannot
/// handle). Never raised for valid path words.
class RewriteError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require_high_dplus(const OpWord& w, std::size_t pos, OpLetter::Kind before,
                               const char* who) {
  if (pos == 0 || pos >= w.size() || !w[pos].is(OpLetter::Kind::DPlus))
    throw std::invalid_argument(std::string(who) + ": no d+ at the given position");
  if (letter_degree(w, pos) < 1)
    throw std::invalid_argument(std::string(who) + ": d+ has degree 0");
  if (!w[pos - 1].is(before))
    throw std::invalid_argument(std::string(who) + ": unexpected letter before d+");
}

inline OpWord splice(const OpWord& w, std::size_t from, std::size_t count,
                     std::initializer_list<OpLetter> with) {
  OpWord out;
  out.reserve(w.size() - count + with.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(from));
  out.insert(out.end(), with.begin(), with.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(from + count), w.end());
  return out;
}

}  // namespace detail

/// Rewrites ... d- d+ ... (d+ at `pos`, degree >= 1) as
/// ... d+ d- ... + (q-1) ... phi ...
inline LinComb rewrite_case0(const OpWord& w, std::size_t pos) {
  detail::require_high_dplus(w, pos, OpLetter::Kind::DMinus, "rewrite_case0");
  LinComb out;
  add_to(out, detail::splice(w, pos - 1, 2, {OpLetter::dplus(), OpLetter::dminus()}), QPoly(1));
  add_to(out, detail::splice(w, pos - 1, 2, {OpLetter::phi()}), QPoly::q() - QPoly(1));
  return out;
}

/// Observer for the intermediate words (with their T letter) produced while
/// a T is moved left.
using TraceFn = std::function<void(const OpWord&, const QPoly&)>;

/// Rewrites ... phi d+ ... (d+ at `pos`, degree >= 1) and pushes the
/// resulting T letter left until it is absorbed. Returns a T-free combination.
inline LinComb rewrite_push_t(const OpWord& w, std::size_t pos, const TraceFn& trace = {}) {
  detail::require_high_dplus(w, pos, OpLetter::Kind::Phi, "rewrite_push_t");
  const QPoly q = QPoly::q();
  const QPoly q_minus_one = q - QPoly(1);

  LinComb out;
  add_to(out, detail::splice(w, pos - 1, 2, {OpLetter::dplus(), OpLetter::phi()}), q_minus_one);

  OpWord cur = detail::splice(w, pos - 1, 2, {OpLetter::t(1), OpLetter::dplus(), OpLetter::phi()});
  QPoly coeff(1);
  std::size_t t = pos - 1;

  for (;;) {
    const int i = cur[t].index;
    const int k = letter_degree(cur, t);
    if (i < 1 || i > k - 1)
      throw RewriteError("T" + std::to_string(i) + " out of range in degree " + std::to_string(k) +
                         " in " + compact_str(cur));
    if (trace) trace(cur, coeff);
    if (t == 0) throw RewriteError("T letter reached the front of " + compact_str(cur));
    const OpLetter left = cur[t - 1];
    const bool low = i <= k - 2;

    if (left.is(OpLetter::Kind::Phi) && low) {
      cur = detail::splice(cur, t - 1, 2, {OpLetter::t(i + 1), OpLetter::phi()});
      --t;
      continue;
    }
    if (left.is(OpLetter::Kind::DMinus) && low) {
      cur = detail::splice(cur, t - 1, 2, {OpLetter::t(i), OpLetter::dminus()});
      --t;
      continue;
    }
    if (t < 2 || !(left.is(OpLetter::Kind::Phi) || left.is(OpLetter::Kind::DMinus)))
      throw RewriteError("no rule moves T past the start of " + compact_str(cur));

    // i == k - 1: the rule depends on the two letters to the left.
    const OpLetter far = cur[t - 2];
    if (left.is(OpLetter::Kind::Phi)) {
      if (far.is(OpLetter::Kind::Phi)) {
        cur = detail::splice(cur, t - 2, 3, {OpLetter::t(1), OpLetter::phi(), OpLetter::phi()});
        t -= 2;
        continue;
      }
      if (far.is(OpLetter::Kind::DMinus)) {
        add_to(out, detail::splice(cur, t - 2, 3, {OpLetter::phi(), OpLetter::dminus()}), coeff * q);
        return out;
      }
    } else {
      if (far.is(OpLetter::Kind::DMinus)) {
        add_to(out, detail::splice(cur, t - 2, 3, {OpLetter::dminus(), OpLetter::dminus()}), coeff);
        return out;
      }
      if (far.is(OpLetter::Kind::Phi)) {
        add_to(out, detail::splice(cur, t - 2, 3, {OpLetter::dminus(), OpLetter::phi()}), coeff);
        add_to(out, detail::splice(cur, t - 2, 3, {OpLetter::phi(), OpLetter::dminus()}),
               -(coeff * q_minus_one));
        return out;
      }
    }
    throw RewriteError("no rule applies to " + compact_str(cur));
  }
}

/// One rewrite at the leftmost d+ of degree >= 1, or nullopt if `w` is
/// already terminal.
inline std::optional<LinComb> rewrite_step(const OpWord& w, const TraceFn& trace = {}) {
  auto pos = leftmost_high_dplus(w);
  if (!pos) return std::nullopt;
  if (*pos == 0) throw RewriteError("d+ at the front of " + compact_str(w));
  const OpLetter left = w[*pos - 1];
  if (left.is(OpLetter::Kind::DMinus)) return rewrite_case0(w, *pos);
  if (left.is(OpLetter::Kind::Phi)) return rewrite_push_t(w, *pos, trace);
  throw RewriteError("unexpected letter before the leftmost high d+ in " + compact_str(w));
}

/// Called after every rewrite with the pending (non-final) combination.
using StepFn = std::function<void(const LinComb& pending)>;

/// Rewrites every term until all d+ have degree 0. Terms are processed
/// lexicographically smallest word first.
inline LinComb normalize(const OpWord& w, const StepFn& on_step = {}) {
  for (const auto& l : w)
    if (l.is(OpLetter::Kind::T)) throw std::invalid_argument("normalize: T letter in input");
  {
    int d = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].is(OpLetter::Kind::DMinus)) ++d;
      else if (w[i].is(OpLetter::Kind::DPlus) && --d < 0)
        throw std::invalid_argument("normalize: word goes below degree 0 at " + std::to_string(i));
      else if (w[i].is(OpLetter::Kind::Phi) && d == 0)
        throw std::invalid_argument("normalize: phi at degree 0 at " + std::to_string(i));
    }
    if (d != 0) throw std::invalid_argument("normalize: unbalanced word");
  }

  LinComb pending;
  LinComb done;
  add_to(pending, w, QPoly(1));
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const OpWord& word = node.key();
    const QPoly& coeff = node.mapped();
    auto next = rewrite_step(word);
    if (!next) {
      add_to(done, word, coeff);
      continue;
    }
    for (const auto& [nw, c] : *next) add_to(pending, nw, c * coeff);
    if (on_step) on_step(pending);
  }
  return done;
}

inline LinComb normalize(const PathWord& w) { return normalize(to_op_word(w)); }

/// Expansion in the elementary basis: partition -> coefficient.
struct EExpansion {
  int n = 0;
  std::map<Partition, QPoly> terms;

  friend bool operator==(const EExpansion&, const EExpansion&) = default;

  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      if (!first) s += " + ";
      first = false;
      s += "(" + it->second.str() + ")*e" + it->first.str();
    }
    return s;
  }
};

/// Partition sort(m_1+1, ..., m_r+1) for a terminal word
/// d- phi^{m_1} d+ ... d- phi^{m_r} d+.
inline Partition block_partition(const OpWord& w) {
  if (!is_terminal(w)) throw std::invalid_argument("not a terminal word: " + compact_str(w));
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < w.size()) {
    ++i;  // d-
    int m = 0;
    while (w[i].is(OpLetter::Kind::Phi)) {
      ++m;
      ++i;
    }
    ++i;  // d+
    parts.push_back(m + 1);
  }
  return Partition(std::move(parts));
}

inline EExpansion lincomb_to_e(const LinComb& lc) {
  EExpansion ex;
  bool first = true;
  for (const auto& [w, c] : lc) {
    Partition mu = block_partition(w);
    if (first) {
      ex.n = mu.size();
      first = false;
    } else if (mu.size() != ex.n) {
      throw std::invalid_argument("lincomb_to_e: inhomogeneous combination");
    }
    auto [it, inserted] = ex.terms.try_emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) ex.terms.erase(it);
    }
  }
  return ex;
}

/// e-expansion of d_P(1).
inline EExpansion e_expansion(const PathWord& w) { return lincomb_to_e(normalize(w)); }

/// Sum of c * e_mu, converted to the power-sum basis.
inline GradedSym e_to_p(const EExpansion& ex, int truncation) {
  GradedSym out(truncation);
  for (const auto& [mu, c] : ex.terms) out.add_scaled(e_mu_in_p(mu, truncation), c);
  return out;
}

struct PositivityReport {
  EExpansion at_q;
  EExpansion at_q_plus_one;
  std::map<Partition, std::vector<Rational>> q_minus_one_coeffs;
  bool e_positive = false;
  /// Every (q-1)-coefficient is a nonnegative integer.
  bool q_minus_one_nonneg = false;
};

inline PositivityReport e_positivity_report(const EExpansion& ex) {
  PositivityReport r;
  r.at_q = ex;
  r.at_q_plus_one.n = ex.n;
  r.e_positive = true;
  r.q_minus_one_nonneg = true;
  for (const auto& [mu, c] : ex.terms) {
    QPoly shifted = shift_plus_one(c);
    r.e_positive = r.e_positive && is_nonneg(shifted);
    r.at_q_plus_one.terms.emplace(mu, std::move(shifted));
    auto base = rebase_q_minus_one(c);
    r.q_minus_one_nonneg = r.q_minus_one_nonneg && is_nonneg_integer_sequence(base);
    r.q_minus_one_coeffs.emplace(mu, std::move(base));
  }
  return r;
}

}  // namespace vsllt
