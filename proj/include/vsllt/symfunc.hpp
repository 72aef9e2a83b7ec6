#pragma once

// Symmetric functions of bounded degree, stored in the power-sum basis.

#include "vsllt/qpoly.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <functional>
#include <initializer_list>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace vsllt {

/// Weakly decreasing sequence of positive integers. Constructing from an
/// arbitrary sequence sorts it.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const noexcept { return parts_.empty(); }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend Partition operator+(const Partition& a, const Partition& b) {
    std::vector<int> merged;
    merged.reserve(a.length() + b.length());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged),
               std::greater<>());
    Partition r;
    r.parts_ = std::move(merged);
    return r;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

  /// "[3,1]"; the empty partition is "[]".
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in reverse lexicographic order ([n] first).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Symmetric function truncated above degree N, as a map p_mu -> coefficient.
class GradedSym {
 public:
  explicit GradedSym(int truncation = 0) : trunc_(truncation) {
    if (truncation < 0) throw std::invalid_argument("negative truncation degree");
  }

  static GradedSym one(int truncation) { return constant(QPoly(1), truncation); }

  static GradedSym constant(const QPoly& c, int truncation) {
    GradedSym r(truncation);
    r.add_term(Partition{}, c);
    return r;
  }

  /// c * p_mu (zero if |mu| exceeds the truncation).
  static GradedSym power_sum(const Partition& mu, const QPoly& c, int truncation) {
    GradedSym r(truncation);
    r.add_term(mu, c);
    return r;
  }

  int truncation() const noexcept { return trunc_; }
  const std::map<Partition, QPoly>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Highest |mu| present, -1 if zero.
  int degree() const {
    int d = -1;
    for (const auto& [mu, c] : terms_) d = std::max(d, mu.size());
    return d;
  }

  QPoly coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? QPoly{} : it->second;
  }

  void add_term(const Partition& mu, const QPoly& c) {
    if (c.is_zero() || mu.size() > trunc_) return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += c * other, dropping terms above `limit` (defaults to the truncation).
  void add_scaled(const GradedSym& other, const QPoly& c, int limit = -1) {
    if (c.is_zero()) return;
    const int lim = limit < 0 ? trunc_ : std::min(limit, trunc_);
    for (const auto& [mu, v] : other.terms_)
      if (mu.size() <= lim) add_term(mu, v * c);
  }

  GradedSym& operator+=(const GradedSym& o) {
    for (const auto& [mu, c] : o.terms_) add_term(mu, c);
    return *this;
  }

  GradedSym& operator-=(const GradedSym& o) {
    for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
    return *this;
  }

  friend GradedSym operator+(GradedSym a, const GradedSym& b) { return a += b; }
  friend GradedSym operator-(GradedSym a, const GradedSym& b) { return a -= b; }

  GradedSym scaled(const QPoly& c) const {
    GradedSym r(trunc_);
    r.add_scaled(*this, c);
    return r;
  }

  /// Copy with every term of degree above `degree` removed.
  GradedSym truncated(int degree) const {
    GradedSym r(trunc_);
    for (const auto& [mu, c] : terms_)
      if (mu.size() <= degree) r.terms_.emplace_hint(r.terms_.end(), mu, c);
    return r;
  }

  GradedSym with_truncation(int truncation) const {
    GradedSym r(truncation);
    for (const auto& [mu, c] : terms_) r.add_term(mu, c);
    return r;
  }

  friend bool operator==(const GradedSym& a, const GradedSym& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) s += " + ";
      first = false;
      s += "(" + it->second.str() + ")*p" + it->first.str();
    }
    return s;
  }

 private:
  int trunc_;
  std::map<Partition, QPoly> terms_;
};

/// Product truncated at degree `limit` (defaults to the common truncation).
inline GradedSym mul_limited(const GradedSym& f, const GradedSym& g, int limit) {
  GradedSym r(f.truncation());
  for (const auto& [mu, a] : f.terms())
    for (const auto& [nu, b] : g.terms())
      if (mu.size() + nu.size() <= limit) r.add_term(mu + nu, a * b);
  return r;
}

inline GradedSym sym_mul(const GradedSym& f, const GradedSym& g) {
  if (f.truncation() != g.truncation())
    throw std::invalid_argument("sym_mul: truncation degree mismatch");
  return mul_limited(f, g, f.truncation());
}

namespace detail {

// e_k in the power-sum basis, untruncated, by Newton's identity
// k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i. Entries are never modified once
// built and std::deque keeps references stable across growth.
inline const GradedSym& elementary_table(int k) {
  static std::mutex mutex;
  static std::deque<GradedSym> table;
  std::lock_guard lock(mutex);
  if (table.empty()) table.push_back(GradedSym::one(0));
  while (static_cast<int>(table.size()) <= k) {
    const int n = static_cast<int>(table.size());
    GradedSym acc(n);
    for (int i = 1; i <= n; ++i) {
      GradedSym pi = GradedSym::power_sum(Partition{i}, QPoly(i % 2 == 1 ? 1 : -1), n);
      acc += mul_limited(table[n - i].with_truncation(n), pi, n);
    }
    table.push_back(acc.scaled(QPoly(Rational(1, n))));
  }
  return table[k];
}

}  // namespace detail

/// e_k in the power-sum basis with truncation N.
inline GradedSym e_in_p(int k, int truncation) {
  if (k < 0 || k > truncation) throw std::invalid_argument("e_in_p: need 0 <= k <= N");
  return detail::elementary_table(k).with_truncation(truncation);
}

/// e_mu = e_{mu_1} e_{mu_2} ... in the power-sum basis.
inline GradedSym e_mu_in_p(const Partition& mu, int truncation) {
  if (mu.size() > truncation) throw std::invalid_argument("e_mu_in_p: |mu| > N");
  GradedSym acc = GradedSym::one(truncation);
  for (int part : mu) acc = sym_mul(acc, e_in_p(part, truncation));
  return acc;
}

/// Polynomial in x_1..x_n: exponent vector -> coefficient.
using VarPoly = std::map<std::vector<int>, QPoly>;

inline void add_to(VarPoly& p, const std::vector<int>& exps, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

inline std::string varpoly_str(const VarPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!first) s += " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      int e = it->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += "(" + it->second.str() + ")";
    } else if (it->second == QPoly(1)) {
      s += mono;
    } else {
      s += "(" + it->second.str() + ")*" + mono;
    }
  }
  return s;
}

namespace detail {

// p_mu(x_1..x_n) with integer coefficients, by assigning each part to a variable.
inline std::map<std::vector<int>, long> power_sum_in_vars(const Partition& mu, int n) {
  std::map<std::vector<int>, long> out;
  std::vector<int> exps(n, 0);
  const auto& parts = mu.parts();
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == parts.size()) {
      ++out[exps];
      return;
    }
    for (int v = 0; v < n; ++v) {
      exps[v] += parts[j];
      rec(j + 1);
      exps[v] -= parts[j];
    }
  };
  rec(0);
  return out;
}

// Number of ways to send the parts of mu to variables so that variable i
// receives total exponent alpha[i].
inline long power_sum_monomial_count(const Partition& mu, std::vector<int> alpha) {
  const auto& parts = mu.parts();
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == parts.size()) {
      if (std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 0; })) ++count;
      return;
    }
    for (auto& a : alpha) {
      if (a < parts[j]) continue;
      a -= parts[j];
      rec(j + 1);
      a += parts[j];
    }
  };
  rec(0);
  return count;
}

}  // namespace detail

/// Substitutes p_k -> x_1^k + ... + x_n^k and expands.
inline VarPoly expand_in_vars(const GradedSym& f, int n) {
  if (n < 1) throw std::invalid_argument("expand_in_vars: need n >= 1");
  VarPoly out;
  for (const auto& [mu, c] : f.terms())
    for (const auto& [exps, count] : detail::power_sum_in_vars(mu, n))
      add_to(out, exps, c * QPoly(count));
  return out;
}

/// Coefficient of x^alpha in f(x_1..x_len(alpha)).
inline QPoly monomial_coefficient(const GradedSym& f, const std::vector<int>& alpha) {
  const int total = std::accumulate(alpha.begin(), alpha.end(), 0);
  QPoly acc;
  for (const auto& [mu, c] : f.terms()) {
    if (mu.size() != total) continue;
    if (long k = detail::power_sum_monomial_count(mu, alpha)) acc += c * QPoly(k);
  }
  return acc;
}

}  // namespace vsllt
