#pragma once

// Random inputs and small algebra helpers shared by the test binaries.

#include "vsllt/dyck_algebra.hpp"
#include "vsllt/qpoly.hpp"
#include "vsllt/symfunc.hpp"

#include <random>
#include <vector>

namespace vsllt::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline QPoly random_qpoly(Rng& rng, int max_degree = 2, int bound = 3) {
  std::vector<Rational> c;
  for (int i = 0, d = uniform(rng, 0, max_degree); i <= d; ++i) c.emplace_back(uniform(rng, -bound, bound));
  return QPoly::from_coeffs(std::move(c));
}

/// Non-zero polynomial with rational coefficients.
inline QPoly random_rational_qpoly(Rng& rng, int max_degree = 4) {
  for (;;) {
    std::vector<Rational> c;
    for (int i = 0, d = uniform(rng, 0, max_degree); i <= d; ++i)
      c.emplace_back(uniform(rng, -9, 9), uniform(rng, 1, 6));
    for (auto& x : c) x.canonicalize();
    QPoly p = QPoly::from_coeffs(std::move(c));
    if (!p.is_zero()) return p;
  }
}

inline Partition random_partition(Rng& rng, int size) {
  std::vector<int> parts;
  while (size > 0) {
    int p = uniform(rng, 1, size);
    parts.push_back(p);
    size -= p;
  }
  return parts.empty() ? Partition{} : Partition(std::move(parts));
}

/// Random element of Lambda of degree at most max_degree.
inline GradedSym random_sym(Rng& rng, int max_degree, int truncation, int max_terms = 3) {
  GradedSym f(truncation);
  for (int t = 0, n = uniform(rng, 1, max_terms); t < n; ++t)
    f.add_term(random_partition(rng, uniform(rng, 0, max_degree)), random_qpoly(rng));
  return f;
}

/// Random element of V_k whose terms have total degree at most max_total.
inline VElement random_velement(Rng& rng, int k, int truncation, int max_total, int max_terms = 3) {
  VElement f(k, truncation);
  for (int t = 0, n = uniform(rng, 1, max_terms); t < n; ++t) {
    int budget = uniform(rng, 0, max_total);
    YMonomial m(k, 0);
    for (int j = 0; j < k; ++j) {
      m[j] = uniform(rng, 0, budget);
      budget -= m[j];
    }
    f.add_term(m, random_partition(rng, uniform(rng, 0, budget)), random_qpoly(rng));
  }
  return f;
}

/// y_j * f, 1-based j.
inline VElement mul_y(const VElement& f, int j, const QPoly& c = QPoly(1)) {
  VElement out(f.k(), f.truncation());
  for (const auto& [m, g] : f.terms()) {
    YMonomial t = m;
    ++t[j - 1];
    out.add(t, g, c);
  }
  return out;
}

/// f with y_i and y_{i+1} exchanged.
inline VElement swap_vars(const VElement& f, int i) {
  VElement out(f.k(), f.truncation());
  for (const auto& [m, g] : f.terms()) {
    YMonomial t = m;
    std::swap(t[i - 1], t[i]);
    out.add(t, g);
  }
  return out;
}

/// (f - f^s) / (y_{i+1} - y_i), by polynomial long division in y_{i+1}.
inline VElement divided_difference(const VElement& f, int i) {
  VElement rem = f - swap_vars(f, i);
  VElement quot(f.k(), f.truncation());
  const std::size_t v = i;
  while (!rem.is_zero()) {
    // leading term: highest power of y_{i+1}
    auto lead = rem.terms().begin();
    for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it)
      if (it->first[v] > lead->first[v]) lead = it;
    if (lead->first[v] == 0) throw std::logic_error("divided_difference: non-zero remainder");
    YMonomial m = lead->first;
    const GradedSym g = lead->second;
    --m[v];
    quot.add(m, g);
    // subtract (y_{i+1} - y_i) * y^m g
    VElement step(f.k(), f.truncation());
    step.add(m, g);
    rem -= mul_y(step, i + 1) - mul_y(step, i);
  }
  return quot;
}

inline QPoly q_minus_one() { return QPoly::q() - QPoly(1); }

/// The variant ((q-1) v P + (v - q u) P^s) / (v - u), kept only to show that
/// it fails the quadratic relation.
inline VElement literal_t(int i, const VElement& f) {
  return mul_y(divided_difference(f, i), i + 1).scaled(q_minus_one()) +
         swap_vars(f, i).scaled(QPoly::q());
}

}  // namespace vsllt::testing
