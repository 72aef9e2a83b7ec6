#pragma once

// Univariate polynomials in q over the rationals.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vsllt {

using Rational = mpq_class;

inline std::string rational_str(const Rational& r) { return r.get_str(); }

/// Parses "n" or "n/d" (optionally signed), rejecting a zero denominator.
inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

/// Polynomial in q with exact rational coefficients. Coefficient i multiplies
/// q^i; trailing zeros are never stored, so the zero polynomial has no
/// coefficients and equality is structural.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c) { if (c != 0) coeffs_.emplace_back(c); }  // NOLINT
  QPoly(Rational c) { if (c != 0) coeffs_.push_back(std::move(c)); }  // NOLINT

  static QPoly q() { return monomial(1, 1); }

  static QPoly monomial(const Rational& c, std::size_t degree) {
    QPoly r;
    if (c == 0) return r;
    r.coeffs_.assign(degree + 1, Rational(0));
    r.coeffs_[degree] = c;
    return r;
  }

  static QPoly from_coeffs(std::vector<Rational> c) {
    QPoly r;
    r.coeffs_ = std::move(c);
    r.trim();
    return r;
  }

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }

  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  QPoly& operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  QPoly& operator-=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  QPoly& operator*=(const QPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    Rational tmp;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
        r.coeffs_[i + j] += tmp;
      }
    }
    r.trim();
    return r;
  }

  friend QPoly operator-(QPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Value at a rational point (Horner).
  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Exact quotient by (q - 1), or nullopt if q = 1 is not a root.
  std::optional<QPoly> divided_by_q_minus_one() const {
    if (is_zero()) return QPoly{};
    // Synthetic division from the top coefficient down.
    std::vector<Rational> quot(coeffs_.size() - 1);
    Rational carry = 0;
    for (std::size_t i = coeffs_.size(); i-- > 1;) {
      carry += coeffs_[i];
      quot[i - 1] = carry;
    }
    if (carry + coeffs_[0] != 0) return std::nullopt;
    return from_coeffs(std::move(quot));
  }

  /// Renders as "q^2 - q", "1/2*q - 3", "0". With spaced = false the
  /// separators are dropped ("q^2-q").
  std::string str(bool spaced = true) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      Rational mag = abs(c);
      if (first) {
        if (c < 0) out += '-';
      } else {
        out += spaced ? (c < 0 ? " - " : " + ") : (c < 0 ? "-" : "+");
      }
      first = false;
      if (i == 0) {
        out += mag.get_str();
        continue;
      }
      if (mag != 1) out += mag.get_str() + "*";
      out += 'q';
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline QPoly operator*(const Rational& c, const QPoly& p) { return QPoly(c) * p; }

/// a(q + 1), via binomial expansion of each power.
inline QPoly shift_plus_one(const QPoly& a) {
  const auto& c = a.coeffs();
  std::vector<Rational> out(c.size(), Rational(0));
  std::vector<Rational> binom;  // row i of Pascal's triangle
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<Rational> next(i + 1, Rational(1));
    for (std::size_t j = 1; j < i; ++j) next[j] = binom[j - 1] + binom[j];
    binom = std::move(next);
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j <= i; ++j) out[j] += c[i] * binom[j];
  }
  return QPoly::from_coeffs(std::move(out));
}

/// Coefficients c_0..c_d with a(q) = sum c_i (q - 1)^i, by repeated
/// synthetic division by (q - 1). Empty for the zero polynomial.
inline std::vector<Rational> rebase_q_minus_one(const QPoly& a) {
  std::vector<Rational> rem(a.coeffs());
  std::vector<Rational> out;
  out.reserve(rem.size());
  while (!rem.empty()) {
    // rem = quot * (q - 1) + r, r = rem(1)
    std::vector<Rational> quot(rem.size() - 1);
    Rational carry = 0;
    for (std::size_t i = rem.size(); i-- > 1;) {
      carry += rem[i];
      quot[i - 1] = carry;
    }
    out.push_back(carry + rem[0]);
    rem = std::move(quot);
  }
  return out;
}

/// Inverse of rebase_q_minus_one: sum c_i (q - 1)^i.
inline QPoly from_q_minus_one_basis(std::span<const Rational> c) {
  const QPoly base = QPoly::q() - QPoly(1);
  QPoly acc;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * base + QPoly(c[i]);
  return acc;
}

/// True iff every coefficient is >= 0.
inline bool is_nonneg(const QPoly& a) {
  return std::all_of(a.coeffs().begin(), a.coeffs().end(),
                     [](const Rational& c) { return c >= 0; });
}

inline bool is_nonneg_integer_sequence(std::span<const Rational> c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) {
    return x >= 0 && x.get_den() == 1;
  });
}

inline std::vector<std::string> coeff_strings(const QPoly& a) {
  std::vector<std::string> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(rational_str(c));
  return out;
}

inline QPoly from_coeff_strings(std::span<const std::string> s) {
  std::vector<Rational> c;
  c.reserve(s.size());
  for (const auto& x : s) {
    Rational r = parse_rational(x);
    c.push_back(std::move(r));
  }
  return QPoly::from_coeffs(std::move(c));
}

/// Parses the output of QPoly::str (either spacing). Accepts terms of the
/// form [c][*]q[^k] or a bare rational c.
inline QPoly parse_qpoly(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  QPoly out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    Rational c = 1;
    if (i > start) {
      c = parse_rational(s.substr(start, i - start));
    }
    std::size_t deg = 0;
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t ds = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (ds == i) throw std::invalid_argument("missing exponent in '" + s + "'");
        deg = std::stoul(s.substr(ds, i - ds));
      }
    } else if (i == start) {
      throw std::invalid_argument("malformed polynomial '" + s + "'");
    }
    out += QPoly::monomial(sign * c, deg);
    if (i < s.size() && s[i] != '+' && s[i] != '-')
      throw std::invalid_argument("unexpected character in '" + s + "'");
  }
  return out;
}

}  // namespace vsllt
