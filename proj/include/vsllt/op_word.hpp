#pragma once

// Words over the operator alphabet {d-, phi, d+, T_i}, written as
// compositions: the rightmost letter acts first.

#include "vsllt/path_word.hpp"

#include <cctype>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vsllt {

struct OpLetter {
  enum class Kind : unsigned char { DMinus, Phi, DPlus, T };

  Kind kind = Kind::DMinus;
  int index = 0;  // only meaningful for T

  static constexpr OpLetter dminus() { return {Kind::DMinus, 0}; }
  static constexpr OpLetter phi() { return {Kind::Phi, 0}; }
  static constexpr OpLetter dplus() { return {Kind::DPlus, 0}; }
  static constexpr OpLetter t(int i) { return {Kind::T, i}; }

  bool is(Kind k) const noexcept { return kind == k; }

  friend auto operator<=>(const OpLetter&, const OpLetter&) = default;
  friend bool operator==(const OpLetter&, const OpLetter&) = default;
};

using OpWord = std::vector<OpLetter>;

inline OpWord to_op_word(const PathWord& w) {
  OpWord out;
  out.reserve(w.size());
  for (Step s : w) {
    switch (s) {
      case Step::North: out.push_back(OpLetter::dminus()); break;
      case Step::Diagonal: out.push_back(OpLetter::phi()); break;
      case Step::East: out.push_back(OpLetter::dplus()); break;
    }
  }
  return out;
}

/// Parses a path word ("-0-0++" or "-,0,-,0,+,+") straight to operators.
inline OpWord op_word(std::string_view text) { return to_op_word(parse_path_word(text)); }

/// Parses tokens '-', '0', '+' and "T<i>" without any path validation,
/// e.g. "--0T1-". Commas and whitespace are ignored.
inline OpWord parse_op_word(std::string_view text) {
  OpWord out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ',' || c == ' ') continue;
    if (c == '-') {
      out.push_back(OpLetter::dminus());
    } else if (c == '0') {
      out.push_back(OpLetter::phi());
    } else if (c == '+') {
      out.push_back(OpLetter::dplus());
    } else if (c == 'T') {
      std::size_t j = i + 1;
      int idx = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        idx = idx * 10 + (text[j] - '0');
        ++j;
      }
      if (j == i + 1) throw ParseError("T without index", i);
      out.push_back(OpLetter::t(idx));
      i = j - 1;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  return out;
}

inline std::string letter_str(const OpLetter& l) {
  switch (l.kind) {
    case OpLetter::Kind::DMinus: return "-";
    case OpLetter::Kind::Phi: return "0";
    case OpLetter::Kind::DPlus: return "+";
    case OpLetter::Kind::T: return "T" + std::to_string(l.index);
  }
  return "?";
}

inline std::string compact_str(const OpWord& w) {
  std::string s;
  for (const auto& l : w) s += letter_str(l);
  return s;
}

inline std::string comma_str(const OpWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += letter_str(w[i]);
  }
  return s;
}

/// Number of e-factors the word contributes: one per d- and one per phi.
inline int block_degree(const OpWord& w) {
  int n = 0;
  for (const auto& l : w) n += l.is(OpLetter::Kind::DMinus) || l.is(OpLetter::Kind::Phi);
  return n;
}

/// #d- minus #d+ among letters weakly left of `pos` (0-based). For a d+ this
/// is k with domain V_k; for phi and T it is the k of the V_k they act on.
inline int letter_degree(const OpWord& w, std::size_t pos) {
  if (pos >= w.size()) throw std::out_of_range("letter_degree: position out of range");
  int d = 0;
  for (std::size_t i = 0; i <= pos; ++i) {
    if (w[i].is(OpLetter::Kind::DMinus)) ++d;
    else if (w[i].is(OpLetter::Kind::DPlus)) --d;
  }
  return d;
}

/// The V_k the word expects as input (the number of d- minus d+ overall).
inline int input_degree(const OpWord& w) {
  int d = 0;
  for (const auto& l : w) {
    if (l.is(OpLetter::Kind::DMinus)) ++d;
    else if (l.is(OpLetter::Kind::DPlus)) --d;
  }
  return -d;
}

/// Position of the leftmost d+ whose degree is >= 1.
inline std::optional<std::size_t> leftmost_high_dplus(const OpWord& w) {
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    switch (w[i].kind) {
      case OpLetter::Kind::DMinus: ++d; break;
      case OpLetter::Kind::DPlus:
        if (--d >= 1) return i;
        break;
      case OpLetter::Kind::Phi: break;
      case OpLetter::Kind::T:
        throw std::invalid_argument("leftmost_high_dplus: word contains a T letter");
    }
  }
  return std::nullopt;
}

/// Concatenation of blocks d- phi^m d+ with every d+ at degree 0.
inline bool is_terminal(const OpWord& w) {
  std::size_t i = 0;
  while (i < w.size()) {
    if (!w[i].is(OpLetter::Kind::DMinus)) return false;
    ++i;
    while (i < w.size() && w[i].is(OpLetter::Kind::Phi)) ++i;
    if (i == w.size() || !w[i].is(OpLetter::Kind::DPlus)) return false;
    ++i;
  }
  return true;
}

}  // namespace vsllt
