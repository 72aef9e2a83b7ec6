#pragma once

// Schroeder path words over {-, 0, +} (north, diagonal, east) that stay weakly
// above y = x, end on it, and have no diagonal step along it.

#include <cctype>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vsllt {

enum class Step : char { North = '-', Diagonal = '0', East = '+' };

using PathWord = std::vector<Step>;

/// Malformed word or strip specification; `position` is a 0-based character
/// offset into the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline int semilength(const PathWord& w) {
  int n = 0;
  for (Step s : w) n += s != Step::East;
  return n;
}

/// "-0-0++"
inline std::string compact_str(const PathWord& w) {
  std::string s;
  for (Step st : w) s += static_cast<char>(st);
  return s;
}

/// "-,0,-,0,+,+"
inline std::string comma_str(const PathWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += static_cast<char>(w[i]);
  }
  return s;
}

/// Index of the first step violating the path conditions, or -1 if `w` is a
/// complete valid path. A truncated word reports its length.
inline long first_violation(const PathWord& w) {
  int degree = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    switch (w[i]) {
      case Step::North: ++degree; break;
      case Step::East:
        if (--degree < 0) return static_cast<long>(i);
        break;
      case Step::Diagonal:
        if (degree == 0) return static_cast<long>(i);
        break;
    }
  }
  return degree == 0 ? -1 : static_cast<long>(w.size());
}

inline bool is_valid_path(const PathWord& w) { return first_violation(w) < 0; }

/// Accepts the compact form "-0-0++" or comma-separated "-,0,-,0,+,+";
/// whitespace is ignored. Throws ParseError on anything that is not a valid
/// path.
inline PathWord parse_path_word(std::string_view text) {
  PathWord w;
  int degree = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
    switch (c) {
      case '-':
        ++degree;
        w.push_back(Step::North);
        break;
      case '0':
        if (degree == 0) throw ParseError("diagonal step on the base diagonal", i);
        w.push_back(Step::Diagonal);
        break;
      case '+':
        if (--degree < 0) throw ParseError("path goes below the base diagonal", i);
        w.push_back(Step::East);
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (degree != 0) throw ParseError("unbalanced word", text.size());
  return w;
}

/// Every path of semilength n, in lexicographic order of the step characters
/// '+' < '-' < '0'.
inline std::vector<PathWord> enumerate_paths(int n) {
  std::vector<PathWord> out;
  PathWord cur;
  // x, y: current lattice point.
  std::function<void(int, int)> rec = [&](int x, int y) {
    if (x == n && y == n) {
      out.push_back(cur);
      return;
    }
    if (x < y) {
      cur.push_back(Step::East);
      rec(x + 1, y);
      cur.pop_back();
    }
    if (y < n) {
      cur.push_back(Step::North);
      rec(x, y + 1);
      cur.pop_back();
    }
    if (x < y && y < n) {
      cur.push_back(Step::Diagonal);
      rec(x + 1, y + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

/// All paths with semilength 1..max_n, grouped by increasing semilength.
inline std::vector<PathWord> enumerate_paths_up_to(int max_n) {
  std::vector<PathWord> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = enumerate_paths(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace vsllt
